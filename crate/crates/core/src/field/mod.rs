//! Exact coefficient fields.
//!
//! Fields are context objects: elements are plain values and every
//! operation goes through the field, the same way the polynomial rings
//! work. Four kinds are provided: the rationals, prime fields, extensions
//! of prime fields and small algebraic extensions of the rationals.

mod extension;
mod numberfield;
mod prime;
mod rational;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_rational::BigRational;
use rand_core::RngCore;

pub use extension::ExtensionField;
pub use numberfield::RationalExtension;
pub use prime::{is_prime, PrimeField};
pub use rational::{rational_to_string, Rationals};

use crate::error::{Error, Result};

/// A commutative field with exact arithmetic.
pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Canonical image of a rational number; `None` when the denominator
    /// is not invertible.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    fn descriptor(&self) -> FieldDescriptor;
    fn display(&self, a: &Self::Elem) -> String;

    /// Used by the printer to emit `- c` instead of `+ -c`.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `acc - a * b`
    fn sub_mul(&self, acc: &Self::Elem, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(acc, &self.mul(a, b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A finite field `F_q`, `q = p^k`.
pub trait FiniteField: Field {
    fn prime(&self) -> u32;
    fn degree(&self) -> usize;
    fn order(&self) -> u128 {
        (self.prime() as u128).pow(self.degree() as u32)
    }
    /// `a^p`
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.prime() as u64)
    }
    fn random<R: RngCore>(&self, rng: &mut R) -> Self::Elem;
    /// The `index`-th element in a fixed enumeration, `index < order`.
    fn element(&self, index: u128) -> Self::Elem;
    fn from_base(&self, c: u32) -> Self::Elem;
    /// The prime-field value of `a`, if `a` lies in the prime field.
    fn to_base(&self, a: &Self::Elem) -> Option<u32>;
}

/// Serializable description of a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u32),
    /// Coefficients of a monic irreducible modulus over `F_p`, low degree first.
    ExtensionField { p: u32, modulus: Vec<u32> },
    /// Coefficients of a monic irreducible modulus over `Q`, low degree first.
    RationalExtension { modulus: Vec<BigRational> },
}

impl FieldDescriptor {
    /// Checks the descriptor invariants by constructing the field.
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldDescriptor::Rationals => Ok(()),
            FieldDescriptor::PrimeField(p) => PrimeField::new(*p).map(|_| ()),
            FieldDescriptor::ExtensionField { p, modulus } => {
                ExtensionField::new(PrimeField::new(*p)?, modulus.clone()).map(|_| ())
            }
            FieldDescriptor::RationalExtension { modulus } => {
                RationalExtension::new(modulus.clone()).map(|_| ())
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldDescriptor::PrimeField(_) | FieldDescriptor::ExtensionField { .. })
    }
}

pub(crate) fn check_monic_len<T>(modulus: &[T]) -> Result<()> {
    if modulus.len() < 3 {
        return Err(Error::NotMonic);
    }
    Ok(())
}
