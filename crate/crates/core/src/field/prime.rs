use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand_core::RngCore;

use super::{Field, FieldDescriptor, FiniteField};
use crate::error::{Error, Result};

/// Deterministic trial division; the moduli used here are far below 2^32.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `F_p` with residues stored in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// `p` must be a prime greater than 3 and below 2^31.
    pub fn new(p: u32) -> Result<Self> {
        if p <= 3 || p >= (1 << 31) || !is_prime(p as u64) {
            return Err(Error::BadModulus(p as u64));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn reduce_bigint(&self, n: &BigInt) -> u32 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u32().expect("residue fits")
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn centered(&self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn sub_mul(&self, acc: &u32, a: &u32, b: &u32) -> u32 {
        let p = self.p as u64;
        let prod = (*a as u64 * *b as u64) % p;
        ((*acc as u64 + p - prod) % p) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce_i64(s0))
    }
    fn from_i64(&self, n: i64) -> u32 {
        self.reduce_i64(n)
    }
    fn from_rational(&self, q: &BigRational) -> Option<u32> {
        let den = self.reduce_bigint(q.denom());
        let num = self.reduce_bigint(q.numer());
        self.inv(&den).map(|d| self.mul(&num, &d))
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::PrimeField(self.p)
    }
    fn display(&self, a: &u32) -> String {
        a.to_string()
    }
}

impl FiniteField for PrimeField {
    fn prime(&self) -> u32 {
        self.p
    }
    fn degree(&self) -> usize {
        1
    }
    fn frobenius(&self, a: &u32) -> u32 {
        *a
    }
    fn random<R: RngCore>(&self, rng: &mut R) -> u32 {
        (rng.next_u64() % self.p as u64) as u32
    }
    fn element(&self, index: u128) -> u32 {
        index as u32
    }
    fn from_base(&self, c: u32) -> u32 {
        c % self.p
    }
    fn to_base(&self, a: &u32) -> Option<u32> {
        Some(*a)
    }
}
