use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{check_monic_len, rational_to_string, Field, FieldDescriptor, Rationals};
use crate::error::{Error, Result};
use crate::univariate::{rational_roots, Uni};

/// `Q(θ) = Q[t] / (m(t))` for a monic irreducible `m` of degree 2..=4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalExtension {
    modulus: Arc<Vec<BigRational>>,
}

impl RationalExtension {
    pub fn new(modulus: Vec<BigRational>) -> Result<Self> {
        check_monic_len(&modulus)?;
        if !modulus.last().unwrap().is_one() {
            return Err(Error::NotMonic);
        }
        let deg = modulus.len() - 1;
        if deg > 4 {
            return Err(Error::ExtensionDegree(deg));
        }
        if !rational_roots(&modulus).is_empty() {
            return Err(Error::Reducible);
        }
        if deg == 4 && has_quadratic_factor(&modulus) {
            return Err(Error::Reducible);
        }
        Ok(RationalExtension { modulus: Arc::new(modulus) })
    }

    /// `Q(ξ)` with `ξ^2 - ξ + 1 = 0`, so `ξ^3 = -1`.
    pub fn sixth_roots_of_unity() -> Self {
        let q = |n: i64| BigRational::from_integer(BigInt::from(n));
        RationalExtension::new(vec![q(1), q(-1), q(1)]).expect("irreducible")
    }

    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    fn k(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn gen(&self) -> Vec<BigRational> {
        let mut v = self.zero();
        v[1] = BigRational::one();
        v
    }

    fn from_uni(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        v.resize(self.k(), BigRational::zero());
        v
    }
}

/// Monic quartic over `Q` splitting into two quadratics over `Q`.
fn has_quadratic_factor(m: &[BigRational]) -> bool {
    // scale t -> t / L so the polynomial becomes monic with integer coefficients
    let l = m.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints = Vec::new();
    let mut scale = BigInt::one();
    for i in (0..=4).rev() {
        ints.push((m[i].clone() * BigRational::from_integer(scale.clone())).to_integer());
        scale *= &l;
    }
    ints.reverse();
    // t^4 + a3 t^3 + a2 t^2 + a1 t + a0 = (t^2 + a t + b)(t^2 + c t + d)
    let (a0, a1, a2, a3) = (&ints[0], &ints[1], &ints[2], &ints[3]);
    if a0.is_zero() {
        return true;
    }
    let mut divs = Vec::new();
    let n = a0.abs();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            divs.push(&n / &d);
        }
        d += 1;
    }
    for b0 in divs {
        for b in [b0.clone(), -b0] {
            let dd = a0 / &b;
            if &dd - &b != BigInt::zero() {
                let num = a1 - &b * a3;
                let den = &dd - &b;
                if !(&num % &den).is_zero() {
                    continue;
                }
                let a = num / den;
                let c = a3 - &a;
                if &b + &dd + &a * &c == *a2 && &a * &dd + &b * &c == *a1 {
                    return true;
                }
            } else {
                if *a1 != &b * a3 {
                    continue;
                }
                // a + c = a3, a c = a2 - 2b
                let prod = a2 - BigInt::from(2) * &b;
                let disc = a3 * a3 - BigInt::from(4) * &prod;
                if disc.is_negative() {
                    continue;
                }
                let s = disc.sqrt();
                if &s * &s == disc && ((a3 + &s) % BigInt::from(2)).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

impl Field for RationalExtension {
    type Elem = Vec<BigRational>;

    fn zero(&self) -> Vec<BigRational> {
        vec![BigRational::zero(); self.k()]
    }
    fn one(&self) -> Vec<BigRational> {
        let mut v = self.zero();
        v[0] = BigRational::one();
        v
    }
    fn is_zero(&self, a: &Vec<BigRational>) -> bool {
        a.iter().all(|c| c.is_zero())
    }
    fn add(&self, a: &Vec<BigRational>, b: &Vec<BigRational>) -> Vec<BigRational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn sub(&self, a: &Vec<BigRational>, b: &Vec<BigRational>) -> Vec<BigRational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
    fn neg(&self, a: &Vec<BigRational>) -> Vec<BigRational> {
        a.iter().map(|x| -x).collect()
    }
    fn mul(&self, a: &Vec<BigRational>, b: &Vec<BigRational>) -> Vec<BigRational> {
        let uni = Uni::new(&Rationals);
        let mut x = a.clone();
        let mut y = b.clone();
        uni.trim(&mut x);
        uni.trim(&mut y);
        self.from_uni(uni.rem(&uni.mul(&x, &y), &self.modulus))
    }
    fn inv(&self, a: &Vec<BigRational>) -> Option<Vec<BigRational>> {
        if self.is_zero(a) {
            return None;
        }
        let uni = Uni::new(&Rationals);
        let mut x = a.clone();
        uni.trim(&mut x);
        let (_, s) = uni.gcdinv(&x, &self.modulus);
        Some(self.from_uni(s))
    }
    fn from_i64(&self, n: i64) -> Vec<BigRational> {
        let mut v = self.zero();
        v[0] = BigRational::from_integer(BigInt::from(n));
        v
    }
    fn from_rational(&self, q: &BigRational) -> Option<Vec<BigRational>> {
        let mut v = self.zero();
        v[0] = q.clone();
        Some(v)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::RationalExtension { modulus: self.modulus.to_vec() }
    }
    fn display(&self, a: &Vec<BigRational>) -> String {
        let mut parts = Vec::new();
        for (i, c) in a.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = rational_to_string(c);
            parts.push(match i {
                0 => cs,
                1 => alloc::format!("{cs}*t"),
                _ => alloc::format!("{cs}*t^{i}"),
            });
        }
        match parts.len() {
            0 => String::from("0"),
            1 if a[1..].iter().all(|c| c.is_zero()) => parts.pop().unwrap(),
            _ => alloc::format!("({})", parts.join(" + ")),
        }
    }
    fn is_negative(&self, a: &Vec<BigRational>) -> bool {
        a[1..].iter().all(|c| c.is_zero()) && a[0].is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn xi_cubed_is_minus_one() {
        let k = RationalExtension::sixth_roots_of_unity();
        let xi = k.gen();
        assert_eq!(k.pow(&xi, 3), k.from_i64(-1));
        let inv = k.inv(&xi).unwrap();
        assert_eq!(k.mul(&xi, &inv), k.one());
    }

    #[test]
    fn construction_checks() {
        assert_eq!(RationalExtension::new(vec![q(-1), q(0), q(1)]), Err(Error::Reducible));
        // t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2)
        assert_eq!(RationalExtension::new(vec![q(4), q(0), q(0), q(0), q(1)]), Err(Error::Reducible));
        // t^4 - 2 is irreducible
        assert!(RationalExtension::new(vec![q(-2), q(0), q(0), q(0), q(1)]).is_ok());
        // t^4 - 5 t^2 + 6 = (t^2 - 2)(t^2 - 3)
        assert_eq!(RationalExtension::new(vec![q(6), q(0), q(-5), q(0), q(1)]), Err(Error::Reducible));
        assert_eq!(
            RationalExtension::new(vec![q(1), q(0), q(0), q(0), q(0), q(1)]),
            Err(Error::ExtensionDegree(5))
        );
    }
}
