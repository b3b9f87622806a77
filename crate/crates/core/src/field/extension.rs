use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use rand_core::RngCore;

use super::{check_monic_len, Field, FieldDescriptor, FiniteField, PrimeField};
use crate::error::{Error, Result};
use crate::univariate::Uni;

/// `F_{p^k} = F_p[t] / (m(t))` with `m` monic irreducible of degree `k`.
/// Elements are residue vectors of length exactly `k`, low degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionField {
    base: PrimeField,
    modulus: Arc<Vec<u32>>,
}

impl ExtensionField {
    pub fn new(base: PrimeField, modulus: Vec<u32>) -> Result<Self> {
        check_monic_len(&modulus)?;
        if *modulus.last().unwrap() != 1 {
            return Err(Error::NotMonic);
        }
        let m: Vec<u32> = modulus.iter().map(|c| c % base.modulus()).collect();
        if !Uni::new(&base).is_irreducible(&m) {
            return Err(Error::Reducible);
        }
        Ok(ExtensionField { base, modulus: Arc::new(m) })
    }

    /// Deterministic choice of modulus: the first monic irreducible
    /// polynomial of degree `k` in the order `t^k + c_{k-1} t^{k-1} + ... + c_0`
    /// scanning `c_0` fastest.
    pub fn of_degree(base: PrimeField, k: usize) -> Result<Self> {
        if !(2..=8).contains(&k) {
            return Err(Error::ExtensionDegree(k));
        }
        let p = base.modulus() as u64;
        let uni = Uni::new(&base);
        let mut idx: u64 = 0;
        loop {
            let mut m = vec![0u32; k + 1];
            m[k] = 1;
            let mut r = idx;
            for c in m.iter_mut().take(k) {
                *c = (r % p) as u32;
                r /= p;
            }
            if m[0] != 0 && uni.is_irreducible(&m) {
                return Ok(ExtensionField { base, modulus: Arc::new(m) });
            }
            idx += 1;
        }
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn k(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Generator `t` of the extension.
    pub fn gen(&self) -> Vec<u32> {
        let mut v = vec![0; self.k()];
        v[1] = 1;
        v
    }

    fn from_uni(&self, mut v: Vec<u32>) -> Vec<u32> {
        v.resize(self.k(), 0);
        v
    }
}

impl Field for ExtensionField {
    type Elem = Vec<u32>;

    fn zero(&self) -> Vec<u32> {
        vec![0; self.k()]
    }
    fn one(&self) -> Vec<u32> {
        let mut v = vec![0; self.k()];
        v[0] = 1;
        v
    }
    fn is_zero(&self, a: &Vec<u32>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn neg(&self, a: &Vec<u32>) -> Vec<u32> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }
    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let k = self.k();
        let p = self.base.modulus() as u64;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let m = &self.modulus;
        for top in (k..2 * k - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                let t = top - k + j;
                prod[t] = (prod[t] + (p - c) * m[j] as u64) % p;
            }
        }
        prod.truncate(k);
        prod.into_iter().map(|c| c as u32).collect()
    }
    fn inv(&self, a: &Vec<u32>) -> Option<Vec<u32>> {
        if self.is_zero(a) {
            return None;
        }
        let uni = Uni::new(&self.base);
        let mut av = a.clone();
        uni.trim(&mut av);
        let (g, s) = uni.gcdinv(&av, &self.modulus);
        debug_assert_eq!(g, vec![1]);
        Some(self.from_uni(s))
    }
    fn from_i64(&self, n: i64) -> Vec<u32> {
        let mut v = self.zero();
        v[0] = self.base.from_i64(n);
        v
    }
    fn from_rational(&self, q: &BigRational) -> Option<Vec<u32>> {
        let c = self.base.from_rational(q)?;
        let mut v = self.zero();
        v[0] = c;
        Some(v)
    }
    fn characteristic(&self) -> u64 {
        self.base.modulus() as u64
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::ExtensionField { p: self.base.modulus(), modulus: self.modulus.to_vec() }
    }
    fn display(&self, a: &Vec<u32>) -> String {
        let mut parts = Vec::new();
        for (i, &c) in a.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match i {
                0 => alloc::format!("{c}"),
                1 => alloc::format!("{c}*t"),
                _ => alloc::format!("{c}*t^{i}"),
            });
        }
        if parts.is_empty() {
            return String::from("0");
        }
        if parts.len() == 1 && a[1..].iter().all(|&c| c == 0) {
            return parts.pop().unwrap();
        }
        alloc::format!("({})", parts.join(" + "))
    }
}

impl FiniteField for ExtensionField {
    fn prime(&self) -> u32 {
        self.base.modulus()
    }
    fn degree(&self) -> usize {
        self.k()
    }
    fn random<R: RngCore>(&self, rng: &mut R) -> Vec<u32> {
        (0..self.k()).map(|_| self.base.random(rng)).collect()
    }
    fn element(&self, mut index: u128) -> Vec<u32> {
        let p = self.base.modulus() as u128;
        (0..self.k())
            .map(|_| {
                let c = (index % p) as u32;
                index /= p;
                c
            })
            .collect()
    }
    fn from_base(&self, c: u32) -> Vec<u32> {
        let mut v = self.zero();
        v[0] = c % self.base.modulus();
        v
    }
    fn to_base(&self, a: &Vec<u32>) -> Option<u32> {
        if a[1..].iter().all(|&c| c == 0) {
            Some(a[0])
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf49_arithmetic() {
        let f7 = PrimeField::new(7).unwrap();
        // t^2 + 1 is irreducible mod 7 (7 ≡ 3 mod 4)
        let k = ExtensionField::new(f7, vec![1, 0, 1]).unwrap();
        let t = k.gen();
        assert_eq!(k.mul(&t, &t), vec![6, 0]);
        for i in 1..49u128 {
            let a = k.element(i);
            let ai = k.inv(&a).unwrap();
            assert_eq!(k.mul(&a, &ai), k.one());
            assert_eq!(k.pow(&a, 48), k.one());
        }
        assert_eq!(ExtensionField::new(f7, vec![6, 0, 1]), Err(Error::Reducible));
        assert_eq!(ExtensionField::new(f7, vec![1, 0, 2]), Err(Error::NotMonic));
    }

    #[test]
    fn deterministic_modulus() {
        let f = PrimeField::new(32003).unwrap();
        let a = ExtensionField::of_degree(f, 2).unwrap();
        let b = ExtensionField::of_degree(f, 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.order(), 32003u128 * 32003);
    }
}
