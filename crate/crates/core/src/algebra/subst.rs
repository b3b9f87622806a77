use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::linalg::{determinant, Matrix};
use super::monomial::Monomial;
use super::poly::{MultiPoly, PolyRing};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};

impl<F: Field> PolyRing<F> {
    /// `f(T x)`: variable `x_i` becomes `sum_j T[i][j] x_j`.
    pub fn linear_substitute(&self, f: &MultiPoly<F::Elem>, t: &Matrix<F::Elem>) -> Result<MultiPoly<F::Elem>> {
        let n = self.nvars();
        if t.len() != n || t.iter().any(|r| r.len() != n) {
            return Err(Error::FieldMismatch(alloc::format!("substitution matrix must be {n}x{n}")));
        }
        if self.field().is_zero(&determinant(self.field(), t)) {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<MultiPoly<F::Elem>> = t
            .iter()
            .map(|row| {
                let terms = row.iter().enumerate().map(|(j, c)| (Monomial::var(j), c.clone())).collect();
                self.from_terms(terms)
            })
            .collect();
        Ok(self.compose(f, self, &images))
    }

    /// Expands `f(sum_d t_d dirs[d])` in the auxiliary parameters `t_d`.
    ///
    /// `dirs[d]` holds one polynomial of `target` per variable of this ring.
    /// The result maps the exponent vector of `(t_0, ..., t_{m-1})` to its
    /// coefficient; zero coefficients are omitted.
    pub fn expand_along(
        &self,
        f: &MultiPoly<F::Elem>,
        target: &PolyRing<F>,
        dirs: &[Vec<MultiPoly<F::Elem>>],
    ) -> BTreeMap<Vec<u8>, MultiPoly<F::Elem>> {
        let m = dirs.len();
        let n = self.nvars();
        assert!(dirs.iter().all(|d| d.len() == n), "direction length must equal the variable count");
        type TPoly<E> = BTreeMap<Vec<u8>, MultiPoly<E>>;
        let tmul = |a: &TPoly<F::Elem>, b: &TPoly<F::Elem>| -> TPoly<F::Elem> {
            let mut out: TPoly<F::Elem> = BTreeMap::new();
            for (ea, pa) in a {
                for (eb, pb) in b {
                    let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                    let prod = target.mul(pa, pb);
                    let slot = out.entry(e).or_insert_with(MultiPoly::zero);
                    *slot = target.add(slot, &prod);
                }
            }
            out.retain(|_, p| !p.is_zero());
            out
        };
        let unit: TPoly<F::Elem> = [(vec![0u8; m], target.one())].into_iter().collect();
        // powers of the linear form attached to each variable
        let mut maxe = vec![0u8; n];
        for (mono, _) in f.terms() {
            for (i, e) in maxe.iter_mut().enumerate() {
                *e = (*e).max(mono.exp(i));
            }
        }
        let powers: Vec<Vec<TPoly<F::Elem>>> = (0..n)
            .map(|i| {
                let mut lin: TPoly<F::Elem> = BTreeMap::new();
                for (d, dir) in dirs.iter().enumerate() {
                    if !dir[i].is_zero() {
                        let mut e = vec![0u8; m];
                        e[d] = 1;
                        lin.insert(e, dir[i].clone());
                    }
                }
                let mut table = vec![unit.clone()];
                for k in 1..=maxe[i] as usize {
                    let next = tmul(&table[k - 1], &lin);
                    table.push(next);
                }
                table
            })
            .collect();
        let mut acc: TPoly<F::Elem> = BTreeMap::new();
        for (mono, c) in f.terms() {
            let mut term: TPoly<F::Elem> = [(vec![0u8; m], target.constant(c.clone()))].into_iter().collect();
            for (i, table) in powers.iter().enumerate() {
                let e = mono.exp(i) as usize;
                if e > 0 {
                    term = tmul(&term, &table[e]);
                }
            }
            for (e, p) in term {
                let slot = acc.entry(e).or_insert_with(MultiPoly::zero);
                *slot = target.add(slot, &p);
            }
        }
        acc.retain(|_, p| !p.is_zero());
        acc
    }

    /// Coefficients `phi^{d-j, j}` of `t_0^{d-j} t_1^j` in `f(t_0 v0 + t_1 v1)`,
    /// indexed by `j`, for `f` homogeneous of degree `d`.
    pub fn restrict_line_expansion(
        &self,
        f: &MultiPoly<F::Elem>,
        target: &PolyRing<F>,
        v0: &[MultiPoly<F::Elem>],
        v1: &[MultiPoly<F::Elem>],
    ) -> Result<Vec<MultiPoly<F::Elem>>> {
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let d = f.total_degree().unwrap_or(0) as usize;
        let map = self.expand_along(f, target, &[v0.to_vec(), v1.to_vec()]);
        Ok((0..=d)
            .map(|j| map.get(&vec![(d - j) as u8, j as u8]).cloned().unwrap_or_else(MultiPoly::zero))
            .collect())
    }
}

/// Coefficient-wise image of a rational polynomial in `F_p`, together with
/// the monomials whose coefficients vanished mod `p`.
pub fn reduce_mod_prime(
    src: &PolyRing<Rationals>,
    f: &MultiPoly<BigRational>,
    target: &PolyRing<PrimeField>,
) -> Result<(MultiPoly<u32>, Vec<Monomial>)> {
    let fp = target.field();
    let mut dropped = Vec::new();
    let mut terms = Vec::with_capacity(f.len());
    for (m, c) in f.terms() {
        let r = fp.from_rational(c).ok_or(Error::BadPrime(fp.modulus()))?;
        if r == 0 {
            dropped.push(*m);
        } else {
            terms.push((*m, r));
        }
    }
    debug_assert_eq!(src.nvars(), target.nvars());
    Ok((target.from_terms(terms), dropped))
}
