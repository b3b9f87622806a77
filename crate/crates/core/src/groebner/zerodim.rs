//! Zero-dimensional ideals: the quotient ring as a vector space, its
//! multiplication operators, and point counting and extraction.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use rand_core::RngCore;

use super::GroebnerBasis;
use crate::algebra::linalg::{mat_mul, rank, Matrix};
use crate::algebra::{Monomial, MultiPoly};
use crate::error::{Error, Result};
use crate::field::{Field, FiniteField, Rationals};
use crate::univariate::{rational_roots, Uni};

/// Largest quotient ring handled by the point-counting routines.
pub const DEFAULT_QUOTIENT_CAP: usize = 6000;

/// Largest quotient ring handled by rational point extraction.
pub const DEFAULT_RATIONAL_CAP: usize = 64;

/// Summary of a zero-dimensional system.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroDimSolution<E> {
    /// Points counted with multiplicity.
    pub quotient_dimension: usize,
    /// Points over the algebraic closure.
    pub distinct_count: usize,
    /// Minimal polynomial (low degree first) of the best separating form.
    pub separating_form_minpoly: Vec<E>,
}

/// Sparse column-major operator on the quotient ring.
type SparseCols<E> = Vec<Vec<(usize, E)>>;

/// Minimal polynomial of `apply` restricted to the cyclic subspace spanned
/// by `start`, monic and low degree first.
pub fn krylov_minpoly<F: Field>(field: &F, start: Vec<F::Elem>, apply: impl Fn(&[F::Elem]) -> Vec<F::Elem>) -> Vec<F::Elem> {
    // rows: (pivot, vector normalized at pivot, polynomial combination)
    let mut rows: Vec<(usize, Vec<F::Elem>, Vec<F::Elem>)> = Vec::new();
    let mut v = start;
    let mut k = 0;
    loop {
        let mut w = v.clone();
        let mut poly = vec![field.zero(); k + 1];
        poly[k] = field.one();
        for (piv, row, rp) in &rows {
            if field.is_zero(&w[*piv]) {
                continue;
            }
            let c = w[*piv].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !field.is_zero(r) {
                    *x = field.sub_mul(x, &c, r);
                }
            }
            for (x, r) in poly.iter_mut().zip(rp) {
                *x = field.sub_mul(x, &c, r);
            }
        }
        match w.iter().position(|x| !field.is_zero(x)) {
            None => return poly,
            Some(piv) => {
                let inv = field.inv(&w[piv]).unwrap();
                for x in w.iter_mut() {
                    *x = field.mul(x, &inv);
                }
                for x in poly.iter_mut() {
                    *x = field.mul(x, &inv);
                }
                rows.push((piv, w, poly));
            }
        }
        v = apply(&v);
        k += 1;
    }
}

fn apply_sparse<F: Field>(field: &F, m: &SparseCols<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); v.len()];
    for (c, col) in m.iter().enumerate() {
        if field.is_zero(&v[c]) {
            continue;
        }
        for (r, x) in col {
            out[*r] = field.add(&out[*r], &field.mul(x, &v[c]));
        }
    }
    out
}

impl<F: Field> GroebnerBasis<F> {
    /// Monomials divisible by no leading monomial, in increasing `Ord` order
    /// (so `1` comes first).
    pub fn standard_monomials(&self, cap: usize) -> Result<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        if self.contains_one() {
            return Ok(Vec::new());
        }
        let lms = self.leading_monomials();
        let n = self.ring().nvars();
        let mut seen: BTreeSet<Monomial> = BTreeSet::new();
        let mut frontier = vec![Monomial::ONE];
        seen.insert(Monomial::ONE);
        while let Some(m) = frontier.pop() {
            for i in 0..n {
                let next = m.mul(&Monomial::var(i));
                if lms.iter().any(|l| l.divides(&next)) || !seen.insert(next) {
                    continue;
                }
                if seen.len() > cap {
                    return Err(Error::QuotientCap { dim: seen.len(), cap });
                }
                frontier.push(next);
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn quotient_dimension(&self) -> Result<usize> {
        self.standard_monomials(usize::MAX).map(|s| s.len())
    }

    fn coordinates(&self, std: &[Monomial], p: &MultiPoly<F::Elem>) -> Vec<(usize, F::Elem)> {
        let nf = self.normal_form(p);
        nf.terms()
            .iter()
            .map(|(m, c)| (std.binary_search(m).expect("normal form has only standard monomials"), c.clone()))
            .collect()
    }

    fn mult_cols(&self, std: &[Monomial], g: &MultiPoly<F::Elem>) -> SparseCols<F::Elem> {
        let ring = self.ring();
        std.iter()
            .map(|s| self.coordinates(std, &ring.mul_term(g, s, &ring.field().one())))
            .collect()
    }

    fn var_cols(&self, std: &[Monomial], i: usize) -> SparseCols<F::Elem> {
        let one = self.ring().field().one();
        std.iter()
            .map(|s| {
                let m = s.mul(&Monomial::var(i));
                match std.binary_search(&m) {
                    Ok(idx) => vec![(idx, one.clone())],
                    Err(_) => self.coordinates(std, &self.ring().term(m, one.clone())),
                }
            })
            .collect()
    }

    /// Matrix of multiplication by `g` on the standard-monomial basis:
    /// column `c` holds the normal form of `g * s_c`.
    pub fn multiplication_matrix(&self, g: &MultiPoly<F::Elem>) -> Result<Matrix<F::Elem>> {
        let std = self.standard_monomials(DEFAULT_QUOTIENT_CAP)?;
        let field = self.ring().field();
        let cols = self.mult_cols(&std, g);
        let mut m = vec![vec![field.zero(); std.len()]; std.len()];
        for (c, col) in cols.into_iter().enumerate() {
            for (r, x) in col {
                m[r][c] = x;
            }
        }
        Ok(m)
    }

    /// Minimal polynomial of `g` in the quotient ring.
    pub fn minimal_polynomial(&self, g: &MultiPoly<F::Elem>) -> Result<Vec<F::Elem>> {
        let std = self.standard_monomials(DEFAULT_QUOTIENT_CAP)?;
        let field = self.ring().field();
        if std.is_empty() {
            return Ok(vec![field.one()]);
        }
        let cols = self.mult_cols(&std, g);
        let mut e = vec![field.zero(); std.len()];
        e[0] = field.one();
        Ok(krylov_minpoly(field, e, |v| apply_sparse(field, &cols, v)))
    }

    fn candidate_points(&self, per_var: Vec<Vec<F::Elem>>) -> Vec<Vec<F::Elem>> {
        let mut out = Vec::new();
        let mut cur: Vec<F::Elem> = Vec::with_capacity(per_var.len());
        fn rec<F: Field>(
            gb: &GroebnerBasis<F>,
            per_var: &[Vec<F::Elem>],
            cur: &mut Vec<F::Elem>,
            out: &mut Vec<Vec<F::Elem>>,
        ) {
            if cur.len() == per_var.len() {
                let ring = gb.ring();
                if gb.basis().iter().all(|g| ring.field().is_zero(&ring.eval(g, cur))) {
                    out.push(cur.clone());
                }
                return;
            }
            for v in &per_var[cur.len()] {
                cur.push(v.clone());
                rec(gb, per_var, cur, out);
                cur.pop();
            }
        }
        rec(self, &per_var, &mut cur, &mut out);
        out
    }
}

impl<F: FiniteField> GroebnerBasis<F> {
    /// Distinct points over the algebraic closure, as the largest squarefree
    /// degree among the minimal polynomials of `trials` random linear forms.
    pub fn distinct_point_count<R: RngCore>(&self, trials: usize, rng: &mut R) -> Result<ZeroDimSolution<F::Elem>> {
        if trials == 0 {
            return Err(Error::Trials);
        }
        let field = self.ring().field();
        let std = self.standard_monomials(DEFAULT_QUOTIENT_CAP)?;
        if std.is_empty() {
            return Ok(ZeroDimSolution { quotient_dimension: 0, distinct_count: 0, separating_form_minpoly: vec![field.one()] });
        }
        let n = self.ring().nvars();
        let var_cols: Vec<SparseCols<F::Elem>> = (0..n).map(|i| self.var_cols(&std, i)).collect();
        let uni = Uni::new(field);
        let mut best: Option<(usize, Vec<F::Elem>)> = None;
        for _ in 0..trials {
            let coeffs: Vec<F::Elem> = (0..n).map(|_| field.random(rng)).collect();
            let cols: SparseCols<F::Elem> = (0..std.len())
                .map(|c| {
                    let mut dense: Vec<(usize, F::Elem)> = Vec::new();
                    for (i, vc) in var_cols.iter().enumerate() {
                        for (r, x) in &vc[c] {
                            let v = field.mul(&coeffs[i], x);
                            match dense.iter_mut().find(|(rr, _)| rr == r) {
                                Some((_, acc)) => *acc = field.add(acc, &v),
                                None => dense.push((*r, v)),
                            }
                        }
                    }
                    dense.retain(|(_, x)| !field.is_zero(x));
                    dense
                })
                .collect();
            let mut e = vec![field.zero(); std.len()];
            e[0] = field.one();
            let minpoly = krylov_minpoly(field, e, |v| apply_sparse(field, &cols, v));
            let d = uni.squarefree_degree(&minpoly)?;
            if best.as_ref().is_none_or(|(bd, _)| d > *bd) {
                best = Some((d, minpoly));
            }
            if d == std.len() {
                break;
            }
        }
        let (mut distinct_count, separating_form_minpoly) = best.unwrap();
        // a form with coefficients in F_q takes at most q values, so small
        // fields need a separation-free count
        let dim = std.len() as u128;
        if distinct_count < std.len() && field.order() < 2 * dim * dim {
            distinct_count = self.frobenius_rank(&std, &var_cols);
        }
        Ok(ZeroDimSolution { quotient_dimension: std.len(), distinct_count, separating_form_minpoly })
    }

    /// Rank of a power of `a -> a^q` on the quotient ring. The map is
    /// `F_q`-linear, kills the nilradical once `q^N` reaches the nilpotency
    /// index and is bijective on the reduced quotient, whose dimension is the
    /// number of geometric points.
    fn frobenius_rank(&self, std: &[Monomial], var_cols: &[SparseCols<F::Elem>]) -> usize {
        let field = self.ring().field();
        let dim = std.len();
        // std[k] = x_i * std[j] with j < k
        let parent: Vec<(usize, usize)> = (1..dim)
            .map(|k| {
                let m = &std[k];
                let i = (0..var_cols.len()).find(|&i| m.exp(i) > 0).unwrap();
                (i, std.binary_search(&m.div(&Monomial::var(i))).unwrap())
            })
            .collect();
        // columns std[k] * a
        let columns = |a: &[F::Elem]| -> Vec<Vec<F::Elem>> {
            let mut cols = vec![a.to_vec()];
            for &(i, j) in &parent {
                let next = apply_sparse(field, &var_cols[i], &cols[j]);
                cols.push(next);
            }
            cols
        };
        let mul = |a: &[F::Elem], b: &[F::Elem]| -> Vec<F::Elem> {
            let mut out = vec![field.zero(); dim];
            for (col, bk) in columns(a).iter().zip(b) {
                if field.is_zero(bk) {
                    continue;
                }
                for (o, x) in out.iter_mut().zip(col) {
                    *o = field.add(o, &field.mul(bk, x));
                }
            }
            out
        };
        let pow = |a: &[F::Elem], mut e: u128| -> Vec<F::Elem> {
            let mut acc = vec![field.zero(); dim];
            acc[0] = field.one();
            let mut base = a.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul(&acc, &base);
                }
                e >>= 1;
                if e > 0 {
                    base = mul(&base, &base);
                }
            }
            acc
        };
        let q = field.order();
        let mut unit = vec![field.zero(); dim];
        unit[0] = field.one();
        let images: Vec<Vec<Vec<F::Elem>>> =
            var_cols.iter().map(|vc| columns(&pow(&apply_sparse(field, vc, &unit), q))).collect();
        // phi(std[k]) = x_i^q * phi(std[j]), stored as matrix columns
        let mut phi_cols = vec![unit];
        for &(i, j) in &parent {
            let v = &phi_cols[j];
            let mut out = vec![field.zero(); dim];
            for (col, c) in images[i].iter().zip(v) {
                if field.is_zero(c) {
                    continue;
                }
                for (o, x) in out.iter_mut().zip(col) {
                    *o = field.add(o, &field.mul(c, x));
                }
            }
            phi_cols.push(out);
        }
        let phi: Matrix<F::Elem> = (0..dim).map(|r| phi_cols.iter().map(|c| c[r].clone()).collect()).collect();
        let mut power = phi.clone();
        let mut reach = q;
        while reach < dim as u128 {
            power = mat_mul(field, &phi, &power);
            reach = reach.saturating_mul(q);
        }
        rank(field, &power)
    }

    /// All points with coordinates in the basis' own field.
    pub fn points<R: RngCore>(&self, rng: &mut R) -> Result<Vec<Vec<F::Elem>>> {
        let ring = self.ring();
        let field = ring.field();
        let uni = Uni::new(field);
        let mut per_var = Vec::with_capacity(ring.nvars());
        for i in 0..ring.nvars() {
            let mp = self.minimal_polynomial(&ring.var(i))?;
            let mut roots = uni.roots(&mp, rng);
            roots.dedup();
            if roots.is_empty() {
                return Ok(Vec::new());
            }
            per_var.push(roots);
        }
        Ok(self.candidate_points(per_var))
    }
}

/// Rational points of a zero-dimensional ideal over `Q`.
pub fn rational_points_zero_dim(gb: &GroebnerBasis<Rationals>, cap: usize) -> Result<Vec<Vec<BigRational>>> {
    let std = gb.standard_monomials(usize::MAX)?;
    if std.len() > cap {
        return Err(Error::QuotientCap { dim: std.len(), cap });
    }
    if std.is_empty() {
        return Ok(Vec::new());
    }
    let ring = gb.ring();
    let mut per_var = Vec::with_capacity(ring.nvars());
    for i in 0..ring.nvars() {
        let mp = gb.minimal_polynomial(&ring.var(i))?;
        let roots = rational_roots(&mp);
        if roots.is_empty() {
            return Ok(Vec::new());
        }
        per_var.push(roots);
    }
    let mut pts = gb.candidate_points(per_var);
    pts.sort();
    Ok(pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MonomialOrder, PolyRing};
    use crate::field::PrimeField;
    use crate::groebner::{Caps, Ideal};
    use crate::rng::seeded;
    use alloc::string::String;
    use num_bigint::BigInt;

    fn gb<F: Field>(r: &PolyRing<F>, gens: &[&str]) -> GroebnerBasis<F> {
        Ideal::new(r.clone(), gens.iter().map(|g| r.parse(g).unwrap()).collect())
            .groebner(&Caps::default())
            .unwrap()
    }

    fn qr(names: &[&str]) -> PolyRing<Rationals> {
        PolyRing::new(Rationals, names.iter().map(|s| String::from(*s)).collect(), MonomialOrder::GrevLex).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn quotient_dimensions() {
        let r = qr(&["x", "y"]);
        assert_eq!(gb(&r, &["x^2", "y^2"]).quotient_dimension(), Ok(4));
        assert_eq!(gb(&r, &["x - 1", "y - 2"]).quotient_dimension(), Ok(1));
        assert_eq!(gb(&r, &["1"]).quotient_dimension(), Ok(0));
        assert!(gb(&r, &["x^2", "y^3"]).is_zero_dimensional());
        assert!(!gb(&r, &["x*y"]).is_zero_dimensional());
        assert_eq!(gb(&r, &["x*y"]).quotient_dimension(), Err(Error::NotZeroDimensional));
    }

    #[test]
    fn multiplication_matrices() {
        let r = qr(&["x"]);
        let g = gb(&r, &["x^2 - 2"]);
        let x = r.var(0);
        assert_eq!(g.multiplication_matrix(&x).unwrap(), vec![vec![q(0), q(2)], vec![q(1), q(0)]]);
        assert_eq!(g.minimal_polynomial(&x).unwrap(), vec![q(-2), q(0), q(1)]);
        assert_eq!(g.multiplication_matrix(&r.one()).unwrap(), vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
        let g = gb(&r, &["x^2 - x"]);
        assert_eq!(g.minimal_polynomial(&x).unwrap(), vec![q(0), q(-1), q(1)]);
    }

    #[test]
    fn distinct_counts() {
        let f7 = PrimeField::new(7).unwrap();
        let r = PolyRing::new(f7, vec!["x".into(), "y".into()], MonomialOrder::GrevLex).unwrap();
        let mut rng = seeded(1);
        let s = gb(&r, &["x^2 - 1", "y - x"]).distinct_point_count(5, &mut rng).unwrap();
        assert_eq!((s.distinct_count, s.quotient_dimension), (2, 2));
        let s = gb(&r, &["x^2", "y"]).distinct_point_count(5, &mut rng).unwrap();
        assert_eq!((s.distinct_count, s.quotient_dimension), (1, 2));
        assert_eq!(gb(&r, &["x", "y"]).distinct_point_count(0, &mut rng), Err(Error::Trials));
        let mut pts = gb(&r, &["x^2 - 1", "y - x"]).points(&mut rng).unwrap();
        pts.sort();
        assert_eq!(pts, vec![vec![1, 1], vec![6, 6]]);
    }

    #[test]
    fn rational_points() {
        let r = qr(&["x", "y"]);
        assert!(rational_points_zero_dim(&gb(&r, &["x^2 - 2", "y"]), 64).unwrap().is_empty());
        let pts = rational_points_zero_dim(&gb(&r, &["x^2 - 1", "y^2 - x"]), 64).unwrap();
        assert_eq!(pts, vec![vec![q(1), q(-1)], vec![q(1), q(1)]]);
        assert_eq!(
            rational_points_zero_dim(&gb(&r, &["x^3", "y^3"]), 4),
            Err(Error::QuotientCap { dim: 9, cap: 4 })
        );
    }
}
