//! Buchberger's algorithm and the operations built on reduced bases.
//!
//! Pairs are pruned with the Gebauer–Möller criteria and selected by the
//! normal strategy (smallest lcm first). Every basis is returned reduced:
//! monic, minimal, and with no term divisible by another leading monomial.

mod elim;
pub mod strata;
mod zerodim;

use alloc::vec::Vec;
use core::cmp::Ordering;

pub use elim::{eliminate, ideal_quotient, intersect, saturate, saturate_by};
pub use zerodim::{
    krylov_minpoly, rational_points_zero_dim, ZeroDimSolution, DEFAULT_QUOTIENT_CAP, DEFAULT_RATIONAL_CAP,
};

use crate::algebra::{Monomial, MultiPoly, PolyRing, MAX_EXPONENT};
use crate::error::{Error, Result};
use crate::field::Field;

/// Resource limits for a single Buchberger run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_basis: 20_000, max_degree: 60 }
    }
}

/// Generators of an ideal in a fixed ring.
#[derive(Debug, Clone)]
pub struct Ideal<F: Field> {
    ring: PolyRing<F>,
    gens: Vec<MultiPoly<F::Elem>>,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; exact duplicates are removed.
    pub fn new(ring: PolyRing<F>, gens: Vec<MultiPoly<F::Elem>>) -> Self {
        let mut out: Vec<MultiPoly<F::Elem>> = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ideal { ring, gens: out }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[MultiPoly<F::Elem>] {
        &self.gens
    }

    pub fn push(&mut self, g: MultiPoly<F::Elem>) {
        if !g.is_zero() && !self.gens.contains(&g) {
            self.gens.push(g);
        }
    }

    /// `self + other` (same ring).
    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut out = self.clone();
        for g in &other.gens {
            out.push(g.clone());
        }
        out
    }

    pub fn groebner(&self, caps: &Caps) -> Result<GroebnerBasis<F>> {
        buchberger(self, caps)
    }
}

/// A reduced Gröbner basis, sorted by increasing leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    basis: Vec<MultiPoly<F::Elem>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn basis(&self) -> &[MultiPoly<F::Elem>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lm().unwrap()).collect()
    }

    pub fn contains_one(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal { ring: self.ring.clone(), gens: self.basis.clone() }
    }

    /// Panics if a non-graded reduction leaves the exponent range; see
    /// [`GroebnerBasis::try_normal_form`].
    pub fn normal_form(&self, f: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
        self.try_normal_form(f).expect("normal form leaves the exponent range")
    }

    pub fn try_normal_form(&self, f: &MultiPoly<F::Elem>) -> Result<MultiPoly<F::Elem>> {
        let reducers: Vec<&MultiPoly<F::Elem>> = self.basis.iter().collect();
        reduce_full(&self.ring, f.clone(), &reducers)
    }

    pub fn contains(&self, f: &MultiPoly<F::Elem>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True iff every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        self.contains_irrelevant_power(self.ring.nvars())
    }

    /// True iff each of the first `n` variables has a pure power among the
    /// leading monomials; for a homogeneous ideal this means the projective
    /// variety in those variables is empty.
    pub fn contains_irrelevant_power(&self, n: usize) -> bool {
        if self.contains_one() {
            return true;
        }
        let mut seen = [false; crate::algebra::MAX_VARS];
        for m in self.leading_monomials() {
            if let Some(i) = m.pure_power_var() {
                seen[i] = true;
            }
        }
        seen[..n].iter().all(|&s| s)
    }

    /// Checks that every S-polynomial of basis pairs reduces to zero; a
    /// reduction leaving the exponent range counts as a failure.
    pub fn certify(&self) -> bool {
        let reducers: Vec<&MultiPoly<F::Elem>> = self.basis.iter().collect();
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = spoly(&self.ring, &self.basis[i], &self.basis[j]);
                match reduce_full(&self.ring, s, &reducers) {
                    Ok(r) if r.is_zero() => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Same basis read in another ring with identical variables and order
    /// (for example over an extension field). Leading monomials and
    /// reducedness are preserved because the coefficients embed.
    pub fn map_coefficients<G: Field>(
        &self,
        target: &PolyRing<G>,
        coeff: impl Fn(&F::Elem) -> G::Elem,
    ) -> GroebnerBasis<G> {
        assert_eq!(target.order(), self.ring.order());
        let ident: Vec<usize> = (0..self.ring.nvars()).collect();
        let basis = self
            .basis
            .iter()
            .map(|g| self.ring.transfer(g, target, &ident, |c| Some(coeff(c))).unwrap())
            .collect();
        GroebnerBasis { ring: target.clone(), basis }
    }
}

fn spoly<F: Field>(ring: &PolyRing<F>, f: &MultiPoly<F::Elem>, g: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
    let (mf, cf) = f.leading().unwrap();
    let (mg, cg) = g.leading().unwrap();
    let l = mf.lcm(mg);
    let field = ring.field();
    let a = ring.mul_term(f, &l.div(mf), &field.inv(cf).unwrap());
    let b = ring.mul_term(g, &l.div(mg), &field.inv(cg).unwrap());
    ring.sub(&a, &b)
}

/// `a - c * m * b`, where the leading term of `m * b` is known to cancel the
/// leading term of `a`; both leading terms are skipped.
fn sub_shifted_tail<F: Field>(
    ring: &PolyRing<F>,
    a: &[(Monomial, F::Elem)],
    b: &[(Monomial, F::Elem)],
    m: &Monomial,
    c: &F::Elem,
) -> Vec<(Monomial, F::Elem)> {
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let mb = b[j].0.mul(m);
        match ring.cmp(&a[i].0, &mb) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((mb, field.neg(&field.mul(c, &b[j].1))));
                j += 1;
            }
            Ordering::Equal => {
                let v = field.sub_mul(&a[i].1, c, &b[j].1);
                if !field.is_zero(&v) {
                    out.push((mb, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((b[j].0.mul(m), field.neg(&field.mul(c, &b[j].1))));
        j += 1;
    }
    out
}

/// Full reduction of `p` by monic-or-not reducers. Under a non-graded order
/// intermediate degrees can grow; `DegreeCap` is returned before an
/// exponent would leave the representable range.
pub(crate) fn reduce_full<F: Field>(
    ring: &PolyRing<F>,
    p: MultiPoly<F::Elem>,
    reducers: &[&MultiPoly<F::Elem>],
) -> Result<MultiPoly<F::Elem>> {
    const LIMIT: u32 = MAX_EXPONENT as u32;
    let field = ring.field();
    let graded = ring.order().is_graded();
    let degrees: Vec<u32> = reducers.iter().map(|g| g.total_degree().unwrap()).collect();
    let lead: Vec<(Monomial, F::Elem)> = reducers
        .iter()
        .map(|g| {
            let (m, c) = g.leading().unwrap();
            (*m, field.inv(c).unwrap())
        })
        .collect();
    let mut out: Vec<(Monomial, F::Elem)> = Vec::new();
    let mut cur = p.into_terms();
    let mut pos = 0;
    while pos < cur.len() {
        let m = cur[pos].0;
        let hit = lead.iter().position(|(lm, _)| lm.divides(&m));
        match hit {
            Some(k) => {
                let g = reducers[k];
                let c = field.mul(&cur[pos].1, &lead[k].1);
                let q = m.div(&lead[k].0);
                if !graded && q.degree() + degrees[k] > LIMIT {
                    return Err(Error::DegreeCap { degree: q.degree() + degrees[k], limit: LIMIT });
                }
                cur = sub_shifted_tail(ring, &cur[pos + 1..], &g.terms()[1..], &q, &c);
                pos = 0;
            }
            None => {
                out.push(cur[pos].clone());
                pos += 1;
            }
        }
    }
    Ok(ring.from_sorted_terms(out))
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'r, F: Field> {
    ring: &'r PolyRing<F>,
    polys: Vec<MultiPoly<F::Elem>>,
    lms: Vec<Monomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<F: Field> State<'_, F> {
    /// Gebauer–Möller update with the new basis element `h` (an index).
    fn update(&mut self, h: usize) {
        let lh = self.lms[h];
        let cands: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair { i: g, j: h, lcm: self.lms[g].lcm(&lh) })
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in cands.iter().enumerate() {
            let coprime = self.lms[p.i].coprime(&lh);
            let dominated_later = cands[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm));
            let dominated_kept = kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || (!dominated_later && !dominated_kept) {
                kept.push(p.clone());
            }
        }
        // product criterion
        kept.retain(|p| !self.lms[p.i].coprime(&lh));
        // prune old pairs
        let lms = &self.lms;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm) && lms[p.i].lcm(&lh) != p.lcm && lms[p.j].lcm(&lh) != p.lcm)
        });
        self.pairs.extend(kept);
        self.active.retain(|&g| !lh.divides(&lms[g]));
        self.active.push(h);
    }

    fn reducers(&self) -> Vec<&MultiPoly<F::Elem>> {
        self.active.iter().map(|&i| &self.polys[i]).collect()
    }

    /// Reduces and inserts `p`; returns true when the ideal became the unit ideal.
    fn insert(&mut self, p: MultiPoly<F::Elem>, caps: &Caps) -> Result<bool> {
        let r = reduce_full(self.ring, p, &self.reducers())?;
        if r.is_zero() {
            return Ok(false);
        }
        if r.is_constant() {
            return Ok(true);
        }
        let deg = r.total_degree().unwrap();
        if deg > caps.max_degree {
            return Err(Error::DegreeCap { degree: deg, limit: caps.max_degree });
        }
        let r = self.ring.monic(&r);
        self.lms.push(r.lm().unwrap());
        self.polys.push(r);
        self.update(self.polys.len() - 1);
        if self.active.len() > caps.max_basis {
            return Err(Error::BasisCap { limit: caps.max_basis });
        }
        Ok(false)
    }
}

/// Reduced Gröbner basis of `ideal` under its ring's order.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, caps: &Caps) -> Result<GroebnerBasis<F>> {
    let ring = ideal.ring();
    let unit = || GroebnerBasis { ring: ring.clone(), basis: alloc::vec![ring.one()] };
    let mut st = State { ring, polys: Vec::new(), lms: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut gens = ideal.gens.clone();
    // small leading monomials first keeps early reducers cheap
    gens.sort_by(|a, b| ring.cmp(&a.lm().unwrap(), &b.lm().unwrap()));
    for g in gens {
        if st.insert(g, caps)? {
            return Ok(unit());
        }
    }
    while !st.pairs.is_empty() {
        let best = (0..st.pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&st.pairs[a], &st.pairs[b]);
                ring.cmp(&pa.lcm, &pb.lcm).then((pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        let pair = st.pairs.swap_remove(best);
        let s = spoly(ring, &st.polys[pair.i], &st.polys[pair.j]);
        if st.insert(s, caps)? {
            return Ok(unit());
        }
    }
    // interreduce the minimal basis
    let active: Vec<usize> = st.active.clone();
    let mut basis = Vec::with_capacity(active.len());
    for &i in &active {
        let others: Vec<&MultiPoly<F::Elem>> =
            active.iter().filter(|&&k| k != i).map(|&k| &st.polys[k]).collect();
        let lead = st.polys[i].leading().unwrap().clone();
        let tail = ring.from_sorted_terms(st.polys[i].terms()[1..].to_vec());
        let tail = reduce_full(ring, tail, &others)?;
        let mut terms = alloc::vec![lead];
        terms.extend(tail.into_terms());
        basis.push(ring.from_sorted_terms(terms));
    }
    basis.sort_by(|a, b| ring.cmp(&a.lm().unwrap(), &b.lm().unwrap()));
    Ok(GroebnerBasis { ring: ring.clone(), basis })
}
