//! Polynomial systems on a Schubert cell.
//!
//! For a line `l` spanned by the cell rows `v0, v1` and a point `v2` of the
//! complementary coordinate plane, the plane section is
//! `f(t0 v0 + t1 v1 + t2 v2)`. Its `t2^0` coefficients cut out the Fano
//! surface, its `t2^1` coefficients are `D(l) alpha`, and `l` is a triple
//! line iff the `t2^1` and `t2^2` coefficients vanish for some `alpha`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::cells::SchubertCell;
use crate::algebra::{MonomialOrder, MultiPoly, PolyRing};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Caps, Ideal};

/// Coefficients of `t0^a t1^b t2^c` in `f(t0 v0 + t1 v1 + t2 v2)`, keyed by `[a, b, c]`.
pub fn plane_section<F: Field>(
    ring5: &PolyRing<F>,
    f: &MultiPoly<F::Elem>,
    target: &PolyRing<F>,
    v: [&[MultiPoly<F::Elem>]; 3],
) -> BTreeMap<Vec<u8>, MultiPoly<F::Elem>> {
    ring5.expand_along(f, target, &[v[0].to_vec(), v[1].to_vec(), v[2].to_vec()])
}

fn coefficient<F: Field>(map: &BTreeMap<Vec<u8>, MultiPoly<F::Elem>>, e: [u8; 3]) -> MultiPoly<F::Elem> {
    map.get(e.as_slice()).cloned().unwrap_or_else(MultiPoly::zero)
}

/// The four coefficients `phi^{3,0}, phi^{2,1}, phi^{1,2}, phi^{0,3}` on a cell.
pub fn fano_ideal<F: Field>(ring5: &PolyRing<F>, f: &MultiPoly<F::Elem>, cell: SchubertCell) -> Result<Ideal<F>> {
    let ring = cell.ring(ring5.field().clone(), &[])?;
    let rows = cell.rows(&ring);
    let gens = ring5.restrict_line_expansion(f, &ring, &rows[0], &rows[1])?;
    Ok(Ideal::new(ring, gens))
}

/// Fano ideal and tangency matrix of a cell.
#[derive(Debug, Clone)]
pub struct SecondTypeSystem<F: Field> {
    pub fano: Ideal<F>,
    /// Rows: coefficients of `t0^2, t0 t1, t1^2`; columns: the complement
    /// coordinates.
    pub d: Vec<Vec<MultiPoly<F::Elem>>>,
    pub det: MultiPoly<F::Elem>,
}

impl<F: Field> SecondTypeSystem<F> {
    /// Fano ideal plus `det D`: the curve of second-type lines in the cell.
    pub fn m_ideal(&self) -> Ideal<F> {
        let mut m = self.fano.clone();
        m.push(self.det.clone());
        m
    }
}

pub fn second_type_system<F: Field>(ring5: &PolyRing<F>, f: &MultiPoly<F::Elem>, cell: SchubertCell) -> Result<SecondTypeSystem<F>> {
    let fano = fano_ideal(ring5, f, cell)?;
    let ring = fano.ring().clone();
    let rows = cell.rows(&ring);
    let mut cols = Vec::with_capacity(3);
    for c in cell.complement() {
        cols.push(ring5.restrict_line_expansion(&ring5.diff(f, c), &ring, &rows[0], &rows[1])?);
    }
    let d: Vec<Vec<MultiPoly<F::Elem>>> = (0..3).map(|r| (0..3).map(|c| cols[c][r].clone()).collect()).collect();
    let det = ring.det(&d);
    Ok(SecondTypeSystem { fano, d, det })
}

/// Triple-line conditions on a cell for one stratum of `alpha`: stratum `s`
/// sets the first `s` complement entries of `alpha` to 0 and the next to 1;
/// the remaining entries are the variables after the cell coordinates.
#[derive(Debug, Clone)]
pub struct TripleLineSystem<F: Field> {
    pub cell: SchubertCell,
    pub alpha_stratum: usize,
    pub ideal: Ideal<F>,
    /// `f(v2)`, which never vanishes on a solution when `X` is smooth.
    pub f_v2: MultiPoly<F::Elem>,
}

impl<F: Field> TripleLineSystem<F> {
    pub fn new(ring5: &PolyRing<F>, f: &MultiPoly<F::Elem>, cell: SchubertCell, alpha_stratum: usize) -> Result<Self> {
        let comp = cell.complement();
        let extra: Vec<String> = comp[alpha_stratum + 1..].iter().map(|c| alloc::format!("a{c}")).collect();
        let ring = cell.ring(ring5.field().clone(), &extra)?;
        let rows = cell.rows(&ring);
        let mut v2 = alloc::vec![ring.zero(); 5];
        v2[comp[alpha_stratum]] = ring.one();
        for (k, &c) in comp[alpha_stratum + 1..].iter().enumerate() {
            v2[c] = ring.var(cell.dim() + k);
        }
        let map = plane_section(ring5, f, &ring, [&rows[0], &rows[1], &v2]);
        let mut gens = Vec::with_capacity(9);
        for b in 0..=3u8 {
            gens.push(coefficient::<F>(&map, [3 - b, b, 0]));
        }
        for b in 0..=2u8 {
            gens.push(coefficient::<F>(&map, [2 - b, b, 1]));
        }
        for b in 0..=1u8 {
            gens.push(coefficient::<F>(&map, [1 - b, b, 2]));
        }
        let f_v2 = coefficient::<F>(&map, [0, 0, 3]);
        Ok(TripleLineSystem { cell, alpha_stratum, ideal: Ideal::new(ring, gens), f_v2 })
    }

    pub fn ring(&self) -> &PolyRing<F> {
        self.ideal.ring()
    }

    /// Adds the condition that the line passes through `p`.
    pub fn through_point(&mut self, p: &[F::Elem]) {
        for g in lines_through_point(self.ideal.ring(), self.cell, p) {
            self.ideal.push(g);
        }
    }

    /// Errors if a solution has `f(v2) = 0`, which would put a plane in `X`.
    pub fn check_no_plane(&self, caps: &Caps) -> Result<()> {
        let mut with = self.ideal.clone();
        with.push(self.f_v2.clone());
        if with.groebner(caps)?.contains_one() {
            Ok(())
        } else {
            Err(Error::Internal(alloc::format!("cell {} has a tangent plane inside the cubic", self.cell.label())))
        }
    }
}

/// Linear conditions, in the cell coordinates of `ring`, for the line of the
/// cell to contain `p`: `p = p_i v0 + p_j v1`.
pub fn lines_through_point<F: Field>(ring: &PolyRing<F>, cell: SchubertCell, p: &[F::Elem]) -> Vec<MultiPoly<F::Elem>> {
    let (i, j) = cell.pivots();
    let rows = cell.rows(ring);
    let mut out = Vec::new();
    for c in 0..5 {
        let combo = ring.add(&ring.scale(&rows[0][c], &p[i]), &ring.scale(&rows[1][c], &p[j]));
        let g = ring.sub(&ring.constant(p[c].clone()), &combo);
        if !g.is_zero() {
            out.push(g);
        }
    }
    out
}

/// The lines-through-`p` ideal of a cell.
pub fn lines_through_point_ideal<F: Field>(field: &F, cell: SchubertCell, p: &[F::Elem]) -> Result<Ideal<F>> {
    let ring = cell.ring(field.clone(), &[])?;
    let gens = lines_through_point(&ring, cell, p);
    Ok(Ideal::new(ring, gens))
}

/// Whether the concrete line spanned by `a, b` is a triple line of `f`.
pub fn is_triple_line<F: Field>(ring5: &PolyRing<F>, f: &MultiPoly<F::Elem>, a: &[F::Elem], b: &[F::Elem], caps: &Caps) -> Result<bool> {
    let field = ring5.field();
    let (cell, _) = super::cells::locate(field, a, b).ok_or(Error::ZeroPoint)?;
    let names = ["a0", "a1", "a2"].iter().map(|s| String::from(*s)).collect();
    let ring = PolyRing::new(field.clone(), names, MonomialOrder::GrevLex)?;
    let lift = |v: &[F::Elem]| -> Vec<MultiPoly<F::Elem>> { v.iter().map(|c| ring.constant(c.clone())).collect() };
    let mut v2 = alloc::vec![ring.zero(); 5];
    for (k, c) in cell.complement().into_iter().enumerate() {
        v2[c] = ring.var(k);
    }
    let map = plane_section(ring5, f, &ring, [&lift(a), &lift(b), &v2]);
    if map.keys().any(|e| e[2] == 0) {
        return Ok(false);
    }
    let gens: Vec<MultiPoly<F::Elem>> = map.iter().filter(|(e, _)| e[2] == 1 || e[2] == 2).map(|(_, g)| g.clone()).collect();
    let gb = Ideal::new(ring, gens).groebner(caps)?;
    Ok(!gb.contains_irrelevant_power(3))
}
