//! Projective solution counting by affine strata: stratum `s` fixes the
//! first `s` coordinates to 0 and coordinate `s` to 1, so every projective
//! point lies in exactly one stratum.

use alloc::vec::Vec;

use super::{Caps, Ideal};
use crate::algebra::{MonomialOrder, MultiPoly, PolyRing};
use crate::error::Result;
use crate::field::{Field, FiniteField};
use crate::rng::seeded;

/// Points of one stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StratumCount {
    pub distinct: usize,
    pub multiplicity: usize,
}

/// Ring of the free coordinates of stratum `s`: variables `s+1, ..., n-1`.
pub fn stratum_ring<F: Field>(ring: &PolyRing<F>, s: usize) -> Result<PolyRing<F>> {
    PolyRing::new(ring.field().clone(), ring.names()[s + 1..].to_vec(), MonomialOrder::GrevLex)
}

/// Images of the projective coordinates in the stratum ring.
pub fn stratum_point<F: Field>(ring: &PolyRing<F>, sub: &PolyRing<F>, s: usize) -> Vec<MultiPoly<F::Elem>> {
    (0..ring.nvars())
        .map(|i| match i.cmp(&s) {
            core::cmp::Ordering::Less => sub.zero(),
            core::cmp::Ordering::Equal => sub.one(),
            core::cmp::Ordering::Greater => sub.var(i - s - 1),
        })
        .collect()
}

/// Dehomogenizes `gens` on stratum `s`.
pub fn stratum_ideal<F: Field>(ring: &PolyRing<F>, gens: &[MultiPoly<F::Elem>], s: usize) -> Result<Ideal<F>> {
    let sub = stratum_ring(ring, s)?;
    let images = stratum_point(ring, &sub, s);
    let out = gens.iter().map(|g| ring.compose(g, &sub, &images)).collect();
    Ok(Ideal::new(sub, out))
}

/// Per-stratum counts of the projective zero set of homogeneous `gens`.
/// `seed(s)` seeds the separating forms of stratum `s`.
pub fn count_projective<F: FiniteField>(
    ring: &PolyRing<F>,
    gens: &[MultiPoly<F::Elem>],
    trials: usize,
    caps: &Caps,
    seed: impl Fn(usize) -> u64,
) -> Result<Vec<StratumCount>> {
    (0..ring.nvars())
        .map(|s| {
            let gb = stratum_ideal(ring, gens, s)?.groebner(caps)?;
            let sol = gb.distinct_point_count(trials, &mut seeded(seed(s)))?;
            Ok(StratumCount { distinct: sol.distinct_count, multiplicity: sol.quotient_dimension })
        })
        .collect()
}
