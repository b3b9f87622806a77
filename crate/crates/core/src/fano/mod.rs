//! Lines on a cubic threefold through the Schubert cells of `G(1,4)`:
//! Fano equations, second-type and triple lines, lines through a point, and
//! the main component of the curve of second-type lines.

mod cells;
mod main_component;
mod systems;

use alloc::vec::Vec;

use num_rational::BigRational;

pub use cells::{cells, locate, plucker, plucker_relations, SchubertCell};
pub use main_component::{main_component_model, EllipticChartData, IntersectionCount, MainComponentData, MainComponentModel, OrbitData};
pub use systems::{
    fano_ideal, is_triple_line, lines_through_point, lines_through_point_ideal, plane_section, second_type_system,
    SecondTypeSystem, TripleLineSystem,
};

use crate::algebra::{MultiPoly, PolyRing};
use crate::consensus::{agree, Settings};
use crate::cubic::{good_reduction, CubicThreefold, ProjPoint};
use crate::error::{Error, Result};
use crate::field::{Field, FiniteField, PrimeField};
use crate::groebner::Caps;
use crate::rng::seeded;

const TAG_TRIPLE: u64 = 0x7100;

/// Triple lines of one cell, split by `alpha` stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCount {
    pub cell: SchubertCell,
    pub alpha_strata: [usize; 3],
}

impl CellCount {
    pub fn total(&self) -> usize {
        self.alpha_strata.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleLineReport {
    pub total: usize,
    pub per_cell: Vec<CellCount>,
    pub primes_used: Vec<u32>,
    pub agreeing: Vec<u32>,
    pub unanimous: bool,
}

impl TripleLineReport {
    pub fn cell(&self, cell: SchubertCell) -> Option<&CellCount> {
        self.per_cell.iter().find(|c| c.cell == cell)
    }
}

/// Geometric triple lines per cell and `alpha` stratum over a finite field,
/// optionally restricted to lines through `through`.
pub fn count_triple_lines<F: FiniteField>(
    ring5: &PolyRing<F>,
    f: &MultiPoly<F::Elem>,
    which: &[SchubertCell],
    through: Option<&[F::Elem]>,
    trials: usize,
    caps: &Caps,
    seed: impl Fn(u64) -> u64,
) -> Result<Vec<CellCount>> {
    let mut out = Vec::with_capacity(which.len());
    for &cell in which {
        let mut alpha_strata = [0; 3];
        for (s, slot) in alpha_strata.iter_mut().enumerate() {
            let mut sys = TripleLineSystem::new(ring5, f, cell, s)?;
            if let Some(p) = through {
                sys.through_point(p);
            }
            let gb = sys.ideal.groebner(caps)?;
            if gb.contains_one() {
                continue;
            }
            let (i, j) = cell.pivots();
            let tag = (5 * i + j) as u64 * 4 + s as u64;
            *slot = gb.distinct_point_count(trials, &mut seeded(seed(tag)))?.distinct_count;
            sys.check_no_plane(caps)?;
        }
        out.push(CellCount { cell, alpha_strata });
    }
    Ok(out)
}

fn consensus_count(
    cubic: &CubicThreefold,
    settings: &Settings,
    which: &[SchubertCell],
    through: Option<&ProjPoint<BigRational>>,
) -> Result<TripleLineReport> {
    settings.validate()?;
    let c = agree(&settings.primes, |p| {
        let (ring5, f) = good_reduction(cubic, p, settings)?;
        let field = PrimeField::new(p)?;
        let point: Option<Vec<u32>> = match through {
            Some(q) => Some(
                q.coords().iter().map(|c| field.from_rational(c).ok_or(Error::BadPrime(p))).collect::<Result<_>>()?,
            ),
            None => None,
        };
        count_triple_lines(&ring5, &f, which, point.as_deref(), settings.trials, &settings.caps, |t| {
            settings.task_seed(p, TAG_TRIPLE + t)
        })
    })?;
    Ok(TripleLineReport {
        total: c.value.iter().map(CellCount::total).sum(),
        per_cell: c.value,
        primes_used: c.primes_used,
        agreeing: c.agreeing,
        unanimous: c.unanimous,
    })
}

/// Triple lines over all ten cells.
pub fn triple_line_count(cubic: &CubicThreefold, settings: &Settings) -> Result<TripleLineReport> {
    consensus_count(cubic, settings, &cells(), None)
}

/// Triple lines in the chart `p01 = 1`.
pub fn triple_lines_in_chart01(cubic: &CubicThreefold, settings: &Settings) -> Result<TripleLineReport> {
    consensus_count(cubic, settings, &[SchubertCell::chart01()], None)
}

/// Triple lines through a rational point of the cubic.
pub fn triple_lines_through(cubic: &CubicThreefold, p: &ProjPoint<BigRational>, settings: &Settings) -> Result<TripleLineReport> {
    if cubic.eval(p.coords()) != BigRational::from_integer(0.into()) {
        return Err(Error::NotOnCubic);
    }
    consensus_count(cubic, settings, &cells(), Some(p))
}

/// `E_p` in the chart `p01 = 1`: Fano equations plus the lines through `p`.
pub fn elliptic_curve_chart_ideal<F: Field>(
    ring5: &PolyRing<F>,
    f: &MultiPoly<F::Elem>,
    p: &[F::Elem],
) -> Result<crate::groebner::Ideal<F>> {
    let mut ideal = fano_ideal(ring5, f, SchubertCell::chart01())?;
    for g in lines_through_point(ideal.ring(), SchubertCell::chart01(), p) {
        ideal.push(g);
    }
    Ok(ideal)
}
