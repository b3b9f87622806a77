//! Elliptic curves and the main component in the chart `p01 = 1`.
//!
//! Everything is computed modulo a prime over the smallest extension
//! `F_{p^k}` holding all Eckardt points. Frobenius orbits of Eckardt points
//! stand in for Galois orbits, so an orbit corresponds to one elliptic curve
//! irreducible over the rationals.

use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::systems::{second_type_system, TripleLineSystem};
use super::{count_triple_lines, elliptic_curve_chart_ideal, SchubertCell};
use crate::algebra::{MultiPoly, PolyRing};
use crate::consensus::{agree, Settings};
use crate::cubic::{eckardt_rational_points, eckardt_system, good_reduction, CubicThreefold, ProjPoint};
use crate::error::{Error, Result};
use crate::field::{ExtensionField, Field, FiniteField, PrimeField};
use crate::groebner::strata::{count_projective, stratum_ideal};
use crate::groebner::{saturate, Caps, GroebnerBasis, Ideal};
use crate::rng::seeded;

const TAG_MAIN: u64 = 0x3a00;
const MAX_EXTENSION: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct IntersectionCount {
    pub distinct: usize,
    pub multiplicity: usize,
}

/// One geometric elliptic curve meeting the chart.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EllipticChartData {
    /// Size of the Frobenius orbit of the Eckardt point.
    pub orbit_size: usize,
    /// The Eckardt point when it is rational.
    pub rational_point: Option<String>,
    pub meets_main: IntersectionCount,
    /// Points of `E_p . P` that are triple lines.
    pub triple_lines_on_intersection: usize,
}

/// An orbit of elliptic curves: one curve over the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrbitData {
    pub size: usize,
    pub meets_main: IntersectionCount,
}

/// Prime-independent content of the model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainComponentData {
    pub chart_triple_lines: usize,
    /// Sorted.
    pub elliptic_curves: Vec<EllipticChartData>,
    /// Sorted.
    pub orbits: Vec<OrbitData>,
    /// `E_p . E_q` for geometric pairs, sorted.
    pub pairwise: Vec<IntersectionCount>,
    /// `E_p . E_q` summed over pairs of distinct orbits, sorted.
    pub pairwise_orbits: Vec<IntersectionCount>,
    /// Degree of the field of definition of the Eckardt points.
    pub extension_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainComponentModel {
    pub data: MainComponentData,
    pub primes_used: Vec<u32>,
    pub agreeing: Vec<u32>,
    pub unanimous: bool,
}

/// Eckardt points over `field`, normalized.
fn eckardt_points<F: FiniteField>(cubic: &CubicThreefold, field: F, caps: &Caps, seed: u64) -> Result<Vec<Vec<F::Elem>>> {
    let ring = PolyRing::with_prefix(field.clone(), "p", 5, crate::algebra::MonomialOrder::GrevLex)?;
    let tensor = cubic.tensor_over(&field).ok_or(Error::BadPrime(field.prime()))?;
    let mut gens = alloc::vec![cubic.form_over(&ring).ok_or(Error::BadPrime(field.prime()))?];
    gens.extend(crate::cubic::symbolic_minors(&ring, &crate::cubic::symbolic_polar(&ring, &tensor)));
    let mut out = Vec::new();
    for s in 0..5 {
        let gb = stratum_ideal(&ring, &gens, s)?.groebner(caps)?;
        for free in gb.points(&mut seeded(seed ^ s as u64))? {
            let mut p = alloc::vec![field.zero(); s];
            p.push(field.one());
            p.extend(free);
            out.push(p);
        }
    }
    Ok(out)
}

/// Orbit index of every point under coordinatewise Frobenius.
fn orbits<F: FiniteField>(field: &F, points: &[Vec<F::Elem>]) -> Result<Vec<usize>> {
    let mut id: Vec<Option<usize>> = alloc::vec![None; points.len()];
    let mut next = 0;
    for start in 0..points.len() {
        if id[start].is_some() {
            continue;
        }
        let mut q = points[start].clone();
        loop {
            let k = points.iter().position(|p| *p == q).ok_or_else(|| Error::Internal(String::from("Eckardt points are not Frobenius-stable")))?;
            if id[k].is_some() {
                break;
            }
            id[k] = Some(next);
            q = q.iter().map(|c| field.frobenius(c)).collect();
        }
        next += 1;
    }
    Ok(id.into_iter().map(|i| i.unwrap()).collect())
}

fn zero_dim_count<F: FiniteField>(ideal: &Ideal<F>, trials: usize, caps: &Caps, seed: u64) -> Result<IntersectionCount> {
    let gb = ideal.groebner(caps)?;
    if gb.contains_one() {
        return Ok(IntersectionCount::default());
    }
    let sol = gb.distinct_point_count(trials, &mut seeded(seed))?;
    Ok(IntersectionCount { distinct: sol.distinct_count, multiplicity: sol.quotient_dimension })
}

fn same_ideal<F: Field>(a: &GroebnerBasis<F>, b: &GroebnerBasis<F>) -> bool {
    a.basis() == b.basis()
}

fn model_over<F: FiniteField>(
    cubic: &CubicThreefold,
    field: F,
    points: Vec<Vec<F::Elem>>,
    rational: &[ProjPoint<BigRational>],
    settings: &Settings,
    seed: impl Fn(u64) -> u64,
) -> Result<MainComponentData> {
    let caps = &settings.caps;
    let ring5 = cubic.ring().over(field.clone());
    let f = cubic.form_over(&ring5).ok_or(Error::BadPrime(field.prime()))?;
    let orbit_of = orbits(&field, &points)?;
    let chart = SchubertCell::chart01();
    let m = second_type_system(&ring5, &f, chart)?.m_ideal();

    // elliptic curves meeting the chart
    let mut curves: Vec<(usize, Ideal<F>)> = Vec::new();
    for (k, p) in points.iter().enumerate() {
        let e = elliptic_curve_chart_ideal(&ring5, &f, p)?;
        if !e.groebner(caps)?.contains_one() {
            curves.push((k, e));
        }
    }

    let mut main = m.clone();
    for (_, e) in &curves {
        main = saturate(&main, e, caps)?;
    }
    let main_gb = main.groebner(caps)?;
    for (_, e) in &curves {
        if !same_ideal(&saturate(&main, e, caps)?.groebner(caps)?, &main_gb) {
            return Err(Error::Internal(String::from("main component is not saturated after one pass")));
        }
    }
    if !m.groebner(caps)?.basis().iter().all(|g| main_gb.contains(g)) {
        return Err(Error::Internal(String::from("main component does not contain the second-type curve ideal")));
    }
    let main = main_gb.to_ideal();

    let chart_triple_lines = count_triple_lines(&ring5, &f, &[chart], None, settings.trials, caps, &seed)?[0].total();

    let mut elliptic_curves = Vec::new();
    let mut per_curve = Vec::new();
    for (n, (k, e)) in curves.iter().enumerate() {
        let meets = zero_dim_count(&main.sum(e), settings.trials, caps, seed(0x100 + n as u64))?;
        // the intersection points that are triple lines
        let mut on_triple = 0;
        for s in 0..3 {
            let mut sys = TripleLineSystem::new(&ring5, &f, chart, s)?;
            let lift = |g: &MultiPoly<F::Elem>| sys.ring().import(g);
            let extra: Vec<MultiPoly<F::Elem>> = main.gens().iter().chain(e.gens()).map(lift).collect();
            for g in extra {
                sys.ideal.push(g);
            }
            on_triple += zero_dim_count(&sys.ideal, settings.trials, caps, seed(0x200 + 3 * n as u64 + s as u64))?.distinct;
        }
        let size = orbit_of.iter().filter(|&&o| o == orbit_of[*k]).count();
        let label = rational_label(&field, &points[*k], rational);
        per_curve.push((orbit_of[*k], meets));
        elliptic_curves.push(EllipticChartData { orbit_size: size, rational_point: label, meets_main: meets, triple_lines_on_intersection: on_triple });
    }

    let mut pairwise = Vec::new();
    let mut by_orbit_pair: Vec<((usize, usize), IntersectionCount)> = Vec::new();
    for a in 0..curves.len() {
        for b in a + 1..curves.len() {
            let c = zero_dim_count(&curves[a].1.sum(&curves[b].1), settings.trials, caps, seed(0x400 + (a * 64 + b) as u64))?;
            pairwise.push(c);
            let (oa, ob) = (orbit_of[curves[a].0], orbit_of[curves[b].0]);
            if oa != ob {
                let key = (oa.min(ob), oa.max(ob));
                match by_orbit_pair.iter_mut().find(|(k, _)| *k == key) {
                    Some((_, acc)) => {
                        acc.distinct += c.distinct;
                        acc.multiplicity += c.multiplicity;
                    }
                    None => by_orbit_pair.push((key, c)),
                }
            }
        }
    }

    let mut orbit_ids: Vec<usize> = per_curve.iter().map(|(o, _)| *o).collect();
    orbit_ids.sort_unstable();
    orbit_ids.dedup();
    let mut orbits: Vec<OrbitData> = orbit_ids
        .iter()
        .map(|&o| {
            let members: Vec<&IntersectionCount> = per_curve.iter().filter(|(q, _)| *q == o).map(|(_, c)| c).collect();
            OrbitData {
                size: members.len(),
                meets_main: IntersectionCount {
                    distinct: members.iter().map(|c| c.distinct).sum(),
                    multiplicity: members.iter().map(|c| c.multiplicity).sum(),
                },
            }
        })
        .collect();
    orbits.sort();
    elliptic_curves.sort();
    pairwise.sort();
    let mut pairwise_orbits: Vec<IntersectionCount> = by_orbit_pair.into_iter().map(|(_, c)| c).collect();
    pairwise_orbits.sort();
    Ok(MainComponentData { chart_triple_lines, elliptic_curves, orbits, pairwise, pairwise_orbits, extension_degree: field.degree() })
}

fn rational_label<F: FiniteField>(field: &F, p: &[F::Elem], rational: &[ProjPoint<BigRational>]) -> Option<String> {
    rational
        .iter()
        .find(|q| q.coords().iter().zip(p).all(|(c, x)| field.from_rational(c).as_ref() == Some(x)))
        .map(|q| q.display())
}

/// The chart model modulo one prime.
fn model_mod(cubic: &CubicThreefold, p: u32, rational: &[ProjPoint<BigRational>], settings: &Settings) -> Result<MainComponentData> {
    let (ring, gens) = eckardt_system(cubic, p)?;
    let base = PrimeField::new(p)?;
    let geometric: usize = count_projective(&ring, &gens, settings.trials, &settings.caps, |s| settings.task_seed(p, TAG_MAIN + s as u64))?
        .iter()
        .map(|s| s.distinct)
        .sum();
    let seed = |t: u64| settings.task_seed(p, TAG_MAIN + 0x10 + t);
    for k in 1..=MAX_EXTENSION {
        if k == 1 {
            let pts = eckardt_points(cubic, base, &settings.caps, seed(0))?;
            if pts.len() == geometric {
                return model_over(cubic, base, pts, rational, settings, seed);
            }
        } else {
            let field = ExtensionField::of_degree(base, k)?;
            let pts = eckardt_points(cubic, field.clone(), &settings.caps, seed(0))?;
            if pts.len() == geometric {
                return model_over(cubic, field, pts, rational, settings, seed);
            }
        }
    }
    Err(Error::Internal(alloc::format!("Eckardt points need an extension of degree above {MAX_EXTENSION}")))
}

/// Main component, elliptic curves and their intersections in the chart
/// `p01 = 1`, agreed across primes.
pub fn main_component_model(cubic: &CubicThreefold, settings: &Settings) -> Result<MainComponentModel> {
    settings.validate()?;
    let rational = eckardt_rational_points(cubic, settings)?;
    let c = agree(&settings.primes, |p| {
        good_reduction(cubic, p, settings)?;
        model_mod(cubic, p, &rational, settings)
    })?;
    Ok(MainComponentModel { data: c.value, primes_used: c.primes_used, agreeing: c.agreeing, unanimous: c.unanimous })
}
