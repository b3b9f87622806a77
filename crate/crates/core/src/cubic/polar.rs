//! Polar quadrics and Eckardt points.
//!
//! `p` is an Eckardt point iff its polar quadric has rank at most 2, so the
//! Eckardt locus is cut out by `f(p)` and the 3x3 minors of the polar
//! matrix, whose entries are linear in `p`.

use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::{good_reduction, CubicThreefold, ProjPoint};
use crate::algebra::linalg::{rank, Matrix};
use crate::algebra::{MonomialOrder, MultiPoly, PolyRing};
use crate::consensus::{agree, Settings};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::groebner::strata::{count_projective, stratum_ideal, StratumCount};
use crate::groebner::{rational_points_zero_dim, DEFAULT_RATIONAL_CAP};

/// Seed tag of the Eckardt strata.
const TAG_ECKARDT: u64 = 0xec00;

/// `B_jk = 1/2 sum_i p_i f_ijk`, so that `x^T B x = sum_i p_i df/dx_i`.
pub fn polar_at<F: Field>(field: &F, tensor: &[F::Elem], p: &[F::Elem]) -> Matrix<F::Elem> {
    let half = field.inv(&field.from_i64(2)).unwrap();
    (0..5)
        .map(|j| {
            (0..5)
                .map(|k| {
                    let mut acc = field.zero();
                    for (i, pi) in p.iter().enumerate() {
                        acc = field.add(&acc, &field.mul(pi, &tensor[25 * i + 5 * j + k]));
                    }
                    field.mul(&acc, &half)
                })
                .collect()
        })
        .collect()
}

/// The polar matrix with entries linear forms in the 5 variables of `ring`.
pub fn symbolic_polar<F: Field>(ring: &PolyRing<F>, tensor: &[F::Elem]) -> Vec<Vec<MultiPoly<F::Elem>>> {
    let p = ring.vars();
    let half = ring.field().inv(&ring.field().from_i64(2)).unwrap();
    (0..5)
        .map(|j| {
            (0..5)
                .map(|k| {
                    let terms: Vec<MultiPoly<F::Elem>> = (0..5)
                        .map(|i| ring.scale(&p[i], &ring.field().mul(&tensor[25 * i + 5 * j + k], &half)))
                        .collect();
                    ring.sum(&terms)
                })
                .collect()
        })
        .collect()
}

/// All 3x3 minors of a 5x5 matrix, zeros and syntactic duplicates removed.
pub fn symbolic_minors<F: Field>(ring: &PolyRing<F>, m: &[Vec<MultiPoly<F::Elem>>]) -> Vec<MultiPoly<F::Elem>> {
    let triples: Vec<[usize; 3]> = (0..5)
        .flat_map(|a| (a + 1..5).flat_map(move |b| (b + 1..5).map(move |c| [a, b, c])))
        .collect();
    let mut out: Vec<MultiPoly<F::Elem>> = Vec::new();
    for rows in &triples {
        for cols in &triples {
            let sub: Vec<Vec<MultiPoly<F::Elem>>> =
                rows.iter().map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect()).collect();
            let d = ring.det(&sub);
            if !d.is_zero() && !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

fn point_ring<F: Field>(field: F) -> PolyRing<F> {
    PolyRing::with_prefix(field, "p", 5, MonomialOrder::GrevLex).expect("five variables")
}

/// `f(p)` and the 3x3 minors of the symbolic polar matrix, in `F[p0..p4]`.
fn eckardt_gens<F: Field>(cubic: &CubicThreefold, field: F) -> Result<(PolyRing<F>, Vec<MultiPoly<F::Elem>>)> {
    let ring = point_ring(field.clone());
    let bad = || Error::FieldMismatch(String::from("cubic coefficients have no image in the field"));
    let tensor = cubic.tensor_over(&field).ok_or_else(bad)?;
    let mut gens = alloc::vec![cubic.form_over(&ring).ok_or_else(bad)?];
    gens.extend(symbolic_minors(&ring, &symbolic_polar(&ring, &tensor)));
    Ok((ring, gens))
}

/// The Eckardt system modulo `p` together with its ring.
pub fn eckardt_system(cubic: &CubicThreefold, p: u32) -> Result<(PolyRing<PrimeField>, Vec<MultiPoly<u32>>)> {
    cubic.reduce(p)?;
    eckardt_gens(cubic, PrimeField::new(p)?)
}

impl CubicThreefold {
    /// Rank test on the polar matrix at a point of `X` over `field`.
    pub fn is_eckardt_over<F: Field>(&self, field: &F, p: &[F::Elem]) -> Result<bool> {
        if p.iter().all(|c| field.is_zero(c)) {
            return Err(Error::ZeroPoint);
        }
        let ring = self.ring().over(field.clone());
        let bad = || Error::FieldMismatch(String::from("cubic coefficients have no image in the field"));
        let f = self.form_over(&ring).ok_or_else(bad)?;
        if !field.is_zero(&ring.eval(&f, p)) {
            return Err(Error::NotOnCubic);
        }
        let tensor = self.tensor_over(field).ok_or_else(bad)?;
        Ok(rank(field, &polar_at(field, &tensor, p)) <= 2)
    }

    pub fn is_eckardt(&self, p: &ProjPoint<BigRational>) -> Result<bool> {
        self.is_eckardt_over(&Rationals, p.coords())
    }
}

/// Geometric Eckardt points by stratum, agreed across primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EckardtReport {
    pub total: usize,
    /// Distinct points per stratum, indexed by the leading coordinate.
    pub strata: Vec<usize>,
    /// Points per stratum counted with multiplicity.
    pub multiplicities: Vec<usize>,
    /// Eckardt points defined over `Q`, sorted.
    pub rational_points: Vec<ProjPoint<BigRational>>,
    pub primes_used: Vec<u32>,
    pub agreeing: Vec<u32>,
    pub unanimous: bool,
}

/// Stratified geometric count of Eckardt points with multi-prime consensus,
/// without the rational points.
pub fn eckardt_geometric(cubic: &CubicThreefold, settings: &Settings) -> Result<EckardtReport> {
    settings.validate()?;
    let c = agree(&settings.primes, |p| {
        good_reduction(cubic, p, settings)?;
        let (ring, gens) = eckardt_gens(cubic, PrimeField::new(p)?)?;
        count_projective(&ring, &gens, settings.trials, &settings.caps, |s| settings.task_seed(p, TAG_ECKARDT + s as u64))
    })?;
    let strata: Vec<usize> = c.value.iter().map(|s: &StratumCount| s.distinct).collect();
    let total = strata.iter().sum();
    if total > 30 {
        return Err(Error::Internal(alloc::format!("{total} Eckardt points exceed the bound of 30")));
    }
    Ok(EckardtReport {
        total,
        multiplicities: c.value.iter().map(|s| s.multiplicity).collect(),
        strata,
        rational_points: Vec::new(),
        primes_used: c.primes_used,
        agreeing: c.agreeing,
        unanimous: c.unanimous,
    })
}

/// [`eckardt_geometric`] plus the rational points, which are only sought
/// when the geometric count is positive.
pub fn eckardt_count(cubic: &CubicThreefold, settings: &Settings) -> Result<EckardtReport> {
    let mut report = eckardt_geometric(cubic, settings)?;
    if report.total == 0 {
        return Ok(report);
    }
    let rational_points = rational_points_in(cubic, settings, &report.strata)?;
    for (s, &geometric) in report.strata.iter().enumerate() {
        let here = rational_points.iter().filter(|p| p.stratum(&Rationals) == s).count();
        if here > geometric {
            return Err(Error::Internal(alloc::format!("stratum {s}: {here} rational points but {geometric} geometric")));
        }
    }
    report.rational_points = rational_points;
    Ok(report)
}

/// Eckardt points over `Q`, solved exactly stratum by stratum and verified
/// by the rank test.
pub fn eckardt_rational_points(cubic: &CubicThreefold, settings: &Settings) -> Result<Vec<ProjPoint<BigRational>>> {
    rational_points_in(cubic, settings, &[1; 5])
}

/// Exact solving over `Q` is skipped on strata known to be empty.
fn rational_points_in(cubic: &CubicThreefold, settings: &Settings, strata: &[usize]) -> Result<Vec<ProjPoint<BigRational>>> {
    let (ring, gens) = eckardt_gens(cubic, Rationals)?;
    let mut out = Vec::new();
    for s in (0..5).filter(|&s| strata[s] > 0) {
        let gb = stratum_ideal(&ring, &gens, s)?.groebner(&settings.caps)?;
        for free in rational_points_zero_dim(&gb, DEFAULT_RATIONAL_CAP)? {
            let mut coords = alloc::vec![BigRational::from_integer(0.into()); s];
            coords.push(BigRational::from_integer(1.into()));
            coords.extend(free);
            let p = ProjPoint::new(&Rationals, coords)?;
            if !cubic.is_eckardt(&p)? {
                return Err(Error::Internal(alloc::format!("solution {} fails the rank test", p.display())));
            }
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::builtin;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn polar_examples() {
        let f = builtin("fermat").unwrap();
        let t = f.tensor_over(&Rationals).unwrap();
        let b = polar_at(&Rationals, &t, &[q(1), q(-1), q(0), q(0), q(0)]);
        for j in 0..5 {
            for k in 0..5 {
                let want = if j == k { [3, -3, 0, 0, 0][j] } else { 0 };
                assert_eq!(b[j][k], q(want));
            }
        }
        let k = builtin("klein").unwrap();
        let ring = point_ring(Rationals);
        let b = symbolic_polar(&ring, &k.tensor_over(&Rationals).unwrap());
        let expect = [((0, 0), "p1"), ((0, 1), "p0"), ((1, 1), "p2"), ((1, 2), "p1"), ((2, 2), "p3"), ((2, 3), "p2"), ((3, 3), "p4"), ((3, 4), "p3"), ((4, 4), "p0"), ((0, 4), "p4")];
        for j in 0..5 {
            for l in 0..5 {
                let want = expect
                    .iter()
                    .find(|((a, c), _)| (*a, *c) == (j, l) || (*c, *a) == (j, l))
                    .map(|(_, s)| ring.parse(s).unwrap())
                    .unwrap_or_else(|| ring.zero());
                assert_eq!(b[j][l], want, "entry ({j},{l})");
            }
        }
    }

    #[test]
    fn rank_examples() {
        let x1 = builtin("x1").unwrap();
        assert!(x1.is_eckardt(&ProjPoint::from_integers(&[0, 1, 0, 0, 0]).unwrap()).unwrap());
        let f = builtin("fermat").unwrap();
        assert!(f.is_eckardt(&ProjPoint::from_integers(&[1, -1, 0, 0, 0]).unwrap()).unwrap());
        let x3 = builtin("x3").unwrap();
        assert_eq!(x3.is_eckardt(&ProjPoint::from_integers(&[0, 0, 0, 1, 1]).unwrap()), Err(Error::NotOnCubic));
    }

    #[test]
    fn fermat_stratum_systems() {
        let f = builtin("fermat").unwrap();
        let (ring, gens) = eckardt_system(&f, 32003).unwrap();
        let s = Settings::default();
        // stratum 2: (0:0:1:xi:0) and (0:0:1:0:xi) with xi^3 = -1
        let c = count_projective(&ring, &gens, 3, &s.caps, |i| i as u64).unwrap();
        assert_eq!(c.iter().map(|x| x.distinct).collect::<Vec<_>>(), vec![12, 9, 6, 3, 0]);
        // stratum 0 contains p2^4 + p2
        let gb = stratum_ideal(&ring, &gens, 0).unwrap().groebner(&s.caps).unwrap();
        let sub = gb.ring();
        assert!(gb.contains(&sub.parse("p2^4 + p2").unwrap()));
    }

    #[test]
    fn fermat_and_klein_counts() {
        let s = Settings::default();
        let r = eckardt_count(&builtin("fermat").unwrap(), &s).unwrap();
        assert_eq!((r.total, r.strata.clone()), (30, vec![12, 9, 6, 3, 0]));
        assert_eq!(r.rational_points.len(), 10);
        assert!(r.unanimous);
        let r = eckardt_count(&builtin("klein").unwrap(), &s).unwrap();
        assert_eq!(r.total, 0);
    }
}
