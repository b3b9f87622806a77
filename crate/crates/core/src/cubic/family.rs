//! Cubics `x0^2 x2 + x1^2 x3 + x0 q0 + x1 q1 + k x4^3` with `q0, q1` quadrics
//! in `x2, x3, x4` without `x4^2` terms. Each contains the triple line
//! `x2 = x3 = x4 = 0` with tangent plane `x2 = x3 = 0`.

use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;
use rand_core::RngCore;

use super::{eckardt_geometric, smoothness_check, CubicThreefold, EckardtReport};
use crate::algebra::{Monomial, MultiPoly};
use crate::consensus::Settings;
use crate::error::{Error, Result};
use crate::fano::{is_triple_line, plane_section};
use crate::rng::seeded;

/// Rejection budget of [`sample_no_eckardt`].
pub const SAMPLE_BUDGET: usize = 100;

/// `(q0, q1, k)` of a family member; the quadrics live in the standard ring.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyParams {
    pub q0: MultiPoly<BigRational>,
    pub q1: MultiPoly<BigRational>,
    pub k: BigRational,
}

fn check_quadric(q: &MultiPoly<BigRational>, name: &str) -> Result<()> {
    let bad = |msg: &str| Err(Error::FamilyConstraint(alloc::format!("{name} {msg}")));
    if q.is_zero() {
        return Ok(());
    }
    if !q.is_homogeneous() || q.total_degree() != Some(2) {
        return bad("must be a quadratic form");
    }
    if q.support_vars().iter().any(|&v| v < 2) {
        return bad("may only involve x2, x3, x4");
    }
    if q.coeff_of(&Monomial::var(4).mul(&Monomial::var(4))).is_some() {
        return bad("must not contain x4^2");
    }
    Ok(())
}

/// Assembles the family member and verifies its witness triple line.
pub fn generate_family(params: &FamilyParams) -> Result<CubicThreefold> {
    check_quadric(&params.q0, "q0")?;
    check_quadric(&params.q1, "q1")?;
    if params.k.is_zero() {
        return Err(Error::FamilyConstraint(String::from("k must be nonzero")));
    }
    let ring = super::standard_ring();
    let head = ring.parse("x0^2*x2 + x1^2*x3").unwrap();
    let x4cubed = ring.scale(&ring.parse("x4^3").unwrap(), &params.k);
    let f = ring.sum(&[head, ring.mul(&ring.var(0), &params.q0), ring.mul(&ring.var(1), &params.q1), x4cubed]);
    let cubic = CubicThreefold::new(f)?;
    let unit = |i: usize| -> Vec<BigRational> { (0..5).map(|j| BigRational::from_integer(((i == j) as i64).into())).collect() };
    if !is_triple_line(cubic.ring(), cubic.form(), &unit(0), &unit(1), &Default::default())? {
        return Err(Error::Internal(String::from("family member lacks its triple line")));
    }
    // the plane through the line and e4 meets X only in the line
    let r = cubic.ring();
    let lift = |v: Vec<BigRational>| -> Vec<MultiPoly<BigRational>> { v.into_iter().map(|c| r.constant(c)).collect() };
    let section = plane_section(r, cubic.form(), r, [&lift(unit(0)), &lift(unit(1)), &lift(unit(4))]);
    if section.keys().any(|e| e[2] != 3) {
        return Err(Error::Internal(String::from("x2 = x3 = 0 is not the tangent plane of the witness line")));
    }
    Ok(cubic)
}

/// Recovers `(q0, q1, k)` from a cubic written in family form, so that
/// [`generate_family`] reproduces it exactly.
pub fn family_params(cubic: &CubicThreefold) -> Result<FamilyParams> {
    let ring = cubic.ring();
    let bad = |msg: String| Err(Error::FamilyConstraint(msg));
    let one = BigRational::from_integer(1.into());
    let (mut q0, mut q1) = (Vec::new(), Vec::new());
    let mut k = BigRational::zero();
    let (mut head0, mut head1) = (false, false);
    for (m, c) in cubic.form().terms() {
        let shown = ring.display_monomial(m);
        match (m.exp(0), m.exp(1)) {
            (2, 0) if m.exp(2) == 1 && *c == one => head0 = true,
            (0, 2) if m.exp(3) == 1 && *c == one => head1 = true,
            (1, 0) => q0.push((m.div(&Monomial::var(0)), c.clone())),
            (0, 1) => q1.push((m.div(&Monomial::var(1)), c.clone())),
            (0, 0) if m.exp(4) == 3 => k = c.clone(),
            _ => return bad(alloc::format!("term {shown} does not fit the family")),
        }
    }
    if !head0 || !head1 {
        return bad(String::from("x0^2*x2 + x1^2*x3 must appear with coefficient 1"));
    }
    let params = FamilyParams { q0: ring.from_terms(q0), q1: ring.from_terms(q1), k };
    let regenerated = generate_family(&params)?;
    if regenerated.form() != cubic.form() {
        return Err(Error::Internal(String::from("family decomposition does not regenerate the cubic")));
    }
    Ok(params)
}

/// Family data of the table cubics `x5`, `x6`, `x7`. `x8` carries `x4^2`
/// terms and is not a member.
pub fn table_family(name: &str) -> Option<FamilyParams> {
    let ring = super::standard_ring();
    let (q0, q1) = match name {
        "x5" => ("x3^2", "x2^2 + x3^2"),
        "x6" => ("x2^2 + x3^2 + 2*x3*x4", "x2^2 + 2*x2*x4"),
        "x7" => ("x3^2 + 2*x3*x4", "x2^2"),
        _ => return None,
    };
    Some(FamilyParams { q0: ring.parse(q0).unwrap(), q1: ring.parse(q1).unwrap(), k: BigRational::from_integer(1.into()) })
}

/// An accepted random family member.
#[derive(Debug, Clone)]
pub struct FamilySample {
    pub params: FamilyParams,
    pub cubic: CubicThreefold,
    pub eckardt: EckardtReport,
    /// Candidates drawn, including the accepted one.
    pub attempts: usize,
}

const QUADRIC_SUPPORT: [&str; 5] = ["x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4"];

/// Draws family members from `seed` until one is smooth with no Eckardt
/// points. Coefficients of `q0, q1` lie in `[-bound, bound]`, `k` in `[1, bound]`.
pub fn sample_no_eckardt(seed: u64, bound: u32, settings: &Settings) -> Result<FamilySample> {
    if bound == 0 {
        return Err(Error::FamilyConstraint(String::from("coefficient bound must be at least 1")));
    }
    let ring = super::standard_ring();
    let monomials: Vec<MultiPoly<BigRational>> = QUADRIC_SUPPORT.iter().map(|m| ring.parse(m).unwrap()).collect();
    let mut rng = seeded(seed);
    let width = 2 * bound as u64 + 1;
    let draw = |rng: &mut crate::rng::Rng| -> MultiPoly<BigRational> {
        let terms: Vec<MultiPoly<BigRational>> = monomials
            .iter()
            .map(|m| {
                let c = (rng.next_u64() % width) as i64 - bound as i64;
                ring.scale(m, &BigRational::from_integer(c.into()))
            })
            .collect();
        ring.sum(&terms)
    };
    for attempt in 1..=SAMPLE_BUDGET {
        let q0 = draw(&mut rng);
        let q1 = draw(&mut rng);
        let k = BigRational::from_integer((1 + (rng.next_u64() % bound as u64) as i64).into());
        let params = FamilyParams { q0, q1, k };
        let cubic = generate_family(&params)?;
        if !smoothness_check(&cubic, settings)?.is_smooth() {
            continue;
        }
        let eckardt = eckardt_geometric(&cubic, settings)?;
        if eckardt.total == 0 {
            return Ok(FamilySample { params, cubic, eckardt, attempts: attempt });
        }
    }
    Err(Error::RejectionBudget(SAMPLE_BUDGET))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::builtin;

    #[test]
    fn table_members_regenerate() {
        for name in ["x5", "x6", "x7"] {
            let c = generate_family(&table_family(name).unwrap()).unwrap();
            assert_eq!(c.form(), builtin(name).unwrap().form(), "{name}");
        }
        assert!(table_family("x8").is_none());
    }

    #[test]
    fn decomposition_inverts_generation() {
        for name in ["x5", "x6", "x7"] {
            assert_eq!(family_params(&builtin(name).unwrap()).unwrap(), table_family(name).unwrap());
        }
        assert!(matches!(family_params(&builtin("x8").unwrap()), Err(Error::FamilyConstraint(_))));
        assert!(matches!(family_params(&builtin("fermat").unwrap()), Err(Error::FamilyConstraint(_))));
    }

    #[test]
    fn constraints() {
        let ring = crate::cubic::standard_ring();
        let mut p = table_family("x7").unwrap();
        p.q0 = ring.parse("x4^2").unwrap();
        assert!(matches!(generate_family(&p), Err(Error::FamilyConstraint(_))));
        let mut p = table_family("x7").unwrap();
        p.k = BigRational::zero();
        assert!(matches!(generate_family(&p), Err(Error::FamilyConstraint(_))));
        let mut p = table_family("x7").unwrap();
        p.q1 = ring.parse("x0*x2").unwrap();
        assert!(matches!(generate_family(&p), Err(Error::FamilyConstraint(_))));
    }

    #[test]
    fn sampling_is_deterministic() {
        let s = Settings::default();
        let a = sample_no_eckardt(7, 3, &s).unwrap();
        let b = sample_no_eckardt(7, 3, &s).unwrap();
        assert_eq!(a.cubic.form(), b.cubic.form());
        assert_eq!(a.eckardt.total, 0);
    }
}
