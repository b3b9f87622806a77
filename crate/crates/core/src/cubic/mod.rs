//! Cubic threefolds in `P^4` and the Eckardt-point pipeline.

mod builtins;
mod family;
mod normal;
mod polar;

use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

pub use builtins::{builtin, BUILTIN_NAMES};
pub use family::{family_params, generate_family, sample_no_eckardt, table_family, FamilyParams, FamilySample, SAMPLE_BUDGET};
pub use normal::{elliptic_curve_at, inflection_analysis, inflection_counts, normalize_form, EllipticCurveModel, InflectionReport, Normalized};
pub use polar::{eckardt_count, eckardt_geometric, eckardt_rational_points, eckardt_system, polar_at, symbolic_polar, symbolic_minors, EckardtReport};

use crate::algebra::{reduce_mod_prime, MonomialOrder, MultiPoly, PolyRing};
use crate::consensus::Settings;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::groebner::Ideal;

/// A cubic form in `x0, ..., x4` over `Q`.
#[derive(Debug, Clone)]
pub struct CubicThreefold {
    ring: PolyRing<Rationals>,
    form: MultiPoly<BigRational>,
    gradient: Vec<MultiPoly<BigRational>>,
    /// `f_ijk` at index `25 i + 5 j + k`.
    tensor: Vec<BigRational>,
}

/// The standard ring `Q[x0, ..., x4]` with grevlex order.
pub fn standard_ring() -> PolyRing<Rationals> {
    PolyRing::with_prefix(Rationals, "x", 5, MonomialOrder::GrevLex).expect("five variables")
}

impl CubicThreefold {
    /// Checks that `form` is a nonzero cubic form of the standard ring.
    pub fn new(form: MultiPoly<BigRational>) -> Result<Self> {
        let ring = standard_ring();
        if form.is_zero() {
            return Err(Error::InvalidCubic(String::from("the form is zero")));
        }
        if !form.is_homogeneous() || form.total_degree() != Some(3) {
            return Err(Error::InvalidCubic(String::from("expected a homogeneous form of degree 3")));
        }
        let gradient = ring.gradient(&form);
        let mut tensor = Vec::with_capacity(125);
        for i in 0..5 {
            let fi = &gradient[i];
            for j in 0..5 {
                let fij = ring.diff(fi, j);
                for k in 0..5 {
                    let fijk = ring.diff(&fij, k);
                    tensor.push(fijk.terms().first().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero));
                }
            }
        }
        let cubic = CubicThreefold { ring, form, gradient, tensor };
        cubic.check_euler()?;
        Ok(cubic)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(standard_ring().parse(text)?)
    }

    pub fn ring(&self) -> &PolyRing<Rationals> {
        &self.ring
    }

    pub fn form(&self) -> &MultiPoly<BigRational> {
        &self.form
    }

    pub fn gradient(&self) -> &[MultiPoly<BigRational>] {
        &self.gradient
    }

    pub fn third_partial(&self, i: usize, j: usize, k: usize) -> &BigRational {
        &self.tensor[25 * i + 5 * j + k]
    }

    /// Canonical text of the form.
    pub fn display(&self) -> String {
        self.ring.display(&self.form)
    }

    /// `sum x_i df/dx_i = 3 f`.
    pub fn check_euler(&self) -> Result<()> {
        let r = &self.ring;
        let lhs = r.sum(&(0..5).map(|i| r.mul(&r.var(i), &self.gradient[i])).collect::<Vec<_>>());
        if lhs != r.scale(&self.form, &BigRational::from_integer(3.into())) {
            return Err(Error::Internal(String::from("Euler identity fails")));
        }
        Ok(())
    }

    pub fn eval(&self, p: &[BigRational]) -> BigRational {
        self.ring.eval(&self.form, p)
    }

    /// The form over another field, in a ring with the same variable names.
    /// `None` if a coefficient has no image.
    pub fn form_over<F: Field>(&self, target: &PolyRing<F>) -> Option<MultiPoly<F::Elem>> {
        let f = target.field();
        self.ring.transfer(&self.form, target, &[0, 1, 2, 3, 4], |c| f.from_rational(c))
    }

    /// Tensor entries mapped into `field`.
    pub fn tensor_over<F: Field>(&self, field: &F) -> Option<Vec<F::Elem>> {
        self.tensor.iter().map(|c| field.from_rational(c)).collect()
    }

    /// Reduction modulo `p` in `F_p[x0, ..., x4]`. `BadPrime` if `p` divides a
    /// denominator or kills every coefficient.
    pub fn reduce(&self, p: u32) -> Result<(PolyRing<PrimeField>, MultiPoly<u32>)> {
        let ring = self.ring.over(PrimeField::new(p)?);
        let (f, _) = reduce_mod_prime(&self.ring, &self.form, &ring)?;
        if f.is_zero() {
            return Err(Error::BadPrime(p));
        }
        Ok((ring, f))
    }

    /// `f(T x)`.
    pub fn transform(&self, t: &[Vec<BigRational>]) -> Result<Self> {
        Self::new(self.ring.linear_substitute(&self.form, &t.to_vec())?)
    }
}

/// A projective point with its first nonzero coordinate scaled to 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjPoint<E> {
    coords: Vec<E>,
}

impl<E: Clone> ProjPoint<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, coords: Vec<E>) -> Result<Self> {
        let lead = coords.iter().position(|c| !field.is_zero(c)).ok_or(Error::ZeroPoint)?;
        let inv = field.inv(&coords[lead]).unwrap();
        Ok(ProjPoint { coords: coords.iter().map(|c| field.mul(c, &inv)).collect() })
    }

    pub fn coords(&self) -> &[E] {
        &self.coords
    }

    /// Index of the leading 1.
    pub fn stratum<F: Field<Elem = E>>(&self, field: &F) -> usize {
        self.coords.iter().position(|c| !field.is_zero(c)).unwrap()
    }
}

impl ProjPoint<BigRational> {
    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        Self::new(&Rationals, coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(crate::field::rational_to_string).collect();
        alloc::format!("({})", parts.join(":"))
    }
}

/// Outcome of the modular smoothness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Smoothness {
    /// Smooth modulo every prime in `certified`; the remaining primes tested
    /// had bad reduction.
    Smooth { certified: Vec<u32>, bad_reduction: Vec<u32> },
    /// Singular modulo every prime tested.
    Singular { primes: Vec<u32> },
}

impl Smoothness {
    pub fn is_smooth(&self) -> bool {
        matches!(self, Smoothness::Smooth { .. })
    }
}

/// `X mod p` is smooth iff its gradient ideal contains a power of the
/// irrelevant ideal.
pub fn is_smooth_mod(cubic: &CubicThreefold, p: u32, settings: &Settings) -> Result<bool> {
    let (ring, f) = cubic.reduce(p)?;
    let gb = Ideal::new(ring.clone(), ring.gradient(&f)).groebner(&settings.caps)?;
    Ok(gb.contains_irrelevant_power(5))
}

/// Smoothness over `Q`: one prime of smooth reduction suffices, since a
/// singular point over `Q` reduces to a singular point modulo every prime.
pub fn smoothness_check(cubic: &CubicThreefold, settings: &Settings) -> Result<Smoothness> {
    settings.validate()?;
    let mut certified = Vec::new();
    let mut bad = Vec::new();
    for &p in &settings.primes {
        match is_smooth_mod(cubic, p, settings) {
            Ok(true) => certified.push(p),
            Ok(false) | Err(Error::BadPrime(_)) => bad.push(p),
            Err(e) => return Err(e),
        }
    }
    Ok(if certified.is_empty() {
        Smoothness::Singular { primes: bad }
    } else {
        Smoothness::Smooth { certified, bad_reduction: bad }
    })
}

/// Errors with `Singular` unless the cubic passes [`smoothness_check`].
pub fn require_smooth(cubic: &CubicThreefold, settings: &Settings) -> Result<()> {
    match smoothness_check(cubic, settings)? {
        Smoothness::Smooth { .. } => Ok(()),
        Smoothness::Singular { primes } => Err(Error::Singular(*primes.last().unwrap_or(&0))),
    }
}

/// Per-prime guard used by the counting pipelines: primes of singular
/// reduction are reported as bad so that consensus replaces them.
pub(crate) fn good_reduction(cubic: &CubicThreefold, p: u32, settings: &Settings) -> Result<(PolyRing<PrimeField>, MultiPoly<u32>)> {
    if !is_smooth_mod(cubic, p, settings)? {
        return Err(Error::BadPrime(p));
    }
    cubic.reduce(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_and_tensor() {
        assert!(CubicThreefold::parse("x0^2 + x1^3").is_err());
        assert!(CubicThreefold::parse("0*x0^3").is_err());
        let k = builtin("klein").unwrap();
        // f_001 = 2 for x0^2*x1
        assert_eq!(k.third_partial(0, 0, 1), &BigRational::from_integer(2.into()));
        assert_eq!(k.third_partial(1, 0, 0), &BigRational::from_integer(2.into()));
        assert!(k.third_partial(0, 1, 2).is_zero());
    }

    #[test]
    fn smoothness_examples() {
        let s = Settings::default();
        assert!(smoothness_check(&builtin("fermat").unwrap(), &s).unwrap().is_smooth());
        assert!(smoothness_check(&builtin("klein").unwrap(), &s).unwrap().is_smooth());
        let sing = CubicThreefold::parse("x0^3 + x1^3 + x2^3").unwrap();
        assert!(matches!(smoothness_check(&sing, &s).unwrap(), Smoothness::Singular { .. }));
    }

    #[test]
    fn points_normalize() {
        let p = ProjPoint::from_integers(&[0, 2, -4, 0, 0]).unwrap();
        assert_eq!(p.display(), "(0:1:-2:0:0)");
        assert_eq!(p.stratum(&Rationals), 1);
        assert_eq!(ProjPoint::from_integers(&[0; 5]), Err(Error::ZeroPoint));
    }
}
