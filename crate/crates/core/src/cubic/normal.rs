//! Normal form at a point and the elliptic curve of an Eckardt point.
//!
//! New coordinates `y = S x` are chosen so that `p` becomes `e0` and the
//! tangent hyperplane becomes `y1 = 0`:
//!
//! * `y0 = x_m / p_m` for the first nonzero coordinate `m` of `p`,
//! * `y1 = grad f(p) . x`,
//! * `y_k = x_k - (p_k / p_m) x_m` for three indices `k != m`, leaving out
//!   the first `k` with a nonzero gradient entry.
//!
//! Then `f(S^-1 y) = y0^2 y1 + y0 Q + C`. A final shift of `y0` removes
//! every multiple of `y1` from `Q`, after which `p` is an Eckardt point iff
//! `Q = 0`.

use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::{CubicThreefold, ProjPoint};
use crate::algebra::linalg::{identity, inverse, mat_mul, Matrix};
use crate::algebra::{reduce_mod_prime, Monomial, MonomialOrder, MultiPoly, PolyRing};
use crate::consensus::{agree, Settings};
use crate::error::{Error, Result};
use crate::field::{FiniteField, Field, PrimeField, Rationals};
use crate::groebner::strata::count_projective;
use crate::groebner::{Caps, Ideal};

const TAG_INFLECTION: u64 = 0x1f00;

/// `f` in adapted coordinates at a point.
#[derive(Debug, Clone)]
pub struct Normalized<F: Field> {
    /// `x = T y`; the first column is the point.
    pub t: Matrix<F::Elem>,
    /// `y0^2 y1 + y0 Q + C`.
    pub form: MultiPoly<F::Elem>,
    /// Quadratic part attached to `y0`, free of `y1`.
    pub q: MultiPoly<F::Elem>,
    /// Cubic part free of `y0`.
    pub c: MultiPoly<F::Elem>,
}

impl<F: Field> Normalized<F> {
    pub fn is_eckardt(&self) -> bool {
        self.q.is_zero()
    }
}

/// Splits `q` as `y1 L + Q'` with `Q'` free of `y1`.
fn split_y1<F: Field>(ring: &PolyRing<F>, q: &MultiPoly<F::Elem>) -> (MultiPoly<F::Elem>, MultiPoly<F::Elem>) {
    let (with, without): (Vec<_>, Vec<_>) = q.terms().iter().cloned().partition(|(m, _)| m.exp(1) > 0);
    let l = with.into_iter().map(|(m, c)| (m.with_exp(1, m.exp(1) - 1), c)).collect();
    (ring.from_terms(l), ring.from_terms(without))
}

/// Coefficient of `y0^2 y_j`, which must be `delta_1j`, and of `y0^3`.
fn check_frame<F: Field>(ring: &PolyRing<F>, form: &MultiPoly<F::Elem>) -> Result<()> {
    let field = ring.field();
    let zero = field.zero();
    let coeff = |m: Monomial| form.coeff_of(&m).cloned().unwrap_or_else(|| zero.clone());
    let x0sq = Monomial::var(0).mul(&Monomial::var(0));
    let ok = field.is_zero(&coeff(x0sq.mul(&Monomial::var(0))))
        && (1..5).all(|j| {
            let c = coeff(x0sq.mul(&Monomial::var(j)));
            if j == 1 {
                field.is_one(&c)
            } else {
                field.is_zero(&c)
            }
        });
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(String::from("normalizing frame violates the coefficient conditions")))
    }
}

/// Normal form of the cubic `f` of `ring` at `p`.
pub fn normalize_form<F: Field>(ring: &PolyRing<F>, f: &MultiPoly<F::Elem>, p: &[F::Elem]) -> Result<Normalized<F>> {
    let field = ring.field();
    let m = p.iter().position(|c| !field.is_zero(c)).ok_or(Error::ZeroPoint)?;
    if !field.is_zero(&ring.eval(f, p)) {
        return Err(Error::NotOnCubic);
    }
    let g: Vec<F::Elem> = ring.gradient(f).iter().map(|d| ring.eval(d, p)).collect();
    let skip = (0..5).find(|&k| k != m && !field.is_zero(&g[k])).ok_or(Error::SingularPoint)?;
    let pm_inv = field.inv(&p[m]).unwrap();
    let mut s: Matrix<F::Elem> = Vec::with_capacity(5);
    let mut row = alloc::vec![field.zero(); 5];
    row[m] = pm_inv.clone();
    s.push(row);
    s.push(g);
    for k in (0..5).filter(|&k| k != m && k != skip) {
        let mut row = alloc::vec![field.zero(); 5];
        row[k] = field.one();
        row[m] = field.neg(&field.mul(&p[k], &pm_inv));
        s.push(row);
    }
    let t = inverse(field, &s).ok_or_else(|| Error::Internal(String::from("normalizing frame is singular")))?;
    let h = ring.linear_substitute(f, &t)?;
    let (l, _) = split_y1(ring, &ring.coeff_in(&h, 0, 1));
    // y0 -> y0 - L/2
    let half = field.inv(&field.from_i64(2)).unwrap();
    let mut u = identity(field, 5);
    for j in 1..5 {
        if let Some(c) = l.coeff_of(&Monomial::var(j)) {
            u[0][j] = field.neg(&field.mul(c, &half));
        }
    }
    let t = mat_mul(field, &t, &u);
    let form = ring.linear_substitute(f, &t)?;
    check_frame(ring, &form)?;
    let (l, q) = split_y1(ring, &ring.coeff_in(&form, 0, 1));
    if !l.is_zero() {
        return Err(Error::Internal(String::from("shift left a multiple of y1 in Q")));
    }
    let c = ring.coeff_in(&form, 0, 0);
    Ok(Normalized { t, form, q, c })
}

impl CubicThreefold {
    pub fn normalize_at(&self, p: &ProjPoint<BigRational>) -> Result<Normalized<Rationals>> {
        normalize_form(self.ring(), self.form(), p.coords())
    }
}

/// The plane cubic `C(0, x2, x3, x4)` of an Eckardt point.
#[derive(Debug, Clone)]
pub struct EllipticCurveModel<F: Field> {
    /// `F[x2, x3, x4]`.
    pub plane: PolyRing<F>,
    pub curve: MultiPoly<F::Elem>,
    pub normalized: Normalized<F>,
}

fn plane_ring<F: Field>(field: F) -> PolyRing<F> {
    let names = ["x2", "x3", "x4"].iter().map(|s| String::from(*s)).collect();
    PolyRing::new(field, names, MonomialOrder::GrevLex).expect("three variables")
}

fn is_smooth_plane<F: Field>(plane: &PolyRing<F>, c: &MultiPoly<F::Elem>, caps: &Caps) -> Result<bool> {
    let gb = Ideal::new(plane.clone(), plane.gradient(c)).groebner(caps)?;
    Ok(gb.contains_irrelevant_power(3))
}

/// Elliptic curve model over any field from the normal form at `p`.
pub fn elliptic_model<F: Field>(ring: &PolyRing<F>, f: &MultiPoly<F::Elem>, p: &[F::Elem], caps: &Caps) -> Result<EllipticCurveModel<F>> {
    let normalized = normalize_form(ring, f, p)?;
    if !normalized.is_eckardt() {
        return Err(Error::NotEckardt);
    }
    let plane = plane_ring(ring.field().clone());
    let terms: Vec<_> = normalized.c.terms().iter().filter(|(m, _)| m.exp(1) == 0).cloned().collect();
    let curve = ring
        .transfer(&ring.from_terms(terms), &plane, &[0, 0, 0, 1, 2], |c| Some(c.clone()))
        .unwrap();
    if !is_smooth_plane(&plane, &curve, caps)? {
        return Err(Error::Internal(String::from("the elliptic curve of an Eckardt point is singular")));
    }
    Ok(EllipticCurveModel { plane, curve, normalized })
}

/// The elliptic curve `E_p` of a rational Eckardt point.
pub fn elliptic_curve_at(cubic: &CubicThreefold, p: &ProjPoint<BigRational>, caps: &Caps) -> Result<EllipticCurveModel<Rationals>> {
    elliptic_model(cubic.ring(), cubic.form(), p.coords(), caps)
}

fn hessian<F: Field>(plane: &PolyRing<F>, c: &MultiPoly<F::Elem>) -> MultiPoly<F::Elem> {
    let grad = plane.gradient(c);
    let m: Vec<Vec<MultiPoly<F::Elem>>> = grad.iter().map(|g| plane.gradient(g)).collect();
    plane.det(&m)
}

/// `(with multiplicity, distinct)` points of `C = H = 0` in `P^2`.
pub fn inflection_counts<F: FiniteField>(
    plane: &PolyRing<F>,
    c: &MultiPoly<F::Elem>,
    trials: usize,
    caps: &Caps,
    seed: impl Fn(usize) -> u64,
) -> Result<(usize, usize)> {
    let h = hessian(plane, c);
    let counts = count_projective(plane, &[c.clone(), h], trials, caps, seed)?;
    Ok((counts.iter().map(|s| s.multiplicity).sum(), counts.iter().map(|s| s.distinct).sum()))
}

/// Inflection points of a rational elliptic curve model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflectionReport {
    pub with_multiplicity: usize,
    pub distinct: usize,
    pub primes_used: Vec<u32>,
    pub unanimous: bool,
}

/// Counts flexes modulo each prime with consensus; primes where the curve
/// acquires a singularity are replaced.
pub fn inflection_analysis(model: &EllipticCurveModel<Rationals>, settings: &Settings) -> Result<InflectionReport> {
    settings.validate()?;
    let c = agree(&settings.primes, |p| {
        let plane = model.plane.over(PrimeField::new(p)?);
        let (curve, _) = reduce_mod_prime(&model.plane, &model.curve, &plane)?;
        if curve.is_zero() || !is_smooth_plane(&plane, &curve, &settings.caps)? {
            return Err(Error::BadPrime(p));
        }
        inflection_counts(&plane, &curve, settings.trials, &settings.caps, |s| settings.task_seed(p, TAG_INFLECTION + s as u64))
    })?;
    Ok(InflectionReport {
        with_multiplicity: c.value.0,
        distinct: c.value.1,
        primes_used: c.primes_used,
        unanimous: c.unanimous,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::builtin;

    #[test]
    fn x1_at_its_eckardt_point() {
        let x1 = builtin("x1").unwrap();
        let p = ProjPoint::from_integers(&[0, 1, 0, 0, 0]).unwrap();
        let n = x1.normalize_at(&p).unwrap();
        assert!(n.is_eckardt());
        let e = elliptic_curve_at(&x1, &p, &Caps::default()).unwrap();
        assert_eq!(e.plane.display(&e.curve), e.plane.display(&e.plane.parse("x2^2*x3 + x3^2*x4 + x4^3").unwrap()));
        let r = inflection_analysis(&e, &Settings::default()).unwrap();
        assert_eq!((r.with_multiplicity, r.distinct), (9, 9));
    }

    #[test]
    fn fermat_at_a_rational_eckardt_point() {
        let f = builtin("fermat").unwrap();
        let p = ProjPoint::from_integers(&[1, -1, 0, 0, 0]).unwrap();
        let e = elliptic_curve_at(&f, &p, &Caps::default()).unwrap();
        assert_eq!(e.curve.total_degree(), Some(3));
        assert_eq!(inflection_analysis(&e, &Settings::default()).unwrap().distinct, 9);
    }

    #[test]
    fn non_eckardt_point() {
        let k = builtin("klein").unwrap();
        let p = ProjPoint::from_integers(&[1, 0, 0, 0, 0]).unwrap();
        let n = k.normalize_at(&p).unwrap();
        assert!(!n.is_eckardt());
        assert!(!k.is_eckardt(&p).unwrap());
        assert_eq!(elliptic_curve_at(&k, &p, &Caps::default()).unwrap_err(), Error::NotEckardt);
    }

    #[test]
    fn fermat_plane_cubic_flexes() {
        let plane = plane_ring(PrimeField::new(7).unwrap());
        let c = plane.parse("x2^3 + x3^3 + x4^3").unwrap();
        assert_eq!(inflection_counts(&plane, &c, 3, &Caps::default(), |s| s as u64).unwrap(), (9, 9));
    }
}
