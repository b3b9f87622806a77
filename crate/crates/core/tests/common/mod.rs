//! Independent oracles shared by the property suites and the acceptance
//! target: brute-force enumeration, the three Eckardt characterizations, a
//! cell census over `F_2` and `F_3`, and identity checks on random cubics.
#![allow(dead_code)]

use std::collections::BTreeSet;

use eckardt_core::algebra::linalg::rank;
use eckardt_core::algebra::{Monomial, MonomialOrder, MultiPoly, PolyRing};
use eckardt_core::consensus::Settings;
use eckardt_core::cubic::{
    builtin, is_smooth_mod, normalize_form, polar_at, symbolic_minors, symbolic_polar, CubicThreefold, BUILTIN_NAMES,
};
use eckardt_core::fano::{cells, locate};
use eckardt_core::field::{Field, FieldDescriptor, PrimeField, Rationals};
use eckardt_core::groebner::{Caps, Ideal};
use eckardt_core::rng::seeded;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand_core::RngCore;

/// Exponent vector and integer coefficient.
pub type Term = (Vec<u8>, i64);

pub fn poly(ring: &PolyRing<PrimeField>, terms: &[Term]) -> MultiPoly<u32> {
    let f = ring.field();
    ring.from_terms(terms.iter().map(|(e, c)| (Monomial::from_exponents(e), f.from_i64(*c))).collect())
}

pub fn random_terms(rng: &mut impl RngCore, nvars: usize, max_deg: u8, len: usize) -> Vec<Term> {
    let n = 1 + (rng.next_u64() % len as u64) as usize;
    (0..n)
        .map(|_| {
            let e = (0..nvars).map(|_| (rng.next_u64() % (max_deg as u64 + 1)) as u8).collect();
            (e, (rng.next_u64() % 7) as i64 - 3)
        })
        .collect()
}

fn all_points(q: u64, n: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..q.pow(n as u32)).map(move |mut k| {
        (0..n)
            .map(|_| {
                let d = k % q;
                k /= q;
                d as u32
            })
            .collect()
    })
}

/// Distinct-count oracle on one random system over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCase {
    /// Rational zeros found by enumeration.
    pub expected: usize,
    /// Geometric points reported by the quotient-ring count.
    pub got: usize,
    /// The basis passes S-polynomial certification and contains the input.
    pub certified: bool,
}

/// Adding `x_i^p - x_i` makes every point rational and reduced, so the
/// geometric count must equal the number of zeros in `F_p^n`.
pub fn oracle_case(p: u32, nvars: usize, raw: &[Vec<Term>], seed: u64) -> OracleCase {
    let ring = PolyRing::with_prefix(PrimeField::new(p).unwrap(), "x", nvars, MonomialOrder::GrevLex).unwrap();
    let mut gens: Vec<MultiPoly<u32>> = raw.iter().map(|t| poly(&ring, t)).collect();
    let expected = all_points(p as u64, nvars).filter(|pt| gens.iter().all(|g| ring.eval(g, pt) == 0)).count();
    for i in 0..nvars {
        let mut exps = vec![0; nvars];
        exps[i] = p as u8;
        let one = ring.field().one();
        gens.push(ring.from_terms(vec![(Monomial::from_exponents(&exps), one), (Monomial::var(i), ring.field().from_i64(-1))]));
    }
    let gb = Ideal::new(ring.clone(), gens.clone()).groebner(&Caps::default()).unwrap();
    let certified = gb.certify() && gens.iter().all(|g| gb.contains(g));
    let got = if gb.contains_one() { 0 } else { gb.distinct_point_count(5, &mut seeded(seed)).unwrap().distinct_count };
    OracleCase { expected, got, certified }
}

/// Seeded batch of oracle cases over `F_5` (three variables) and `F_7` (two).
pub fn oracle_batch(seed: u64, per_field: usize) -> Vec<(u32, OracleCase)> {
    let mut rng = seeded(seed);
    let mut out = Vec::new();
    for (p, nvars, max_deg) in [(5u32, 3usize, 2u8), (7, 2, 3)] {
        for _ in 0..per_field {
            let count = 1 + (rng.next_u64() % 3) as usize;
            let raw: Vec<Vec<Term>> = (0..count).map(|_| random_terms(&mut rng, nvars, max_deg, 4)).collect();
            out.push((p, oracle_case(p, nvars, &raw, rng.next_u64())));
        }
    }
    out
}

/// Outcome of comparing the Eckardt characterizations on `F_p`-points.
#[derive(Debug, Clone, Default)]
pub struct EckardtAgreement {
    pub checked: usize,
    pub eckardt: usize,
    pub disagreements: Vec<String>,
}

fn projective_points(p: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..5usize).flat_map(move |s| {
        (0..(p as u64).pow(4 - s as u32)).map(move |mut k| {
            let mut v = vec![0u32; 5];
            v[s] = 1;
            for c in v.iter_mut().skip(s + 1) {
                *c = (k % p as u64) as u32;
                k /= p as u64;
            }
            v
        })
    })
}

/// Vanishing 3x3 minors, polar rank at most 2, and a vanishing quadratic part
/// of the normal form must agree at every point of every built-in cubic with
/// good reduction mod `p`.
pub fn eckardt_agreement(primes: &[u32]) -> EckardtAgreement {
    let settings = Settings::default();
    let mut out = EckardtAgreement::default();
    for name in BUILTIN_NAMES {
        let cubic = builtin(name).unwrap();
        for &p in primes {
            if !is_smooth_mod(&cubic, p, &settings).unwrap() {
                continue;
            }
            let field = PrimeField::new(p).unwrap();
            let (ring, f) = cubic.reduce(p).unwrap();
            let tensor = cubic.tensor_over(&field).unwrap();
            let minors = symbolic_minors(&ring, &symbolic_polar(&ring, &tensor));
            for pt in projective_points(p).filter(|pt| ring.eval(&f, pt) == 0) {
                let by_minors = minors.iter().all(|m| ring.eval(m, &pt) == 0);
                let by_rank = rank(&field, &polar_at(&field, &tensor, &pt)) <= 2;
                let by_normal_form = normalize_form(&ring, &f, &pt).unwrap().is_eckardt();
                let by_api = cubic.is_eckardt_over(&field, &pt).unwrap();
                if !(by_minors == by_rank && by_rank == by_normal_form && by_rank == by_api) {
                    out.disagreements.push(format!("{name} mod {p} at {pt:?}"));
                }
                out.checked += 1;
                out.eckardt += by_rank as usize;
            }
        }
    }
    out
}

/// `F_2` and `F_3`, which the library's prime fields exclude.
#[derive(Debug, Clone)]
pub struct Tiny(pub u8);

impl Field for Tiny {
    type Elem = u8;

    fn zero(&self) -> u8 {
        0
    }
    fn one(&self) -> u8 {
        1
    }
    fn is_zero(&self, a: &u8) -> bool {
        *a == 0
    }
    fn add(&self, a: &u8, b: &u8) -> u8 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u8, b: &u8) -> u8 {
        (a + self.0 - b) % self.0
    }
    fn neg(&self, a: &u8) -> u8 {
        (self.0 - a) % self.0
    }
    fn mul(&self, a: &u8, b: &u8) -> u8 {
        (a * b) % self.0
    }
    fn inv(&self, a: &u8) -> Option<u8> {
        (1..self.0).find(|b| self.mul(a, b) == 1)
    }
    fn from_i64(&self, n: i64) -> u8 {
        n.rem_euclid(self.0 as i64) as u8
    }
    fn from_rational(&self, q: &BigRational) -> Option<u8> {
        let p = BigInt::from(self.0);
        let num = q.numer().mod_floor(&p).to_i64()?;
        let den = q.denom().mod_floor(&p).to_i64()?;
        self.div(&self.from_i64(num), &self.from_i64(den))
    }
    fn characteristic(&self) -> u64 {
        self.0 as u64
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::PrimeField(self.0 as u32)
    }
    fn display(&self, a: &u8) -> String {
        a.to_string()
    }
}

pub fn gaussian_5_2(q: usize) -> usize {
    (q.pow(5) - 1) * (q.pow(4) - 1) / ((q.pow(2) - 1) * (q - 1))
}

/// Lines of `P^4(F_q)` found by locating every pair of vectors. Errors if a
/// cell has the wrong size or a representative does not locate to itself.
pub fn cell_census(q: u8) -> Result<usize, String> {
    let field = Tiny(q);
    let vs: Vec<Vec<u8>> = all_points(q as u64, 5).map(|v| v.into_iter().map(|c| c as u8).collect()).collect();
    let mut lines: BTreeSet<((usize, usize), Vec<u8>)> = BTreeSet::new();
    for a in &vs {
        for b in &vs {
            if let Some((cell, coords)) = locate(&field, a, b) {
                let [r0, r1] = cell.rows_at(&field, &coords);
                if locate(&field, &r0, &r1) != Some((cell, coords.clone())) {
                    return Err(format!("representative of cell {} does not round-trip", cell.label()));
                }
                lines.insert((cell.pivots(), coords));
            }
        }
    }
    for cell in cells() {
        let size = lines.iter().filter(|(piv, _)| *piv == cell.pivots()).count();
        if size != (q as usize).pow(cell.dim() as u32) {
            return Err(format!("cell {} has {size} lines over F_{q}", cell.label()));
        }
    }
    Ok(lines.len())
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn cubic_monomials() -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..5 {
        for b in a..5 {
            for c in b..5 {
                out.push(Monomial::var(a).mul(&Monomial::var(b)).mul(&Monomial::var(c)));
            }
        }
    }
    out
}

pub fn cubic_from_coeffs(coeffs: &[i64]) -> Option<CubicThreefold> {
    let ring = PolyRing::with_prefix(Rationals, "x", 5, MonomialOrder::GrevLex).unwrap();
    let terms = cubic_monomials().into_iter().zip(coeffs).map(|(m, &c)| (m, q(c))).collect();
    CubicThreefold::new(ring.from_terms(terms)).ok()
}

/// Euler's identity at a point and `f(T x)` at `v` against `f` at `T v`.
pub fn identities_hold(cubic: &CubicThreefold, t: &[Vec<BigRational>], v: &[BigRational]) -> bool {
    let r = cubic.ring();
    let euler: BigRational = (0..5).map(|i| &v[i] * r.eval(&cubic.gradient()[i], v)).sum();
    if cubic.check_euler().is_err() || euler != q(3) * cubic.eval(v) {
        return false;
    }
    let tv: Vec<BigRational> = t.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect();
    match cubic.transform(t) {
        Ok(g) => g.eval(v) == cubic.eval(&tv),
        Err(_) => r.linear_substitute(cubic.form(), &t.to_vec()).unwrap().is_zero(),
    }
}

/// Seeded random cubics and substitutions; returns the number checked and
/// the failures.
pub fn identity_batch(seed: u64, cases: usize) -> (usize, usize) {
    let mut rng = seeded(seed);
    let mut small = |r: u64| (rng.next_u64() % (2 * r + 1)) as i64 - r as i64;
    let mut checked = 0;
    let mut failures = 0;
    while checked < cases {
        let coeffs: Vec<i64> = (0..35).map(|_| if small(2) > 0 { small(5) } else { 0 }).collect();
        let Some(cubic) = cubic_from_coeffs(&coeffs) else { continue };
        let t: Vec<Vec<BigRational>> = (0..5).map(|_| (0..5).map(|_| q(small(4))).collect()).collect();
        let v: Vec<BigRational> = (0..5).map(|_| q(small(4))).collect();
        checked += 1;
        failures += !identities_hold(&cubic, &t, &v) as usize;
    }
    (checked, failures)
}
