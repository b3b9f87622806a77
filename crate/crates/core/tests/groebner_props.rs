//! Gröbner bases against brute force over small prime fields.

use eckardt_core::algebra::{MonomialOrder, MultiPoly, PolyRing};
use eckardt_core::field::{ExtensionField, Field, FiniteField, PrimeField};
use eckardt_core::groebner::{saturate, Caps, Ideal};
use eckardt_core::rng::seeded;
use eckardt_core::Error;
use proptest::prelude::*;

mod common;

use common::{oracle_case, poly, Term};

fn terms(nvars: usize, max_deg: u8, len: usize) -> impl Strategy<Value = Vec<Term>> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, nvars), -3i64..=3), 1..=len)
}

fn check_against_brute_force(p: u32, nvars: usize, raw: &[Vec<Term>], seed: u64) -> Result<(), TestCaseError> {
    let case = oracle_case(p, nvars, raw, seed);
    prop_assert!(case.certified);
    prop_assert_eq!(case.got, case.expected);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn distinct_count_matches_enumeration_f5(raw in prop::collection::vec(terms(3, 2, 4), 1..=3), seed: u64) {
        check_against_brute_force(5, 3, &raw, seed)?;
    }

    #[test]
    fn distinct_count_matches_enumeration_f7(raw in prop::collection::vec(terms(2, 3, 4), 1..=2), seed: u64) {
        check_against_brute_force(7, 2, &raw, seed)?;
    }

    #[test]
    fn bases_certify_over_f_p(raw in prop::collection::vec(terms(3, 3, 5), 1..=4)) {
        let ring = PolyRing::with_prefix(PrimeField::new(32003).unwrap(), "x", 3, MonomialOrder::GrevLex).unwrap();
        let gens: Vec<MultiPoly<u32>> = raw.iter().map(|t| poly(&ring, t)).collect();
        let gb = Ideal::new(ring.clone(), gens.clone()).groebner(&Caps::default()).unwrap();
        prop_assert!(gb.certify());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        // lex bases of dense systems may legitimately exceed the caps
        let lex = ring.with_order(MonomialOrder::Lex);
        let g2: Vec<MultiPoly<u32>> = gens.iter().map(|g| lex.import(g)).collect();
        match Ideal::new(lex, g2).groebner(&Caps::default()) {
            Ok(gb2) => {
                prop_assert!(gb2.certify());
                prop_assert_eq!(gb2.contains_one(), gb.contains_one());
            }
            Err(e) => prop_assert!(matches!(e, Error::DegreeCap { .. } | Error::BasisCap { .. }), "{e}"),
        }
    }

    #[test]
    fn saturation_is_stable(raw in prop::collection::vec(terms(3, 2, 3), 1..=3), h in terms(3, 1, 2)) {
        let ring = PolyRing::with_prefix(PrimeField::new(101).unwrap(), "x", 3, MonomialOrder::GrevLex).unwrap();
        let i = Ideal::new(ring.clone(), raw.iter().map(|t| poly(&ring, t)).collect());
        let j = Ideal::new(ring.clone(), vec![poly(&ring, &h)]);
        prop_assume!(!j.gens().is_empty());
        let caps = Caps::default();
        let once = saturate(&i, &j, &caps).unwrap();
        let twice = saturate(&once, &j, &caps).unwrap();
        let a = once.groebner(&caps).unwrap();
        let b = twice.groebner(&caps).unwrap();
        prop_assert!(a.certify() && b.certify());
        for g in i.gens() {
            prop_assert!(a.contains(g));
        }
        for g in b.basis() {
            prop_assert!(a.contains(g));
        }
        for g in a.basis() {
            prop_assert!(b.contains(g));
        }
    }
}

/// Geometric counts over `F_25`: points of `x^25 = x` systems enumerated in
/// the extension, compared with the count computed over `F_5`.
#[test]
fn distinct_count_sees_conjugate_points() {
    let base = PrimeField::new(5).unwrap();
    let ring = PolyRing::with_prefix(base, "x", 2, MonomialOrder::GrevLex).unwrap();
    let ext = ExtensionField::of_degree(base, 2).unwrap();
    let ext_ring = ring.over(ext.clone());
    let cases = ["x0^2 - 2", "x0^2 + x1^2 - 3", "x0*x1 - 1", "x0^3 + x1 + 1"];
    for (n, text) in cases.iter().enumerate() {
        let g = ring.parse(text).unwrap();
        let mut gens = vec![g.clone()];
        for i in 0..2 {
            gens.push(ring.parse(&format!("x{i}^25 - x{i}")).unwrap());
        }
        let gb = Ideal::new(ring.clone(), gens).groebner(&Caps::default()).unwrap();
        assert!(gb.certify());
        let count = gb.distinct_point_count(5, &mut seeded(n as u64)).unwrap().distinct_count;
        let g_ext = ring.transfer(&g, &ext_ring, &[0, 1], |c| Some(ext.from_base(*c))).unwrap();
        let mut expected = 0;
        for a in 0..25u128 {
            for b in 0..25u128 {
                if ext.is_zero(&ext_ring.eval(&g_ext, &[ext.element(a), ext.element(b)])) {
                    expected += 1;
                }
            }
        }
        assert_eq!(count, expected, "{text}");
    }
}
