//! Randomized checks of the cubic pipeline: the three Eckardt
//! characterizations on every `F_p`-point, Euler and substitution identities,
//! and invariance of the counts under coordinate changes.

mod common;

use common::q;
use eckardt_core::consensus::Settings;
use eckardt_core::cubic::{builtin, eckardt_geometric, CubicThreefold};
use eckardt_core::fano::triple_line_count;
use eckardt_core::field::{Field, PrimeField};
use num_rational::BigRational;
use proptest::prelude::*;

#[test]
fn eckardt_characterizations_agree() {
    let r = common::eckardt_agreement(&[11, 13]);
    assert!(r.disagreements.is_empty(), "{:?}", r.disagreements);
    assert!(r.checked >= 200, "{}", r.checked);
    assert!(r.eckardt > 0);
}

fn random_cubic() -> impl Strategy<Value = CubicThreefold> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -5i64..=5], 35)
        .prop_filter_map("nonzero", |c| common::cubic_from_coeffs(&c))
}

fn int_vec(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_and_substitution(cubic in random_cubic(), t in int_vec(25), v in int_vec(5)) {
        let t: Vec<Vec<BigRational>> = t.chunks(5).map(|row| row.iter().map(|&x| q(x)).collect()).collect();
        let v: Vec<BigRational> = v.into_iter().map(q).collect();
        prop_assert!(common::identities_hold(&cubic, &t, &v));
        for (i, j, k) in [(0, 1, 2), (1, 3, 3), (4, 0, 4)] {
            prop_assert_eq!(cubic.third_partial(i, j, k), cubic.third_partial(k, i, j));
            prop_assert_eq!(cubic.third_partial(i, j, k), cubic.third_partial(j, k, i));
        }
    }

    #[test]
    fn reduction_commutes_with_evaluation(cubic in random_cubic(), v in int_vec(5)) {
        let p = 32003;
        let field = PrimeField::new(p).unwrap();
        let vq: Vec<BigRational> = v.iter().map(|&x| q(x)).collect();
        let vp: Vec<u32> = v.iter().map(|&x| field.reduce_i64(x)).collect();
        let (ring, f) = cubic.reduce(p).unwrap();
        prop_assert_eq!(ring.eval(&f, &vp), field.from_rational(&cubic.eval(&vq)).unwrap());
    }
}

/// Counts are invariant under permutations and rescaling of coordinates.
#[test]
fn counts_are_equivariant() {
    let settings = Settings::default();
    let transforms: [[i64; 25]; 3] = [
        // swap x0 and x3
        [0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        // cyclic shift
        [0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
        // diagonal scaling
        [2, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 5],
    ];
    for (name, n_e, n_t) in [("x1", 1, 9), ("x3", 2, 39)] {
        let cubic = builtin(name).unwrap();
        for t in &transforms {
            let t: Vec<Vec<BigRational>> = t.chunks(5).map(|row| row.iter().map(|&x| q(x)).collect()).collect();
            let g = cubic.transform(&t).unwrap();
            assert_eq!(eckardt_geometric(&g, &settings).unwrap().total, n_e, "{name}");
            assert_eq!(triple_line_count(&g, &settings).unwrap().total, n_t, "{name}");
        }
    }
}
