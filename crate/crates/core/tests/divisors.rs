mod common;

use std::collections::BTreeSet;

use common::{e1, r, strategies, sys};
use proptest::prelude::*;
use qsinf::comitants;
use qsinf::corpus::{fuzz_corpus, sigma_fixtures};
use qsinf::divisors::{
    delta_s, describe_point, divisor_cz, divisors, finite_intersection_oracle, Divisor, OracleInapplicable,
};
use qsinf::poly::{int, ProjPoint};
use qsinf::system::{AffineMap, QuadraticSystem};

fn all(s: &QuadraticSystem) -> qsinf::divisors::Divisors {
    divisors(&comitants::compute(s).unwrap()).unwrap()
}

fn render(d: &Divisor<usize>) -> Vec<String> {
    d.entries.iter().map(|(w, m)| format!("{m}{w}")).collect()
}

/// Shear in the x direction; moves common points off `[0:1]`.
fn shear() -> AffineMap {
    AffineMap::linear([[int(1), r(3, 2)], [int(0), int(1)]]).unwrap()
}

#[test]
fn worked_example_cz_divisor() {
    let d = all(&e1());
    assert_eq!(render(&d.cz), ["1[0:1]", "1[1:0]", "1[1:1]"]);
    assert!(d.pq.is_empty());
    assert_eq!(d.summary.delta_s, 0);
    assert_eq!(d.summary.cz_type, BTreeSet::from([(3, 1)]));
}

#[test]
fn triple_vertical_point() {
    // x' = y, y' = -x^2 gives C2 = x^3.
    let s = sys([0, 0, 1, 0, 0, 0], [0, 0, 0, -1, 0, 0]);
    let cz = divisor_cz(&comitants::compute(&s).unwrap());
    assert_eq!(render(&cz), ["3[0:1]"]);
    assert_eq!(cz.divisor_type(), BTreeSet::from([(0, 1), (0, 2), (1, 3)]));
}

#[test]
fn negative_eta_gives_complex_pair() {
    // x' = 2xy, y' = y^2 - x^2 has C2 = x(x^2 + y^2).
    let s = sys([0, 0, 0, 0, 2, 0], [0, 0, 0, -1, 0, 1]);
    let d = all(&s);
    let complex: Vec<_> = d.cz.support().filter(|w| !w.is_real()).collect();
    assert_eq!(complex.len(), 2);
    let desc = describe_point(complex[0]);
    assert!(!desc.real);
    assert!(desc.u_im.is_some());
    assert_eq!(describe_point(&ProjPoint::vertical()).exact, "[0:1]");
}

#[test]
fn delta_s_on_reference_systems() {
    assert_eq!(delta_s(&comitants::compute(&e1()).unwrap()).unwrap(), 0);
    // x' = x + y, y' = -xy: two simple common points at infinity.
    let s = sys([0, 1, 1, 0, 0, 0], [0, 0, 0, 0, -1, 0]);
    assert_eq!(render(&all(&s).pq), ["1[0:1]", "1[1:0]"]);
    // x' = -xy, y' = -xy - 1: two double ones, no finite point left.
    let s = sys([0, 0, 0, 0, -1, 0], [-1, 0, 0, 0, -1, 0]);
    let d = all(&s);
    assert_eq!(render(&d.pq), ["2[0:1]", "2[1:0]"]);
    assert_eq!(d.summary.delta_s, 4);
    // x' = -1, y' = -x^2 - y^2: a double complex pair.
    let s = sys([-1, 0, 0, 0, 0, 0], [0, 0, 0, -1, 0, -1]);
    assert_eq!(all(&s).summary.delta_s, 4);
}

#[test]
fn finite_oracle_reference_values() {
    assert_eq!(finite_intersection_oracle(&e1()), Ok(4));
    assert_eq!(finite_intersection_oracle(&sys([-1, 0, 0, 1, 0, 0], [-1, 0, 0, 0, 0, 1])), Ok(4));
    assert_eq!(finite_intersection_oracle(&sys([-1, 0, 0, 0, 0, 0], [0, 0, 0, -1, 0, -1])), Ok(0));
    assert_eq!(
        finite_intersection_oracle(&sys([0, 0, 0, 0, -1, 0], [-1, 0, 0, 0, -1, 0])),
        Err(OracleInapplicable::VerticalCommonPoint)
    );
}

#[test]
fn every_sigma_fixture_balances_after_shear() {
    for f in sigma_fixtures() {
        let s = f.system().apply_affine(&shear());
        let d = all(&s);
        let finite = finite_intersection_oracle(&s).unwrap_or_else(|e| panic!("Sigma {}: {e:?}", f.target));
        assert_eq!(d.summary.delta_s + finite, 4, "Sigma {} {s}", f.target);
    }
}

#[test]
fn corpus_divisor_structure() {
    for entry in fuzz_corpus(5, 300) {
        let d = all(&entry.system);
        assert_eq!(d.cz.degree(), 3, "{}", entry.system);
        assert_eq!(d.pq.degree(), d.summary.delta_s);
        assert!(d.summary.delta_s <= 4);
        for w in d.pq.support() {
            assert!(d.cz.support().any(|v| v == w), "{} not on C2 = 0", w);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bezout_balance(s in strategies::system()) {
        if let Ok(finite) = finite_intersection_oracle(&s) {
            prop_assert_eq!(all(&s).summary.delta_s + finite, 4);
        }
    }

    #[test]
    fn divisor_types_survive_shear(s in strategies::system()) {
        let before = all(&s).summary;
        let after = all(&s.apply_affine(&shear())).summary;
        prop_assert_eq!(before.cz_type, after.cz_type);
        prop_assert_eq!(before.pq_type, after.pq_type);
        prop_assert_eq!(before.delta_s, after.delta_s);
    }
}
