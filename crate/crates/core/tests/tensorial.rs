mod common;

use common::{e1, member, poly, strategies, sys};
use proptest::prelude::*;
use qsinf::comitants;
use qsinf::poly::{int, Poly2};
use qsinf::system::QuadraticSystem;
use qsinf::tensorial::{correspondence_check, tensor_invariants, tilde_set, TensorCoefficients};

fn invariants(s: &QuadraticSystem) -> qsinf::tensorial::TensorInvariants {
    tensor_invariants(&TensorCoefficients::from_system(s))
}

fn failing(s: &QuadraticSystem) -> Vec<&'static str> {
    let set = comitants::compute(s).unwrap();
    correspondence_check(s, &set).into_iter().filter(|c| !c.holds).map(|c| c.identity).collect()
}

#[test]
fn linear_field_traces() {
    let t = invariants(&sys([0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]));
    assert_eq!(t.jj(1), int(2));
    assert_eq!(t.jj(2), int(2));
    for i in 3..=7 {
        assert_eq!(t.jj(i), int(0), "J{i}");
    }
}

#[test]
fn worked_example_tensor_values() {
    let t = invariants(&e1());
    assert_eq!(t.jj(4), int(2));
    let ti = tilde_set(&t);
    assert_eq!(ti.m, poly(&[(2, 0, -1), (1, 1, 1), (0, 2, -1)]));
    assert_eq!(ti.n, poly(&[(1, 1, 1)]));
    assert_eq!(ti.mu, int(1));
    assert_eq!(ti.eta, int(1));
    assert_eq!(ti.theta, int(0));
}

#[test]
fn constant_term_enters_r9() {
    let t = invariants(&sys([1, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]));
    assert_eq!(t.jj(3), int(1));
    assert_eq!(t.rr(9), &poly(&[(0, 1, 1)]));
    assert_eq!(invariants(&e1()).rr(9), &Poly2::zero());
}

#[test]
fn worked_example_only_kappa_fails() {
    assert_eq!(failing(&e1()), vec!["kappa = 64 theta~"]);
}

#[test]
fn third_canonical_family_identities() {
    let grid = [-2, -1, 0, 1, 3];
    let mut checked = 0;
    for (i, &g) in grid.iter().enumerate() {
        for &h in &grid[i..] {
            let s = member("S_III", &[g, h, 1, -1, 2, 0, 1, h]);
            if s.validate().is_err() {
                continue;
            }
            let bad: Vec<_> = failing(&s).into_iter().filter(|id| !id.starts_with("kappa")).collect();
            assert!(bad.is_empty(), "{s}: {bad:?}");
            checked += 1;
        }
    }
    assert!(checked > 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn identities_hold_except_kappa(s in strategies::system()) {
        let bad: Vec<_> = failing(&s).into_iter().filter(|id| !id.starts_with("kappa")).collect();
        prop_assert!(bad.is_empty(), "{}: {:?}", s, bad);
    }

    #[test]
    fn tilde_invariants_are_affine_invariant(s in strategies::system(), a in strategies::coefficient(), b in strategies::coefficient()) {
        let before = tilde_set(&invariants(&s));
        let after = tilde_set(&invariants(&s.translate(&a, &b)));
        prop_assert_eq!(before.mu, after.mu);
        prop_assert_eq!(before.eta, after.eta);
        prop_assert_eq!(before.m, after.m);
        prop_assert_eq!(before.n, after.n);
    }
}
