mod common;

use std::collections::BTreeSet;

use common::{e1, member, sys};
use qsinf::classify::canonical::{canonical_reduce, Family};
use qsinf::classify::tables::{FIGURE_ROWS, GEOMETRY_ROWS, SIGMA_ROWS};
use qsinf::classify::{classify, geometric_invariants, ClassifyError, DszType};
use qsinf::corpus::{figure_fixtures, fuzz_corpus, sigma_fixtures};
use qsinf::poly::int;

fn fused(c: &qsinf::classify::Classification) -> Vec<String> {
    c.fused
        .iter()
        .map(|e| format!("{}:{}:{}:{}:{:?}", e.point, e.label, e.i_cz, e.i_pq, e.j))
        .collect()
}

#[test]
fn worked_example_classification() {
    let c = classify(&e1()).unwrap();
    assert_eq!(c.dsz, DszType::ThreeReal);
    assert_eq!(c.sigma, 1);
    assert_eq!(c.figure, 5);
    assert_eq!(c.pattern(), "(1,0,1)p+(1,0,1)q+(1,0,-1)r");
    let g = c.geometry;
    assert_eq!((g.n_r, g.n_hsect), (3, 4));
    assert_eq!(g.o, [2, 1, 1, 2, 1, 1]);
}

#[test]
fn dsz_strata() {
    assert_eq!(classify(&e1()).unwrap().dsz.label(), 1);
    let complex = classify(&sys([0, 0, 0, 0, 2, 0], [0, 0, 0, -1, 0, 1])).unwrap();
    assert_eq!(complex.dsz, DszType::OneRealTwoComplex);
    assert_eq!(complex.dsz.divisor(), "q1c+q2c+q3");
    let double = classify(&sys([0, 0, 0, 1, 1, 0], [1, 0, 0, 0, 0, 1])).unwrap();
    assert_eq!(double.dsz, DszType::DoublePlusSimple);
    let triple = classify(&sys([0, 0, 1, 0, 0, 0], [0, 0, 0, -1, 0, 0])).unwrap();
    assert_eq!(triple.dsz, DszType::Triple);
    assert_eq!(triple.dsz.divisor(), "3q");
}

#[test]
fn reference_sigma_classes() {
    // x' = x + y, y' = -xy
    assert_eq!(classify(&sys([0, 1, 1, 0, 0, 0], [0, 0, 0, 0, -1, 0])).unwrap().sigma, 15);
    // x' = -1, y' = -x^2 - y^2
    assert_eq!(classify(&sys([-1, 0, 0, 0, 0, 0], [0, 0, 0, -1, 0, -1])).unwrap().sigma, 30);
    // x' = -xy, y' = -xy - 1
    assert_eq!(classify(&sys([0, 0, 0, 0, -1, 0], [-1, 0, 0, 0, -1, 0])).unwrap().sigma, 28);
}

#[test]
fn triple_point_of_figure_forty() {
    let c = classify(&member("S41a", &[-1, 0, 0])).unwrap();
    assert_eq!(c.figure, 40);
    assert_eq!(c.sigma, 17);
    assert_eq!(fused(&c), ["[0:1]:p:3:2:Some(-1)"]);
}

#[test]
fn semi_hyperbolic_points_are_told_apart() {
    // Two points with I_CZ = 1, I_PQ = 2 and opposite indices.
    let c = classify(&sys([3, 0, 0, 0, -1, 0], [0, 0, 0, 0, -3, 0])).unwrap();
    assert_eq!(c.figure, 5);
    assert_eq!(c.pattern(), "(1,2,1)p+(1,0,1)q+(1,2,-1)r");
    assert_eq!(fused(&c), ["[1:0]:p:1:2:Some(1)", "[1:3]:q:1:0:Some(1)", "[0:1]:r:1:2:Some(-1)"]);
}

#[test]
fn quadruple_common_point_fixture() {
    // x' = y^2, y' = 1 + xy after reduction to the first canonical family.
    let c = classify(&sys([0, 0, 0, 0, 0, 1], [1, 0, 0, 0, 1, 0])).unwrap();
    let row = figure_fixtures().into_iter().find(|f| f.row == Some(13)).unwrap();
    assert_eq!(classify(&row.system()).unwrap().figure_row, 13);
    assert_eq!(c.figure_row, 13);
    assert_eq!(c.figure, 5);
}

#[test]
fn geometric_invariants_of_selected_figures() {
    let g = geometric_invariants(1);
    assert_eq!((g.old_figure, g.n_r, g.n_hsect, g.adjacency), (2, 3, 0, None));
    assert_eq!(g.o, [1; 6]);
    let g = geometric_invariants(35);
    assert_eq!((g.old_figure, g.n_r, g.max_nsect, g.n_hsect, g.adjacency), (40, 1, 2, 2, Some((2, 0))));
    let g = geometric_invariants(30);
    assert_eq!((g.old_figure, g.n_r, g.n_max_nsect), (30, 1, 2));
}

#[test]
fn old_and_new_numbering_is_a_bijection() {
    let new: BTreeSet<u8> = GEOMETRY_ROWS.iter().map(|r| r.new).collect();
    let old: BTreeSet<u8> = GEOMETRY_ROWS.iter().map(|r| r.old).collect();
    let all: BTreeSet<u8> = (1..=40).collect();
    assert_eq!(new, all);
    assert_eq!(old, all);
    assert_eq!(GEOMETRY_ROWS.len(), 40);
    for r in GEOMETRY_ROWS {
        assert_eq!(r.o.len() % 2, 0, "figure {}", r.new);
    }
}

#[test]
fn canonical_reduction_of_worked_example() {
    let cf = canonical_reduce(&e1()).unwrap();
    assert_eq!(cf.family, Family::SI);
    assert_eq!(cf.param("g").as_rational(), Some(&int(1)));
    assert_eq!(cf.param("h").as_rational(), Some(&int(1)));
    let reduced = cf.rational_system().unwrap();
    assert_eq!(classify(&reduced).unwrap().figure, 5);
}

#[test]
fn canonical_reduction_preserves_classes() {
    for entry in fuzz_corpus(8, 150) {
        let Ok(cf) = canonical_reduce(&entry.system) else { continue };
        let Some(reduced) = cf.rational_system() else { continue };
        let a = classify(&entry.system).unwrap();
        let b = classify(&reduced).unwrap();
        assert_eq!((a.sigma, a.figure), (b.sigma, b.figure), "{}", entry.system);
    }
}

#[test]
fn every_sigma_fixture_hits_its_class() {
    let fixtures = sigma_fixtures();
    let hit: BTreeSet<u8> = fixtures.iter().map(|f| f.target).collect();
    assert_eq!(hit, (1..=36).collect());
    for f in fixtures {
        let c = classify(&f.system()).unwrap();
        assert_eq!(c.sigma, f.target, "{} {:?}", f.family, f.params);
    }
}

#[test]
fn every_figure_fixture_hits_its_row() {
    let fixtures = figure_fixtures();
    let rows: BTreeSet<usize> = fixtures.iter().filter_map(|f| f.row).collect();
    assert_eq!(rows, (0..FIGURE_ROWS.len()).collect());
    for f in fixtures {
        let c = classify(&f.system()).unwrap();
        assert_eq!(c.figure, f.target, "{} {:?}", f.family, f.params);
        assert_eq!(Some(c.figure_row), f.row);
    }
}

#[test]
fn corpus_classification_is_consistent() {
    for entry in fuzz_corpus(2, 400) {
        let c = classify(&entry.system).unwrap_or_else(|e| panic!("{}: {e}", entry.system));
        let sigma = SIGMA_ROWS.iter().find(|r| r.sigma == c.sigma).unwrap();
        assert_eq!(sigma.dsz_label, c.dsz.label(), "{}", entry.system);
        assert_eq!(sigma.delta, c.divisors.summary.delta_s);
        assert_eq!(FIGURE_ROWS[c.figure_row].figure, c.figure);
        assert_eq!(c.fused.len(), c.divisors.cz.len());
    }
}

#[test]
fn invalid_systems_are_rejected() {
    let err = classify(&sys([0, 1, 0, 0, 1, 0], [0, -1, 0, 1, 0, 0])).unwrap_err();
    assert!(matches!(err, ClassifyError::Validation(_)));
    let err = classify(&sys([0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0])).unwrap_err();
    assert!(matches!(err, ClassifyError::Validation(_)), "{err}");
}
