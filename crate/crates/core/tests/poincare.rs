mod common;

use common::{e1, poly, strategies, sys};
use proptest::prelude::*;
use qsinf::corpus::fuzz_corpus;
use qsinf::poincare::{
    chart_field, chart_points_are_singular, eq2_residual, equator_singularities, numeric_indices,
    render_portrait, Chart, PortraitOptions,
};
use qsinf::poly::ProjPoint;

fn marks(svg: &str) -> usize {
    svg.matches(r#"r="5""#).count()
}

#[test]
fn worked_example_chart_fields() {
    // In x = 1/z, y = u/z the field is (C(1,u,z), z P(1,u,z)) = (u - u^2, z).
    let [du, dz] = chart_field(&e1(), Chart::U);
    assert_eq!(du, poly(&[(1, 0, 1), (2, 0, -1)]));
    assert_eq!(dz, poly(&[(0, 1, 1)]));
    let [dv, dw] = chart_field(&e1(), Chart::V);
    assert_eq!(dv, poly(&[(2, 0, 1), (1, 0, -1)]));
    assert_eq!(dw, poly(&[(0, 1, -1)]));
}

#[test]
fn worked_example_equator() {
    let points = equator_singularities(&e1());
    assert_eq!(points.len(), 3);
    assert!(points.iter().any(|e| e.point == ProjPoint::vertical() && e.chart == Chart::V));
    let mut j: Vec<i32> = numeric_indices(&e1()).into_iter().map(|(_, j)| j.unwrap()).collect();
    j.sort();
    assert_eq!(j, [-1, 1, 1]);
    assert!(chart_points_are_singular(&e1()));
}

#[test]
fn triple_point_is_one_equator_singularity() {
    let s = sys([0, 0, 1, 0, 0, 0], [0, 0, 0, -1, 0, 0]);
    assert_eq!(equator_singularities(&s).len(), 1);
}

#[test]
fn corpus_equator_points_resolve() {
    let mut unresolved = 0;
    let mut total = 0;
    for entry in fuzz_corpus(12, 120) {
        assert!(chart_points_are_singular(&entry.system), "{}", entry.system);
        for (_, j) in numeric_indices(&entry.system) {
            total += 1;
            unresolved += usize::from(j.is_none());
        }
    }
    assert!(unresolved * 20 <= total, "{unresolved} of {total} unresolved");
}

#[test]
fn portrait_is_deterministic() {
    let opts = PortraitOptions::default();
    let idx = numeric_indices(&e1());
    let a = render_portrait(&e1(), &idx, "x' = x^2, y' = y^2", &opts);
    let b = render_portrait(&e1(), &idx, "x' = x^2, y' = y^2", &opts);
    assert_eq!(a, b);
    assert!(a.starts_with("<svg"));
    assert!(a.contains("<polyline"));
    assert_eq!(marks(&a), 6);
}

#[test]
fn zero_margin_draws_equator_only() {
    let opts = PortraitOptions { margin: 0.0, ..PortraitOptions::default() };
    let svg = render_portrait(&e1(), &numeric_indices(&e1()), "a < b & c", &opts);
    assert!(svg.trim_end().ends_with("</svg>"));
    assert!(!svg.contains("<polyline"));
    assert!(svg.contains("<title>a &lt; b &amp; c</title>"));
    assert_eq!(marks(&svg), 6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compactification_identity(s in strategies::system()) {
        prop_assert!(eq2_residual(&s).is_zero());
    }
}
