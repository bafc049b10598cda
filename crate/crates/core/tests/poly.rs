mod common;

use common::poly;
use proptest::prelude::*;
use qsinf::poly::gcd::gcd;
use qsinf::poly::{hessian, int, jacobian, resultant, sylvester_resultant, BinaryForm, Poly2, Poly3, PolyError};
use qsinf::system::{dehomogenize, homogenize};

#[test]
fn arithmetic_cancels_and_expands() {
    let x = Poly2::x();
    let y = Poly2::y();
    assert_eq!(&(&x + &y) + &(&x - &y), x.scale(&int(2)));
    assert_eq!(&x * &y, poly(&[(1, 1, 1)]));
    assert_eq!(&(&x - &y) * &(&x + &y), poly(&[(2, 0, 1), (0, 2, -1)]));
    assert_eq!((&x - &x).num_terms(), 0);
}

#[test]
fn resultant_examples() {
    let f = poly(&[(2, 0, 1), (0, 0, -1)]);
    let g = poly(&[(1, 0, 1), (0, 0, -2)]);
    assert_eq!(resultant(&f, &g, 0).unwrap(), Poly2::constant(int(3)));
    let f = poly(&[(2, 0, 1)]);
    let g = poly(&[(0, 2, 1)]);
    assert_eq!(resultant(&f, &g, 0).unwrap(), poly(&[(0, 4, 1)]));
    assert_eq!(resultant(&Poly2::zero(), &Poly2::zero(), 0), Err(PolyError::DegenerateResultant));
}

#[test]
fn resultant_in_z_of_the_worked_example_is_mu4() {
    // With formal degree two in Z, both leading coefficients vanish, so
    // Res_Z(X^2, Y^2) = 0, which is mu4 of x' = x^2, y' = y^2.
    let (p, q) = common::e1().homogenized();
    let res = sylvester_resultant(&p, &q, 2, 2, 2).unwrap();
    let set = qsinf::comitants::compute(&common::e1()).unwrap();
    assert!(res.is_zero());
    assert!(set.mu(4).is_zero());
}

#[test]
fn binary_discriminants() {
    let form = |c: &[i64]| BinaryForm::new(c.len() as u32 - 1, c.iter().map(|&v| int(v)).collect());
    assert_eq!(form(&[1, 0, -1]).discriminant(), int(4));
    assert_eq!(form(&[0, 1, -1, 0]).discriminant(), int(1));
    assert_eq!(form(&[1, 0, 0, 0]).discriminant(), int(0));
}

#[test]
fn cubic_discriminant_vanishes_exactly_on_repeated_roots() {
    for a in -3..=3i64 {
        for b in a..=3 {
            for c in b..=3 {
                // (x - a y)(x - b y)(x - c y)
                let coeffs = [1, -(a + b + c), a * b + a * c + b * c, -(a * b * c)];
                let f = BinaryForm::new(3, coeffs.iter().map(|&v| int(v)).collect());
                let repeated = a == b || b == c;
                assert_eq!(f.discriminant() == int(0), repeated, "roots {a} {b} {c}");
            }
        }
    }
}

#[test]
fn jacobian_examples() {
    let x2 = poly(&[(2, 0, 1)]);
    let y2 = poly(&[(0, 2, 1)]);
    assert_eq!(jacobian(&x2, &y2), poly(&[(1, 1, 4)]));
    assert_eq!(jacobian(&Poly2::x(), &Poly2::y()), Poly2::one());
    assert!(jacobian(&x2, &x2).is_zero());
}

#[test]
fn hessian_examples() {
    assert_eq!(hessian(&poly(&[(2, 1, 1), (1, 2, -1)])), poly(&[(2, 0, -4), (1, 1, 4), (0, 2, -4)]));
    assert!(hessian(&poly(&[(3, 0, 1)])).is_zero());
    assert_eq!(hessian(&poly(&[(2, 0, 1), (0, 2, 1)])), Poly2::constant(int(4)));
}

#[test]
fn gcd_examples() {
    assert_eq!(gcd(&poly(&[(2, 1, 1)]), &poly(&[(1, 2, 1)])), poly(&[(1, 1, 1)]));
    assert_eq!(gcd(&poly(&[(2, 0, 1), (0, 0, 1)]), &Poly2::x()), Poly2::one());
    assert_eq!(gcd(&poly(&[(2, 0, 1), (0, 2, -1)]), &poly(&[(1, 0, 1), (0, 1, -1)])), poly(&[(1, 0, 1), (0, 1, -1)]));
}

#[test]
fn homogenize_examples() {
    assert_eq!(
        homogenize(&poly(&[(2, 0, 1), (0, 0, 1)]), 2),
        &Poly3::monomial([2, 0, 0], int(1)) + &Poly3::monomial([0, 0, 2], int(1))
    );
    assert_eq!(homogenize(&Poly2::y(), 2), Poly3::monomial([0, 1, 1], int(1)));
}

fn small_poly(max_deg: u32) -> impl Strategy<Value = Poly2> {
    prop::collection::vec(((0..=max_deg), (0..=max_deg), -4i64..=4), 0..6).prop_map(move |terms| {
        Poly2::from_terms(
            terms.into_iter().filter(|(i, j, _)| i + j <= max_deg).map(|(i, j, c)| ([i, j], int(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn homogenize_round_trips(p in small_poly(2)) {
        prop_assert_eq!(dehomogenize(&homogenize(&p, 2)), p);
    }

    #[test]
    fn jacobian_is_antisymmetric_and_bilinear(f in small_poly(2), g in small_poly(2), h in small_poly(2)) {
        prop_assert_eq!(jacobian(&f, &g), -jacobian(&g, &f));
        prop_assert_eq!(jacobian(&(&f + &h), &g), &jacobian(&f, &g) + &jacobian(&h, &g));
    }

    #[test]
    fn resultant_is_multiplicative(f in small_poly(2), g in small_poly(2), h in small_poly(2)) {
        prop_assume!(f.degree_in(0).unwrap_or(0) > 0 && g.degree_in(0).unwrap_or(0) > 0 && h.degree_in(0).unwrap_or(0) > 0);
        let lhs = resultant(&(&f * &g), &h, 0).unwrap();
        let rhs = &resultant(&f, &h, 0).unwrap() * &resultant(&g, &h, 0).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
