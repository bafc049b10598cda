mod common;

use common::{e1, r, sys};
use proptest::prelude::*;
use qsinf::comitants::{Comitant, DESCRIPTORS};
use qsinf::corpus::{fuzz_corpus, random_linear};
use qsinf::poly::{int, Rational};
use qsinf::system::{
    translation_law_check, weight_law_check, AffineMap, QuadraticSystem, SystemError, ValidationError,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn validation_verdicts() {
    assert_eq!(e1().validate(), Ok(()));
    assert_eq!(sys([0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 1, 1]).validate(), Err(ValidationError::LineAtInfinityDegenerate));
    // x(x + 1) and xy share x but also make C2 vanish; this pair keeps C2 != 0.
    assert!(matches!(
        sys([0, 1, 0, 0, 1, 0], [0, -1, 0, 1, 0, 0]).validate(),
        Err(ValidationError::NonEssential { .. })
    ));
    assert_eq!(sys([1, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]).validate(), Err(ValidationError::NotQuadratic));
}

#[test]
fn xy_coefficient_is_stored_halved() {
    let s = sys([0, 0, 0, 0, 2, 0], [0, 0, 0, 0, 0, 1]);
    assert_eq!(s.coefficients()[4], int(1));
    assert_eq!(s.monomials(0)[4], int(2));
}

#[test]
fn translation_expands_the_square() {
    let s = e1().translate(&int(1), &int(0));
    let m = s.monomials(0);
    assert_eq!((m[0].clone(), m[1].clone(), m[3].clone()), (int(1), int(2), int(1)));
}

#[test]
fn identity_map_and_round_trip() {
    let s = sys([3, -1, 2, 1, -2, 5], [-4, 2, 0, 7, 1, -1]);
    assert_eq!(s.apply_affine(&AffineMap::identity()), s);
    let g = AffineMap::new([[r(2, 3), int(1)], [int(-1), int(4)]], [int(5), r(-1, 2)]).unwrap();
    assert_eq!(s.apply_affine(&g).apply_affine(&g.inverse()), s);
}

#[test]
fn singular_map_is_rejected() {
    let m = [[int(1), int(2)], [int(2), int(4)]];
    assert_eq!(AffineMap::new(m, [int(0), int(0)]), Err(SystemError::SingularMap));
}

#[test]
fn time_rescaling() {
    let s = e1();
    assert_eq!(s.rescale_time(&int(1)).unwrap(), s);
    assert_eq!(s.rescale_time(&int(2)).unwrap().coefficients()[3], int(2));
    assert_eq!(s.rescale_time(&int(0)), Err(SystemError::InvalidScale));
    assert_eq!(s.rescale_time(&int(-1)), Err(SystemError::InvalidScale));
    let c = qsinf::classify::classify(&s).unwrap();
    let c3 = qsinf::classify::classify(&s.rescale_time(&int(3)).unwrap()).unwrap();
    assert_eq!(c.figure, c3.figure);
}

#[test]
fn weight_law_examples() {
    let g = AffineMap::diagonal(int(2), int(2));
    let find = |c: Comitant| DESCRIPTORS.iter().find(|d| d.comitant == c).unwrap();
    let s = sys([1, 2, -1, 3, 1, -2], [0, 1, 1, -1, 2, 1]);
    for c in [Comitant::C2, Comitant::Eta, Comitant::K] {
        assert!(weight_law_check(&s, &g, find(c)), "{c}");
    }
    let before = qsinf::comitants::compute(&s).unwrap();
    let after = qsinf::comitants::compute(&s.apply_affine(&g)).unwrap();
    // eta has weight 2 and det g = 4.
    assert_eq!(after.get(Comitant::Eta).constant_term() * int(16), before.get(Comitant::Eta).constant_term());
}

#[test]
fn every_descriptor_obeys_its_weight_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for entry in fuzz_corpus(4, 6) {
        let g = random_linear(&mut rng);
        for d in DESCRIPTORS {
            assert!(weight_law_check(&entry.system, &g, d), "{} under {:?}", d.comitant, g);
        }
    }
}

#[test]
fn translation_law_examples() {
    assert!(translation_law_check(&e1(), &int(0), &int(0)).all_zero());
    assert!(translation_law_check(&e1(), &int(1), &int(0)).all_zero());
}

#[test]
fn ct_comitants_are_translation_invariant_on_their_strata() {
    // kappa1 and kappa2 are only claimed invariant for M != 0.
    let needs_m = [Comitant::Kappa1, Comitant::Kappa2];
    let mut failures = Vec::new();
    let mut fixtures = qsinf::corpus::figure_fixtures();
    fixtures.extend(qsinf::corpus::sigma_fixtures());
    for f in &fixtures {
        let s = f.system();
        let set = qsinf::comitants::compute(&s).unwrap();
        let moved = qsinf::comitants::compute(&s.translate(&r(1, 2), &int(-3))).unwrap();
        for d in DESCRIPTORS {
            let Some(modulus) = d.ct_modulus else { continue };
            if needs_m.contains(&d.comitant) && set.is_zero(Comitant::M) {
                continue;
            }
            if modulus.iter().all(|&c| set.is_zero(c)) && set.get(d.comitant) != moved.get(d.comitant) {
                failures.push(format!("{} on {}", d.comitant, s));
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| r(n, d))
}

fn system() -> impl Strategy<Value = QuadraticSystem> {
    prop::array::uniform12(coefficient())
        .prop_map(QuadraticSystem::from_coefficients)
        .prop_filter("valid", |s| s.validate().is_ok())
}

fn affine() -> impl Strategy<Value = AffineMap> {
    (prop::array::uniform4(coefficient()), prop::array::uniform2(coefficient()))
        .prop_filter_map("nonsingular", |(m, b)| {
            let [a, b2, c, d] = m;
            AffineMap::new([[a, b2], [c, d]], b).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn group_action_composes(s in system(), g1 in affine(), g2 in affine()) {
        let stepwise = s.apply_affine(&g1).apply_affine(&g2);
        prop_assert_eq!(stepwise, s.apply_affine(&g2.compose(&g1)));
    }

    #[test]
    fn translation_laws_hold(s in system(), a in coefficient(), b in coefficient()) {
        prop_assert!(translation_law_check(&s, &a, &b).all_zero());
    }
}
