mod common;

use common::{e1, member, poly};
use qsinf::comitants::symbolic::{mu_table, SymbolicComitant};
use qsinf::comitants::{self, mu_sequence, mu_sequence_via_operator, Comitant::*};
use qsinf::corpus::fuzz_corpus;
use qsinf::poly::gcd::gcd;
use qsinf::poly::{int, rat, sylvester_resultant, transvectant2, BinaryForm, Poly, Poly2};
use qsinf::system::QuadraticSystem;

fn compute(s: &QuadraticSystem) -> comitants::ComitantSet {
    comitants::compute(s).expect("comitants")
}

#[test]
fn worked_example_base_comitants() {
    let c = compute(&e1());
    assert_eq!(c.get(C2), &poly(&[(2, 1, 1), (1, 2, -1)]));
    assert_eq!(c.get(K), &poly(&[(1, 1, 4)]));
    assert_eq!(c.get(Mu0), &Poly2::one());
    assert_eq!(c.get(M), &poly(&[(2, 0, -8), (1, 1, 8), (0, 2, -8)]));
    assert_eq!(c.get(H), &poly(&[(1, 1, -4)]));
    assert_eq!(c.get(L), &poly(&[(2, 0, 8), (1, 1, -24), (0, 2, 8)]));
    assert_eq!(c.get(Eta), &Poly2::one());
    assert_eq!(c.get(Kappa), &Poly2::constant(int(-64)));
}

#[test]
fn derived_relations() {
    for entry in fuzz_corpus(31, 40) {
        let c = compute(&entry.system);
        assert_eq!(c.get(N), &(c.get(K) + c.get(H)));
        assert_eq!(c.get(R), &(c.get(L) + &c.get(K).scale(&int(8))));
        assert_eq!(c.get(Xi), &(c.get(M) - &c.get(K).scale(&int(2))));
        assert_eq!(c.get(Kappa2), &-c.get(J1));
        assert_eq!(c.get(L), &(&(&c.get(K).scale(&int(4)) + &c.get(H).scale(&int(8))) - c.get(M)));
        assert_eq!(c.get(Kappa), &transvectant2(c.get(M), c.get(K)));
        assert_eq!(c.get(Kappa1), &transvectant2(c.get(M), c.get(C1)));
    }
}

#[test]
fn canonical_s1_mu0() {
    for (g, h) in [(2, 3), (-1, 1), (1, 1), (3, -2)] {
        let c = compute(&member("S_I", &[g, h, 1, 2, 0, -1, 1, 3]));
        assert_eq!(c.get(Mu0).constant_term(), int(g * h * (g + h - 1)));
    }
}

#[test]
fn family_2s4_kappa_and_k() {
    for h in [-2, 2, 3] {
        let c = compute(&member("2s4", &[h, 1, 1, 2, -1]));
        assert_eq!(c.get(Kappa).constant_term(), int(64 * h * (1 - h)));
        assert_eq!(c.get(K), &poly(&[(0, 2, 2 * h * (h - 1))]));
    }
}

#[test]
fn family_2s6_mu2_mu3() {
    let (k, c_, d, l) = (3, 2, -1, 5);
    let c = compute(&member("2s6", &[k, c_, d, l]));
    assert_eq!(c.mu(2), &poly(&[(1, 1, -c_ * d)]));
    assert_eq!(c.mu(3), &poly(&[(2, 1, -k * c_), (1, 2, k * d)]));
}

#[test]
fn family_2s5_mu4() {
    let k = 3;
    let c = compute(&member("2s5", &[k, 0, 0, 1]));
    assert!(c.mu(2).is_zero() && c.mu(3).is_zero());
    let sq = poly(&[(2, 0, 1), (0, 2, 1)]);
    assert_eq!(c.mu(4), &(&sq * &sq).scale(&int(k * k)));
}

#[test]
fn closed_form_family_values() {
    // (4s1a): K2 = 48 (g^2 - g + 2)(c^2 - 4 g k) x^2
    let (g, k, c_) = (2, 1, 3);
    let c = compute(&member("4s1a", &[g, k, c_, 1, 0, 2]));
    assert_eq!(c.get(K2), &poly(&[(2, 0, 48 * (g * g - g + 2) * (c_ * c_ - 4 * g * k))]));
    // (5s4a): K2 = 192 g^2 (c^2 - 8 g k) x^2, eight times the printed value
    // with the same sign.
    let c = compute(&member("5s4a", &[g, k, c_, 1, 0, 2]));
    assert_eq!(c.get(K2), &poly(&[(2, 0, 192 * g * g * (c_ * c_ - 8 * g * k))]));
    // (sys:K3): K3 = 6 f (2c - f) x^6
    let (c_, f) = (2, 1);
    let c = compute(&member("K3", &[1, c_, -1, 3, f]));
    assert_eq!(c.get(K3), &poly(&[(6, 0, 6 * f * (2 * c_ - f))]));
    // (4s1): kappa1 = -32 d
    let d = 5;
    let c = compute(&member("4s1", &[1, 2, 0, d, 1, 0, 3]));
    assert_eq!(c.get(Kappa1).constant_term(), int(-32 * d));
    // (2s) with k = 0 (forced by mu2 = 0): K3 = -24 g^2 l x^6
    let (g, l) = (2, 3);
    let c = compute(&member("2s", &[g, 0, 1, l]));
    assert_eq!(c.get(K3), &poly(&[(6, 0, -24 * g * g * l)]));
}

#[test]
fn mu_sequence_of_the_worked_example() {
    let mu = mu_sequence(&e1()).unwrap();
    assert_eq!(mu[0], Poly2::one());
    assert!(mu[1..].iter().all(Poly2::is_zero));
}

#[test]
fn mu0_three_ways_and_mu_routes_agree() {
    for entry in fuzz_corpus(32, 120) {
        let s = &entry.system;
        let c = compute(s);
        let mu0 = c.get(Mu0).constant_term();
        let res = sylvester_resultant(&s.p_part(2), &s.q_part(2), 0, 2, 2).unwrap();
        assert_eq!(res, poly(&[(0, 4, 1)]).scale(&mu0));
        let k = BinaryForm::from_poly(c.get(K), 2).unwrap();
        assert_eq!(k.discriminant() / int(16), mu0);
        let direct = mu_sequence(s).unwrap();
        let operator = mu_sequence_via_operator(s);
        assert_eq!(direct, operator, "{s}");
        for (i, m) in direct.iter().enumerate() {
            assert!(m.is_zero() || (m.is_homogeneous() && m.total_degree() == Some(i as u32)));
        }
    }
}

#[test]
fn mu4_is_the_resultant_in_z() {
    for entry in fuzz_corpus(33, 50) {
        let (p, q) = entry.system.homogenized();
        let res = sylvester_resultant(&p, &q, 2, 2, 2).unwrap();
        let mu4 = compute(&entry.system).mu(4).clone();
        let as_xy: Poly2 = Poly2::from_terms(res.terms().map(|(e, c)| ([e[0], e[1]], c.clone())));
        assert_eq!(as_xy, mu4, "{}", entry.system);
    }
}

#[test]
fn operator_on_constant_is_zero_and_linear() {
    let constant = SymbolicComitant(Poly::constant(rat(3, 2)));
    assert!(constant.apply_operator().0.is_zero());
    let table = mu_table();
    let sum = SymbolicComitant(&table[0].0 + &table[1].0);
    assert_eq!(sum.apply_operator().0, &table[0].apply_operator().0 + &table[1].apply_operator().0);
    // On x' = x^2, y' = y^2 the first application is zero, so mu1 = 0.
    assert!(table[0].apply_operator().evaluate(&e1()).is_zero());
}

#[test]
fn transvectant_examples() {
    assert_eq!(transvectant2(&poly(&[(2, 0, 1)]), &poly(&[(0, 2, 1)])), Poly2::constant(int(4)));
    let f = poly(&[(2, 0, 1), (0, 2, 1)]);
    assert_eq!(transvectant2(&f, &f), Poly2::constant(int(8)));
    let c = compute(&e1());
    assert_eq!(transvectant2(c.get(M), c.get(K)), Poly2::constant(int(-64)));
}

#[test]
fn gcd_of_quadratic_parts_follows_mu0_k_h() {
    let mut systems: Vec<QuadraticSystem> = fuzz_corpus(34, 150).into_iter().map(|e| e.system).collect();
    systems.extend(qsinf::corpus::figure_fixtures().iter().map(|f| f.system()));
    for s in systems {
        let c = compute(&s);
        let (p2, q2) = (s.p_part(2), s.q_part(2));
        let g = if p2.is_zero() { q2.clone() } else if q2.is_zero() { p2.clone() } else { gcd(&p2, &q2) };
        let deg = g.total_degree().unwrap_or(0);
        let expected = if !c.is_zero(Mu0) {
            0
        } else if !c.is_zero(K) {
            1
        } else {
            2
        };
        assert_eq!(deg, expected, "{s}");
    }
}
