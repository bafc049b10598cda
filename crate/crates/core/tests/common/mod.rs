#![allow(dead_code)]

use qsinf::poly::{int, rat, Poly2, Rational};
use qsinf::system::QuadraticSystem;

/// `sum c x^i y^j` from integer triples `(i, j, c)`.
pub fn poly(terms: &[(u32, u32, i64)]) -> Poly2 {
    Poly2::from_terms(terms.iter().map(|&(i, j, c)| ([i, j], int(c))))
}

/// Monomial coefficients `1, x, y, x^2, xy, y^2` for `p` and `q`.
pub fn sys(p: [i64; 6], q: [i64; 6]) -> QuadraticSystem {
    QuadraticSystem::from_ints(p, q)
}

pub fn r(n: i64, d: i64) -> Rational {
    rat(n, d)
}

pub fn params(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&n| int(n)).collect()
}

pub fn e1() -> QuadraticSystem {
    sys([0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1])
}

/// Family member by name.
pub fn member(name: &str, v: &[i64]) -> QuadraticSystem {
    qsinf::corpus::family(name).expect("family").build(&params(v))
}

pub mod strategies {
    use proptest::prelude::*;
    use qsinf::poly::Rational;
    use qsinf::system::QuadraticSystem;

    pub fn coefficient() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=3).prop_map(|(n, d)| super::r(n, d))
    }

    /// Valid quadratic systems with small rational coefficients.
    pub fn system() -> impl Strategy<Value = QuadraticSystem> {
        prop::array::uniform12(coefficient())
            .prop_map(QuadraticSystem::from_coefficients)
            .prop_filter("valid", |s| s.validate().is_ok())
    }
}
