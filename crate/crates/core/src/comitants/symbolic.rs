//! Comitants as polynomials in the twelve coefficients and `x, y`.
//!
//! Variables `0..12` are `a00, a10, a01, a20, a11, a02, b00, b10, b01, b20,
//! b11, b02`; variable 12 is `x` and 13 is `y`. The Lie operator
//! `L = x L2 - y L1` acting on this ring generates the `mu` sequence from `mu_0`.

use std::sync::OnceLock;

use num_traits::One;

use crate::poly::{int, rat, sylvester_resultant, Poly, Poly2, Rational};
use crate::system::QuadraticSystem;

pub const VARS: usize = 14;
pub const X: usize = 12;
pub const Y: usize = 13;

/// A comitant with symbolic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicComitant(pub Poly<VARS>);

fn v(i: usize) -> Poly<VARS> {
    Poly::var(i)
}

/// Symbolic `p` (`which = 0`) or `q` (`which = 1`).
pub fn symbolic_side(which: usize) -> Poly<VARS> {
    let o = 6 * which;
    let (x, y) = (v(X), v(Y));
    let mut out = v(o);
    out += &(&v(o + 1) * &x);
    out += &(&v(o + 2) * &y);
    out += &(&v(o + 3) * &(&x * &x));
    out += &(&v(o + 4) * &(&x * &y)).scale(&int(2));
    out += &(&v(o + 5) * &(&y * &y));
    out
}

/// Degree-`d` homogeneous part in `x, y` of a symbolic polynomial.
pub fn xy_part(f: &Poly<VARS>, d: u32) -> Poly<VARS> {
    Poly::from_terms(
        f.terms()
            .filter(|(e, _)| e[X] + e[Y] == d)
            .map(|(e, c)| (*e, c.clone())),
    )
}

impl SymbolicComitant {
    /// Substitutes the coefficients of `s`.
    pub fn evaluate(&self, s: &QuadraticSystem) -> Poly2 {
        let a = s.coefficients();
        let mut out = Poly2::zero();
        for (e, c) in self.0.terms() {
            let mut t = c.clone();
            for (i, val) in a.iter().enumerate() {
                if e[i] > 0 {
                    t *= num_traits::pow(val.clone(), e[i] as usize);
                }
            }
            out.add_term([e[X], e[Y]], t);
        }
        out
    }

    /// `L(U) = x L2(U) - y L1(U)`.
    pub fn apply_operator(&self) -> Self {
        let u = &self.0;
        let half = rat(1, 2);
        let two = int(2);
        let d = |i: usize| u.derivative(i);
        // L1 = 2a00 d/da10 + a10 d/da20 + a01/2 d/da11, and the same for b
        // L2 = 2a00 d/da01 + a01 d/da02 + a10/2 d/da11, and the same for b
        let mut l1 = Poly::zero();
        let mut l2 = Poly::zero();
        for o in [0, 6] {
            l1 += &(&v(o) * &d(o + 1)).scale(&two);
            l1 += &(&v(o + 1) * &d(o + 3));
            l1 += &(&v(o + 2) * &d(o + 4)).scale(&half);
            l2 += &(&v(o) * &d(o + 2)).scale(&two);
            l2 += &(&v(o + 2) * &d(o + 5));
            l2 += &(&v(o + 1) * &d(o + 4)).scale(&half);
        }
        Self(&(&v(X) * &l2) - &(&v(Y) * &l1))
    }
}

fn build_mu_table() -> [SymbolicComitant; 5] {
    let p2 = xy_part(&symbolic_side(0), 2);
    let q2 = xy_part(&symbolic_side(1), 2);
    let res = sylvester_resultant(&p2, &q2, X, 2, 2).expect("symbolic resultant");
    let y4 = Poly::monomial(
        {
            let mut e = [0; VARS];
            e[Y] = 4;
            e
        },
        Rational::one(),
    );
    let mu0 = res.div_exact(&y4).expect("y^4 divides Res_x(p2, q2)");
    let mut out: Vec<SymbolicComitant> = vec![SymbolicComitant(mu0)];
    let mut factorial = Rational::one();
    let mut current = out[0].clone();
    for i in 1..5 {
        current = current.apply_operator();
        factorial *= int(i as i64);
        out.push(SymbolicComitant(current.0.scale(&factorial.recip())));
    }
    debug_assert!(!out[0].0.is_zero());
    out.try_into().expect("five entries")
}

/// Cached symbolic `mu_0, ..., mu_4`.
pub fn mu_table() -> &'static [SymbolicComitant; 5] {
    static TABLE: OnceLock<[SymbolicComitant; 5]> = OnceLock::new();
    TABLE.get_or_init(build_mu_table)
}
