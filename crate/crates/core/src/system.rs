//! Quadratic systems `dx/dt = p(x,y)`, `dy/dt = q(x,y)` and the affine group action.
//!
//! Coefficients follow the tensorial convention
//! `p = a00 + a10 x + a01 y + a20 x^2 + 2 a11 xy + a02 y^2`
//! (and the same for `q` with `b`), so the monomial coefficient of `xy`
//! is twice the stored `a11`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::poly::{format_rational, gcd, int, Poly2, Poly3, Rational};

/// Monomial order used by [`QuadraticSystem::from_monomials`]: `1, x, y, x^2, xy, y^2`.
pub const MONOMIALS: [&str; 6] = ["1", "x", "y", "x2", "xy", "y2"];

/// Names of the twelve stored coefficients, in storage order.
pub const COEFF_NAMES: [&str; 12] = [
    "a00", "a10", "a01", "a20", "a11", "a02", "b00", "b10", "b01", "b20", "b11", "b02",
];

const EXPONENTS: [[u32; 2]; 6] = [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]];

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticSystem {
    coeffs: [Rational; 12],
}

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum ValidationError {
    #[error("p and q have no quadratic terms")]
    NotQuadratic,
    #[error("C2 = y p2 - x q2 vanishes identically (the line at infinity is filled with singular points)")]
    LineAtInfinityDegenerate,
    #[error("p and q share the non-constant factor {factor}")]
    NonEssential { factor: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error("polynomial {0} has degree above two")]
    DegreeTooHigh(&'static str),
    #[error("singular linear part in affine map")]
    SingularMap,
    #[error("time rescaling factor must be positive")]
    InvalidScale,
}

/// `x -> M x + B` with `det M != 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMap {
    pub m: [[Rational; 2]; 2],
    pub b: [Rational; 2],
}

impl AffineMap {
    pub fn new(m: [[Rational; 2]; 2], b: [Rational; 2]) -> Result<Self, SystemError> {
        let g = Self { m, b };
        if g.det().is_zero() {
            return Err(SystemError::SingularMap);
        }
        Ok(g)
    }

    pub fn linear(m: [[Rational; 2]; 2]) -> Result<Self, SystemError> {
        Self::new(m, [Rational::zero(), Rational::zero()])
    }

    pub fn identity() -> Self {
        Self::diagonal(Rational::one(), Rational::one())
    }

    pub fn diagonal(a: Rational, d: Rational) -> Self {
        Self::linear([[a, Rational::zero()], [Rational::zero(), d]]).expect("nonzero diagonal")
    }

    /// The translation `x -> x + b`.
    pub fn translation(b0: Rational, b1: Rational) -> Self {
        let mut g = Self::identity();
        g.b = [b0, b1];
        g
    }

    pub fn det(&self) -> Rational {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn inverse(&self) -> Self {
        let d = self.det();
        let mi = [
            [&self.m[1][1] / &d, -&self.m[0][1] / &d],
            [-&self.m[1][0] / &d, &self.m[0][0] / &d],
        ];
        let b = [
            -(&mi[0][0] * &self.b[0] + &mi[0][1] * &self.b[1]),
            -(&mi[1][0] * &self.b[0] + &mi[1][1] * &self.b[1]),
        ];
        Self { m: mi, b }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let m = |i: usize, j: usize| &self.m[i][0] * &other.m[0][j] + &self.m[i][1] * &other.m[1][j];
        let b = |i: usize| &self.m[i][0] * &other.b[0] + &self.m[i][1] * &other.b[1] + &self.b[i];
        Self {
            m: [[m(0, 0), m(0, 1)], [m(1, 0), m(1, 1)]],
            b: [b(0), b(1)],
        }
    }

    /// Image of the point `(x, y)` as polynomials (used to substitute into forms).
    pub fn apply_to_coordinates(&self) -> [Poly2; 2] {
        let row = |i: usize| {
            &(&Poly2::x().scale(&self.m[i][0]) + &Poly2::y().scale(&self.m[i][1]))
                + &Poly2::constant(self.b[i].clone())
        };
        [row(0), row(1)]
    }
}

impl QuadraticSystem {
    /// Builds from the twelve stored coefficients `a00..b02`.
    pub fn from_coefficients(coeffs: [Rational; 12]) -> Self {
        Self { coeffs }
    }

    /// Builds from monomial coefficients of `p` and `q` in the order `1, x, y, x^2, xy, y^2`.
    pub fn from_monomials(p: [Rational; 6], q: [Rational; 6]) -> Self {
        let half = |v: &Rational| v / int(2);
        let conv = |m: &[Rational; 6]| {
            [m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone(), half(&m[4]), m[5].clone()]
        };
        let (a, b) = (conv(&p), conv(&q));
        let mut coeffs: [Rational; 12] = Default::default();
        coeffs[..6].clone_from_slice(&a);
        coeffs[6..].clone_from_slice(&b);
        Self { coeffs }
    }

    /// Integer monomial coefficients, a convenience for tests and examples.
    pub fn from_ints(p: [i64; 6], q: [i64; 6]) -> Self {
        Self::from_monomials(p.map(int), q.map(int))
    }

    /// Builds from polynomials of degree at most two.
    pub fn from_polys(p: &Poly2, q: &Poly2) -> Result<Self, SystemError> {
        let read = |f: &Poly2, name: &'static str| -> Result<[Rational; 6], SystemError> {
            if f.total_degree().unwrap_or(0) > 2 {
                return Err(SystemError::DegreeTooHigh(name));
            }
            Ok(EXPONENTS.map(|e| f.coeff(&e)))
        };
        Ok(Self::from_monomials(read(p, "p")?, read(q, "q")?))
    }

    pub fn coefficients(&self) -> &[Rational; 12] {
        &self.coeffs
    }

    /// Monomial coefficients of `p` (`which = 0`) or `q` (`which = 1`).
    pub fn monomials(&self, which: usize) -> [Rational; 6] {
        let c = &self.coeffs[6 * which..6 * which + 6];
        [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone(), &c[4] * int(2), c[5].clone()]
    }

    fn poly(&self, which: usize) -> Poly2 {
        Poly2::from_terms(EXPONENTS.iter().copied().zip(self.monomials(which)))
    }

    pub fn p(&self) -> Poly2 {
        self.poly(0)
    }

    pub fn q(&self) -> Poly2 {
        self.poly(1)
    }

    /// Homogeneous part of degree `i` of `p`.
    pub fn p_part(&self, i: u32) -> Poly2 {
        self.p().homogeneous_part(i)
    }

    pub fn q_part(&self, i: u32) -> Poly2 {
        self.q().homogeneous_part(i)
    }

    /// `P(X,Y,Z) = Z^2 p(X/Z, Y/Z)` and likewise `Q`.
    pub fn homogenized(&self) -> (Poly3, Poly3) {
        (homogenize(&self.p(), 2), homogenize(&self.q(), 2))
    }

    /// Checks membership in the class of essential quadratic systems.
    pub fn validate(&self) -> Result<(), ValidationError> {
        let (p, q) = (self.p(), self.q());
        if p.homogeneous_part(2).is_zero() && q.homogeneous_part(2).is_zero() {
            return Err(ValidationError::NotQuadratic);
        }
        let c2 = &Poly2::y() * &p.homogeneous_part(2) - &Poly2::x() * &q.homogeneous_part(2);
        if c2.is_zero() {
            return Err(ValidationError::LineAtInfinityDegenerate);
        }
        let g = gcd::gcd(&p, &q);
        if !g.is_constant() {
            return Err(ValidationError::NonEssential { factor: g.to_string() });
        }
        Ok(())
    }

    /// The system in the coordinates `x~ = M x + B`.
    pub fn apply_affine(&self, g: &AffineMap) -> Self {
        let inv = g.inverse();
        let subs = inv.apply_to_coordinates();
        let p = self.p().compose(&subs);
        let q = self.q().compose(&subs);
        let pt = &p.scale(&g.m[0][0]) + &q.scale(&g.m[0][1]);
        let qt = &p.scale(&g.m[1][0]) + &q.scale(&g.m[1][1]);
        Self::from_polys(&pt, &qt).expect("affine maps preserve degree")
    }

    /// The system seen from `x = x~ + alpha`, `y = y~ + beta`.
    pub fn translate(&self, alpha: &Rational, beta: &Rational) -> Self {
        self.apply_affine(&AffineMap::translation(-alpha.clone(), -beta.clone()))
    }

    /// Multiplies the vector field by `lambda > 0`.
    pub fn rescale_time(&self, lambda: &Rational) -> Result<Self, SystemError> {
        if !lambda.is_positive() {
            return Err(SystemError::InvalidScale);
        }
        Ok(Self { coeffs: self.coeffs.clone().map(|c| c * lambda) })
    }

    /// JSON-shaped echo of the monomial coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        let side = |which: usize| {
            let mut map = serde_json::Map::new();
            for (name, c) in MONOMIALS.iter().zip(self.monomials(which)) {
                if !c.is_zero() {
                    map.insert((*name).into(), serde_json::Value::String(format_rational(&c)));
                }
            }
            serde_json::Value::Object(map)
        };
        serde_json::json!({ "p": side(0), "q": side(1) })
    }
}

impl fmt::Display for QuadraticSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x' = {}, y' = {}", self.p(), self.q())
    }
}

/// `Z^d f(X/Z, Y/Z)` for `deg f <= d`.
pub fn homogenize(f: &Poly2, d: u32) -> Poly3 {
    Poly3::from_terms(f.terms().map(|(e, c)| {
        assert!(e[0] + e[1] <= d, "degree exceeds homogenisation degree");
        ([e[0], e[1], d - e[0] - e[1]], c.clone())
    }))
}

/// `F(x, y, 1)`.
pub fn dehomogenize(f: &Poly3) -> Poly2 {
    Poly2::from_terms(f.terms().map(|(e, c)| ([e[0], e[1]], c.clone())))
}

/// Exact check of `U(r_g a, g(x, y)) = det(g)^(-weight) U(a, x, y)` for a linear `g`.
pub fn weight_law_check(
    s: &QuadraticSystem,
    g: &AffineMap,
    descriptor: &crate::comitants::ComitantDescriptor,
) -> bool {
    assert!(g.b.iter().all(Zero::is_zero), "weight law needs a linear map");
    let (Ok(before), Ok(after)) = (crate::comitants::compute(s), crate::comitants::compute(&s.apply_affine(g))) else {
        return false;
    };
    let u = before.get(descriptor.comitant);
    let ut = after.get(descriptor.comitant).compose(&g.apply_to_coordinates());
    let det = g.det();
    let factor = if descriptor.weight <= 0 {
        num_traits::pow(det, (-descriptor.weight) as usize)
    } else {
        num_traits::pow(det.recip(), descriptor.weight as usize)
    };
    ut == u.scale(&factor)
}

/// Residuals of the translation laws for `K1` and the `mu` sequence.
#[derive(Clone, Debug)]
pub struct TranslationResiduals {
    pub k1: Poly2,
    pub mu: [Poly2; 5],
}

impl TranslationResiduals {
    pub fn all_zero(&self) -> bool {
        self.k1.is_zero() && self.mu.iter().all(Poly2::is_zero)
    }
}

/// Residuals of `K1' = K1 - xi K / 2` and
/// `mu_s' = mu_s + sum_{k<s} binom(4-k, s-k) xi^(s-k) mu_k`, with
/// `xi = x beta - y alpha`, for the translate `x = x~ + alpha, y = y~ + beta`.
///
/// The factor `1/2` follows from Euler's identity: the translate changes
/// `p1` by `alpha p2_x + beta p2_y`, so `K1 = p1 q2 - p2 q1` moves by
/// `(alpha y - beta x) K / 2`.
pub fn translation_law_check(s: &QuadraticSystem, alpha: &Rational, beta: &Rational) -> TranslationResiduals {
    use crate::comitants::{compute, Comitant};
    let before = compute(s).expect("valid system");
    let after = compute(&s.translate(alpha, beta)).expect("valid system");
    let xi = &Poly2::x().scale(beta) - &Poly2::y().scale(alpha);
    let half_xi = xi.scale(&crate::poly::rat(1, 2));
    let k1 = after.get(Comitant::K1) - &(before.get(Comitant::K1) - &(&half_xi * before.get(Comitant::K)));
    let binom = |n: u32, k: u32| -> i64 { (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64) };
    let mu = std::array::from_fn(|s_idx| {
        let mut expected = before.mu(s_idx).clone();
        for k in 0..s_idx {
            let c = int(binom(4 - k as u32, (s_idx - k) as u32));
            expected += &(&xi.pow((s_idx - k) as u32) * before.mu(k)).scale(&c);
        }
        after.mu(s_idx) - &expected
    });
    TranslationResiduals { k1, mu }
}
