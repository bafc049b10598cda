//! Exact index of a semi-hyperbolic infinite singularity.
//!
//! When `I_w(C,Z) = 1` the compactified field in the chart `x = 1/z`,
//! `y = u/z` has one non-zero eigenvalue `lambda = C2'(1, u0)` along `u`.
//! Solving `C(1, u, z) = 0` for `u = phi(z)` and restricting
//! `z P(1, u, z)` to that curve gives `a z^m + ...`; the point is a node or
//! saddle with index `sign(lambda a)` for odd `m` and a saddle-node for even
//! `m`. Coefficients live in `Q(u0)`, represented modulo the minimal
//! polynomial of `u0`.

use num_traits::{One, Zero};

use crate::poly::{Poly2, ProjPoint, Rational, RootLocation, UPoly};
use crate::system::QuadraticSystem;

/// Highest power of `z` examined; intersection multiplicities at infinity
/// never exceed four for non-degenerate quadratic systems.
const ORDER: usize = 7;

/// Arithmetic in `Q[t]/(f)` for irreducible `f`.
struct Field {
    f: UPoly,
}

impl Field {
    fn reduce(&self, a: &UPoly) -> UPoly {
        a.rem(&self.f)
    }

    fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.reduce(&(a * b))
    }

    fn inv(&self, a: &UPoly) -> Option<UPoly> {
        let (g, s, _) = a.ext_gcd(&self.f);
        (g.degree() == Some(0)).then(|| self.reduce(&s))
    }
}

type Series = Vec<UPoly>;

fn series_mul(k: &Field, a: &Series, b: &Series) -> Series {
    let mut out = vec![UPoly::zero(); ORDER + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(ORDER + 1 - i) {
            out[i + j] = &out[i + j] + &k.mul(ai, bj);
        }
    }
    out
}

/// `g(u(z))` by Horner's rule for a rational polynomial `g`.
fn compose(k: &Field, g: &UPoly, u: &Series) -> Series {
    let mut acc = vec![UPoly::zero(); ORDER + 1];
    for c in g.coeffs().iter().rev() {
        acc = series_mul(k, &acc, u);
        acc[0] = k.reduce(&(&acc[0] + &UPoly::constant(c.clone())));
    }
    acc
}

/// `sum_k z^k g_k(u(z))`.
fn compose_graded(k: &Field, parts: &[UPoly], u: &Series) -> Series {
    let mut out = vec![UPoly::zero(); ORDER + 1];
    for (shift, g) in parts.iter().enumerate() {
        for (i, c) in compose(k, g, u).into_iter().enumerate().take(ORDER + 1 - shift) {
            out[i + shift] = &out[i + shift] + &c;
        }
    }
    out
}

/// `f(1, u)` for a homogeneous form of degree `d` in `(x, y)`, or `f(u, 1)` when `swap`.
fn on_chart(f: &Poly2, d: u32, swap: bool) -> UPoly {
    UPoly::new(
        (0..=d)
            .map(|k| if swap { f.coeff(&[k, d - k]) } else { f.coeff(&[d - k, k]) })
            .collect(),
    )
}

/// Index of the real infinite point `w` with `I_w(C,Z) = 1`; `None` for
/// complex points or when the series does not terminate.
pub fn semi_hyperbolic_index(s: &QuadraticSystem, w: &ProjPoint) -> Option<i32> {
    // At [0:1] exchange x and y, which maps the point to [1:0].
    let (swap, point) = match &w.location {
        RootLocation::Vertical => (true, ProjPoint::rational(Rational::zero())),
        RootLocation::ComplexPair { .. } => return None,
        _ => (false, w.clone()),
    };
    type Part = fn(&QuadraticSystem, u32) -> Poly2;
    let (pp, qp): (Part, Part) = if swap {
        (QuadraticSystem::q_part, QuadraticSystem::p_part)
    } else {
        (QuadraticSystem::p_part, QuadraticSystem::q_part)
    };
    let u = UPoly::new(vec![Rational::zero(), Rational::one()]);
    // C_k(1, u) = u P_k(1, u) - Q_k(1, u), listed by decreasing degree so that
    // entry `i` multiplies `z^i`.
    let p_parts: Vec<UPoly> = (0..=2).rev().map(|d| on_chart(&pp(s, d), d, swap)).collect();
    let c_parts: Vec<UPoly> = (0..=2)
        .rev()
        .map(|d| &(&u * &on_chart(&pp(s, d), d, swap)) - &on_chart(&qp(s, d), d, swap))
        .collect();

    let field = Field { f: minimal_polynomial(&point)? };
    let lambda_poly = c_parts[0].derivative();
    let lambda_sign = point.sign_at(&lambda_poly)?;
    if lambda_sign == 0 {
        return None;
    }
    let lambda_inv = field.inv(&field.reduce(&lambda_poly))?;

    // Newton-free fixed point: each pass fixes one more coefficient of phi.
    let mut phi = vec![UPoly::zero(); ORDER + 1];
    phi[0] = field.reduce(&u);
    for _ in 0..ORDER {
        let r = compose_graded(&field, &c_parts, &phi);
        for i in 1..=ORDER {
            phi[i] = &phi[i] - &field.mul(&r[i], &lambda_inv);
        }
    }
    let along = compose_graded(&field, &p_parts, &phi);
    let (k, a) = along.iter().enumerate().find(|(_, c)| !field.reduce(c).is_zero())?;
    if k + 1 >= ORDER {
        return None;
    }
    let m = k + 1;
    if m % 2 == 0 {
        return Some(0);
    }
    Some(lambda_sign * point.sign_at(a)?)
}

/// Irreducible rational polynomial with root `u0`.
fn minimal_polynomial(w: &ProjPoint) -> Option<UPoly> {
    match &w.location {
        RootLocation::Rational(u) => Some(UPoly::linear_root(u)),
        RootLocation::RealAlgebraic { factor, .. } => {
            // Strip rational roots; what remains has degree at most three and
            // no rational root, hence is irreducible.
            let mut f = factor.primitive();
            for r in f.rational_roots() {
                f = f.div_rem(&UPoly::linear_root(&r)).0;
            }
            (f.degree()? <= 3).then_some(f)
        }
        _ => None,
    }
}
