//! Exact description of points on the real projective line `Z = 0`.
//!
//! A point `[X:Y]` is either `[0:1]` or `[1:u]` with `u` a root of some
//! square-free rational polynomial. Real roots carry an isolating interval;
//! a conjugate pair is identified by its square-free factor, which has no
//! other non-real roots.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::binary::BinaryForm;
use super::rational::{format_rational, rat, sign, sqrt_approx, to_decimal, to_f64, Rational};
use super::univariate::UPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RootLocation {
    /// The point `[0:1]`.
    Vertical,
    /// `[1:u]` with `u` rational.
    Rational(Rational),
    /// `[1:u]` with `u` the unique root of `factor` in `(lo, hi]`.
    RealAlgebraic { factor: UPoly, lo: Rational, hi: Rational },
    /// A conjugate pair `[1:u], [1:ū]`; the sign picks the member with
    /// positive or negative imaginary part.
    ComplexPair { factor: UPoly, upper: bool },
}

/// A point of the line at infinity, possibly complex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjPoint {
    pub location: RootLocation,
}

/// Human-readable coordinates with fixed decimal precision.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PointDescriptor {
    /// `"[0:1]"`, `"[1:u]"` with exact `u`, or an algebraic description.
    pub exact: String,
    pub real: bool,
    /// Decimal approximation of `u` (real part for complex points), absent for `[0:1]`.
    pub u_re: Option<String>,
    /// Decimal approximation of the imaginary part of `u` for complex points.
    pub u_im: Option<String>,
}

impl ProjPoint {
    pub fn vertical() -> Self {
        Self { location: RootLocation::Vertical }
    }

    pub fn rational(u: Rational) -> Self {
        Self { location: RootLocation::Rational(u) }
    }

    pub fn is_real(&self) -> bool {
        !matches!(self.location, RootLocation::ComplexPair { .. })
    }

    /// `true` when the point is a root of the binary form `h` (`h != 0`).
    pub fn is_root_of(&self, h: &BinaryForm) -> bool {
        if h.is_zero() {
            return true;
        }
        let hu = h.dehomogenize();
        match &self.location {
            RootLocation::Vertical => h.multiplicity_at_vertical() > 0,
            RootLocation::Rational(u) => hu.eval(u).is_zero(),
            RootLocation::RealAlgebraic { factor, lo, hi } => {
                let g = factor.gcd(&hu);
                g.degree().unwrap_or(0) > 0 && g.count_roots_in(lo, hi) > 0
            }
            RootLocation::ComplexPair { factor, .. } => {
                let g = factor.gcd(&hu);
                let d = g.degree().unwrap_or(0);
                d > 0 && d > g.count_real_roots()
            }
        }
    }

    /// Multiplicity of the point as a root of `h`; `None` when `h == 0`.
    pub fn multiplicity_in(&self, h: &BinaryForm) -> Option<usize> {
        if h.is_zero() {
            return None;
        }
        if let RootLocation::Vertical = self.location {
            return Some(h.multiplicity_at_vertical());
        }
        let mut f = h.dehomogenize();
        let mut k = 0;
        while !f.is_zero() && self.is_root_of_upoly(&f) {
            k += 1;
            f = f.derivative();
        }
        Some(k)
    }

    fn is_root_of_upoly(&self, f: &UPoly) -> bool {
        let deg = f.degree().unwrap_or(0) as u32;
        self.is_root_of(&BinaryForm::new(deg, pad(f, deg)))
    }

    /// Exact sign of `g(u)` at a real point `[1:u]`; `None` at `[0:1]` and at complex points.
    pub fn sign_at(&self, g: &UPoly) -> Option<i32> {
        match &self.location {
            RootLocation::Rational(u) => Some(sign(&g.eval(u))),
            RootLocation::RealAlgebraic { factor, lo, hi } => {
                if g.is_zero() {
                    return Some(0);
                }
                let common = factor.gcd(g);
                if common.degree().unwrap_or(0) > 0 && common.count_roots_in(lo, hi) > 0 {
                    return Some(0);
                }
                let sf = g.squarefree_part();
                let (mut a, mut b) = (lo.clone(), hi.clone());
                while sf.count_roots_in(&a, &b) > 0 {
                    let width = (&b - &a) / Rational::from_integer(2.into());
                    (a, b) = factor.refine_root(&a, &b, &width);
                }
                Some(sign(&g.eval(&b)))
            }
            RootLocation::Vertical | RootLocation::ComplexPair { .. } => None,
        }
    }

    /// Linear form `Y0 x - X0 y` vanishing at the point, when it is rational.
    pub fn linear_factor(&self) -> Option<BinaryForm> {
        match &self.location {
            RootLocation::Vertical => Some(BinaryForm::new(1, vec![Rational::one(), Rational::zero()])),
            RootLocation::Rational(u) => Some(BinaryForm::new(1, vec![u.clone(), -Rational::one()])),
            _ => None,
        }
    }

    /// Floating-point `u` (real part for complex points); `None` at `[0:1]`.
    pub fn u_f64(&self) -> Option<f64> {
        match &self.location {
            RootLocation::Vertical => None,
            RootLocation::Rational(u) => Some(to_f64(u)),
            RootLocation::RealAlgebraic { factor, lo, hi } => {
                let (a, b) = factor.refine_root(lo, hi, &rat(1, 1_000_000_000_000_000));
                Some(to_f64(&((a + b) / Rational::from_integer(2.into()))))
            }
            RootLocation::ComplexPair { .. } => Some(to_f64(&self.complex_parts(20).0)),
        }
    }

    /// Rational approximation of real `u` within `10^-digits`.
    pub fn u_approx(&self, digits: usize) -> Option<Rational> {
        match &self.location {
            RootLocation::Vertical | RootLocation::ComplexPair { .. } => None,
            RootLocation::Rational(u) => Some(u.clone()),
            RootLocation::RealAlgebraic { factor, lo, hi } => {
                let tol = Rational::new(One::one(), num_bigint::BigInt::from(10u32).pow(digits as u32));
                let (a, b) = factor.refine_root(lo, hi, &tol);
                Some((a + b) / Rational::from_integer(2.into()))
            }
        }
    }

    /// Real and imaginary parts of `u` for a complex point.
    fn complex_parts(&self, digits: usize) -> (Rational, Rational) {
        let RootLocation::ComplexPair { factor, upper } = &self.location else {
            panic!("complex_parts on a real point");
        };
        let quad = match factor.degree() {
            Some(2) => factor.clone(),
            _ => {
                // Deflate the real roots numerically to expose the quadratic factor.
                let mut q = factor.clone();
                for (lo, hi) in factor.isolate_real_roots() {
                    let tol = Rational::new(One::one(), num_bigint::BigInt::from(10u32).pow(digits as u32 + 10));
                    let (a, b) = factor.refine_root(&lo, &hi, &tol);
                    let r = (a + b) / Rational::from_integer(2.into());
                    q = synthetic_division(&q, &r);
                }
                q
            }
        };
        let c = quad.coeffs();
        let (c0, c1, c2) = (&c[0], &c[1], &c[2]);
        let two = Rational::from_integer(2.into());
        let re = -c1 / (&two * c2);
        let disc = Rational::from_integer(4.into()) * c2 * c0 - c1 * c1;
        let im_abs = sqrt_approx(&disc.abs(), digits + 5) / (&two * c2.abs());
        (re, if *upper { im_abs } else { -im_abs })
    }

    /// Exact and decimal description.
    pub fn descriptor(&self, digits: usize) -> PointDescriptor {
        match &self.location {
            RootLocation::Vertical => PointDescriptor {
                exact: "[0:1]".into(),
                real: true,
                u_re: None,
                u_im: None,
            },
            RootLocation::Rational(u) => PointDescriptor {
                exact: format!("[1:{}]", format_rational(u)),
                real: true,
                u_re: Some(to_decimal(u, digits)),
                u_im: None,
            },
            RootLocation::RealAlgebraic { factor, lo, hi } => PointDescriptor {
                exact: format!(
                    "[1:u], {} = 0, u in ({}, {}]",
                    describe(factor),
                    format_rational(lo),
                    format_rational(hi)
                ),
                real: true,
                u_re: Some(to_decimal(&self.u_approx(digits + 5).unwrap(), digits)),
                u_im: None,
            },
            RootLocation::ComplexPair { factor, upper } => {
                let (re, im) = self.complex_parts(digits + 5);
                PointDescriptor {
                    exact: format!(
                        "[1:u], {} = 0, Im u {} 0",
                        describe(factor),
                        if *upper { ">" } else { "<" }
                    ),
                    real: false,
                    u_re: Some(to_decimal(&re, digits)),
                    u_im: Some(to_decimal(&im, digits)),
                }
            }
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor(6).exact)
    }
}

fn describe(p: &UPoly) -> String {
    let poly = super::multivariate::Poly::<1>::from_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| ([k as u32], c.clone())),
    );
    poly.format_with(&["u"])
}

fn pad(f: &UPoly, deg: u32) -> Vec<Rational> {
    let mut c = f.coeffs().to_vec();
    c.resize(deg as usize + 1, Rational::zero());
    c
}

fn synthetic_division(p: &UPoly, r: &Rational) -> UPoly {
    let c = p.coeffs();
    let n = c.len();
    let mut out = vec![Rational::zero(); n - 1];
    let mut acc = Rational::zero();
    for k in (1..n).rev() {
        acc = acc * r + &c[k];
        out[k - 1] = acc.clone();
    }
    UPoly::new(out)
}

/// Distinct roots of a nonzero binary form with their multiplicities.
///
/// Real roots come first (`[0:1]` leading, then increasing `u`), followed by
/// complex points in conjugate order.
///
/// # Panics
/// Panics if a square-free factor carries more than one conjugate pair; the
/// forms met in this crate have degree at most three.
pub fn projective_roots(f: &BinaryForm) -> Vec<(ProjPoint, usize)> {
    assert!(!f.is_zero(), "roots of the zero form");
    let mut out = Vec::new();
    let vert = f.multiplicity_at_vertical();
    if vert > 0 {
        out.push((ProjPoint::vertical(), vert));
    }
    let mut real = Vec::new();
    let mut complex = Vec::new();
    for (factor, mult) in f.dehomogenize().squarefree_decomposition() {
        let factor = factor.primitive();
        let intervals = factor.isolate_real_roots();
        let nonreal = factor.degree().unwrap_or(0) - intervals.len();
        for (lo, hi) in intervals {
            let loc = match factor.rational_root_in(&lo, &hi) {
                Some(r) => RootLocation::Rational(r),
                None => RootLocation::RealAlgebraic { factor: factor.clone(), lo: lo.clone(), hi: hi.clone() },
            };
            real.push((lo, ProjPoint { location: loc }, mult));
        }
        match nonreal {
            0 => {}
            2 => {
                for upper in [true, false] {
                    complex.push((ProjPoint { location: RootLocation::ComplexPair { factor: factor.clone(), upper } }, mult));
                }
            }
            _ => panic!("more than one conjugate pair in a square-free factor"),
        }
    }
    real.sort_by(|a, b| a.0.cmp(&b.0));
    out.extend(real.into_iter().map(|(_, p, m)| (p, m)));
    out.extend(complex);
    out
}
