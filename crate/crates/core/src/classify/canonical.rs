//! Linear reduction to the canonical families `S_I .. S_IV`.
//!
//! A linear change `x = N x~` sends the system to `a~(x~) = N^-1 a(N x~)`,
//! and `C2` to `det(N)^-1 C2(N x~)`. Choosing `N` to move the roots of `C2`
//! onto those of `xy(x-y)`, `x(x^2+y^2)`, `x^2 y` or `x^3` and then scaling
//! it fixes `C2` exactly, which pins four of the six quadratic coefficients;
//! the remaining two are the family parameters `g, h`.
//!
//! The entries of `N` may involve one square root, so the arithmetic runs in
//! `Q(sqrt d)`. A cubic `C2` with an irrational root and no rational one is
//! out of reach and reported as such.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::comitants::c_form;
use crate::poly::{format_rational, projective_roots, BinaryForm, ProjPoint, Rational, RootLocation, UPoly};
use crate::system::QuadraticSystem;

/// `a + b sqrt(d)`, with `d = 0` for plain rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub a: Rational,
    pub b: Rational,
    pub d: BigInt,
}

impl Surd {
    pub fn rational(a: Rational) -> Self {
        Self { a, b: Rational::zero(), d: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    /// `sqrt(r)` for `r >= 0`.
    pub fn sqrt(r: &Rational) -> Self {
        assert!(!r.is_negative(), "square root of a negative number");
        // sqrt(n/m) = sqrt(n m) / m, then pull square factors out of n m.
        let mut radicand = r.numer() * r.denom();
        let mut outside = BigInt::one();
        let mut p = BigInt::from(2);
        while &p * &p <= radicand && p < BigInt::from(100_000) {
            let sq = &p * &p;
            while (&radicand % &sq).is_zero() {
                radicand /= &sq;
                outside *= &p;
            }
            p += 1;
        }
        let coeff = Rational::new(outside, r.denom().clone());
        if radicand.is_zero() {
            return Self::zero();
        }
        if radicand.is_one() {
            return Self::rational(coeff);
        }
        let root = radicand.sqrt();
        if &root * &root == radicand {
            return Self::rational(coeff * Rational::from_integer(root));
        }
        Self { a: Rational::zero(), b: coeff, d: radicand }
    }

    fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        let d = if b.is_zero() { BigInt::zero() } else { d };
        Self { a, b, d }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    fn common_d(&self, other: &Self) -> BigInt {
        match (self.d.is_zero() || self.b.is_zero(), other.d.is_zero() || other.b.is_zero()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "surds from different quadratic fields");
                self.d.clone()
            }
        }
    }

    fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    pub fn recip(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero surd");
        Self::new(&self.a / &n, -&self.b / &n, self.d.clone())
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let d = self.d.to_f64().unwrap_or(0.0);
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * d.sqrt()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&format_rational(&self.a));
        }
        let root = format!("sqrt({})", self.d);
        let b = if self.b.is_one() {
            root
        } else if (-self.b.clone()).is_one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", format_rational(&self.b))
        };
        if self.a.is_zero() {
            f.write_str(&b)
        } else if let Some(rest) = b.strip_prefix('-') {
            write!(f, "{} - {rest}", format_rational(&self.a))
        } else {
            write!(f, "{} + {b}", format_rational(&self.a))
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add for &Surd {
    type Output = Surd;
    fn add(self, o: &Surd) -> Surd {
        Surd::new(&self.a + &o.a, &self.b + &o.b, self.common_d(o))
    }
}

impl Sub for &Surd {
    type Output = Surd;
    fn sub(self, o: &Surd) -> Surd {
        Surd::new(&self.a - &o.a, &self.b - &o.b, self.common_d(o))
    }
}

impl Mul for &Surd {
    type Output = Surd;
    fn mul(self, o: &Surd) -> Surd {
        let d = self.common_d(o);
        let dr = Rational::from_integer(d.clone());
        Surd::new(&self.a * &o.a + &self.b * &o.b * dr, &self.a * &o.b + &self.b * &o.a, d)
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    #[serde(rename = "S_I")]
    SI,
    #[serde(rename = "S_II")]
    SII,
    #[serde(rename = "S_III")]
    SIII,
    #[serde(rename = "S_IV")]
    SIV,
}

impl Family {
    /// Coefficients of the canonical `C2`, highest power of `x` first.
    fn target(self) -> [i64; 4] {
        match self {
            Family::SI => [0, 1, -1, 0],
            Family::SII => [1, 0, 1, 0],
            Family::SIII => [0, 1, 0, 0],
            Family::SIV => [1, 0, 0, 0],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::SI => "S_I",
            Family::SII => "S_II",
            Family::SIII => "S_III",
            Family::SIV => "S_IV",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonicalError {
    #[error("C2 vanishes identically")]
    DegenerateC2,
    #[error("the roots of C2 need a cubic extension of the rationals")]
    IrrationalRoots,
}

/// Result of [`canonical_reduce`].
#[derive(Clone, Debug, Serialize)]
pub struct CanonicalForm {
    pub family: Family,
    /// `x = N x~`, row-major.
    pub n: [[Surd; 2]; 2],
    /// `g, h, k, c, d, l, e, f` as in the family templates.
    pub params: Vec<(&'static str, Surd)>,
    /// Monomial coefficients `1, x, y, x^2, xy, y^2` of `p~` and `q~`.
    pub p: [Surd; 6],
    pub q: [Surd; 6],
}

impl CanonicalForm {
    /// The reduced system, when every coefficient is rational.
    pub fn rational_system(&self) -> Option<QuadraticSystem> {
        let side = |c: &[Surd; 6]| -> Option<[Rational; 6]> {
            let v: Option<Vec<Rational>> = c.iter().map(|s| s.as_rational().cloned()).collect();
            v.map(|v| v.try_into().expect("six entries"))
        };
        Some(QuadraticSystem::from_monomials(side(&self.p)?, side(&self.q)?))
    }

    pub fn param(&self, name: &str) -> &Surd {
        &self.params.iter().find(|(n, _)| *n == name).expect("known parameter").1
    }
}

type Vec2 = [Surd; 2];
type Mat2 = [[Surd; 2]; 2];

fn r(v: &Rational) -> Surd {
    Surd::rational(v.clone())
}

fn det(n: &Mat2) -> Surd {
    &(&n[0][0] * &n[1][1]) - &(&n[0][1] * &n[1][0])
}

fn point_vector(w: &ProjPoint) -> Option<Vec2> {
    match &w.location {
        RootLocation::Vertical => Some([Surd::zero(), Surd::one()]),
        RootLocation::Rational(u) => Some([Surd::one(), r(u)]),
        _ => None,
    }
}

/// The two real roots of a real-rooted quadratic factor, as vectors `(1, u)`.
fn conjugate_vectors(factor: &UPoly) -> Option<(Vec2, Vec2)> {
    if factor.degree() != Some(2) {
        return None;
    }
    let c = factor.coeffs();
    let (c0, c1, c2) = (&c[0], &c[1], &c[2]);
    let disc = c1 * c1 - Rational::from_integer(4.into()) * c0 * c2;
    let root = Surd::sqrt(&disc);
    let denom = r(&(Rational::from_integer(2.into()) * c2)).recip();
    let minus_b = r(&-c1.clone());
    let u1 = &(&minus_b + &root) * &denom;
    let u2 = &(&minus_b - &root) * &denom;
    Some(([Surd::one(), u1], [Surd::one(), u2]))
}

/// `f(N x~)` for a binary cubic with coefficients highest power of `x` first.
fn compose_cubic(c: &[Rational], n: &Mat2) -> [Surd; 4] {
    // x = n00 X + n01 Y, y = n10 X + n11 Y; expand as polynomials in (X, Y).
    let lin_x = [n[0][0].clone(), n[0][1].clone()];
    let lin_y = [n[1][0].clone(), n[1][1].clone()];
    let mut out: [Surd; 4] = std::array::from_fn(|_| Surd::zero());
    for (k, ck) in c.iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        let mut poly = vec![r(ck)];
        for _ in 0..3 - k {
            poly = mul_linear(&poly, &lin_x);
        }
        for _ in 0..k {
            poly = mul_linear(&poly, &lin_y);
        }
        for (i, t) in poly.iter().enumerate() {
            out[i] = &out[i] + t;
        }
    }
    out
}

/// Multiplies a binary form (coefficients by descending `X` power) by `l0 X + l1 Y`.
fn mul_linear(f: &[Surd], l: &[Surd; 2]) -> Vec<Surd> {
    let mut out = vec![Surd::zero(); f.len() + 1];
    for (i, c) in f.iter().enumerate() {
        out[i] = &out[i] + &(c * &l[0]);
        out[i + 1] = &out[i + 1] + &(c * &l[1]);
    }
    out
}

/// Ratio `lambda` with `f = lambda * target`, if `f` is proportional to `target`.
fn proportionality(f: &[Surd; 4], target: [i64; 4]) -> Option<Surd> {
    let k = target.iter().position(|&t| t != 0)?;
    let lambda = &f[k] * &r(&Rational::from_integer(target[k].into())).recip();
    if lambda.is_zero() {
        return None;
    }
    let ok = f
        .iter()
        .zip(target)
        .all(|(fi, t)| *fi == &lambda * &r(&Rational::from_integer(t.into())) || (fi.is_zero() && t == 0));
    ok.then_some(lambda)
}

/// Candidate `N` before scaling.
fn root_frame(c2: &BinaryForm, family: Family) -> Result<Mat2, CanonicalError> {
    let roots = projective_roots(c2);
    let col = |a: &Vec2, b: &Vec2| -> Mat2 { [[a[0].clone(), b[0].clone()], [a[1].clone(), b[1].clone()]] };
    match family {
        Family::SI => {
            let rational: Vec<Vec2> = roots.iter().filter_map(|(w, _)| point_vector(w)).collect();
            let (wa, wb, wc) = match rational.len() {
                3 => (rational[0].clone(), rational[1].clone(), rational[2].clone()),
                1 => {
                    let factor = roots
                        .iter()
                        .find_map(|(w, _)| match &w.location {
                            RootLocation::RealAlgebraic { factor, .. } => Some(factor.clone()),
                            _ => None,
                        })
                        .ok_or(CanonicalError::IrrationalRoots)?;
                    let (a, b) = conjugate_vectors(&factor).ok_or(CanonicalError::IrrationalRoots)?;
                    (a, b, rational[0].clone())
                }
                _ => return Err(CanonicalError::IrrationalRoots),
            };
            // alpha wa + beta wb = wc
            let m = col(&wa, &wb);
            let dm = det(&m).recip();
            let alpha = &(&(&wc[0] * &wb[1]) - &(&wc[1] * &wb[0])) * &dm;
            let beta = &(&(&wa[0] * &wc[1]) - &(&wa[1] * &wc[0])) * &dm;
            let a = [&alpha * &wa[0], &alpha * &wa[1]];
            let b = [&beta * &wb[0], &beta * &wb[1]];
            Ok(col(&a, &b))
        }
        Family::SII => {
            let (w, _) = roots.iter().find(|(w, _)| w.is_real()).expect("one real root");
            let v = point_vector(w).ok_or(CanonicalError::IrrationalRoots)?;
            let vr: [Rational; 2] = [v[0].a.clone(), v[1].a.clone()];
            let quad = definite_factor(c2, w);
            let bil = |x: &[Rational; 2], y: &[Rational; 2]| {
                let half = Rational::new(1.into(), 2.into());
                &quad[0] * &x[0] * &y[0] + &quad[1] * &half * (&x[0] * &y[1] + &x[1] * &y[0]) + &quad[2] * &x[1] * &y[1]
            };
            let half = Rational::new(1.into(), 2.into());
            let u0 = [
                -(&quad[1] * &half * &vr[0] + &quad[2] * &vr[1]),
                &quad[0] * &vr[0] + &quad[1] * &half * &vr[1],
            ];
            let scale = Surd::sqrt(&(bil(&vr, &vr) / bil(&u0, &u0)));
            let u = [&scale * &r(&u0[0]), &scale * &r(&u0[1])];
            Ok(col(&u, &v))
        }
        Family::SIII => {
            let simple = roots.iter().find(|(_, m)| *m == 1).expect("simple root");
            let double = roots.iter().find(|(_, m)| *m == 2).expect("double root");
            Ok(col(&point_vector(&simple.0).unwrap(), &point_vector(&double.0).unwrap()))
        }
        Family::SIV => {
            let v = point_vector(&roots[0].0).expect("rational triple root");
            let u = if v[0].is_zero() { [Surd::one(), Surd::zero()] } else { [Surd::zero(), Surd::one()] };
            Ok(col(&u, &v))
        }
    }
}

/// The quadratic cofactor `q0 x^2 + q1 xy + q2 y^2` of the real root `w` of `c2`.
fn definite_factor(c2: &BinaryForm, w: &ProjPoint) -> [Rational; 3] {
    let c = c2.coeffs();
    match &w.location {
        RootLocation::Vertical => [c[0].clone(), c[1].clone(), c[2].clone()],
        RootLocation::Rational(u0) => {
            // C2(1, u) = (u - u0) (q0 + q1 u + q2 u^2) and C2 = (y - u0 x) Q(x, y).
            let (quot, rem) = c2.dehomogenize().div_rem(&UPoly::linear_root(u0));
            debug_assert!(rem.is_zero());
            let q = quot.coeffs();
            let get = |i: usize| q.get(i).cloned().unwrap_or_else(Rational::zero);
            [get(0), get(1), get(2)]
        }
        _ => unreachable!("only rational roots reach here"),
    }
}

fn family_of(c2: &BinaryForm) -> Family {
    let roots = projective_roots(c2);
    match (roots.len(), roots.iter().all(|(w, _)| w.is_real())) {
        (3, true) => Family::SI,
        (3, false) => Family::SII,
        (2, _) => Family::SIII,
        _ => Family::SIV,
    }
}

/// Monomial coefficients of `f(N x~)` for a quadratic `f`.
fn compose_quadratic(f: &[Rational; 6], n: &Mat2) -> [Surd; 6] {
    let x = [Surd::zero(), n[0][0].clone(), n[0][1].clone()];
    let y = [Surd::zero(), n[1][0].clone(), n[1][1].clone()];
    // Affine-linear polys as [const, X, Y]; products into [1, X, Y, X^2, XY, Y^2].
    let one = [Surd::one(), Surd::zero(), Surd::zero()];
    let prod = |a: &[Surd; 3], b: &[Surd; 3]| -> [Surd; 6] {
        [
            &a[0] * &b[0],
            &(&a[0] * &b[1]) + &(&a[1] * &b[0]),
            &(&a[0] * &b[2]) + &(&a[2] * &b[0]),
            &a[1] * &b[1],
            &(&a[1] * &b[2]) + &(&a[2] * &b[1]),
            &a[2] * &b[2],
        ]
    };
    let monos = [prod(&one, &one), prod(&x, &one), prod(&y, &one), prod(&x, &x), prod(&x, &y), prod(&y, &y)];
    let mut out: [Surd; 6] = std::array::from_fn(|_| Surd::zero());
    for (c, m) in f.iter().zip(&monos) {
        if c.is_zero() {
            continue;
        }
        for (o, t) in out.iter_mut().zip(m) {
            *o = &*o + &(&r(c) * t);
        }
    }
    out
}

/// Reduces `s` to one of `S_I .. S_IV` by a linear change of coordinates.
pub fn canonical_reduce(s: &QuadraticSystem) -> Result<CanonicalForm, CanonicalError> {
    let c2 = BinaryForm::from_poly(&c_form(s, 2), 3).expect("cubic form");
    if c2.is_zero() {
        return Err(CanonicalError::DegenerateC2);
    }
    let family = family_of(&c2);
    let target = family.target();
    let identity: Mat2 = [[Surd::one(), Surd::zero()], [Surd::zero(), Surd::one()]];
    let mut n = if proportionality(&compose_cubic(c2.coeffs(), &identity), target).is_some() {
        identity
    } else {
        root_frame(&c2, family)?
    };
    let lambda = proportionality(&compose_cubic(c2.coeffs(), &n), target).expect("frame maps roots onto the target");
    let scale = &det(&n) * &lambda.recip();
    n = n.map(|row| row.map(|e| &e * &scale));

    let p = compose_quadratic(&s.monomials(0), &n);
    let q = compose_quadratic(&s.monomials(1), &n);
    let inv_det = det(&n).recip();
    let (pt, qt): (Vec<Surd>, Vec<Surd>) = p
        .iter()
        .zip(&q)
        .map(|(pi, qi)| {
            let a = &(&(&n[1][1] * pi) - &(&n[0][1] * qi)) * &inv_det;
            let b = &(&(&n[0][0] * qi) - &(&n[1][0] * pi)) * &inv_det;
            (a, b)
        })
        .unzip();
    let p: [Surd; 6] = pt.try_into().expect("six");
    let q: [Surd; 6] = qt.try_into().expect("six");

    // y p2 - x q2 with p2 = (p3, p4, p5) on x^2, xy, y^2.
    let c2_new = [-&q[3], &p[3] - &q[4], &p[4] - &q[5], p[5].clone()];
    debug_assert_eq!(proportionality(&c2_new, target), Some(Surd::one()));

    let params = vec![
        ("g", p[3].clone()),
        ("h", q[5].clone()),
        ("k", p[0].clone()),
        ("c", p[1].clone()),
        ("d", p[2].clone()),
        ("l", q[0].clone()),
        ("e", q[1].clone()),
        ("f", q[2].clone()),
    ];
    Ok(CanonicalForm { family, n, params, p, q })
}
