//! Binary forms: homogeneous polynomials in `x, y` stored densely.
//!
//! `coeffs[k]` multiplies `x^(d-k) y^k`, so the dehomogenisation `f(1, u)`
//! has exactly the same coefficient vector.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::multivariate::Poly2;
use super::rational::{format_rational, int, sign, Rational};
use super::univariate::UPoly;
use super::PolyError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<Rational>,
}

/// Sign behaviour of a binary form over the real projective line.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    Zero,
    /// Nonnegative everywhere and not identically zero.
    Positive,
    /// Nonpositive everywhere and not identically zero.
    Negative,
    Indefinite,
}

impl BinaryForm {
    pub fn new(degree: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), degree as usize + 1, "coefficient count");
        Self { degree, coeffs }
    }

    /// Reads a homogeneous polynomial of the given degree.
    pub fn from_poly(p: &Poly2, degree: u32) -> Result<Self, PolyError> {
        let mut coeffs = vec![Rational::zero(); degree as usize + 1];
        for (e, c) in p.terms() {
            if e[0] + e[1] != degree {
                return Err(PolyError::NotHomogeneous { expected: degree });
            }
            coeffs[e[1] as usize] = c.clone();
        }
        Ok(Self { degree, coeffs })
    }

    pub fn to_poly(&self) -> Poly2 {
        Poly2::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| ([self.degree - k as u32, k as u32], c.clone())),
        )
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `f(1, u)`.
    pub fn dehomogenize(&self) -> UPoly {
        UPoly::new(self.coeffs.clone())
    }

    /// Multiplicity of the root `[0:1]`, i.e. how far `deg f(1,u)` drops.
    pub fn multiplicity_at_vertical(&self) -> usize {
        let d = self.dehomogenize().degree().unwrap_or(0);
        self.degree as usize - d
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut total = Rational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            total += c * num_traits::pow(x.clone(), self.degree as usize - k) * num_traits::pow(y.clone(), k);
        }
        total
    }

    /// Discriminant for degrees 2 and 3 (the classical normalisation).
    pub fn discriminant(&self) -> Rational {
        match self.degree {
            2 => {
                let (a, b, c) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
                b * b - int(4) * a * c
            }
            3 => {
                let (a, b, c, d) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2], &self.coeffs[3]);
                int(18) * a * b * c * d - int(4) * b * b * b * d + b * b * c * c
                    - int(4) * a * c * c * c
                    - int(27) * a * a * d * d
            }
            d => panic!("discriminant not implemented for degree {d}"),
        }
    }

    /// Exact sign test over the real projective line.
    pub fn definiteness(&self) -> Definiteness {
        if self.is_zero() {
            return Definiteness::Zero;
        }
        if self.multiplicity_at_vertical() % 2 == 1 {
            return Definiteness::Indefinite;
        }
        let u = self.dehomogenize();
        for (factor, mult) in u.squarefree_decomposition() {
            if mult % 2 == 1 && factor.count_real_roots() > 0 {
                return Definiteness::Indefinite;
            }
        }
        match sign(&u.leading()) {
            1 => Definiteness::Positive,
            _ => Definiteness::Negative,
        }
    }

    /// Coefficients rendered as strings, highest power of `x` first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

/// Jacobian `f_x g_y - f_y g_x`.
pub fn jacobian(f: &Poly2, g: &Poly2) -> Poly2 {
    &f.derivative(0) * &g.derivative(1) - &f.derivative(1) * &g.derivative(0)
}

/// Hessian `f_xx f_yy - f_xy^2`.
pub fn hessian(f: &Poly2) -> Poly2 {
    let fxy = f.derivative(0).derivative(1);
    &f.derivative(0).derivative(0) * &f.derivative(1).derivative(1) - &fxy * &fxy
}

/// Second transvectant `f_xx g_yy - 2 f_xy g_xy + f_yy g_xx`.
pub fn transvectant2(f: &Poly2, g: &Poly2) -> Poly2 {
    let fxx = f.derivative(0).derivative(0);
    let fxy = f.derivative(0).derivative(1);
    let fyy = f.derivative(1).derivative(1);
    let gxx = g.derivative(0).derivative(0);
    let gxy = g.derivative(0).derivative(1);
    let gyy = g.derivative(1).derivative(1);
    &fxx * &gyy - (&fxy * &gxy).scale(&int(2)) + &fyy * &gxx
}

/// Sign of a constant polynomial, or `None` when it is not constant.
pub fn constant_sign(p: &Poly2) -> Option<i32> {
    p.is_constant().then(|| sign(&p.constant_term()))
}

/// Definiteness of an arbitrary homogeneous polynomial (constants included).
pub fn definiteness_of(p: &Poly2) -> Result<Definiteness, PolyError> {
    if p.is_zero() {
        return Ok(Definiteness::Zero);
    }
    let d = p.total_degree().unwrap_or(0);
    let form = BinaryForm::from_poly(p, d)?;
    Ok(form.definiteness())
}

impl BinaryForm {
    /// Leading behaviour helper: `true` when the form is a nonzero constant multiple of `other`.
    pub fn proportional_to(&self, other: &BinaryForm) -> bool {
        if self.degree != other.degree || self.is_zero() || other.is_zero() {
            return false;
        }
        let (i, a) = self
            .coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .unwrap();
        if other.coeffs[i].is_zero() {
            return false;
        }
        let ratio = &other.coeffs[i] / a;
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(s, o)| &(s * &ratio) == o)
    }

    /// `true` when all coefficients are integers of absolute value at most `bound`.
    pub fn is_small(&self, bound: i64) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.denom().is_one() && c.abs() <= int(bound))
    }
}
