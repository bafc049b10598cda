//! Exact polynomial arithmetic over the rationals.
//!
//! * [`Poly`] sparse multivariate polynomials, with [`Poly2`] for forms in `x, y`.
//! * [`UPoly`] dense univariate polynomials with Sturm-based root isolation.
//! * [`BinaryForm`] homogeneous polynomials in `x, y` and their sign behaviour.
//! * Sylvester resultants and bivariate gcds.

mod binary;
pub mod gcd;
mod multivariate;
mod rational;
mod resultant;
mod roots;
mod univariate;

use thiserror::Error;

pub use binary::{
    constant_sign, definiteness_of, hessian, jacobian, transvectant2, BinaryForm, Definiteness,
};
pub use multivariate::{Poly, Poly2, Poly3};
pub use rational::{
    format_rational, from_f64, int, parse_rational, rat, sign, simplest_between, sqrt_approx,
    to_decimal, to_f64, Rational,
};
pub use resultant::{determinant, resultant, sylvester_resultant};
pub use roots::{projective_roots, PointDescriptor, ProjPoint, RootLocation};
pub use univariate::UPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("resultant of two zero polynomials")]
    DegenerateResultant,
    #[error("polynomial exceeds its formal degree {formal}")]
    DegreeExceeded { formal: usize },
    #[error("polynomial is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: u32 },
}
