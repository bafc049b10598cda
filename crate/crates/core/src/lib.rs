//! Exact classification of planar quadratic differential systems
//! `x' = p(x, y)`, `y' = q(x, y)` by their phase portraits near infinity.
//!
//! The pipeline runs [`system`] validation, the affine comitants of
//! [`comitants`], the intersection divisors of [`divisors`] and the table
//! lookups of [`classify`]. [`tensorial`] and [`poincare`] provide independent
//! symbolic and numeric cross-checks, and [`report`] turns everything into
//! JSON.

pub mod classify;
pub mod comitants;
pub mod corpus;
pub mod divisors;
pub mod poincare;
pub mod poly;
pub mod report;
pub mod system;
pub mod tensorial;
