//! Divisors on the line at infinity `Z = 0`.
//!
//! `D_S(C,Z)` records the root multiplicities of the cubic `C2`, and
//! `D_S(P,Q;Z)` the intersection multiplicities of `P = 0` and `Q = 0` at
//! infinity. The latter is read off the first non-vanishing `mu_m`: its linear
//! factors are exactly the common points at infinity, each raised to its
//! intersection multiplicity.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::comitants::{Comitant, ComitantSet};
use crate::poly::{projective_roots, sylvester_resultant, BinaryForm, PointDescriptor, ProjPoint, Rational, UPoly};
use crate::system::QuadraticSystem;

/// Decimal digits used when describing irrational support points.
pub const POINT_DIGITS: usize = 50;

/// A point at infinity together with an integer-tuple value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor<V> {
    pub entries: Vec<(ProjPoint, V)>,
}

impl<V> Divisor<V> {
    pub fn support(&self) -> impl Iterator<Item = &ProjPoint> {
        self.entries.iter().map(|(p, _)| p)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Divisor<usize> {
    pub fn degree(&self) -> usize {
        self.entries.iter().map(|(_, v)| v).sum()
    }

    /// Largest value, zero for the empty divisor.
    pub fn max_value(&self) -> usize {
        self.entries.iter().map(|(_, v)| *v).max().unwrap_or(0)
    }

    /// The type `{(s(m), m) : 1 <= m <= max}` with `s(m)` the number of points of value `m`.
    pub fn divisor_type(&self) -> BTreeSet<(usize, usize)> {
        (1..=self.max_value())
            .map(|m| (self.entries.iter().filter(|(_, v)| *v == m).count(), m))
            .collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum DivisorError {
    #[error("all mu_i vanish: p and q have a common component")]
    NonEssential,
    #[error("intersection points at infinity do not lie on C2 = 0: {0}")]
    InternalInconsistency(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleInapplicable {
    #[error("[0:1:0] lies on both conics, so the projection from it is not generic")]
    VerticalCommonPoint,
    #[error("Res_y(p, q) vanishes identically")]
    ZeroResultant,
}

/// `D_S(C,Z)`: the distinct roots of `C2` with multiplicities (degree 3).
pub fn divisor_cz(set: &ComitantSet) -> Divisor<usize> {
    Divisor { entries: projective_roots(&set.form(Comitant::C2)) }
}

/// `Delta_S`: the index of the first non-vanishing `mu_i`.
pub fn delta_s(set: &ComitantSet) -> Result<usize, DivisorError> {
    crate::comitants::delta(set).ok_or(DivisorError::NonEssential)
}

/// `D_S(P,Q;Z)` over the support of `D_S(C,Z)`; points with zero multiplicity are dropped.
pub fn divisor_pqz(set: &ComitantSet) -> Result<Divisor<usize>, DivisorError> {
    let delta = delta_s(set)?;
    if delta == 0 {
        return Ok(Divisor { entries: Vec::new() });
    }
    let mu = BinaryForm::from_poly(set.mu(delta), delta as u32).expect("mu_i is a form of degree i");
    let mut entries = Vec::new();
    for (w, _) in divisor_cz(set).entries {
        let m = w.multiplicity_in(&mu).expect("mu_delta is nonzero");
        if m > 0 {
            entries.push((w, m));
        }
    }
    let found: usize = entries.iter().map(|(_, m)| m).sum();
    if found != delta {
        return Err(DivisorError::InternalInconsistency(format!(
            "mu_{delta} has {found} of its {delta} roots on C2 = 0"
        )));
    }
    Ok(Divisor { entries })
}

/// Integer invariants attached to the two divisors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorSummary {
    pub delta_s: usize,
    pub m_c: usize,
    /// Number of distinct common points of `P` and `Q` at infinity.
    pub n_inf_f: usize,
    pub nu: usize,
    /// Type of `D_S(P,Q;Z)`.
    pub pq_type: BTreeSet<(usize, usize)>,
    /// Type of `D_S(C,Z)`.
    pub cz_type: BTreeSet<(usize, usize)>,
}

pub fn summary(cz: &Divisor<usize>, pq: &Divisor<usize>) -> DivisorSummary {
    DivisorSummary {
        delta_s: pq.degree(),
        m_c: cz.max_value(),
        n_inf_f: pq.len(),
        nu: pq.max_value(),
        pq_type: pq.divisor_type(),
        cz_type: cz.divisor_type(),
    }
}

/// Both divisors of `s` with their summary.
#[derive(Clone, Debug)]
pub struct Divisors {
    pub cz: Divisor<usize>,
    pub pq: Divisor<usize>,
    pub summary: DivisorSummary,
}

pub fn divisors(set: &ComitantSet) -> Result<Divisors, DivisorError> {
    let cz = divisor_cz(set);
    let pq = divisor_pqz(set)?;
    let summary = summary(&cz, &pq);
    Ok(Divisors { cz, pq, summary })
}

/// `I_w(P,Q)` for a support point of `D_S(C,Z)`.
pub fn pq_multiplicity(pq: &Divisor<usize>, w: &ProjPoint) -> usize {
    pq.entries.iter().find(|(v, _)| v == w).map_or(0, |(_, m)| *m)
}

/// Number of finite common zeros of `p` and `q`, with multiplicity.
///
/// Projects from `[0:1:0]`: the homogeneous resultant `Res_Y(P, Q)(X, Z)` has
/// degree four and its roots with `Z != 0` account for every finite
/// intersection, so their multiplicities sum to the answer.
pub fn finite_intersection_oracle(s: &QuadraticSystem) -> Result<usize, OracleInapplicable> {
    let a = s.coefficients();
    if a[5].is_zero() && a[11].is_zero() {
        return Err(OracleInapplicable::VerticalCommonPoint);
    }
    let res = sylvester_resultant(&s.p(), &s.q(), 1, 2, 2).expect("quadratic in y");
    if res.is_zero() {
        return Err(OracleInapplicable::ZeroResultant);
    }
    let coeffs: Vec<Rational> = (0..=4u32).map(|k| res.coeff(&[k, 0])).collect();
    let r = UPoly::new(coeffs);
    Ok(r.squarefree_decomposition().iter().map(|(f, m)| f.degree().unwrap_or(0) * m).sum())
}

/// Exact and 50-digit description of a support point.
pub fn describe_point(w: &ProjPoint) -> PointDescriptor {
    w.descriptor(POINT_DIGITS)
}
