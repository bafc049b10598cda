//! Classification by infinite singularities.
//!
//! A validated system is assigned, in order, its stratum (the type of
//! `D_S(C,Z)`), its class `Sigma_1..Sigma_36` of intersection divisors at
//! infinity and its topological figure `1..40` together with the fused
//! divisor `(I_w(C,Z), I_w(P,Q), j(w))`. Each stage evaluates every row of
//! its table and insists on exactly one match.

pub mod canonical;
pub mod semihyperbolic;
pub mod tables;

use serde::Serialize;
use thiserror::Error;

use crate::comitants::{self, Comitant, ComitantSet};
use crate::divisors::{self, pq_multiplicity, Divisors, DivisorError};
use crate::poly::{definiteness_of, Definiteness, Poly2, ProjPoint, RootLocation, UPoly};
use crate::system::{QuadraticSystem, ValidationError};

use tables::{Atom, PatternEntry, Relation, FIGURE_ROWS, GEOMETRY_ROWS, SIGMA_ROWS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error(transparent)]
    Divisor(#[from] DivisorError),
    #[error("{table}: {} rows match ({matches:?})", matches.len())]
    ClassificationGap { table: &'static str, matches: Vec<usize> },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Stratum of the intersection divisor of C and Z, numbered 1 to 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DszType {
    /// Three distinct real points, `eta > 0`.
    ThreeReal,
    /// One real point and a conjugate pair, `eta < 0`.
    OneRealTwoComplex,
    /// A double and a simple real point, `eta = 0`, `M != 0`.
    DoublePlusSimple,
    /// A triple real point, `M = 0`.
    Triple,
}

impl DszType {
    pub fn label(self) -> u8 {
        self as u8 + 1
    }

    /// The divisor type written with points `q1, q2, q3`.
    pub fn divisor(self) -> &'static str {
        match self {
            DszType::ThreeReal => "q1+q2+q3",
            DszType::OneRealTwoComplex => "q1c+q2c+q3",
            DszType::DoublePlusSimple => "2q1+q2",
            DszType::Triple => "3q",
        }
    }

    fn from_label(l: u8) -> Self {
        [Self::ThreeReal, Self::OneRealTwoComplex, Self::DoublePlusSimple, Self::Triple][l as usize - 1]
    }
}

/// Evaluates one condition. Sign conditions on a form that changes sign are reported as errors.
pub fn evaluate_atom(set: &ComitantSet, atom: &Atom) -> Result<bool, ClassifyError> {
    match atom.relation {
        Relation::Zero => Ok(atom.factors.iter().any(|&c| set.is_zero(c))),
        Relation::NonZero => Ok(atom.factors.iter().all(|&c| !set.is_zero(c))),
        rel => {
            let product = atom.factors.iter().fold(Poly2::one(), |acc, &c| &acc * set.get(c));
            let d = definiteness_of(&product).map_err(|e| ClassifyError::InternalInconsistency(e.to_string()))?;
            use Definiteness::*;
            match (rel, d) {
                (_, Indefinite) => Err(ClassifyError::InternalInconsistency(format!(
                    "{atom} is tested but the form changes sign"
                ))),
                (Relation::Positive, d) => Ok(d == Positive),
                (Relation::Negative, d) => Ok(d == Negative),
                (Relation::NonNegative, d) => Ok(d != Negative),
                (Relation::NonPositive, d) => Ok(d != Positive),
                _ => unreachable!(),
            }
        }
    }
}

/// A row holds when every atom holds. A sign test on a form that changes
/// sign is only an error when all other atoms of the row hold; otherwise the
/// row is simply rejected by the failing atom.
pub fn evaluate_conditions(set: &ComitantSet, atoms: &[Atom]) -> Result<bool, ClassifyError> {
    let mut deferred = None;
    for atom in atoms {
        match evaluate_atom(set, atom) {
            Ok(true) => {}
            Ok(false) => return Ok(false),
            Err(e) => deferred = deferred.or(Some(e)),
        }
    }
    deferred.map_or(Ok(true), Err)
}

fn unique_match<'a, T: 'a>(
    table: &'static str,
    set: &ComitantSet,
    rows: impl Iterator<Item = &'a (Vec<Atom>, T)>,
) -> Result<usize, ClassifyError> {
    let mut matches = Vec::new();
    for (i, (atoms, _)) in rows.enumerate() {
        if evaluate_conditions(set, atoms)? {
            matches.push(i);
        }
    }
    match matches.as_slice() {
        [i] => Ok(*i),
        _ => Err(ClassifyError::ClassificationGap { table, matches }),
    }
}

pub fn dsz_type(set: &ComitantSet) -> Result<DszType, ClassifyError> {
    let dsz = &tables::parsed().dsz;
    let mut matches = Vec::new();
    for (i, atoms) in dsz.iter().enumerate() {
        if evaluate_conditions(set, atoms)? {
            matches.push(i);
        }
    }
    match matches.as_slice() {
        [i] => Ok(DszType::from_label(*i as u8 + 1)),
        _ => Err(ClassifyError::ClassificationGap { table: "stratum", matches }),
    }
}

/// Index into [`SIGMA_ROWS`] of the unique matching row.
pub fn sigma_row(set: &ComitantSet) -> Result<usize, ClassifyError> {
    unique_match("sigma", set, tables::parsed().sigma.iter())
}

/// Index into [`FIGURE_ROWS`] of the unique matching row.
pub fn figure_row(set: &ComitantSet) -> Result<usize, ClassifyError> {
    unique_match("figure", set, tables::parsed().figure.iter())
}

/// A support point of the divisors with its local data.
#[derive(Clone, Debug)]
pub struct InfinitePoint {
    pub point: ProjPoint,
    pub i_cz: usize,
    pub i_pq: usize,
}

impl InfinitePoint {
    fn key(&self) -> (usize, usize, bool) {
        (self.i_cz, self.i_pq, !self.point.is_real())
    }
}

pub fn infinite_points(divs: &Divisors) -> Vec<InfinitePoint> {
    divs.cz
        .entries
        .iter()
        .map(|(w, m)| InfinitePoint { point: w.clone(), i_cz: *m, i_pq: pq_multiplicity(&divs.pq, w) })
        .collect()
}

/// Index of an elementary infinite point (`I_w(C,Z) = 1`, `I_w(P,Q) = 0`).
///
/// In the chart `x = 1/z, y = u/z` the point is `(u0, 0)` and the Jacobian
/// of the compactified field is triangular with determinant
/// `C2'(1, u0) P2(1, u0)`; near `[0:1]` the analogous product is
/// `-dC2/dv(0, 1) Q2(0, 1)`.
pub fn elementary_index(s: &QuadraticSystem, set: &ComitantSet, w: &ProjPoint) -> Option<i32> {
    let c2 = set.form(Comitant::C2);
    let det = match &w.location {
        RootLocation::Vertical => {
            let coeffs = c2.coeffs();
            // C2(v, 1) = sum coeffs[k] v^(3-k); its v-derivative at 0 is coeffs[2].
            let dc = crate::poly::sign(&coeffs[2]);
            let q2 = crate::poly::sign(&s.q_part(2).coeff(&[0, 2]));
            -dc * q2
        }
        RootLocation::Rational(_) | RootLocation::RealAlgebraic { .. } => {
            let dc = c2.dehomogenize().derivative();
            let p2 = p2_at_one(s);
            w.sign_at(&dc)? * w.sign_at(&p2)?
        }
        RootLocation::ComplexPair { .. } => return None,
    };
    (det != 0).then_some(det)
}

/// `P2(1, u)` as a polynomial in `u`.
fn p2_at_one(s: &QuadraticSystem) -> UPoly {
    let p2 = s.p_part(2);
    UPoly::new((0..=2u32).map(|k| p2.coeff(&[2 - k, k])).collect())
}

/// One point of the fused divisor.
#[derive(Clone, Debug)]
pub struct FusedEntry {
    pub point: ProjPoint,
    pub label: char,
    pub i_cz: usize,
    pub i_pq: usize,
    /// Index of the point; `None` for complex points.
    pub j: Option<i32>,
}

/// Assigns the actual points to the entries of a figure pattern.
///
/// Points are grouped by `(I_w(C,Z), I_w(P,Q), real)`. Real points with
/// `I_w(C,Z) = 1` get their index computed exactly and must agree with the
/// table; other groups inherit the (common) index the table prescribes.
pub fn fuse(
    s: &QuadraticSystem,
    set: &ComitantSet,
    points: &[InfinitePoint],
    pattern: &[PatternEntry],
) -> Result<Vec<FusedEntry>, ClassifyError> {
    if pattern.len() != points.len() {
        return Err(ClassifyError::InternalInconsistency(format!(
            "figure pattern has {} points, the system has {}",
            pattern.len(),
            points.len()
        )));
    }
    let mut indices: Vec<Option<i32>> = Vec::with_capacity(points.len());
    for p in points {
        let index = match (p.i_cz, p.i_pq, p.point.is_real()) {
            (1, 0, true) => elementary_index(s, set, &p.point),
            (1, _, true) => semihyperbolic::semi_hyperbolic_index(s, &p.point),
            _ => None,
        };
        indices.push(index);
    }
    let mut used = vec![false; points.len()];
    let mut out = Vec::with_capacity(pattern.len());
    for entry in pattern {
        let key = (entry.i_cz, entry.i_pq, entry.complex);
        let wanted = entry.j.filter(|_| !entry.complex);
        let found = (0..points.len()).find(|&i| {
            !used[i] && points[i].key() == key && (indices[i].is_none() || indices[i] == wanted)
        });
        let Some(i) = found else {
            return Err(ClassifyError::InternalInconsistency(format!(
                "no point fits the pattern entry ({},{},{:?}){}",
                entry.i_cz,
                entry.i_pq,
                wanted,
                entry.label
            )));
        };
        used[i] = true;
        out.push(FusedEntry {
            point: points[i].point.clone(),
            label: entry.label,
            i_cz: entry.i_cz,
            i_pq: entry.i_pq,
            j: wanted,
        });
    }
    Ok(out)
}

/// Geometric invariants read from the geometry table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometricInvariants {
    pub figure: u8,
    pub old_figure: u8,
    /// Number of real infinite singularities, counted up to antipodes.
    pub n_r: usize,
    pub max_nsect: u8,
    pub n_max_nsect: usize,
    /// The number of sectors of each equator singularity around the circle.
    pub o: Vec<u8>,
    pub n_hsect: u8,
    pub adjacency: Option<(u8, u8)>,
}

pub fn geometric_invariants(figure: u8) -> GeometricInvariants {
    let row = GEOMETRY_ROWS.iter().find(|r| r.new == figure).expect("figures are 1..=40");
    let max = *row.o.iter().max().unwrap();
    GeometricInvariants {
        figure,
        old_figure: row.old,
        n_r: row.o.len() / 2,
        max_nsect: max,
        n_max_nsect: row.o.iter().filter(|&&v| v == max).count(),
        o: row.o.to_vec(),
        n_hsect: row.n_hsect,
        adjacency: row.adjacency,
    }
}

/// The full classification of one system.
#[derive(Clone, Debug)]
pub struct Classification {
    pub comitants: ComitantSet,
    pub divisors: Divisors,
    pub dsz: DszType,
    pub sigma: u8,
    pub figure: u8,
    /// Index into [`FIGURE_ROWS`].
    pub figure_row: usize,
    pub fused: Vec<FusedEntry>,
    pub geometry: GeometricInvariants,
}

impl Classification {
    pub fn pattern(&self) -> &'static str {
        FIGURE_ROWS[self.figure_row].pattern
    }
}

/// Checks that the `(I_w(C,Z), I_w(P,Q), complex)` multisets agree.
fn same_points(points: &[InfinitePoint], pattern: &[PatternEntry]) -> bool {
    let mut a: Vec<_> = points.iter().map(InfinitePoint::key).collect();
    let mut b: Vec<_> = pattern.iter().map(|e| (e.i_cz, e.i_pq, e.complex)).collect();
    a.sort();
    b.sort();
    a == b
}

pub fn classify(s: &QuadraticSystem) -> Result<Classification, ClassifyError> {
    s.validate()?;
    let set = comitants::compute(s).map_err(|e| ClassifyError::InternalInconsistency(e.to_string()))?;
    classify_with(s, set)
}

/// Classification from precomputed comitants of a validated system.
pub fn classify_with(s: &QuadraticSystem, set: ComitantSet) -> Result<Classification, ClassifyError> {
    let divs = divisors::divisors(&set)?;
    let dsz = dsz_type(&set)?;
    let points = infinite_points(&divs);
    let parsed = tables::parsed();

    let si = sigma_row(&set)?;
    let sigma_data = &SIGMA_ROWS[si];
    if sigma_data.delta != divs.summary.delta_s || sigma_data.dsz_label != dsz.label() {
        return Err(ClassifyError::InternalInconsistency(format!(
            "Sigma_{} does not agree with Delta_S = {}",
            sigma_data.sigma, divs.summary.delta_s
        )));
    }
    if !same_points(&points, &parsed.sigma[si].1) {
        return Err(ClassifyError::InternalInconsistency(format!(
            "the divisors do not have the shape of Sigma_{}",
            sigma_data.sigma
        )));
    }

    let fi = figure_row(&set)?;
    let fused = fuse(s, &set, &points, &parsed.figure[fi].1)?;
    let figure = FIGURE_ROWS[fi].figure;
    Ok(Classification {
        comitants: set,
        divisors: divs,
        dsz,
        sigma: sigma_data.sigma,
        figure,
        figure_row: fi,
        fused,
        geometry: geometric_invariants(figure),
    })
}
