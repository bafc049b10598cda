//! JSON input format and the machine-readable classification report.
//!
//! A system is written as
//! `{"p": {"1": r, "x": r, "y": r, "x2": r, "xy": r, "y2": r}, "q": {...}}`
//! where every coefficient is optional, `r` is an integer or an `"n/d"`
//! string and `"xy"` is the full coefficient of the monomial `xy`.
//! A top-level array is a batch.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::classify::{self, Classification, ClassifyError};
use crate::comitants::{self, Comitant, ComitantSet};
use crate::divisors::{describe_point, Divisor};
use crate::poincare::{numeric_indices, render_portrait, PortraitOptions};
use crate::poly::{format_rational, int, parse_rational, Poly2, PointDescriptor, ProjPoint, Rational};
use crate::system::QuadraticSystem;
use crate::tensorial::correspondence_check;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_GAP: i32 = 3;
pub const EXIT_PARSE: i32 = 4;
/// A self-check of the classifier failed; this indicates a bug.
pub const EXIT_INTERNAL: i32 = 5;

/// Identities between the two comitant families that are known not to hold
/// for the implemented reading of the tensorial invariants.
pub const KNOWN_IDENTITY_FAILURES: &[&str] = &["kappa = 64 theta~"];

struct Coefficient(Rational);

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Coefficient;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a rational string such as \"-3/4\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coefficient, E> {
                Ok(Coefficient(int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coefficient, E> {
                Ok(Coefficient(Rational::from_integer(v.into())))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Coefficient, E> {
                Err(E::custom(format!("{v} is not exact; write non-integers as \"n/d\" strings")))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Coefficient, E> {
                parse_rational(v).map(Coefficient).ok_or_else(|| E::custom(format!("{v:?} is not a rational number")))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SideInput {
    #[serde(rename = "1")]
    constant: Option<Coefficient>,
    x: Option<Coefficient>,
    y: Option<Coefficient>,
    x2: Option<Coefficient>,
    xy: Option<Coefficient>,
    y2: Option<Coefficient>,
}

impl SideInput {
    fn monomials(self) -> [Rational; 6] {
        [self.constant, self.x, self.y, self.x2, self.xy, self.y2].map(|c| c.map_or_else(|| int(0), |c| c.0))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemInput {
    p: SideInput,
    q: SideInput,
}

impl SystemInput {
    fn into_system(self) -> QuadraticSystem {
        QuadraticSystem::from_monomials(self.p.monomials(), self.q.monomials())
    }
}

/// Malformed input, located by 1-based line and column.
#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the bare message.
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        ParseError { message, line: e.line(), column: e.column() }
    }
}

/// One system or a batch.
#[derive(Debug)]
pub enum Input {
    Single(Box<QuadraticSystem>),
    Batch(Vec<QuadraticSystem>),
}

pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    if text.trim_start().starts_with('[') {
        let items: Vec<SystemInput> = serde_json::from_str(text)?;
        Ok(Input::Batch(items.into_iter().map(SystemInput::into_system).collect()))
    } else {
        let item: SystemInput = serde_json::from_str(text)?;
        Ok(Input::Single(Box::new(item.into_system())))
    }
}

/// Parses a single system.
pub fn parse_system(text: &str) -> Result<QuadraticSystem, ParseError> {
    let item: SystemInput = serde_json::from_str(text)?;
    Ok(item.into_system())
}

/// Which cross-checks accompany the exact classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OracleMode {
    None,
    #[default]
    Tensor,
    Numeric,
    All,
}

impl OracleMode {
    pub fn tensor(self) -> bool {
        matches!(self, OracleMode::Tensor | OracleMode::All)
    }

    pub fn numeric(self) -> bool {
        matches!(self, OracleMode::Numeric | OracleMode::All)
    }

    pub fn name(self) -> &'static str {
        match self {
            OracleMode::None => "none",
            OracleMode::Tensor => "tensor",
            OracleMode::Numeric => "numeric",
            OracleMode::All => "all",
        }
    }
}

impl FromStr for OracleMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "none" => Ok(OracleMode::None),
            "tensor" => Ok(OracleMode::Tensor),
            "numeric" => Ok(OracleMode::Numeric),
            "all" => Ok(OracleMode::All),
            other => Err(format!("unknown oracle mode {other:?}")),
        }
    }
}

/// A binary form as its coefficients of `x^d, x^(d-1) y, ..., y^d`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FormValue {
    pub degree: u32,
    pub coefficients: Vec<String>,
    pub text: String,
}

impl FormValue {
    fn new(f: &Poly2, degree: u32) -> Self {
        let coefficients = (0..=degree).map(|k| format_rational(&f.coeff(&[degree - k, k]))).collect();
        FormValue { degree, coefficients, text: f.to_string() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointValue {
    pub point: PointDescriptor,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisorReport {
    /// `D_S(C,Z)`: the points of `C2 = 0`.
    pub cz: Vec<PointValue>,
    /// `D_S(P,Q;Z)`: intersection points of `P` and `Q` at infinity.
    pub pq: Vec<PointValue>,
    pub delta_s: usize,
    pub m_c: usize,
    pub n_inf_f: usize,
    pub nu: usize,
    pub pq_type: Vec<(usize, usize)>,
    pub cz_type: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FusedValue {
    pub label: char,
    pub point: PointDescriptor,
    pub i_cz: usize,
    pub i_pq: usize,
    /// Index of a real point; absent for complex points.
    pub j: Option<i32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub dsz_type: u8,
    pub dsz_divisor: &'static str,
    pub sigma: u8,
    pub figure: u8,
    pub old_figure: u8,
    /// Row of the figure table that matched.
    pub figure_row: usize,
    /// The fused divisor in the notation `(I_CZ, I_PQ, j)w + ...`.
    pub fused_divisor: String,
    pub fused: Vec<FusedValue>,
    pub n_r: usize,
    pub max_nsect: u8,
    pub n_max_nsect: usize,
    pub o: Vec<u8>,
    pub n_hsect: u8,
    pub adjacency: Option<(u8, u8)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityValue {
    pub identity: &'static str,
    pub holds: bool,
    pub known_failure: bool,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorOracle {
    pub identities: Vec<IdentityValue>,
    /// Every identity outside [`KNOWN_IDENTITY_FAILURES`] holds.
    pub all_hold: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericIndex {
    pub point: PointDescriptor,
    pub index: Option<i32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericOracle {
    pub points: Vec<NumericIndex>,
    /// Sorted resolved indices.
    pub multiset: Vec<i32>,
    pub unresolved: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Agreement {
    /// `None` when the oracle was not run or had nothing to compare.
    pub tensor: Option<bool>,
    pub numeric: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub mode: &'static str,
    pub tensor: Option<TensorOracle>,
    pub numeric: Option<NumericOracle>,
    pub agreement: Agreement,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorValue {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub classify_ms: f64,
    pub oracle_ms: f64,
    pub total_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub input: Value,
    pub valid: bool,
    pub error: Option<ErrorValue>,
    pub comitants: Option<BTreeMap<&'static str, FormValue>>,
    pub mu: Option<Vec<FormValue>>,
    pub divisors: Option<DivisorReport>,
    pub classification: Option<ClassificationReport>,
    pub oracle: OracleReport,
    pub timing: Timing,
}

/// Result of processing one system.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Report,
    /// Present when a portrait was requested and the system is valid.
    pub svg: Option<String>,
}

fn points(d: &Divisor<usize>) -> Vec<PointValue> {
    d.entries.iter().map(|(w, m)| PointValue { point: describe_point(w), multiplicity: *m }).collect()
}

fn comitant_values(set: &ComitantSet) -> BTreeMap<&'static str, FormValue> {
    Comitant::ALL.iter().map(|&c| (c.name(), FormValue::new(set.get(c), c.degree_xy()))).collect()
}

/// Writes a fused divisor as `(1,0,1)p+(1,0,1)q+(1,0,-1)r`; complex points carry a `c` suffix.
pub fn fused_text(c: &Classification) -> String {
    c.fused
        .iter()
        .map(|e| {
            let complex = if e.j.is_none() { "c" } else { "" };
            format!("({},{},{}){}{complex}", e.i_cz, e.i_pq, e.j.unwrap_or(0), e.label)
        })
        .collect::<Vec<_>>()
        .join("+")
}

fn classification_report(c: &Classification) -> ClassificationReport {
    let g = &c.geometry;
    ClassificationReport {
        dsz_type: c.dsz.label(),
        dsz_divisor: c.dsz.divisor(),
        sigma: c.sigma,
        figure: c.figure,
        old_figure: g.old_figure,
        figure_row: c.figure_row,
        fused_divisor: fused_text(c),
        fused: c
            .fused
            .iter()
            .map(|e| FusedValue { label: e.label, point: describe_point(&e.point), i_cz: e.i_cz, i_pq: e.i_pq, j: e.j })
            .collect(),
        n_r: g.n_r,
        max_nsect: g.max_nsect,
        n_max_nsect: g.n_max_nsect,
        o: g.o.clone(),
        n_hsect: g.n_hsect,
        adjacency: g.adjacency,
    }
}

fn tensor_oracle(s: &QuadraticSystem, set: &ComitantSet) -> TensorOracle {
    let identities: Vec<IdentityValue> = correspondence_check(s, set)
        .into_iter()
        .map(|c| IdentityValue {
            identity: c.identity,
            holds: c.holds,
            known_failure: KNOWN_IDENTITY_FAILURES.contains(&c.identity),
            residual: c.residual,
        })
        .collect();
    let all_hold = identities.iter().all(|i| i.holds || i.known_failure);
    TensorOracle { identities, all_hold }
}

fn numeric_oracle(indices: &[(ProjPoint, Option<i32>)]) -> NumericOracle {
    let mut multiset: Vec<i32> = indices.iter().filter_map(|(_, j)| *j).collect();
    multiset.sort_unstable();
    NumericOracle {
        points: indices.iter().map(|(w, j)| NumericIndex { point: describe_point(w), index: *j }).collect(),
        multiset,
        unresolved: indices.iter().filter(|(_, j)| j.is_none()).count(),
    }
}

/// Compares numeric indices with the fused divisor point by point.
/// Unresolved points are skipped; a missing or extra point is a disagreement.
pub fn numeric_agreement(c: &Classification, indices: &[(ProjPoint, Option<i32>)]) -> bool {
    let real: Vec<_> = c.fused.iter().filter(|e| e.point.is_real()).collect();
    real.len() == indices.len()
        && real.iter().all(|e| match indices.iter().find(|(w, _)| *w == e.point) {
            Some((_, Some(j))) => Some(*j) == e.j,
            Some((_, None)) => true,
            None => false,
        })
}

fn ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

pub fn error_kind(e: &ClassifyError) -> (&'static str, i32) {
    match e {
        ClassifyError::Validation(_) => ("validation", EXIT_INVALID),
        ClassifyError::ClassificationGap { .. } => ("classification_gap", EXIT_GAP),
        ClassifyError::Divisor(_) | ClassifyError::InternalInconsistency(_) => ("internal", EXIT_INTERNAL),
    }
}

/// Classifies one system, runs the requested oracles and optionally renders a portrait.
pub fn run_system(s: &QuadraticSystem, mode: OracleMode, portrait: Option<&PortraitOptions>) -> Outcome {
    let start = Instant::now();
    let mut report = Report {
        input: s.to_json(),
        valid: true,
        error: None,
        comitants: None,
        mu: None,
        divisors: None,
        classification: None,
        oracle: OracleReport { mode: mode.name(), tensor: None, numeric: None, agreement: Agreement::default() },
        timing: Timing { classify_ms: 0.0, oracle_ms: 0.0, total_ms: 0.0 },
    };
    if let Err(e) = s.validate() {
        report.valid = false;
        report.error = Some(ErrorValue { kind: "validation", message: e.to_string() });
        report.timing.total_ms = ms(start);
        return Outcome { exit_code: EXIT_INVALID, report, svg: None };
    }
    let set = match comitants::compute(s) {
        Ok(set) => set,
        Err(e) => {
            report.error = Some(ErrorValue { kind: "internal", message: e.to_string() });
            report.timing.total_ms = ms(start);
            return Outcome { exit_code: EXIT_INTERNAL, report, svg: None };
        }
    };
    report.comitants = Some(comitant_values(&set));
    report.mu = Some(comitants::MU.iter().map(|&c| FormValue::new(set.get(c), c.degree_xy())).collect());
    if let Ok(d) = crate::divisors::divisors(&set) {
        report.divisors = Some(DivisorReport {
            cz: points(&d.cz),
            pq: points(&d.pq),
            delta_s: d.summary.delta_s,
            m_c: d.summary.m_c,
            n_inf_f: d.summary.n_inf_f,
            nu: d.summary.nu,
            pq_type: d.summary.pq_type.iter().copied().collect(),
            cz_type: d.summary.cz_type.iter().copied().collect(),
        });
    }
    let classified = classify::classify_with(s, set.clone());
    report.timing.classify_ms = ms(start);

    let oracle_start = Instant::now();
    let mut exit_code = EXIT_OK;
    match &classified {
        Ok(c) => report.classification = Some(classification_report(c)),
        Err(e) => {
            let (kind, code) = error_kind(e);
            exit_code = code;
            report.error = Some(ErrorValue { kind, message: e.to_string() });
        }
    }
    if mode.tensor() {
        let t = tensor_oracle(s, &set);
        report.oracle.agreement.tensor = Some(t.all_hold);
        report.oracle.tensor = Some(t);
    }
    let indices = (mode.numeric() || portrait.is_some()).then(|| numeric_indices(s));
    if let (true, Some(idx)) = (mode.numeric(), &indices) {
        report.oracle.numeric = Some(numeric_oracle(idx));
        if let Ok(c) = &classified {
            report.oracle.agreement.numeric = Some(numeric_agreement(c, idx));
        }
    }
    let svg = portrait.map(|opts| {
        let title = match &classified {
            Ok(c) => format!("Figure {}: {}", c.figure, s),
            Err(_) => s.to_string(),
        };
        render_portrait(s, indices.as_deref().unwrap_or(&[]), &title, opts)
    });
    report.timing.oracle_ms = ms(oracle_start);
    report.timing.total_ms = ms(start);
    Outcome { exit_code, report, svg }
}

/// The object printed for malformed input.
pub fn parse_error_report(e: &ParseError) -> Value {
    serde_json::json!({ "error": { "kind": "parse", "message": e.message, "line": e.line, "column": e.column } })
}

/// Exit code of a batch: the most severe code among its entries.
pub fn batch_exit_code(codes: impl IntoIterator<Item = i32>) -> i32 {
    codes.into_iter().max().unwrap_or(EXIT_OK)
}
