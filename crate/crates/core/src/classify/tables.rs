//! Static classification tables.
//!
//! Conditions are written as comma-separated atoms `f1*f2*... REL 0` with
//! `REL` one of `=`, `!=`, `>`, `<`, `>=`, `<=`, and factor names as in
//! [`Comitant::name`]. Divisor patterns list one entry per point as
//! `(I_w(C,Z), I_w(P,Q))` or `(I_w(C,Z), I_w(P,Q), j(w))`, followed by a label
//! letter and `c` for a complex point.

use std::sync::OnceLock;

use crate::comitants::Comitant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Relation {
    Zero,
    NonZero,
    Positive,
    Negative,
    NonNegative,
    NonPositive,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Zero => "=",
            Relation::NonZero => "!=",
            Relation::Positive => ">",
            Relation::Negative => "<",
            Relation::NonNegative => ">=",
            Relation::NonPositive => "<=",
        }
    }

    pub fn is_sign(self) -> bool {
        !matches!(self, Relation::Zero | Relation::NonZero)
    }
}

/// One condition on a product of comitants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub factors: Vec<Comitant>,
    pub relation: Relation,
}

impl std::fmt::Display for Atom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<&str> = self.factors.iter().map(|c| c.name()).collect();
        write!(f, "{}{}0", names.join("*"), self.relation.symbol())
    }
}

pub fn parse_conditions(text: &str) -> Vec<Atom> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|atom| {
            let (lhs, relation) = [
                (">=", Relation::NonNegative),
                ("<=", Relation::NonPositive),
                ("!=", Relation::NonZero),
                (">", Relation::Positive),
                ("<", Relation::Negative),
                ("=", Relation::Zero),
            ]
            .iter()
            .find_map(|(op, rel)| atom.strip_suffix("0").and_then(|a| a.strip_suffix(op)).map(|l| (l, *rel)))
            .unwrap_or_else(|| panic!("bad condition atom {atom:?}"));
            let factors = lhs
                .split('*')
                .map(|n| Comitant::from_name(n.trim()).unwrap_or_else(|| panic!("unknown comitant {n:?}")))
                .collect();
            Atom { factors, relation }
        })
        .collect()
}

/// One point of a divisor pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEntry {
    pub i_cz: usize,
    pub i_pq: usize,
    /// Index, present in fused patterns only.
    pub j: Option<i32>,
    pub label: char,
    pub complex: bool,
}

pub fn parse_pattern(text: &str) -> Vec<PatternEntry> {
    text.split('+')
        .map(|term| {
            let term = term.trim();
            let close = term.find(')').expect("pattern entry");
            let nums: Vec<i32> = term[1..close].split(',').map(|n| n.trim().parse().expect("integer")).collect();
            let rest: Vec<char> = term[close + 1..].chars().collect();
            PatternEntry {
                i_cz: nums[0] as usize,
                i_pq: nums[1] as usize,
                j: nums.get(2).copied(),
                label: rest[0],
                complex: rest.get(1) == Some(&'c'),
            }
        })
        .collect()
}

/// Stratum conditions, indexed by the label number minus one.
pub const DSZ_CONDITIONS: [&str; 4] = ["eta>0", "eta<0", "eta=0, M!=0", "M=0"];

#[derive(Debug)]
pub struct SigmaRow {
    pub sigma: u8,
    pub delta: usize,
    pub m_c: usize,
    /// `(I_w(C,Z), I_w(P,Q))` per point.
    pub pattern: &'static str,
    pub dsz_label: u8,
    pub conditions: &'static str,
}

macro_rules! sigma_rows {
    ($(($s:literal, $d:literal, $m:literal, $pat:literal, $i:literal, $cond:literal)),* $(,)?) => {
        &[$(SigmaRow { sigma: $s, delta: $d, m_c: $m, pattern: $pat, dsz_label: $i, conditions: $cond }),*]
    };
}

pub static SIGMA_ROWS: &[SigmaRow] = sigma_rows![
    (1, 0, 1, "(1,0)p+(1,0)q+(1,0)r", 1, "mu0!=0"),
    (2, 0, 1, "(1,0)p+(1,0)qc+(1,0)rc", 2, "mu0!=0"),
    (3, 0, 2, "(1,0)p+(2,0)q", 3, "mu0!=0"),
    (4, 0, 3, "(3,0)p", 4, "mu0!=0"),
    (5, 1, 1, "(1,1)p+(1,0)q+(1,0)r", 1, "mu0=0, mu1!=0"),
    (6, 1, 1, "(1,1)p+(1,0)qc+(1,0)rc", 2, "mu0=0, mu1!=0"),
    (7, 1, 2, "(1,1)p+(2,0)q", 3, "mu0=0, mu1!=0, kappa!=0"),
    (8, 1, 2, "(1,0)p+(2,1)q", 3, "mu0=0, mu1!=0, kappa=0"),
    (9, 1, 3, "(3,1)p", 4, "mu0=0, mu1!=0"),
    (10, 2, 1, "(1,2)p+(1,0)q+(1,0)r", 1, "mu0=0, mu1=0, mu2!=0, kappa!=0"),
    (11, 2, 1, "(1,1)p+(1,1)q+(1,0)r", 1, "mu0=0, mu1=0, mu2!=0, kappa=0"),
    (12, 2, 1, "(1,2)p+(1,0)qc+(1,0)rc", 2, "mu0=0, mu1=0, mu2!=0, kappa!=0"),
    (13, 2, 1, "(1,0)p+(1,1)qc+(1,1)rc", 2, "mu0=0, mu1=0, mu2!=0, kappa=0"),
    (14, 2, 2, "(1,2)p+(2,0)q", 3, "mu0=0, mu1=0, mu2!=0, kappa!=0"),
    (15, 2, 2, "(1,1)p+(2,1)q", 3, "mu0=0, mu1=0, mu2!=0, kappa=0, L=0"),
    (16, 2, 2, "(1,0)p+(2,2)q", 3, "mu0=0, mu1=0, mu2!=0, kappa=0, L!=0"),
    (17, 2, 3, "(3,2)p", 4, "mu0=0, mu1=0, mu2!=0"),
    (18, 3, 1, "(1,3)p+(1,0)q+(1,0)r", 1, "mu0=0, mu1=0, mu2=0, mu3!=0, kappa!=0"),
    (19, 3, 1, "(1,2)p+(1,1)q+(1,0)r", 1, "mu0=0, mu1=0, mu2=0, mu3!=0, kappa=0"),
    (20, 3, 1, "(1,3)p+(1,0)qc+(1,0)rc", 2, "mu0=0, mu1=0, mu2=0, mu3!=0"),
    (21, 3, 2, "(1,3)p+(2,0)q", 3, "mu0=0, mu1=0, mu2=0, mu3!=0, kappa!=0"),
    (22, 3, 2, "(1,2)p+(2,1)q", 3, "mu0=0, mu1=0, mu2=0, mu3!=0, kappa=0, L=0, kappa1!=0"),
    (23, 3, 2, "(1,1)p+(2,2)q", 3, "mu0=0, mu1=0, mu2=0, mu3!=0, kappa=0, L=0, kappa1=0"),
    (24, 3, 2, "(1,0)p+(2,3)q", 3, "mu0=0, mu1=0, mu2=0, mu3!=0, kappa=0, L!=0"),
    (25, 3, 3, "(3,3)p", 4, "mu0=0, mu1=0, mu2=0, mu3!=0"),
    (26, 4, 1, "(1,4)p+(1,0)q+(1,0)r", 1, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa!=0"),
    (27, 4, 1, "(1,3)p+(1,1)q+(1,0)r", 1, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa=0, K1!=0"),
    (28, 4, 1, "(1,2)p+(1,2)q+(1,0)r", 1, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa=0, K1=0"),
    (29, 4, 1, "(1,4)p+(1,0)qc+(1,0)rc", 2, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa!=0"),
    (30, 4, 1, "(1,0)p+(1,2)qc+(1,2)rc", 2, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa=0"),
    (31, 4, 2, "(1,4)p+(2,0)q", 3, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa!=0"),
    (32, 4, 2, "(1,3)p+(2,1)q", 3, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa=0, L=0, kappa1!=0"),
    (33, 4, 2, "(1,2)p+(2,2)q", 3, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa=0, L=0, kappa1=0, K1=0"),
    (34, 4, 2, "(1,1)p+(2,3)q", 3, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa=0, L=0, kappa1=0, K1!=0"),
    (35, 4, 2, "(1,0)p+(2,4)q", 3, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa=0, L!=0"),
    (36, 4, 3, "(3,4)p", 4, "mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0"),
];

#[derive(Debug)]
pub struct FigureRow {
    pub figure: u8,
    /// `(I_w(C,Z), I_w(P,Q), j(w))` per point.
    pub pattern: &'static str,
    pub conditions: &'static str,
    /// The value as printed, when the pattern above departs from it.
    pub printed: Option<&'static str>,
}

macro_rules! figure_rows {
    ($(($f:literal, $pat:literal, $cond:literal $(, $printed:literal)?)),* $(,)?) => {
        &[$(FigureRow { figure: $f, pattern: $pat, conditions: $cond, printed: figure_rows!(@p $($printed)?) }),*]
    };
    (@p) => { None };
    (@p $x:literal) => { Some($x) };
}

pub static FIGURE_ROWS: &[FigureRow] = figure_rows![
    (1, "(1,0,1)p+(1,0,1)q+(1,0,1)r", "eta>0, mu0<0, kappa>0"),
    (1, "(1,2,1)p+(1,0,1)q+(1,0,1)r", "eta>0, mu0=0, mu1=0, mu2<0, kappa>0"),
    (2, "(1,1,0)p+(1,0,1)q+(1,0,1)r", "eta>0, mu0=0, mu1!=0, kappa>0"),
    (2, "(1,3,0)p+(1,0,1)q+(1,0,1)r", "eta>0, mu0=0, mu1=0, mu2=0, mu3!=0, kappa>0", "(1,3,1)p+(1,0,1)q+(1,0,1)r"),
    (2, "(1,2,1)p+(1,1,0)q+(1,0,1)r", "eta>0, mu0=0, mu1=0, mu2=0, kappa=0, mu3*K1<0", "(1,2,1)p+(1,1,1)q+(1,0,1)r"),
    (3, "(1,1,0)p+(1,1,0)q+(1,0,1)r", "eta>0, mu0=0, mu1=0, kappa=0, mu2*L<0"),
    (3, "(1,3,0)p+(1,1,0)q+(1,0,1)r", "eta>0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, mu4*L<0, K1!=0"),
    (4, "(1,1,0)p+(1,1,0)q+(1,0,1)r", "eta>0, mu0=0, mu1=0, kappa=0, mu2*L>0"),
    (4, "(1,3,0)p+(1,1,0)q+(1,0,1)r", "eta>0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, mu4*L>0, K1!=0"),
    (5, "(1,0,1)p+(1,0,1)q+(1,0,-1)r", "eta>0, mu0>0"),
    (5, "(1,2,1)p+(1,0,1)q+(1,0,-1)r", "eta>0, mu0=0, mu1=0, mu2>0, kappa<0"),
    (5, "(1,4,1)p+(1,0,1)q+(1,0,-1)r", "eta>0, mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa<0"),
    (5, "(1,0,1)p+(1,0,1)q+(1,2,-1)r", "eta>0, mu0=0, mu1=0, mu2>0, kappa>0"),
    (5, "(1,0,1)p+(1,0,1)q+(1,4,-1)r", "eta>0, mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa>0"),
    (5, "(1,2,1)p+(1,0,1)q+(1,2,-1)r", "eta>0, mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa=0, K1=0"),
    (6, "(1,1,0)p+(1,0,1)q+(1,0,-1)r", "eta>0, mu0=0, mu1!=0, kappa<0"),
    (6, "(1,3,0)p+(1,0,1)q+(1,0,-1)r", "eta>0, mu0=0, mu1=0, mu2=0, mu3!=0, kappa<0", "(1,3,1)p+(1,0,1)q+(1,0,-1)r"),
    (6, "(1,2,-1)p+(1,1,0)q+(1,0,1)r", "eta>0, mu0=0, mu1=0, mu2=0, kappa=0, mu3*K1>0", "(1,2,1)p+(1,1,1)q+(1,0,-1)r"),
    (7, "(1,0,-1)p+(1,0,1)q+(1,0,-1)r", "eta>0, mu0<0, kappa<0"),
    (7, "(1,2,-1)p+(1,0,1)q+(1,0,-1)r", "eta>0, mu0=0, mu1=0, mu2<0, kappa<0"),
    (8, "(2,2,0)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, kappa=0, kappa1=0, mu2>0, L>0, K2<0"),
    (8, "(2,4,0)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, kappa1=0, mu4>0, L>0, K=0, K2<0"),
    (8, "(2,2,0)p+(1,2,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, kappa1=0, mu4!=0, L=0, K1=0, kappa2<0"),
    (9, "(2,1,1)p+(1,0,1)q", "eta=0, M!=0, mu1!=0, mu0=0, kappa=0, L>0, K<0"),
    (9, "(2,3,1)p+(1,0,1)q", "eta=0, M!=0, kappa1!=0, L!=0, mu0=0, mu1=0, mu2=0, kappa=0, mu3*K1<0"),
    (9, "(2,1,1)p+(1,2,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, kappa=0, L=0, kappa1!=0, mu3*K1<0"),
    (10, "(2,2,2)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, kappa=0, kappa1=0, mu2<0, L>0, K<0"),
    (11, "(2,1,1)p+(1,1,0)q", "eta=0, M!=0, mu0=0, mu1=0, kappa=0, L=0, mu2!=0"),
    (11, "(2,1,1)p+(1,3,0)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, L=0, mu4!=0, kappa1!=0"),
    (12, "(2,2,2)p+(1,1,0)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, kappa=0, kappa1=0, L=0, mu3*K1<0"),
    (13, "(2,2,0)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, kappa=0, mu2!=0, kappa1!=0, L!=0", "(2,2,1)p+(1,0,1)q"),
    (13, "(2,4,0)p+(1,0,1)q", "eta=0, M!=0, mu4!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, kappa1!=0, L!=0", "(2,4,1)p+(1,3,0)q"),
    (14, "(2,3,1)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, kappa=0, kappa1=0, mu3!=0, L>0, K<0"),
    (15, "(2,3,1)p+(1,1,0)q", "eta=0, M!=0, mu4!=0, K1!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, kappa1=0, L=0"),
    (16, "(2,1,1)p+(1,0,-1)q", "eta=0, M!=0, mu1!=0, mu0=0, kappa=0, L<0, N<=0"),
    (16, "(2,1,1)p+(1,2,-1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, kappa=0, L=0, kappa1!=0, mu3*K1>0"),
    (17, "(2,2,2)p+(1,0,-1)q", "eta=0, M!=0, mu0=0, mu1=0, kappa=0, kappa1=0, mu2>0, L<0"),
    (17, "(2,4,2)p+(1,0,-1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, kappa1=0, mu4>0, L<0"),
    (17, "(2,2,2)p+(1,2,-1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, kappa1=0, L=0, K1=0, mu4!=0, kappa2>0"),
    (18, "(2,0,0)p+(1,0,1)q", "eta=0, M!=0, mu0>0"),
    (18, "(2,0,0)p+(1,2,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2>0, kappa!=0"),
    (18, "(2,0,0)p+(1,4,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa!=0"),
    (18, "(2,4,0)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, kappa1=0, mu4>0, L>0, K!=0, R>=0"),
    (18, "(2,4,0)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, kappa1=0, mu4>0, L>0, K=0, K2>=0"),
    (19, "(2,2,0)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, kappa=0, kappa1=0, mu2>0, L>0, K2>=0"),
    (20, "(2,0,0)p+(1,1,0)q", "eta=0, M!=0, mu0=0, mu1!=0, kappa!=0"),
    (20, "(2,0,0)p+(1,3,0)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, mu3!=0, kappa!=0"),
    (21, "(2,2,0)p+(1,1,0)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, kappa=0, kappa1=0, L=0, mu3*K1>0"),
    (22, "(2,0,0)p+(1,0,-1)q", "eta=0, M!=0, mu0<0", "(2,0,0)p+(1,0,1)q"),
    (22, "(2,0,0)p+(1,2,-1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2<0, kappa!=0", "(2,0,0)p+(1,2,1)q"),
    (23, "(2,1,-1)p+(1,0,1)q", "eta=0, M!=0, mu0=0, kappa=0, mu1!=0, L>0, K>0"),
    (23, "(2,3,-1)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, kappa=0, kappa1!=0, L!=0, mu3*K1>0"),
    (24, "(2,4,0)p+(1,0,1)q", "eta=0, M!=0, L!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, kappa1=0, mu4<0"),
    (25, "(2,3,-1)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, kappa=0, kappa1=0, mu3!=0, L>0, K>0"),
    (26, "(2,1,1)p+(1,0,-1)q", "eta=0, M!=0, mu0=0, kappa=0, mu1!=0, L<0, N>0"),
    (26, "(2,3,1)p+(1,0,-1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, kappa=0, kappa1=0, mu3!=0, L<0"),
    (27, "(2,2,-2)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, kappa=0, kappa1=0, mu2<0, L>0, K>0"),
    (28, "(2,4,0)p+(1,0,1)q", "eta=0, M!=0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, kappa1=0, mu4>0, L>0, K!=0, R<0"),
    (29, "(2,2,0)p+(1,0,-1)q", "eta=0, M!=0, mu0=0, mu1=0, kappa=0, kappa1=0, mu2<0, L<0"),
    (30, "(1,0,1)p+(1,0,0)qc+(1,0,0)rc", "eta<0, mu0>0"),
    (30, "(1,2,1)p+(1,0,0)qc+(1,0,0)rc", "eta<0, mu0=0, mu1=0, mu2>0, kappa!=0"),
    (30, "(1,4,1)p+(1,0,0)qc+(1,0,0)rc", "eta<0, mu0=0, mu1=0, mu2=0, mu3=0, mu4!=0, kappa!=0"),
    (30, "(1,0,1)p+(1,1,0)qc+(1,1,0)rc", "eta<0, mu0=0, mu1=0, kappa=0, mu2!=0"),
    (30, "(1,0,1)p+(1,2,0)qc+(1,2,0)rc", "eta<0, mu0=0, mu1=0, mu2=0, mu3=0, kappa=0, mu4!=0"),
    (30, "(3,0,1)p", "M=0, mu0>0"),
    (30, "(3,2,1)p", "M=0, mu0=0, mu1=0, mu2>0, K!=0, K2<0"),
    (30, "(3,2,1)p", "M=0, mu0=0, mu1=0, mu2>0, K=0"),
    (30, "(3,4,1)p", "M=0, mu0=0, mu1=0, mu2=0, mu3=0, mu4>0, K3>=0"),
    (31, "(1,1,0)p+(1,0,0)qc+(1,0,0)rc", "eta<0, mu0=0, mu1!=0"),
    (31, "(1,3,0)p+(1,0,0)qc+(1,0,0)rc", "eta<0, mu0=0, mu1=0, mu2=0, mu3!=0"),
    (31, "(3,3,0)p", "M=0, mu0=0, mu1=0, mu2=0, K=0, mu3*K1>0, K3>=0"),
    (32, "(3,2,1)p", "M=0, mu0=0, mu1=0, mu2>0, K!=0, K2>=0"),
    (32, "(3,4,1)p", "M=0, mu0=0, mu1=0, mu2=0, mu3=0, K=0, mu4>0, K3<0"),
    (33, "(3,3,2)p", "M=0, mu0=0, mu1=0, mu2=0, K=0, mu3*K1<0"),
    (34, "(1,0,-1)p+(1,0,0)qc+(1,0,0)rc", "eta<0, mu0<0"),
    (34, "(1,2,-1)p+(1,0,0)qc+(1,0,0)rc", "eta<0, mu0=0, mu1=0, mu2<0, kappa!=0"),
    (34, "(3,0,-1)p", "M=0, mu0<0"),
    (35, "(3,4,1)p", "M=0, mu0=0, mu1=0, mu2=0, mu3=0, mu4<0"),
    (36, "(3,4,1)p", "M=0, mu0=0, mu1=0, mu2=0, mu3=0, mu4>0, K!=0, K3<0"),
    (37, "(3,1,0)p", "M=0, mu0=0, mu1!=0"),
    (37, "(3,3,0)p", "M=0, mu0=0, mu1=0, mu2=0, mu3*K!=0, K3>0"),
    (38, "(3,3,0)p", "M=0, mu0=0, mu1=0, mu2=0, K=0, mu3*K1>0, K3<0"),
    (39, "(3,3,0)p", "M=0, mu0=0, mu1=0, mu2=0, mu3*K!=0, K3<0"),
    (40, "(3,2,-1)p", "M=0, mu0=0, mu1=0, mu2<0"),
];

/// Geometric data of one figure.
#[derive(Debug)]
pub struct GeometryRow {
    pub new: u8,
    pub old: u8,
    pub o: &'static [u8],
    pub n_hsect: u8,
    pub adjacency: Option<(u8, u8)>,
}

macro_rules! geometry_rows {
    ($(($new:literal, $old:literal, [$($o:literal),*], $h:literal $(, ($a:literal, $b:literal))?)),* $(,)?) => {
        &[$(GeometryRow { new: $new, old: $old, o: &[$($o),*], n_hsect: $h, adjacency: geometry_rows!(@a $(($a, $b))?) }),*]
    };
    (@a) => { None };
    (@a ($a:literal, $b:literal)) => { Some(($a, $b)) };
}

pub static GEOMETRY_ROWS: &[GeometryRow] = geometry_rows![
    (1, 2, [1, 1, 1, 1, 1, 1], 0),
    (2, 4, [2, 1, 1, 1, 1, 1], 2),
    (3, 7, [2, 2, 1, 1, 1, 1], 4),
    (4, 6, [2, 1, 2, 1, 1, 1], 4),
    (5, 1, [2, 1, 1, 2, 1, 1], 4),
    (6, 5, [2, 2, 1, 1, 2, 1], 6),
    (7, 3, [2, 2, 1, 2, 2, 1], 8),
    (8, 22, [1, 1, 1, 1], 2),
    (9, 12, [1, 1, 1, 1], 1),
    (10, 18, [1, 1, 1, 1], 0),
    (11, 15, [2, 1, 1, 1], 3),
    (12, 26, [2, 1, 1, 1], 2, (2, 0)),
    (13, 16, [2, 1, 1, 1], 2, (0, 2)),
    (14, 23, [2, 1, 1, 1], 1),
    (15, 29, [2, 2, 1, 1], 3),
    (16, 13, [2, 1, 2, 1], 5),
    (17, 20, [2, 1, 2, 1], 4),
    (18, 8, [2, 1, 2, 1], 2, (0, 1)),
    (19, 21, [2, 1, 2, 1], 2, (0, 0)),
    (20, 10, [2, 1, 2, 2], 4, (2, 2)),
    (21, 25, [2, 1, 2, 2], 4, (2, 0)),
    (22, 9, [2, 2, 2, 2], 6),
    (23, 11, [3, 1, 1, 1], 4),
    (24, 28, [3, 1, 1, 1], 3),
    (25, 24, [3, 1, 2, 1], 4),
    (26, 14, [3, 2, 1, 2], 5),
    (27, 19, [3, 1, 3, 1], 6),
    (28, 27, [3, 1, 3, 1], 2),
    (29, 17, [3, 2, 3, 2], 6),
    (30, 30, [1, 1], 0),
    (31, 32, [2, 1], 2),
    (32, 34, [2, 1], 1),
    (33, 38, [2, 1], 0),
    (34, 31, [2, 2], 4),
    (35, 40, [2, 2], 2, (2, 0)),
    (36, 39, [2, 2], 2, (0, 2)),
    (37, 33, [3, 1], 2, (2, 0)),
    (38, 37, [3, 1], 2, (0, 0)),
    (39, 36, [3, 2], 3),
    (40, 35, [3, 3], 4),
];

/// Parsed conditions and patterns, built once.
pub struct ParsedTables {
    pub dsz: Vec<Vec<Atom>>,
    pub sigma: Vec<(Vec<Atom>, Vec<PatternEntry>)>,
    pub figure: Vec<(Vec<Atom>, Vec<PatternEntry>)>,
}

pub fn parsed() -> &'static ParsedTables {
    static TABLES: OnceLock<ParsedTables> = OnceLock::new();
    TABLES.get_or_init(|| ParsedTables {
        dsz: DSZ_CONDITIONS.iter().map(|c| parse_conditions(c)).collect(),
        sigma: SIGMA_ROWS
            .iter()
            .map(|r| {
                let mut atoms = parse_conditions(DSZ_CONDITIONS[r.dsz_label as usize - 1]);
                atoms.extend(parse_conditions(r.conditions));
                (atoms, parse_pattern(r.pattern))
            })
            .collect(),
        figure: FIGURE_ROWS
            .iter()
            .map(|r| (parse_conditions(r.conditions), parse_pattern(r.pattern)))
            .collect(),
    })
}
