//! Parametric families of quadratic systems and seeded random corpora.
//!
//! Family templates are written with full monomial coefficients in the order
//! `1, x, y, x^2, xy, y^2`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{int, rat, Rational};
use crate::system::{AffineMap, QuadraticSystem};

type Builder = fn(&[Rational]) -> ([Rational; 6], [Rational; 6]);

/// A linear template: each monomial coefficient is `constant + sum(weight * param)`.
pub struct FamilySpec {
    pub name: &'static str,
    pub params: &'static [&'static str],
    build: Builder,
    /// Parameter constraint, such as `c f = 0`.
    constraint: Option<fn(&[Rational]) -> bool>,
    /// `true` for the families used to reach the figures.
    pub figure_family: bool,
}

impl FamilySpec {
    pub fn build(&self, params: &[Rational]) -> QuadraticSystem {
        assert_eq!(params.len(), self.params.len(), "{} takes {} parameters", self.name, self.params.len());
        let (p, q) = (self.build)(params);
        QuadraticSystem::from_monomials(p, q)
    }

    pub fn admits(&self, params: &[Rational]) -> bool {
        self.constraint.is_none_or(|c| c(params))
    }
}

fn z() -> Rational {
    int(0)
}

fn o() -> Rational {
    int(1)
}

macro_rules! family {
    ($name:literal, [$($param:ident),*], $fig:literal, p = [$($p:expr),*], q = [$($q:expr),*] $(, where $cond:expr)?) => {
        FamilySpec {
            name: $name,
            params: &[$(stringify!($param)),*],
            build: |v: &[Rational]| {
                let mut it = v.iter().cloned();
                $(#[allow(unused_variables)] let $param: Rational = it.next().unwrap();)*
                let _ = &mut it;
                ([$($p),*], [$($q),*])
            },
            constraint: family!(@c [$($param),*] $($cond)?),
            figure_family: $fig,
        }
    };
    (@c [$($param:ident),*]) => { None };
    (@c [$($param:ident),*] $cond:expr) => {
        Some(|v: &[Rational]| {
            let mut it = v.iter().cloned();
            $(#[allow(unused_variables)] let $param: Rational = it.next().unwrap();)*
            let _ = &mut it;
            $cond
        })
    };
}

/// All families known to the crate.
pub fn families() -> Vec<FamilySpec> {
    vec![
        family!("S_I", [g, h, k, c, d, l, e, f], false,
            p = [k, c, d, g.clone(), h.clone() - o(), z()], q = [l, e, f, z(), g - o(), h]),
        family!("S_II", [g, h, k, c, d, l, e, f], false,
            p = [k, c, d, g.clone(), h.clone() + o(), z()], q = [l, e, f, -o(), g, h]),
        family!("S_III", [g, h, k, c, d, l, e, f], false,
            p = [k, c, d, g.clone(), h.clone(), z()], q = [l, e, f, z(), g - o(), h]),
        family!("S_IV", [g, h, k, c, d, l, e, f], false,
            p = [k, c, d, g.clone(), h.clone(), z()], q = [l, e, f, -o(), g, h]),
        family!("2s4", [h, k, c, d, l], false,
            p = [k, c, d, z(), h.clone() - o(), z()], q = [l, z(), z(), z(), -o(), h]),
        family!("2s5", [k, c, d, l], false,
            p = [k, c, d, z(), z(), z()], q = [l, z(), z(), -o(), z(), -o()]),
        family!("2s6", [k, c, d, l], false,
            p = [k, c, d, z(), z(), z()], q = [l, z(), z(), z(), -o(), z()]),
        family!("4s1", [g, k, c, d, l, e, f], true,
            p = [k, c, d, g.clone(), z(), z()], q = [l, e, f, z(), g - o(), z()]),
        family!("4s1a", [g, k, c, l, e, f], true,
            p = [k, c, z(), g.clone(), z(), z()], q = [l, e, f, z(), g - o(), z()]),
        family!("4s1b", [k, l, e, f], true,
            p = [k, z(), z(), z(), z(), z()], q = [l, e, f, z(), -o(), z()]),
        family!("5s4", [g, k, c, d, l, e, f], true,
            p = [k, c, d, int(2) * g.clone(), z(), z()], q = [l, e, f, -o(), int(2) * g, z()]),
        family!("5s4a", [g, k, c, l, e, f], true,
            p = [k, c, z(), int(2) * g.clone(), z(), z()], q = [l, e, f, -o(), int(2) * g, z()]),
        family!("2s", [g, k, c, l], true,
            p = [k, c, z(), int(2) * g.clone(), z(), z()], q = [l, z(), z(), -o(), int(2) * g, z()]),
        family!("K3", [k, c, l, e, f], true,
            p = [k, c, z(), z(), z(), z()], q = [l, e, f, -o(), z(), z()]),
        family!("S31", [g, l], true,
            p = [z(), z(), z(), g.clone(), z(), z()], q = [l, z(), z(), z(), g - o(), z()]),
        family!("S32", [k, l, e], true,
            p = [k, z(), z(), o(), z(), z()], q = [l, e, z(), z(), z(), z()]),
        family!("S41a", [k, c, l], true,
            p = [k, c, z(), o(), z(), z()], q = [l, z(), z(), -o(), o(), z()]),
        family!("S42a", [k, c, d, l, f], true,
            p = [k, c, d, z(), z(), z()], q = [l, z(), f, -o(), z(), z()]),
        family!("S420", [k, c, l, f], true,
            p = [k, c, z(), z(), z(), z()], q = [l, z(), f, -o(), z(), z()]),
        family!("S41oa", [l], true,
            p = [z(), z(), z(), o(), z(), z()], q = [l, z(), z(), -o(), o(), z()]),
        family!("S42oa", [k, c, l, f], true,
            p = [k, c.clone(), z(), z(), z(), z()], q = [l, z(), f.clone(), -o(), z(), z()],
            where (c * f) == z()),
    ]
}

pub fn family(name: &str) -> Option<FamilySpec> {
    families().into_iter().find(|f| f.name == name)
}

/// Values drawn for family parameters; zero and one are over-represented so
/// that degenerate strata are reached.
const PARAM_VALUES: [(i64, i64); 15] =
    [(0, 1), (0, 1), (0, 1), (1, 1), (1, 1), (-1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1), (-3, 1), (1, 2), (-1, 2), (3, 2), (1, 3)];

pub fn random_param(rng: &mut impl Rng) -> Rational {
    let (n, d) = *PARAM_VALUES.choose(rng).unwrap();
    rat(n, d)
}

/// Random member of a family, respecting its constraint.
pub fn random_member(spec: &FamilySpec, rng: &mut impl Rng) -> (Vec<Rational>, QuadraticSystem) {
    loop {
        let params: Vec<Rational> = spec.params.iter().map(|_| random_param(rng)).collect();
        if spec.admits(&params) {
            let s = spec.build(&params);
            return (params, s);
        }
    }
}

/// Random invertible affine map with small integer entries.
pub fn random_affine(rng: &mut impl Rng) -> AffineMap {
    loop {
        let m = [[0, 1], [0, 1]].map(|_| [0, 1].map(|_| int(rng.gen_range(-3..=3))));
        let b = [int(rng.gen_range(-3..=3)), int(rng.gen_range(-3..=3))];
        if let Ok(g) = AffineMap::new(m, b) {
            return g;
        }
    }
}

/// Random invertible linear map with small integer entries.
pub fn random_linear(rng: &mut impl Rng) -> AffineMap {
    loop {
        let m = [[0, 1], [0, 1]].map(|_| [0, 1].map(|_| int(rng.gen_range(-3..=3))));
        if let Ok(g) = AffineMap::linear(m) {
            return g;
        }
    }
}

/// How a corpus entry was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// All twelve coefficients random.
    Dense,
    /// Each coefficient zero with probability 0.6.
    Sparse,
    /// A family member moved by a random affine map and time rescaling.
    Stratum,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub origin: Origin,
    pub label: String,
    pub system: QuadraticSystem,
}

fn random_coefficient(rng: &mut impl Rng) -> Rational {
    let n = rng.gen_range(-5..=5);
    if rng.gen_bool(0.15) {
        rat(n, 2)
    } else {
        int(n)
    }
}

/// `n` valid systems from a seeded generator, mixing dense, sparse and
/// family-targeted draws in the ratio 1 : 1 : 2.
pub fn fuzz_corpus(seed: u64, n: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fams = families();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let roll = rng.gen_range(0..4);
        let (origin, label, s) = match roll {
            0 => {
                let p = [0; 6].map(|_| random_coefficient(&mut rng));
                let q = [0; 6].map(|_| random_coefficient(&mut rng));
                (Origin::Dense, "dense".to_string(), QuadraticSystem::from_monomials(p, q))
            }
            1 => {
                let draw = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.6) { int(0) } else { random_coefficient(rng) };
                let p = [0; 6].map(|_| draw(&mut rng));
                let q = [0; 6].map(|_| draw(&mut rng));
                (Origin::Sparse, "sparse".to_string(), QuadraticSystem::from_monomials(p, q))
            }
            _ => {
                let spec = fams.choose(&mut rng).unwrap();
                let (_, s) = random_member(spec, &mut rng);
                let g = random_affine(&mut rng);
                let lambda = [rat(1, 2), int(1), int(2), int(3)].choose(&mut rng).unwrap().clone();
                let s = s.apply_affine(&g).rescale_time(&lambda).expect("positive factor");
                (Origin::Stratum, spec.name.to_string(), s)
            }
        };
        if s.validate().is_ok() {
            out.push(CorpusEntry { origin, label, system: s });
        }
    }
    out
}

/// A family member with fixed parameters that reaches a known row of the sigma or figure table.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub family: &'static str,
    pub params: Vec<Rational>,
    /// `Sigma` class or figure number reached.
    pub target: u8,
    /// Row of [`crate::classify::tables::FIGURE_ROWS`] for figure fixtures.
    pub row: Option<usize>,
}

impl Fixture {
    pub fn system(&self) -> QuadraticSystem {
        family(self.family).expect("known family").build(&self.params)
    }
}

/// Family members reaching each `Sigma` class, drawn from (2s4), (2s5), (2s6) and S_I..S_IV.
pub const SIGMA_FIXTURES: &[(u8, &str, &[&str])] = &[
    (1, "S_I", &["-1", "-1", "0", "-1", "0", "0", "0", "0"]),
    (2, "S_II", &["0", "1/2", "0", "-1", "0", "0", "0", "0"]),
    (3, "S_III", &["1", "1", "0", "0", "0", "0", "1", "0"]),
    (4, "S_IV", &["0", "-1", "0", "0", "-1", "0", "0", "0"]),
    (5, "2s4", &["-1", "0", "1", "0", "0"]),
    (6, "S_II", &["0", "0", "0", "0", "0", "0", "0", "1"]),
    (7, "S_III", &["0", "1", "0", "1", "0", "1", "0", "0"]),
    (8, "S_III", &["-1", "0", "0", "0", "-2", "0", "0", "0"]),
    (9, "S_IV", &["-1", "0", "0", "0", "-1", "-1", "0", "0"]),
    (10, "2s4", &["-1", "1", "0", "0", "0"]),
    (11, "2s4", &["0", "0", "-1", "-1", "0"]),
    (12, "S_II", &["-1", "0", "0", "0", "0", "-1", "0", "0"]),
    (13, "2s5", &["0", "-1", "0", "0"]),
    (14, "S_III", &["0", "-1", "0", "0", "0", "1", "0", "1"]),
    (15, "2s6", &["0", "1", "1", "0"]),
    (16, "S_III", &["-1", "0", "0", "0", "0", "0", "0", "1"]),
    (17, "S_IV", &["0", "0", "0", "0", "1/2", "0", "0", "0"]),
    (18, "2s4", &["-1", "1", "0", "-1", "1/2"]),
    (19, "2s4", &["0", "1", "0", "-1", "0"]),
    (20, "S_II", &["0", "0", "-1", "0", "0", "0", "-1", "0"]),
    (21, "S_III", &["0", "1", "-1", "0", "-1", "1", "0", "0"]),
    (22, "2s6", &["-1", "0", "1", "0"]),
    (23, "2s6", &["1", "-1", "0", "0"]),
    (24, "S_III", &["1", "0", "0", "0", "-1", "-1", "-1", "0"]),
    (25, "S_IV", &["0", "0", "0", "1", "0", "0", "1", "1"]),
    (26, "2s4", &["-1", "1", "0", "0", "1/2"]),
    (27, "2s4", &["0", "1", "0", "1", "1"]),
    (28, "2s4", &["0", "0", "0", "0", "-1"]),
    (29, "S_II", &["0", "0", "3/2", "0", "1", "-1", "-2", "0"]),
    (30, "2s5", &["-1", "0", "0", "0"]),
    (31, "S_III", &["0", "-1", "1", "0", "-1", "1", "0", "-1"]),
    (32, "2s6", &["0", "0", "1", "-1"]),
    (33, "2s6", &["1", "0", "0", "0"]),
    (34, "2s6", &["0", "-1", "0", "-1"]),
    (35, "S_III", &["-1", "0", "0", "0", "0", "1/2", "0", "0"]),
    (36, "S_IV", &["0", "0", "-1", "0", "0", "0", "0", "0"]),
];

/// Family members reaching the rows of the figure table as `(figure, row, family, params)`.
/// Figures 1 to 7, 20, 22 and 34 are only reached through S_I..S_IV.
pub const FIGURE_FIXTURES: &[(u8, usize, &str, &[&str])] = &[
    (1, 0, "S_I", &["1/2", "1/3", "-1", "0", "0", "0", "0", "0"]),
    (1, 1, "S_I", &["1/3", "0", "1", "0", "0", "1", "0", "0"]),
    (2, 2, "S_I", &["1/2", "0", "-1", "0", "0", "0", "0", "-1"]),
    (2, 3, "S_I", &["0", "1/2", "1", "0", "-1", "2", "0", "2"]),
    (2, 4, "S_I", &["0", "1", "0", "0", "1", "0", "1", "0"]),
    (3, 5, "S_I", &["0", "0", "1", "-1", "0", "0", "0", "1"]),
    (3, 6, "S_I", &["0", "1", "0", "0", "-1", "-1", "0", "1"]),
    (4, 7, "S_I", &["0", "0", "0", "1", "-1", "0", "0", "0"]),
    (4, 8, "S_I", &["0", "0", "-1", "0", "0", "-1", "3", "0"]),
    (5, 9, "S_I", &["-1", "1", "0", "0", "1", "0", "0", "0"]),
    (5, 10, "S_I", &["-1", "0", "0", "-1", "0", "1", "0", "0"]),
    (5, 11, "S_I", &["0", "-1", "1", "0", "1", "1/2", "0", "1/2"]),
    (5, 12, "S_I", &["0", "1/2", "0", "0", "0", "2", "0", "0"]),
    (5, 13, "S_I", &["1/2", "1/2", "1", "0", "0", "-1", "0", "0"]),
    (5, 14, "S_I", &["0", "1", "1", "0", "0", "1", "0", "0"]),
    (6, 15, "S_I", &["0", "-1", "0", "0", "0", "0", "1/2", "0"]),
    (6, 16, "S_I", &["2", "0", "-1", "0", "0", "1", "-1", "0"]),
    (6, 17, "S_I", &["0", "0", "0", "-1", "0", "-1", "0", "0"]),
    (7, 18, "S_I", &["-1", "-1", "0", "-1", "0", "0", "0", "0"]),
    (7, 19, "S_I", &["-1", "0", "1", "0", "0", "0", "0", "0"]),
    (8, 20, "4s1a", &["2", "1", "0", "0", "0", "0"]),
    (8, 21, "S32", &["1", "0", "1"]),
    (8, 22, "4s1a", &["0", "1", "0", "0", "0", "0"]),
    (9, 23, "4s1", &["1/2", "0", "0", "1", "0", "0", "0"]),
    (9, 24, "4s1", &["1", "0", "0", "-1", "0", "-1", "0"]),
    (9, 25, "4s1", &["0", "0", "0", "1", "0", "1", "0"]),
    (10, 26, "4s1a", &["1/2", "-1", "0", "0", "0", "0"]),
    (11, 27, "4s1", &["0", "0", "-1", "-1", "1", "0", "0"]),
    (11, 28, "4s1", &["0", "0", "0", "-1/2", "1", "0", "0"]),
    (12, 29, "4s1", &["0", "-1", "-1", "0", "0", "0", "0"]),
    (13, 30, "4s1", &["1", "0", "0", "1/2", "0", "0", "1"]),
    (13, 31, "4s1", &["1", "0", "0", "1", "-1", "0", "0"]),
    (14, 32, "4s1a", &["1/2", "0", "-1", "1", "0", "0"]),
    (15, 33, "4s1", &["0", "0", "-1", "0", "-1", "0", "0"]),
    (16, 34, "4s1", &["-1", "0", "0", "-1", "0", "0", "0"]),
    (16, 35, "4s1", &["0", "0", "0", "-1", "0", "1", "0"]),
    (17, 36, "4s1a", &["-1", "0", "0", "0", "0", "-1"]),
    (17, 37, "4s1a", &["-1", "0", "0", "1", "0", "0"]),
    (17, 38, "4s1a", &["0", "-1", "0", "0", "0", "0"]),
    (18, 39, "S_III", &["1", "1", "0", "0", "0", "0", "1", "0"]),
    (18, 40, "S_III", &["0", "1", "0", "0", "0", "2", "0", "-1"]),
    (18, 41, "S_III", &["0", "-1", "1", "0", "-1", "1", "0", "-1"]),
    (18, 42, "4s1a", &["2", "0", "0", "1", "0", "0"]),
    (18, 43, "S32", &["0", "-1", "0"]),
    (19, 44, "4s1a", &["1", "0", "0", "0", "0", "1"]),
    (20, 45, "S_III", &["0", "1", "0", "1", "0", "1", "0", "0"]),
    (20, 46, "S_III", &["0", "1", "-1", "0", "-1", "1", "0", "0"]),
    (21, 47, "4s1", &["0", "0", "1", "0", "0", "0", "1"]),
    (22, 48, "S_III", &["-1", "-1", "-1", "0", "0", "0", "0", "0"]),
    (22, 49, "S_III", &["0", "-1", "0", "0", "0", "1", "0", "1"]),
    (23, 50, "4s1", &["3", "0", "0", "1", "0", "0", "0"]),
    (23, 51, "4s1", &["1", "0", "1", "-1", "1", "1", "0"]),
    (24, 52, "S32", &["-1", "0", "1"]),
    (25, 53, "4s1", &["2", "0", "-1", "0", "-1", "1", "0"]),
    (26, 54, "4s1", &["-2", "0", "0", "-1", "0", "1", "0"]),
    (26, 55, "4s1a", &["-1", "0", "-1", "-1", "0", "0"]),
    (27, 56, "4s1a", &["2", "-1", "0", "0", "0", "0"]),
    (28, 57, "4s1", &["1/3", "0", "0", "0", "-1", "0", "0"]),
    (29, 58, "4s1a", &["-1", "1", "0", "0", "0", "0"]),
    (30, 59, "S_II", &["0", "-2", "0", "0", "0", "0", "1", "0"]),
    (30, 60, "S_II", &["-1", "0", "0", "0", "0", "-1", "0", "0"]),
    (30, 61, "S_II", &["0", "0", "3/2", "0", "1", "-1", "-2", "0"]),
    (30, 62, "S_II", &["0", "-1", "0", "0", "1", "0", "0", "0"]),
    (30, 63, "S_II", &["0", "-1", "-1", "0", "0", "0", "0", "1"]),
    (30, 64, "S_IV", &["0", "-1", "0", "0", "-1", "0", "0", "0"]),
    (30, 65, "S41a", &["1", "0", "0"]),
    (30, 66, "S42a", &["0", "0", "1", "0", "0"]),
    (30, 67, "5s4", &["0", "-1", "0", "0", "0", "0", "0"]),
    (31, 68, "S_II", &["0", "0", "0", "0", "0", "0", "0", "1"]),
    (31, 69, "S_II", &["0", "0", "-1", "0", "0", "0", "-1", "0"]),
    (31, 70, "5s4", &["0", "0", "1", "0", "0", "0", "1"]),
    (32, 71, "5s4", &["1", "0", "0", "0", "0", "0", "-1"]),
    (32, 72, "5s4", &["0", "1", "0", "0", "0", "0", "-1"]),
    (33, 73, "5s4", &["0", "0", "-1", "0", "0", "0", "1"]),
    (34, 74, "S_II", &["0", "1/2", "0", "-1", "0", "0", "0", "0"]),
    (34, 75, "S_II", &["0", "0", "0", "1", "0", "1/2", "0", "0"]),
    (34, 76, "S_IV", &["0", "1/2", "0", "1", "0", "0", "0", "0"]),
    (35, 77, "5s4", &["0", "0", "1", "0", "1", "0", "0"]),
    (36, 78, "S41a", &["0", "0", "1"]),
    (37, 79, "5s4", &["1", "0", "0", "-1", "0", "0", "1"]),
    (37, 80, "S41a", &["0", "1", "-1"]),
    (38, 81, "5s4", &["0", "0", "1", "0", "0", "0", "3"]),
    (39, 82, "S41a", &["0", "1", "1"]),
    (40, 83, "S41a", &["-1", "0", "0"]),
];

fn parse_params(params: &[&str]) -> Vec<Rational> {
    params.iter().map(|s| s.parse().expect("fixture parameter")).collect()
}

pub fn sigma_fixtures() -> Vec<Fixture> {
    SIGMA_FIXTURES
        .iter()
        .map(|(sigma, fam, params)| Fixture { family: fam, params: parse_params(params), target: *sigma, row: None })
        .collect()
}

pub fn figure_fixtures() -> Vec<Fixture> {
    FIGURE_FIXTURES
        .iter()
        .map(|(fig, row, fam, params)| Fixture { family: fam, params: parse_params(params), target: *fig, row: Some(*row) })
        .collect()
}
