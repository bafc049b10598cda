//! ε-tensor invariants of the system written as
//! `dx^j/dt = a^j + a^j_α x^α + a^j_{αβ} x^α x^β`,
//! computed by literal summation over every repeated index.
//!
//! This module is an oracle: the classifier never reads it. Its tilde
//! quantities must reproduce the production comitants through a fixed set of
//! polynomial identities, which [`correspondence_check`] evaluates.
//!
//! `J5` is printed with a stray free index `p`; it is read here as
//! `a^α_{γp} a^β_{δr} a^γ_{qk} a^δ_{sl} ε_{αβ} ε^{pq} ε^{rs} ε^{kl}`.
//! Every full contraction of four quadratic coefficient tensors lies in the
//! span of `η`, `μ0` and `κ`, and none of them is a multiple of `κ`, so the
//! `κ = 64 θ~` check reports a nonzero residual under any single reading.

use serde::Serialize;

use crate::comitants::{Comitant, ComitantSet};
use crate::poly::{int, rat, Poly2, Rational};
use crate::system::QuadraticSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCoefficients {
    /// `a^j`
    pub a0: [Rational; 2],
    /// `a^j_α`, indexed `[j][α]`
    pub a1: [[Rational; 2]; 2],
    /// `a^j_{αβ}`, indexed `[j][α][β]`, symmetric in `α, β`
    pub a2: [[[Rational; 2]; 2]; 2],
}

impl TensorCoefficients {
    pub fn from_system(s: &QuadraticSystem) -> Self {
        let c = s.coefficients();
        let side = |o: usize| {
            (
                c[o].clone(),
                [c[o + 1].clone(), c[o + 2].clone()],
                [[c[o + 3].clone(), c[o + 4].clone()], [c[o + 4].clone(), c[o + 5].clone()]],
            )
        };
        let (p0, p1, p2) = side(0);
        let (q0, q1, q2) = side(6);
        Self { a0: [p0, q0], a1: [p1, q1], a2: [p2, q2] }
    }
}

/// `ε^{ij} = ε_{ij}` with `ε^{12} = 1`.
fn eps(i: usize, j: usize) -> i64 {
    match (i, j) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

/// Sums `term(idx)` over all `idx ∈ {0,1}^K`. A term returns its ε-sign,
/// its coefficient product and the indices carried by `x^α` factors.
fn contract<const K: usize>(term: impl Fn(&[usize; K]) -> (i64, Rational, Vec<usize>)) -> Poly2 {
    let mut out = Poly2::zero();
    for code in 0..(1usize << K) {
        let idx: [usize; K] = std::array::from_fn(|i| (code >> i) & 1);
        let (sign, coeff, xs) = term(&idx);
        if sign == 0 {
            continue;
        }
        let mut e = [0u32; 2];
        for a in xs {
            e[a] += 1;
        }
        out.add_term(e, coeff * int(sign));
    }
    out
}

fn scalar(p: &Poly2) -> Rational {
    p.constant_term()
}

/// The seven invariants `J1..J7` and thirteen comitants `R1..R13`.
#[derive(Clone, Debug)]
pub struct TensorInvariants {
    /// `j[i]` is `J_{i+1}`.
    pub j: [Rational; 7],
    /// `r[i]` is `R_{i+1}`.
    pub r: [Poly2; 13],
}

impl TensorInvariants {
    pub fn jj(&self, i: usize) -> Rational {
        self.j[i - 1].clone()
    }
    pub fn rr(&self, i: usize) -> &Poly2 {
        &self.r[i - 1]
    }
}

pub fn tensor_invariants(t: &TensorCoefficients) -> TensorInvariants {
    let a0 = &t.a0;
    let a1 = &t.a1;
    let a2 = &t.a2;

    // J1 = a^α_α
    let j1 = contract::<1>(|&[al]| (1, a1[al][al].clone(), vec![]));
    // J2 = a^α_p a^β_q ε_{αβ} ε^{pq}
    let j2 = contract::<4>(|&[al, be, p, q]| {
        (eps(al, be) * eps(p, q), &a1[al][p] * &a1[be][q], vec![])
    });
    // J3 = a^α a^β_{αβ}
    let j3 = contract::<2>(|&[al, be]| (1, &a0[al] * &a2[be][al][be], vec![]));
    // J4 = a^α_{pr} a^β_{qk} a^γ_{sn} a^δ_{lm} ε_{αβ} ε_{γδ} ε^{pq} ε^{rs} ε^{kl} ε^{mn}
    let j4 = contract::<12>(|&[al, be, ga, de, p, q, r, s, k, l, m, n]| {
        let sg = eps(al, be) * eps(ga, de) * eps(p, q) * eps(r, s) * eps(k, l) * eps(m, n);
        if sg == 0 {
            return (0, Rational::default(), vec![]);
        }
        (sg, &a2[al][p][r] * &a2[be][q][k] * &a2[ga][s][n] * &a2[de][l][m], vec![])
    });
    // J5 = a^α_{γp} a^β_{δr} a^γ_{qk} a^δ_{sl} ε_{αβ} ε^{pq} ε^{rs} ε^{kl}
    let j5 = contract::<10>(|&[al, be, ga, de, p, q, r, s, k, l]| {
        let sg = eps(al, be) * eps(p, q) * eps(r, s) * eps(k, l);
        if sg == 0 {
            return (0, Rational::default(), vec![]);
        }
        (sg, &a2[al][ga][p] * &a2[be][de][r] * &a2[ga][q][k] * &a2[de][s][l], vec![])
    });
    // J6 = a^α_{pr} a^β_{αq} a^γ_{δs} a^δ_{βγ} ε^{pq} ε^{rs}
    let j6 = contract::<8>(|&[al, be, ga, de, p, q, r, s]| {
        let sg = eps(p, q) * eps(r, s);
        if sg == 0 {
            return (0, Rational::default(), vec![]);
        }
        (sg, &a2[al][p][r] * &a2[be][al][q] * &a2[ga][de][s] * &a2[de][be][ga], vec![])
    });
    // J7 = a^α_p a^β_{γq} a^γ_{αβ} ε^{pq}
    let j7 = contract::<5>(|&[al, be, ga, p, q]| {
        (eps(p, q), &a1[al][p] * &a2[be][ga][q] * &a2[ga][al][be], vec![])
    });

    // R1 = x^α a^β_q a^γ_{pα} ε_{βγ} ε^{pq}
    let r1 = contract::<5>(|&[al, be, ga, p, q]| {
        (eps(be, ga) * eps(p, q), &a1[be][q] * &a2[ga][p][al], vec![al])
    });
    // R2 = x^α a^β a^γ_α ε_{βγ}
    let r2 = contract::<3>(|&[al, be, ga]| (eps(be, ga), &a0[be] * &a1[ga][al], vec![al]));
    // R3 = x^α x^β a^γ_{pα} a^δ_{qβ} ε_{γδ} ε^{pq}
    let r3 = contract::<6>(|&[al, be, ga, de, p, q]| {
        (eps(ga, de) * eps(p, q), &a2[ga][p][al] * &a2[de][q][be], vec![al, be])
    });
    // R4 = x^α x^β a^γ a^δ_{αβ} ε_{γδ}
    let r4 = contract::<4>(|&[al, be, ga, de]| {
        (eps(ga, de), &a0[ga] * &a2[de][al][be], vec![al, be])
    });
    // R5 = x^α x^β x^γ a^δ_α a^μ_{βγ} ε_{δμ}
    let r5 = contract::<5>(|&[al, be, ga, de, mu]| {
        (eps(de, mu), &a1[de][al] * &a2[mu][be][ga], vec![al, be, ga])
    });
    // R6 = x^α x^β a^γ_{αβ} a^δ_{γδ}
    let r6 = contract::<4>(|&[al, be, ga, de]| (1, &a2[ga][al][be] * &a2[de][ga][de], vec![al, be]));
    // R7 = x^α x^β a^γ a^δ_{αp} a^μ_{βs} a^ν_{qr} ε_{γδ} ε_{μν} ε^{pq} ε^{rs}
    let r7 = contract::<10>(|&[al, be, ga, de, mu, nu, p, q, r, s]| {
        let sg = eps(ga, de) * eps(mu, nu) * eps(p, q) * eps(r, s);
        if sg == 0 {
            return (0, Rational::default(), vec![]);
        }
        (sg, &a0[ga] * &a2[de][al][p] * &a2[mu][be][s] * &a2[nu][q][r], vec![al, be])
    });
    // R8 = x^α x^β a^γ_α a^δ_β a^μ_{pr} a^ν_{qs} ε_{γμ} ε_{δν} ε^{pq} ε^{rs}
    let r8 = contract::<10>(|&[al, be, ga, de, mu, nu, p, q, r, s]| {
        let sg = eps(ga, mu) * eps(de, nu) * eps(p, q) * eps(r, s);
        if sg == 0 {
            return (0, Rational::default(), vec![]);
        }
        (sg, &a1[ga][al] * &a1[de][be] * &a2[mu][p][r] * &a2[nu][q][s], vec![al, be])
    });
    // R9 = x^α a^β ε_{βα}
    let r9 = contract::<2>(|&[al, be]| (eps(be, al), a0[be].clone(), vec![al]));
    // R10 = x^α x^β a^γ_α ε_{γβ}
    let r10 = contract::<3>(|&[al, be, ga]| (eps(ga, be), a1[ga][al].clone(), vec![al, be]));
    // R11 = x^α a^β_{αβ}
    let r11 = contract::<2>(|&[al, be]| (1, a2[be][al][be].clone(), vec![al]));
    // R12 = x^α x^β x^γ a^δ_{αβ} ε_{δγ}
    let r12 = contract::<4>(|&[al, be, ga, de]| (eps(de, ga), a2[de][al][be].clone(), vec![al, be, ga]));
    // R13 = x^α a^β_p a^γ_{αr} a^δ_{qk} a^μ_{sl} ε_{βγ} ε_{δμ} ε^{pq} ε^{rs} ε^{kl}
    let r13 = contract::<11>(|&[al, be, ga, de, mu, p, q, r, s, k, l]| {
        let sg = eps(be, ga) * eps(de, mu) * eps(p, q) * eps(r, s) * eps(k, l);
        if sg == 0 {
            return (0, Rational::default(), vec![]);
        }
        (sg, &a1[be][p] * &a2[ga][al][r] * &a2[de][q][k] * &a2[mu][s][l], vec![al])
    });

    TensorInvariants {
        j: [j1, j2, j3, j4, j5, j6, j7].map(|p| scalar(&p)),
        r: [r1, r2, r3, r4, r5, r6, r7, r8, r9, r10, r11, r12, r13],
    }
}

/// The tilde comitants built from `J_i, R_i`.
#[derive(Clone, Debug)]
pub struct TildeSet {
    pub mu: Rational,
    pub sigma: Rational,
    pub theta: Rational,
    pub l: Poly2,
    pub m: Poly2,
    pub s1: Poly2,
    pub s2: Poly2,
    pub s3: Poly2,
    pub s4: Rational,
    pub h: Poly2,
    pub v: Poly2,
    pub a: Poly2,
    pub eta: Rational,
    pub n: Poly2,
    pub g: Poly2,
    pub f: Poly2,
}

pub fn tilde_set(t: &TensorInvariants) -> TildeSet {
    let j = |i: usize| Poly2::constant(t.jj(i));
    let r = |i: usize| t.rr(i).clone();
    let half = rat(1, 2);
    let k = |n: i64| int(n);

    let m = (&(&r(3).scale(&k(9)) + &r(6).scale(&k(6))) - &(&r(11) * &r(11)).scale(&k(8))).scale(&half);
    let s2 = {
        let mut acc = (&(&j(1) * &j(1)) * &r(6)).scale(&k(2));
        acc += &(&j(1) * &(&r(1) * &r(1))).scale(&k(2));
        acc -= &(&j(2) * &r(6)).scale(&k(2));
        acc += &(&j(2) * &(&r(11) * &r(11)));
        acc += &(&j(3) * &r(3)).scale(&k(8));
        acc -= &(&j(3) * &r(6)).scale(&k(8));
        acc -= &r(7).scale(&k(4));
        acc -= &r(8);
        acc
    };
    let s3 = {
        let r12sq = &r(12) * &r(12);
        let bracket1 = &(&j(2).scale(&k(7)) - &(&j(1) * &j(1)).scale(&k(6))) - &j(3).scale(&k(8));
        let bracket2 = &(&(&j(1) * &r(5)).scale(&k(10)) + &(&r(1) * &r(10)).scale(&k(4)))
            - &(&r(3) * &r(9)).scale(&k(6));
        let mut acc = &r12sq * &bracket1;
        acc -= &(&r(12) * &bracket2);
        acc += &(&r(3) * &(&r(10) * &r(10))).scale(&k(4));
        acc -= &(&r(5) * &r(5)).scale(&k(4));
        acc
    };
    let g = {
        let mut acc = (&r(1) * &r(1)).scale(&k(2));
        acc -= &(&j(2) * &r(3)).scale(&k(2));
        acc += &r(7).scale(&k(4));
        acc += &r(8);
        acc.scale(&half)
    };
    let f = {
        let mut acc = &j(2) * &r(5);
        acc += &(&r(2) * &r(3)).scale(&k(4));
        acc += &(&r(1) * &r(4)).scale(&k(4));
        acc.scale(&half)
    };
    TildeSet {
        mu: t.jj(4) * &half,
        sigma: t.jj(7),
        theta: t.jj(5) * &half,
        l: r(12),
        m,
        s1: r(5),
        s2,
        s3,
        s4: int(4) * t.jj(3) - t.jj(2),
        h: r(13),
        v: &(&r(4) * &r(4)) - &(&r(2) * &r(5)),
        a: (&r(6).scale(&k(2)) - &r(3).scale(&k(3))).scale(&half),
        eta: (t.jj(4) + int(20) * t.jj(5) - int(8) * t.jj(6)) * &half,
        n: r(3).scale(&half),
        g,
        f,
    }
}

/// One identity between a production comitant and its tensorial counterpart.
#[derive(Clone, Debug, Serialize)]
pub struct Correspondence {
    pub identity: &'static str,
    pub residual: String,
    pub holds: bool,
}

/// Residuals of the identities linking the two families of comitants.
pub fn correspondence_check(s: &QuadraticSystem, comitants: &ComitantSet) -> Vec<Correspondence> {
    use Comitant::*;
    let t = tilde_set(&tensor_invariants(&TensorCoefficients::from_system(s)));
    let c = |x: Comitant| comitants.get(x).clone();
    let k = |n: i64| int(n);
    let cst = |r: &Rational| Poly2::constant(r.clone());
    let pairs: Vec<(&'static str, Poly2, Poly2)> = vec![
        ("mu0 = mu~", c(Mu0), cst(&t.mu)),
        ("mu1 = 2 H~", c(Mu1), t.h.scale(&k(2))),
        ("mu2 = G~", c(Mu2), t.g.clone()),
        ("mu3 = F~", c(Mu3), t.f.clone()),
        ("mu4 = V~", c(Mu4), t.v.clone()),
        ("C2 = L~", c(C2), t.l.clone()),
        ("M = 8 M~", c(M), t.m.scale(&k(8))),
        ("eta = eta~", c(Eta), cst(&t.eta)),
        ("kappa = 64 theta~", c(Kappa), cst(&(&t.theta * k(64)))),
        ("K = 4 N~", c(K), t.n.scale(&k(4))),
        ("K1 = S1~", c(K1), t.s1.clone()),
        ("L = 8 A~", c(L), t.a.scale(&k(8))),
        ("R = 8 (A~ + 4 N~)", c(R), (&t.a + &t.n.scale(&k(4))).scale(&k(8))),
    ];
    pairs
        .into_iter()
        .map(|(identity, lhs, rhs)| {
            let residual = &lhs - &rhs;
            Correspondence { identity, holds: residual.is_zero(), residual: residual.to_string() }
        })
        .collect()
}
