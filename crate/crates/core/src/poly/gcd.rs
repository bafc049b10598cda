//! Greatest common divisors in `Q[x, y]`, computed in `Q[y][x]` by a
//! primitive pseudo-remainder sequence.

use num_traits::{One, Zero};

use super::multivariate::Poly2;
use super::rational::Rational;
use super::univariate::UPoly;

type Rep = Vec<UPoly>;

fn to_rep(p: &Poly2) -> Rep {
    let deg = p.degree_in(0).unwrap_or(0) as usize;
    let mut coeffs: Vec<Vec<Rational>> = vec![Vec::new(); deg + 1];
    for (e, c) in p.terms() {
        let slot = &mut coeffs[e[0] as usize];
        if slot.len() <= e[1] as usize {
            slot.resize(e[1] as usize + 1, Rational::zero());
        }
        slot[e[1] as usize] = c.clone();
    }
    trim(coeffs.into_iter().map(UPoly::new).collect())
}

fn from_rep(r: &Rep) -> Poly2 {
    let mut out = Poly2::zero();
    for (i, c) in r.iter().enumerate() {
        for (j, v) in c.coeffs().iter().enumerate() {
            out.add_term([i as u32, j as u32], v.clone());
        }
    }
    out
}

fn trim(mut r: Rep) -> Rep {
    while r.last().is_some_and(UPoly::is_zero) {
        r.pop();
    }
    r
}

fn content(r: &Rep) -> UPoly {
    r.iter().fold(UPoly::zero(), |acc, c| acc.gcd(c))
}

fn div_content(r: &Rep, c: &UPoly) -> Rep {
    r.iter().map(|v| v.div_rem(c).0).collect()
}

fn pseudo_rem(a: &Rep, b: &Rep) -> Rep {
    let db = b.len() - 1;
    let lc = b[db].clone();
    let mut rem = a.clone();
    while rem.len() > db && !rem.is_empty() {
        let k = rem.len() - 1;
        let lead = rem[k].clone();
        for c in rem.iter_mut() {
            *c = &*c * &lc;
        }
        for (i, c) in b.iter().enumerate() {
            rem[k - db + i] = &rem[k - db + i] - &(&lead * c);
        }
        rem = trim(rem);
        if rem.len() > k {
            unreachable!("pseudo-remainder did not reduce the degree");
        }
    }
    rem
}

/// Monic (in graded lexicographic order) greatest common divisor of `p` and `q`.
/// Returns `1` when they are coprime and `0` only when both are zero.
pub fn gcd(p: &Poly2, q: &Poly2) -> Poly2 {
    if p.is_zero() {
        return normalize(q);
    }
    if q.is_zero() {
        return normalize(p);
    }
    let (mut a, mut b) = (to_rep(p), to_rep(q));
    let ca = content(&a);
    let cb = content(&b);
    let cont = ca.gcd(&cb);
    a = div_content(&a, &ca);
    b = div_content(&b, &cb);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while b.len() > 1 {
        let r = pseudo_rem(&a, &b);
        a = b;
        if r.is_empty() {
            b = Vec::new();
            break;
        }
        let c = content(&r);
        b = div_content(&r, &c);
    }
    let prim = if b.len() == 1 {
        // a nonzero constant in x: the primitive parts are coprime
        vec![UPoly::constant(Rational::one())]
    } else {
        let c = content(&a);
        div_content(&a, &c)
    };
    let g: Rep = prim.iter().map(|v| v * &cont).collect();
    normalize(&from_rep(&trim(g)))
}

/// Scales so that the leading coefficient in graded lexicographic order is one.
pub fn normalize(p: &Poly2) -> Poly2 {
    let lead = p
        .terms()
        .max_by_key(|(e, _)| (e[0] + e[1], e[0]))
        .map(|(_, c)| c.clone());
    match lead {
        None => Poly2::zero(),
        Some(c) => p.scale(&c.recip()),
    }
}
