//! The sequence `mu_0, ..., mu_4`.
//!
//! With `P, Q` the homogenised right-hand sides, the resultant in `T` of
//! `P(Tx, Ty + W, Z)` and `Q(Tx, Ty + W, Z)` expands as
//! `sum_i x^(4-i) mu_i(x, y) W^(4-i) Z^i`, which gives every `mu_i` by one
//! resultant and an exact division.

use crate::poly::{sylvester_resultant, Poly, Poly2, PolyError};
use crate::system::QuadraticSystem;

use super::symbolic;

// variables of the auxiliary ring
const T: usize = 0;
const W: usize = 1;
const Z: usize = 2;
const X: usize = 3;
const Y: usize = 4;

/// `[mu_0, ..., mu_4]` through a single directional resultant.
pub fn mu_sequence(s: &QuadraticSystem) -> Result<[Poly2; 5], PolyError> {
    let (p, q) = s.homogenized();
    let v = |i: usize| Poly::<5>::var(i);
    let subs = [&v(T) * &v(X), &(&v(T) * &v(Y)) + &v(W), v(Z)];
    let pt = p.compose(&subs);
    let qt = q.compose(&subs);
    let res = sylvester_resultant(&pt, &qt, T, 2, 2)?;

    let mut out: [Poly2; 5] = Default::default();
    for (i, slot) in out.iter_mut().enumerate() {
        let mut coeff = Poly2::zero();
        for (e, c) in res.terms() {
            if e[W] as usize == 4 - i && e[Z] as usize == i {
                coeff.add_term([e[X], e[Y]], c.clone());
            }
        }
        let divisor = Poly2::monomial([4 - i as u32, 0], num_traits::One::one());
        *slot = coeff.div_exact(&divisor).expect("x^(4-i) divides the mu coefficient");
    }
    Ok(out)
}

/// `[mu_0, ..., mu_4]` via `mu_i = L^i(mu_0) / i!` on symbolic coefficients.
pub fn mu_sequence_via_operator(s: &QuadraticSystem) -> [Poly2; 5] {
    let table = symbolic::mu_table();
    std::array::from_fn(|i| table[i].evaluate(s))
}
