//! Affine invariants and comitants of a quadratic system.
//!
//! Every value is a binary form in `x, y` with coefficients polynomial in the
//! twelve system coefficients. Constants (`eta`, `mu0`, `kappa`, ...) are
//! forms of degree zero.

mod descriptors;
mod mu;
pub mod symbolic;

use std::fmt;

use serde::Serialize;

use crate::poly::{hessian, int, jacobian, transvectant2, BinaryForm, Poly2, PolyError};
use crate::system::QuadraticSystem;

pub use descriptors::{descriptor, ComitantDescriptor, DESCRIPTORS};
pub use mu::{mu_sequence, mu_sequence_via_operator};

macro_rules! comitants {
    ($($variant:ident => $name:literal, $deg:literal;)*) => {
        /// Named comitants computed by [`compute`].
        #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
        pub enum Comitant { $($variant),* }

        impl Comitant {
            pub const ALL: &'static [Comitant] = &[$(Comitant::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(Comitant::$variant => $name),* }
            }

            /// Degree in `x, y`.
            pub fn degree_xy(self) -> u32 {
                match self { $(Comitant::$variant => $deg),* }
            }

            pub fn from_name(name: &str) -> Option<Self> {
                match name { $($name => Some(Comitant::$variant),)* _ => None }
            }
        }
    };
}

comitants! {
    C0 => "C0", 1;
    C1 => "C1", 2;
    C2 => "C2", 3;
    D1 => "D1", 0;
    D2 => "D2", 1;
    M => "M", 2;
    Eta => "eta", 0;
    K => "K", 2;
    H => "H", 2;
    L => "L", 2;
    K1 => "K1", 3;
    Kappa => "kappa", 0;
    Kappa1 => "kappa1", 0;
    Mu0 => "mu0", 0;
    Mu1 => "mu1", 1;
    Mu2 => "mu2", 2;
    Mu3 => "mu3", 3;
    Mu4 => "mu4", 4;
    J1 => "J1", 0;
    J2 => "J2", 2;
    J3 => "J3", 0;
    J4 => "J4", 1;
    N => "N", 2;
    R => "R", 2;
    Kappa2 => "kappa2", 0;
    Xi => "xi", 2;
    K2 => "K2", 2;
    K3 => "K3", 6;
}

impl fmt::Display for Comitant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// All comitants of one system.
#[derive(Clone, Debug)]
pub struct ComitantSet {
    values: Vec<Poly2>,
}

impl ComitantSet {
    pub fn get(&self, c: Comitant) -> &Poly2 {
        &self.values[c as usize]
    }

    /// `mu_i` for `i = 0..=4`.
    pub fn mu(&self, i: usize) -> &Poly2 {
        self.get(MU[i])
    }

    pub fn form(&self, c: Comitant) -> BinaryForm {
        BinaryForm::from_poly(self.get(c), c.degree_xy()).expect("comitants are homogeneous")
    }

    pub fn is_zero(&self, c: Comitant) -> bool {
        self.get(c).is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Comitant, &Poly2)> {
        Comitant::ALL.iter().map(move |&c| (c, self.get(c)))
    }
}

pub const MU: [Comitant; 5] = [Comitant::Mu0, Comitant::Mu1, Comitant::Mu2, Comitant::Mu3, Comitant::Mu4];

/// `C_i = y p_i - x q_i`.
pub fn c_form(s: &QuadraticSystem, i: u32) -> Poly2 {
    &Poly2::y() * &s.p_part(i) - &Poly2::x() * &s.q_part(i)
}

/// `D_i = d p_i / dx + d q_i / dy`.
pub fn d_form(s: &QuadraticSystem, i: u32) -> Poly2 {
    &s.p_part(i).derivative(0) + &s.q_part(i).derivative(1)
}

/// Discriminant of a binary quadratic `a x^2 + b xy + c y^2` given as a polynomial.
fn quadratic_discriminant(f: &Poly2) -> Poly2 {
    let c = |e: [u32; 2]| f.coeff(&e);
    let (a, b, cc) = (c([2, 0]), c([1, 1]), c([0, 2]));
    Poly2::constant(&b * &b - int(4) * a * cc)
}

/// `H = -Discrim(alpha p2 + beta q2)` with `alpha = y`, `beta = -x`.
fn h_form(s: &QuadraticSystem) -> Poly2 {
    let coeff = |f: &Poly2, e: [u32; 2]| f.coeff(&e);
    let (p2, q2) = (s.p_part(2), s.q_part(2));
    let x = Poly2::x();
    let y = Poly2::y();
    let combo = |e: [u32; 2]| &y.scale(&coeff(&p2, e)) - &x.scale(&coeff(&q2, e));
    let a = combo([2, 0]);
    let b = combo([1, 1]);
    let c = combo([0, 2]);
    -(&(&b * &b) - &(&a * &c).scale(&int(4)))
}

/// Computes every named comitant of `s`.
///
/// # Errors
/// Fails only when the resultant behind the `mu` sequence degenerates, which
/// cannot happen for a system with `p2` or `q2` nonzero.
pub fn compute(s: &QuadraticSystem) -> Result<ComitantSet, PolyError> {
    use Comitant::*;
    let mut values = vec![Poly2::zero(); Comitant::ALL.len()];
    let mut set = |c: Comitant, v: Poly2| values[c as usize] = v;

    let (c0, c1, c2) = (c_form(s, 0), c_form(s, 1), c_form(s, 2));
    let (d1, d2) = (d_form(s, 1), d_form(s, 2));
    let (p1, p2, q1, q2) = (s.p_part(1), s.p_part(2), s.q_part(1), s.q_part(2));

    let m = hessian(&c2).scale(&int(2));
    let eta = Poly2::constant(BinaryForm::from_poly(&c2, 3)?.discriminant());
    let k = jacobian(&p2, &q2);
    let h = h_form(s);
    let l = &(&k.scale(&int(4)) + &h.scale(&int(8))) - &m;
    let k1 = &p1 * &q2 - &p2 * &q1;
    let kappa = transvectant2(&m, &k);
    let kappa1 = transvectant2(&m, &c1);
    let mus = mu_sequence(s)?;

    let j1 = jacobian(&c0, &d2);
    let j2 = jacobian(&c0, &c2);
    let j3 = quadratic_discriminant(&c1);
    let j4 = jacobian(&c1, &d2);
    let n = &k + &h;
    let r = &l + &k.scale(&int(8));
    let kappa2 = -&j1;
    let xi = &m - &k.scale(&int(2));

    let k2 = {
        let t1 = jacobian(&j2, &xi).scale(&int(4));
        let t2 = &jacobian(&c1, &xi).scale(&int(3)) * &d1;
        let inner = &(&j1.scale(&int(16)) + &j3.scale(&int(3))) + &(&d1 * &d1).scale(&int(3));
        &(&t1 + &t2) - &(&xi * &inner)
    };
    let k3 = {
        let t1 = &(&c2 * &c2).scale(&int(2)) * &(&j1.scale(&int(2)) - &j3.scale(&int(3)));
        let t2 = &c2 * &(&(&c0 * &k).scale(&int(3)) - &(&c1 * &j4).scale(&int(2)));
        let t3 = &k1.scale(&int(2)) * &(&k1.scale(&int(3)) - &(&c1 * &d2));
        &(&t1 + &t2) + &t3
    };

    set(C0, c0);
    set(C1, c1);
    set(C2, c2);
    set(D1, d1);
    set(D2, d2);
    set(M, m);
    set(Eta, eta);
    set(K, k);
    set(H, h);
    set(L, l);
    set(K1, k1);
    set(Kappa, kappa);
    set(Kappa1, kappa1);
    for (i, mu) in mus.into_iter().enumerate() {
        set(MU[i], mu);
    }
    set(J1, j1);
    set(J2, j2);
    set(J3, j3);
    set(J4, j4);
    set(N, n);
    set(R, r);
    set(Kappa2, kappa2);
    set(Xi, xi);
    set(K2, k2);
    set(K3, k3);
    Ok(ComitantSet { values })
}

/// Index of the first nonvanishing `mu_i`, i.e. the total multiplicity of
/// finite singularities that escaped to infinity; `None` if all vanish.
pub fn delta(set: &ComitantSet) -> Option<usize> {
    (0..5).find(|&i| !set.mu(i).is_zero())
}
