use serde::Serialize;

use super::Comitant;
use super::Comitant::*;

/// Degrees, weight and translation behaviour of a comitant.
#[derive(Clone, Debug, Serialize)]
pub struct ComitantDescriptor {
    pub comitant: Comitant,
    pub weight: i32,
    pub degree_a: u32,
    pub degree_xy: u32,
    /// Comitants whose common zero set makes this one translation invariant.
    /// `Some(&[])` marks an unconditional T-comitant; `None` means no such
    /// property is claimed.
    pub ct_modulus: Option<&'static [Comitant]>,
}

const fn d(
    comitant: Comitant,
    degree_a: u32,
    degree_xy: u32,
    weight: i32,
    ct_modulus: Option<&'static [Comitant]>,
) -> ComitantDescriptor {
    ComitantDescriptor { comitant, weight, degree_a, degree_xy, ct_modulus }
}

pub static DESCRIPTORS: &[ComitantDescriptor] = &[
    d(Eta, 4, 0, 2, Some(&[])),
    d(Mu0, 4, 0, 2, Some(&[])),
    d(Kappa, 4, 0, 2, Some(&[])),
    d(C2, 1, 3, -1, Some(&[])),
    d(K, 2, 2, 0, Some(&[])),
    d(L, 2, 2, 0, Some(&[])),
    d(M, 2, 2, 0, Some(&[])),
    d(N, 2, 2, 0, Some(&[])),
    d(R, 2, 2, 0, Some(&[])),
    d(Kappa1, 3, 0, 1, Some(&[Eta, Kappa])),
    d(Kappa2, 2, 0, 0, Some(&[Eta, Kappa, L, K1])),
    d(K2, 4, 2, 0, Some(&[Eta, Mu0, Mu1, Kappa, Kappa1])),
    d(K3, 4, 6, -2, Some(&[M, Mu0, Mu1, Mu2])),
    d(K1, 2, 3, -1, Some(&[K])),
    d(Mu1, 4, 1, 1, Some(&[Mu0])),
    d(Mu2, 4, 2, 0, Some(&[Mu0, Mu1])),
    d(Mu3, 4, 3, -1, Some(&[Mu0, Mu1, Mu2])),
    d(Mu4, 4, 4, -2, Some(&[Mu0, Mu1, Mu2, Mu3])),
    // auxiliary building blocks
    d(C0, 1, 1, -1, None),
    d(C1, 1, 2, -1, None),
    d(D1, 1, 0, 0, None),
    d(D2, 1, 1, 0, None),
    d(H, 2, 2, 0, Some(&[])),
    d(J1, 2, 0, 0, None),
    d(J2, 2, 2, -1, None),
    d(J3, 2, 0, 0, None),
    d(J4, 2, 1, 0, None),
    d(Xi, 2, 2, 0, Some(&[])),
];

pub fn descriptor(c: Comitant) -> &'static ComitantDescriptor {
    DESCRIPTORS
        .iter()
        .find(|d| d.comitant == c)
        .expect("every comitant has a descriptor")
}
