//! Structures on small Lie algebras used by the checks.
//!
//! - `heis5`: `de5 = 2(e12 + e34)`, `ξ = e5`, `φe1 = -e2`, `φe3 = -e4`;
//!   Sasakian with `dη = 2F`.
//! - `su2`: `de1 = 2e23`, `de2 = 2e31`, `de3 = 2e12`, `ξ = e3`; the round
//!   Sasakian 3-sphere.
//! - `r_kt`: `ℝ × KT` with `de4 = e12` and the integrable `Je1 = e2`,
//!   `Je3 = e4` extended by `ξ = e5`; normal, not contact metric.
//! - `heis5_twisted`: `de5 = e13 - e24` with `φ` as for `heis5`; `dη` has no
//!   `φ`-invariant part, `N` is skew and nonzero.
//! - `su2_r2`: `su(2)` on `e2, e3, e5` plus `ℝ²`, `de2 = 2e35`,
//!   `de3 = -2e25`, `de5 = 2e23`, with `φ` as for `heis5`; `N` is skew and
//!   nonzero, `ξ` is Killing and `N² ≠ 0`. Found by a search over sparse
//!   integer structure equations.
//! - `kt_hermitian`: KT with the integrable `J` above.
//! - `kt_almost_kaehler`: KT with `Ω = e13 + e24`, symplectic and not
//!   integrable.
//! - `solv6_hermitian`: the first six coframe elements of the solvable
//!   7-dimensional model, `de3 = e13 - e24`, `de4 = e23 + e14`,
//!   `de5 = -e15 + e26`, `de6 = -e25 - e16`, with `Je1 = e2`, `Je3 = e4`,
//!   `Je5 = e6`.

use liegeom::LieModel;

use crate::{AcsError, AlmostContact, AlmostHermitian};

fn model(label: &str, dim: usize, exprs: &[(usize, &str)]) -> LieModel {
    LieModel::from_exprs(label, dim, exprs).expect("fixture structure equations")
}

pub fn heis5_model() -> LieModel {
    model("heis5", 5, &[(5, "2*e12 + 2*e34")])
}

/// `φ(e1) = -e2`, `φ(e2) = e1`, `φ(e3) = -e4`, `φ(e4) = e3`.
const STANDARD_PHI: [(usize, usize, i64); 4] = [(1, 2, -1), (2, 1, 1), (3, 4, -1), (4, 3, 1)];

pub fn heis5() -> AlmostContact {
    AlmostContact::from_frame(heis5_model(), 5, &STANDARD_PHI).expect("heis5 structure")
}

pub fn su2() -> AlmostContact {
    let m = model("su2", 3, &[(1, "2*e23"), (2, "-2*e13"), (3, "2*e12")]);
    AlmostContact::from_frame(m, 3, &[(1, 2, -1), (2, 1, 1)]).expect("su2 structure")
}

pub fn r_kt() -> AlmostContact {
    let m = model("r-kt", 5, &[(4, "e12")]);
    AlmostContact::from_frame(m, 5, &STANDARD_PHI).expect("r-kt structure")
}

pub fn heis5_twisted() -> AlmostContact {
    let m = model("heis5-twisted", 5, &[(5, "e13 - e24")]);
    AlmostContact::from_frame(m, 5, &STANDARD_PHI).expect("twisted structure")
}

pub fn su2_r2() -> AlmostContact {
    let m = model("su2-r2", 5, &[(2, "2*e35"), (3, "-2*e25"), (5, "2*e23")]);
    AlmostContact::from_frame(m, 5, &STANDARD_PHI).expect("su2-r2 structure")
}

pub fn abelian_contact(dim: usize) -> Result<AlmostContact, AcsError> {
    let pairs: Vec<(usize, usize, i64)> =
        (0..dim / 2).flat_map(|p| [(2 * p + 1, 2 * p + 2, -1), (2 * p + 2, 2 * p + 1, 1)]).collect();
    AlmostContact::from_frame(LieModel::abelian(dim), dim, &pairs)
}

pub fn kt_model() -> LieModel {
    model("kt", 4, &[(4, "e12")])
}

pub fn kt_hermitian() -> AlmostHermitian {
    AlmostHermitian::from_pairs(kt_model(), &[(1, 2), (3, 4)]).expect("kt structure")
}

pub fn kt_almost_kaehler() -> AlmostHermitian {
    AlmostHermitian::from_pairs(kt_model(), &[(1, 3), (2, 4)]).expect("kt almost Kähler structure")
}

pub fn solv6_model() -> LieModel {
    model("solv6", 6, &[(3, "e13 - e24"), (4, "e23 + e14"), (5, "-e15 + e26"), (6, "-e25 - e16")])
}

pub fn solv6_hermitian() -> AlmostHermitian {
    AlmostHermitian::from_pairs(solv6_model(), &[(1, 2), (3, 4), (5, 6)]).expect("solv6 structure")
}

pub fn abelian_hermitian(dim: usize) -> Result<AlmostHermitian, AcsError> {
    let pairs: Vec<(usize, usize)> = (0..dim / 2).map(|p| (2 * p + 1, 2 * p + 2)).collect();
    AlmostHermitian::from_pairs(LieModel::abelian(dim), &pairs)
}
