//! Structural predicates: nilpotency and diagonalizability.

use crate::eigen::eigenvalues;
use crate::matrix::CMatrix;
use crate::svd::rank_with_floor;
use crate::tolerance::Tolerances;

/// `m^n ≈ 0` relative to `‖m‖^n`.
pub fn is_nilpotent(m: &CMatrix, tol: &Tolerances) -> bool {
    let scale = m.norm_fro();
    if scale == 0.0 {
        return true;
    }
    let n = m.n() as i32;
    m.pow(n as u32).norm_fro() <= tol.eps_entry * scale.powi(n)
}

/// Every eigenvalue cluster of multiplicity `k` has a `k`-dimensional
/// eigenspace.
pub fn is_diagonalizable(m: &CMatrix, tol: &Tolerances) -> bool {
    let n = m.n();
    let floor = m.norm_fro();
    eigenvalues(m, tol)
        .clusters()
        .iter()
        .filter(|c| c.multiplicity > 1)
        .all(|c| rank_with_floor(&m.shift(-c.value), floor, tol) == n - c.multiplicity)
}
