//! Splitting `A = F + Δ` with `e^F = e^A`, `e^Δ = I` and the spectrum of `F`
//! in the principal strip.

use super::expm::expm;
use super::logm::{logm_principal, near_branch_cut};
use crate::error::Result;
use crate::matrix::{CMatrix, CScalar};
use crate::svd::{least_squares, Dense};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogSplit {
    /// Principal logarithm of `e^A`.
    pub f: CMatrix,
    /// `A − F`: diagonalizable with spectrum in `2iπℤ`.
    pub delta: CMatrix,
    /// `e^A` has a repeated eigenvalue on the negative real axis.
    pub near_branch_cut: bool,
}

pub fn log_split(m: &CMatrix, tol: &Tolerances) -> Result<LogSplit> {
    let e = expm(m);
    let f = logm_principal(&e, tol)?;
    Ok(LogSplit {
        f,
        delta: *m - f,
        near_branch_cut: near_branch_cut(&e, tol),
    })
}

/// Least-squares test of `p ∈ span{I, X, …, X^{n−1}}`.
///
/// Basis columns are normalised before the solve. Accepts when the residual
/// is below `eps_eig · (1 + ‖p‖)`.
pub fn poly_in_matrix_witness(p: &CMatrix, of: &CMatrix, tol: &Tolerances) -> Result<bool> {
    p.check_dim(of)?;
    let n = p.n();
    let mut power = CMatrix::identity(n);
    let mut cols = Vec::with_capacity(n);
    for _ in 0..n {
        let v = power.to_vec();
        let norm = power.norm_fro();
        if norm > 0.0 {
            cols.push(v.iter().map(|z| z / norm).collect::<Vec<CScalar>>());
        }
        power = power * *of;
    }
    let basis = Dense::from_columns(n * n, cols);
    let (_, residual) = least_squares(&basis, &p.to_vec(), tol.eps_rank);
    Ok(residual <= tol.eps_eig * (1.0 + p.norm_fro()))
}
