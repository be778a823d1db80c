use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::matrix::{CMatrix, CScalar};
use crate::svd::{nullspace, Dense};
use crate::tolerance::Tolerances;

/// Basis of `{X : XA = AX, XB = BX}`.
#[derive(Debug, Clone)]
pub struct CommutantBasis {
    pub dim: usize,
    pub basis: Vec<CMatrix>,
}

/// Nullspace of `X ↦ (XA − AX, XB − BX)` on `n²`-dimensional coefficient
/// space. Both inputs are normalised so neither block dominates the
/// singular-value cut.
pub fn commutant_basis(a: &CMatrix, b: &CMatrix, tol: &Tolerances) -> Result<CommutantBasis> {
    a.check_dim(b)?;
    let n = a.n();
    let unit = |m: &CMatrix| {
        let s = m.norm_fro();
        if s > 0.0 {
            m.scale_re(1.0 / s)
        } else {
            *m
        }
    };
    let (a, b) = (unit(a), unit(b));
    let mut cols = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let x = CMatrix::unit(n, r, c);
            let mut col = (x * a - a * x).to_vec();
            col.extend((x * b - b * x).to_vec());
            cols.push(col);
        }
    }
    let system = Dense::from_columns(2 * n * n, cols);
    let basis: Vec<CMatrix> = nullspace(&system, tol.eps_rank)
        .into_iter()
        .map(|v| CMatrix::from_vec(n, &v))
        .collect();
    Ok(CommutantBasis {
        dim: basis.len(),
        basis,
    })
}

const RANDOM_COMBINATIONS: usize = 20;

/// `C^n` is an indecomposable `⟨A, B⟩`-module iff the commutant is local,
/// i.e. every commuting `X` is a scalar plus a nilpotent (no nontrivial
/// idempotent commutes with both).
pub fn is_indecomposable(a: &CMatrix, b: &CMatrix, tol: &Tolerances) -> Result<bool> {
    let cb = commutant_basis(a, b, tol)?;
    let n = a.n();
    if n == 1 || cb.dim <= 1 {
        return Ok(true);
    }
    // measured against ‖X‖: the trace-free part of a near-scalar X is noise
    let local = |x: &CMatrix| {
        let y = x.shift(-x.trace() / n as f64);
        y.pow(n as u32).norm_fro() <= tol.eps_entry * x.norm_fro().powi(n as i32)
    };
    if !cb.basis.iter().all(local) {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    for _ in 0..RANDOM_COMBINATIONS {
        let mut x = CMatrix::zeros(n);
        for e in &cb.basis {
            let w = CScalar::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            x += e.scale(w);
        }
        if !local(&x) {
            return Ok(false);
        }
    }
    Ok(true)
}
