//! One-sided Jacobi SVD for small dense complex matrices.
//!
//! Used for numerical rank, nullspaces (commutant) and least squares
//! (polynomial membership). Sizes here never exceed 18 × 9.

use crate::matrix::{CMatrix, CScalar, ZERO};
use crate::tolerance::Tolerances;

/// Column-major dense complex matrix.
#[derive(Debug, Clone)]
pub struct Dense {
    pub rows: usize,
    pub cols: usize,
    /// `data[j]` is column `j`.
    pub data: Vec<Vec<CScalar>>,
}

impl Dense {
    pub fn from_columns(rows: usize, data: Vec<Vec<CScalar>>) -> Self {
        debug_assert!(data.iter().all(|c| c.len() == rows));
        Dense {
            rows,
            cols: data.len(),
            data,
        }
    }

    pub fn from_matrix(m: &CMatrix) -> Self {
        let n = m.n();
        let data = (0..n)
            .map(|j| (0..n).map(|i| m.get(i, j)).collect())
            .collect();
        Dense::from_columns(n, data)
    }
}

/// `A V = U Σ` with `V` unitary; columns of `U` for zero singular values are
/// left unnormalised (zero).
#[derive(Debug, Clone)]
pub struct Svd {
    pub sigma: Vec<f64>,
    pub u: Vec<Vec<CScalar>>,
    pub v: Vec<Vec<CScalar>>,
}

fn dot(a: &[CScalar], b: &[CScalar]) -> CScalar {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm_sqr(a: &[CScalar]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum()
}

/// Rotates columns `p`, `q` of `cols` by the complex Jacobi rotation.
fn rotate(cols: &mut [Vec<CScalar>], p: usize, q: usize, c: f64, s: f64, phase: CScalar) {
    let (lo, hi) = cols.split_at_mut(q);
    for (xp, xq) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
        let (a, b) = (*xp, *xq * phase);
        *xp = a * c - b * s;
        *xq = a * s + b * c;
    }
}

pub fn svd(a: &Dense) -> Svd {
    let k = a.cols;
    let mut w = a.data.clone();
    let mut v: Vec<Vec<CScalar>> = (0..k)
        .map(|j| {
            let mut e = vec![ZERO; k];
            e[j] = CScalar::new(1.0, 0.0);
            e
        })
        .collect();

    for _sweep in 0..80 {
        let mut rotated = false;
        for p in 0..k {
            for q in p + 1..k {
                let alpha = norm_sqr(&w[p]);
                let beta = norm_sqr(&w[q]);
                let gamma = dot(&w[p], &w[q]);
                let g = gamma.norm();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // bring the off-diagonal term to the positive real axis
                let phase = (gamma / g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate(&mut w, p, q, c, s, phase);
                rotate(&mut v, p, q, c, s, phase);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..k).collect();
    let sig: Vec<f64> = w.iter().map(|c| norm_sqr(c).sqrt()).collect();
    order.sort_by(|&i, &j| sig[j].total_cmp(&sig[i]));
    let sigma: Vec<f64> = order.iter().map(|&j| sig[j]).collect();
    let u = order
        .iter()
        .map(|&j| {
            if sig[j] > 0.0 {
                w[j].iter().map(|x| x / sig[j]).collect()
            } else {
                vec![ZERO; a.rows]
            }
        })
        .collect();
    let v = order.iter().map(|&j| v[j].clone()).collect();
    Svd { sigma, u, v }
}

pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    svd(&Dense::from_matrix(m)).sigma
}

/// Count of singular values above `eps_rank · max(σ_max, floor)`.
pub(crate) fn rank_with_floor(m: &CMatrix, floor: f64, tol: &Tolerances) -> usize {
    let s = singular_values(m);
    let smax = s.first().copied().unwrap_or(0.0);
    let cut = tol.eps_rank * smax.max(floor);
    if smax == 0.0 {
        return 0;
    }
    s.iter().filter(|&&x| x > cut).count()
}

/// Numerical rank: singular values above `eps_rank · σ_max`.
pub fn rank_eps(m: &CMatrix, tol: &Tolerances) -> usize {
    rank_with_floor(m, 0.0, tol)
}

/// Orthonormal basis of the numerical nullspace of `a`.
pub fn nullspace(a: &Dense, rel: f64) -> Vec<Vec<CScalar>> {
    let d = svd(a);
    let smax = d.sigma.first().copied().unwrap_or(0.0);
    d.sigma
        .iter()
        .zip(d.v)
        .filter(|(s, _)| **s <= rel * smax)
        .map(|(_, v)| v)
        .collect()
}

/// Minimum-norm least-squares solution of `a x ≈ b` with singular values
/// below `rel · σ_max` truncated. Returns `(x, ‖a x − b‖₂)`.
pub fn least_squares(a: &Dense, b: &[CScalar], rel: f64) -> (Vec<CScalar>, f64) {
    let d = svd(a);
    let smax = d.sigma.first().copied().unwrap_or(0.0);
    let mut x = vec![ZERO; a.cols];
    for ((s, u), v) in d.sigma.iter().zip(&d.u).zip(&d.v) {
        if *s <= rel * smax || *s == 0.0 {
            continue;
        }
        let coef = dot(u, b) / *s;
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi += vi * coef;
        }
    }
    let mut r = b.to_vec();
    for (j, col) in a.data.iter().enumerate() {
        for (ri, aij) in r.iter_mut().zip(col) {
            *ri -= aij * x[j];
        }
    }
    (x, norm_sqr(&r).sqrt())
}
