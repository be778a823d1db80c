//! Seeded generators for structured pair families.
//!
//! Random complex entries are drawn uniformly from the unit disk and then
//! scaled; integer spectra are drawn from `[−5, 5]` (property (*) pairs use
//! `[−3, 3]`).

use crate::analysis::{star_verify, StarDecomp};
use crate::error::{Error, Result};
use crate::matrix::{CMatrix, CScalar, MAX_DIM, TWO_PI_I, ZERO};
use crate::svd::singular_values;
use crate::tolerance::Tolerances;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

const MAX_ROUNDS: usize = 1000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn unit_disk(rng: &mut impl Rng) -> CScalar {
    let r = rng.gen::<f64>().sqrt();
    CScalar::from_polar(r, rng.gen_range(0.0..TAU))
}

fn random_matrix(n: usize, scale: f64, rng: &mut impl Rng) -> CMatrix {
    let mut m = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, unit_disk(rng) * scale);
        }
    }
    m
}

fn random_upper(n: usize, scale: f64, rng: &mut impl Rng) -> CMatrix {
    let mut m = random_matrix(n, scale, rng);
    for i in 0..n {
        for j in 0..i {
            m.set(i, j, ZERO);
        }
    }
    m
}

/// `σ_max / σ_min` (infinite when singular).
pub fn condition_number(m: &CMatrix) -> f64 {
    let s = singular_values(m);
    let smin = s.last().copied().unwrap_or(0.0);
    if smin == 0.0 {
        f64::INFINITY
    } else {
        s[0] / smin
    }
}

/// Random similarity with condition number at most 20.
fn well_conditioned(n: usize, rng: &mut impl Rng) -> CMatrix {
    loop {
        let p = CMatrix::identity(n) + random_matrix(n, 1.0, rng);
        if condition_number(&p) <= 20.0 {
            return p;
        }
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_DIM {
        return Err(Error::InvalidDimension(n));
    }
    Ok(())
}

fn distinct_ints(n: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> Vec<i64> {
    let pool: Vec<i64> = (lo..=hi).collect();
    pool.choose_multiple(rng, n).copied().collect()
}

/// `P T₁ P⁻¹`, `P T₂ P⁻¹` with random upper-triangular `T₁`, `T₂` and
/// `cond(P) ≤ 20`.
pub fn gen_st_pair(n: usize, seed: u64) -> Result<(CMatrix, CMatrix)> {
    check_n(n, 2)?;
    let mut rng = rng(seed);
    let t1 = random_upper(n, 2.0, &mut rng);
    let t2 = random_upper(n, 2.0, &mut rng);
    let p = well_conditioned(n, &mut rng);
    Ok((t1.conjugate_by(&p)?, t2.conjugate_by(&p)?))
}

/// Diagonal `A = 2iπ·diag(a)` and upper-triangular `B` with diagonal
/// `2iπ·b`; `upper` fills the strict upper triangle row by row.
pub fn prop21_pair(a: &[i64], b: &[i64], upper: &[CScalar]) -> Result<(CMatrix, CMatrix)> {
    let n = a.len();
    check_n(n, 1)?;
    if b.len() != n || upper.len() != n * (n - 1) / 2 {
        return Err(Error::DimensionMismatch {
            left: n,
            right: b.len(),
        });
    }
    let am = CMatrix::diag(&a.iter().map(|&k| TWO_PI_I * k as f64).collect::<Vec<_>>());
    let mut bm = CMatrix::diag(&b.iter().map(|&k| TWO_PI_I * k as f64).collect::<Vec<_>>());
    let mut it = upper.iter();
    for i in 0..n {
        for j in i + 1..n {
            bm.set(i, j, *it.next().expect("length checked"));
        }
    }
    Ok((am, bm))
}

/// First `t ≥ 1` where `t a_i + b_i = t a_j + b_j`, if any.
fn integer_collision(a: &[i64], b: &[i64]) -> Option<i64> {
    let n = a.len();
    let mut best: Option<i64> = None;
    for i in 0..n {
        for j in i + 1..n {
            let (da, db) = (a[i] - a[j], b[j] - b[i]);
            if da != 0 && db % da == 0 && db / da >= 1 {
                let t = db / da;
                best = Some(best.map_or(t, |x| x.min(t)));
            }
        }
    }
    best
}

/// `A` diagonal with distinct spectrum in `2iπℤ`, `B` upper triangular with
/// distinct diagonal in `2iπℤ`, drawn so that the diagonals of `tA + B`
/// never meet for `t ∈ ℕ`; the exceptional set is then empty.
pub fn gen_prop21_pair(n: usize, seed: u64) -> Result<(CMatrix, CMatrix)> {
    check_n(n, 2)?;
    let mut rng = rng(seed);
    for _ in 0..MAX_ROUNDS {
        let a = distinct_ints(n, -5, 5, &mut rng);
        let b = distinct_ints(n, -5, 5, &mut rng);
        let upper: Vec<CScalar> = (0..n * (n - 1) / 2).map(|_| unit_disk(&mut rng)).collect();
        if integer_collision(&a, &b).is_none() {
            return prop21_pair(&a, &b, &upper);
        }
    }
    Err(Error::GenerationFailed(MAX_ROUNDS))
}

/// Property (*) pair `A = σI + Δ + F`, `B = τI + Θ + G` with its
/// decomposition.
///
/// Reachable family: `Δ = 2iπ·diag(k, k, m)`, `k ≠ m`; `F = f·E12`,
/// `G = g·E12`; `Θ = 2iπ·diag(p, p, q)` plus one coupling entry in position
/// (1, 3) or (3, 2); everything conjugated by `P₁ ⊕ 1`. `Δ + Θ` must stay
/// diagonalizable, so `k + p ≠ m + q`. Other indecomposable shapes are not
/// produced.
pub fn gen_star_pair(seed: u64) -> Result<(CMatrix, CMatrix, StarDecomp)> {
    let mut rng = rng(seed);
    let tol = Tolerances::default();
    for _ in 0..MAX_ROUNDS {
        let km = distinct_ints(2, -3, 3, &mut rng);
        let pq = distinct_ints(2, -3, 3, &mut rng);
        let (k, m, p, q) = (km[0], km[1], pq[0], pq[1]);
        let coupling = unit_disk(&mut rng) * 2.0;
        let f = unit_disk(&mut rng) * 1.5;
        let g = if rng.gen_bool(0.25) {
            ZERO
        } else {
            unit_disk(&mut rng)
        };
        let column = rng.gen_bool(0.5);
        let sigma = CScalar::new(rng.gen_range(-0.3..0.3), rng.gen_range(-3.0..3.0));
        let tau = CScalar::new(rng.gen_range(-0.3..0.3), rng.gen_range(-3.0..3.0));
        let p1 = well_conditioned(2, &mut rng);
        if k + p == m + q || coupling.norm() < 0.1 || f.norm() < 0.1 {
            continue;
        }

        let two_pi = |x: i64| TWO_PI_I * x as f64;
        let delta = CMatrix::diag(&[two_pi(k), two_pi(k), two_pi(m)]);
        let mut theta = CMatrix::diag(&[two_pi(p), two_pi(p), two_pi(q)]);
        if column {
            theta.set(0, 2, coupling);
        } else {
            theta.set(2, 1, coupling);
        }
        let mut pm = CMatrix::identity(3);
        for i in 0..2 {
            for j in 0..2 {
                pm.set(i, j, p1.get(i, j));
            }
        }
        let conj = |x: CMatrix| x.conjugate_by(&pm);
        let d = StarDecomp {
            sigma,
            tau,
            delta: conj(delta)?,
            theta: conj(theta)?,
            f: conj(CMatrix::unit(3, 0, 1).scale(f))?,
            g: conj(CMatrix::unit(3, 0, 1).scale(g))?,
        };
        let (a, b) = d.reconstruct();
        if let Ok(true) = star_verify(&d, &a, &b, &tol) {
            return Ok((a, b, d));
        }
    }
    Err(Error::GenerationFailed(MAX_ROUNDS))
}

/// `(X, p(X))` for random `X` and a random cubic `p`.
pub fn gen_commuting_pair(n: usize, seed: u64) -> Result<(CMatrix, CMatrix)> {
    check_n(n, 1)?;
    let mut rng = rng(seed);
    let x = random_matrix(n, 1.0, &mut rng);
    let coeffs: Vec<CScalar> = (0..4).map(|_| unit_disk(&mut rng) * 0.5).collect();
    let mut y = CMatrix::zeros(n);
    for c in coeffs.iter().rev() {
        y = (y * x).shift(*c);
    }
    Ok((x, y))
}
