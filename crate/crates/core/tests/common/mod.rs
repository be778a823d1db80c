#![allow(dead_code)]

use comexp::{CMatrix, CScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> CScalar {
    CScalar::new(re, im)
}

pub fn unit_disk(rng: &mut impl Rng) -> CScalar {
    CScalar::from_polar(rng.gen::<f64>().sqrt(), rng.gen_range(0.0..TAU))
}

pub fn random_matrix(n: usize, scale: f64, rng: &mut impl Rng) -> CMatrix {
    let mut m = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, unit_disk(rng) * scale);
        }
    }
    m
}

/// `I + R` with `R` small enough that `‖R‖₂ < 0.75`, so `cond ≤ 7`.
pub fn well_conditioned(n: usize, rng: &mut impl Rng) -> CMatrix {
    CMatrix::identity(n) + random_matrix(n, 0.25, rng)
}

pub fn rel_gap(a: &CMatrix, b: &CMatrix) -> f64 {
    (*a - *b).norm_max() / a.norm_max().max(b.norm_max()).max(1.0)
}

/// Coefficients (low to high) of `det(zI − m)` by Faddeev–LeVerrier.
pub fn leverrier(m: &CMatrix) -> Vec<CScalar> {
    let n = m.n();
    let mut coeffs = vec![c(0.0, 0.0); n + 1];
    coeffs[n] = c(1.0, 0.0);
    let mut mk = CMatrix::zeros(n);
    for k in 1..=n {
        mk = (*m * mk).shift(coeffs[n - k + 1]);
        let am = *m * mk;
        coeffs[n - k] = -am.trace() / k as f64;
    }
    coeffs
}

/// Roots of a monic polynomial (coefficients low to high) by Durand–Kerner.
pub fn durand_kerner(coeffs: &[CScalar]) -> Vec<CScalar> {
    let n = coeffs.len() - 1;
    let eval = |z: CScalar| coeffs.iter().rev().fold(c(0.0, 0.0), |acc, &k| acc * z + k);
    let radius = 1.0 + coeffs[..n].iter().map(|z| z.norm()).fold(0.0, f64::max);
    let seed = c(0.4, 0.9);
    let mut roots: Vec<CScalar> = (0..n).map(|k| seed.powu(k as u32) * radius).collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let mut den = c(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= roots[i] - roots[j];
                }
            }
            if den.norm() == 0.0 {
                den = c(1e-300, 0.0);
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved <= 1e-16 * radius {
            break;
        }
    }
    roots
}

/// Best matching distance between two multisets of size ≤ 3 (all
/// permutations).
pub fn multiset_distance(a: &[CScalar], b: &[CScalar]) -> f64 {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    let perms: Vec<Vec<usize>> = match n {
        1 => vec![vec![0]],
        2 => vec![vec![0, 1], vec![1, 0]],
        _ => vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ],
    };
    perms
        .iter()
        .map(|p| (0..n).map(|i| (a[i] - b[p[i]]).norm()).fold(0.0, f64::max))
        .fold(f64::INFINITY, f64::min)
}

/// Property L decided by sampling: some pairing of the oracle eigenvalues of
/// `A` and `B` matches the oracle eigenvalues of `xA + yB` on 25 random
/// complex `(x, y)`.
pub fn property_l_oracle(a: &CMatrix, b: &CMatrix, seed: u64) -> bool {
    let n = a.n();
    let la = durand_kerner(&leverrier(a));
    let mb = durand_kerner(&leverrier(b));
    let mut r = rng(seed);
    let samples: Vec<(CScalar, CScalar)> = (0..25)
        .map(|_| (unit_disk(&mut r) * 2.0, unit_disk(&mut r) * 2.0))
        .collect();
    let spectra: Vec<Vec<CScalar>> = samples
        .iter()
        .map(|&(x, y)| durand_kerner(&leverrier(&(a.scale(x) + b.scale(y)))))
        .collect();
    let perms: Vec<Vec<usize>> = match n {
        1 => vec![vec![0]],
        2 => vec![vec![0, 1], vec![1, 0]],
        _ => vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ],
    };
    perms.iter().any(|p| {
        samples.iter().zip(&spectra).all(|(&(x, y), s)| {
            let want: Vec<CScalar> = (0..n).map(|i| x * la[i] + y * mb[p[i]]).collect();
            let scale = 1.0 + x.norm() * a.norm_fro() + y.norm() * b.norm_fro();
            multiset_distance(&want, s) <= 1e-5 * scale
        })
    })
}
