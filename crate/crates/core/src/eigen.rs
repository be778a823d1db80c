//! Closed-form eigenvalues and eigenvalue clustering.

use crate::matrix::{CMatrix, CScalar, ZERO};
use crate::poly::{depressed_cubic_roots, CharPoly};
use crate::tolerance::Tolerances;

/// Eigenvalues listed with multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<CScalar>,
}

/// A group of eigenvalues treated as one point of the spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    pub value: CScalar,
    pub multiplicity: usize,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Distinct points with multiplicities, in order of first appearance.
    ///
    /// Values are expected to be snapped already (as returned by
    /// [`eigenvalues`]); exact equality groups them.
    pub fn clusters(&self) -> Vec<Cluster> {
        let mut out: Vec<Cluster> = Vec::new();
        for &v in &self.values {
            match out.iter_mut().find(|c| c.value == v) {
                Some(c) => c.multiplicity += 1,
                None => out.push(Cluster {
                    value: v,
                    multiplicity: 1,
                }),
            }
        }
        out
    }

    /// Multiset equality under greedy nearest matching.
    pub fn matches(&self, other: &Spectrum, eps: f64) -> bool {
        multiset_close(&self.values, &other.values, eps)
    }
}

/// Greedy minimal-distance matching of two multisets; each pair must lie
/// within `eps · (1 + |a|)`.
pub fn multiset_close(a: &[CScalar], b: &[CScalar], eps: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            pairs.push(((x - y).norm(), i, j));
        }
    }
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut done = vec![false; a.len()];
    let mut matched = 0;
    for (d, i, j) in pairs {
        if done[i] || used[j] {
            continue;
        }
        if d > eps * (1.0 + a[i].norm()) {
            return false;
        }
        done[i] = true;
        used[j] = true;
        matched += 1;
    }
    matched == a.len()
}

fn is_triangular(m: &CMatrix) -> bool {
    let n = m.n();
    let lower_zero = (0..n).all(|i| (0..i).all(|j| m.get(i, j) == ZERO));
    let upper_zero = (0..n).all(|i| (i + 1..n).all(|j| m.get(i, j) == ZERO));
    lower_zero || upper_zero
}

/// Raw roots of the characteristic polynomial, before clustering.
///
/// The trace mean is removed first so the cubic is depressed and nearly
/// scalar matrices keep full relative accuracy in their trace-free part.
pub fn raw_eigenvalues(m: &CMatrix) -> Vec<CScalar> {
    let n = m.n();
    if is_triangular(m) {
        return (0..n).map(|i| m.get(i, i)).collect();
    }
    let mean = m.trace() / n as f64;
    let shifted = m.shift(-mean);
    let roots: Vec<CScalar> = match n {
        1 => vec![ZERO],
        2 => {
            let r = (-shifted.det()).sqrt();
            vec![r, -r]
        }
        _ => depressed_cubic_roots(shifted.principal_minor_sum(), -shifted.det()).to_vec(),
    };
    roots.into_iter().map(|r| r + mean).collect()
}

/// Groups raw roots into clusters and snaps each member to its cluster mean.
pub fn cluster_roots(roots: &[CScalar], m: &CMatrix, tol: &Tolerances) -> Vec<CScalar> {
    let n = roots.len();
    let mean = m.trace() / n as f64;
    let shifted = m.shift(-mean).norm_fro();
    let scale = 1.0 + m.norm_fro();
    let mut out = roots.to_vec();
    match n {
        2 => {
            if (roots[0] - roots[1]).norm() <= tol.cluster_radius(2, shifted, scale) {
                let c = (roots[0] + roots[1]) * 0.5;
                out = vec![c, c];
            }
        }
        3 => {
            let d = |i: usize, j: usize| (roots[i] - roots[j]).norm();
            let diameter = d(0, 1).max(d(0, 2)).max(d(1, 2));
            if diameter <= tol.cluster_radius(3, shifted, scale) {
                let c = (roots[0] + roots[1] + roots[2]) / 3.0;
                out = vec![c, c, c];
            } else {
                let (i, j) = [(0, 1), (0, 2), (1, 2)]
                    .into_iter()
                    .min_by(|a, b| d(a.0, a.1).total_cmp(&d(b.0, b.1)))
                    .unwrap();
                if d(i, j) <= tol.cluster_radius(2, shifted, scale) {
                    let c = (roots[i] + roots[j]) * 0.5;
                    out[i] = c;
                    out[j] = c;
                }
            }
        }
        _ => {}
    }
    out
}

/// Eigenvalues with multiplicity; members of a numerical cluster are
/// replaced by the cluster mean.
pub fn eigenvalues(m: &CMatrix, tol: &Tolerances) -> Spectrum {
    let raw = raw_eigenvalues(m);
    Spectrum {
        values: cluster_roots(&raw, m, tol),
    }
}

/// Residual of the characteristic polynomial at each eigenvalue.
pub fn residuals(m: &CMatrix, spectrum: &Spectrum) -> Vec<f64> {
    let cp: CharPoly = crate::poly::char_poly(m);
    spectrum.values.iter().map(|&z| cp.eval(z).norm()).collect()
}
