use crate::eigen::{eigenvalues, Cluster};
use crate::matrix::{CMatrix, CScalar};
use crate::tolerance::Tolerances;

/// Jordan–Chevalley splitting `m = S + N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JCDecomp {
    pub semisimple: CMatrix,
    pub nilpotent: CMatrix,
}

/// Spectral projectors onto the generalised eigenspaces of `m`.
///
/// `base` indexes the cluster whose projector is not formed explicitly;
/// callers combine the others as `f(c_base)·I + Σ (f(c_k) − f(c_base))·P_k`.
/// With n ≤ 3 at most one cluster is repeated, and it is always chosen as the
/// base, so every explicit projector belongs to a simple eigenvalue and has
/// the Lagrange form `Π_{j≠k} ((m − c_j)/(c_k − c_j))^{m_j}`.
pub(crate) struct Projectors {
    pub clusters: Vec<Cluster>,
    pub base: usize,
    /// `(cluster index, projector)` for every cluster except `base`.
    pub others: Vec<(usize, CMatrix)>,
}

impl Projectors {
    pub fn new(m: &CMatrix, tol: &Tolerances) -> Self {
        let clusters = eigenvalues(m, tol).clusters();
        Self::from_clusters(m, clusters)
    }

    pub fn from_clusters(m: &CMatrix, clusters: Vec<Cluster>) -> Self {
        let n = m.n();
        let base = clusters
            .iter()
            .position(|c| c.multiplicity > 1)
            .unwrap_or_else(|| closest_cluster(&clusters));
        let others = (0..clusters.len())
            .filter(|&k| k != base)
            .map(|k| {
                let ck = clusters[k].value;
                let mut p = CMatrix::identity(n);
                for (j, cj) in clusters.iter().enumerate() {
                    if j == k {
                        continue;
                    }
                    let factor = m.shift(-cj.value).scale((ck - cj.value).inv());
                    for _ in 0..cj.multiplicity {
                        p = p * factor;
                    }
                }
                (k, p)
            })
            .collect();
        Projectors {
            clusters,
            base,
            others,
        }
    }

    pub fn base_value(&self) -> CScalar {
        self.clusters[self.base].value
    }

    /// `Σ_k g(c_k) P_k`, given `g(c_base)` and the differences
    /// `g(c_k) − g(c_base)`.
    pub fn combine(
        &self,
        n: usize,
        at_base: CScalar,
        diff: impl Fn(CScalar) -> CScalar,
    ) -> CMatrix {
        let mut acc = CMatrix::scalar(n, at_base);
        for (k, p) in &self.others {
            acc += p.scale(diff(self.clusters[*k].value));
        }
        acc
    }
}

/// Cluster nearest to some other cluster; projector errors scale with the
/// inverse gap, so the tightest pair should not both be formed explicitly.
fn closest_cluster(clusters: &[Cluster]) -> usize {
    let mut best = (f64::INFINITY, 0);
    for (i, a) in clusters.iter().enumerate() {
        for b in clusters.iter().skip(i + 1) {
            let d = (a.value - b.value).norm();
            if d < best.0 {
                best = (d, i);
            }
        }
    }
    best.1
}

pub fn jordan_chevalley(m: &CMatrix, tol: &Tolerances) -> JCDecomp {
    let proj = Projectors::new(m, tol);
    jordan_chevalley_from(m, &proj)
}

pub(crate) fn jordan_chevalley_from(m: &CMatrix, proj: &Projectors) -> JCDecomp {
    let cb = proj.base_value();
    let semisimple = proj.combine(m.n(), cb, |c| c - cb);
    JCDecomp {
        semisimple,
        nilpotent: *m - semisimple,
    }
}
