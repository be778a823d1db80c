//! Property (*): `A = σI + Δ + F`, `B = τI + Θ + G` with nilpotent parts of
//! square zero and exponentials of the semisimple parts equal to `I`.

use super::identity::{commute, exp_triple_equal};
use crate::eigen::eigenvalues;
use crate::error::{Error, Result};
use crate::matfun::{expm, log_split};
use crate::matrix::{CMatrix, CScalar};
use crate::spectral::is_indecomposable;
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarDecomp {
    pub sigma: CScalar,
    pub tau: CScalar,
    pub delta: CMatrix,
    pub theta: CMatrix,
    pub f: CMatrix,
    pub g: CMatrix,
}

impl StarDecomp {
    /// `(σI + Δ + F, τI + Θ + G)`.
    pub fn reconstruct(&self) -> (CMatrix, CMatrix) {
        let n = self.delta.n();
        (
            CMatrix::scalar(n, self.sigma) + self.delta + self.f,
            CMatrix::scalar(n, self.tau) + self.theta + self.g,
        )
    }
}

/// Names of the invariants `d` violates against `(a, b)`; empty when all hold.
pub fn star_violations(d: &StarDecomp, a: &CMatrix, b: &CMatrix, tol: &Tolerances) -> Vec<String> {
    let n = a.n();
    let mut out = Vec::new();
    let parts = [&d.delta, &d.theta, &d.f, &d.g, b];
    if parts.iter().any(|m| m.n() != n) {
        out.push("dimension mismatch".to_string());
        return out;
    }
    let s = 1.0
        + [a, b, &d.delta, &d.theta, &d.f, &d.g]
            .iter()
            .map(|m| m.norm_max())
            .fold(0.0, f64::max);
    let eps = tol.eps_entry;
    let small = |m: CMatrix, scale: f64| m.norm_max() <= eps * scale;
    let id = CMatrix::identity(n);
    let (f, g, dl, th) = (d.f, d.g, d.delta, d.theta);

    let (ra, rb) = d.reconstruct();
    if !small(ra - *a, s) {
        out.push("A = σI + Δ + F".into());
    }
    if !small(rb - *b, s) {
        out.push("B = τI + Θ + G".into());
    }
    for (name, m) in [
        ("F² = 0", f * f),
        ("G² = 0", g * g),
        ("FG = 0", f * g),
        ("GF = 0", g * f),
    ] {
        if !small(m, s * s) {
            out.push(name.into());
        }
    }
    for (name, m) in [
        ("exp(Δ) = I", expm(&dl)),
        ("exp(Θ) = I", expm(&th)),
        ("exp(Δ + Θ) = I", expm(&(dl + th))),
    ] {
        if !small(m - id, s) {
            out.push(name.into());
        }
    }
    if !small((f * th - th * f) - (dl * g - g * dl), s * s) {
        out.push("[F, Θ] = [Δ, G]".into());
    }
    if !small(dl * f - f * dl, s * s) {
        out.push("ΔF = FΔ".into());
    }
    if !small(th * g - g * th, s * s) {
        out.push("ΘG = GΘ".into());
    }
    out
}

/// All decomposition invariants hold and, as a consequence, the exponential
/// identity holds for `(a, b)`.
pub fn star_verify(d: &StarDecomp, a: &CMatrix, b: &CMatrix, tol: &Tolerances) -> Result<bool> {
    a.check_dim(b)?;
    if a.n() != 3 {
        return Err(Error::Precondition(
            "property (*) is defined for 3×3 pairs".into(),
        ));
    }
    if !star_violations(d, a, b, tol).is_empty() {
        return Ok(false);
    }
    if !exp_triple_equal(a, b, tol)? {
        return Err(Error::Precondition(
            "decomposition verified but the exponential identity fails".into(),
        ));
    }
    Ok(true)
}

/// Result of [`star_decompose`]: the decomposition, or the reasons none was
/// found.
#[derive(Debug, Clone, PartialEq)]
pub struct StarAttempt {
    pub decomp: Option<StarDecomp>,
    pub notes: Vec<String>,
}

/// Splits one matrix as `σI + Δ + F`; `F + σI` is the principal logarithm
/// of `e^m`, and `σ` its repeated eigenvalue.
fn split_one(
    m: &CMatrix,
    label: &str,
    tol: &Tolerances,
    notes: &mut Vec<String>,
) -> Result<Option<(CScalar, CMatrix, CMatrix)>> {
    let ls = log_split(m, tol)?;
    if ls.near_branch_cut {
        notes.push(format!(
            "exp({label}) has a repeated eigenvalue on the branch cut"
        ));
    }
    let clusters = eigenvalues(&ls.f, tol).clusters();
    let Some(rep) = clusters.iter().find(|c| c.multiplicity >= 2) else {
        notes.push(format!(
            "log(exp({label})) has three distinct eigenvalues; no scalar part exists"
        ));
        return Ok(None);
    };
    let sigma = rep.value;
    let f = ls.f.shift(-sigma);
    let delta = *m - CMatrix::scalar(m.n(), sigma) - f;
    Ok(Some((sigma, delta, f)))
}

/// Property (*) decomposition of an indecomposable, non-commuting 3×3 pair
/// satisfying the exponential identity.
pub fn star_decompose(a: &CMatrix, b: &CMatrix, tol: &Tolerances) -> Result<StarAttempt> {
    a.check_dim(b)?;
    if a.n() != 3 {
        return Err(Error::Precondition(
            "property (*) is defined for 3×3 pairs".into(),
        ));
    }
    if !exp_triple_equal(a, b, tol)? {
        return Err(Error::Precondition("exponential identity fails".into()));
    }
    if commute(a, b, tol)? {
        return Err(Error::Precondition("the pair commutes".into()));
    }
    if !is_indecomposable(a, b, tol)? {
        return Err(Error::Precondition("the pair is decomposable".into()));
    }
    let mut notes = Vec::new();
    let sa = split_one(a, "A", tol, &mut notes)?;
    let sb = split_one(b, "B", tol, &mut notes)?;
    let (Some((sigma, delta, f)), Some((tau, theta, g))) = (sa, sb) else {
        return Ok(StarAttempt {
            decomp: None,
            notes,
        });
    };
    let d = StarDecomp {
        sigma,
        tau,
        delta,
        theta,
        f,
        g,
    };
    let violations = star_violations(&d, a, b, tol);
    if violations.is_empty() {
        Ok(StarAttempt {
            decomp: Some(d),
            notes,
        })
    } else {
        notes.extend(violations.into_iter().map(|v| format!("violated: {v}")));
        Ok(StarAttempt {
            decomp: None,
            notes,
        })
    }
}
