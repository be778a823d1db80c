//! Principal matrix logarithm as a primary matrix function.

use super::jordan::{jordan_chevalley_from, Projectors};
use crate::error::{Error, Result};
use crate::matrix::{CMatrix, CScalar};
use crate::tolerance::Tolerances;
use std::f64::consts::PI;

/// Scalar logarithm with imaginary part in `(−π, π]`.
///
/// Points within `eps_eig` (in angle) of the negative real axis are put on
/// the `+π` side.
pub fn principal_log(z: CScalar, tol: &Tolerances) -> CScalar {
    if z.re < 0.0 && z.im.abs() <= tol.eps_eig * z.norm() {
        return CScalar::new(z.norm().ln(), PI);
    }
    z.ln()
}

/// Whether some repeated eigenvalue of `m` sits on the branch cut, where the
/// principal logarithm is discontinuous and its accuracy degrades.
pub fn near_branch_cut(m: &CMatrix, tol: &Tolerances) -> bool {
    crate::eigen::eigenvalues(m, tol)
        .clusters()
        .iter()
        .any(|c| {
            c.multiplicity > 1
                && c.value.re < 0.0
                && c.value.im.abs() <= tol.eps_eig * c.value.norm()
        })
}

/// Principal logarithm on the Jordan structure of `m`.
///
/// With `m = S + N` and `X = S⁻¹N` (nilpotent, `X³ = 0` for n ≤ 3),
/// `log m = log S + X − X²/2`, i.e. the values `log z`, `1/z` and
/// `−1/(2z²)` on each Jordan block.
pub fn logm_principal(m: &CMatrix, tol: &Tolerances) -> Result<CMatrix> {
    let n = m.n();
    if m.det() == CScalar::new(0.0, 0.0) {
        return Err(Error::Singular);
    }
    let proj = Projectors::new(m, tol);
    if proj
        .clusters
        .iter()
        .any(|c| c.value.norm() <= f64::MIN_POSITIVE)
    {
        return Err(Error::Singular);
    }
    let jc = jordan_chevalley_from(m, &proj);
    let cb = proj.base_value();
    let log_cb = principal_log(cb, tol);
    let log_s = proj.combine(n, log_cb, |c| principal_log(c, tol) - log_cb);
    let inv_cb = cb.inv();
    let s_inv = proj.combine(n, inv_cb, |c| c.inv() - inv_cb);
    let x = s_inv * jc.nilpotent;
    let out = log_s + x - (x * x).scale_re(0.5);
    if !out.is_finite() {
        return Err(Error::Singular);
    }
    Ok(out)
}
