//! Exceptional set of the exponential identity from the eigenvalue pairing.
//!
//! Under property L and `e^{A+B} = e^A e^B = e^B e^A`, the identity can only
//! fail at integers `t` where two paired eigenvalues `tλ_i + μ_i` of `tA + B`
//! collide. Those collision times are computed exactly from the pairing and
//! checked together with the sweep range.

use super::identity::{exp_triple_equal, record_at, ExceptionalSet};
use crate::error::{Error, Result};
use crate::matfun::expm;
use crate::matrix::CMatrix;
use crate::spectral::{verify_pairing, EigenPairing};
use crate::tolerance::Tolerances;

/// Collisions farther out than this are not representable reliably.
const MAX_CANDIDATE: f64 = 1e7;

/// Positive integers `t` with `tλ_i + μ_i = tλ_j + μ_j` for some `i ≠ j`
/// with `λ_i ≠ λ_j`, and whether some pair `(λ, μ)` occurs twice.
pub fn collision_candidates(pairing: &EigenPairing, tol: &Tolerances) -> (Vec<u64>, bool) {
    let pairs = pairing.pairs();
    let mut out = Vec::new();
    let mut repeated = false;
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (li, mi) = pairs[i];
            let (lj, mj) = pairs[j];
            let dl = li - lj;
            if dl.norm() <= tol.eps_eig * (1.0 + li.norm().max(lj.norm())) {
                // equal λ: the eigenvalues never meet, or meet for every t
                if (mi - mj).norm() <= tol.eps_eig * (1.0 + mi.norm().max(mj.norm())) {
                    repeated = true;
                }
                continue;
            }
            let t = (mj - mi) / dl;
            let slack = tol.eps_eig * (1.0 + t.norm());
            let k = t.re.round();
            if t.im.abs() <= slack
                && (t.re - k).abs() <= slack
                && (1.0..=MAX_CANDIDATE).contains(&k)
            {
                out.push(k as u64);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    (out, repeated)
}

/// Exceptional set for a pair satisfying the theorem hypotheses.
///
/// Under the hypotheses the identity at `t` is equivalent to `e^{tΔ+Θ} = I`
/// for the semisimple parts of property (*), i.e. to `tΔ + Θ` being
/// diagonalizable. An eigenvalue pair that coincides for every `t` keeps
/// `tΔ + Θ` diagonalizable either for all `t` or for at most finitely many,
/// and the latter contradicts the hypotheses; so only collision times can
/// fail. The set is certified complete when the hypotheses verify and every
/// observed failure is a collision time.
///
/// Fails with [`Error::Precondition`] when the pairing does not satisfy the
/// pencil identity or the exponential identity fails at `t = 1`.
pub fn exceptional_set_solver(
    a: &CMatrix,
    b: &CMatrix,
    pairing: &EigenPairing,
    t_max: u64,
    tol: &Tolerances,
) -> Result<ExceptionalSet> {
    a.check_dim(b)?;
    if t_max < 1 {
        return Err(Error::Precondition("t_max must be at least 1".into()));
    }
    if !verify_pairing(a, b, pairing, tol)? {
        return Err(Error::Precondition(
            "pairing does not satisfy the pencil identity".into(),
        ));
    }
    if !exp_triple_equal(a, b, tol)? {
        return Err(Error::Precondition(
            "exp(A+B), exp(A)exp(B), exp(B)exp(A) differ".into(),
        ));
    }
    let (candidates, _) = collision_candidates(pairing, tol);
    let mut checked: Vec<u64> = (1..=t_max).chain(candidates.iter().copied()).collect();
    checked.sort_unstable();
    checked.dedup();

    let eb = expm(b);
    let members: Vec<u64> = checked
        .into_iter()
        .filter(|&t| !record_at(a, b, &eb, t, tol).pass)
        .collect();
    let complete = members.iter().all(|t| candidates.binary_search(t).is_ok());
    Ok(ExceptionalSet {
        members,
        candidates,
        sweep_bound: t_max,
        complete,
    })
}
