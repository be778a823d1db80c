//! The exponential identity `e^{tA+B} = e^{tA} e^B = e^B e^{tA}`.

use crate::error::{Error, Result};
use crate::matfun::expm;
use crate::matrix::CMatrix;
use crate::tolerance::Tolerances;

/// Largest pairwise Frobenius distance between `e^{a+b}`, `e^a e^b`, `e^b e^a`,
/// divided by the largest of their norms.
pub fn triple_deviation(a: &CMatrix, b: &CMatrix) -> Result<f64> {
    a.check_dim(b)?;
    Ok(deviation_from(&expm(&(*a + *b)), &expm(a), &expm(b)))
}

fn deviation_from(sum: &CMatrix, ea: &CMatrix, eb: &CMatrix) -> f64 {
    let ab = *ea * *eb;
    let ba = *eb * *ea;
    let scale = sum.norm_fro().max(ab.norm_fro()).max(ba.norm_fro());
    let d = (*sum - ab)
        .norm_fro()
        .max((*sum - ba).norm_fro())
        .max((ab - ba).norm_fro());
    d / scale
}

/// `AB = BA` up to `eps_entry` relative to `(1 + ‖A‖)(1 + ‖B‖)`.
pub fn commute(a: &CMatrix, b: &CMatrix, tol: &Tolerances) -> Result<bool> {
    let c = a.commutator(b)?;
    Ok(c.norm_max() <= tol.eps_entry * (1.0 + a.norm_max()) * (1.0 + b.norm_max()))
}

pub fn exp_triple_equal(a: &CMatrix, b: &CMatrix, tol: &Tolerances) -> Result<bool> {
    Ok(triple_deviation(a, b)? <= tol.eps_entry)
}

/// Outcome of the identity test at one integer `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub t: u64,
    pub deviation: f64,
    pub pass: bool,
}

/// Finite set of integers where the identity fails.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ExceptionalSet {
    /// Failing `t`, ascending.
    pub members: Vec<u64>,
    /// Collision times predicted from the eigenvalue pairing, ascending.
    pub candidates: Vec<u64>,
    pub sweep_bound: u64,
    /// No failure can occur outside the checked range and the candidates.
    pub complete: bool,
}

/// Tests the identity for one `t`, reusing `e^B`.
pub(crate) fn record_at(
    a: &CMatrix,
    b: &CMatrix,
    eb: &CMatrix,
    t: u64,
    tol: &Tolerances,
) -> SweepRecord {
    let ta = *a * t as f64;
    let deviation = deviation_from(&expm(&(ta + *b)), &expm(&ta), eb);
    SweepRecord {
        t,
        deviation,
        pass: deviation <= tol.eps_entry,
    }
}

/// Per-`t` records for `t ∈ [1, t_max]`, ordered by `t`.
pub fn sweep_records(
    a: &CMatrix,
    b: &CMatrix,
    t_max: u64,
    tol: &Tolerances,
) -> Result<Vec<SweepRecord>> {
    a.check_dim(b)?;
    if t_max < 1 {
        return Err(Error::Precondition("t_max must be at least 1".into()));
    }
    let eb = expm(b);
    Ok((1..=t_max).map(|t| record_at(a, b, &eb, t, tol)).collect())
}

/// Brute-force check of the identity on `[1, t_max]`; makes no claim past
/// `t_max`.
pub fn condition1_sweep(
    a: &CMatrix,
    b: &CMatrix,
    t_max: u64,
    tol: &Tolerances,
) -> Result<ExceptionalSet> {
    let records = sweep_records(a, b, t_max, tol)?;
    Ok(ExceptionalSet {
        members: records.iter().filter(|r| !r.pass).map(|r| r.t).collect(),
        candidates: Vec::new(),
        sweep_bound: t_max,
        complete: false,
    })
}
