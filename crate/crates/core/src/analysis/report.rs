//! Aggregated verdicts for one pair.

use super::identity::{commute, condition1_sweep, triple_deviation, ExceptionalSet};
use super::solver::exceptional_set_solver;
use super::star::{star_decompose, StarDecomp};
use crate::error::{Error, Result};
use crate::matrix::{CMatrix, MAX_DIM};
use crate::spectral::{is_indecomposable, is_st_heuristic, property_l, EigenPairing};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub dimension: usize,
    pub commute: bool,
    pub triple_equal: bool,
    /// Deviation behind `triple_equal`.
    pub triple_deviation: f64,
    pub has_property_l: bool,
    pub pairing: Option<EigenPairing>,
    pub simultaneously_triangularizable: bool,
    pub indecomposable: bool,
    pub condition3: bool,
    pub exceptional: ExceptionalSet,
    pub star: Option<StarDecomp>,
    /// The theorem verdict agrees with the sweep and solver evidence.
    pub consistent: bool,
    pub notes: Vec<String>,
    pub tolerances: Tolerances,
}

/// `e^{A+B} = e^A e^B = e^B e^A` and property L; by the dimension ≤ 3
/// theorems this is equivalent to the identity holding for all `t ∈ ℕ`
/// outside a finite set.
pub fn condition3_verdict(a: &CMatrix, b: &CMatrix, tol: &Tolerances) -> Result<bool> {
    a.check_dim(b)?;
    Ok(triple_deviation(a, b)? <= tol.eps_entry && property_l(a, b, tol)?.is_some())
}

pub fn analyze(a: &CMatrix, b: &CMatrix, t_max: u64, tol: &Tolerances) -> Result<AnalysisReport> {
    a.check_dim(b)?;
    if a.n() > MAX_DIM {
        return Err(Error::InvalidDimension(a.n()));
    }
    if t_max < 1 {
        return Err(Error::Precondition("t_max must be at least 1".into()));
    }
    let mut notes = Vec::new();
    let commute = commute(a, b, tol)?;
    let triple_deviation = triple_deviation(a, b)?;
    let triple_equal = triple_deviation <= tol.eps_entry;
    let pairing = property_l(a, b, tol)?;
    let has_property_l = pairing.is_some();
    let simultaneously_triangularizable = is_st_heuristic(a, b, tol)?;
    let indecomposable = is_indecomposable(a, b, tol)?;
    let condition3 = triple_equal && has_property_l;

    let sweep = condition1_sweep(a, b, t_max, tol)?;
    let mut consistent = true;
    let exceptional = match (&pairing, condition3) {
        (Some(p), true) => match exceptional_set_solver(a, b, p, t_max, tol) {
            Ok(u) => {
                let in_range: Vec<u64> =
                    u.members.iter().copied().filter(|&t| t <= t_max).collect();
                if in_range != sweep.members {
                    consistent = false;
                    notes.push(format!(
                        "solver failures {:?} differ from sweep failures {:?} on [1, {t_max}]",
                        in_range, sweep.members
                    ));
                }
                if !u.complete {
                    let outside: Vec<u64> = u
                        .members
                        .iter()
                        .copied()
                        .filter(|t| u.candidates.binary_search(t).is_err())
                        .collect();
                    consistent = false;
                    notes.push(format!(
                        "failures {outside:?} are not eigenvalue collisions"
                    ));
                }
                u
            }
            Err(e) => {
                consistent = false;
                notes.push(format!("exceptional-set solver rejected the pair: {e}"));
                sweep
            }
        },
        _ => {
            if !triple_equal {
                notes.push(format!(
                    "identity fails at t = 1 (deviation {triple_deviation:.3e})"
                ));
                if sweep.members.first() != Some(&1) {
                    consistent = false;
                    notes.push("sweep passes at t = 1 although the identity test failed".into());
                }
            } else if sweep.members.is_empty() {
                notes.push(format!(
                    "property L fails; no failure up to t = {t_max}, so failures lie further out"
                ));
            }
            if !has_property_l {
                notes.push("no eigenvalue ordering satisfies the pencil identity".into());
            }
            sweep
        }
    };
    if simultaneously_triangularizable && !has_property_l {
        consistent = false;
        notes.push("simultaneously triangularizable pair without property L".into());
    }

    let mut star = None;
    if a.n() == 3 && triple_equal && !commute && indecomposable {
        let attempt = star_decompose(a, b, tol)?;
        notes.extend(attempt.notes);
        star = attempt.decomp;
        if star.is_none() {
            notes.push("no property (*) decomposition found".into());
        }
    }

    Ok(AnalysisReport {
        dimension: a.n(),
        commute,
        triple_equal,
        triple_deviation,
        has_property_l,
        pairing,
        simultaneously_triangularizable,
        indecomposable,
        condition3,
        exceptional,
        star,
        consistent,
        notes,
        tolerances: *tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{remark_pair, tu_a, tu_b};

    #[test]
    fn tu_report() {
        let r = analyze(&tu_a(), &tu_b(), 50, &Tolerances::default()).unwrap();
        assert!(!r.commute && r.triple_equal && r.has_property_l && r.indecomposable);
        assert!(!r.simultaneously_triangularizable);
        assert!(r.condition3 && r.consistent);
        assert!(r.exceptional.members.is_empty() && r.exceptional.complete);
        assert!(r.star.is_some());
    }

    #[test]
    fn tu_scaled_report() {
        let r = analyze(&tu_a(), &(tu_b() * -2.0), 50, &Tolerances::default()).unwrap();
        assert!(r.condition3 && r.consistent);
        assert_eq!(r.exceptional.members, vec![2, 3, 4]);
    }

    #[test]
    fn remark_pair_report() {
        let (a, b) = remark_pair();
        let r = analyze(&a, &b, 50, &Tolerances::default()).unwrap();
        assert!(r.triple_equal && !r.has_property_l && !r.condition3 && r.consistent);
        assert!(r.exceptional.members.iter().any(|&t| t >= 2));
    }

    #[test]
    fn verdicts() {
        let tol = Tolerances::default();
        assert!(condition3_verdict(&tu_a(), &(tu_b() * -2.0), &tol).unwrap());
        let (a, b) = remark_pair();
        assert!(!condition3_verdict(&a, &b, &tol).unwrap());
        let z = CMatrix::zeros(2);
        assert!(condition3_verdict(&z, &z, &tol).unwrap());
    }

    #[test]
    fn deterministic() {
        let tol = Tolerances::default();
        let a = analyze(&tu_a(), &tu_b(), 20, &tol).unwrap();
        let b = analyze(&tu_a(), &tu_b(), 20, &tol).unwrap();
        assert_eq!(a, b);
    }
}
