//! Invariant suite over the catalog and seeded generator families.

use crate::analysis::{
    analyze, condition1_sweep, exp_triple_equal, star_decompose, star_verify, AnalysisReport,
};
use crate::catalog::{catalog, ExpectedFacts};
use crate::error::Result;
use crate::gen::{gen_commuting_pair, gen_prop21_pair, gen_st_pair, gen_star_pair};
use crate::spectral::property_l;
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SelfTestSummary {
    pub pass: usize,
    pub fail: usize,
    /// One line per violated invariant.
    pub details: Vec<String>,
}

impl SelfTestSummary {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
            self.details.push(what());
        }
    }

    fn run(&mut self, label: &str, r: Result<bool>) {
        match r {
            Ok(ok) => self.check(ok, || label.to_string()),
            Err(e) => self.check(false, || format!("{label}: {e}")),
        }
    }
}

/// Mismatches between `expected` and `r`, by field name.
pub fn expected_mismatches(expected: &ExpectedFacts, r: &AnalysisReport) -> Vec<&'static str> {
    let mut out = Vec::new();
    let flags = [
        ("commute", expected.commute, r.commute),
        ("triple_equal", expected.triple_equal, r.triple_equal),
        ("has_property_l", expected.has_property_l, r.has_property_l),
        (
            "simultaneously_triangularizable",
            expected.simultaneously_triangularizable,
            r.simultaneously_triangularizable,
        ),
        ("indecomposable", expected.indecomposable, r.indecomposable),
        ("condition3", expected.condition3, r.condition3),
    ];
    for (name, want, got) in flags {
        if want.is_some_and(|w| w != got) {
            out.push(name);
        }
    }
    if expected
        .exceptional
        .as_ref()
        .is_some_and(|u| *u != r.exceptional.members)
    {
        out.push("exceptional");
    }
    if !r.consistent {
        out.push("consistent");
    }
    out
}

fn analyzed(
    s: &mut SelfTestSummary,
    label: &str,
    r: Result<AnalysisReport>,
) -> Option<AnalysisReport> {
    match r {
        Ok(rep) => {
            s.check(rep.consistent, || {
                format!("{label}: inconsistent verdict {:?}", rep.notes)
            });
            Some(rep)
        }
        Err(e) => {
            s.check(false, || format!("{label}: {e}"));
            None
        }
    }
}

/// Runs every family for seeds `0..seeds` with sweeps up to `t_max`.
pub fn selftest(seeds: u64, t_max: u64, tol: &Tolerances) -> SelfTestSummary {
    let mut s = SelfTestSummary::default();
    for p in catalog() {
        if let Some(r) = analyzed(&mut s, p.name, analyze(&p.a, &p.b, t_max.max(4), tol)) {
            let bad = expected_mismatches(&p.expected, &r);
            s.check(bad.is_empty(), || format!("catalog {}: {bad:?}", p.name));
        }
    }
    for seed in 0..seeds {
        for n in 2..=3 {
            let label = format!("st n={n} seed={seed}");
            if let Ok((a, b)) = gen_st_pair(n, seed) {
                s.run(&label, property_l(&a, &b, tol).map(|p| p.is_some()));
                analyzed(&mut s, &label, analyze(&a, &b, t_max, tol));
            } else {
                s.check(false, || format!("{label}: generation failed"));
            }

            let label = format!("prop21 n={n} seed={seed}");
            match gen_prop21_pair(n, seed) {
                Ok((a, b)) => {
                    if let Some(r) = analyzed(&mut s, &label, analyze(&a, &b, t_max, tol)) {
                        s.check(r.condition3 && r.exceptional.members.is_empty(), || {
                            format!(
                                "{label}: condition3={} U={:?}",
                                r.condition3, r.exceptional.members
                            )
                        });
                    }
                }
                Err(e) => s.check(false, || format!("{label}: {e}")),
            }
        }
        for n in 1..=3 {
            let label = format!("commuting n={n} seed={seed}");
            match gen_commuting_pair(n, seed) {
                Ok((a, b)) => {
                    s.run(&label, exp_triple_equal(&a, &b, tol));
                    s.run(&label, property_l(&a, &b, tol).map(|p| p.is_some()));
                    s.run(
                        &label,
                        condition1_sweep(&a, &b, t_max, tol).map(|u| u.members.is_empty()),
                    );
                }
                Err(e) => s.check(false, || format!("{label}: {e}")),
            }
        }
        let label = format!("star seed={seed}");
        match gen_star_pair(seed) {
            Ok((a, b, d)) => {
                s.run(&format!("{label} verify"), star_verify(&d, &a, &b, tol));
                s.run(&format!("{label} identity"), exp_triple_equal(&a, &b, tol));
                let back = star_decompose(&a, &b, tol).map(|att| {
                    att.decomp.is_some_and(|e| {
                        let eps = 1e3 * tol.eps_entry;
                        e.f.approx_eq(&d.f, eps)
                            && e.g.approx_eq(&d.g, eps)
                            && e.delta.approx_eq(&d.delta, eps)
                            && e.theta.approx_eq(&d.theta, eps)
                    })
                });
                s.run(&format!("{label} round trip"), back);
                analyzed(&mut s, &label, analyze(&a, &b, t_max, tol));
            }
            Err(e) => s.check(false, || format!("{label}: {e}")),
        }
    }
    s
}
