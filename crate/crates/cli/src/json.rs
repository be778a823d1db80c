//! JSON forms of matrices, reports and catalog entries.

use comexp::catalog::{ExpectedFacts, NamedPair};
use comexp::eigen::Spectrum;
use comexp::{
    AnalysisReport, CMatrix, CScalar, EigenPairing, ExceptionalSet, StarDecomp, Tolerances, MAX_DIM,
};
use serde::{Deserialize, Serialize};

/// `[re, im]`.
pub type ScalarJson = [f64; 2];
/// Rows of `[re, im]` entries.
pub type MatrixJson = Vec<Vec<ScalarJson>>;

/// Largest accepted magnitude of a real or imaginary part.
pub const MAX_ABS: f64 = 1e6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairJson {
    #[serde(rename = "A")]
    pub a: MatrixJson,
    #[serde(rename = "B")]
    pub b: MatrixJson,
}

pub fn scalar_json(z: CScalar) -> ScalarJson {
    [z.re, z.im]
}

pub fn scalar_from(s: ScalarJson) -> CScalar {
    CScalar::new(s[0], s[1])
}

pub fn matrix_json(m: &CMatrix) -> MatrixJson {
    m.rows()
        .into_iter()
        .map(|row| row.into_iter().map(scalar_json).collect())
        .collect()
}

/// Validates shape and values of a JSON matrix; `label` names it in errors.
pub fn parse_matrix(m: &MatrixJson, label: &str) -> Result<CMatrix, String> {
    let n = m.len();
    if n == 0 {
        return Err(format!("{label}: matrix is empty"));
    }
    if n > MAX_DIM {
        return Err(format!("{label}: dimension must be ≤ 3 (got {n})"));
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(format!(
                "{label}: matrix is not square (row {i} has {} entries, expected {n})",
                row.len()
            ));
        }
        for (j, v) in row.iter().enumerate() {
            if !(v[0].is_finite() && v[1].is_finite()) {
                return Err(format!("{label}: entry ({i}, {j}) is not finite"));
            }
            if v[0].abs() > MAX_ABS || v[1].abs() > MAX_ABS {
                return Err(format!(
                    "{label}: entry ({i}, {j}) exceeds {MAX_ABS:e} in magnitude"
                ));
            }
        }
        rows.push(row.iter().copied().map(scalar_from).collect::<Vec<_>>());
    }
    CMatrix::from_rows(&rows).map_err(|e| format!("{label}: {e}"))
}

pub fn parse_pair(p: &PairJson) -> Result<(CMatrix, CMatrix), String> {
    let a = parse_matrix(&p.a, "A")?;
    let b = parse_matrix(&p.b, "B")?;
    if a.n() != b.n() {
        return Err(format!("A is {0}×{0} but B is {1}×{1}", a.n(), b.n()));
    }
    Ok((a, b))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairingJson {
    pub lambda: Vec<ScalarJson>,
    pub mu: Vec<ScalarJson>,
    /// `lambda[i]` pairs with `mu[perm[i]]`.
    pub perm: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StarJson {
    pub sigma: ScalarJson,
    pub tau: ScalarJson,
    pub delta: MatrixJson,
    pub theta: MatrixJson,
    pub f: MatrixJson,
    pub g: MatrixJson,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TolerancesJson {
    pub eps_entry: f64,
    pub eps_eig: f64,
    pub eps_rank: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub dimension: usize,
    pub commute: bool,
    pub triple_equal: bool,
    pub triple_deviation: f64,
    pub has_property_l: bool,
    pub pairing: Option<PairingJson>,
    pub simultaneously_triangularizable: bool,
    pub indecomposable: bool,
    pub condition3: bool,
    pub exceptional: Vec<u64>,
    pub exceptional_complete: bool,
    pub candidates: Vec<u64>,
    pub sweep_bound: u64,
    pub star: Option<StarJson>,
    pub consistent: bool,
    pub diagnostics: Vec<String>,
    pub tolerances: TolerancesJson,
}

fn spectrum_json(s: &Spectrum) -> Vec<ScalarJson> {
    s.values.iter().copied().map(scalar_json).collect()
}

fn matrix_from(m: &MatrixJson) -> Result<CMatrix, String> {
    let rows: Vec<Vec<CScalar>> = m
        .iter()
        .map(|r| r.iter().copied().map(scalar_from).collect())
        .collect();
    CMatrix::from_rows(&rows).map_err(|e| e.to_string())
}

impl From<&AnalysisReport> for ReportJson {
    fn from(r: &AnalysisReport) -> Self {
        ReportJson {
            dimension: r.dimension,
            commute: r.commute,
            triple_equal: r.triple_equal,
            triple_deviation: r.triple_deviation,
            has_property_l: r.has_property_l,
            pairing: r.pairing.as_ref().map(|p| PairingJson {
                lambda: spectrum_json(&p.lambda),
                mu: spectrum_json(&p.mu),
                perm: p.perm.clone(),
            }),
            simultaneously_triangularizable: r.simultaneously_triangularizable,
            indecomposable: r.indecomposable,
            condition3: r.condition3,
            exceptional: r.exceptional.members.clone(),
            exceptional_complete: r.exceptional.complete,
            candidates: r.exceptional.candidates.clone(),
            sweep_bound: r.exceptional.sweep_bound,
            star: r.star.as_ref().map(|d| StarJson {
                sigma: scalar_json(d.sigma),
                tau: scalar_json(d.tau),
                delta: matrix_json(&d.delta),
                theta: matrix_json(&d.theta),
                f: matrix_json(&d.f),
                g: matrix_json(&d.g),
            }),
            consistent: r.consistent,
            diagnostics: r.notes.clone(),
            tolerances: TolerancesJson {
                eps_entry: r.tolerances.eps_entry,
                eps_eig: r.tolerances.eps_eig,
                eps_rank: r.tolerances.eps_rank,
            },
        }
    }
}

impl ReportJson {
    /// Inverse of the `From<&AnalysisReport>` conversion.
    pub fn to_report(&self) -> Result<AnalysisReport, String> {
        let spectrum = |v: &[ScalarJson]| Spectrum {
            values: v.iter().copied().map(scalar_from).collect(),
        };
        let star = match &self.star {
            Some(s) => Some(StarDecomp {
                sigma: scalar_from(s.sigma),
                tau: scalar_from(s.tau),
                delta: matrix_from(&s.delta)?,
                theta: matrix_from(&s.theta)?,
                f: matrix_from(&s.f)?,
                g: matrix_from(&s.g)?,
            }),
            None => None,
        };
        Ok(AnalysisReport {
            dimension: self.dimension,
            commute: self.commute,
            triple_equal: self.triple_equal,
            triple_deviation: self.triple_deviation,
            has_property_l: self.has_property_l,
            pairing: self.pairing.as_ref().map(|p| EigenPairing {
                lambda: spectrum(&p.lambda),
                mu: spectrum(&p.mu),
                perm: p.perm.clone(),
            }),
            simultaneously_triangularizable: self.simultaneously_triangularizable,
            indecomposable: self.indecomposable,
            condition3: self.condition3,
            exceptional: ExceptionalSet {
                members: self.exceptional.clone(),
                candidates: self.candidates.clone(),
                sweep_bound: self.sweep_bound,
                complete: self.exceptional_complete,
            },
            star,
            consistent: self.consistent,
            notes: self.diagnostics.clone(),
            tolerances: Tolerances {
                eps_entry: self.tolerances.eps_entry,
                eps_eig: self.tolerances.eps_eig,
                eps_rank: self.tolerances.eps_rank,
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpectedJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commute: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triple_equal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub has_property_l: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simultaneously_triangularizable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub indecomposable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition3: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional: Option<Vec<u64>>,
}

impl From<&ExpectedFacts> for ExpectedJson {
    fn from(e: &ExpectedFacts) -> Self {
        ExpectedJson {
            commute: e.commute,
            triple_equal: e.triple_equal,
            has_property_l: e.has_property_l,
            simultaneously_triangularizable: e.simultaneously_triangularizable,
            indecomposable: e.indecomposable,
            condition3: e.condition3,
            exceptional: e.exceptional.clone(),
        }
    }
}

/// Catalog entry; also valid as `analyze` input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedPairJson {
    pub name: String,
    #[serde(rename = "A")]
    pub a: MatrixJson,
    #[serde(rename = "B")]
    pub b: MatrixJson,
    pub expected: ExpectedJson,
}

impl From<&NamedPair> for NamedPairJson {
    fn from(p: &NamedPair) -> Self {
        NamedPairJson {
            name: p.name.to_string(),
            a: matrix_json(&p.a),
            b: matrix_json(&p.b),
            expected: (&p.expected).into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepLine {
    pub t: u64,
    pub deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelfTestJson {
    pub pass: usize,
    pub fail: usize,
    pub details: Vec<String>,
}
