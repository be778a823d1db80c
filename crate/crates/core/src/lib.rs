//! Commuting exponentials of complex matrices of dimension at most 3.
//!
//! Given a pair `(A, B)`, the crate decides whether
//! `e^{tA+B} = e^{tA} e^B = e^B e^{tA}` holds for all integers `t` outside a
//! finite set, computes that set, and produces the structural data behind
//! the verdict: eigenvalue pairings (property L), the principal-log
//! splitting, Jordan–Chevalley parts and the property (*) decomposition.
//!
//! ```
//! use comexp::{analyze, catalog, Tolerances};
//!
//! let pair = catalog::find("tu-scaled").unwrap();
//! let report = analyze(&pair.a, &pair.b, 50, &Tolerances::default()).unwrap();
//! assert!(report.condition3);
//! assert_eq!(report.exceptional.members, vec![2, 3, 4]);
//! ```

pub mod analysis;
pub mod catalog;
pub mod eigen;
pub mod error;
pub mod gen;
pub mod matfun;
pub mod matrix;
pub mod poly;
pub mod selftest;
pub mod spectral;
pub mod structure;
pub mod svd;
pub mod tolerance;

pub use analysis::{
    analyze, condition1_sweep, condition3_verdict, exceptional_set_solver, exp_triple_equal,
    star_decompose, star_verify, AnalysisReport, ExceptionalSet, StarDecomp, SweepRecord,
};
pub use catalog::{ExpectedFacts, NamedPair};
pub use eigen::{eigenvalues, Cluster, Spectrum};
pub use error::{Error, Result};
pub use matfun::{expm, jordan_chevalley, log_split, logm_principal, JCDecomp, LogSplit};
pub use matrix::{CMatrix, CScalar, MAX_DIM};
pub use poly::{char_poly, CharPoly};
pub use spectral::{is_indecomposable, is_st_heuristic, property_l, EigenPairing};
pub use structure::{is_diagonalizable, is_nilpotent};
pub use svd::rank_eps;
pub use tolerance::Tolerances;
