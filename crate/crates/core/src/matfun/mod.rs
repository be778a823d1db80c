//! Matrix functions: exponential, principal logarithm, Jordan–Chevalley and
//! the logarithmic splitting.

pub mod expm;
pub mod jordan;
pub mod logm;
pub mod split;

pub use expm::{expm, expm_jc, expm_series, relative_gap};
pub use jordan::{jordan_chevalley, JCDecomp};
pub use logm::{logm_principal, principal_log};
pub use split::{log_split, poly_in_matrix_witness, LogSplit};
