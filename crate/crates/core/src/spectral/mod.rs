//! Spectral predicates, property L, simultaneous triangularization and the
//! commutant of a pair.

pub mod commutant;
pub mod property_l;
pub mod st;
pub mod twopi;

pub use commutant::{commutant_basis, is_indecomposable, CommutantBasis};
pub use property_l::{property_l, verify_pairing, EigenPairing};
pub use st::is_st_heuristic;
pub use twopi::{in_2pi_z, is_2pi_cf, nearest_multiple};
