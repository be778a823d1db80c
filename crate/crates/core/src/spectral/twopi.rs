use std::f64::consts::PI;

use crate::eigen::Spectrum;
use crate::matrix::CScalar;
use crate::tolerance::Tolerances;

/// Nearest integer `k` with `z ≈ 2iπk`.
pub fn nearest_multiple(z: CScalar) -> i64 {
    (z.im / (2.0 * PI)).round() as i64
}

/// `z ∈ 2iπℤ` up to `eps_eig`.
pub fn in_2pi_z(z: CScalar, tol: &Tolerances) -> bool {
    let k = nearest_multiple(z);
    let target = CScalar::new(0.0, 2.0 * PI * k as f64);
    (z - target).norm() < tol.eps_eig
}

/// No two eigenvalues (distinct indices) differ by a nonzero multiple of
/// `2iπ`.
pub fn is_2pi_cf(s: &Spectrum, tol: &Tolerances) -> bool {
    let v = &s.values;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = v[i] - v[j];
            if in_2pi_z(d, tol) && nearest_multiple(d) != 0 {
                return false;
            }
        }
    }
    true
}
