//! Property L: orderings `(λ_i)`, `(μ_i)` of the spectra of `A` and `B` with
//! `s(xA + yB) = (xλ_i + yμ_i)` for all `(x, y)`.
//!
//! Each coefficient of `det(zI − xA − yB) − Π(z − xλ_i − yμ_i)` is a
//! homogeneous polynomial of degree ≤ n in `(x, y)`; vanishing on the grid
//! `{1..n+1}²` forces it to vanish identically, so the grid test decides the
//! identity.

use crate::eigen::{eigenvalues, Spectrum};
use crate::error::Result;
use crate::matrix::{CMatrix, CScalar};
use crate::poly::{char_poly, CharPoly};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenPairing {
    pub lambda: Spectrum,
    pub mu: Spectrum,
    /// `lambda[i]` is paired with `mu[perm[i]]`.
    pub perm: Vec<usize>,
}

impl EigenPairing {
    /// `(λ_i, μ_{perm(i)})` pairs.
    pub fn pairs(&self) -> Vec<(CScalar, CScalar)> {
        self.perm
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.lambda.values[i], self.mu.values[j]))
            .collect()
    }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn pairing_holds(
    a: &CMatrix,
    b: &CMatrix,
    lambda: &[CScalar],
    mu: &[CScalar],
    perm: &[usize],
    tol: &Tolerances,
) -> bool {
    let n = a.n();
    let (na, nb) = (a.norm_fro(), b.norm_fro());
    for x in 1..=n + 1 {
        for y in 1..=n + 1 {
            let (x, y) = (x as f64, y as f64);
            let m = *a * x + *b * y;
            let roots: Vec<CScalar> = (0..n).map(|i| lambda[i] * x + mu[perm[i]] * y).collect();
            let lhs = char_poly(&m);
            let rhs = CharPoly::from_roots(&roots);
            let s = 1.0 + x * na + y * nb;
            for k in 0..n {
                let bound = tol.eps_eig * s.powi((n - k) as i32);
                if (lhs.coeffs[k] - rhs.coeffs[k]).norm() > bound {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks a given pairing against the pencil identity.
pub fn verify_pairing(
    a: &CMatrix,
    b: &CMatrix,
    p: &EigenPairing,
    tol: &Tolerances,
) -> Result<bool> {
    a.check_dim(b)?;
    Ok(p.perm.len() == a.n() && pairing_holds(a, b, &p.lambda.values, &p.mu.values, &p.perm, tol))
}

/// Searches the `n!` pairings in lexicographic order and returns the first
/// one satisfying the pencil identity.
pub fn property_l(a: &CMatrix, b: &CMatrix, tol: &Tolerances) -> Result<Option<EigenPairing>> {
    a.check_dim(b)?;
    let lambda = eigenvalues(a, tol);
    let mu = eigenvalues(b, tol);
    for perm in permutations(a.n()) {
        if pairing_holds(a, b, &lambda.values, &mu.values, &perm, tol) {
            return Ok(Some(EigenPairing { lambda, mu, perm }));
        }
    }
    Ok(None)
}
