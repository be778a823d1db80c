//! Matrix exponential.
//!
//! The primary route is Hermite interpolation of `exp` on the spectrum in
//! Newton form,
//!
//! `e^M = e^{λ₀} I + exp[λ₀,λ₁] (M − λ₀) + exp[λ₀,λ₁,λ₂] (M − λ₀)(M − λ₁)`,
//!
//! which coincides with the spectral formula `Σ e^{λ_k} P_k` for distinct
//! eigenvalues and with `e^S e^N` on Jordan blocks (confluent divided
//! differences are derivative values). Divided differences are evaluated in
//! cancellation-free form, so nearly coincident eigenvalues do not amplify
//! rounding the way explicit projectors do.

use super::jordan::{jordan_chevalley_from, Projectors};
use crate::eigen::eigenvalues;
use crate::matrix::{CMatrix, CScalar, ONE};
use crate::tolerance::Tolerances;

/// `e^z − 1` without cancellation for small `|z|`.
pub(crate) fn exp_m1(z: CScalar) -> CScalar {
    if z.norm() > 0.5 {
        return z.exp() - ONE;
    }
    let (x, y) = (z.re, z.im);
    let half_sin = (y * 0.5).sin();
    let re = x.exp_m1() * y.cos() - 2.0 * half_sin * half_sin;
    let im = x.exp() * y.sin();
    CScalar::new(re, im)
}

/// `sinh(z)/z`.
fn sinhc(z: CScalar) -> CScalar {
    if z.norm() < 1e-3 {
        let z2 = z * z;
        return ONE + z2 / 6.0 + z2 * z2 / 120.0;
    }
    z.sinh() / z
}

/// First divided difference of `exp`.
pub(crate) fn exp_dd1(a: CScalar, b: CScalar) -> CScalar {
    ((a + b) * 0.5).exp() * sinhc((b - a) * 0.5)
}

/// Second divided difference of `exp`.
pub(crate) fn exp_dd2(a: CScalar, b: CScalar, c: CScalar) -> CScalar {
    // put the widest pair at the ends
    let nodes = [a, b, c];
    let (i, k) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .max_by(|p, q| {
            (nodes[p.0] - nodes[p.1])
                .norm()
                .total_cmp(&(nodes[q.0] - nodes[q.1]).norm())
        })
        .unwrap();
    let j = 3 - i - k;
    let (x, y, z) = (nodes[i], nodes[j], nodes[k]);
    let width = (z - x).norm();
    if width >= 0.5 {
        return (exp_dd1(y, z) - exp_dd1(x, y)) / (z - x);
    }
    // all nodes within 0.5 of their mean: Σ h_k(shifted nodes) / (k + 2)!
    let mean = (x + y + z) / 3.0;
    let (u, v, w) = (x - mean, y - mean, z - mean);
    let (mut h1, mut h2, mut h3) = (ONE, ONE, ONE);
    let mut fact = 2.0;
    let mut sum = ONE / fact;
    // |h_k| ≤ C(k+2, 2)·0.5^k, so 24 terms are far below rounding
    for k in 1..24 {
        h1 *= u;
        h2 = h1 + v * h2;
        h3 = h2 + w * h3;
        fact *= (k + 2) as f64;
        sum += h3 / fact;
    }
    mean.exp() * sum
}

/// Hermite interpolant of `exp` on the given nodes, evaluated at `m`.
pub(crate) fn expm_on_nodes(m: &CMatrix, nodes: &[CScalar]) -> CMatrix {
    let n = m.n();
    let mut out = CMatrix::scalar(n, nodes[0].exp());
    if n >= 2 {
        let w1 = m.shift(-nodes[0]);
        out += w1.scale(exp_dd1(nodes[0], nodes[1]));
        if n == 3 {
            let w2 = w1 * m.shift(-nodes[1]);
            out += w2.scale(exp_dd2(nodes[0], nodes[1], nodes[2]));
        }
    }
    out
}

/// Matrix exponential.
pub fn expm(m: &CMatrix) -> CMatrix {
    let spectrum = eigenvalues(m, &Tolerances::default());
    expm_on_nodes(m, &spectrum.values)
}

/// Exponential through the Jordan–Chevalley splitting: `e^S · e^N` with
/// `e^S = Σ e^{c_k} P_k` and a terminating series for `e^N`.
pub fn expm_jc(m: &CMatrix, tol: &Tolerances) -> CMatrix {
    let n = m.n();
    let proj = Projectors::new(m, tol);
    let jc = jordan_chevalley_from(m, &proj);
    let cb = proj.base_value();
    let exp_s = proj.combine(n, ONE, |c| exp_m1(c - cb)).scale(cb.exp());
    let nil = jc.nilpotent;
    let exp_n = CMatrix::identity(n) + nil + (nil * nil).scale_re(0.5);
    exp_s * exp_n
}

/// Independent reference exponential: Taylor series with scaling and
/// squaring. Used only to cross-check the primary route.
pub fn expm_series(m: &CMatrix) -> CMatrix {
    let n = m.n();
    let norm = m.norm_inf();
    let s = if norm > 0.25 {
        (norm / 0.25).log2().ceil() as i32
    } else {
        0
    };
    let x = m.scale_re(0.5f64.powi(s));
    let mut term = CMatrix::identity(n);
    let mut sum = term;
    for k in 1..60 {
        term = (term * x).scale_re(1.0 / k as f64);
        sum += term;
        if term.norm_max() <= 1e-18 * sum.norm_max() {
            break;
        }
    }
    for _ in 0..s {
        sum = sum * sum;
    }
    sum
}

/// `‖e^M − target‖` relative to `max(‖e^M‖, ‖target‖, 1)`, in the max norm.
pub fn relative_gap(a: &CMatrix, b: &CMatrix) -> f64 {
    let scale = a.norm_max().max(b.norm_max()).max(1.0);
    (*a - *b).norm_max() / scale
}
