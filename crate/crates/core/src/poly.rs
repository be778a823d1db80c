//! Characteristic polynomials and closed-form roots of degree ≤ 3.

use crate::matrix::{CMatrix, CScalar, ONE, ZERO};

/// Monic characteristic polynomial `det(zI − M)`.
///
/// `coeffs[k]` multiplies `z^k`; the last coefficient is always one.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPoly {
    pub coeffs: Vec<CScalar>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: CScalar) -> CScalar {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    pub fn derivative_eval(&self, z: CScalar) -> CScalar {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(ZERO, |acc, (k, &c)| acc * z + c * k as f64)
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[CScalar]) -> Self {
        let mut coeffs = vec![ONE];
        for &r in roots {
            let mut next = vec![ZERO; coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        CharPoly { coeffs }
    }
}

pub fn char_poly(m: &CMatrix) -> CharPoly {
    let coeffs = match m.n() {
        1 => vec![-m.trace(), ONE],
        2 => vec![m.det(), -m.trace(), ONE],
        _ => vec![-m.det(), m.principal_minor_sum(), -m.trace(), ONE],
    };
    CharPoly { coeffs }
}

/// Roots of `z² + b z + c`, computed without cancellation.
pub(crate) fn quadratic_roots(b: CScalar, c: CScalar) -> [CScalar; 2] {
    let disc = (b * b - c * 4.0).sqrt();
    // pick the square root aligned with b so that b + s does not cancel
    let s = if (b.conj() * disc).re >= 0.0 {
        disc
    } else {
        -disc
    };
    let q = -(b + s) * 0.5;
    if q == ZERO {
        return [ZERO, ZERO];
    }
    [q, c / q]
}

/// Roots of the depressed cubic `z³ + p z + q`.
///
/// Cardano gives the root of largest modulus, which is polished with a Newton
/// step and then deflated; the remaining pair comes from the stable
/// quadratic formula with the product-of-roots identity.
pub(crate) fn depressed_cubic_roots(p: CScalar, q: CScalar) -> [CScalar; 3] {
    if p == ZERO && q == ZERO {
        return [ZERO; 3];
    }
    let half_q = q * 0.5;
    let disc = (half_q * half_q + p * p * p / 27.0).sqrt();
    let w1 = -half_q + disc;
    let w2 = -half_q - disc;
    let w = if w1.norm() >= w2.norm() { w1 } else { w2 };
    let u = w.cbrt();
    let omega = CScalar::new(-0.5, 3f64.sqrt() * 0.5);
    let mut candidates = [ZERO; 3];
    let mut uk = u;
    for cand in candidates.iter_mut() {
        *cand = if uk == ZERO {
            ZERO
        } else {
            uk - p / (uk * 3.0)
        };
        uk *= omega;
    }
    let mut r1 = candidates
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(ZERO);

    let f = |z: CScalar| (z * z + p) * z + q;
    let df = |z: CScalar| z * z * 3.0 + p;
    for _ in 0..2 {
        let d = df(r1);
        if d.norm() <= f64::EPSILON * (r1.norm_sqr() + p.norm()) {
            break;
        }
        let step = f(r1) / d;
        if !(step.re.is_finite() && step.im.is_finite()) {
            break;
        }
        let next = r1 - step;
        if f(next).norm() >= f(r1).norm() {
            break;
        }
        r1 = next;
    }
    if r1 == ZERO {
        return [ZERO; 3];
    }
    // z³ + pz + q = (z − r1)(z² + r1 z + c), c = −q / r1
    let [r2, r3] = quadratic_roots(r1, -q / r1);
    [r1, r2, r3]
}
