use crate::error::Result;
use crate::matrix::CMatrix;
use crate::tolerance::Tolerances;

/// Simultaneous triangularizability through McCoy's criterion.
///
/// `A, B` are ST iff `p(A, B)·[A, B]` is nilpotent for every noncommutative
/// polynomial `p`. The two-sided ideal generated by `C = [A, B]` is spanned
/// by `u C v` for words `u, v`, is closed under products, and so consists of
/// nilpotents iff every element has zero trace; since
/// `tr(u C v) = tr(v u C)` this reduces to `tr(w C) = 0` for all words `w`.
/// Words up to length `2n` span the generated algebra for n ≤ 3.
pub fn is_st_heuristic(a: &CMatrix, b: &CMatrix, tol: &Tolerances) -> Result<bool> {
    a.check_dim(b)?;
    let n = a.n();
    let normalise = |m: &CMatrix| {
        let s = m.norm_fro();
        if s > 0.0 {
            m.scale_re(1.0 / s)
        } else {
            *m
        }
    };
    let (a, b) = (normalise(a), normalise(b));
    let comm = a * b - b * a;
    let cn = comm.norm_fro();
    if cn <= tol.eps_entry {
        return Ok(true);
    }
    let mut layer = vec![CMatrix::identity(n)];
    for depth in 0..=2 * n {
        for w in &layer {
            let t = (*w * comm).trace();
            if t.norm() > tol.eps_entry * (1.0 + w.norm_fro() * cn) {
                return Ok(false);
            }
        }
        if depth == 2 * n {
            break;
        }
        layer = layer.iter().flat_map(|w| [*w * a, *w * b]).collect();
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{tu_a, tu_b};
    use crate::matrix::CScalar;

    #[test]
    fn tu_pair_is_not_st() {
        assert!(!is_st_heuristic(&tu_a(), &tu_b(), &Tolerances::default()).unwrap());
    }

    #[test]
    fn upper_triangular_pair_is_st() {
        let a = CMatrix::from_real(&[[1.0, 2.0, 3.0], [0.0, 4.0, 5.0], [0.0, 0.0, 6.0]]);
        let b = CMatrix::from_real(&[[-1.0, 0.5, 0.0], [0.0, 2.0, -7.0], [0.0, 0.0, 1.0]]);
        assert!(is_st_heuristic(&a, &b, &Tolerances::default()).unwrap());
    }

    #[test]
    fn polynomial_pair_is_st() {
        let a = CMatrix::from_rows(&[
            vec![CScalar::new(0.3, 0.1), CScalar::new(1.0, 0.0)],
            vec![CScalar::new(-0.7, 0.2), CScalar::new(0.0, 1.0)],
        ])
        .unwrap();
        let b = (a * a).scale_re(2.0) + a.scale_re(-0.5) + CMatrix::identity(2);
        assert!(is_st_heuristic(&a, &b, &Tolerances::default()).unwrap());
    }

    #[test]
    fn generic_two_by_two_pairs_are_st_only_when_sharing_an_eigenvector() {
        // e1 is a common eigenvector
        let a = CMatrix::from_real(&[[1.0, 3.0], [0.0, 2.0]]);
        let b = CMatrix::from_real(&[[5.0, -1.0], [0.0, 0.0]]);
        assert!(is_st_heuristic(&a, &b, &Tolerances::default()).unwrap());
        let c = CMatrix::from_real(&[[0.0, 1.0], [1.0, 0.0]]);
        assert!(!is_st_heuristic(&a, &c, &Tolerances::default()).unwrap());
    }
}
