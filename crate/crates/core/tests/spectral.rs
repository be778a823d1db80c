mod common;

use comexp::catalog::{remark_pair, tu_a, tu_b};
use comexp::eigen::eigenvalues;
use comexp::gen::{gen_commuting_pair, gen_prop21_pair, gen_st_pair, gen_star_pair};
use comexp::spectral::{commutant_basis, is_2pi_cf, is_indecomposable, property_l, verify_pairing};
use comexp::{CMatrix, CScalar, Tolerances};
use common::*;

fn has_l(a: &CMatrix, b: &CMatrix) -> bool {
    property_l(a, b, &Tolerances::default()).unwrap().is_some()
}

/// Mixed corpus: structured families plus unstructured random pairs.
fn corpus(count: u64) -> Vec<(CMatrix, CMatrix)> {
    let mut out = vec![(tu_a(), tu_b()), (tu_a(), tu_b() * -2.0), remark_pair()];
    let mut r = rng(21);
    for seed in 0..count {
        let n = 2 + (seed % 2) as usize;
        out.push(match seed % 5 {
            0 => gen_st_pair(n, seed).unwrap(),
            1 => gen_prop21_pair(n, seed).unwrap(),
            2 => {
                let (a, b, _) = gen_star_pair(seed).unwrap();
                (a, b)
            }
            3 => gen_commuting_pair(n, seed).unwrap(),
            _ => (random_matrix(n, 2.0, &mut r), random_matrix(n, 2.0, &mut r)),
        });
    }
    out
}

#[test]
fn st_pairs_have_property_l() {
    for seed in 0..500 {
        let (a, b) = gen_st_pair(2 + (seed % 2) as usize, seed).unwrap();
        assert!(has_l(&a, &b), "seed {seed}");
    }
}

#[test]
fn returned_pairing_verifies() {
    let tol = Tolerances::default();
    for (a, b) in corpus(100) {
        if let Some(p) = property_l(&a, &b, &tol).unwrap() {
            assert!(verify_pairing(&a, &b, &p, &tol).unwrap());
        }
    }
}

#[test]
fn property_l_invariances() {
    let mut r = rng(22);
    for (a, b) in corpus(100) {
        let n = a.n();
        let verdict = has_l(&a, &b);
        let p = well_conditioned(n, &mut r);
        let (pa, pb) = (a.conjugate_by(&p).unwrap(), b.conjugate_by(&p).unwrap());
        assert_eq!(has_l(&pa, &pb), verdict, "similarity");
        assert_eq!(has_l(&b, &a), verdict, "swap");
        let s = CScalar::new(-1.5, 0.7);
        assert_eq!(has_l(&a.scale(s), &b), verdict, "scale a");
        assert_eq!(has_l(&a, &b.scale(s)), verdict, "scale b");
        assert_eq!(has_l(&a.shift(s), &b.shift(-s * 2.0)), verdict, "shift");
    }
}

#[test]
fn property_l_matches_sampling_oracle() {
    for (k, (a, b)) in corpus(200).into_iter().enumerate() {
        assert_eq!(
            has_l(&a, &b),
            property_l_oracle(&a, &b, k as u64),
            "pair {k}: {a:?} {b:?}"
        );
    }
}

#[test]
fn congruence_freeness_is_shift_invariant() {
    let tol = Tolerances::default();
    let mut r = rng(23);
    for k in 0..300 {
        let n = 2 + k % 2;
        let mut x = random_matrix(n, 1.0, &mut r);
        if k % 3 == 0 {
            // force two eigenvalues 2iπ apart
            let d = [
                c(0.3, 1.0),
                c(0.3, 1.0 + 2.0 * std::f64::consts::PI),
                c(1.0, 0.0),
            ];
            x = CMatrix::diag(&d[..n]);
        }
        let s = unit_disk(&mut r) * 3.0;
        assert_eq!(
            is_2pi_cf(&eigenvalues(&x, &tol), &tol),
            is_2pi_cf(&eigenvalues(&x.shift(s), &tol), &tol)
        );
    }
}

#[test]
fn commutant_elements_commute() {
    let tol = Tolerances::default();
    for (a, b) in corpus(150) {
        let cb = commutant_basis(&a, &b, &tol).unwrap();
        assert!(cb.dim >= 1);
        for x in cb.basis {
            assert!((x * a - a * x).norm_fro() < 1e-8 * (1.0 + a.norm_fro()) * x.norm_fro());
            assert!((x * b - b * x).norm_fro() < 1e-8 * (1.0 + b.norm_fro()) * x.norm_fro());
        }
    }
}

#[test]
fn indecomposable_implies_local_commutant() {
    let tol = Tolerances::default();
    let mut r = rng(24);
    for (a, b) in corpus(150) {
        if !is_indecomposable(&a, &b, &tol).unwrap() {
            continue;
        }
        let cb = commutant_basis(&a, &b, &tol).unwrap();
        for _ in 0..5 {
            let mut x = CMatrix::zeros(a.n());
            for e in &cb.basis {
                x += e.scale(unit_disk(&mut r));
            }
            let clusters = eigenvalues(
                &x,
                &Tolerances {
                    eps_eig: 1e-5,
                    ..tol
                },
            )
            .clusters();
            assert_eq!(clusters.len(), 1, "{x:?}");
        }
    }
}

#[test]
fn block_diagonal_pairs_are_decomposable() {
    let tol = Tolerances::default();
    let mut r = rng(25);
    for _ in 0..100 {
        let (mut a, mut b) = (random_matrix(3, 1.0, &mut r), random_matrix(3, 1.0, &mut r));
        for m in [&mut a, &mut b] {
            for i in 0..2 {
                m.set(i, 2, c(0.0, 0.0));
                m.set(2, i, c(0.0, 0.0));
            }
        }
        let p = well_conditioned(3, &mut r);
        let (a, b) = (a.conjugate_by(&p).unwrap(), b.conjugate_by(&p).unwrap());
        assert!(!is_indecomposable(&a, &b, &tol).unwrap());
    }
}
