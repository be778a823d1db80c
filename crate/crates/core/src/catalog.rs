//! Named example pairs with their known facts.

use crate::matrix::{CMatrix, CScalar, TWO_PI_I};
use std::f64::consts::PI;

/// Facts asserted for a catalog pair; `None` means not asserted.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExpectedFacts {
    pub commute: Option<bool>,
    pub triple_equal: Option<bool>,
    pub has_property_l: Option<bool>,
    pub simultaneously_triangularizable: Option<bool>,
    pub indecomposable: Option<bool>,
    pub condition3: Option<bool>,
    pub exceptional: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NamedPair {
    pub name: &'static str,
    pub a: CMatrix,
    pub b: CMatrix,
    pub expected: ExpectedFacts,
}

fn int_matrix(rows: [[f64; 3]; 3]) -> CMatrix {
    CMatrix::from_real(&rows).scale(TWO_PI_I)
}

/// `2iπ · diag(1, 2, 0)`.
pub fn tu_a() -> CMatrix {
    int_matrix([[1.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 0.0]])
}

/// `2iπ · [[2, 1, 1], [1, 3, −2], [1, 1, 0]]`.
pub fn tu_b() -> CMatrix {
    int_matrix([[2.0, 1.0, 1.0], [1.0, 3.0, -2.0], [1.0, 1.0, 0.0]])
}

/// `(iπ · diag(1, −1), π · [[−11i, 6], [16, 11i]])`: both exponentials and
/// the exponential of the sum are `±I`, yet the pencil has no linear
/// eigenvalue pairing.
pub fn remark_pair() -> (CMatrix, CMatrix) {
    let i = CScalar::new(0.0, 1.0);
    let a = CMatrix::diag(&[i * PI, -i * PI]);
    let b = CMatrix::from_rows(&[
        [i * (-11.0 * PI), CScalar::new(6.0 * PI, 0.0)],
        [CScalar::new(16.0 * PI, 0.0), i * (11.0 * PI)],
    ])
    .expect("2×2 literal");
    (a, b)
}

/// `I + E12 + E23`; its inverse is `I − E12 − E23 + E13`.
fn unipotent() -> CMatrix {
    CMatrix::from_real(&[[1.0, 1.0, 0.0], [0.0, 1.0, 1.0], [0.0, 0.0, 1.0]])
}

pub fn catalog() -> Vec<NamedPair> {
    let (ra, rb) = remark_pair();
    let p = unipotent();
    let shift = CScalar::new(0.25, 0.5);
    vec![
        NamedPair {
            name: "tu",
            a: tu_a(),
            b: tu_b(),
            expected: ExpectedFacts {
                commute: Some(false),
                triple_equal: Some(true),
                has_property_l: Some(true),
                simultaneously_triangularizable: Some(false),
                indecomposable: Some(true),
                condition3: Some(true),
                exceptional: Some(vec![]),
            },
        },
        NamedPair {
            name: "tu-scaled",
            a: tu_a(),
            b: tu_b() * -2.0,
            expected: ExpectedFacts {
                triple_equal: Some(true),
                has_property_l: Some(true),
                condition3: Some(true),
                exceptional: Some(vec![2, 3, 4]),
                ..Default::default()
            },
        },
        NamedPair {
            name: "dim2-remark",
            a: ra,
            b: rb,
            expected: ExpectedFacts {
                commute: Some(false),
                triple_equal: Some(true),
                has_property_l: Some(false),
                condition3: Some(false),
                ..Default::default()
            },
        },
        NamedPair {
            name: "tu-shifted",
            a: tu_a().shift(shift),
            b: tu_b(),
            expected: ExpectedFacts {
                commute: Some(false),
                triple_equal: Some(true),
                has_property_l: Some(true),
                indecomposable: Some(true),
                condition3: Some(true),
                exceptional: Some(vec![]),
                ..Default::default()
            },
        },
        NamedPair {
            name: "tu-conjugated",
            a: tu_a().conjugate_by(&p).expect("unipotent"),
            b: (tu_b() * -2.0).conjugate_by(&p).expect("unipotent"),
            expected: ExpectedFacts {
                triple_equal: Some(true),
                has_property_l: Some(true),
                condition3: Some(true),
                exceptional: Some(vec![2, 3, 4]),
                ..Default::default()
            },
        },
    ]
}

pub fn find(name: &str) -> Option<NamedPair> {
    catalog().into_iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let c = catalog();
        for (i, p) in c.iter().enumerate() {
            assert!(c.iter().skip(i + 1).all(|q| q.name != p.name));
        }
        assert!(find("tu").is_some() && find("nope").is_none());
    }

    #[test]
    fn unipotent_inverse() {
        let inv = CMatrix::from_real(&[[1.0, -1.0, 1.0], [0.0, 1.0, -1.0], [0.0, 0.0, 1.0]]);
        assert_eq!(unipotent() * inv, CMatrix::identity(3));
    }

    #[test]
    fn tu_entries_are_exact_multiples() {
        let a = find("tu").unwrap().a;
        assert_eq!(a.get(1, 1), CScalar::new(0.0, 4.0 * PI));
        assert_eq!(a.get(0, 0), CScalar::new(0.0, 2.0 * PI));
    }
}
