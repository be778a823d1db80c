//! Fixed-capacity complex square matrices of dimension 1, 2 or 3.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type CScalar = Complex64;

pub const MAX_DIM: usize = 3;

pub(crate) const ZERO: CScalar = CScalar::new(0.0, 0.0);
pub(crate) const ONE: CScalar = CScalar::new(1.0, 0.0);

/// `2iπ`, the generator of the kernel of the scalar exponential.
pub const TWO_PI_I: CScalar = CScalar::new(0.0, 2.0 * std::f64::consts::PI);

/// Square complex matrix of dimension `n ∈ {1, 2, 3}` stored row-major.
///
/// Entries outside the leading `n × n` block are always zero.
#[derive(Clone, Copy, PartialEq)]
pub struct CMatrix {
    n: usize,
    e: [[CScalar; MAX_DIM]; MAX_DIM],
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&n), "dimension must be 1, 2 or 3");
        CMatrix {
            n,
            e: [[ZERO; MAX_DIM]; MAX_DIM],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, ONE)
    }

    pub fn scalar(n: usize, s: CScalar) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.e[i][i] = s;
        }
        m
    }

    pub fn diag(d: &[CScalar]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m.e[i][i] = v;
        }
        m
    }

    /// Matrix unit with a single one at `(i, j)` (zero-based).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m.e[i][j] = ONE;
        m
    }

    /// Builds a matrix from rows, validating shape and finiteness.
    pub fn from_rows<R: AsRef<[CScalar]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidDimension(n));
        }
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                m.e[i][j] = v;
            }
        }
        Ok(m)
    }

    /// Real-entry convenience constructor. Panics on malformed input.
    pub fn from_real<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<CScalar>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| CScalar::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows).expect("well-formed real matrix")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> CScalar {
        debug_assert!(i < self.n && j < self.n);
        self.e[i][j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: CScalar) {
        assert!(i < self.n && j < self.n, "index out of range");
        self.e[i][j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<CScalar>> {
        (0..self.n).map(|i| self.e[i][..self.n].to_vec()).collect()
    }

    /// Row-major flattening of the active block.
    pub fn to_vec(&self) -> Vec<CScalar> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.e[i][j])
            .collect()
    }

    pub fn from_vec(n: usize, v: &[CScalar]) -> Self {
        assert_eq!(v.len(), n * n);
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.e[i][j] = v[i * n + j];
            }
        }
        m
    }

    pub fn is_finite(&self) -> bool {
        self.entries().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    fn entries(&self) -> impl Iterator<Item = CScalar> + '_ {
        (0..self.n).flat_map(move |i| (0..self.n).map(move |j| self.e[i][j]))
    }

    pub fn map(&self, f: impl Fn(CScalar) -> CScalar) -> Self {
        let mut m = *self;
        for i in 0..self.n {
            for j in 0..self.n {
                m.e[i][j] = f(self.e[i][j]);
            }
        }
        m
    }

    pub fn scale(&self, s: CScalar) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    /// `self + s·I`.
    pub fn shift(&self, s: CScalar) -> Self {
        let mut m = *self;
        for i in 0..self.n {
            m.e[i][i] += s;
        }
        m
    }

    pub fn trace(&self) -> CScalar {
        (0..self.n).map(|i| self.e[i][i]).sum()
    }

    pub fn det(&self) -> CScalar {
        let e = &self.e;
        match self.n {
            1 => e[0][0],
            2 => e[0][0] * e[1][1] - e[0][1] * e[1][0],
            _ => {
                e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
                    - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
                    + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
            }
        }
    }

    /// Sum of the principal 2×2 minors.
    pub fn principal_minor_sum(&self) -> CScalar {
        let e = &self.e;
        let minor = |i: usize, j: usize| e[i][i] * e[j][j] - e[i][j] * e[j][i];
        match self.n {
            1 => ZERO,
            2 => minor(0, 1),
            _ => minor(0, 1) + minor(0, 2) + minor(1, 2),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.e[j][i] = self.e[i][j];
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        self.transpose().map(|z| z.conj())
    }

    pub fn norm_fro(&self) -> f64 {
        self.entries().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn norm_max(&self) -> f64 {
        self.entries().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.e[i][j].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.entries().all(|z| z == ZERO)
    }

    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        self.check_dim(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `ab − ba`.
    pub fn commutator(&self, other: &CMatrix) -> Result<CMatrix> {
        self.check_dim(other)?;
        Ok(self.mul_unchecked(other) - other.mul_unchecked(self))
    }

    pub(crate) fn check_dim(&self, other: &CMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    fn mul_unchecked(&self, other: &CMatrix) -> CMatrix {
        let n = self.n;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ZERO;
                for k in 0..n {
                    acc += self.e[i][k] * other.e[k][j];
                }
                m.e[i][j] = acc;
            }
        }
        m
    }

    pub fn pow(&self, k: u32) -> CMatrix {
        let mut acc = Self::identity(self.n);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Inverse via the adjugate. Fails on an exactly singular matrix or on
    /// non-finite output.
    pub fn inverse(&self) -> Result<CMatrix> {
        let d = self.det();
        if d == ZERO {
            return Err(Error::Singular);
        }
        let e = &self.e;
        let mut adj = Self::zeros(self.n);
        match self.n {
            1 => adj.e[0][0] = ONE,
            2 => {
                adj.e[0][0] = e[1][1];
                adj.e[0][1] = -e[0][1];
                adj.e[1][0] = -e[1][0];
                adj.e[1][1] = e[0][0];
            }
            _ => {
                for i in 0..3 {
                    for j in 0..3 {
                        let (r0, r1) = others(j);
                        let (c0, c1) = others(i);
                        let minor = e[r0][c0] * e[r1][c1] - e[r0][c1] * e[r1][c0];
                        let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
                        adj.e[i][j] = minor * sign;
                    }
                }
            }
        }
        let inv = adj.scale(d.inv());
        if !inv.is_finite() {
            return Err(Error::Singular);
        }
        Ok(inv)
    }

    /// `‖self − other‖_max ≤ eps · (1 + max(‖self‖_max, ‖other‖_max))`.
    pub fn approx_eq(&self, other: &CMatrix, eps: f64) -> bool {
        self.n == other.n
            && (*self - *other).norm_max() <= eps * (1.0 + self.norm_max().max(other.norm_max()))
    }

    /// `P · self · P⁻¹`.
    pub fn conjugate_by(&self, p: &CMatrix) -> Result<CMatrix> {
        self.check_dim(p)?;
        let pinv = p.inverse()?;
        Ok(*p * *self * pinv)
    }
}

fn others(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix({}×{}) [", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for j in 0..self.n {
                let z = self.e[i][j];
                write!(f, "{:>12.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Add for CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut m = self;
        m += rhs;
        m
    }
}

impl AddAssign for CMatrix {
    fn add_assign(&mut self, rhs: CMatrix) {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        for i in 0..self.n {
            for j in 0..self.n {
                self.e[i][j] += rhs.e[i][j];
            }
        }
    }
}

impl Sub for CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: CMatrix) -> CMatrix {
        self + (-rhs)
    }
}

impl Neg for CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        self.map(|z| -z)
    }
}

impl Mul for CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: CMatrix) -> CMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        self.mul_unchecked(&rhs)
    }
}

impl Mul<CScalar> for CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: CScalar) -> CMatrix {
        self.scale(rhs)
    }
}

impl Mul<f64> for CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: f64) -> CMatrix {
        self.scale_re(rhs)
    }
}
