//! Dense complex vectors and square matrices, stored row-major.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::{Error, Result};

/// Complex amplitude type used throughout the crate.
pub type ComplexScalar = Complex64;

pub(crate) const ZERO: ComplexScalar = Complex64::new(0.0, 0.0);
pub(crate) const ONE: ComplexScalar = Complex64::new(1.0, 0.0);
pub(crate) const I: ComplexScalar = Complex64::new(0.0, 1.0);

#[derive(Clone, PartialEq)]
pub struct ComplexVector {
    entries: Vec<ComplexScalar>,
}

impl ComplexVector {
    pub fn new(entries: Vec<ComplexScalar>) -> Self {
        assert!(!entries.is_empty(), "vector dimension must be positive");
        Self { entries }
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![ZERO; dim])
    }

    /// Computational basis vector `|index⟩`.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[index] = ONE;
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[ComplexScalar] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &ComplexScalar> {
        self.entries.iter()
    }

    /// Conventional inner product `⟨self|other⟩`, antilinear in `self`.
    pub fn dot(&self, other: &Self) -> ComplexScalar {
        assert_eq!(self.dim(), other.dim());
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    pub fn scale(&self, factor: ComplexScalar) -> Self {
        Self::new(self.entries.iter().map(|z| z * factor).collect())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.entries.iter().map(|z| z.conj()).collect())
    }

    /// Outer product `|self⟩⟨other|`.
    pub fn outer(&self, other: &Self) -> ComplexMatrix {
        assert_eq!(self.dim(), other.dim(), "outer product needs equal dimensions");
        let n = self.dim();
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.entries[i] * other.entries[j].conj();
            }
        }
        m
    }

    /// Projector `|self⟩⟨self|` without normalisation.
    pub fn projector(&self) -> ComplexMatrix {
        self.outer(self)
    }

    /// Multiplies by a global phase so the first non-negligible entry is real
    /// and positive.
    pub fn with_canonical_phase(&self) -> Self {
        let scale = self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
        match self.entries.iter().find(|z| z.norm() > 1e-12 * scale.max(1e-300)) {
            Some(lead) => {
                let phase = lead.conj() / lead.norm();
                self.scale(phase)
            }
            None => self.clone(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim());
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim() == other.dim() && self.max_abs_diff(other) <= tol
    }
}

impl Index<usize> for ComplexVector {
    type Output = ComplexScalar;
    fn index(&self, i: usize) -> &ComplexScalar {
        &self.entries[i]
    }
}

impl IndexMut<usize> for ComplexVector {
    fn index_mut(&mut self, i: usize) -> &mut ComplexScalar {
        &mut self.entries[i]
    }
}

impl Add for &ComplexVector {
    type Output = ComplexVector;
    fn add(self, rhs: &ComplexVector) -> ComplexVector {
        assert_eq!(self.dim(), rhs.dim());
        ComplexVector::new(self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ComplexVector {
    type Output = ComplexVector;
    fn sub(self, rhs: &ComplexVector) -> ComplexVector {
        assert_eq!(self.dim(), rhs.dim());
        ComplexVector::new(self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for ComplexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.iter()).finish()
    }
}

/// Square complex matrix. Equality is exact; use [`ComplexMatrix::approx_eq`]
/// for tolerance comparisons.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<ComplexScalar>,
}

impl ComplexMatrix {
    pub fn new(dim: usize, entries: Vec<ComplexScalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("matrix dimension must be positive".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    /// Builds a matrix from rows. Panics if the rows are not square.
    pub fn from_rows<R: AsRef<[ComplexScalar]>>(rows: &[R]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), dim, "matrix rows must be square");
            entries.extend_from_slice(row);
        }
        Self::new(dim, entries).expect("non-empty square rows")
    }

    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<ComplexScalar>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(dim, vec![ZERO; dim * dim]).expect("positive dimension")
    }

    pub fn identity(dim: usize) -> Self {
        Self::diag(&vec![ONE; dim])
    }

    pub fn diag(values: &[ComplexScalar]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let values: Vec<_> = values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::diag(&values)
    }

    /// The matrix whose columns are `columns`.
    pub fn from_columns(columns: &[ComplexVector]) -> Self {
        let n = columns.len();
        let mut m = Self::zeros(n);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), n, "columns must form a square matrix");
            for i in 0..n {
                m[(i, j)] = col[i];
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[ComplexScalar] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> ComplexVector {
        ComplexVector::new((0..self.dim).map(|i| self[(i, j)]).collect())
    }

    pub fn scale(&self, factor: ComplexScalar) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(j, i)] = self[(i, j)];
            }
        }
        m
    }

    pub fn conj(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn trace(&self) -> ComplexScalar {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, v: &ComplexVector) -> ComplexVector {
        assert_eq!(self.dim, v.dim(), "matrix-vector dimension mismatch");
        let n = self.dim;
        ComplexVector::new(
            (0..n)
                .map(|i| (0..n).map(|k| self[(i, k)] * v[k]).sum())
                .collect(),
        )
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Largest entrywise deviation from Hermiticity, `max |m_ij − conj(m_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Inverse of a 2×2 matrix by the adjugate formula; `None` when singular.
    pub fn inverse_2x2(&self) -> Option<Self> {
        assert_eq!(self.dim, 2, "inverse_2x2 requires a 2×2 matrix");
        let (a, b, c, d) = (self[(0, 0)], self[(0, 1)], self[(1, 0)], self[(1, 1)]);
        let det = a * d - b * c;
        let scale = self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if det.norm() <= 1e-14 * scale * scale {
            return None;
        }
        Some(Self::from_rows(&[[d, -b], [-c, a]]).scale(det.inv()))
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = ComplexScalar;
    fn index(&self, (i, j): (usize, usize)) -> &ComplexScalar {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ComplexScalar {
        &mut self.entries[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix product dimension mismatch");
        let n = self.dim;
        let mut m = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    m[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        m
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[ComplexScalar]> = self.entries.chunks(self.dim).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Kronecker product with the left operand's indices major.
pub trait Kron {
    fn kron(&self, rhs: &Self) -> Self;
}

impl Kron for ComplexMatrix {
    fn kron(&self, rhs: &Self) -> Self {
        let (na, nb) = (self.dim, rhs.dim);
        let mut m = ComplexMatrix::zeros(na * nb);
        for i in 0..na {
            for j in 0..na {
                let a = self[(i, j)];
                for k in 0..nb {
                    for l in 0..nb {
                        m[(i * nb + k, j * nb + l)] = a * rhs[(k, l)];
                    }
                }
            }
        }
        m
    }
}

impl Kron for ComplexVector {
    fn kron(&self, rhs: &Self) -> Self {
        let mut out = Vec::with_capacity(self.dim() * rhs.dim());
        for a in self.iter() {
            for b in rhs.iter() {
                out.push(a * b);
            }
        }
        ComplexVector::new(out)
    }
}

/// Tensor product `a ⊗ b`; `(a⊗b)[i·dim_b + k, j·dim_b + l] = a[i,j]·b[k,l]`.
pub fn tensor<T: Kron>(a: &T, b: &T) -> T {
    a.kron(b)
}

/// Pauli matrices, handy in tests and examples.
pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]])
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, -I], [I, ZERO]])
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[[1.0, 0.0], [0.0, -1.0]])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexScalar {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_tensor_identity_is_identity() {
        let i4 = tensor(&ComplexMatrix::identity(2), &ComplexMatrix::identity(2));
        assert_eq!(i4, ComplexMatrix::identity(4));
    }

    #[test]
    fn vector_tensor_basis_bookkeeping() {
        let v = tensor(&ComplexVector::basis(2, 0), &ComplexVector::basis(2, 1));
        assert_eq!(v, ComplexVector::from_real(&[0.0, 1.0, 0.0, 0.0]));
    }

    #[test]
    fn sigma_x_tensor_sigma_x_flips_both() {
        let xx = tensor(&pauli_x(), &pauli_x());
        let out = xx.mul_vec(&ComplexVector::basis(4, 0));

        // Index-summation oracle: out[i*2+k] = Σ_{j,l} X[i,j] X[k,l] in[j*2+l].
        let x = pauli_x();
        let input = ComplexVector::basis(4, 0);
        let mut expected = ComplexVector::zeros(4);
        for i in 0..2 {
            for k in 0..2 {
                for j in 0..2 {
                    for l in 0..2 {
                        expected[i * 2 + k] += x[(i, j)] * x[(k, l)] * input[j * 2 + l];
                    }
                }
            }
        }
        assert_eq!(out, expected);
        assert_eq!(out, ComplexVector::basis(4, 3));
    }

    #[test]
    fn kron_index_convention() {
        let a = ComplexMatrix::from_rows(&[[c(1.0, 0.0), c(2.0, 1.0)], [c(0.0, -1.0), c(3.0, 0.0)]]);
        let b = ComplexMatrix::from_rows(&[[c(0.5, 0.0), c(0.0, 2.0)], [c(-1.0, 0.0), c(4.0, 4.0)]]);
        let ab = tensor(&a, &b);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        assert_eq!(ab[(i * 2 + k, j * 2 + l)], a[(i, j)] * b[(k, l)]);
                    }
                }
            }
        }
    }

    #[test]
    fn new_rejects_wrong_length() {
        assert_eq!(
            ComplexMatrix::new(2, vec![ZERO; 3]),
            Err(Error::DimensionMismatch { expected: 4, got: 3 })
        );
    }

    #[test]
    fn canonical_phase_makes_lead_positive() {
        let v = ComplexVector::new(vec![c(0.0, 0.0), c(0.0, -2.0), c(1.0, 0.0)]);
        let w = v.with_canonical_phase();
        assert!(w[1].im.abs() < 1e-15 && w[1].re > 0.0);
        assert!((w.norm() - v.norm()).abs() < 1e-15);
    }

    #[test]
    fn inverse_2x2_round_trip() {
        let m = ComplexMatrix::from_rows(&[[c(1.0, 1.0), c(2.0, 0.0)], [c(0.0, -1.0), c(3.0, 0.5)]]);
        let inv = m.inverse_2x2().unwrap();
        assert!((&m * &inv).approx_eq(&ComplexMatrix::identity(2), 1e-14));
        assert!(ComplexMatrix::from_real_rows(&[[1.0, 2.0], [2.0, 4.0]]).inverse_2x2().is_none());
    }

    #[test]
    fn zero_vector_cannot_be_normalized() {
        assert_eq!(ComplexVector::zeros(2).normalized(), Err(Error::ZeroVector));
    }
}
