//! Eigendecompositions: closed form for general 2×2 matrices, cyclic Jacobi
//! for Hermitian matrices of any size.

use std::cmp::Ordering;

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, ComplexScalar, ComplexVector};
use crate::{Error, Result, PRECONDITION_TOL};

/// Eigenvalues with their right eigenvectors, sorted by descending real part
/// (ties broken by descending imaginary part). Each vector has unit
/// conventional norm and its first non-negligible entry real and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    pub values: Vec<ComplexScalar>,
    pub right_vectors: Vec<ComplexVector>,
}

impl EigenSystem {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|z| z.re).collect()
    }

    /// Matrix whose columns are the right eigenvectors.
    pub fn vector_matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_columns(&self.right_vectors)
    }

    fn sorted(mut pairs: Vec<(ComplexScalar, ComplexVector)>) -> Self {
        pairs.sort_by(|a, b| spectral_order(a.0, b.0));
        let (values, right_vectors) = pairs
            .into_iter()
            .map(|(v, vec)| (v, vec.with_canonical_phase()))
            .unzip();
        Self { values, right_vectors }
    }
}

/// Descending real part; real parts within 1e-12 count as tied and fall back
/// to descending imaginary part.
fn spectral_order(a: ComplexScalar, b: ComplexScalar) -> Ordering {
    if (a.re - b.re).abs() > 1e-12 {
        b.re.partial_cmp(&a.re).unwrap_or(Ordering::Equal)
    } else {
        b.im.partial_cmp(&a.im).unwrap_or(Ordering::Equal)
    }
}

/// Closed-form eigendecomposition of an arbitrary complex 2×2 matrix.
pub fn eig_general_2x2(m: &ComplexMatrix) -> Result<EigenSystem> {
    if m.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: m.dim() });
    }
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let mean = (a + d) * 0.5;
    let half_diff = (a - d) * 0.5;
    let root = (half_diff * half_diff + b * c).sqrt();
    let gap = 2.0 * root.norm();
    if gap < 1e-12 {
        return Err(Error::DegenerateSpectrum { gap });
    }

    let pairs = [mean + root, mean - root]
        .into_iter()
        .map(|lambda| {
            // Both rows of (m − λ) annihilate the eigenvector; take whichever
            // null-vector candidate is better conditioned.
            let from_row0 = ComplexVector::new(vec![b, lambda - a]);
            let from_row1 = ComplexVector::new(vec![lambda - d, c]);
            let v = if from_row0.norm() >= from_row1.norm() {
                from_row0
            } else {
                from_row1
            };
            v.normalized().map(|v| (lambda, v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EigenSystem::sorted(pairs))
}

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are real (stored
/// with zero imaginary part) and the eigenvectors orthonormal.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<EigenSystem> {
    let deviation = m.hermitian_deviation();
    if deviation > PRECONDITION_TOL || !m.is_finite() {
        return Err(Error::NotHermitian { deviation });
    }
    let (values, vectors) = jacobi_hermitian(m);
    let pairs = values
        .into_iter()
        .enumerate()
        .map(|(k, lambda)| (Complex64::new(lambda, 0.0), vectors.column(k)))
        .collect();
    Ok(EigenSystem::sorted(pairs))
}

/// Real eigenvalues of a Hermitian matrix, descending.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(eig_hermitian(m)?.real_values())
}

/// Cyclic complex Jacobi. Returns unsorted eigenvalues and the unitary whose
/// columns are the matching eigenvectors.
fn jacobi_hermitian(m: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let n = m.dim();
    // Work on the exactly Hermitian part so rounding in the input cannot bias
    // the rotation angles.
    let mut a = (m + &m.adjoint()).scale_real(0.5);
    let mut v = ComplexMatrix::identity(n);
    let scale = a.entries().iter().map(|z| z.norm()).fold(0.0, f64::max);

    for _sweep in 0..64 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        if off.sqrt() <= 1e-300_f64.max(f64::EPSILON * 1e-3 * scale) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                let phase = apq / mag;
                let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * mag);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // G acts on the (p, q) plane: columns p and q of A and V.
                let g_pp = Complex64::new(c, 0.0);
                let g_pq = Complex64::new(s, 0.0);
                let g_qp = -phase.conj() * s;
                let g_qq = phase.conj() * c;

                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = akp * g_pp + akq * g_qp;
                    a[(k, q)] = akp * g_pq + akq * g_qq;
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = vkp * g_pp + vkq * g_qp;
                    v[(k, q)] = vkp * g_pq + vkq * g_qq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
                    a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
                }
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)].im = 0.0;
                a[(q, q)].im = 0.0;
            }
        }
    }
    ((0..n).map(|i| a[(i, i)].re).collect(), v)
}
