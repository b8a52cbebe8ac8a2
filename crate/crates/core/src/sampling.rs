//! Random test inputs: states, unitaries, density matrices and valid
//! PT-symmetric Hamiltonians. Callers supply the RNG, so a seeded generator
//! gives reproducible draws.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::linalg::{ComplexMatrix, ComplexScalar, ComplexVector};
use crate::ptcore::{make_hamiltonian, PTHamiltonian};

fn complex<R: Rng + ?Sized>(rng: &mut R) -> ComplexScalar {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Entries uniform in the square `[−1, 1] × [−1, 1]i`; never the zero vector.
pub fn complex_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexVector {
    loop {
        let v = ComplexVector::new((0..dim).map(|_| complex(rng)).collect());
        if v.norm() > 1e-3 {
            return v;
        }
    }
}

/// Conventionally normalised random state.
pub fn state<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexVector {
    complex_vector(rng, dim).normalized().expect("nonzero by construction")
}

/// `e^{iφ}·[[a, −b*], [b, a*]]` with `|a|² + |b|² = 1`.
pub fn unitary_2x2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let v = state(rng, 2);
    let (a, b) = (v[0], v[1]);
    let phase = Complex64::from_polar(1.0, rng.gen_range(-PI..PI));
    ComplexMatrix::from_rows(&[[a, -b.conj()], [b, a.conj()]]).scale(phase)
}

/// `A A† / tr(A A†)` for a random square `A`: full rank with probability one.
pub fn density_matrix<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix {
    let a = ComplexMatrix::new(dim, (0..dim * dim).map(|_| complex(rng)).collect()).expect("square");
    let rho = &a * &a.adjoint();
    let trace = rho.trace().re;
    let rho = rho.scale_real(1.0 / trace);
    // Remove rounding asymmetry so the result is Hermitian to the last bit.
    (&rho + &rho.adjoint()).scale_real(0.5)
}

/// Valid Hamiltonian with `|α| ≤ 1.45` and `E₊ − E₋ ≥ 1e-2`, keeping the
/// metric well conditioned (`cos α ≳ 0.12`).
pub fn hamiltonian<R: Rng + ?Sized>(rng: &mut R) -> PTHamiltonian {
    loop {
        let r = rng.gen_range(-2.0..2.0);
        let s = rng.gen_range(0.1..2.0);
        let theta = rng.gen_range(-PI..PI);
        if let Ok(h) = make_hamiltonian(r, s, theta) {
            if h.alpha().abs() <= 1.45 && h.gap() >= 1e-2 {
                return h;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_have_their_advertised_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let u = unitary_2x2(&mut rng);
            assert!((&u.adjoint() * &u).approx_eq(&ComplexMatrix::identity(2), 1e-14));
            let rho = density_matrix(&mut rng, 4);
            assert!(rho.is_hermitian(0.0));
            assert!((rho.trace().re - 1.0).abs() < 1e-14);
            assert!((state(&mut rng, 3).norm() - 1.0).abs() < 1e-14);
            let h = hamiltonian(&mut rng);
            assert!(h.alpha().abs() <= 1.45);
        }
    }
}
