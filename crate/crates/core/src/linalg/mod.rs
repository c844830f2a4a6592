//! Self-contained dense complex linear algebra.

pub mod eigen;
pub mod matrix;
pub mod poly;
pub mod random;
pub mod schmidt;

pub use eigen::{eig_hermitian, HermitianEigen};
pub use matrix::ComplexMatrix;
pub use poly::{poly_roots, PolyRoots};
pub use schmidt::{schmidt_decompose, SchmidtDecomposition};

use crate::error::Result;

/// `Tr √(M M†)`, the sum of singular values. Hermitian input (within
/// `1e-12` relative) takes the cheaper `Σ|λ_i|` route.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    m.require_square()?;
    let scale = m.max_abs().max(f64::MIN_POSITIVE);
    if m.hermitian_residual() <= 1e-12 * scale {
        let e = eig_hermitian(m)?;
        return Ok(e.values.iter().map(|l| l.abs()).sum());
    }
    let gram = &m.adjoint() * m;
    let e = eig_hermitian(&gram)?;
    Ok(e.values.iter().map(|l| l.max(0.0).sqrt()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_and_signed_diagonal() {
        assert!((trace_norm(&ComplexMatrix::identity(5)).unwrap() - 5.0).abs() < 1e-14);
        let m = ComplexMatrix::from_real_diagonal(&[0.5, -0.5]);
        assert!((trace_norm(&m).unwrap() - 1.0).abs() < 1e-15);
        assert!(trace_norm(&ComplexMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn hermitian_trace_norm_matches_eigenvalues() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in [2, 4, 9] {
            let h = random::random_hermitian(n, &mut rng);
            let expect: f64 = eig_hermitian(&h).unwrap().values.iter().map(|l| l.abs()).sum();
            assert!((trace_norm(&h).unwrap() - expect).abs() < 1e-10);
        }
    }

    #[test]
    fn unitarily_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for n in [2, 3, 6] {
            let m = ComplexMatrix::from_fn(n, n, |_, _| random::gaussian_complex(&mut rng));
            let u = random::random_unitary(n, &mut rng);
            let v = random::random_unitary(n, &mut rng);
            let rotated = &(&u * &m) * &v;
            let a = trace_norm(&m).unwrap();
            let b = trace_norm(&rotated).unwrap();
            assert!((a - b).abs() < 1e-9 * a.max(1.0));
        }
        // Non-Hermitian nilpotent: singular values {1, 0}.
        let mut j = ComplexMatrix::zeros(2, 2);
        j[(0, 1)] = Complex64::new(0.0, 1.0);
        assert!((trace_norm(&j).unwrap() - 1.0).abs() < 1e-12);
    }
}
