//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies the classical real Jacobi rotation, so the
//! combined transform `W = P·J` zeroes `a_pq` while keeping the matrix
//! Hermitian. Sweeps repeat until the off-diagonal mass drops below
//! machine precision relative to the matrix norm.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Asymmetry tolerated on input.
pub const HERMITIAN_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors stored as columns, matching `values`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, i: usize) -> Vec<Complex64> {
        self.vectors.column(i)
    }

    /// Rebuilds `V Λ V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let scaled = ComplexMatrix::from_fn(n, n, |i, j| self.vectors[(i, j)] * self.values[j]);
        &scaled * &self.vectors.adjoint()
    }
}

pub fn eig_hermitian(h: &ComplexMatrix) -> Result<HermitianEigen> {
    h.require_square()?;
    let residual = h.hermitian_residual();
    if residual > HERMITIAN_TOL {
        return Err(Error::NotHermitian { residual });
    }
    let n = h.rows();
    // Symmetrize so that the rotations act on an exactly Hermitian matrix.
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| 0.5 * (h[(i, j)] + h[(j, i)].conj()));
    let mut v = ComplexMatrix::identity(n);

    let scale = a.frobenius_norm();
    if scale > 0.0 {
        for _ in 0..MAX_SWEEPS {
            let off = off_diagonal_norm(&a);
            if off <= 1e-15 * scale || off < 1e-300 {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    rotate(&mut a, &mut v, p, q);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    reorthonormalize_clusters(&values, &mut vectors, scale);
    Ok(HermitianEigen { values, vectors })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r < 1e-300 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Skip rotations that cannot change the diagonal at working precision.
    if r < 1e-18 * (app.abs() + aqq.abs()) {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    let phase = apq / r; // e^{iφ}
    let zeta = (aqq - app) / (2.0 * r);
    let t = if zeta == 0.0 {
        1.0
    } else {
        zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let e_minus = phase.conj();
    let n = a.rows();

    // Columns: A ← A W.
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * e_minus * s;
        a[(k, q)] = akp * s + akq * e_minus * c;
    }
    // Rows: A ← W† A.
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * phase * s;
        a[(q, k)] = apk * s + aqk * phase * c;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * e_minus * s;
        v[(k, q)] = vkp * s + vkq * e_minus * c;
    }
}

/// Modified Gram-Schmidt inside each cluster of (numerically) equal
/// eigenvalues.
fn reorthonormalize_clusters(values: &[f64], vectors: &mut ComplexMatrix, scale: f64) {
    let n = values.len();
    let tol = 1e-10 * scale.max(1.0);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[end] - values[end - 1] <= tol {
            end += 1;
        }
        if end - start > 1 {
            for j in start..end {
                for i in start..j {
                    let proj: Complex64 = (0..n).map(|k| vectors[(k, i)].conj() * vectors[(k, j)]).sum();
                    for k in 0..n {
                        let vi = vectors[(k, i)];
                        vectors[(k, j)] -= proj * vi;
                    }
                }
                let nrm = (0..n).map(|k| vectors[(k, j)].norm_sqr()).sum::<f64>().sqrt();
                for k in 0..n {
                    vectors[(k, j)] /= nrm;
                }
            }
        }
        start = end;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::random_hermitian;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn unitarity_defect(v: &ComplexMatrix) -> f64 {
        (&v.adjoint() * v).max_abs_diff(&ComplexMatrix::identity(v.rows()))
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let e = eig_hermitian(&ComplexMatrix::identity(2)).unwrap();
        assert_eq!(e.values, vec![1.0, 1.0]);
        assert!(unitarity_defect(&e.vectors) < 1e-15);
    }

    #[test]
    fn diagonal_input_returns_standard_basis() {
        let e = eig_hermitian(&ComplexMatrix::from_real_diagonal(&[0.7, 0.3])).unwrap();
        assert_eq!(e.values, vec![0.3, 0.7]);
        assert!((e.vectors[(1, 0)].norm() - 1.0).abs() < 1e-15);
        assert!((e.vectors[(0, 1)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_square_and_non_hermitian() {
        assert!(matches!(
            eig_hermitian(&ComplexMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = Complex64::new(0.0, 1.0);
        assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn random_hermitian_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [1, 2, 3, 8, 16, 33] {
            let h = random_hermitian(n, &mut rng);
            let e = eig_hermitian(&h).unwrap();
            assert!(e.reconstruct().max_abs_diff(&h) < 1e-9, "n = {n}");
            assert!(unitarity_defect(&e.vectors) < 1e-10);
            let tr: f64 = e.values.iter().sum();
            assert!((tr - h.trace().re).abs() < 1e-9);
            assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
            let hn = h.frobenius_norm();
            for i in 0..n {
                let vi = e.vector(i);
                let hv = h.mul_vec(&vi);
                let res: f64 = hv
                    .iter()
                    .zip(&vi)
                    .map(|(a, b)| (a - b * e.values[i]).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                assert!(res <= 1e-9 * hn.max(1.0));
            }
        }
    }

    #[test]
    fn degenerate_spectrum_keeps_orthonormal_basis() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // U diag(1,1,1,2,2) U† for a random unitary U.
        let u = crate::linalg::random::random_unitary(5, &mut rng);
        let d = ComplexMatrix::from_real_diagonal(&[1.0, 1.0, 1.0, 2.0, 2.0]);
        let h = &(&u * &d) * &u.adjoint();
        let e = eig_hermitian(&h).unwrap();
        assert!(unitarity_defect(&e.vectors) < 1e-12);
        assert!(e.reconstruct().max_abs_diff(&h) < 1e-12);
    }
}
