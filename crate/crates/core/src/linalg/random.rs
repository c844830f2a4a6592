//! Random test objects: Haar vectors and unitaries, GUE-like Hermitian
//! matrices.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::matrix::{inner, ComplexMatrix};

pub fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Uniformly (Haar) distributed unit vector of dimension `dim`.
pub fn haar_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..dim).map(|_| gaussian_complex(rng)).collect();
        if let Some(n) = super::matrix::normalized(&v) {
            return n;
        }
    }
}

/// Haar unitary from Gram-Schmidt on a complex Ginibre matrix (columns).
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<Complex64> = (0..n).map(|_| gaussian_complex(rng)).collect();
        for _ in 0..2 {
            for c in &cols {
                let proj = inner(c, &v);
                for (x, y) in v.iter_mut().zip(c) {
                    *x -= proj * y;
                }
            }
        }
        if let Some(v) = super::matrix::normalized(&v) {
            cols.push(v);
        }
    }
    ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
}

pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, n, |_, _| gaussian_complex(rng));
    let gh = g.adjoint();
    ComplexMatrix::from_fn(n, n, |i, j| 0.5 * (g[(i, j)] + gh[(i, j)]))
}

pub fn random_qubit<R: Rng + ?Sized>(rng: &mut R) -> [Complex64; 2] {
    let v = haar_vector(2, rng);
    [v[0], v[1]]
}
