//! Schmidt decomposition of a multiqubit amplitude vector across a qubit cut.

use num_complex::Complex64;

use super::eigen::eig_hermitian;
use super::matrix::{inner, ComplexMatrix};
use crate::error::{Error, Result};

/// Schmidt coefficients `√λ_i` count toward the rank iff `λ_i` exceeds this.
pub const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    /// `√λ_i`, nonincreasing.
    pub coefficients: Vec<f64>,
    /// Orthonormal states of the cut qubits (in ascending label order).
    pub left_vectors: Vec<Vec<Complex64>>,
    /// Orthonormal states of the complementary qubits.
    pub right_vectors: Vec<Vec<Complex64>>,
}

impl SchmidtDecomposition {
    /// `λ_i = coefficient²`.
    pub fn weights(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| c * c).collect()
    }

    pub fn rank(&self) -> usize {
        self.coefficients.iter().filter(|&&c| c * c > RANK_TOL).count()
    }

    /// `Σ_i √λ_i |left_i⟩ ⊗ |right_i⟩` as a (left, right) coefficient matrix.
    pub fn reassemble(&self) -> ComplexMatrix {
        let dl = self.left_vectors.first().map_or(0, Vec::len);
        let dr = self.right_vectors.first().map_or(0, Vec::len);
        let mut m = ComplexMatrix::zeros(dl, dr);
        for (i, &c) in self.coefficients.iter().enumerate() {
            for l in 0..dl {
                let a = self.left_vectors[i][l] * c;
                for r in 0..dr {
                    m[(l, r)] += a * self.right_vectors[i][r];
                }
            }
        }
        m
    }
}

/// Validates a cut: nonempty, a strict subset, in range and without duplicates.
/// Returns the sorted cut and its complement.
pub fn split_qubits(num_qubits: usize, cut: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let bad = |reason| Error::InvalidSubset {
        subset: cut.to_vec(),
        num_qubits,
        reason,
    };
    let mut sorted = cut.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cut.len() {
        return Err(bad("duplicate qubit"));
    }
    if sorted.is_empty() {
        return Err(bad("subset is empty"));
    }
    if sorted.iter().any(|&q| q >= num_qubits) {
        return Err(bad("qubit index out of range"));
    }
    if sorted.len() == num_qubits {
        return Err(bad("subset covers the whole system"));
    }
    let rest = (0..num_qubits).filter(|q| !sorted.contains(q)).collect();
    Ok((sorted, rest))
}

/// Reshapes an N-qubit amplitude vector into the matrix `M[l, r]` where `l`
/// enumerates the qubits in `left` and `r` those in `right`, both
/// most-significant first. Qubit 0 is the most significant bit of the
/// amplitude index.
pub fn reshape_bipartite(
    amplitudes: &[Complex64],
    num_qubits: usize,
    left: &[usize],
    right: &[usize],
) -> ComplexMatrix {
    let dl = 1usize << left.len();
    let dr = 1usize << right.len();
    let mut m = ComplexMatrix::zeros(dl, dr);
    for (idx, &amp) in amplitudes.iter().enumerate() {
        let l = gather_bits(idx, num_qubits, left);
        let r = gather_bits(idx, num_qubits, right);
        m[(l, r)] = amp;
    }
    m
}

#[inline]
pub(crate) fn gather_bits(idx: usize, num_qubits: usize, qubits: &[usize]) -> usize {
    qubits
        .iter()
        .fold(0, |acc, &q| (acc << 1) | ((idx >> (num_qubits - 1 - q)) & 1))
}

/// Schmidt decomposition of `amplitudes` for the bipartition `cut | rest`.
/// Left vectors live on `cut`, right vectors on its complement.
pub fn schmidt_decompose(
    amplitudes: &[Complex64],
    num_qubits: usize,
    cut: &[usize],
) -> Result<SchmidtDecomposition> {
    if amplitudes.len() != 1 << num_qubits {
        return Err(Error::DimensionMismatch {
            expected: 1 << num_qubits,
            found: amplitudes.len(),
        });
    }
    let (left, right) = split_qubits(num_qubits, cut)?;
    let m = reshape_bipartite(amplitudes, num_qubits, &left, &right);
    if m.rows() <= m.cols() {
        Ok(svd_from_smaller_side(&m))
    } else {
        let d = svd_from_smaller_side(&m.transpose());
        Ok(SchmidtDecomposition {
            coefficients: d.coefficients,
            left_vectors: d.right_vectors,
            right_vectors: d.left_vectors,
        })
    }
}

/// Requires `rows <= cols`.
fn svd_from_smaller_side(m: &ComplexMatrix) -> SchmidtDecomposition {
    let (dl, dr) = (m.rows(), m.cols());
    let gram = &*m * &m.adjoint();
    let eig = eig_hermitian(&gram).expect("M M† is Hermitian");
    let mut coefficients = Vec::with_capacity(dl);
    let mut left_vectors = Vec::with_capacity(dl);
    let mut right_vectors: Vec<Vec<Complex64>> = Vec::with_capacity(dl);
    for i in (0..dl).rev() {
        let sigma = eig.values[i].max(0.0).sqrt();
        let u = eig.vector(i);
        // w_r = Σ_l conj(u_l) M[l, r] / σ
        let mut w: Vec<Complex64> = (0..dr)
            .map(|r| (0..dl).map(|l| u[l].conj() * m[(l, r)]).sum::<Complex64>())
            .collect();
        if sigma > 0.0 {
            w.iter_mut().for_each(|z| *z /= sigma);
        }
        let w = orthonormal_completion(w, &right_vectors);
        coefficients.push(sigma);
        left_vectors.push(u);
        right_vectors.push(w);
    }
    SchmidtDecomposition {
        coefficients,
        left_vectors,
        right_vectors,
    }
}

/// Orthogonalizes `v` against `basis`; falls back to a standard basis vector
/// when `v` carries no usable direction.
fn orthonormal_completion(mut v: Vec<Complex64>, basis: &[Vec<Complex64>]) -> Vec<Complex64> {
    let project_out = |v: &mut Vec<Complex64>| {
        for _ in 0..2 {
            for b in basis {
                let p = inner(b, v);
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= p * y;
                }
            }
        }
    };
    project_out(&mut v);
    let n = super::matrix::norm(&v);
    if n > 0.5 {
        return v.into_iter().map(|z| z / n).collect();
    }
    for e in 0..v.len() {
        let mut cand = vec![Complex64::new(0.0, 0.0); v.len()];
        cand[e] = Complex64::new(1.0, 0.0);
        project_out(&mut cand);
        let n = super::matrix::norm(&cand);
        if n > 0.5 {
            return cand.into_iter().map(|z| z / n).collect();
        }
    }
    unreachable!("basis is not full")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::haar_vector;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn reassembled_amplitudes(d: &SchmidtDecomposition, n: usize, cut: &[usize]) -> Vec<Complex64> {
        let (left, right) = split_qubits(n, cut).unwrap();
        let m = d.reassemble();
        (0..1usize << n)
            .map(|idx| m[(gather_bits(idx, n, &left), gather_bits(idx, n, &right))])
            .collect()
    }

    #[test]
    fn product_state_has_single_coefficient() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        // |0⟩ ⊗ |+⟩
        let psi = [c(h), c(h), c(0.0), c(0.0)];
        let d = schmidt_decompose(&psi, 2, &[0]).unwrap();
        assert!((d.coefficients[0] - 1.0).abs() < 1e-14);
        assert_eq!(d.rank(), 1);
    }

    #[test]
    fn ghz_has_two_equal_coefficients() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut psi = vec![c(0.0); 8];
        psi[0] = c(h);
        psi[7] = c(h);
        let d = schmidt_decompose(&psi, 3, &[0]).unwrap();
        assert_eq!(d.rank(), 2);
        assert!((d.coefficients[0] - h).abs() < 1e-14);
        assert!((d.coefficients[1] - h).abs() < 1e-14);
    }

    #[test]
    fn random_state_reconstructs_across_non_contiguous_cut() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let psi = haar_vector(16, &mut rng);
            let cut = [1, 3];
            let d = schmidt_decompose(&psi, 4, &cut).unwrap();
            let total: f64 = d.weights().iter().sum();
            assert!((total - 1.0).abs() < 1e-12);
            assert!(d.coefficients.windows(2).all(|w| w[0] >= w[1]));
            let back = reassembled_amplitudes(&d, 4, &cut);
            let err = back.iter().zip(&psi).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            assert!(err < 1e-9);
            for vs in [&d.left_vectors, &d.right_vectors] {
                for i in 0..vs.len() {
                    for j in 0..vs.len() {
                        let expect = if i == j { 1.0 } else { 0.0 };
                        assert!((inner(&vs[i], &vs[j]) - c(expect)).norm() < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn coefficients_do_not_depend_on_which_side_is_cut() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let psi = haar_vector(32, &mut rng);
        let a = schmidt_decompose(&psi, 5, &[0, 2]).unwrap();
        let b = schmidt_decompose(&psi, 5, &[1, 3, 4]).unwrap();
        for (x, y) in a.coefficients.iter().zip(&b.coefficients) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_empty_and_full_cuts() {
        let psi = vec![c(1.0), c(0.0), c(0.0), c(0.0)];
        assert!(schmidt_decompose(&psi, 2, &[]).is_err());
        assert!(schmidt_decompose(&psi, 2, &[0, 1]).is_err());
        assert!(schmidt_decompose(&psi, 2, &[2]).is_err());
        assert!(schmidt_decompose(&psi, 2, &[0, 0]).is_err());
    }
}
