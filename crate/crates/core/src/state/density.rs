use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, ComplexMatrix, HermitianEigen};

/// Tolerance for Hermiticity, trace and positivity checks.
pub const DENSITY_TOL: f64 = 1e-10;

/// Density operator over a labeled subset of an N-qubit register.
///
/// `qubit_labels[i]` is the original index of the qubit carried by the i-th
/// most significant bit of the matrix index.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    qubit_labels: Vec<usize>,
    matrix: ComplexMatrix,
}

impl DensityOperator {
    /// Validates dimension, Hermiticity, unit trace and positivity.
    pub fn new(qubit_labels: Vec<usize>, matrix: ComplexMatrix) -> Result<Self> {
        let dim = 1usize << qubit_labels.len();
        if matrix.rows() != dim || matrix.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: matrix.rows(),
            });
        }
        let mut sorted = qubit_labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != qubit_labels.len() {
            return Err(Error::InvalidSubset {
                subset: qubit_labels,
                num_qubits: sorted.len(),
                reason: "duplicate qubit label",
            });
        }
        let residual = matrix.hermitian_residual();
        if residual > DENSITY_TOL {
            return Err(Error::NotHermitian { residual });
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > DENSITY_TOL || tr.im.abs() > DENSITY_TOL {
            return Err(Error::NotNormalized { norm: tr.norm() });
        }
        let rho = Self {
            qubit_labels,
            matrix,
        };
        let min_eigenvalue = rho.eigen().values[0];
        if min_eigenvalue < -DENSITY_TOL {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(rho)
    }

    pub(crate) fn from_parts_unchecked(qubit_labels: Vec<usize>, matrix: ComplexMatrix) -> Self {
        Self {
            qubit_labels,
            matrix,
        }
    }

    /// `I / 2^m` on qubits `0..m`.
    pub fn maximally_mixed(num_qubits: usize) -> Self {
        let d = 1usize << num_qubits;
        Self::from_parts_unchecked(
            (0..num_qubits).collect(),
            ComplexMatrix::identity(d).scale((1.0 / d as f64).into()),
        )
    }

    /// Convex mixture `Σ w_i |ψ_i⟩⟨ψ_i|` of normalized states on qubits `0..m`.
    pub fn mixture(terms: &[(f64, &[num_complex::Complex64])]) -> Result<Self> {
        let dim = terms.first().map_or(0, |t| t.1.len());
        let mut m = ComplexMatrix::zeros(dim, dim);
        for (w, v) in terms {
            let o = ComplexMatrix::outer(v, v);
            for i in 0..dim {
                for j in 0..dim {
                    m[(i, j)] += o[(i, j)] * *w;
                }
            }
        }
        Self::new((0..dim.trailing_zeros() as usize).collect(), m)
    }

    pub fn qubit_labels(&self) -> &[usize] {
        &self.qubit_labels
    }

    pub fn num_qubits(&self) -> usize {
        self.qubit_labels.len()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn eigen(&self) -> HermitianEigen {
        eig_hermitian(&self.matrix).expect("density operators are Hermitian")
    }

    /// Number of eigenvalues above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.eigen().values.iter().filter(|&&l| l > tol).count()
    }

    /// Bit positions (0 = most significant) of the given labels.
    pub(crate) fn positions(&self, labels: &[usize]) -> Result<Vec<usize>> {
        let bad = |reason| Error::InvalidSubset {
            subset: labels.to_vec(),
            num_qubits: self.num_qubits(),
            reason,
        };
        let mut pos = Vec::with_capacity(labels.len());
        for l in labels {
            let p = self
                .qubit_labels
                .iter()
                .position(|q| q == l)
                .ok_or_else(|| bad("label not carried by this operator"))?;
            if pos.contains(&p) {
                return Err(bad("duplicate qubit"));
            }
            pos.push(p);
        }
        if pos.is_empty() {
            return Err(bad("subset is empty"));
        }
        if pos.len() == self.num_qubits() {
            return Err(bad("subset covers the whole system"));
        }
        Ok(pos)
    }

    fn mask(&self, positions: &[usize]) -> usize {
        let m = self.num_qubits();
        positions.iter().fold(0, |acc, p| acc | (1 << (m - 1 - p)))
    }

    /// Traces out the qubits with the given original labels.
    pub fn partial_trace(&self, traced: &[usize]) -> Result<DensityOperator> {
        let traced_pos = self.positions(traced)?;
        let m = self.num_qubits();
        let kept_pos: Vec<usize> = (0..m).filter(|p| !traced_pos.contains(p)).collect();
        let mut traced_sorted = traced_pos.clone();
        traced_sorted.sort_unstable();

        let dk = 1usize << kept_pos.len();
        let dt = 1usize << traced_sorted.len();
        let compose = |k: usize, t: usize| -> usize {
            let mut idx = 0;
            for (i, &p) in kept_pos.iter().enumerate() {
                let bit = (k >> (kept_pos.len() - 1 - i)) & 1;
                idx |= bit << (m - 1 - p);
            }
            for (i, &p) in traced_sorted.iter().enumerate() {
                let bit = (t >> (traced_sorted.len() - 1 - i)) & 1;
                idx |= bit << (m - 1 - p);
            }
            idx
        };
        let mut out = ComplexMatrix::zeros(dk, dk);
        for i in 0..dk {
            for j in 0..dk {
                out[(i, j)] = (0..dt).map(|t| self.matrix[(compose(i, t), compose(j, t))]).sum();
            }
        }
        let labels = kept_pos.iter().map(|&p| self.qubit_labels[p]).collect();
        Ok(DensityOperator::from_parts_unchecked(labels, out))
    }

    /// Partial transpose on the qubits with the given original labels.
    pub fn partial_transpose(&self, subset: &[usize]) -> Result<ComplexMatrix> {
        let pos = self.positions(subset)?;
        Ok(partial_transpose_masked(&self.matrix, self.mask(&pos)))
    }

    /// Same operator with labels reassigned to `0..m` (keeps bit order).
    pub fn relabeled(&self) -> DensityOperator {
        Self::from_parts_unchecked((0..self.num_qubits()).collect(), self.matrix.clone())
    }
}

/// Swaps the bits selected by `mask` between row and column indices.
pub(crate) fn partial_transpose_masked(m: &ComplexMatrix, mask: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        let ii = (i & !mask) | (j & mask);
        let jj = (j & !mask) | (i & mask);
        m[(ii, jj)]
    })
}
