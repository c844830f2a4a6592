use num_complex::Complex64;

use super::density::DensityOperator;
use crate::error::{Error, Result};
use crate::linalg::matrix::{inner, kron_vec, norm, ComplexMatrix};
use crate::linalg::schmidt::{reshape_bipartite, split_qubits};
use crate::linalg::{schmidt_decompose, SchmidtDecomposition};

/// Normalization tolerance for state vectors.
pub const NORM_TOL: f64 = 1e-10;

/// Normalized N-qubit state vector. Qubit 0 is the most significant bit of
/// the amplitude index, so `|q_0 q_1 … q_{N-1}⟩` sits at index
/// `Σ q_i 2^{N-1-i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps a normalized amplitude vector of length `2^N`, `N >= 1`.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let num_qubits = qubit_count(amplitudes.len())?;
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n = norm(&amplitudes);
        if (n - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm: n });
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Normalizes `amplitudes` first.
    pub fn from_unnormalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let num_qubits = qubit_count(amplitudes.len())?;
        let amplitudes = crate::linalg::matrix::normalized(&amplitudes).ok_or(Error::ZeroState)?;
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    pub fn basis(num_qubits: usize, index: usize) -> Self {
        let mut a = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        a[index] = Complex64::new(1.0, 0.0);
        Self {
            num_qubits,
            amplitudes: a,
        }
    }

    /// `⊗_i |f_i⟩` for normalized single-qubit factors, qubit 0 first.
    pub fn product(factors: &[[Complex64; 2]]) -> Result<Self> {
        let amps = factors
            .iter()
            .fold(vec![Complex64::new(1.0, 0.0)], |acc, f| kron_vec(&acc, f));
        Self::from_unnormalized(amps)
    }

    /// `(|0…0⟩ + |1…1⟩)/√2`.
    pub fn ghz(num_qubits: usize) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut a = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        a[0] = Complex64::new(h, 0.0);
        *a.last_mut().unwrap() = Complex64::new(h, 0.0);
        Self {
            num_qubits,
            amplitudes: a,
        }
    }

    /// `|W_N⟩ = |D_N^(1)⟩`.
    pub fn w(num_qubits: usize) -> Self {
        super::symmetric::dicke_state(num_qubits, 1).expect("k = 1 is in range")
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn inner(&self, other: &Self) -> Complex64 {
        inner(&self.amplitudes, &other.amplitudes)
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.inner(other).norm_sqr()
    }

    /// Largest entrywise difference after removing the relative global phase.
    pub fn distance_up_to_phase(&self, other: &Self) -> f64 {
        let ov = self.inner(other);
        let phase = if ov.norm() > 0.0 {
            ov / ov.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a * phase - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn density(&self) -> DensityOperator {
        DensityOperator::from_parts_unchecked(
            (0..self.num_qubits).collect(),
            ComplexMatrix::outer(&self.amplitudes, &self.amplitudes),
        )
    }

    /// Reduced state of the qubits not in `traced`.
    pub fn partial_trace(&self, traced: &[usize]) -> Result<DensityOperator> {
        let (traced, kept) = split_qubits(self.num_qubits, traced)?;
        let m = reshape_bipartite(&self.amplitudes, self.num_qubits, &kept, &traced);
        Ok(DensityOperator::from_parts_unchecked(kept, &m * &m.adjoint()))
    }

    /// Reduced state of `kept` alone.
    pub fn reduced(&self, kept: &[usize]) -> Result<DensityOperator> {
        let (kept, traced) = split_qubits(self.num_qubits, kept)?;
        let m = reshape_bipartite(&self.amplitudes, self.num_qubits, &kept, &traced);
        Ok(DensityOperator::from_parts_unchecked(kept, &m * &m.adjoint()))
    }

    /// Single-qubit reduced density matrix as a plain 2×2 array.
    pub fn qubit_density(&self, q: usize) -> [[Complex64; 2]; 2] {
        let shift = self.num_qubits - 1 - q;
        let mut r = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (idx, a) in self.amplitudes.iter().enumerate() {
            if (idx >> shift) & 1 == 0 {
                let b = self.amplitudes[idx | (1 << shift)];
                r[0][0] += a.norm_sqr();
                r[1][1] += b.norm_sqr();
                r[0][1] += a * b.conj();
            }
        }
        r[1][0] = r[0][1].conj();
        r
    }

    pub fn schmidt(&self, cut: &[usize]) -> Result<SchmidtDecomposition> {
        schmidt_decompose(&self.amplitudes, self.num_qubits, cut)
    }

    /// Applies `⊗_i ops[i]` (2×2 matrices, qubit 0 first) without
    /// renormalizing.
    pub fn apply_local(&self, ops: &[ComplexMatrix]) -> Result<Vec<Complex64>> {
        if ops.len() != self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                found: ops.len(),
            });
        }
        let mut v = self.amplitudes.clone();
        for (q, op) in ops.iter().enumerate() {
            if op.rows() != 2 || op.cols() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    found: op.rows(),
                });
            }
            apply_single(&mut v, self.num_qubits, q, op);
        }
        Ok(v)
    }

    /// Applies a local unitary and keeps the result as a state.
    pub fn apply_local_unitary(&self, ops: &[ComplexMatrix]) -> Result<Self> {
        Self::from_unnormalized(self.apply_local(ops)?)
    }

    /// Exchanges qubits `a` and `b`.
    pub fn swap_qubits(&self, a: usize, b: usize) -> Self {
        let (sa, sb) = (self.num_qubits - 1 - a, self.num_qubits - 1 - b);
        let mut out = self.amplitudes.clone();
        for (idx, amp) in self.amplitudes.iter().enumerate() {
            let ba = (idx >> sa) & 1;
            let bb = (idx >> sb) & 1;
            let j = if ba != bb { idx ^ (1 << sa) ^ (1 << sb) } else { idx };
            out[j] = *amp;
        }
        Self {
            num_qubits: self.num_qubits,
            amplitudes: out,
        }
    }

    /// Amplitude of the basis state with the given bits, qubit 0 first.
    pub fn amplitude_by_bits(&self, bits: &[u8]) -> Complex64 {
        let idx = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        self.amplitudes[idx]
    }
}

pub(crate) fn apply_single(v: &mut [Complex64], num_qubits: usize, q: usize, op: &ComplexMatrix) {
    let shift = num_qubits - 1 - q;
    for idx in 0..v.len() {
        if (idx >> shift) & 1 == 0 {
            let j = idx | (1 << shift);
            let (a, b) = (v[idx], v[j]);
            v[idx] = op[(0, 0)] * a + op[(0, 1)] * b;
            v[j] = op[(1, 0)] * a + op[(1, 1)] * b;
        }
    }
}

fn qubit_count(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::DimensionMismatch {
            expected: len.next_power_of_two().max(2),
            found: len,
        });
    }
    Ok(len.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn construction_checks() {
        assert!(matches!(
            PureState::new(vec![c(1.0, 0.0), c(1.0, 0.0)]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(PureState::new(vec![c(1.0, 0.0); 3]).is_err());
        assert!(PureState::new(vec![c(1.0, 0.0)]).is_err());
        assert_eq!(
            PureState::from_unnormalized(vec![c(0.0, 0.0); 4]),
            Err(Error::ZeroState)
        );
        let s = PureState::from_unnormalized(vec![c(3.0, 0.0), c(0.0, 4.0)]).unwrap();
        assert!((s.amplitudes()[1] - c(0.0, 0.8)).norm() < 1e-15);
    }

    #[test]
    fn product_of_factors_orders_qubit_zero_first() {
        let s = PureState::product(&[[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]).unwrap();
        assert_eq!(s.amplitude_by_bits(&[0, 1]), c(1.0, 0.0));
    }

    #[test]
    fn swap_is_an_involution_and_moves_bits() {
        let s = PureState::basis(3, 0b100);
        let t = s.swap_qubits(0, 2);
        assert_eq!(t.amplitudes()[0b001], c(1.0, 0.0));
        assert_eq!(t.swap_qubits(0, 2), s);
    }

    #[test]
    fn local_operators_act_on_the_right_qubit() {
        let x = ComplexMatrix::from_row_major(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        let id = ComplexMatrix::identity(2);
        let s = PureState::basis(3, 0);
        let out = s.apply_local(&[id.clone(), x, id]).unwrap();
        assert_eq!(out[0b010], c(1.0, 0.0));
    }
}
