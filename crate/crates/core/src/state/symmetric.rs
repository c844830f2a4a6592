//! Permutation-symmetric states in the Dicke basis.

use num_complex::Complex64;

use super::pure::{PureState, NORM_TOL};
use crate::error::{Error, Result};
use crate::linalg::matrix::norm;

/// Largest transposition residual accepted when recognizing a symmetric state.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// `C(n, r)` as a float, zero when `r < 0` or `r > n`.
pub fn binomial(n: i64, r: i64) -> f64 {
    if r < 0 || n < 0 || r > n {
        return 0.0;
    }
    let r = r.min(n - r);
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64).round()
}

/// Symmetric N-qubit state `Σ_k d_k |D_N^(k)⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricState {
    num_qubits: usize,
    coefficients: Vec<Complex64>,
}

impl SymmetricState {
    /// `coefficients` holds `d_0 … d_N` and must be normalized.
    pub fn new(coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: coefficients.len(),
            });
        }
        let n = norm(&coefficients);
        if (n - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm: n });
        }
        Ok(Self {
            num_qubits: coefficients.len() - 1,
            coefficients,
        })
    }

    pub fn from_unnormalized(coefficients: Vec<Complex64>) -> Result<Self> {
        let c = crate::linalg::matrix::normalized(&coefficients).ok_or(Error::ZeroState)?;
        Self::new(c)
    }

    pub fn dicke(num_qubits: usize, k: usize) -> Result<Self> {
        check_excitations(num_qubits, k)?;
        let mut c = vec![Complex64::new(0.0, 0.0); num_qubits + 1];
        c[k] = Complex64::new(1.0, 0.0);
        Self::new(c)
    }

    pub fn ghz(num_qubits: usize) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut c = vec![Complex64::new(0.0, 0.0); num_qubits + 1];
        c[0] = Complex64::new(h, 0.0);
        c[num_qubits] = Complex64::new(h, 0.0);
        Self {
            num_qubits,
            coefficients: c,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// Expands into the full `2^N` amplitude vector.
    pub fn to_pure(&self) -> PureState {
        let n = self.num_qubits;
        let amps = (0..1usize << n)
            .map(|idx| {
                let k = idx.count_ones() as i64;
                self.coefficients[k as usize] / binomial(n as i64, k).sqrt()
            })
            .collect();
        PureState::from_unnormalized(amps).expect("normalized by construction")
    }

    /// Recognizes a symmetric pure state, reporting the worst adjacent
    /// transposition when it is not symmetric.
    pub fn from_pure(psi: &PureState) -> Result<Self> {
        let (pair, residual) = worst_transposition(psi);
        if residual > SYMMETRY_TOL {
            return Err(Error::NotSymmetric { pair, residual });
        }
        let n = psi.num_qubits();
        let mut d = vec![Complex64::new(0.0, 0.0); n + 1];
        for (idx, a) in psi.amplitudes().iter().enumerate() {
            let k = idx.count_ones() as usize;
            d[k] += a / binomial(n as i64, k as i64).sqrt();
        }
        Self::from_unnormalized(d)
    }
}

/// Largest `max_i |ψ_i − (P_{q,q+1} ψ)_i|` over adjacent transpositions.
pub fn worst_transposition(psi: &PureState) -> ((usize, usize), f64) {
    let n = psi.num_qubits();
    let mut worst = ((0, 1.min(n - 1)), 0.0);
    for q in 0..n.saturating_sub(1) {
        let swapped = psi.swap_qubits(q, q + 1);
        let r = psi
            .amplitudes()
            .iter()
            .zip(swapped.amplitudes())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        if r > worst.1 {
            worst = ((q, q + 1), r);
        }
    }
    worst
}

fn check_excitations(num_qubits: usize, k: usize) -> Result<()> {
    if k > num_qubits {
        return Err(Error::OutOfRange {
            what: "excitation count k",
            value: k as i64,
            range: format!("0..={num_qubits}"),
        });
    }
    Ok(())
}

/// `|D_N^(k)⟩`: equal-weight superposition of the `C(N, k)` basis states of
/// Hamming weight `k`.
pub fn dicke_state(num_qubits: usize, k: usize) -> Result<PureState> {
    Ok(SymmetricState::dicke(num_qubits, k)?.to_pure())
}
