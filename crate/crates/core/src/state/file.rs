//! JSON state documents.
//!
//! ```json
//! { "num_qubits": 3, "amplitudes": [[0.7071067811865476, 0], [0, 0], …] }
//! { "num_qubits": 3, "dicke": [[0, 0], [1, 0], [0, 0], [0, 0]] }
//! ```
//!
//! Exactly one of `amplitudes` (length `2^N`) or `dicke` (length `N + 1`)
//! must be present. Each entry is a `[real, imaginary]` pair.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{PureState, SymmetricState};
use crate::linalg::matrix::norm;

const NORM_TOL: f64 = super::pure::NORM_TOL;

#[derive(Debug, Error)]
pub enum StateFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid state document: {0}")]
    Invalid(String),
    #[error("state is not normalized: norm = {norm:.17} (pass --renormalize to rescale)")]
    NotNormalized { norm: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateDocument {
    pub num_qubits: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dicke: Option<Vec<[f64; 2]>>,
}

/// A parsed state; `symmetric` is set when the document used the Dicke basis.
#[derive(Debug, Clone)]
pub struct LoadedState {
    pub pure: PureState,
    pub symmetric: Option<SymmetricState>,
}

impl StateDocument {
    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            num_qubits: psi.num_qubits(),
            amplitudes: Some(psi.amplitudes().iter().map(|z| [z.re, z.im]).collect()),
            dicke: None,
        }
    }

    pub fn from_symmetric(s: &SymmetricState) -> Self {
        Self {
            num_qubits: s.num_qubits(),
            amplitudes: None,
            dicke: Some(s.coefficients().iter().map(|z| [z.re, z.im]).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn into_state(self, renormalize: bool) -> Result<LoadedState, StateFileError> {
        let n = self.num_qubits;
        if n == 0 || n > 24 {
            return Err(StateFileError::Invalid(format!(
                "num_qubits = {n} outside 1..=24"
            )));
        }
        let (values, expected, symmetric) = match (self.amplitudes, self.dicke) {
            (Some(a), None) => (a, 1usize << n, false),
            (None, Some(d)) => (d, n + 1, true),
            (Some(_), Some(_)) => {
                return Err(StateFileError::Invalid(
                    "both `amplitudes` and `dicke` given".into(),
                ))
            }
            (None, None) => {
                return Err(StateFileError::Invalid(
                    "one of `amplitudes` or `dicke` is required".into(),
                ))
            }
        };
        if values.len() != expected {
            return Err(StateFileError::Invalid(format!(
                "expected {expected} coefficients for {n} qubits, found {}",
                values.len()
            )));
        }
        let mut coeffs: Vec<Complex64> = values.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
        let nrm = norm(&coeffs);
        if nrm == 0.0 {
            return Err(StateFileError::Invalid("zero vector".into()));
        }
        if (nrm - 1.0).abs() > NORM_TOL {
            if !renormalize {
                return Err(StateFileError::NotNormalized { norm: nrm });
            }
            coeffs.iter_mut().for_each(|z| *z /= nrm);
        }
        let invalid = |e: crate::Error| StateFileError::Invalid(e.to_string());
        if symmetric {
            let s = SymmetricState::new(coeffs).map_err(invalid)?;
            Ok(LoadedState {
                pure: s.to_pure(),
                symmetric: Some(s),
            })
        } else {
            Ok(LoadedState {
                pure: PureState::new(coeffs).map_err(invalid)?,
                symmetric: None,
            })
        }
    }
}

pub fn parse_state(text: &str, renormalize: bool) -> Result<LoadedState, StateFileError> {
    let doc: StateDocument = serde_json::from_str(text).map_err(|e| StateFileError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.into_state(renormalize)
}

pub fn load_state(path: &Path, renormalize: bool) -> Result<LoadedState, StateFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| StateFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_state(&text, renormalize)
}
