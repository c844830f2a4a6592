use thiserror::Error;

/// Errors raised by the numerical and state-handling routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max |H - H^dagger| = {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("operator is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid qubit subset {subset:?} for a {num_qubits}-qubit system: {reason}")]
    InvalidSubset {
        subset: Vec<usize>,
        num_qubits: usize,
        reason: &'static str,
    },

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("{what} = {value} is invalid (expected {expected})")]
    InvalidParameter {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("mu = {re} + {im}i lies outside the parameter set S")]
    MuOutsideS { re: f64, im: f64 },

    #[error("all polynomial coefficients vanish")]
    ZeroPolynomial,

    #[error("state vector has zero norm")]
    ZeroState,

    #[error("state is not normalized (norm = {norm:.17})")]
    NotNormalized { norm: f64 },

    #[error("state is not permutation symmetric: transposition ({0}, {1}) leaves residual {residual:.3e}", pair.0, pair.1)]
    NotSymmetric { pair: (usize, usize), residual: f64 },

    #[error("expected a rank-2 density operator, found numerical rank {rank}")]
    RankNotTwo { rank: usize },

    #[error("fragility undefined for separable states")]
    ProductState,

    #[error("non-finite entry encountered")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, Error>;
