use thiserror::Error;

/// Errors produced by channel construction and the numeric kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix side {side} is not a perfect square")]
    NotPerfectSquare { side: usize },

    #[error("matrix is not Hermitian (deviation {deviation:.3e} exceeds tolerance {tol:.3e})")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("matrix is not positive semi-definite (min eigenvalue {min_eig:.3e})")]
    NotPositiveSemidefinite { min_eig: f64 },

    #[error("matrix has empty support; pseudo-inverse is undefined")]
    EmptySupport,

    #[error("not a density matrix: {reason}")]
    InvalidState { reason: String },

    #[error("noise strength p = {p} outside [0, 1]")]
    InvalidNoiseStrength { p: f64 },

    #[error("reference parameter epsilon = {epsilon} outside [0, 1]")]
    InvalidEpsilon { epsilon: f64 },

    #[error("dimension d = {dim} is not supported (need d >= 2)")]
    InvalidDimension { dim: usize },

    #[error("Bloch vector has norm {norm} > 1")]
    UnphysicalBloch { norm: f64 },

    #[error("degenerate reference: epsilon = 1 with p = 0 leaves no support to recover")]
    DegenerateReference,

    #[error("eigensolver failed: {0}")]
    Eigensolver(#[from] ndarray_linalg::error::LinalgError),

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),

    #[error("numeric failure at grid point (d={d}, p={p}{}, eps={epsilon}): {source}", p2.map(|q| format!(", p2={q}")).unwrap_or_default())]
    GridPoint {
        d: usize,
        p: f64,
        p2: Option<f64>,
        epsilon: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by a bad configuration rather than a numeric
    /// breakdown; drives the CLI exit code.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::InvalidConfig(_)
                | Error::InvalidNoiseStrength { .. }
                | Error::InvalidEpsilon { .. }
                | Error::InvalidDimension { .. }
        )
    }
}
