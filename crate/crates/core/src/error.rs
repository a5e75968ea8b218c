use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("{name} must be finite, got {value}")]
    NotFinite { name: &'static str, value: f64 },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("subsystem index {index} out of range for a {qubits}-qubit state")]
    Subsystem { index: usize, qubits: usize },

    #[error("matrix is not Hermitian (max |M - M^dag| = {0:e})")]
    NotHermitian(f64),

    #[error("trace is {0}, expected 1")]
    Trace(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("state vector has zero norm")]
    ZeroVector,

    #[error("measurement bit must be 0 or 1, got {0}")]
    Bit(u8),

    #[error("empty grid for {0}")]
    EmptyGrid(&'static str),
}

impl Error {
    pub(crate) fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<f64> {
        if !value.is_finite() {
            return Err(Error::NotFinite { name, value });
        }
        if value < min || value > max {
            return Err(Error::OutOfRange {
                name,
                value,
                min,
                max,
            });
        }
        Ok(value)
    }
}
