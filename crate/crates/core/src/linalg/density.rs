use num_complex::Complex64;

use super::eigen::eigvals_hermitian;
use super::matrix::{ComplexMatrix, ZERO};
use crate::error::{Error, Result};

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues down to `-PSD_TOL` are rounding noise; anything lower is a real violation.
pub const PSD_TOL: f64 = 1e-10;

/// A validated multi-qubit density operator: Hermitian, unit trace, PSD.
///
/// Qubit ordering is big-endian: qubit 0 is the leftmost tensor factor and the
/// most significant bit of the basis index.
#[derive(Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    qubits: usize,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let qubits = qubit_count(&matrix)?;
        let dev = matrix.hermitian_deviation();
        if dev.is_nan() || dev > HERMITIAN_TOL {
            return Err(Error::NotHermitian(dev));
        }
        let tr = matrix.trace();
        if !((tr.re - 1.0).abs() <= TRACE_TOL && tr.im.abs() <= TRACE_TOL) {
            return Err(Error::Trace(tr.re));
        }
        let min = eigvals_hermitian(&matrix)?[0];
        if min < -PSD_TOL {
            return Err(Error::NotPositive(min));
        }
        Ok(Self { matrix, qubits })
    }

    /// Normalizes `ket` and returns |ψ⟩⟨ψ|.
    pub fn from_pure(ket: &[Complex64]) -> Result<Self> {
        let norm = ket.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        let ket: Vec<Complex64> = ket.iter().map(|z| z / norm).collect();
        Self::new(ComplexMatrix::outer(&ket))
    }

    /// `I / 2^qubits`.
    pub fn maximally_mixed(qubits: usize) -> Self {
        let dim = 1 << qubits;
        Self {
            matrix: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
            qubits,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn qubit_count(&self) -> usize {
        self.qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    pub fn tensor(&self, other: &DensityMatrix) -> DensityMatrix {
        DensityMatrix {
            matrix: super::kron(&self.matrix, &other.matrix),
            qubits: self.qubits + other.qubits,
        }
    }

    /// Traces out qubit `index`.
    pub fn partial_trace(&self, index: usize) -> Result<DensityMatrix> {
        if self.qubits == 1 {
            // Tracing the only qubit leaves a scalar, which is not a qubit state.
            return Err(Error::Subsystem {
                index,
                qubits: self.qubits,
            });
        }
        let reduced = partial_trace(&self.matrix, self.qubits, index)?;
        DensityMatrix::new(reduced)
    }

    /// Partial transpose of a two-qubit state over qubit `index`.
    pub fn partial_transpose(&self, index: usize) -> Result<ComplexMatrix> {
        if self.qubits != 2 {
            return Err(Error::Dimension(format!(
                "partial transpose is defined for two-qubit states, got {} qubits",
                self.qubits
            )));
        }
        partial_transpose(&self.matrix, index)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        eigvals_hermitian(&self.matrix).expect("validated density matrix is Hermitian")
    }

    /// Von Neumann entropy in bits.
    pub fn entropy(&self) -> f64 {
        entropy_of_spectrum(&self.eigenvalues())
    }

    /// `U ρ U†` for a unitary of matching dimension.
    pub fn evolve(&self, unitary: &ComplexMatrix) -> Result<DensityMatrix> {
        if unitary.rows() != self.dim() || unitary.cols() != self.dim() {
            return Err(Error::Dimension(format!(
                "unitary is {}x{}, state is {}x{}",
                unitary.rows(),
                unitary.cols(),
                self.dim(),
                self.dim()
            )));
        }
        DensityMatrix::new(unitary.sandwich(&self.matrix))
    }
}

impl std::fmt::Debug for DensityMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DensityMatrix({} qubits) {:?}", self.qubits, self.matrix)
    }
}

fn qubit_count(m: &ComplexMatrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "density matrix must be square, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let dim = m.rows();
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::Dimension(format!(
            "dimension {dim} is not a power of two >= 2"
        )));
    }
    Ok(dim.trailing_zeros() as usize)
}

/// Traces qubit `index` out of any `2^qubits`-square matrix. Linear in `m`.
pub fn partial_trace(m: &ComplexMatrix, qubits: usize, index: usize) -> Result<ComplexMatrix> {
    if index >= qubits {
        return Err(Error::Subsystem { index, qubits });
    }
    let dim = 1usize << qubits;
    if !m.is_square() || m.rows() != dim {
        return Err(Error::Dimension(format!(
            "expected {dim}x{dim} for {qubits} qubits, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    // Big-endian: qubit `index` is bit (qubits - 1 - index) of the basis label.
    let bit = qubits - 1 - index;
    let low_mask = (1usize << bit) - 1;
    let expand = |reduced: usize, value: usize| {
        let high = reduced >> bit;
        let low = reduced & low_mask;
        (high << (bit + 1)) | (value << bit) | low
    };
    let out_dim = dim / 2;
    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    for i in 0..out_dim {
        for j in 0..out_dim {
            let mut acc = ZERO;
            for k in 0..2 {
                acc += m[(expand(i, k), expand(j, k))];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Partial transpose of a 4×4 matrix over qubit `index` (0 or 1).
pub fn partial_transpose(m: &ComplexMatrix, index: usize) -> Result<ComplexMatrix> {
    if !m.is_square() || m.rows() != 4 {
        return Err(Error::Dimension(format!(
            "partial transpose expects 4x4, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if index > 1 {
        return Err(Error::Subsystem { index, qubits: 2 });
    }
    let mut out = ComplexMatrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            for a2 in 0..2 {
                for b2 in 0..2 {
                    let (src_row, src_col) = if index == 0 {
                        (a2 * 2 + b, a * 2 + b2)
                    } else {
                        (a * 2 + b2, a2 * 2 + b)
                    };
                    out[(a * 2 + b, a2 * 2 + b2)] = m[(src_row, src_col)];
                }
            }
        }
    }
    Ok(out)
}

/// Shannon entropy (bits) of a spectrum, with `0 log 0 = 0`.
///
/// Slightly negative eigenvalues (down to `-PSD_TOL`) count as zero.
pub fn entropy_of_spectrum(eigenvalues: &[f64]) -> f64 {
    let h: f64 = eigenvalues
        .iter()
        // Non-positive eigenvalues, including rounding noise above -PSD_TOL,
        // contribute nothing.
        .filter(|&&l| l > 0.0)
        .map(|&l| -l * l.log2())
        .sum();
    h.max(0.0)
}

pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    rho.entropy()
}
