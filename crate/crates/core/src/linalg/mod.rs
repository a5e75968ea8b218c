//! Dense complex linear algebra for 1- to 3-qubit states.

mod density;
mod eigen;
mod matrix;

pub use density::{
    entropy_of_spectrum, partial_trace, partial_transpose, von_neumann_entropy, DensityMatrix, PSD_TOL,
};
pub use eigen::{eigh, eigvals_hermitian, HermitianEigen};
pub use matrix::{kron, kron_all, ComplexMatrix};
