//! Minkowski → Rindler mode map for a fermionic qubit seen by a uniformly
//! accelerated observer.
//!
//! A Minkowski qubit is mapped into region I ⊗ region II:
//!
//! ```text
//! |0⟩_M -> cos r |0⟩_I|0⟩_II + sin r |1⟩_I|1⟩_II
//! |1⟩_M -> |1⟩_I|0⟩_II
//! ```
//!
//! Region II is inaccessible to the accelerated receiver and is traced out right
//! after the map is applied.

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron, ComplexMatrix, DensityMatrix};
use crate::states::{werner, WernerParams};

/// Acceleration angle `r ∈ [0, π/4]`; `r = 0` is the inertial limit.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RindlerParam(f64);

impl RindlerParam {
    pub const MAX: f64 = FRAC_PI_4;

    pub fn new(r: f64) -> Result<Self> {
        Error::check_range("r", r, 0.0, Self::MAX).map(Self)
    }

    pub fn inertial() -> Self {
        Self(0.0)
    }

    pub fn r(self) -> f64 {
        self.0
    }
}

/// The 4×2 isometry V with columns V|0⟩_M and V|1⟩_M in the basis
/// `|0_I 0_II⟩, |0_I 1_II⟩, |1_I 0_II⟩, |1_I 1_II⟩`.
pub fn mode_isometry(r: RindlerParam) -> ComplexMatrix {
    let (s, c) = r.r().sin_cos();
    let mut v = ComplexMatrix::zeros(4, 2);
    v[(0, 0)] = Complex64::new(c, 0.0);
    v[(3, 0)] = Complex64::new(s, 0.0);
    v[(2, 1)] = Complex64::new(1.0, 0.0);
    v
}

/// `(I ⊗ V) ρ (I ⊗ V)†`: the second qubit of a two-qubit state is accelerated.
///
/// Output qubits are ordered (A, I, II).
pub fn accelerate_second_qubit(rho: &DensityMatrix, r: RindlerParam) -> Result<DensityMatrix> {
    if rho.qubit_count() != 2 {
        return Err(Error::Dimension(format!(
            "expected a two-qubit state, got {} qubits",
            rho.qubit_count()
        )));
    }
    let w = kron(&ComplexMatrix::identity(2), &mode_isometry(r));
    DensityMatrix::new(w.sandwich(rho.matrix()))
}

/// Alice–Rob state: the Werner channel with Bob's half accelerated and the
/// region-II mode traced out.
pub fn alice_rob_state(p: WernerParams, r: RindlerParam) -> DensityMatrix {
    accelerate_second_qubit(&werner(p), r)
        .and_then(|tri| tri.partial_trace(2))
        .expect("accelerated Werner state is valid")
}
