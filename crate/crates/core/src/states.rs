//! Pure qubits, the Bell state |Φ⁺⟩, the Werner channel and the gate set used by
//! the protocol.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix};

/// Normalized single-qubit amplitude pair α|0⟩ + β|1⟩.
///
/// The global phase is kept as given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureQubit {
    alpha: Complex64,
    beta: Complex64,
}

impl PureQubit {
    /// Normalizes `(alpha, beta)`; fails on the zero vector.
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            alpha: alpha / norm,
            beta: beta / norm,
        })
    }

    /// `√alpha2 |0⟩ + e^{iφ} √(1 − alpha2) |1⟩`.
    pub fn from_population(alpha2: f64, phase: f64) -> Result<Self> {
        let alpha2 = Error::check_range("alpha2", alpha2, 0.0, 1.0)?;
        if !phase.is_finite() {
            return Err(Error::NotFinite {
                name: "phase",
                value: phase,
            });
        }
        Self::new(
            Complex64::new(alpha2.sqrt(), 0.0),
            Complex64::from_polar((1.0 - alpha2).sqrt(), phase),
        )
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// |α|².
    pub fn alpha2(&self) -> f64 {
        self.alpha.norm_sqr()
    }

    /// |β|².
    pub fn beta2(&self) -> f64 {
        self.beta.norm_sqr()
    }

    pub fn ket(&self) -> [Complex64; 2] {
        [self.alpha, self.beta]
    }

    /// Same state times a global phase factor.
    pub fn with_global_phase(&self, phase: f64) -> Self {
        let u = Complex64::from_polar(1.0, phase);
        Self {
            alpha: self.alpha * u,
            beta: self.beta * u,
        }
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix::from_pure(&self.ket()).expect("normalized ket")
    }

    /// ⟨ψ|ρ|ψ⟩ for a one-qubit operator.
    pub fn expectation(&self, rho: &ComplexMatrix) -> f64 {
        let k = self.ket();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..2 {
            for j in 0..2 {
                acc += k[i].conj() * rho[(i, j)] * k[j];
            }
        }
        acc.re
    }
}

pub fn pure_qubit(alpha: Complex64, beta: Complex64) -> Result<PureQubit> {
    PureQubit::new(alpha, beta)
}

/// Werner mixing weight `p ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct WernerParams(f64);

impl WernerParams {
    pub fn new(p: f64) -> Result<Self> {
        Error::check_range("p", p, 0.0, 1.0).map(Self)
    }

    pub fn p(self) -> f64 {
        self.0
    }
}

/// (|00⟩ + |11⟩)/√2.
pub fn phi_plus_ket() -> [Complex64; 4] {
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let z = Complex64::new(0.0, 0.0);
    [s, z, z, s]
}

pub fn bell_phi_plus() -> DensityMatrix {
    DensityMatrix::from_pure(&phi_plus_ket()).expect("normalized ket")
}

/// `(1 − p)/4 · I + p |Φ⁺⟩⟨Φ⁺|`.
pub fn werner(params: WernerParams) -> DensityMatrix {
    let p = params.p();
    let noise = ComplexMatrix::identity(4).scale_real((1.0 - p) / 4.0);
    let bell = bell_phi_plus().into_matrix().scale_real(p);
    DensityMatrix::new(&noise + &bell).expect("Werner state is a valid density matrix")
}

/// The protocol's gate set. CNOT takes qubit 0 as control.
#[derive(Debug, Clone)]
pub struct Gates {
    pub x: ComplexMatrix,
    pub z: ComplexMatrix,
    pub h: ComplexMatrix,
    pub cnot: ComplexMatrix,
}

pub fn gates() -> Gates {
    Gates {
        x: pauli_x(),
        z: pauli_z(),
        h: hadamard(),
        cnot: cnot(),
    }
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]).expect("2x2")
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_diag(&[1.0, -1.0])
}

pub fn hadamard() -> ComplexMatrix {
    let s = FRAC_1_SQRT_2;
    ComplexMatrix::from_real_rows(&[[s, s], [s, -s]]).expect("2x2")
}

pub fn cnot() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0],
    ])
    .expect("4x4")
}

/// `Zⁱ Xʲ`, the receiver's correction for outcome (i, j).
pub fn correction(i: bool, j: bool) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(2);
    if i {
        u = u.matmul(&pauli_z());
    }
    if j {
        u = u.matmul(&pauli_x());
    }
    u
}
