//! Teleportation of one qubit over a two-qubit channel, simulated on the full
//! three-qubit density matrix with every measurement branch enumerated.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron, kron_all, ComplexMatrix, DensityMatrix};
use crate::rindler::{alice_rob_state, mode_isometry, RindlerParam};
use crate::states::{cnot, correction, hadamard, pauli_x, pauli_z, PureQubit, WernerParams};

/// Branches below this probability are not normalized.
pub const MIN_BRANCH_PROBABILITY: f64 = 1e-14;

/// One of the four Z-basis outcomes on Alice's two qubits.
#[derive(Debug, Clone)]
pub struct TeleportOutcome {
    pub i: u8,
    pub j: u8,
    pub probability: f64,
    /// Receiver's qubit after Alice's measurement, before correction.
    pub conditional_state: DensityMatrix,
    /// `Zⁱ Xʲ · conditional · (Zⁱ Xʲ)†`.
    pub corrected_state: DensityMatrix,
    /// ⟨ψ| corrected |ψ⟩.
    pub fidelity: f64,
    /// Set when the branch probability was below [`MIN_BRANCH_PROBABILITY`];
    /// the states are then placeholders and the fidelity does not count.
    pub degenerate: bool,
}

#[derive(Debug, Clone)]
pub struct TeleportReport {
    /// Ordered (0,0), (0,1), (1,0), (1,1).
    pub outcomes: [TeleportOutcome; 4],
    pub min_fidelity: f64,
    /// Probability-weighted mean fidelity.
    pub avg_fidelity: f64,
}

impl TeleportReport {
    pub fn outcome(&self, i: u8, j: u8) -> &TeleportOutcome {
        &self.outcomes[usize::from(i) * 2 + usize::from(j)]
    }
}

/// Teleports `psi` over `channel` (qubit 0 held by Alice, qubit 1 by the receiver).
///
/// The joint state is ordered (ψ, channel-A, channel-B). Alice applies CNOT with
/// ψ as control and channel-A as target, then H on ψ, and measures both in the
/// Z basis.
pub fn run_protocol(psi: &PureQubit, channel: &DensityMatrix) -> Result<TeleportReport> {
    if channel.qubit_count() != 2 {
        return Err(Error::Dimension(format!(
            "teleportation channel must be a two-qubit state, got {} qubits",
            channel.qubit_count()
        )));
    }
    let id2 = ComplexMatrix::identity(2);
    let joint = psi.density().tensor(channel);
    let entangle = kron(&cnot(), &id2);
    let rotate = kron_all([&hadamard(), &id2, &id2]);
    let evolved = rotate.matmul(&entangle).sandwich(joint.matrix());

    let mut outcomes = Vec::with_capacity(4);
    for i in 0..2u8 {
        for j in 0..2u8 {
            outcomes.push(measure_branch(psi, &evolved, i, j)?);
        }
    }
    let outcomes: [TeleportOutcome; 4] = outcomes.try_into().expect("four branches");

    let live = || outcomes.iter().filter(|o| !o.degenerate);
    let min_fidelity = live().map(|o| o.fidelity).fold(f64::INFINITY, f64::min);
    let weight: f64 = live().map(|o| o.probability).sum();
    let avg_fidelity = live().map(|o| o.probability * o.fidelity).sum::<f64>() / weight;

    Ok(TeleportReport {
        outcomes,
        min_fidelity,
        avg_fidelity,
    })
}

fn measure_branch(psi: &PureQubit, evolved: &ComplexMatrix, i: u8, j: u8) -> Result<TeleportOutcome> {
    // ⟨ij| ϱ' |ij⟩ is the 2×2 block of rows/cols 2·(2i + j) .. +2.
    let offset = 2 * (2 * usize::from(i) + usize::from(j));
    let mut block = ComplexMatrix::zeros(2, 2);
    for a in 0..2 {
        for b in 0..2 {
            block[(a, b)] = evolved[(offset + a, offset + b)];
        }
    }
    let probability = block.trace().re;
    if probability < MIN_BRANCH_PROBABILITY {
        let placeholder = DensityMatrix::maximally_mixed(1);
        return Ok(TeleportOutcome {
            i,
            j,
            probability: probability.max(0.0),
            conditional_state: placeholder.clone(),
            corrected_state: placeholder,
            fidelity: 0.0,
            degenerate: true,
        });
    }
    let conditional_state = DensityMatrix::new(block.scale_real(1.0 / probability))?;
    let corrected_state = conditional_state.evolve(&correction(i == 1, j == 1))?;
    let fidelity = psi.expectation(corrected_state.matrix());
    Ok(TeleportOutcome {
        i,
        j,
        probability,
        conditional_state,
        corrected_state,
        fidelity,
        degenerate: false,
    })
}

/// Closed-form fidelities `(F_i0, F_i1)` for the Werner channel with an
/// accelerated receiver.
pub fn fidelity_closed_form(psi: &PureQubit, p: WernerParams, r: RindlerParam) -> (f64, f64) {
    let a2 = psi.alpha2();
    let b2 = psi.beta2();
    let p = p.p();
    let (s, c) = r.r().sin_cos();
    let c2 = c * c;
    let f_i0 = 0.5
        * (b2 * b2 * (2.0 - (1.0 - p) * c2)
            + a2 * a2 * (1.0 + p) * c2
            + 2.0 * a2 * b2 * (p * c * (2.0 - c) + 1.0));
    let f_i1 = f_i0 + (a2 - b2) * s * s;
    (f_i0, f_i1)
}

/// Worst-case fidelity over Alice's outcomes, from the full simulation.
pub fn min_fidelity(psi: &PureQubit, p: WernerParams, r: RindlerParam) -> f64 {
    run_protocol(psi, &alice_rob_state(p, r))
        .expect("Alice-Rob state is a valid two-qubit channel")
        .min_fidelity
}

/// The state an accelerated observer reconstructs when the already-teleported
/// state `Xʲ Zⁱ |ψ⟩` is re-expressed in Rindler modes, region II traced out and
/// the correction `Zⁱ Xʲ` applied. Returns the state and its fidelity with ψ.
pub fn observe_post_teleport(psi: &PureQubit, i: u8, j: u8, r: RindlerParam) -> Result<(DensityMatrix, f64)> {
    for bit in [i, j] {
        if bit > 1 {
            return Err(Error::Bit(bit));
        }
    }
    let mut encode = ComplexMatrix::identity(2);
    if j == 1 {
        encode = encode.matmul(&pauli_x());
    }
    if i == 1 {
        encode = encode.matmul(&pauli_z());
    }
    let phi = encode.matmul(&ComplexMatrix::column(&psi.ket()));
    let rindler = mode_isometry(r).matmul(&phi);
    let ket: Vec<Complex64> = (0..4).map(|k| rindler[(k, 0)]).collect();
    let rob = DensityMatrix::from_pure(&ket)?.partial_trace(1)?;
    let corrected = rob.evolve(&correction(i == 1, j == 1))?;
    let fidelity = psi.expectation(corrected.matrix());
    Ok((corrected, fidelity))
}
