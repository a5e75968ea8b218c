//! Correlation quantifiers for two-qubit states: mutual information, classical
//! correlation maximized over projective measurements, quantum discord and
//! logarithmic negativity. All values are in bits.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::linalg::{eigvals_hermitian, entropy_of_spectrum, ComplexMatrix, DensityMatrix};
use crate::optimize::{self, SimplexOptions};

/// Resolution of the coarse (θ, φ) grid that seeds the simplex refinement.
pub const GRID_POINTS: usize = 64;
/// Simplex convergence threshold on the spread of vertex values.
pub const SIMPLEX_SPREAD: f64 = 1e-9;
/// Measurement branches lighter than this contribute nothing to the average entropy.
pub const MIN_OUTCOME_PROBABILITY: f64 = 1e-14;
/// Discord values this far below zero are rounding and reported as 0.
pub const DISCORD_CLAMP: f64 = 1e-9;
/// Negativities smaller than this are reported as 0.
pub const NEGATIVITY_CLAMP: f64 = 1e-10;

/// Which qubit of a two-qubit state is measured. Discord is asymmetric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::A => f.write_str("A"),
            Side::B => f.write_str("B"),
        }
    }
}

/// Rank-1 projective measurement {|m⟩⟨m|, I − |m⟩⟨m|} with
/// |m⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementBasis {
    /// Maps arbitrary angles onto θ ∈ [0, π], φ ∈ [0, 2π) without changing the
    /// projector pair.
    pub fn canonical(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(TAU);
        let mut phi = phi;
        if theta > PI {
            // |m(2π − θ, φ + π)⟩ = −|m(θ, φ)⟩
            theta = TAU - theta;
            phi += PI;
        }
        Self {
            theta,
            phi: phi.rem_euclid(TAU),
        }
    }

    pub fn ket(&self) -> [Complex64; 2] {
        let (s, c) = (self.theta / 2.0).sin_cos();
        [Complex64::new(c, 0.0), Complex64::from_polar(s, self.phi)]
    }

    pub fn projectors(&self) -> [ComplexMatrix; 2] {
        let p0 = ComplexMatrix::outer(&self.ket());
        let p1 = &ComplexMatrix::identity(2) - &p0;
        [p0, p1]
    }
}

/// Outcome of the measurement maximization.
#[derive(Debug, Clone, Copy)]
pub struct ClassicalCorrelation {
    pub value: f64,
    pub argmax: MeasurementBasis,
    /// Best value on the coarse grid, before refinement.
    pub grid_value: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct CorrelationReport {
    pub measured_side: Side,
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub discord: f64,
    pub negativity: f64,
    pub optimizer_evals: usize,
    pub optimizer_argmax: MeasurementBasis,
}

fn assert_two_qubit(rho: &DensityMatrix) {
    assert_eq!(
        rho.qubit_count(),
        2,
        "correlation measures need a two-qubit state"
    );
}

/// I(A:B) = S(ρ_A) + S(ρ_B) − S(ρ).
pub fn mutual_information(rho: &DensityMatrix) -> f64 {
    assert_two_qubit(rho);
    let s_a = rho.partial_trace(1).expect("two qubits").entropy();
    let s_b = rho.partial_trace(0).expect("two qubits").entropy();
    (s_a + s_b - rho.entropy()).max(0.0)
}

/// Exchanges the two qubits of a 4×4 matrix.
fn swap_qubits(m: &ComplexMatrix) -> ComplexMatrix {
    let swap = |k: usize| ((k & 1) << 1) | (k >> 1);
    let mut out = ComplexMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            out[(swap(i), swap(j))] = m[(i, j)];
        }
    }
    out
}

/// Evaluates J(θ, φ) = S(ρ_A) − Σ_k q_k S(ρ_{A|k}) for measurements on qubit B.
struct MeasuredInformation {
    rho: ComplexMatrix,
    unmeasured_entropy: f64,
}

impl MeasuredInformation {
    fn new(rho: &DensityMatrix, side: Side) -> Self {
        assert_two_qubit(rho);
        let rho = match side {
            Side::B => rho.matrix().clone(),
            Side::A => swap_qubits(rho.matrix()),
        };
        let unmeasured = crate::linalg::partial_trace(&rho, 2, 1).expect("4x4");
        let unmeasured_entropy =
            entropy_of_spectrum(&eigvals_hermitian(&unmeasured).expect("Hermitian marginal"));
        Self {
            rho,
            unmeasured_entropy,
        }
    }

    fn eval(&self, basis: MeasurementBasis) -> f64 {
        let mut conditional = 0.0;
        for proj in basis.projectors() {
            // Tr_B[(I ⊗ Π) ρ (I ⊗ Π)] = Tr_B[(I ⊗ Π) ρ] for a projector Π.
            let mut reduced = ComplexMatrix::zeros(2, 2);
            for a in 0..2 {
                for a2 in 0..2 {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for b in 0..2 {
                        for b2 in 0..2 {
                            acc += proj[(b2, b)] * self.rho[(2 * a + b, 2 * a2 + b2)];
                        }
                    }
                    reduced[(a, a2)] = acc;
                }
            }
            let q = reduced.trace().re;
            if q < MIN_OUTCOME_PROBABILITY {
                continue;
            }
            let spectrum = eigvals_hermitian(&reduced.hermitian_part().scale_real(1.0 / q))
                .expect("Hermitian conditional state");
            let clamped: Vec<f64> = spectrum.into_iter().map(|l| l.max(0.0)).collect();
            conditional += q * entropy_of_spectrum(&clamped);
        }
        self.unmeasured_entropy - conditional
    }
}

/// C(A:B) with the measurement on qubit B.
pub fn classical_correlation(rho: &DensityMatrix) -> ClassicalCorrelation {
    classical_correlation_measuring(rho, Side::B)
}

/// Maximizes J over projective measurements on `side`: exhaustive 64×64 grid in
/// (θ, φ), then Nelder–Mead from the best grid point. The refined value never
/// falls below the grid value.
pub fn classical_correlation_measuring(rho: &DensityMatrix, side: Side) -> ClassicalCorrelation {
    let objective = MeasuredInformation::new(rho, side);
    let n = GRID_POINTS;
    let d_theta = PI / (n - 1) as f64;
    let d_phi = TAU / n as f64;

    let mut best = (f64::NEG_INFINITY, MeasurementBasis { theta: 0.0, phi: 0.0 });
    for k in 0..n {
        for l in 0..n {
            let basis = MeasurementBasis {
                theta: k as f64 * d_theta,
                phi: l as f64 * d_phi,
            };
            let v = objective.eval(basis);
            if v > best.0 {
                best = (v, basis);
            }
        }
    }
    let (grid_value, grid_argmax) = best;

    let refined = optimize::maximize(
        |x| {
            objective.eval(MeasurementBasis {
                theta: x[0],
                phi: x[1],
            })
        },
        [grid_argmax.theta, grid_argmax.phi],
        [d_theta, d_phi],
        SimplexOptions {
            value_spread: SIMPLEX_SPREAD,
            ..Default::default()
        },
    );
    let evaluations = n * n + refined.evaluations;

    let (value, argmax) = if refined.value > grid_value {
        (
            refined.value,
            MeasurementBasis::canonical(refined.x[0], refined.x[1]),
        )
    } else {
        (grid_value, grid_argmax)
    };
    ClassicalCorrelation {
        value: value.max(0.0),
        argmax,
        grid_value,
        evaluations,
    }
}

/// Discord with the measurement on qubit B.
pub fn discord(rho: &DensityMatrix) -> CorrelationReport {
    discord_measuring(rho, Side::B)
}

/// D = I − C, measuring `side`, bundled with the negativity.
pub fn discord_measuring(rho: &DensityMatrix, side: Side) -> CorrelationReport {
    let mutual = mutual_information(rho);
    let classical = classical_correlation_measuring(rho, side);
    let mut discord = mutual - classical.value;
    if (-DISCORD_CLAMP..0.0).contains(&discord) {
        discord = 0.0;
    }
    CorrelationReport {
        measured_side: side,
        mutual_information: mutual,
        classical_correlation: classical.value,
        discord,
        negativity: negativity(rho),
        optimizer_evals: classical.evaluations,
        optimizer_argmax: classical.argmax,
    }
}

/// log₂ ‖ρ^{T_B}‖₁.
pub fn negativity(rho: &DensityMatrix) -> f64 {
    assert_two_qubit(rho);
    let pt = rho.partial_transpose(1).expect("two qubits");
    let trace_norm: f64 = eigvals_hermitian(&pt)
        .expect("partial transpose of a Hermitian matrix is Hermitian")
        .iter()
        .map(|l| l.abs())
        .sum();
    let n = trace_norm.log2();
    if n.abs() < NEGATIVITY_CLAMP {
        0.0
    } else {
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{bell_phi_plus, werner, WernerParams};

    fn w(p: f64) -> DensityMatrix {
        werner(WernerParams::new(p).unwrap())
    }

    fn product() -> DensityMatrix {
        let a = DensityMatrix::from_pure(&[Complex64::new(0.8, 0.0), Complex64::new(0.0, 0.6)]).unwrap();
        let b = DensityMatrix::new(
            ComplexMatrix::from_rows(&[
                [Complex64::new(0.3, 0.0), Complex64::new(0.1, 0.1)],
                [Complex64::new(0.1, -0.1), Complex64::new(0.7, 0.0)],
            ])
            .unwrap(),
        )
        .unwrap();
        a.tensor(&b)
    }

    // H of the Werner spectrum at p = 0.5: {1/8 ×3, 5/8}.
    const WERNER_HALF_ENTROPY: f64 = 1.548_794_940_695_398;

    #[test]
    fn werner_half_entropy_value() {
        let h: f64 = -(3.0 * 0.125 * 0.125f64.log2() + 0.625 * 0.625f64.log2());
        assert!((h - WERNER_HALF_ENTROPY).abs() < 1e-14);
        assert!((w(0.5).entropy() - WERNER_HALF_ENTROPY).abs() < 1e-12);
    }

    #[test]
    fn mutual_information_examples() {
        assert!(mutual_information(&product()).abs() < 1e-12);
        assert!((mutual_information(&bell_phi_plus()) - 2.0).abs() < 1e-12);
        assert!((mutual_information(&w(0.5)) - (2.0 - WERNER_HALF_ENTROPY)).abs() < 1e-12);
    }

    #[test]
    fn classical_correlation_examples() {
        assert!(classical_correlation(&product()).value.abs() < 1e-9);
        let bell = classical_correlation(&bell_phi_plus());
        assert!((bell.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn discord_examples() {
        let d = discord(&product());
        assert!(d.discord.abs() <= 1e-6);
        let bell = discord(&bell_phi_plus());
        assert!((bell.discord - 1.0).abs() < 1e-4);
        assert!((bell.negativity - 1.0).abs() < 1e-12);
        let sep = discord(&w(1.0 / 3.0));
        assert!(sep.discord > 0.05);
        assert_eq!(sep.negativity, 0.0);
    }

    #[test]
    fn report_invariants() {
        for side in [Side::A, Side::B] {
            let rep = discord_measuring(&w(0.7), side);
            assert!((rep.discord - (rep.mutual_information - rep.classical_correlation)).abs() < 1e-12);
            assert!(rep.classical_correlation <= rep.mutual_information + 1e-7);
            assert!(rep.optimizer_evals >= GRID_POINTS * GRID_POINTS);
        }
    }

    #[test]
    fn negativity_examples() {
        assert!((negativity(&bell_phi_plus()) - 1.0).abs() < 1e-12);
        for p in [0.0, 0.1, 0.3, 1.0 / 3.0] {
            assert_eq!(negativity(&w(p)), 0.0, "p = {p}");
        }
        for p in [0.34f64, 0.5, 0.9, 1.0] {
            let expect = ((1.0 + 3.0 * p) / 2.0).log2();
            assert!((negativity(&w(p)) - expect).abs() < 1e-12, "p = {p}");
        }
    }

    #[test]
    fn basis_projectors_resolve_identity() {
        let b = MeasurementBasis { theta: 1.1, phi: 4.0 };
        let [p0, p1] = b.projectors();
        let sum = &p0 + &p1;
        assert!(sum.max_abs_diff(&ComplexMatrix::identity(2)) <= 1e-14);
        for p in [&p0, &p1] {
            assert!(p.matmul(p).max_abs_diff(p) <= 1e-14);
        }
    }

    #[test]
    fn canonical_angles_keep_projector() {
        for (t, f) in [(4.0, 1.0), (-0.5, 7.0), (2.0 * TAU + 0.3, -1.0)] {
            let raw = MeasurementBasis { theta: t, phi: f };
            let can = MeasurementBasis::canonical(t, f);
            assert!((0.0..=PI).contains(&can.theta));
            assert!((0.0..TAU).contains(&can.phi));
            assert!(raw.projectors()[0].max_abs_diff(&can.projectors()[0]) < 1e-12);
        }
    }

    #[test]
    fn swap_exchanges_marginals() {
        let rho = product();
        let swapped = DensityMatrix::new(swap_qubits(rho.matrix())).unwrap();
        assert!(
            swapped
                .partial_trace(1)
                .unwrap()
                .matrix()
                .max_abs_diff(rho.partial_trace(0).unwrap().matrix())
                < 1e-15
        );
    }
}
