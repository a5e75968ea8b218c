//! Teleportation of a qubit through a Werner (pseudo-entangled) channel whose
//! receiving half is held by a uniformly accelerated observer.
//!
//! The crate builds every state from first principles as a dense density
//! matrix: the Werner channel, the fermionic Minkowski→Rindler mode map on the
//! receiver's qubit, the full three-qubit teleportation circuit with all four
//! measurement branches, and the correlation measures (mutual information,
//! measurement-maximized classical correlation, discord, logarithmic
//! negativity) that characterize the channel.
//!
//! ```
//! use noninertial_core::{alice_rob_state, run_protocol, PureQubit, RindlerParam, WernerParams};
//!
//! let psi = PureQubit::from_population(0.7, 0.0)?;
//! let channel = alice_rob_state(WernerParams::new(0.8)?, RindlerParam::new(0.5)?);
//! let report = run_protocol(&psi, &channel)?;
//! assert!(report.min_fidelity < report.avg_fidelity);
//! # Ok::<(), noninertial_core::Error>(())
//! ```

pub mod error;
pub mod linalg;
pub mod measures;
pub mod optimize;
pub mod rindler;
pub mod selfcheck;
pub mod states;
pub mod sweep;
pub mod teleport;

pub use error::{Error, Result};
pub use linalg::{kron, ComplexMatrix, DensityMatrix};
pub use measures::{
    classical_correlation, classical_correlation_measuring, discord, discord_measuring, mutual_information,
    negativity, ClassicalCorrelation, CorrelationReport, MeasurementBasis, Side,
};
pub use rindler::{accelerate_second_qubit, alice_rob_state, mode_isometry, RindlerParam};
pub use states::{bell_phi_plus, gates, pure_qubit, werner, Gates, PureQubit, WernerParams};
pub use sweep::{run_sweep, write_csv, Figure, OutputFlags, SweepRow, SweepSpec};
pub use teleport::{
    fidelity_closed_form, min_fidelity, observe_post_teleport, run_protocol, TeleportOutcome, TeleportReport,
};
