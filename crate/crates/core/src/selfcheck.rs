//! Cross-validation of the simulator against closed-form expressions.
//!
//! Each check compares two independent routes and reports the worst deviation
//! seen against a fixed tolerance.

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use crate::linalg::ComplexMatrix;
use crate::rindler::{alice_rob_state, RindlerParam};
use crate::states::{werner, PureQubit, WernerParams};
use crate::sweep::linspace;
use crate::teleport::{fidelity_closed_form, run_protocol};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub points: usize,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.max_deviation < self.tolerance
    }
}

/// Closed-form matrices for the accelerated Werner channel and the receiver's
/// branch states, written out entry by entry.
pub mod closed_form {
    use super::*;

    fn real(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    /// Alice–Rob state in the basis |0_A 0_I⟩, |0_A 1_I⟩, |1_A 0_I⟩, |1_A 1_I⟩.
    pub fn alice_rob(p: f64, r: f64) -> ComplexMatrix {
        let (s, c) = r.sin_cos();
        let (s2, c2) = (s * s, c * c);
        let corner = 2.0 * p * c / 4.0;
        ComplexMatrix::from_real_rows(&[
            [(1.0 + p) * c2 / 4.0, 0.0, 0.0, corner],
            [0.0, (1.0 + s2 - p * c2) / 4.0, 0.0, 0.0],
            [0.0, 0.0, (1.0 - p) * c2 / 4.0, 0.0],
            [corner, 0.0, 0.0, (1.0 + s2 + p * c2) / 4.0],
        ])
        .expect("4x4")
    }

    /// Receiver's state after outcome (i, j), before correction.
    pub fn conditional(psi: &PureQubit, p: f64, r: f64, i: u8, j: u8) -> ComplexMatrix {
        let (s, c) = r.sin_cos();
        let (s2, c2) = (s * s, c * c);
        let d = psi.alpha2() - psi.beta2();
        let sign = if i == 0 { 1.0 } else { -1.0 };
        let (a, b) = (psi.alpha(), psi.beta());
        let (top, bottom, upper) = if j == 0 {
            ((1.0 + p * d) * c2, 1.0 + s2 - p * d * c2, a * b.conj())
        } else {
            ((1.0 - p * d) * c2, 1.0 + s2 + p * d * c2, a.conj() * b)
        };
        let off = upper * (2.0 * sign * p * c);
        ComplexMatrix::from_rows(&[[real(top), off], [off.conj(), real(bottom)]])
            .expect("2x2")
            .scale_real(0.5)
    }

    /// Receiver's state after outcome (i, j) and the correction Zⁱ Xʲ.
    pub fn corrected(psi: &PureQubit, p: f64, r: f64, j: u8) -> ComplexMatrix {
        if j == 0 {
            return conditional(psi, p, r, 0, 0);
        }
        let (s, c) = r.sin_cos();
        let (s2, c2) = (s * s, c * c);
        let d = psi.alpha2() - psi.beta2();
        let off = psi.alpha() * psi.beta().conj() * (2.0 * p * c);
        ComplexMatrix::from_rows(&[
            [real(1.0 + s2 + p * d * c2), off],
            [off.conj(), real((1.0 - p * d) * c2)],
        ])
        .expect("2x2")
        .scale_real(0.5)
    }
}

fn grid_psi(alpha2: f64, k: usize) -> PureQubit {
    // Deterministic, non-trivial phases on both amplitudes.
    let alpha = Complex64::from_polar(alpha2.sqrt(), 0.37 * k as f64);
    let beta = Complex64::from_polar((1.0 - alpha2).sqrt(), -1.1 + 0.53 * k as f64);
    PureQubit::new(alpha, beta).expect("unit vector")
}

fn params(p: f64, r: f64) -> (WernerParams, RindlerParam) {
    (
        WernerParams::new(p).expect("p in range"),
        RindlerParam::new(r).expect("r in range"),
    )
}

pub fn alice_rob_point() -> Check {
    let (wp, rp) = params(0.5, 0.3);
    let dev = alice_rob_state(wp, rp)
        .matrix()
        .max_abs_diff(&closed_form::alice_rob(0.5, 0.3));
    Check {
        name: "alice-rob state at (p, r) = (0.5, 0.3)",
        max_deviation: dev,
        tolerance: 1e-12,
        points: 1,
    }
}

pub fn alice_rob_grid() -> Check {
    let mut dev = 0.0_f64;
    let mut points = 0;
    for &p in &linspace(0.0, 1.0, 11) {
        for &r in &linspace(0.0, FRAC_PI_4, 11) {
            let (wp, rp) = params(p, r);
            dev = dev.max(
                alice_rob_state(wp, rp)
                    .matrix()
                    .max_abs_diff(&closed_form::alice_rob(p, r)),
            );
            points += 1;
        }
    }
    Check {
        name: "alice-rob state on 11x11 (p, r) grid",
        max_deviation: dev,
        tolerance: 1e-12,
        points,
    }
}

/// Runs `f` on the 5×5×5 (|α|², p, r) grid with varying phases.
fn over_fidelity_grid(mut f: impl FnMut(&PureQubit, f64, f64)) -> usize {
    let mut k = 0;
    for &alpha2 in &linspace(0.0, 1.0, 5) {
        for &p in &linspace(0.0, 1.0, 5) {
            for &r in &linspace(0.0, FRAC_PI_4, 5) {
                f(&grid_psi(alpha2, k), p, r);
                k += 1;
            }
        }
    }
    k
}

pub fn branch_states() -> Check {
    let mut dev = 0.0_f64;
    let points = over_fidelity_grid(|psi, p, r| {
        let report =
            run_protocol(psi, &alice_rob_state(params(p, r).0, params(p, r).1)).expect("valid channel");
        for o in &report.outcomes {
            let cond = closed_form::conditional(psi, p, r, o.i, o.j);
            let corr = closed_form::corrected(psi, p, r, o.j);
            dev = dev
                .max(o.conditional_state.matrix().max_abs_diff(&cond))
                .max(o.corrected_state.matrix().max_abs_diff(&corr));
        }
    });
    Check {
        name: "conditional and corrected branch states",
        max_deviation: dev,
        tolerance: 1e-12,
        points,
    }
}

pub fn fidelity_formula() -> Check {
    let mut dev = 0.0_f64;
    let points = over_fidelity_grid(|psi, p, r| {
        let (wp, rp) = params(p, r);
        let report = run_protocol(psi, &alice_rob_state(wp, rp)).expect("valid channel");
        let (f0, f1) = fidelity_closed_form(psi, wp, rp);
        for o in &report.outcomes {
            let expect = if o.j == 0 { f0 } else { f1 };
            dev = dev.max((o.fidelity - expect).abs());
        }
    });
    Check {
        name: "simulated vs closed-form fidelities on 5x5x5 grid",
        max_deviation: dev,
        tolerance: 1e-10,
        points,
    }
}

pub fn fidelity_gap() -> Check {
    let mut dev = 0.0_f64;
    let points = over_fidelity_grid(|psi, p, r| {
        let (wp, rp) = params(p, r);
        let report = run_protocol(psi, &alice_rob_state(wp, rp)).expect("valid channel");
        let gap = report.outcome(0, 1).fidelity - report.outcome(0, 0).fidelity;
        let expect = (psi.alpha2() - psi.beta2()) * r.sin().powi(2);
        dev = dev.max((gap - expect).abs());
    });
    Check {
        name: "F_i1 - F_i0 = (|a|^2 - |b|^2) sin^2 r",
        max_deviation: dev,
        tolerance: 1e-12,
        points,
    }
}

pub fn branch_probabilities() -> Check {
    let mut dev = 0.0_f64;
    let points = over_fidelity_grid(|psi, p, r| {
        let (wp, rp) = params(p, r);
        let report = run_protocol(psi, &alice_rob_state(wp, rp)).expect("valid channel");
        for o in &report.outcomes {
            dev = dev.max((o.probability - 0.25).abs());
        }
    });
    Check {
        name: "all outcome probabilities equal 1/4",
        max_deviation: dev,
        tolerance: 1e-12,
        points,
    }
}

pub fn werner_spectra() -> Check {
    let mut dev = 0.0_f64;
    let grid = linspace(0.0, 1.0, 11);
    for &p in &grid {
        let vals = werner(WernerParams::new(p).expect("p in range")).eigenvalues();
        let mut expect = [
            (1.0 - p) / 4.0,
            (1.0 - p) / 4.0,
            (1.0 - p) / 4.0,
            (1.0 + 3.0 * p) / 4.0,
        ];
        expect.sort_by(f64::total_cmp);
        for (v, e) in vals.iter().zip(expect) {
            dev = dev.max((v - e).abs());
        }
    }
    Check {
        name: "Werner spectrum {(1-p)/4 x3, (1+3p)/4}",
        max_deviation: dev,
        tolerance: 1e-12,
        points: grid.len(),
    }
}

pub fn inertial_fidelity() -> Check {
    let mut dev = 0.0_f64;
    let grid = linspace(0.0, 1.0, 11);
    for (k, &p) in grid.iter().enumerate() {
        let psi = grid_psi(0.15 + 0.07 * k as f64, k);
        let report =
            run_protocol(&psi, &werner(WernerParams::new(p).expect("p in range"))).expect("valid channel");
        dev = dev.max((report.min_fidelity - (1.0 + p) / 2.0).abs());
    }
    Check {
        name: "inertial fidelity (1 + p)/2",
        max_deviation: dev,
        tolerance: 1e-10,
        points: grid.len(),
    }
}

pub fn run_all() -> Vec<Check> {
    vec![
        alice_rob_point(),
        alice_rob_grid(),
        branch_states(),
        fidelity_formula(),
        fidelity_gap(),
        branch_probabilities(),
        werner_spectra(),
        inertial_fidelity(),
    ]
}
