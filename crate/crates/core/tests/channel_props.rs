mod common;

use std::f64::consts::{FRAC_PI_4, PI};

use common::{assert_valid, density};
use noninertial_core::sweep::linspace;
use noninertial_core::{
    accelerate_second_qubit, alice_rob_state, fidelity_closed_form, min_fidelity, negativity,
    observe_post_teleport, run_protocol, werner, PureQubit, RindlerParam, WernerParams,
};
use proptest::prelude::*;

fn psi_strategy() -> impl Strategy<Value = PureQubit> {
    (0.0f64..=1.0, 0.0f64..2.0 * PI, 0.0f64..2.0 * PI).prop_map(|(a2, phase, global)| {
        PureQubit::from_population(a2, phase)
            .unwrap()
            .with_global_phase(global)
    })
}

fn channel(p: f64, r: f64) -> (WernerParams, RindlerParam) {
    (WernerParams::new(p).unwrap(), RindlerParam::new(r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn acceleration_keeps_states_valid(rho in density(2), r in 0.0f64..=FRAC_PI_4) {
        let out = accelerate_second_qubit(&rho, RindlerParam::new(r).unwrap()).unwrap();
        prop_assert_eq!(out.qubit_count(), 3);
        assert_valid(&out);
        assert_valid(&out.partial_trace(2).unwrap());
        // Qubit 0 is untouched.
        let before = rho.partial_trace(1).unwrap();
        let after = out.partial_trace(2).unwrap().partial_trace(1).unwrap();
        prop_assert!(before.matrix().max_abs_diff(after.matrix()) < 1e-14);
    }

    #[test]
    fn every_pipeline_stage_is_a_state(psi in psi_strategy(), p in 0.0f64..=1.0, r in 0.0f64..=FRAC_PI_4) {
        let (wp, rp) = channel(p, r);
        let w = werner(wp);
        assert_valid(&w);
        let ch = alice_rob_state(wp, rp);
        assert_valid(&ch);
        let report = run_protocol(&psi, &ch).unwrap();
        let mut total = 0.0;
        for o in &report.outcomes {
            assert_valid(&o.conditional_state);
            assert_valid(&o.corrected_state);
            prop_assert!((o.probability - 0.25).abs() < 1e-12);
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&o.fidelity));
            total += o.probability;
        }
        prop_assert!((total - 1.0).abs() < 1e-12);
        prop_assert!(report.min_fidelity <= report.avg_fidelity + 1e-15);
    }

    #[test]
    fn fidelity_ignores_global_phase(psi in psi_strategy(), p in 0.0f64..=1.0, r in 0.0f64..=FRAC_PI_4, g in 0.0f64..2.0 * PI) {
        let ch = alice_rob_state(channel(p, r).0, channel(p, r).1);
        let a = run_protocol(&psi, &ch).unwrap();
        let b = run_protocol(&psi.with_global_phase(g), &ch).unwrap();
        for (x, y) in a.outcomes.iter().zip(&b.outcomes) {
            prop_assert!((x.fidelity - y.fidelity).abs() < 1e-12);
        }
    }

    #[test]
    fn simulation_matches_closed_form(psi in psi_strategy(), p in 0.0f64..=1.0, r in 0.0f64..=FRAC_PI_4) {
        let (wp, rp) = channel(p, r);
        let report = run_protocol(&psi, &alice_rob_state(wp, rp)).unwrap();
        let (f0, f1) = fidelity_closed_form(&psi, wp, rp);
        for o in &report.outcomes {
            let expect = if o.j == 0 { f0 } else { f1 };
            prop_assert!((o.fidelity - expect).abs() < 1e-10);
        }
        prop_assert!((f1 - f0 - (psi.alpha2() - psi.beta2()) * r.sin().powi(2)).abs() < 1e-12);
    }

    #[test]
    fn inertial_results_are_outcome_independent(psi in psi_strategy(), p in 0.0f64..=1.0) {
        let (wp, rp) = channel(p, 0.0);
        let report = run_protocol(&psi, &alice_rob_state(wp, rp)).unwrap();
        for o in &report.outcomes {
            prop_assert!((o.fidelity - (1.0 + p) / 2.0).abs() < 1e-10);
            prop_assert!(o.corrected_state.matrix().max_abs_diff(report.outcomes[0].corrected_state.matrix()) < 1e-12);
        }
        for i in 0..2 {
            for j in 0..2 {
                let (_, f) = observe_post_teleport(&psi, i, j, rp).unwrap();
                prop_assert!((f - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn weak_channels_still_beat_one_half(psi in psi_strategy(), p in 0.0f64..=1.0 / 3.0) {
        let (wp, rp) = channel(p, 0.0);
        prop_assert!(min_fidelity(&psi, wp, rp) >= 0.5 - 1e-12);
    }
}

#[test]
fn negativity_degrades_monotonically_with_acceleration() {
    let rs = [0.0, PI / 16.0, PI / 8.0, 3.0 * PI / 16.0, FRAC_PI_4];
    let values: Vec<f64> = rs
        .iter()
        .map(|&r| {
            negativity(&alice_rob_state(
                WernerParams::new(1.0).unwrap(),
                RindlerParam::new(r).unwrap(),
            ))
        })
        .collect();
    assert!((values[0] - 1.0).abs() < 1e-12);
    for w in values.windows(2) {
        assert!(w[1] <= w[0] + 1e-12, "{values:?}");
    }
    assert!(values[4] > 0.0, "still entangled at r = pi/4: {values:?}");
}

#[test]
fn closed_form_fidelity_stays_physical_on_a_grid() {
    for &a2 in &linspace(0.0, 1.0, 11) {
        let psi = PureQubit::from_population(a2, 0.0).unwrap();
        for &p in &linspace(0.0, 1.0, 11) {
            for &r in &linspace(0.0, FRAC_PI_4, 11) {
                let (wp, rp) = channel(p, r);
                let (f0, f1) = fidelity_closed_form(&psi, wp, rp);
                assert!((0.0..=1.0 + 1e-12).contains(&f0), "{f0}");
                assert!((0.0..=1.0 + 1e-12).contains(&f1), "{f1}");
            }
        }
    }
}
