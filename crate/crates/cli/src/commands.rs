use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use noninertial_core::sweep::{format_sig12, GridSpec};
use noninertial_core::{
    alice_rob_state, discord_measuring, mutual_information, negativity, run_protocol, run_sweep, selfcheck,
    write_csv, Figure, OutputFlags, PureQubit, RindlerParam, Side, SweepSpec, WernerParams,
};

use crate::{MeasureSide, Resolved};

fn sides(side: MeasureSide) -> &'static [Side] {
    match side {
        MeasureSide::A => &[Side::A],
        MeasureSide::B => &[Side::B],
        MeasureSide::Both => &[Side::B, Side::A],
    }
}

fn werner_param(p: f64) -> Result<WernerParams> {
    WernerParams::new(p).map_err(|e| anyhow!("invalid --p: {e}"))
}

fn rindler_param(r: f64) -> Result<RindlerParam> {
    RindlerParam::new(r).map_err(|e| anyhow!("invalid --r: {e} (r is limited to [0, pi/4])"))
}

fn qubit(alpha2: f64, phase: f64) -> Result<PureQubit> {
    if !(0.0..=1.0).contains(&alpha2) {
        bail!("invalid --alpha2: {alpha2} is outside [0, 1]");
    }
    if !phase.is_finite() {
        bail!("invalid --phase: {phase} is not finite");
    }
    PureQubit::from_population(alpha2, phase).map_err(|e| anyhow!("invalid --alpha2: {e}"))
}

pub fn point(args: &Resolved) -> Result<ExitCode> {
    let p = args.p.ok_or_else(|| anyhow!("missing --p"))?;
    let r = args.r.unwrap_or(0.0);
    let alpha2 = args.alpha2.unwrap_or(0.5);
    let phase = args.phase.unwrap_or(0.0);
    let (wp, rp) = (werner_param(p)?, rindler_param(r)?);
    let psi = qubit(alpha2, phase)?;

    let channel = alice_rob_state(wp, rp);
    let report = run_protocol(&psi, &channel)?;

    let mut out = io::stdout().lock();
    let mut line = |key: &str, value: String| writeln!(out, "{key}: {value}");
    line("p", format_sig12(p))?;
    line("r", format_sig12(r))?;
    line("alpha2", format_sig12(alpha2))?;
    line("phase", format_sig12(phase))?;
    for o in &report.outcomes {
        let tag = format!("{}{}", o.i, o.j);
        line(&format!("probability_{tag}"), format_sig12(o.probability))?;
        line(&format!("fidelity_{tag}"), format_sig12(o.fidelity))?;
    }
    line("F_i0", format_sig12(report.outcome(0, 0).fidelity))?;
    line("F_i1", format_sig12(report.outcome(0, 1).fidelity))?;
    line("min_fidelity", format_sig12(report.min_fidelity))?;
    line("avg_fidelity", format_sig12(report.avg_fidelity))?;
    line("mutual_information", format_sig12(mutual_information(&channel)))?;
    line("negativity", format_sig12(negativity(&channel)))?;
    for &side in sides(args.measure_side) {
        let c = discord_measuring(&channel, side);
        line(
            &format!("classical_correlation_{side}"),
            format_sig12(c.classical_correlation),
        )?;
        line(&format!("discord_{side}"), format_sig12(c.discord))?;
        line(&format!("optimizer_evals_{side}"), c.optimizer_evals.to_string())?;
        line(
            &format!("optimizer_theta_{side}"),
            format_sig12(c.optimizer_argmax.theta),
        )?;
        line(
            &format!("optimizer_phi_{side}"),
            format_sig12(c.optimizer_argmax.phi),
        )?;
    }
    Ok(ExitCode::SUCCESS)
}

/// Grid flag if given, else the single-value flag, else the preset.
fn axis(
    flag: &str,
    max: f64,
    grid: &Option<GridSpec>,
    single: Option<f64>,
    preset: Option<&Vec<f64>>,
) -> Result<Vec<f64>> {
    let (source, values) = match (grid, single, preset) {
        (Some(g), _, _) => (format!("--{flag}-grid"), g.values()),
        (None, Some(v), _) => (format!("--{flag}"), vec![v]),
        (None, None, Some(p)) => ("--figure".to_string(), p.clone()),
        (None, None, None) => bail!("missing --{flag}-grid (or --{flag}, or --figure)"),
    };
    if values.is_empty() {
        bail!("invalid {source}: grid is empty");
    }
    if let Some(v) = values.iter().find(|v| !(0.0..=max).contains(*v)) {
        bail!("invalid {source}: {flag} = {v} is outside [0, {max}]");
    }
    Ok(values)
}

pub fn build_spec(args: &Resolved) -> Result<SweepSpec> {
    let preset = args
        .figure
        .map(|n| SweepSpec::figure(Figure::from_number(n).expect("validated by the parser")));
    let default_alpha = vec![0.5];
    let mut spec = SweepSpec::new(
        axis("p", 1.0, &args.p_grid, args.p, preset.as_ref().map(|s| &s.p_grid))?,
        axis(
            "r",
            RindlerParam::MAX,
            &args.r_grid,
            args.r,
            preset.as_ref().map(|s| &s.r_grid),
        )?,
        axis(
            "alpha2",
            1.0,
            &args.alpha2_grid,
            args.alpha2,
            Some(preset.as_ref().map_or(&default_alpha, |s| &s.alpha2_grid)),
        )?,
    );
    spec.phase = args.phase.unwrap_or(0.0);
    spec.outputs = OutputFlags::with_sides(sides(args.measure_side));
    spec.validate().map_err(|e| anyhow!("invalid sweep: {e}"))?;
    Ok(spec)
}

pub fn sweep(args: &Resolved) -> Result<ExitCode> {
    let spec = build_spec(args)?;
    // Open the destination before the work so a bad path fails fast.
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => {
            Box::new(File::create(path).with_context(|| format!("cannot write --out {}", path.display()))?)
        }
        None => Box::new(io::stdout().lock()),
    };
    let rows = run_sweep(&spec)?;
    let mut sink = BufWriter::new(sink);
    write_csv(&rows, &mut sink).context("writing CSV")?;
    sink.flush().context("writing CSV")?;
    Ok(ExitCode::SUCCESS)
}

pub fn selfcheck() -> Result<ExitCode> {
    let checks = selfcheck::run_all();
    let mut out = io::stdout().lock();
    for c in &checks {
        writeln!(
            out,
            "{} {}: max deviation {:.3e} (tolerance {:.0e}, {} points)",
            if c.passed() { "PASS" } else { "FAIL" },
            c.name,
            c.max_deviation,
            c.tolerance,
            c.points
        )?;
    }
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
    if failed.is_empty() {
        writeln!(out, "all {} checks passed", checks.len())?;
        Ok(ExitCode::SUCCESS)
    } else {
        writeln!(
            out,
            "{} of {} checks failed: {}",
            failed.len(),
            checks.len(),
            failed.join("; ")
        )?;
        Ok(ExitCode::FAILURE)
    }
}
