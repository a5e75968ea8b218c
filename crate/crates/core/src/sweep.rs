//! Parameter sweeps over (p, r, |α|²) and their CSV form.
//!
//! Rows come out in row-major (p, r, alpha2) order regardless of how the work is
//! scheduled; floats are printed with 12 significant digits, so the output is
//! byte-for-byte reproducible.

use std::collections::HashMap;
use std::f64::consts::FRAC_PI_4;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::DensityMatrix;
use crate::measures::{discord_measuring, mutual_information, negativity, Side};
use crate::rindler::{alice_rob_state, RindlerParam};
use crate::states::{PureQubit, WernerParams};
use crate::teleport::run_protocol;

pub const CSV_HEADER: &str = "p,r,alpha2,F_i0,F_i1,min_F,avg_F,discord_B,discord_A,negativity,mutual_info";

/// Points per axis for the figure presets.
pub const FIGURE_POINTS: usize = 65;

/// `n` evenly spaced points from `start` to `end` inclusive.
pub fn linspace(start: f64, end: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![start],
        _ => (0..n)
            .map(|k| {
                if k == n - 1 {
                    end
                } else {
                    start + (end - start) * k as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// Parses a real number, also accepting multiples and fractions of `pi`
/// (`pi`, `pi/4`, `3*pi/16`, `0.5pi`).
pub fn parse_real(s: &str) -> std::result::Result<f64, String> {
    let t = s.trim();
    if let Ok(v) = t.parse::<f64>() {
        return Ok(v);
    }
    let lower = t.to_ascii_lowercase();
    let Some(pos) = lower.find("pi") else {
        return Err(format!("cannot parse {s:?} as a number"));
    };
    let (coef, rest) = lower.split_at(pos);
    let rest = &rest[2..];
    let coef = coef.trim().trim_end_matches('*').trim();
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c
            .parse::<f64>()
            .map_err(|_| format!("cannot parse {s:?} as a number"))?,
    };
    let denom = match rest.trim() {
        "" => 1.0,
        r => {
            let d = r
                .strip_prefix('/')
                .ok_or_else(|| format!("cannot parse {s:?} as a number"))?;
            d.trim()
                .parse::<f64>()
                .map_err(|_| format!("cannot parse {s:?} as a number"))?
        }
    };
    Ok(coef * std::f64::consts::PI / denom)
}

/// `start:end:n` grid description.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub end: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn values(&self) -> Vec<f64> {
        linspace(self.start, self.end, self.points)
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [a] => Ok(GridSpec {
                start: parse_real(a)?,
                end: parse_real(a)?,
                points: 1,
            }),
            [a, b, n] => {
                let points = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| format!("grid point count {n:?} is not a non-negative integer"))?;
                Ok(GridSpec {
                    start: parse_real(a)?,
                    end: parse_real(b)?,
                    points,
                })
            }
            _ => Err(format!("grid {s:?} must look like start:end:n")),
        }
    }
}

/// Which state-derived columns are filled; the rest are left empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutputFlags {
    pub fidelities: bool,
    pub min_fidelity: bool,
    pub discord_a: bool,
    pub discord_b: bool,
    pub negativity: bool,
    pub mutual_information: bool,
}

impl OutputFlags {
    pub fn all() -> Self {
        Self {
            fidelities: true,
            min_fidelity: true,
            discord_a: true,
            discord_b: true,
            negativity: true,
            mutual_information: true,
        }
    }

    /// Everything, with discord restricted to the given sides.
    pub fn with_sides(sides: &[Side]) -> Self {
        Self {
            discord_a: sides.contains(&Side::A),
            discord_b: sides.contains(&Side::B),
            ..Self::all()
        }
    }

    fn needs_correlations(&self) -> bool {
        self.discord_a || self.discord_b || self.negativity || self.mutual_information
    }
}

impl Default for OutputFlags {
    fn default() -> Self {
        Self::all()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// p = 1, min fidelity over the (r, |α|²) plane.
    MinFidelitySurface = 1,
    /// p = 1, quantities versus r at |α|² = ½.
    MaximallyEntangled = 2,
    /// r ∈ {0, π/4}, quantities versus p.
    InertialVersusAccelerated = 3,
    /// p = 1/3 (separable), quantities versus r.
    Separable = 4,
}

impl Figure {
    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Self::MinFidelitySurface),
            2 => Some(Self::MaximallyEntangled),
            3 => Some(Self::InertialVersusAccelerated),
            4 => Some(Self::Separable),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        self as u8
    }
}

/// Grids and requested outputs for a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub p_grid: Vec<f64>,
    pub r_grid: Vec<f64>,
    pub alpha2_grid: Vec<f64>,
    /// Relative phase of β, shared by every row.
    pub phase: f64,
    pub outputs: OutputFlags,
}

impl SweepSpec {
    pub fn new(p_grid: Vec<f64>, r_grid: Vec<f64>, alpha2_grid: Vec<f64>) -> Self {
        Self {
            p_grid,
            r_grid,
            alpha2_grid,
            phase: 0.0,
            outputs: OutputFlags::all(),
        }
    }

    pub fn figure(figure: Figure) -> Self {
        Self::figure_with_points(figure, FIGURE_POINTS)
    }

    pub fn figure_with_points(figure: Figure, n: usize) -> Self {
        let r_axis = linspace(0.0, FRAC_PI_4, n);
        match figure {
            Figure::MinFidelitySurface => Self::new(vec![1.0], r_axis, linspace(0.0, 1.0, n)),
            Figure::MaximallyEntangled => Self::new(vec![1.0], r_axis, vec![0.5]),
            Figure::InertialVersusAccelerated => {
                Self::new(linspace(0.0, 1.0, n), vec![0.0, FRAC_PI_4], vec![0.5])
            }
            Figure::Separable => Self::new(vec![1.0 / 3.0], r_axis, vec![0.5]),
        }
    }

    /// Checks grid ranges and non-emptiness.
    pub fn validate(&self) -> Result<()> {
        for (name, grid, max) in [
            ("p", &self.p_grid, 1.0),
            ("r", &self.r_grid, RindlerParam::MAX),
            ("alpha2", &self.alpha2_grid, 1.0),
        ] {
            if grid.is_empty() {
                return Err(Error::EmptyGrid(name));
            }
            for &v in grid {
                Error::check_range(name, v, 0.0, max)?;
            }
        }
        if !self.phase.is_finite() {
            return Err(Error::NotFinite {
                name: "phase",
                value: self.phase,
            });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.p_grid.len() * self.r_grid.len() * self.alpha2_grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One CSV row. `None` marks a column that was not requested.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub r: f64,
    pub alpha2: f64,
    pub f_i0: Option<f64>,
    pub f_i1: Option<f64>,
    pub min_f: Option<f64>,
    pub avg_f: Option<f64>,
    pub discord_b: Option<f64>,
    pub discord_a: Option<f64>,
    pub negativity: Option<f64>,
    pub mutual_info: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default)]
struct ChannelCorrelations {
    discord_b: Option<f64>,
    discord_a: Option<f64>,
    negativity: Option<f64>,
    mutual_info: Option<f64>,
}

fn channel_correlations(rho: &DensityMatrix, outputs: OutputFlags) -> ChannelCorrelations {
    ChannelCorrelations {
        discord_b: outputs.discord_b.then(|| discord_measuring(rho, Side::B).discord),
        discord_a: outputs.discord_a.then(|| discord_measuring(rho, Side::A).discord),
        negativity: outputs.negativity.then(|| negativity(rho)),
        mutual_info: outputs.mutual_information.then(|| mutual_information(rho)),
    }
}

/// Evaluates every grid point. Work is spread over the current rayon pool.
///
/// Correlation measures depend only on (p, r) and are computed once per pair.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let pairs: Vec<(usize, usize)> = (0..spec.p_grid.len())
        .flat_map(|i| (0..spec.r_grid.len()).map(move |k| (i, k)))
        .collect();

    let channels: Vec<DensityMatrix> = pairs
        .par_iter()
        .map(|&(i, k)| {
            let p = WernerParams::new(spec.p_grid[i])?;
            let r = RindlerParam::new(spec.r_grid[k])?;
            Ok(alice_rob_state(p, r))
        })
        .collect::<Result<_>>()?;

    let correlations: HashMap<(usize, usize), ChannelCorrelations> = if spec.outputs.needs_correlations() {
        pairs
            .par_iter()
            .zip(channels.par_iter())
            .map(|(&key, rho)| (key, channel_correlations(rho, spec.outputs)))
            .collect()
    } else {
        HashMap::new()
    };

    let n_alpha = spec.alpha2_grid.len();
    (0..pairs.len() * n_alpha)
        .into_par_iter()
        .map(|idx| {
            let pair_idx = idx / n_alpha;
            let (i, k) = pairs[pair_idx];
            let alpha2 = spec.alpha2_grid[idx % n_alpha];
            let psi = PureQubit::from_population(alpha2, spec.phase)?;
            let report = run_protocol(&psi, &channels[pair_idx])?;
            let corr = correlations.get(&(i, k)).copied().unwrap_or_default();
            let fid = spec.outputs.fidelities;
            let min = spec.outputs.min_fidelity;
            Ok(SweepRow {
                p: spec.p_grid[i],
                r: spec.r_grid[k],
                alpha2,
                f_i0: fid.then(|| report.outcome(0, 0).fidelity),
                f_i1: fid.then(|| report.outcome(0, 1).fidelity),
                min_f: min.then_some(report.min_fidelity),
                avg_f: min.then_some(report.avg_fidelity),
                discord_b: corr.discord_b,
                discord_a: corr.discord_a,
                negativity: corr.negativity,
                mutual_info: corr.mutual_info,
            })
        })
        .collect()
}

/// `%.12g`-style formatting: 12 significant digits, trailing zeros trimmed,
/// exponent form outside `[1e-5, 1e12)`.
pub fn format_sig12(x: f64) -> String {
    const DIGITS: i32 = 12;
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..DIGITS).contains(&exp) {
        let mantissa = trim_fraction(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn cell(v: Option<f64>) -> String {
    v.map(format_sig12).unwrap_or_default()
}

/// Writes the header and rows with LF line endings.
pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            format_sig12(row.p),
            format_sig12(row.r),
            format_sig12(row.alpha2),
            cell(row.f_i0),
            cell(row.f_i1),
            cell(row.min_f),
            cell(row.avg_f),
            cell(row.discord_b),
            cell(row.discord_a),
            cell(row.negativity),
            cell(row.mutual_info),
        )?;
    }
    Ok(())
}
