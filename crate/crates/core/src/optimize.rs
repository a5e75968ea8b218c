//! Two-parameter Nelder–Mead maximizer used to refine measurement angles.

/// Result of a simplex run.
#[derive(Debug, Clone, Copy)]
pub struct SimplexResult {
    pub x: [f64; 2],
    pub value: f64,
    pub evaluations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    /// Stop once `max f − min f` over the simplex drops below this.
    pub value_spread: f64,
    pub max_evaluations: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            value_spread: 1e-9,
            max_evaluations: 2_000,
        }
    }
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

/// Maximizes `f` starting from the simplex `{start, start + step₀ e₀, start + step₁ e₁}`.
pub fn maximize<F>(mut f: F, start: [f64; 2], step: [f64; 2], opts: SimplexOptions) -> SimplexResult
where
    F: FnMut([f64; 2]) -> f64,
{
    let evaluations = std::cell::Cell::new(0usize);
    let mut eval = |x: [f64; 2]| {
        evaluations.set(evaluations.get() + 1);
        f(x)
    };

    let mut pts = [
        start,
        [start[0] + step[0], start[1]],
        [start[0], start[1] + step[1]],
    ];
    let mut vals = [eval(pts[0]), eval(pts[1]), eval(pts[2])];
    let mut converged = false;

    loop {
        // Sort descending: index 0 is the best vertex.
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]));
        pts = [pts[idx[0]], pts[idx[1]], pts[idx[2]]];
        vals = [vals[idx[0]], vals[idx[1]], vals[idx[2]]];

        if vals[0] - vals[2] < opts.value_spread {
            converged = true;
            break;
        }
        if evaluations.get() >= opts.max_evaluations {
            break;
        }

        let centroid = [(pts[0][0] + pts[1][0]) / 2.0, (pts[0][1] + pts[1][1]) / 2.0];
        let along = |t: f64| {
            [
                centroid[0] + t * (centroid[0] - pts[2][0]),
                centroid[1] + t * (centroid[1] - pts[2][1]),
            ]
        };

        let xr = along(REFLECT);
        let fr = eval(xr);
        if fr > vals[0] {
            let xe = along(EXPAND);
            let fe = eval(xe);
            if fe > fr {
                pts[2] = xe;
                vals[2] = fe;
            } else {
                pts[2] = xr;
                vals[2] = fr;
            }
            continue;
        }
        if fr > vals[1] {
            pts[2] = xr;
            vals[2] = fr;
            continue;
        }
        // Contract toward the better of the reflected and worst points.
        let (xc, fc) = if fr > vals[2] {
            let xc = along(CONTRACT);
            (xc, eval(xc))
        } else {
            let xc = along(-CONTRACT);
            (xc, eval(xc))
        };
        if fc > vals[2].max(fr) {
            pts[2] = xc;
            vals[2] = fc;
            continue;
        }
        for k in 1..3 {
            pts[k] = [
                pts[0][0] + SHRINK * (pts[k][0] - pts[0][0]),
                pts[0][1] + SHRINK * (pts[k][1] - pts[0][1]),
            ];
            vals[k] = eval(pts[k]);
        }
    }

    SimplexResult {
        x: pts[0],
        value: vals[0],
        evaluations: evaluations.get(),
        converged,
    }
}
