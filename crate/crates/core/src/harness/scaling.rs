//! Resolution and time scaling of the middle-wave dip.

use std::path::Path;

use super::config::RunConfig;
use super::run::{simulate, Solver};
use crate::diag::profile::Profile;
use crate::diag::singular::{singular_wave_metrics, SingularWaveMetrics};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingRow {
    pub cells: usize,
    pub eps: f64,
    pub t: f64,
    pub metrics: SingularWaveMetrics,
}

/// Runs `cfg` (tcs unless only wam is selected) at every resolution, one
/// thread per resolution, and measures the dip below `alpha_l` at every time.
pub fn scaling_study(
    cfg: &RunConfig,
    resolutions: &[usize],
    times: &[f64],
) -> Result<Vec<ScalingRow>> {
    let solver = if cfg.scheme.runs_tcs() {
        Solver::Tcs
    } else {
        Solver::Wam
    };
    let t_final = times.iter().copied().fold(0.0, f64::max);
    let alpha0 = cfg.data.alpha_l;
    let per_res: Vec<Result<Vec<ScalingRow>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = resolutions
            .iter()
            .map(|&n| {
                scope.spawn(move || {
                    let mut c = cfg.clone();
                    c.grid.n_cells = n;
                    c.t_final = t_final;
                    c.snapshots = times.to_vec();
                    let out = simulate(&c, solver)?;
                    let mut sorted = times.to_vec();
                    sorted.sort_by(f64::total_cmp);
                    sorted.dedup();
                    Ok(out
                        .snapshots
                        .iter()
                        .zip(sorted)
                        .map(|(s, t)| ScalingRow {
                            cells: n,
                            eps: s.spec.eps(),
                            t,
                            metrics: singular_wave_metrics(
                                &Profile::from_state(s, &c.params),
                                alpha0,
                                None,
                            ),
                        })
                        .collect())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(Error::Consistency("scaling thread panicked".into())))
            })
            .collect()
    });
    let mut rows = Vec::new();
    for r in per_res {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn write_metrics_csv(path: &Path, rows: &[ScalingRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    w.write_record(["cells", "eps", "t", "area", "width", "min_alpha"])
        .map_err(|e| Error::csv(path, e))?;
    for r in rows {
        w.write_record([
            r.cells.to_string(),
            format!("{}", r.eps),
            format!("{}", r.t),
            format!("{}", r.metrics.area),
            format!("{}", r.metrics.width),
            format!("{}", r.metrics.min_alpha),
        ])
        .map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}
