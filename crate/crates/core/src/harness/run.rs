//! Orchestration of a configured run: initial data, solvers, output files.

use std::path::{Path, PathBuf};

use super::arrays::{reproduce_arrays, WaveArray};
use super::compare::{compare_profiles, write_comparison_csv, FieldDistance};
use super::config::RunConfig;
use crate::diag::plateau::PlateauOptions;
use crate::diag::profile::Profile;
use crate::diag::waves::{wave_report, WaveReport};
use crate::error::{Error, Result};
use crate::grid::GridState;
use crate::tcs::run_scheme_with_snapshots;
use crate::wam::{regularize_ic, run_wam_with_snapshots};

/// Which solver a [`SchemeOutput`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solver {
    Wam,
    Tcs,
}

impl Solver {
    pub fn name(self) -> &'static str {
        match self {
            Solver::Wam => "wam",
            Solver::Tcs => "tcs",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SchemeOutput {
    pub solver: Solver,
    /// States at the requested snapshot times, in time order.
    pub snapshots: Vec<GridState>,
    pub final_state: GridState,
}

impl SchemeOutput {
    pub fn profiles(&self, cfg: &RunConfig) -> Vec<Profile> {
        self.snapshots
            .iter()
            .map(|s| Profile::from_state(s, &cfg.params))
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct RunSummary {
    pub outputs: Vec<SchemeOutput>,
    pub arrays: Vec<(Solver, WaveArray)>,
    pub waves: Vec<(Solver, WaveReport)>,
    pub comparison: Option<Vec<FieldDistance>>,
    pub files: Vec<PathBuf>,
}

/// Riemann data on the grid, smoothed once with weight `nu_ic`.
pub fn initial_state(cfg: &RunConfig) -> Result<GridState> {
    let raw = GridState::riemann(cfg.grid, &cfg.data, &cfg.params)?;
    regularize_ic(&raw, cfg.wam.nu_ic)
}

/// Runs one solver and keeps the snapshots in memory.
pub fn simulate(cfg: &RunConfig, solver: Solver) -> Result<SchemeOutput> {
    let ic = initial_state(cfg)?;
    let times = cfg.snapshot_times();
    let mut snapshots = Vec::with_capacity(times.len());
    let keep = |s: &GridState| {
        snapshots.push(s.clone());
        Ok(())
    };
    let final_state = match solver {
        Solver::Wam => run_wam_with_snapshots(&ic, &cfg.params, &cfg.wam_params(), &times, keep)?,
        Solver::Tcs => {
            run_scheme_with_snapshots(&ic, &cfg.params, &cfg.tcs_params(), &times, keep)?
        }
    };
    Ok(SchemeOutput {
        solver,
        snapshots,
        final_state,
    })
}

fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

/// Runs the configured solver(s) and writes, into `cfg.out_dir`:
/// `{scheme}_snapNNN.csv` per snapshot, `manifest.txt`, and with two or more
/// snapshots `{scheme}_waves.csv` and `{scheme}_arrays.{csv,txt}`; with both
/// solvers also `comparison.csv` (wam measured against tcs at the last snapshot).
pub fn run(cfg: &RunConfig) -> Result<RunSummary> {
    cfg.validate()?;
    create_dir(&cfg.out_dir)?;
    let mut files = Vec::new();
    let manifest = cfg.out_dir.join("manifest.txt");
    std::fs::write(&manifest, cfg.to_manifest()).map_err(|e| Error::io(&manifest, e))?;
    files.push(manifest);

    let solvers: Vec<Solver> = [
        (cfg.scheme.runs_wam(), Solver::Wam),
        (cfg.scheme.runs_tcs(), Solver::Tcs),
    ]
    .into_iter()
    .filter_map(|(on, s)| on.then_some(s))
    .collect();
    let results: Vec<Result<SchemeOutput>> = std::thread::scope(|scope| {
        let handles: Vec<_> = solvers
            .iter()
            .map(|&s| scope.spawn(move || simulate(cfg, s)))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(Error::Consistency("solver thread panicked".into())))
            })
            .collect()
    });
    let outputs = results.into_iter().collect::<Result<Vec<_>>>()?;

    let opts = PlateauOptions::default();
    let mut arrays = Vec::new();
    let mut waves = Vec::new();
    let mut last_profiles = Vec::new();
    for out in &outputs {
        let name = out.solver.name();
        let profiles = out.profiles(cfg);
        for (i, p) in profiles.iter().enumerate() {
            let path = cfg.out_dir.join(format!("{name}_snap{i:03}.csv"));
            p.write_csv(&path)?;
            files.push(path);
        }
        if profiles.len() >= 2 {
            let (first, last) = (&profiles[0], &profiles[profiles.len() - 1]);
            let (t1, t2) = (out.snapshots[0].t, out.snapshots[profiles.len() - 1].t);
            let report = wave_report((first, t1), (last, t2), &cfg.params, &opts, 3);
            let path = cfg.out_dir.join(format!("{name}_waves.csv"));
            report.write_csv(&path)?;
            files.push(path);
            waves.push((out.solver, report));

            let arr = reproduce_arrays(last, &cfg.params, &opts);
            let csv = cfg.out_dir.join(format!("{name}_arrays.csv"));
            arr.write_csv(&csv)?;
            let txt = cfg.out_dir.join(format!("{name}_arrays.txt"));
            std::fs::write(&txt, arr.to_text()).map_err(|e| Error::io(&txt, e))?;
            files.extend([csv, txt]);
            arrays.push((out.solver, arr));
        }
        last_profiles.push(profiles.into_iter().last());
    }

    let comparison = match last_profiles.as_slice() {
        [Some(w), Some(t)] => {
            let rows = compare_profiles(w, t)?;
            let path = cfg.out_dir.join("comparison.csv");
            write_comparison_csv(&path, &rows)?;
            files.push(path);
            Some(rows)
        }
        _ => None,
    };

    Ok(RunSummary {
        outputs,
        arrays,
        waves,
        comparison,
        files,
    })
}
