use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use twofluid::harness::config::parse_times;
use twofluid::harness::{run, Preset, RunConfig, SchemeChoice};
use twofluid::tcs::PressureDensities;
use twofluid::{Boundary, Error};

/// Shock-tube runs of the equal-pressure two-fluid model.
#[derive(Debug, Parser)]
#[command(name = "twofluid", version)]
struct Cli {
    /// shock-tube-1 | shock-tube-2 | shock-tube-3 | custom (custom needs --seed-manifest)
    #[arg(long)]
    preset: Option<String>,
    /// wam | tcs | both
    #[arg(long)]
    scheme: Option<String>,
    #[arg(long)]
    cells: Option<usize>,
    /// dt/h; applies to every selected scheme (defaults: wam 1e-6, tcs 0.002)
    #[arg(long)]
    cfl: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    nu_ic: Option<f64>,
    /// Per-step averaging of the weak-asymptotic run (default 100 * cfl)
    #[arg(long)]
    nu_step: Option<f64>,
    #[arg(long)]
    t_final: Option<f64>,
    /// Comma-separated times (default T/2,T)
    #[arg(long)]
    snapshots: Option<String>,
    /// outflow | periodic
    #[arg(long)]
    boundary: Option<String>,
    #[arg(long)]
    gravity: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Start from a run manifest; other flags override its entries
    #[arg(long)]
    seed_manifest: Option<PathBuf>,
    /// Closure densities in the tcs pressure correction: averaged | transported
    #[arg(long)]
    tcs_pressure: Option<String>,
}

fn config(cli: &Cli) -> twofluid::Result<RunConfig> {
    let mut cfg = match (&cli.seed_manifest, &cli.preset) {
        (Some(path), _) => RunConfig::read_manifest(path)?,
        (None, Some(name)) => RunConfig::from_preset(name.parse::<Preset>()?)?,
        (None, None) => RunConfig::from_preset(Preset::ShockTube1)?,
    };
    if let (Some(_), Some(name)) = (&cli.seed_manifest, &cli.preset) {
        let p: Preset = name.parse()?;
        if p != cfg.preset {
            return Err(Error::Usage(format!(
                "--preset {name} conflicts with the manifest preset {}",
                cfg.preset.name()
            )));
        }
    }
    if let Some(s) = &cli.scheme {
        cfg.scheme = s.parse::<SchemeChoice>()?;
    }
    if let Some(n) = cli.cells {
        cfg.grid.n_cells = n;
    }
    if let Some(r) = cli.cfl {
        if cfg.scheme.runs_wam() {
            cfg.wam.cfl = r;
            cfg.wam.nu_step = 100.0 * r;
        }
        if cfg.scheme.runs_tcs() {
            cfg.tcs.cfl = r;
        }
    }
    if let Some(v) = cli.nu_step {
        cfg.wam.nu_step = v;
    }
    if let Some(v) = cli.nu_ic {
        cfg.wam.nu_ic = v;
    }
    if let Some(v) = cli.mu {
        cfg.tcs.mu = v;
    }
    if let Some(t) = cli.t_final {
        cfg.t_final = t;
        if cli.snapshots.is_none() {
            cfg.snapshots = twofluid::harness::config::default_snapshots(t);
        }
    }
    if let Some(s) = &cli.snapshots {
        cfg.snapshots = parse_times(s)?;
    }
    if let Some(b) = &cli.boundary {
        cfg.grid.boundary = b.parse::<Boundary>()?;
    }
    if let Some(g) = cli.gravity {
        cfg.params.g = g;
    }
    if let Some(p) = &cli.tcs_pressure {
        cfg.tcs.pressure = p.parse::<PressureDensities>()?;
    }
    if let Some(o) = &cli.out {
        cfg.out_dir = o.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Usage(_) | Error::Schema { .. } => 2,
        Error::Io { .. } | Error::Csv { .. } => 4,
        e if e.is_solver_failure() => 3,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let cfg = match config(&cli) {
        Ok(c) => c,
        // bad parameter values are usage errors at this point
        Err(e @ (Error::InvalidInput(_) | Error::Usage(_) | Error::Schema { .. })) => {
            eprintln!("twofluid: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("twofluid: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    match run(&cfg) {
        Ok(summary) => {
            for (solver, arr) in &summary.arrays {
                println!("{} wave speeds at t = {}", solver.name(), cfg.t_final);
                print!("{}", arr.to_text());
            }
            if let Some(rows) = &summary.comparison {
                for r in rows {
                    println!("L1/TV {:<5} {:.4}%", r.field.name(), 100.0 * r.ratio());
                }
            }
            println!(
                "wrote {} files to {}",
                summary.files.len(),
                cfg.out_dir.display()
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("twofluid: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
