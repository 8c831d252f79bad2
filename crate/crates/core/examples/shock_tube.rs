// Full pipeline on shock tube 1: both solvers, snapshot CSVs, manifest,
// wave reports and the cross-scheme comparison, written to a temp directory.
// Equivalent to `twofluid --preset shock-tube-1 --scheme both --cfl ...`.

use twofluid::harness::{run, Preset, RunConfig};
use twofluid::wam::WamParams;

pub fn run_example() -> twofluid::Result<()> {
    let mut cfg = RunConfig::from_preset(Preset::ShockTube1)?;
    // coarser weak-asymptotic time step than the 1e-6 default to keep this quick
    cfg.wam = WamParams::with_cfl(1e-5);
    cfg.out_dir = std::env::temp_dir().join(format!("twofluid-shock-tube-{}", std::process::id()));

    let summary = run(&cfg)?;
    for (solver, report) in &summary.waves {
        println!("{}:", solver.name());
        report.write_text(&mut std::io::stdout()).expect("stdout");
    }
    for d in summary.comparison.iter().flatten() {
        println!("{:<5} L1 = {:.3e}  TV = {:.3e}", d.field.name(), d.l1, d.tv);
    }
    for f in &summary.files {
        println!("wrote {}", f.display());
    }
    std::fs::remove_dir_all(&cfg.out_dir).ok();
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
