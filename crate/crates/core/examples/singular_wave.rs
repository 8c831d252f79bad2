// Area and width of the volume-fraction dip at the material interface of
// shock tube 3: the area grows linearly in time, the width shrinks with the
// cell size.

use twofluid::harness::scaling::write_metrics_csv;
use twofluid::harness::{scaling_study, Preset, RunConfig, SchemeChoice};

pub fn run_example() -> twofluid::Result<()> {
    let mut cfg = RunConfig::from_preset(Preset::ShockTube3)?;
    cfg.scheme = SchemeChoice::Tcs;
    let rows = scaling_study(&cfg, &[250, 1000, 4000], &[0.0005, 0.001, 0.002])?;
    println!(
        "{:>6} {:>8} {:>11} {:>9} {:>9}",
        "cells", "t", "area", "width", "min"
    );
    for r in &rows {
        println!(
            "{:>6} {:>8} {:>11.4e} {:>9.5} {:>9.5}",
            r.cells, r.t, r.metrics.area, r.metrics.width, r.metrics.min_alpha
        );
    }
    let path = std::env::temp_dir().join(format!("twofluid-singular-{}.csv", std::process::id()));
    write_metrics_csv(&path, &rows)?;
    std::fs::remove_file(&path).ok();
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
