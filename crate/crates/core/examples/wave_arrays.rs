// Runs the three shock tubes with the transport-correction scheme and prints
// the c1..c5 table of each principal wave.

use twofluid::diag::{PlateauOptions, Profile};
use twofluid::harness::{reproduce_arrays, simulate, Preset, RunConfig, SchemeChoice, Solver};

pub fn run_example() -> twofluid::Result<()> {
    for preset in Preset::ALL {
        let mut cfg = RunConfig::from_preset(preset)?;
        cfg.scheme = SchemeChoice::Tcs;
        cfg.snapshots = vec![cfg.t_final];
        let out = simulate(&cfg, Solver::Tcs)?;
        let profile = Profile::from_state(&out.final_state, &cfg.params);
        let table = reproduce_arrays(&profile, &cfg.params, &PlateauOptions::default());
        println!("{}", preset.name());
        print!("{}", table.to_text());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
