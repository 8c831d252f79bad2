// Integrates shock tube 2 with the weak-asymptotic method at a coarser time
// step than the default (cfl 1e-5, per-step averaging 1e-3) and reads off the
// second pressure and fluid-2 velocity steps, which need no pressure correction.

use twofluid::diag::{detect_plateaus, Field, Profile};
use twofluid::harness::{simulate, Preset, RunConfig, SchemeChoice, Solver};
use twofluid::wam::WamParams;

pub fn run_example() -> twofluid::Result<()> {
    let mut cfg = RunConfig::from_preset(Preset::ShockTube2)?;
    cfg.scheme = SchemeChoice::Wam;
    cfg.wam = WamParams::with_cfl(1e-5);
    cfg.snapshots = vec![cfg.t_final];
    let out = simulate(&cfg, Solver::Wam)?;
    let profile = Profile::from_state(&out.final_state, &cfg.params);
    for (k, p) in detect_plateaus(&profile, 1e-3).iter().enumerate() {
        println!(
            "plateau {k}: x in [{:.3}, {:.3}]  alpha {:.4}  p {:.0}  u1 {:.2}  u2 {:.2}",
            p.x_start,
            p.x_end,
            p.value(Field::Alpha),
            p.value(Field::P),
            p.value(Field::U1),
            p.value(Field::U2)
        );
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
