// Conservation audit and weak-form residuals of shock tube 1 on three grids.
// Residuals shrink roughly in proportion to the cell size.

use twofluid::diag::{mass_audit, weak_residual, Bump};
use twofluid::harness::{simulate, Preset, RunConfig, Solver};
use twofluid::tcs::step_scheme;
use twofluid::Boundary;

pub fn run_example() -> twofluid::Result<()> {
    let mut cfg = RunConfig::from_preset(Preset::ShockTube1)?;
    cfg.grid.boundary = Boundary::Periodic;
    cfg.snapshots = (0..=4).map(|k| k as f64 * cfg.t_final / 4.0).collect();
    let audit = mass_audit(&simulate(&cfg, Solver::Tcs)?.snapshots)?;
    println!(
        "periodic mass drift: {:.2e} {:.2e}",
        audit.max_rel_drift[0], audit.max_rel_drift[1]
    );

    let bump = Bump {
        center: 0.5,
        radius: 0.45,
    };
    cfg.grid.boundary = Boundary::Outflow;
    cfg.snapshots = vec![cfg.t_final];
    for n in [250, 1000, 4000] {
        cfg.grid.n_cells = n;
        let end = simulate(&cfg, Solver::Tcs)?.final_state;
        let next = step_scheme(&end, &cfg.params, &cfg.tcs_params())?;
        let r = weak_residual(&[end, next], &bump, &cfg.params)?;
        let [c1, c2, m1, m2] = r.values();
        println!("{n:>5} cells: continuity {c1:.3e} {c2:.3e}  momentum {m1:.3e} {m2:.3e}");
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
