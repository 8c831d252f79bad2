// One transport-correction step on a slug of mixture surrounded by empty
// cells. Cells that end the step with no fluid also carry no momentum, and
// mass is only redistributed.
//
// Only a single step is taken. The averaging spreads an exponentially thin
// gas tail into the empty region and the pressure correction accelerates it
// without bound, so runs with vacuum fronts soon hit the CFL guard.

use twofluid::harness::Preset;
use twofluid::tcs::{run_scheme, SchemeParams};
use twofluid::{Boundary, ConservedCell, GridSpec, GridState};

pub fn run_example() -> twofluid::Result<()> {
    let params = Preset::fluid_params();
    let spec = GridSpec::new(0.0, 1.0, 200, Boundary::Outflow)?;
    let cells = (0..200)
        .map(|i| {
            let x = spec.x_center(i);
            if (0.3..0.5).contains(&x) {
                ConservedCell::new(700.0, 0.8, 700.0 * 20.0, 0.8 * 20.0)
            } else {
                ConservedCell::ZERO
            }
        })
        .collect();
    let ic = GridState::new(spec, cells, 0.0)?;
    let sp = SchemeParams {
        t_final: 1e-5,
        ..SchemeParams::default()
    };
    let end = run_scheme(&ic, &params, &sp)?;

    let empty = end
        .cells
        .iter()
        .filter(|c| c.r1 == 0.0 && c.r2 == 0.0)
        .count();
    let stray = end
        .cells
        .iter()
        .filter(|c| (c.r1 == 0.0 && c.m1 != 0.0) || (c.r2 == 0.0 && c.m2 != 0.0))
        .count();
    let [m1, m2] = end.total_mass();
    println!("empty cells: {empty}, fluid-free cells with momentum: {stray}");
    println!("masses {m1:.6} {m2:.6} (initially {:?})", ic.total_mass());
    assert_eq!(stray, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
