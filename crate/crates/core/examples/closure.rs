// Volume fraction, common pressure and true densities from partial densities,
// for the reference fluid pair (water-like fluid 1, gas-like fluid 2).

use twofluid::eos::{alpha_lower_bound, closure, closure_scheme, primitive_to_conserved};
use twofluid::harness::Preset;

pub fn run_example() -> twofluid::Result<()> {
    let params = Preset::fluid_params();

    // a mixture at 2.65 bar with 70% of fluid 1 by volume
    let cell = primitive_to_conserved(0.7, 265000.0, 0.0, 0.0, &params)?;
    let f = closure(cell.r1, cell.r2, &params)?;
    println!("r1 = {:.4}, r2 = {:.4}", cell.r1, cell.r2);
    println!(
        "alpha = {:.6} (>= {:.6}), p = {:.1} Pa, rho1 = {:.4}, rho2 = {:.4}",
        f.alpha,
        alpha_lower_bound(cell.r1, cell.r2, &params),
        f.p,
        f.rho1,
        f.rho2
    );

    // pure fluid 2, pure fluid 1 and an empty cell
    for (r1, r2) in [(0.0, 2.0), (700.0, 0.0), (0.0, 0.0)] {
        let f = closure_scheme(r1, r2, &params);
        println!(
            "r1 = {r1}, r2 = {r2}: {:?}, alpha = {}, p = {}",
            f.phase, f.alpha, f.p
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
