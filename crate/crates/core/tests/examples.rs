//! Every example must run to completion.

macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(closure_example, "closure.rs");
example!(diagnostics_example, "diagnostics.rs");
example!(shock_tube_example, "shock_tube.rs");
example!(singular_wave_example, "singular_wave.rs");
example!(vacuum_example, "vacuum.rs");
example!(wave_arrays_example, "wave_arrays.rs");
example!(weak_asymptotic_example, "weak_asymptotic.rs");

#[test]
fn closure_runs() {
    closure_example::run_example().unwrap();
}

#[test]
fn diagnostics_runs() {
    diagnostics_example::run_example().unwrap();
}

#[test]
fn shock_tube_runs() {
    shock_tube_example::run_example().unwrap();
}

#[test]
fn singular_wave_runs() {
    singular_wave_example::run_example().unwrap();
}

#[test]
fn vacuum_runs() {
    vacuum_example::run_example().unwrap();
}

#[test]
fn wave_arrays_runs() {
    wave_arrays_example::run_example().unwrap();
}

#[test]
fn weak_asymptotic_runs() {
    weak_asymptotic_example::run_example().unwrap();
}
