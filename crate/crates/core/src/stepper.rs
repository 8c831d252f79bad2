//! Fixed-step time loop shared by the two solvers.

use crate::eos::FluidParams;
use crate::error::{Error, Result};
use crate::grid::{GridSpec, GridState};

/// One explicit time step of a solver on a fixed grid.
pub trait TimeStepper {
    fn name(&self) -> &'static str;

    /// Time step on `spec`.
    fn dt(&self, spec: &GridSpec) -> f64;

    fn step(&self, state: &GridState, params: &FluidParams) -> Result<GridState>;
}

/// Number of steps of size `dt` needed to reach `t`.
pub fn steps_to(t: f64, dt: f64) -> usize {
    if t <= 0.0 {
        return 0;
    }
    ((t / dt) * (1.0 - 1e-12)).ceil() as usize
}

/// Advances `ic` to `t_final`, calling `on_snapshot` with the state at each
/// requested time (rounded up to a whole number of steps). Times are relative
/// to `ic.t`.
pub fn integrate<S, F>(
    stepper: &S,
    ic: GridState,
    params: &FluidParams,
    t_final: f64,
    snapshot_times: &[f64],
    mut on_snapshot: F,
) -> Result<GridState>
where
    S: TimeStepper + ?Sized,
    F: FnMut(&GridState) -> Result<()>,
{
    if !(t_final.is_finite() && t_final >= 0.0) {
        return Err(Error::InvalidInput(format!("bad final time {t_final}")));
    }
    let dt = stepper.dt(&ic.spec);
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidInput(format!("bad time step {dt}")));
    }
    let mut marks: Vec<usize> = Vec::with_capacity(snapshot_times.len());
    for &ts in snapshot_times {
        if !(ts.is_finite() && ts >= 0.0 && ts <= t_final * (1.0 + 1e-12)) {
            return Err(Error::InvalidInput(format!(
                "snapshot time {ts} outside [0, {t_final}]"
            )));
        }
        marks.push(steps_to(ts, dt));
    }
    marks.sort_unstable();
    let total = steps_to(t_final, dt);
    let t0 = ic.t;
    let mut state = ic;
    let mut next = 0;
    for k in 0..=total {
        while next < marks.len() && marks[next] == k {
            on_snapshot(&state)?;
            next += 1;
        }
        if k == total {
            break;
        }
        let mut advanced = stepper.step(&state, params)?;
        advanced.t = t0 + (k + 1) as f64 * dt;
        state = advanced;
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eos::ConservedCell;
    use crate::grid::Boundary;

    struct Counter;

    impl TimeStepper for Counter {
        fn name(&self) -> &'static str {
            "counter"
        }
        fn dt(&self, _spec: &GridSpec) -> f64 {
            2e-6
        }
        fn step(&self, state: &GridState, _params: &FluidParams) -> Result<GridState> {
            let mut next = state.clone();
            next.cells[0].r1 += 1.0;
            Ok(next)
        }
    }

    #[test]
    fn step_counts_are_exact() {
        assert_eq!(steps_to(0.001, 2e-6), 500);
        assert_eq!(steps_to(0.001, 1e-8), 100_000);
        assert_eq!(steps_to(0.0, 1e-8), 0);
        assert_eq!(steps_to(1.5e-6, 1e-6), 2);
    }

    #[test]
    fn snapshots_and_final_time() {
        let spec = GridSpec::new(0.0, 1.0, 8, Boundary::Outflow).unwrap();
        let ic = GridState::uniform(spec, ConservedCell::ZERO).unwrap();
        let params = FluidParams::new(1.0, 1.0, 2.0, 1.0, 0.0).unwrap();
        let mut seen = Vec::new();
        let end = integrate(
            &Counter,
            ic.clone(),
            &params,
            1e-4,
            &[0.0, 5e-5, 1e-4],
            |s| {
                seen.push((s.t, s.cells[0].r1));
                Ok(())
            },
        )
        .unwrap();
        assert_eq!(end.cells[0].r1, 50.0);
        assert_eq!(seen.len(), 3);
        assert_eq!(seen[1].1, 25.0);
        assert!((end.t - 1e-4).abs() < 1e-18);

        let same = integrate(&Counter, ic.clone(), &params, 0.0, &[], |_| Ok(())).unwrap();
        assert_eq!(same, ic);
        assert!(integrate(&Counter, ic, &params, 1e-4, &[2e-4], |_| Ok(())).is_err());
    }
}
