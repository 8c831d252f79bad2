//! Weak-asymptotic method: the shifted-stencil ODE system for partial densities
//! and momenta, with a smoothed logarithmic potential, integrated by explicit
//! Euler with a small averaging after every step.

use crate::eos::{closure, ConservedCell, FluidParams};
use crate::error::{Error, Result};
use crate::grid::{smooth3, smooth3_state, smooth5, GridSpec, GridState};
use crate::stepper::{integrate, TimeStepper};

/// Parameters of the weak-asymptotic integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WamParams {
    /// `dt / h`.
    pub cfl: f64,
    /// Exponent of the `eps^beta` mass floor.
    pub beta: f64,
    /// Exponent of the `eps^N` floor inside the logarithm.
    pub n_exp: f64,
    pub nu_ic: f64,
    /// Neighbour weight of the potential smoothing stencil.
    pub nu_phi: f64,
    /// Half-width of the potential smoothing stencil, 1 or 2 cells.
    pub phi_stencil: usize,
    pub nu_step: f64,
    pub t_final: f64,
}

impl Default for WamParams {
    fn default() -> Self {
        WamParams::with_cfl(1e-6)
    }
}

impl WamParams {
    /// Defaults with the per-step averaging weight scaled as `100 * cfl`
    /// (1e-4 at cfl 1e-6, 1e-2 at cfl 1e-4).
    pub fn with_cfl(cfl: f64) -> Self {
        WamParams {
            cfl,
            beta: 100.0,
            n_exp: 100.0,
            nu_ic: 0.1,
            nu_phi: 0.15,
            phi_stencil: 2,
            nu_step: 100.0 * cfl,
            t_final: 1e-3,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.cfl > 0.0 && self.cfl.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "cfl must be positive, got {}",
                self.cfl
            )));
        }
        for (name, nu) in [("nu_ic", self.nu_ic), ("nu_step", self.nu_step)] {
            if !(0.0..0.5).contains(&nu) {
                return Err(Error::InvalidInput(format!(
                    "{name} = {nu} outside [0, 0.5)"
                )));
            }
        }
        let phi_max = if self.phi_stencil == 1 { 0.5 } else { 0.25 };
        if !(0.0..=phi_max).contains(&self.nu_phi) {
            return Err(Error::InvalidInput(format!(
                "nu_phi = {} outside [0, {phi_max}]",
                self.nu_phi
            )));
        }
        if !matches!(self.phi_stencil, 1 | 2) {
            return Err(Error::InvalidInput(format!(
                "phi_stencil must be 1 or 2, got {}",
                self.phi_stencil
            )));
        }
        if !(self.beta > 0.0 && self.n_exp > 0.0) {
            return Err(Error::InvalidInput(
                "beta and n_exp must be positive".into(),
            ));
        }
        if !(self.t_final >= 0.0 && self.t_final.is_finite()) {
            return Err(Error::InvalidInput(format!("bad t_final {}", self.t_final)));
        }
        Ok(())
    }

    pub fn dt(&self, spec: &GridSpec) -> f64 {
        self.cfl * spec.h()
    }
}

/// `(u+, u-)` with `u = u+ - u-` and `u+ + u- = |u|`.
#[inline]
pub fn split_velocity(u: f64) -> (f64, f64) {
    let a = u.abs();
    ((a + u) * 0.5, (a - u) * 0.5)
}

/// Smoothed potential `K_k * avg(log(rho_k + eps^N))` of fluid `k` (1 or 2).
pub fn potential(
    state: &GridState,
    params: &FluidParams,
    wp: &WamParams,
    k: usize,
) -> Result<Vec<f64>> {
    if !matches!(k, 1 | 2) {
        return Err(Error::InvalidInput(format!(
            "fluid index must be 1 or 2, got {k}"
        )));
    }
    let floor = state.spec.eps().powf(wp.n_exp);
    let mut logs = Vec::with_capacity(state.len());
    for (i, c) in state.cells.iter().enumerate() {
        let cl =
            closure(c.r1, c.r2, params).map_err(|e| Error::Domain(format!("cell {i}: {e}")))?;
        let rho = if k == 1 { cl.rho1 } else { cl.rho2 };
        logs.push((rho + floor).ln());
    }
    let kk = if k == 1 { params.k1 } else { params.k2 };
    let b = state.spec.boundary;
    let smoothed = match wp.phi_stencil {
        1 => smooth3(&logs, wp.nu_phi, b),
        _ => smooth5(&logs, wp.nu_phi, b),
    };
    Ok(smoothed.into_iter().map(|v| kk * v).collect())
}

/// Time derivative of the conserved fields.
pub fn rhs(state: &GridState, params: &FluidParams, wp: &WamParams) -> Result<Vec<ConservedCell>> {
    if let Some(i) = state.cells.iter().position(|c| !(c.r1 > 0.0 && c.r2 > 0.0)) {
        let c = state.cells[i];
        return Err(Error::Domain(format!(
            "non-positive partial density at cell {i}: r1 = {}, r2 = {}",
            c.r1, c.r2
        )));
    }
    let spec = &state.spec;
    let eps = spec.eps();
    let inv_eps = 1.0 / eps;
    let floor = eps.powf(wp.beta);
    let inv_2h = 0.5 / spec.h();
    let phi1 = potential(state, params, wp, 1)?;
    let phi2 = potential(state, params, wp, 2)?;
    let cells = &state.cells;
    let n = cells.len();

    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let (l, r) = (spec.neighbor(i, -1), spec.neighbor(i, 1));
        let (cl, c, cr) = (cells[l], cells[i], cells[r]);
        let fluid = |rl: f64, ml: f64, rc: f64, mc: f64, rr: f64, mr: f64| {
            let ul = crate::eos::velocity(rl, ml);
            let uc = crate::eos::velocity(rc, mc);
            let ur = crate::eos::velocity(rr, mr);
            let (ulp, _) = split_velocity(ul);
            let (_, urm) = split_velocity(ur);
            let a = uc.abs();
            let dr = inv_eps * (rl * ulp - rc * a + rr * urm) + floor;
            let dm = inv_eps * (ml * ulp - mc * a + mr * urm);
            (dr, dm)
        };
        let (dr1, dm1) = fluid(cl.r1, cl.m1, c.r1, c.m1, cr.r1, cr.m1);
        let (dr2, dm2) = fluid(cl.r2, cl.m2, c.r2, c.m2, cr.r2, cr.m2);
        let f1 = c.r1 * (phi1[r] - phi1[l]) * inv_2h;
        let f2 = c.r2 * (phi2[r] - phi2[l]) * inv_2h;
        out.push(ConservedCell::new(
            dr1,
            dr2,
            dm1 - f1 + params.g * c.r1,
            dm2 - f2 + params.g * c.r2,
        ));
    }
    Ok(out)
}

fn check_cfl(state: &GridState, cfl: f64) -> Result<()> {
    let mut worst: Option<(usize, f64)> = None;
    for (i, c) in state.cells.iter().enumerate() {
        let s = c.u1().abs().max(c.u2().abs());
        if !(cfl * s < 1.0) && worst.is_none_or(|(_, w)| s > w || w.is_nan()) {
            worst = Some((i, s));
        }
    }
    match worst {
        Some((cell, speed)) => Err(Error::Stability {
            cell,
            speed,
            courant: cfl * speed,
        }),
        None => Ok(()),
    }
}

/// One explicit Euler step followed by the per-step averaging.
pub fn step_euler(state: &GridState, params: &FluidParams, wp: &WamParams) -> Result<GridState> {
    check_cfl(state, wp.cfl)?;
    let dt = wp.dt(&state.spec);
    let rates = rhs(state, params, wp)?;
    let cells = state
        .cells
        .iter()
        .zip(&rates)
        .map(|(c, d)| {
            ConservedCell::new(
                c.r1 + dt * d.r1,
                c.r2 + dt * d.r2,
                c.m1 + dt * d.m1,
                c.m2 + dt * d.m2,
            )
        })
        .collect();
    let advanced = GridState {
        spec: state.spec,
        cells,
        t: state.t + dt,
    };
    let out = if wp.nu_step > 0.0 {
        smooth3_state(&advanced, wp.nu_step)
    } else {
        advanced
    };
    if let Some(i) = out.cells.iter().position(|c| !c.is_finite()) {
        return Err(Error::InvalidState(format!(
            "non-finite state at cell {i}, t = {}",
            out.t
        )));
    }
    Ok(out)
}

/// Three-point averaging of every conserved field with weight `nu`.
pub fn regularize_ic(raw: &GridState, nu: f64) -> Result<GridState> {
    if !(0.0..0.5).contains(&nu) {
        return Err(Error::InvalidInput(format!(
            "averaging weight {nu} outside [0, 0.5)"
        )));
    }
    if nu == 0.0 {
        return Ok(raw.clone());
    }
    Ok(smooth3_state(raw, nu))
}

/// [`TimeStepper`] adaptor for the weak-asymptotic integrator.
#[derive(Debug, Clone, Copy)]
pub struct WamStepper(pub WamParams);

impl TimeStepper for WamStepper {
    fn name(&self) -> &'static str {
        "wam"
    }

    fn dt(&self, spec: &GridSpec) -> f64 {
        self.0.dt(spec)
    }

    fn step(&self, state: &GridState, params: &FluidParams) -> Result<GridState> {
        step_euler(state, params, &self.0)
    }
}

/// Integrates `ic` to `wp.t_final`.
pub fn run_wam(ic: &GridState, params: &FluidParams, wp: &WamParams) -> Result<GridState> {
    run_wam_with_snapshots(ic, params, wp, &[], |_| Ok(()))
}

/// As [`run_wam`], handing the state at each of `times` to `on_snapshot`.
pub fn run_wam_with_snapshots<F>(
    ic: &GridState,
    params: &FluidParams,
    wp: &WamParams,
    times: &[f64],
    on_snapshot: F,
) -> Result<GridState>
where
    F: FnMut(&GridState) -> Result<()>,
{
    wp.validate()?;
    params.validate()?;
    integrate(
        &WamStepper(*wp),
        ic.clone(),
        params,
        wp.t_final,
        times,
        on_snapshot,
    )
}
