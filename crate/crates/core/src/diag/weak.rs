//! Residuals of the weak (integrated against a test function) form of the
//! mass and momentum equations.

use crate::eos::{closure, FluidParams};
use crate::error::{Error, Result};
use crate::grid::GridState;

/// Raised-cosine bump `(1 + cos(pi (x - center) / radius)) / 2` on
/// `|x - center| < radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bump {
    pub center: f64,
    pub radius: f64,
}

impl Bump {
    pub fn psi(&self, x: f64) -> f64 {
        let z = (x - self.center) / self.radius;
        if z.abs() < 1.0 {
            0.5 * (1.0 + (std::f64::consts::PI * z).cos())
        } else {
            0.0
        }
    }

    pub fn dpsi(&self, x: f64) -> f64 {
        let z = (x - self.center) / self.radius;
        if z.abs() < 1.0 {
            -0.5 * std::f64::consts::PI / self.radius * (std::f64::consts::PI * z).sin()
        } else {
            0.0
        }
    }
}

/// Absolute residuals per fluid. `momentum` includes the gravity source;
/// `gravity_source` is that source on its own, `g * int r_k psi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakResidual {
    pub continuity: [f64; 2],
    pub momentum: [f64; 2],
    pub gravity_source: [f64; 2],
}

impl WeakResidual {
    /// `[continuity 1, continuity 2, momentum 1, momentum 2]`.
    pub fn values(&self) -> [f64; 4] {
        [
            self.continuity[0],
            self.continuity[1],
            self.momentum[0],
            self.momentum[1],
        ]
    }
}

/// Residuals between the last two snapshots of `history`. The time
/// derivative is the forward difference; the remaining terms use the mean of
/// the two snapshots, with `Phi_k = K_k log rho_k` differenced centrally.
#[allow(clippy::needless_range_loop)]
pub fn weak_residual(
    history: &[GridState],
    bump: &Bump,
    params: &FluidParams,
) -> Result<WeakResidual> {
    let [.., a, b] = history else {
        return Err(Error::InvalidInput(
            "weak residual needs two snapshots".into(),
        ));
    };
    if a.spec != b.spec {
        return Err(Error::InvalidInput(
            "snapshots are on different grids".into(),
        ));
    }
    let dt = b.t - a.t;
    if !(dt > 0.0) {
        return Err(Error::InvalidInput(format!(
            "snapshot spacing {dt} is not positive"
        )));
    }
    let spec = &a.spec;
    if !(bump.radius > 0.0
        && bump.center - bump.radius > spec.x_min
        && bump.center + bump.radius < spec.x_max)
    {
        return Err(Error::InvalidInput(format!(
            "test function support [{}, {}] must lie strictly inside [{}, {}]",
            bump.center - bump.radius,
            bump.center + bump.radius,
            spec.x_min,
            spec.x_max
        )));
    }

    let n = spec.n_cells;
    let h = spec.h();
    let mid: Vec<_> = a
        .cells
        .iter()
        .zip(&b.cells)
        .map(|(p, q)| {
            [
                0.5 * (p.r1 + q.r1),
                0.5 * (p.r2 + q.r2),
                0.5 * (p.m1 + q.m1),
                0.5 * (p.m2 + q.m2),
            ]
        })
        .collect();
    let mut phi = [vec![0.0; n], vec![0.0; n]];
    for (i, c) in mid.iter().enumerate() {
        let cl =
            closure(c[0], c[1], params).map_err(|e| Error::Domain(format!("cell {i}: {e}")))?;
        phi[0][i] = params.k1 * cl.rho1.ln();
        phi[1][i] = params.k2 * cl.rho2.ln();
    }

    let mut cont = [0.0; 2];
    let mut mom = [0.0; 2];
    let mut grav = [0.0; 2];
    for i in 0..n {
        let x = spec.x_center(i);
        let (psi, dpsi) = (bump.psi(x), bump.dpsi(x));
        if psi == 0.0 && dpsi == 0.0 {
            continue;
        }
        let (p, q) = (&a.cells[i], &b.cells[i]);
        let dr = [(q.r1 - p.r1) / dt, (q.r2 - p.r2) / dt];
        let dm = [(q.m1 - p.m1) / dt, (q.m2 - p.m2) / dt];
        let (l, r) = (spec.neighbor(i, -1), spec.neighbor(i, 1));
        for k in 0..2 {
            let (rk, mk) = (mid[i][k], mid[i][k + 2]);
            let dphi = (phi[k][r] - phi[k][l]) / (2.0 * h);
            cont[k] += dr[k] * psi - mk * dpsi;
            mom[k] += dm[k] * psi - mk * mk / rk * dpsi + rk * dphi * psi - params.g * rk * psi;
            grav[k] += params.g * rk * psi;
        }
    }
    Ok(WeakResidual {
        continuity: cont.map(|v| (v * h).abs()),
        momentum: mom.map(|v| (v * h).abs()),
        gravity_source: grav.map(|v| v * h),
    })
}
