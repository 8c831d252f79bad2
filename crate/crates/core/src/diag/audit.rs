//! Conservation audit over a sequence of snapshots.

use crate::error::{Error, Result};
use crate::grid::GridState;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MassAudit {
    pub times: Vec<f64>,
    /// `sum_i r_k,i * h` per snapshot.
    pub masses: Vec<[f64; 2]>,
    /// `max |M_k(t) - M_k(t0)| / |M_k(t0)|` per fluid (absolute when `M_k(t0) = 0`).
    pub max_rel_drift: [f64; 2],
}

pub fn mass_audit(history: &[GridState]) -> Result<MassAudit> {
    let Some(first) = history.first() else {
        return Ok(MassAudit::default());
    };
    if let Some(s) = history.iter().find(|s| s.spec != first.spec) {
        return Err(Error::InvalidInput(format!(
            "snapshot at t = {} is on a different grid",
            s.t
        )));
    }
    let masses: Vec<[f64; 2]> = history.iter().map(GridState::total_mass).collect();
    let m0 = masses[0];
    let mut drift = [0.0f64; 2];
    for m in &masses {
        for k in 0..2 {
            let d = (m[k] - m0[k]).abs();
            drift[k] = drift[k].max(if m0[k] != 0.0 { d / m0[k].abs() } else { d });
        }
    }
    Ok(MassAudit {
        times: history.iter().map(|s| s.t).collect(),
        masses,
        max_rel_drift: drift,
    })
}
