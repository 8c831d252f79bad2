//! Distance between two profiles on the same grid.

use std::path::Path;

use crate::diag::profile::{Field, Profile};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldDistance {
    pub field: Field,
    /// Mean absolute difference per cell, `int |a - b| dx / L`.
    pub l1: f64,
    /// Total variation of the reference profile.
    pub tv: f64,
}

impl FieldDistance {
    pub fn ratio(&self) -> f64 {
        if self.tv > 0.0 {
            self.l1 / self.tv
        } else if self.l1 == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

pub const COMPARED: [Field; 4] = [Field::Alpha, Field::P, Field::U1, Field::U2];

/// L1 distance of `a` from `reference` for alpha, p, u1 and u2.
pub fn compare_profiles(a: &Profile, reference: &Profile) -> Result<Vec<FieldDistance>> {
    if a.x != reference.x {
        return Err(Error::InvalidInput(
            "profiles are on different grids".into(),
        ));
    }
    let n = a.len().max(1) as f64;
    Ok(COMPARED
        .iter()
        .map(|&f| FieldDistance {
            field: f,
            l1: a
                .get(f)
                .iter()
                .zip(reference.get(f))
                .map(|(x, y)| (x - y).abs())
                .sum::<f64>()
                / n,
            tv: reference.total_variation(f),
        })
        .collect())
}

pub fn write_comparison_csv(path: &Path, rows: &[FieldDistance]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    w.write_record(["field", "l1", "tv", "ratio"])
        .map_err(|e| Error::csv(path, e))?;
    for r in rows {
        w.write_record([
            r.field.name().to_string(),
            format!("{}", r.l1),
            format!("{}", r.tv),
            format!("{}", r.ratio()),
        ])
        .map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}
