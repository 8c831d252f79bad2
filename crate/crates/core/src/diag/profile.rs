//! Sampled primitive and conserved fields of one snapshot, and their CSV form.

use std::path::Path;

use crate::eos::{closure_scheme, FluidParams};
use crate::error::{Error, Result};
use crate::grid::GridState;

pub const CSV_HEADER: [&str; 9] = ["x", "r1", "r2", "m1", "m2", "alpha", "p", "u1", "u2"];

/// The eight sampled fields, in CSV column order after `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    R1,
    R2,
    M1,
    M2,
    Alpha,
    P,
    U1,
    U2,
}

impl Field {
    pub const ALL: [Field; 8] = [
        Field::R1,
        Field::R2,
        Field::M1,
        Field::M2,
        Field::Alpha,
        Field::P,
        Field::U1,
        Field::U2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        CSV_HEADER[self.index() + 1]
    }
}

/// Column-major snapshot on cell centres.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub x: Vec<f64>,
    /// Indexed by [`Field::index`].
    pub fields: [Vec<f64>; 8],
}

impl Profile {
    /// Samples a state; volume fraction and pressure come from the total closure.
    pub fn from_state(state: &GridState, params: &FluidParams) -> Self {
        let n = state.len();
        let mut fields: [Vec<f64>; 8] = Default::default();
        for f in fields.iter_mut() {
            f.reserve(n);
        }
        for c in &state.cells {
            let cl = closure_scheme(c.r1.max(0.0), c.r2.max(0.0), params);
            let row = [c.r1, c.r2, c.m1, c.m2, cl.alpha, cl.p, c.u1(), c.u2()];
            for (f, v) in fields.iter_mut().zip(row) {
                f.push(v);
            }
        }
        Profile {
            x: state.spec.centers(),
            fields,
        }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn get(&self, f: Field) -> &[f64] {
        &self.fields[f.index()]
    }

    /// Cell width, assuming uniform spacing.
    pub fn h(&self) -> f64 {
        match self.x.len() {
            0 | 1 => 0.0,
            n => (self.x[n - 1] - self.x[0]) / (n - 1) as f64,
        }
    }

    /// `max - min` of a field.
    pub fn range(&self, f: Field) -> f64 {
        let v = self.get(f);
        let (lo, hi) = v
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            });
        if v.is_empty() {
            0.0
        } else {
            hi - lo
        }
    }

    /// Total variation `sum |f[i+1] - f[i]|`.
    pub fn total_variation(&self, f: Field) -> f64 {
        self.get(f).windows(2).map(|w| (w[1] - w[0]).abs()).sum()
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
        w.write_record(CSV_HEADER)
            .map_err(|e| Error::csv(path, e))?;
        let mut row: Vec<String> = Vec::with_capacity(9);
        for i in 0..self.len() {
            row.clear();
            row.push(format!("{}", self.x[i]));
            row.extend(self.fields.iter().map(|f| format!("{}", f[i])));
            w.write_record(&row).map_err(|e| Error::csv(path, e))?;
        }
        w.flush().map_err(|e| Error::io(path, e))
    }

    /// Reads a snapshot written by [`Profile::write_csv`]; any other column
    /// layout is rejected.
    pub fn read_csv(path: &Path) -> Result<Self> {
        let mut r = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
        let header = r.headers().map_err(|e| Error::csv(path, e))?.clone();
        if header.iter().ne(CSV_HEADER.iter().copied()) {
            return Err(Error::Schema {
                path: path.into(),
                reason: format!(
                    "expected columns {}, found {}",
                    CSV_HEADER.join(","),
                    header.iter().collect::<Vec<_>>().join(",")
                ),
            });
        }
        let mut x = Vec::new();
        let mut fields: [Vec<f64>; 8] = Default::default();
        for (line, rec) in r.records().enumerate() {
            let rec = rec.map_err(|e| Error::csv(path, e))?;
            let mut vals = [0.0; 9];
            for (k, cell) in rec.iter().enumerate() {
                vals[k] = cell.trim().parse().map_err(|_| Error::Schema {
                    path: path.into(),
                    reason: format!("row {}: '{cell}' is not a number", line + 2),
                })?;
            }
            x.push(vals[0]);
            for (f, v) in fields.iter_mut().zip(&vals[1..]) {
                f.push(*v);
            }
        }
        Ok(Profile { x, fields })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eos::ConservedCell;
    use crate::grid::{Boundary, GridSpec};

    #[test]
    fn csv_round_trip_is_exact() {
        let params = FluidParams::new(1e6, 1e5, 9.999e8, 0.0, 0.0).unwrap();
        let spec = GridSpec::new(0.0, 1.0, 10, Boundary::Outflow).unwrap();
        let cells = (0..10)
            .map(|i| ConservedCell::new(700.0 + i as f64 / 3.0, 1.1, 0.1 * i as f64, 0.0))
            .collect();
        let p = Profile::from_state(&GridState::new(spec, cells, 0.0).unwrap(), &params);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("snap.csv");
        p.write_csv(&path).unwrap();
        assert_eq!(Profile::read_csv(&path).unwrap(), p);

        std::fs::write(&path, "x,r1,r2,m1,m2,alpha,p,u2,u1\n").unwrap();
        assert!(matches!(
            Profile::read_csv(&path),
            Err(Error::Schema { .. })
        ));
    }
}
