//! Left / middle / right wave-speed tables.

use std::io::Write as _;
use std::path::Path;

use crate::diag::plateau::{detect_plateaus_with, PlateauOptions};
use crate::diag::profile::Profile;
use crate::diag::waves::{principal_waves, wave_speeds, WaveSpeeds};
use crate::eos::FluidParams;
use crate::error::{Error, Result};

/// One row of c1..c5 per principal wave.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct WaveArray {
    pub rows: Vec<(String, f64, WaveSpeeds)>,
    pub warnings: Vec<String>,
}

impl WaveArray {
    /// Speeds of the row labelled `label` (`left`, `middle` or `right`).
    pub fn row(&self, label: &str) -> Option<&WaveSpeeds> {
        self.rows.iter().find(|r| r.0 == label).map(|r| &r.2)
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
        w.write_record(["wave", "x", "c1", "c2", "c3", "c4", "c5"])
            .map_err(|e| Error::csv(path, e))?;
        for (label, x, c) in &self.rows {
            let mut rec = vec![label.clone(), format!("{x}")];
            rec.extend(
                c.0.iter()
                    .map(|v| v.map_or("NA".into(), |v| format!("{v}"))),
            );
            w.write_record(&rec).map_err(|e| Error::csv(path, e))?;
        }
        w.flush().map_err(|e| Error::io(path, e))
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        let _ = writeln!(
            out,
            "{:<8} {:>10} {:>10} {:>10} {:>10} {:>10}",
            "", "c1", "c2", "c3", "c4", "c5"
        );
        for (label, _, c) in &self.rows {
            let _ = write!(out, "{label:<8}");
            for v in c.0 {
                let _ = write!(out, " {:>10}", v.map_or("NA".into(), |v| format!("{v:.2}")));
            }
            let _ = writeln!(out);
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        String::from_utf8(out).unwrap_or_default()
    }
}

/// Finds the three principal waves of `profile` and applies the five
/// jump-condition formulas to each.
pub fn reproduce_arrays(
    profile: &Profile,
    params: &FluidParams,
    opts: &PlateauOptions,
) -> WaveArray {
    let plateaus = detect_plateaus_with(profile, opts);
    let waves = principal_waves(profile, &plateaus, 3);
    let mut arr = WaveArray::default();
    let labels: &[&str] = if waves.len() == 3 {
        &["left", "middle", "right"]
    } else {
        arr.warnings.push(format!(
            "expected 3 waves, found {} ({} plateaus)",
            waves.len(),
            plateaus.len()
        ));
        &["wave0", "wave1", "wave2"]
    };
    for (w, label) in waves.iter().zip(labels) {
        arr.rows.push((
            label.to_string(),
            w.position,
            wave_speeds(&w.left, &w.right, params),
        ));
    }
    arr
}
