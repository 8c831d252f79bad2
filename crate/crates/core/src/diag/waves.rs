//! Wave speeds from jump conditions across pairs of plateaus, and tracking of
//! the principal waves between two snapshots.

use std::path::Path;

use super::plateau::{detect_plateaus_with, Plateau, PlateauOptions};
use super::profile::{Field, Profile};
use crate::eos::FluidParams;
use crate::error::{Error, Result};

/// A jump smaller than this fraction of the larger side is treated as zero.
pub const NOT_APPLICABLE_REL: f64 = 1e-6;

/// The five jump-condition speeds; `None` where the denominator vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct WaveSpeeds(pub [Option<f64>; 5]);

impl WaveSpeeds {
    pub fn get(&self, k: usize) -> Option<f64> {
        self.0[k]
    }

    pub fn applicable(&self) -> impl Iterator<Item = f64> + '_ {
        self.0.iter().flatten().copied()
    }

    /// `max - min` over the applicable speeds.
    pub fn spread(&self) -> Option<f64> {
        let mut it = self.applicable();
        let first = it.next()?;
        let (lo, hi) = it.fold((first, first), |(lo, hi), c| (lo.min(c), hi.max(c)));
        Some(hi - lo)
    }
}

fn ratio(num: f64, l: f64, r: f64) -> Option<f64> {
    let d = r - l;
    let scale = l.abs().max(r.abs());
    if !(d.abs() > NOT_APPLICABLE_REL * scale) || !num.is_finite() {
        return None;
    }
    Some(num / d)
}

/// Speeds from the plateau states on either side of a wave.
pub fn wave_speeds(left: &Plateau, right: &Plateau, params: &FluidParams) -> WaveSpeeds {
    jump_speeds(&left.core, &right.core, params)
}

/// As [`wave_speeds`] on raw field vectors indexed by [`Field::index`].
pub fn jump_speeds(l: &[f64; 8], r: &[f64; 8], params: &FluidParams) -> WaveSpeeds {
    let at = |s: &[f64; 8], f: Field| s[f.index()];
    let d = |f: Field| at(r, f) - at(l, f);

    let c1 = ratio(d(Field::M1), at(l, Field::R1), at(r, Field::R1));
    let c2 = ratio(d(Field::M2), at(l, Field::R2), at(r, Field::R2));

    let flux = |s: &[f64; 8]| {
        at(s, Field::R1) * at(s, Field::U1).powi(2)
            + at(s, Field::R2) * at(s, Field::U2).powi(2)
            + at(s, Field::P)
    };
    let mom = |s: &[f64; 8]| at(s, Field::M1) + at(s, Field::M2);
    let c3 = ratio(flux(r) - flux(l), mom(l), mom(r));

    let rho1 = |s: &[f64; 8]| at(s, Field::R1) / at(s, Field::Alpha);
    let rho2 = |s: &[f64; 8]| at(s, Field::R2) / (1.0 - at(s, Field::Alpha));
    let log_speed = |k: f64, rl: f64, rr: f64, u: Field| {
        if !(rl > 0.0 && rr > 0.0) {
            return None;
        }
        let (ul, ur) = (at(l, u), at(r, u));
        ratio(k * (rr.ln() - rl.ln()), ul, ur).map(|c| c + 0.5 * (ul + ur))
    };
    let c4 = log_speed(params.k1, rho1(l), rho1(r), Field::U1);
    let c5 = log_speed(params.k2, rho2(l), rho2(r), Field::U2);
    WaveSpeeds([c1, c2, c3, c4, c5])
}

/// One of the principal waves of a profile: the gap between two plateaus.
#[derive(Debug, Clone, PartialEq)]
pub struct Wave {
    pub left: Plateau,
    pub right: Plateau,
    /// Midpoint of the gap between the plateaus.
    pub position: f64,
    /// Sum over fields of `|jump| / range`.
    pub strength: f64,
}

/// The `count` strongest jumps between consecutive plateaus, ordered by position.
pub fn principal_waves(profile: &Profile, plateaus: &[Plateau], count: usize) -> Vec<Wave> {
    let ranges: Vec<f64> = Field::ALL
        .iter()
        .map(|&f| profile.range(f).max(1e-300))
        .collect();
    let mut gaps: Vec<(f64, usize)> = plateaus
        .windows(2)
        .enumerate()
        .map(|(k, w)| {
            let s = (0..8)
                .map(|q| (w[1].core[q] - w[0].core[q]).abs() / ranges[q])
                .sum::<f64>();
            (s, k)
        })
        .collect();
    gaps.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    gaps.truncate(count);
    gaps.sort_by_key(|g| g.1);
    gaps.into_iter()
        .map(|(strength, k)| {
            let (l, r) = (&plateaus[k], &plateaus[k + 1]);
            Wave {
                left: l.clone(),
                right: r.clone(),
                position: 0.5 * (l.x_end + r.x_start),
                strength,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct WaveRow {
    pub wave_id: usize,
    pub x_t1: f64,
    pub x_t2: f64,
    pub c_measured: Option<f64>,
    pub speeds: WaveSpeeds,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct WaveReport {
    pub rows: Vec<WaveRow>,
    pub warnings: Vec<String>,
}

pub const WAVE_CSV_HEADER: [&str; 9] = [
    "wave_id",
    "x_t1",
    "x_t2",
    "c_measured",
    "c1",
    "c2",
    "c3",
    "c4",
    "c5",
];

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), |c| format!("{c}"))
}

impl WaveReport {
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
        w.write_record(WAVE_CSV_HEADER)
            .map_err(|e| Error::csv(path, e))?;
        for row in &self.rows {
            let mut rec = vec![
                row.wave_id.to_string(),
                format!("{}", row.x_t1),
                format!("{}", row.x_t2),
                fmt_opt(row.c_measured),
            ];
            rec.extend(row.speeds.0.iter().map(|c| fmt_opt(*c)));
            w.write_record(&rec).map_err(|e| Error::csv(path, e))?;
        }
        w.flush().map_err(|e| Error::io(path, e))
    }

    /// Aligned text table, one line per wave.
    pub fn write_text(&self, out: &mut impl std::io::Write) -> std::io::Result<()> {
        writeln!(
            out,
            "{:>4} {:>9} {:>9} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
            "wave", "x_t1", "x_t2", "measured", "c1", "c2", "c3", "c4", "c5"
        )?;
        let cell = |v: Option<f64>| v.map_or_else(|| "NA".to_string(), |c| format!("{c:.2}"));
        for r in &self.rows {
            write!(
                out,
                "{:>4} {:>9.4} {:>9.4} {:>10}",
                r.wave_id,
                r.x_t1,
                r.x_t2,
                cell(r.c_measured)
            )?;
            for c in r.speeds.0 {
                write!(out, " {:>10}", cell(c))?;
            }
            writeln!(out)?;
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}")?;
        }
        Ok(())
    }
}

/// Detects the `count` principal waves at two times and reports their
/// measured speed and the jump-condition speeds at the later time.
pub fn wave_report(
    early: (&Profile, f64),
    late: (&Profile, f64),
    params: &FluidParams,
    opts: &PlateauOptions,
    count: usize,
) -> WaveReport {
    let mut report = WaveReport::default();
    let late_waves = principal_waves(late.0, &detect_plateaus_with(late.0, opts), count);
    let early_waves = principal_waves(early.0, &detect_plateaus_with(early.0, opts), count);
    if late_waves.len() < count {
        report.warnings.push(format!(
            "found {} of {count} waves at t = {}",
            late_waves.len(),
            late.1
        ));
    }
    let paired = early_waves.len() == late_waves.len();
    if !paired {
        report.warnings.push(format!(
            "wave count differs between t = {} ({}) and t = {} ({}); measured speeds omitted",
            early.1,
            early_waves.len(),
            late.1,
            late_waves.len()
        ));
    }
    let dt = late.1 - early.1;
    for (id, w) in late_waves.iter().enumerate() {
        let x_t1 = if paired {
            early_waves[id].position
        } else {
            f64::NAN
        };
        let c_measured = (paired && dt > 0.0).then(|| (w.position - x_t1) / dt);
        report.rows.push(WaveRow {
            wave_id: id,
            x_t1,
            x_t2: w.position,
            c_measured,
            speeds: wave_speeds(&w.left, &w.right, params),
        });
    }
    report
}
