//! Detection of near-constant runs ("plateaus") in a profile.

use super::profile::{Field, Profile};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateauOptions {
    /// Allowed deviation from the run mean, as a fraction of each field's
    /// range over the whole profile.
    pub tol: f64,
    /// Shortest run kept; `None` means 1% of the cells (at least 3).
    pub min_len: Option<usize>,
}

impl Default for PlateauOptions {
    fn default() -> Self {
        PlateauOptions {
            tol: 1e-3,
            min_len: None,
        }
    }
}

impl PlateauOptions {
    pub fn min_len_for(&self, n: usize) -> usize {
        self.min_len.unwrap_or((n / 100).max(3))
    }
}

/// A maximal run of cells `start..end` over which every field is flat.
#[derive(Debug, Clone, PartialEq)]
pub struct Plateau {
    pub start: usize,
    pub end: usize,
    pub x_start: f64,
    pub x_end: f64,
    /// Mean of each field over the whole run, indexed by [`Field::index`].
    pub mean: [f64; 8],
    /// Mean over the central 60% of the run; this is the state used in jump
    /// brackets because the run ends still carry wave tails.
    pub core: [f64; 8],
}

impl Plateau {
    pub fn samples(&self) -> usize {
        self.end - self.start
    }

    pub fn value(&self, f: Field) -> f64 {
        self.core[f.index()]
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.x_start + self.x_end)
    }
}

pub fn detect_plateaus(profile: &Profile, tol: f64) -> Vec<Plateau> {
    detect_plateaus_with(
        profile,
        &PlateauOptions {
            tol,
            ..Default::default()
        },
    )
}

/// Greedy left-to-right scan: each run is grown while every field stays
/// within `tol * range` of the run mean.
pub fn detect_plateaus_with(profile: &Profile, opts: &PlateauOptions) -> Vec<Plateau> {
    let n = profile.len();
    if n == 0 {
        return Vec::new();
    }
    let min_len = opts.min_len_for(n).max(1);
    let limits: Vec<f64> = Field::ALL
        .iter()
        .map(|&f| opts.tol * profile.range(f).max(1e-300))
        .collect();
    let fields: Vec<&[f64]> = Field::ALL.iter().map(|&f| profile.get(f)).collect();

    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut sum = [0.0; 8];
        let mut lo = [f64::INFINITY; 8];
        let mut hi = [f64::NEG_INFINITY; 8];
        let mut j = i;
        while j < n {
            let mut ok = true;
            let mut next = (sum, lo, hi);
            let len = (j - i + 1) as f64;
            for q in 0..8 {
                let v = fields[q][j];
                next.0[q] += v;
                next.1[q] = next.1[q].min(v);
                next.2[q] = next.2[q].max(v);
                let m = next.0[q] / len;
                if !((next.2[q] - m).max(m - next.1[q]) <= limits[q]) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                break;
            }
            (sum, lo, hi) = next;
            j += 1;
        }
        let len = j - i;
        if len >= min_len {
            out.push(build(profile, &fields, i, j));
            i = j;
        } else {
            i += 1;
        }
    }
    out
}

fn build(profile: &Profile, fields: &[&[f64]], start: usize, end: usize) -> Plateau {
    let len = end - start;
    let k = (len / 5).max(1);
    let (cs, ce) = if len > 2 * k {
        (start + k, end - k)
    } else {
        (start, end)
    };
    let avg = |a: usize, b: usize| -> [f64; 8] {
        let mut m = [0.0; 8];
        for (q, f) in fields.iter().enumerate() {
            m[q] = f[a..b].iter().sum::<f64>() / (b - a) as f64;
        }
        m
    };
    Plateau {
        start,
        end,
        x_start: profile.x[start],
        x_end: profile.x[end - 1],
        mean: avg(start, end),
        core: avg(cs, ce),
    }
}
