//! Size of the volume-fraction dip carried by the middle wave.

use super::profile::{Field, Profile};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularWaveMetrics {
    /// `sum max(alpha0 - alpha_i, 0) * h` over the window.
    pub area: f64,
    /// Extent where `alpha0 - alpha` exceeds 10% of the dip depth.
    pub width: f64,
    pub min_alpha: f64,
}

/// Dip metrics relative to `alpha0`, restricted to cells whose centre lies in
/// `window` (the whole profile when `None`).
pub fn singular_wave_metrics(
    profile: &Profile,
    alpha0: f64,
    window: Option<(f64, f64)>,
) -> SingularWaveMetrics {
    let h = profile.h();
    let (lo, hi) = window.unwrap_or((f64::NEG_INFINITY, f64::INFINITY));
    let alpha: Vec<f64> = profile
        .x
        .iter()
        .zip(profile.get(Field::Alpha))
        .filter(|(x, _)| **x >= lo && **x <= hi)
        .map(|(_, a)| *a)
        .collect();
    let min_alpha = alpha.iter().copied().fold(f64::INFINITY, f64::min);
    if alpha.is_empty() || !(min_alpha < alpha0) {
        return SingularWaveMetrics {
            area: 0.0,
            width: 0.0,
            min_alpha: alpha0,
        };
    }
    let area = alpha.iter().map(|a| (alpha0 - a).max(0.0)).sum::<f64>() * h;
    let threshold = 0.1 * (alpha0 - min_alpha);
    let width = alpha.iter().filter(|a| alpha0 - **a > threshold).count() as f64 * h;
    SingularWaveMetrics {
        area,
        width,
        min_alpha,
    }
}
