//! Post-processing of computed profiles: plateaus, jump-condition wave speeds,
//! conservation audits, weak-form residuals and the singular middle wave.

pub mod audit;
pub mod plateau;
pub mod profile;
pub mod singular;
pub mod waves;
pub mod weak;

pub use audit::{mass_audit, MassAudit};
pub use plateau::{detect_plateaus, detect_plateaus_with, Plateau, PlateauOptions};
pub use profile::{Field, Profile};
pub use singular::{singular_wave_metrics, SingularWaveMetrics};
pub use waves::{principal_waves, wave_report, wave_speeds, Wave, WaveReport, WaveRow, WaveSpeeds};
pub use weak::{weak_residual, Bump, WeakResidual};
