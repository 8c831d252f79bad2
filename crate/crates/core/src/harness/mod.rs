//! Shock-tube presets, run configuration and manifests, and the pipelines that
//! turn solver output into snapshot files, wave arrays and scaling tables.

pub mod arrays;
pub mod compare;
pub mod config;
pub mod preset;
pub mod run;
pub mod scaling;

pub use arrays::{reproduce_arrays, WaveArray};
pub use compare::{compare_profiles, FieldDistance};
pub use config::{RunConfig, SchemeChoice};
pub use preset::{preset, Preset, PresetSetup};
pub use run::{initial_state, run, simulate, RunSummary, SchemeOutput, Solver};
pub use scaling::{scaling_study, ScalingRow};
