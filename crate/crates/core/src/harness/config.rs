//! Run configuration and its flat `key=value` manifest form.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::preset::{preset, Preset};
use crate::eos::{FluidParams, RiemannData};
use crate::error::{Error, Result};
use crate::grid::{Boundary, GridSpec};
use crate::tcs::{PressureDensities, SchemeParams};
use crate::wam::WamParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeChoice {
    Wam,
    Tcs,
    Both,
}

impl SchemeChoice {
    pub fn name(self) -> &'static str {
        match self {
            SchemeChoice::Wam => "wam",
            SchemeChoice::Tcs => "tcs",
            SchemeChoice::Both => "both",
        }
    }

    pub fn runs_wam(self) -> bool {
        self != SchemeChoice::Tcs
    }

    pub fn runs_tcs(self) -> bool {
        self != SchemeChoice::Wam
    }
}

impl FromStr for SchemeChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wam" => Ok(SchemeChoice::Wam),
            "tcs" => Ok(SchemeChoice::Tcs),
            "both" => Ok(SchemeChoice::Both),
            other => Err(Error::Usage(format!(
                "unknown scheme '{other}' (expected wam|tcs|both)"
            ))),
        }
    }
}

/// A complete, self-describing run. `t_final` here overrides the horizons
/// inside `wam` and `tcs`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub preset: Preset,
    pub scheme: SchemeChoice,
    pub params: FluidParams,
    pub data: RiemannData,
    pub grid: GridSpec,
    pub wam: WamParams,
    pub tcs: SchemeParams,
    pub t_final: f64,
    pub snapshots: Vec<f64>,
    pub out_dir: PathBuf,
}

impl RunConfig {
    /// Preset defaults, both schemes, snapshots at `T/2` and `T`.
    pub fn from_preset(p: Preset) -> Result<Self> {
        let s = preset(p.name())?;
        let t_final = s.tcs.t_final;
        Ok(RunConfig {
            preset: p,
            scheme: SchemeChoice::Both,
            params: s.params,
            data: s.data,
            grid: s.grid,
            wam: s.wam,
            tcs: s.tcs,
            t_final,
            snapshots: default_snapshots(t_final),
            out_dir: PathBuf::from("out"),
        })
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.data.validate()?;
        self.grid.validate()?;
        if !(self.t_final >= 0.0 && self.t_final.is_finite()) {
            return Err(Error::InvalidInput(format!("bad t_final {}", self.t_final)));
        }
        if self.scheme.runs_wam() {
            self.wam_params().validate()?;
        }
        if self.scheme.runs_tcs() {
            self.tcs_params().validate()?;
        }
        if let Some(t) = self
            .snapshots
            .iter()
            .find(|t| !(**t >= 0.0 && **t <= self.t_final))
        {
            return Err(Error::InvalidInput(format!(
                "snapshot time {t} outside [0, {}]",
                self.t_final
            )));
        }
        Ok(())
    }

    pub fn wam_params(&self) -> WamParams {
        WamParams {
            t_final: self.t_final,
            ..self.wam
        }
    }

    pub fn tcs_params(&self) -> SchemeParams {
        SchemeParams {
            t_final: self.t_final,
            ..self.tcs
        }
    }

    /// Snapshot times sorted with exact duplicates removed.
    pub fn snapshot_times(&self) -> Vec<f64> {
        let mut t = self.snapshots.clone();
        t.sort_by(f64::total_cmp);
        t.dedup();
        t
    }

    pub fn to_manifest(&self) -> String {
        let g = &self.grid;
        let p = &self.params;
        let d = &self.data;
        let w = &self.wam;
        let s = &self.tcs;
        let snaps: Vec<String> = self.snapshots.iter().map(|t| format!("{t}")).collect();
        let entries: Vec<(&str, String)> = vec![
            ("preset", self.preset.name().into()),
            ("scheme", self.scheme.name().into()),
            ("x_min", format!("{}", g.x_min)),
            ("x_max", format!("{}", g.x_max)),
            ("cells", g.n_cells.to_string()),
            ("boundary", g.boundary.name().into()),
            ("k1", format!("{}", p.k1)),
            ("k2", format!("{}", p.k2)),
            ("b1", format!("{}", p.b1)),
            ("b2", format!("{}", p.b2)),
            ("gravity", format!("{}", p.g)),
            ("alpha_l", format!("{}", d.alpha_l)),
            ("alpha_r", format!("{}", d.alpha_r)),
            ("p_l", format!("{}", d.p_l)),
            ("p_r", format!("{}", d.p_r)),
            ("u1_l", format!("{}", d.u1_l)),
            ("u1_r", format!("{}", d.u1_r)),
            ("u2_l", format!("{}", d.u2_l)),
            ("u2_r", format!("{}", d.u2_r)),
            ("x_jump", format!("{}", d.x_jump)),
            ("t_final", format!("{}", self.t_final)),
            ("snapshots", snaps.join(",")),
            ("wam_cfl", format!("{}", w.cfl)),
            ("wam_beta", format!("{}", w.beta)),
            ("wam_n_exp", format!("{}", w.n_exp)),
            ("nu_ic", format!("{}", w.nu_ic)),
            ("nu_phi", format!("{}", w.nu_phi)),
            ("phi_stencil", w.phi_stencil.to_string()),
            ("nu_step", format!("{}", w.nu_step)),
            ("tcs_cfl", format!("{}", s.cfl)),
            ("mu", format!("{}", s.mu)),
            ("tcs_pressure", s.pressure.name().into()),
            ("out", self.out_dir.display().to_string()),
        ];
        let mut out = String::new();
        for (k, v) in entries {
            let _ = writeln!(out, "{k}={v}");
        }
        out
    }

    /// Parses a manifest. Keys may be missing (the preset default is used) but
    /// unknown keys are rejected.
    pub fn from_manifest(text: &str, origin: &Path) -> Result<Self> {
        let schema = |reason: String| Error::Schema {
            path: origin.into(),
            reason,
        };
        let mut kv = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| schema(format!("line {}: expected key=value", n + 1)))?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let preset: Preset = match kv.get("preset") {
            Some(v) => v
                .parse()
                .map_err(|_| schema(format!("unknown preset '{v}'")))?,
            None => return Err(schema("missing key 'preset'".into())),
        };
        let mut cfg = match preset {
            Preset::Custom => {
                let mut c = RunConfig::from_preset(Preset::ShockTube1)?;
                c.preset = Preset::Custom;
                c
            }
            p => RunConfig::from_preset(p)?,
        };
        if preset == Preset::Custom {
            for key in [
                "alpha_l", "alpha_r", "p_l", "p_r", "u1_l", "u1_r", "u2_l", "u2_r",
            ] {
                if !kv.contains_key(key) {
                    return Err(schema(format!("custom preset needs '{key}'")));
                }
            }
        }
        for (k, v) in &kv {
            let num = || -> Result<f64> {
                v.parse::<f64>()
                    .map_err(|_| schema(format!("key '{k}': '{v}' is not a number")))
            };
            match k.as_str() {
                "preset" => {}
                "scheme" => cfg.scheme = v.parse().map_err(|e: Error| schema(e.to_string()))?,
                "x_min" => cfg.grid.x_min = num()?,
                "x_max" => cfg.grid.x_max = num()?,
                "cells" => {
                    cfg.grid.n_cells = v
                        .parse()
                        .map_err(|_| schema(format!("key 'cells': '{v}' is not a count")))?
                }
                "boundary" => {
                    cfg.grid.boundary = v.parse::<Boundary>().map_err(|e| schema(e.to_string()))?
                }
                "k1" => cfg.params.k1 = num()?,
                "k2" => cfg.params.k2 = num()?,
                "b1" => cfg.params.b1 = num()?,
                "b2" => cfg.params.b2 = num()?,
                "gravity" => cfg.params.g = num()?,
                "alpha_l" => cfg.data.alpha_l = num()?,
                "alpha_r" => cfg.data.alpha_r = num()?,
                "p_l" => cfg.data.p_l = num()?,
                "p_r" => cfg.data.p_r = num()?,
                "u1_l" => cfg.data.u1_l = num()?,
                "u1_r" => cfg.data.u1_r = num()?,
                "u2_l" => cfg.data.u2_l = num()?,
                "u2_r" => cfg.data.u2_r = num()?,
                "x_jump" => cfg.data.x_jump = num()?,
                "t_final" => cfg.t_final = num()?,
                "snapshots" => {
                    cfg.snapshots =
                        parse_times(v).map_err(|e| schema(format!("key 'snapshots': {e}")))?
                }
                "wam_cfl" => cfg.wam.cfl = num()?,
                "wam_beta" => cfg.wam.beta = num()?,
                "wam_n_exp" => cfg.wam.n_exp = num()?,
                "nu_ic" => cfg.wam.nu_ic = num()?,
                "nu_phi" => cfg.wam.nu_phi = num()?,
                "phi_stencil" => {
                    cfg.wam.phi_stencil = v
                        .parse()
                        .map_err(|_| schema(format!("key 'phi_stencil': '{v}'")))?
                }
                "nu_step" => cfg.wam.nu_step = num()?,
                "tcs_cfl" => cfg.tcs.cfl = num()?,
                "mu" => cfg.tcs.mu = num()?,
                "tcs_pressure" => {
                    cfg.tcs.pressure = v
                        .parse::<PressureDensities>()
                        .map_err(|e| schema(e.to_string()))?
                }
                "out" => cfg.out_dir = PathBuf::from(v),
                other => return Err(schema(format!("unknown key '{other}'"))),
            }
        }
        if !kv.contains_key("snapshots") {
            cfg.snapshots = default_snapshots(cfg.t_final);
        }
        cfg.wam.t_final = cfg.t_final;
        cfg.tcs.t_final = cfg.t_final;
        Ok(cfg)
    }

    pub fn read_manifest(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_manifest(&text, path)
    }
}

/// `[T/2, T]`, or `[0]` when `T = 0`.
pub fn default_snapshots(t_final: f64) -> Vec<f64> {
    if t_final > 0.0 {
        vec![0.5 * t_final, t_final]
    } else {
        vec![0.0]
    }
}

/// Comma-separated list of times.
pub fn parse_times(s: &str) -> Result<Vec<f64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Usage(format!("'{t}' is not a time")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_round_trip() {
        let mut cfg = RunConfig::from_preset(Preset::ShockTube2).unwrap();
        cfg.snapshots = vec![1e-4, 3.3e-4, 1e-3];
        cfg.wam.cfl = 1e-5;
        cfg.wam.nu_step = 1e-3;
        cfg.params.g = -9.81;
        let text = cfg.to_manifest();
        let back = RunConfig::from_manifest(&text, Path::new("m.txt")).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn manifest_rejects_unknown_keys() {
        let err = RunConfig::from_manifest("preset=shock-tube-1\ncolour=red\n", Path::new("m"))
            .unwrap_err();
        assert!(matches!(err, Error::Schema { .. }));
        let err = RunConfig::from_manifest("preset=custom\n", Path::new("m")).unwrap_err();
        assert!(matches!(err, Error::Schema { .. }));
    }

    #[test]
    fn zero_horizon_gives_single_snapshot() {
        assert_eq!(default_snapshots(0.0), vec![0.0]);
        assert_eq!(parse_times("1e-4, 2e-4").unwrap(), vec![1e-4, 2e-4]);
        assert!(parse_times("a").is_err());
    }
}
