//! The three shock-tube problems.

use crate::eos::{FluidParams, RiemannData};
use crate::error::{Error, Result};
use crate::grid::{Boundary, GridSpec};
use crate::tcs::SchemeParams;
use crate::wam::WamParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    ShockTube1,
    ShockTube2,
    /// Shock tube 2's pressures and velocities with `alpha = 0.6` on both sides.
    /// The source gives this case only in prose, so the data is an inference.
    ShockTube3,
    /// Riemann data supplied by a manifest.
    Custom,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::ShockTube1, Preset::ShockTube2, Preset::ShockTube3];

    pub fn name(self) -> &'static str {
        match self {
            Preset::ShockTube1 => "shock-tube-1",
            Preset::ShockTube2 => "shock-tube-2",
            Preset::ShockTube3 => "shock-tube-3",
            Preset::Custom => "custom",
        }
    }

    /// `K1 = 1e6`, `K2 = 1e5`, reference states (1000 kg/m^3, 1e5 Pa) and (0, 0).
    pub fn fluid_params() -> FluidParams {
        FluidParams {
            k1: 1e6,
            k2: 1e5,
            b1: 1e6 * 1000.0 - 1e5,
            b2: 0.0,
            g: 0.0,
        }
    }

    pub fn riemann(self) -> Option<RiemannData> {
        let base = RiemannData {
            alpha_l: 0.0,
            alpha_r: 0.0,
            p_l: 265000.0,
            p_r: 265000.0,
            u1_l: 10.0,
            u1_r: 15.0,
            u2_l: 65.0,
            u2_r: 50.0,
            x_jump: 0.5,
        };
        match self {
            Preset::ShockTube1 => Some(RiemannData {
                alpha_l: 0.71,
                alpha_r: 0.7,
                u1_l: 1.0,
                u1_r: 1.0,
                ..base
            }),
            Preset::ShockTube2 => Some(RiemannData {
                alpha_l: 0.7,
                alpha_r: 0.1,
                ..base
            }),
            Preset::ShockTube3 => Some(RiemannData {
                alpha_l: 0.6,
                alpha_r: 0.6,
                ..base
            }),
            Preset::Custom => None,
        }
    }
}

impl std::str::FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shock-tube-1" | "1" => Ok(Preset::ShockTube1),
            "shock-tube-2" | "2" => Ok(Preset::ShockTube2),
            "shock-tube-3" | "3" => Ok(Preset::ShockTube3),
            "custom" => Ok(Preset::Custom),
            other => Err(Error::Usage(format!(
                "unknown preset '{other}' (expected shock-tube-1|shock-tube-2|shock-tube-3|custom)"
            ))),
        }
    }
}

/// Everything a preset pins down.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PresetSetup {
    pub params: FluidParams,
    pub data: RiemannData,
    pub grid: GridSpec,
    pub wam: WamParams,
    pub tcs: SchemeParams,
}

/// Standard setup of a named shock tube: 1000 cells on `[0, 1]`, `T = 0.001`,
/// outflow boundaries.
pub fn preset(name: &str) -> Result<PresetSetup> {
    let p: Preset = name.parse()?;
    let data = p.riemann().ok_or_else(|| {
        Error::Usage("the custom preset needs a manifest with Riemann data".into())
    })?;
    Ok(PresetSetup {
        params: Preset::fluid_params(),
        data,
        grid: GridSpec {
            x_min: 0.0,
            x_max: 1.0,
            n_cells: 1000,
            boundary: Boundary::Outflow,
        },
        wam: WamParams::default(),
        tcs: SchemeParams::default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eos::{closure, riemann_to_conserved};

    #[test]
    fn offsets_from_reference_states() {
        let s = preset("shock-tube-1").unwrap();
        assert_eq!(s.params.b1, 9.999e8);
        assert_eq!(s.params.b2, 0.0);
        assert_eq!(preset("shock-tube-2").unwrap().data.alpha_r, 0.1);
        let d3 = preset("shock-tube-3").unwrap().data;
        assert_eq!((d3.alpha_l, d3.alpha_r), (0.6, 0.6));
        assert!(matches!(preset("shock-tube-9"), Err(Error::Usage(_))));
    }

    #[test]
    fn presets_round_trip_through_closure() {
        for p in Preset::ALL {
            let s = preset(p.name()).unwrap();
            let (l, r) = riemann_to_conserved(&s.data, &s.params).unwrap();
            for (c, a, pr) in [
                (l, s.data.alpha_l, s.data.p_l),
                (r, s.data.alpha_r, s.data.p_r),
            ] {
                let f = closure(c.r1, c.r2, &s.params).unwrap();
                assert!((f.alpha - a).abs() <= 1e-10 * a);
                assert!((f.p - pr).abs() <= 1e-10 * pr);
            }
        }
    }
}
