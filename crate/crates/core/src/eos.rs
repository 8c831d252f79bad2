//! Algebraic closure of the equal-pressure model.
//!
//! Both fluids obey linear pressure laws `p_k = K_k rho_k - b_k` and share a
//! single pressure. Given the partial densities `r_k = alpha_k rho_k`, the
//! volume fraction of fluid 1 is the root in `[0, 1]` of
//!
//! ```text
//! F(X) = X^2 (b1 - b2) + X (-K1 r1 - b1 - K2 r2 + b2) + K1 r1
//! ```
//!
//! and every other closure quantity follows linearly from it.

use crate::error::{Error, Result};

/// Pressure-law constants of the two fluids plus the axial gravity component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluidParams {
    /// Pressure-law slope of fluid 1 (Pa m^3/kg).
    pub k1: f64,
    /// Pressure-law slope of fluid 2 (Pa m^3/kg).
    pub k2: f64,
    /// Pressure-law offset of fluid 1 (Pa).
    pub b1: f64,
    /// Pressure-law offset of fluid 2 (Pa).
    pub b2: f64,
    /// Gravity component along the pipe (m/s^2).
    pub g: f64,
}

impl FluidParams {
    pub fn new(k1: f64, k2: f64, b1: f64, b2: f64, g: f64) -> Result<Self> {
        let params = FluidParams { k1, k2, b1, b2, g };
        params.validate()?;
        Ok(params)
    }

    /// Builds the offsets from reference states, `b_k = K_k rho0_k - p0_k`.
    pub fn from_reference_states(
        k1: f64,
        rho01: f64,
        p01: f64,
        k2: f64,
        rho02: f64,
        p02: f64,
        g: f64,
    ) -> Result<Self> {
        Self::new(k1, k2, k1 * rho01 - p01, k2 * rho02 - p02, g)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.k1, self.k2, self.b1, self.b2, self.g];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "non-finite fluid parameters {self:?}"
            )));
        }
        if self.k1 <= 0.0 || self.k2 <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "pressure-law slopes must be positive (K1 = {}, K2 = {})",
                self.k1, self.k2
            )));
        }
        if self.b1 - self.b2 <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "b1 - b2 must be positive (b1 = {}, b2 = {})",
                self.b1, self.b2
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn offset_gap(&self) -> f64 {
        self.b1 - self.b2
    }

    #[inline]
    pub fn pressure_fluid1(&self, rho1: f64) -> f64 {
        self.k1 * rho1 - self.b1
    }

    #[inline]
    pub fn pressure_fluid2(&self, rho2: f64) -> f64 {
        self.k2 * rho2 - self.b2
    }

    #[inline]
    pub fn density_fluid1(&self, p: f64) -> f64 {
        (p + self.b1) / self.k1
    }

    #[inline]
    pub fn density_fluid2(&self, p: f64) -> f64 {
        (p + self.b2) / self.k2
    }

    /// True density of fluid 2 from that of fluid 1 under equal pressures.
    #[inline]
    pub fn rho2_from_rho1(&self, rho1: f64) -> f64 {
        (-self.b1 + self.b2 + self.k1 * rho1) / self.k2
    }
}

/// Conserved variables of one cell: partial densities and partial momenta.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ConservedCell {
    pub r1: f64,
    pub r2: f64,
    pub m1: f64,
    pub m2: f64,
}

impl ConservedCell {
    pub const ZERO: ConservedCell = ConservedCell {
        r1: 0.0,
        r2: 0.0,
        m1: 0.0,
        m2: 0.0,
    };

    pub fn new(r1: f64, r2: f64, m1: f64, m2: f64) -> Self {
        ConservedCell { r1, r2, m1, m2 }
    }

    /// Velocity of fluid 1; zero in a fluid-1 vacuum.
    #[inline]
    pub fn u1(&self) -> f64 {
        velocity(self.r1, self.m1)
    }

    #[inline]
    pub fn u2(&self) -> f64 {
        velocity(self.r2, self.m2)
    }

    pub fn is_finite(&self) -> bool {
        self.r1.is_finite() && self.r2.is_finite() && self.m1.is_finite() && self.m2.is_finite()
    }

    pub fn scaled(&self, factor: f64) -> Self {
        ConservedCell::new(
            self.r1 * factor,
            self.r2 * factor,
            self.m1 * factor,
            self.m2 * factor,
        )
    }
}

#[inline]
pub(crate) fn velocity(r: f64, m: f64) -> f64 {
    if r != 0.0 {
        m / r
    } else {
        0.0
    }
}

/// Which fluids are present in a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Mixture,
    /// `r2 = 0`: fluid 1 fills the cell.
    Fluid1Only,
    /// `r1 = 0`: fluid 2 fills the cell.
    Fluid2Only,
    /// Double vacuum. Pressures are set to zero and flagged.
    Empty,
}

/// Quantities derived from the partial densities by the closure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosureFields {
    pub alpha: f64,
    pub p: f64,
    pub rho1: f64,
    pub rho2: f64,
    /// Discriminant of the closure quadratic (Pa^2).
    pub discriminant: f64,
    pub phase: Phase,
}

impl ClosureFields {
    pub fn is_degenerate(&self) -> bool {
        self.phase == Phase::Empty
    }
}

/// Primitive two-sided data of a shock-tube problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannData {
    pub alpha_l: f64,
    pub alpha_r: f64,
    pub p_l: f64,
    pub p_r: f64,
    pub u1_l: f64,
    pub u1_r: f64,
    pub u2_l: f64,
    pub u2_r: f64,
    /// Position of the initial discontinuity (m).
    pub x_jump: f64,
}

impl RiemannData {
    pub fn validate(&self) -> Result<()> {
        for (side, alpha) in [("left", self.alpha_l), ("right", self.alpha_r)] {
            if !(alpha > 0.0 && alpha < 1.0) {
                return Err(Error::InvalidInput(format!(
                    "{side} volume fraction {alpha} outside (0, 1)"
                )));
            }
        }
        let rest = [
            self.p_l,
            self.p_r,
            self.u1_l,
            self.u1_r,
            self.u2_l,
            self.u2_r,
            self.x_jump,
        ];
        if rest.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "non-finite Riemann data {self:?}"
            )));
        }
        Ok(())
    }
}

/// The closure quadratic `F` evaluated at `x`.
pub fn quadratic(r1: f64, r2: f64, params: &FluidParams, x: f64) -> f64 {
    let gap = params.offset_gap();
    x * x * gap + x * (-params.k1 * r1 - params.b1 - params.k2 * r2 + params.b2) + params.k1 * r1
}

/// Discriminant of `F`, before any clamping.
pub fn discriminant(r1: f64, r2: f64, params: &FluidParams) -> f64 {
    let gap = params.offset_gap();
    let s = params.k1 * r1 + params.k2 * r2 + gap;
    s * s - 4.0 * gap * params.k1 * r1
}

/// Lower bound `K1 r1 / (b1 - b2 + K1 r1 + K2 r2)` satisfied by the volume fraction.
pub fn alpha_lower_bound(r1: f64, r2: f64, params: &FluidParams) -> f64 {
    let k1r1 = params.k1 * r1;
    k1r1 / (params.offset_gap() + k1r1 + params.k2 * r2)
}

/// Volume fraction of fluid 1, the root of `F` in `[0, 1]`.
///
/// The smaller root `(s - sqrt(D)) / (2 (b1 - b2))` is evaluated as
/// `2 K1 r1 / (s + sqrt(D))`, which is the same number without the
/// cancellation that hits the first form when `K1 r1` is small against `s`.
/// When `r2 = 0` both 1 and `K1 r1 / (b1 - b2)` are roots; the pure-fluid-1
/// root 1 is returned.
pub fn solve_alpha(r1: f64, r2: f64, params: &FluidParams) -> Result<f64> {
    if !r1.is_finite() || !r2.is_finite() {
        return Err(Error::InvalidInput(format!(
            "non-finite partial densities r1 = {r1}, r2 = {r2}"
        )));
    }
    if r1 < 0.0 || r2 < 0.0 {
        return Err(Error::InvalidInput(format!(
            "negative partial density r1 = {r1}, r2 = {r2}"
        )));
    }
    let (alpha, _) = alpha_and_discriminant(r1, r2, params)?;
    Ok(alpha)
}

fn alpha_and_discriminant(r1: f64, r2: f64, params: &FluidParams) -> Result<(f64, f64)> {
    let gap = params.offset_gap();
    let k1r1 = params.k1 * r1;
    let s = k1r1 + params.k2 * r2 + gap;
    let raw = s * s - 4.0 * gap * k1r1;
    if raw < -1e-12 * s * s {
        return Err(Error::Consistency(format!(
            "negative discriminant {raw} for r1 = {r1}, r2 = {r2}"
        )));
    }
    let disc = raw.max(0.0);
    if r2 == 0.0 && r1 > 0.0 {
        return Ok((1.0, disc));
    }
    let alpha = 2.0 * k1r1 / (s + disc.sqrt());
    Ok((alpha.clamp(0.0, 1.0), disc))
}

/// Closure on a cell where both fluids are present.
pub fn closure(r1: f64, r2: f64, params: &FluidParams) -> Result<ClosureFields> {
    if !(r1 > 0.0 && r2 > 0.0) {
        return Err(Error::Domain(format!(
            "closure needs positive partial densities, got r1 = {r1}, r2 = {r2}"
        )));
    }
    if !r1.is_finite() || !r2.is_finite() {
        return Err(Error::InvalidInput(format!(
            "non-finite partial densities r1 = {r1}, r2 = {r2}"
        )));
    }
    let (alpha, discriminant) = alpha_and_discriminant(r1, r2, params)?;
    Ok(mixture_fields(r1, alpha, discriminant, params))
}

#[inline]
fn mixture_fields(r1: f64, alpha: f64, discriminant: f64, params: &FluidParams) -> ClosureFields {
    let rho1 = r1 / alpha;
    ClosureFields {
        alpha,
        p: params.pressure_fluid1(rho1),
        rho1,
        rho2: params.rho2_from_rho1(rho1),
        discriminant,
        phase: Phase::Mixture,
    }
}

/// Closure used by the transport-correction scheme, total on non-negative input.
///
/// * `r1 = 0 < r2`: `alpha = 0` and `p = -b1`, the limit of `K1 r1 / alpha - b1`
///   with `rho1 = 0`. (A sign-flipped `p = b1` appears in one published proof
///   sketch of the vacuum result; either constant leaves the correction zero.)
/// * `r2 = 0 < r1`: `alpha = 1`, `p = K1 r1 - b1`.
/// * `r1 = r2 = 0`: everything zero, flagged [`Phase::Empty`].
pub fn closure_scheme(r1: f64, r2: f64, params: &FluidParams) -> ClosureFields {
    debug_assert!(
        r1 >= 0.0 && r2 >= 0.0,
        "negative partial density {r1}, {r2}"
    );
    let gap = params.offset_gap();
    match (r1 > 0.0, r2 > 0.0) {
        (true, true) => {
            let k1r1 = params.k1 * r1;
            let s = k1r1 + params.k2 * r2 + gap;
            let disc = (s * s - 4.0 * gap * k1r1).max(0.0);
            let alpha = (2.0 * k1r1 / (s + disc.sqrt())).clamp(0.0, 1.0);
            mixture_fields(r1, alpha, disc, params)
        }
        (false, true) => {
            let s = params.k2 * r2 + gap;
            ClosureFields {
                alpha: 0.0,
                p: -params.b1,
                rho1: 0.0,
                rho2: r2,
                discriminant: s * s,
                phase: Phase::Fluid2Only,
            }
        }
        (true, false) => {
            let k1r1 = params.k1 * r1;
            let d = k1r1 - gap;
            ClosureFields {
                alpha: 1.0,
                p: params.pressure_fluid1(r1),
                rho1: r1,
                rho2: 0.0,
                discriminant: d * d,
                phase: Phase::Fluid1Only,
            }
        }
        (false, false) => ClosureFields {
            alpha: 0.0,
            p: 0.0,
            rho1: 0.0,
            rho2: 0.0,
            discriminant: gap * gap,
            phase: Phase::Empty,
        },
    }
}

/// Conserved state from `(alpha, p, u1, u2)` by inverting the pressure laws.
pub fn primitive_to_conserved(
    alpha: f64,
    p: f64,
    u1: f64,
    u2: f64,
    params: &FluidParams,
) -> Result<ConservedCell> {
    let rho1 = params.density_fluid1(p);
    let rho2 = params.density_fluid2(p);
    if !(rho1 > 0.0) || !(rho2 > 0.0) {
        return Err(Error::InvalidState(format!(
            "pressure {p} gives non-positive true densities rho1 = {rho1}, rho2 = {rho2}"
        )));
    }
    let r1 = alpha * rho1;
    let r2 = (1.0 - alpha) * rho2;
    Ok(ConservedCell::new(r1, r2, r1 * u1, r2 * u2))
}

/// Left and right conserved states of a shock-tube problem.
pub fn riemann_to_conserved(
    data: &RiemannData,
    params: &FluidParams,
) -> Result<(ConservedCell, ConservedCell)> {
    data.validate()?;
    let left = primitive_to_conserved(data.alpha_l, data.p_l, data.u1_l, data.u2_l, params)?;
    let right = primitive_to_conserved(data.alpha_r, data.p_r, data.u1_r, data.u2_r, params)?;
    Ok((left, right))
}
