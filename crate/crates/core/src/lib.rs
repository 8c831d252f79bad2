//! Numerical toolkit for the isothermal equal-pressure two-fluid model in 1-D.
//!
//! * [`eos`]: the algebraic closure (volume fraction, common pressure, true densities).
//! * [`wam`]: the weak-asymptotic semi-discrete ODE system, integrated by explicit Euler.
//! * [`tcs`]: the transport / averaging / pressure-correction scheme.
//! * [`diag`]: plateaus, jump-condition wave speeds, conservation audits,
//!   weak-form residuals and singular middle-wave measurements.
//! * [`harness`]: shock-tube presets, run orchestration and CSV output.

// `!(a < b)` is used on purpose so that NaN takes the failure branch
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod diag;
pub mod eos;
pub mod error;
pub mod grid;
pub mod harness;
pub mod stepper;
pub mod tcs;
pub mod wam;

pub use eos::{ClosureFields, ConservedCell, FluidParams, Phase, RiemannData};
pub use error::{Error, Result};
pub use grid::{Boundary, GridSpec, GridState};
