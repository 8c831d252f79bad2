//! Uniform 1-D grid, boundary handling and the short averaging stencils shared
//! by both solvers.

use crate::eos::{ConservedCell, FluidParams, RiemannData};
use crate::error::{Error, Result};

/// Treatment of the cells beyond either end of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Ghost cells copy the nearest interior cell.
    Outflow,
    Periodic,
}

impl Boundary {
    /// Index of the cell that stands in for position `i` (possibly outside `0..n`).
    #[inline]
    pub fn resolve(self, i: isize, n: usize) -> usize {
        let n = n as isize;
        match self {
            Boundary::Outflow => i.clamp(0, n - 1) as usize,
            Boundary::Periodic => i.rem_euclid(n) as usize,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Boundary::Outflow => "outflow",
            Boundary::Periodic => "periodic",
        }
    }
}

impl std::str::FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "outflow" => Ok(Boundary::Outflow),
            "periodic" => Ok(Boundary::Periodic),
            other => Err(Error::Usage(format!(
                "unknown boundary '{other}' (expected outflow|periodic)"
            ))),
        }
    }
}

/// Cell-centred grid on `[x_min, x_max]`. The shift parameter of the
/// weak-asymptotic method is identified with the cell width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub n_cells: usize,
    pub boundary: Boundary,
}

impl GridSpec {
    pub const MIN_CELLS: usize = 8;

    pub fn new(x_min: f64, x_max: f64, n_cells: usize, boundary: Boundary) -> Result<Self> {
        let spec = GridSpec {
            x_min,
            x_max,
            n_cells,
            boundary,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_cells < Self::MIN_CELLS {
            return Err(Error::InvalidInput(format!(
                "need at least {} cells, got {}",
                Self::MIN_CELLS,
                self.n_cells
            )));
        }
        if !(self.x_min.is_finite() && self.x_max.is_finite() && self.x_max > self.x_min) {
            return Err(Error::InvalidInput(format!(
                "bad domain [{}, {}]",
                self.x_min, self.x_max
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn h(&self) -> f64 {
        (self.x_max - self.x_min) / self.n_cells as f64
    }

    /// Shift parameter, equal to the cell width.
    #[inline]
    pub fn eps(&self) -> f64 {
        self.h()
    }

    #[inline]
    pub fn length(&self) -> f64 {
        self.x_max - self.x_min
    }

    #[inline]
    pub fn x_center(&self, i: usize) -> f64 {
        self.x_min + (i as f64 + 0.5) * self.h()
    }

    pub fn centers(&self) -> Vec<f64> {
        (0..self.n_cells).map(|i| self.x_center(i)).collect()
    }

    #[inline]
    pub fn neighbor(&self, i: usize, offset: isize) -> usize {
        self.boundary.resolve(i as isize + offset, self.n_cells)
    }
}

/// Conserved fields on a grid at time `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridState {
    pub spec: GridSpec,
    pub cells: Vec<ConservedCell>,
    pub t: f64,
}

impl GridState {
    pub fn new(spec: GridSpec, cells: Vec<ConservedCell>, t: f64) -> Result<Self> {
        spec.validate()?;
        if cells.len() != spec.n_cells {
            return Err(Error::InvalidInput(format!(
                "{} cells supplied for a grid of {}",
                cells.len(),
                spec.n_cells
            )));
        }
        Ok(GridState { spec, cells, t })
    }

    pub fn uniform(spec: GridSpec, cell: ConservedCell) -> Result<Self> {
        Self::new(spec, vec![cell; spec.n_cells], 0.0)
    }

    /// Piecewise-constant shock-tube data, split at `data.x_jump` (cell centres
    /// left of the jump take the left state).
    pub fn riemann(spec: GridSpec, data: &RiemannData, params: &FluidParams) -> Result<Self> {
        let (left, right) = crate::eos::riemann_to_conserved(data, params)?;
        let cells = (0..spec.n_cells)
            .map(|i| {
                if spec.x_center(i) < data.x_jump {
                    left
                } else {
                    right
                }
            })
            .collect();
        Self::new(spec, cells, 0.0)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `sum_i r_k,i * h` for both fluids.
    pub fn total_mass(&self) -> [f64; 2] {
        let h = self.spec.h();
        let (a, b) = self
            .cells
            .iter()
            .fold((0.0, 0.0), |(a, b), c| (a + c.r1, b + c.r2));
        [a * h, b * h]
    }

    pub fn total_momentum(&self) -> f64 {
        self.cells.iter().map(|c| c.m1 + c.m2).sum::<f64>() * self.spec.h()
    }

    pub fn max_speed(&self) -> f64 {
        self.cells
            .iter()
            .map(|c| c.u1().abs().max(c.u2().abs()))
            .fold(0.0, f64::max)
    }

    pub(crate) fn field(&self, pick: impl Fn(&ConservedCell) -> f64) -> Vec<f64> {
        self.cells.iter().map(pick).collect()
    }

    pub(crate) fn with_fields(
        &self,
        r1: &[f64],
        r2: &[f64],
        m1: &[f64],
        m2: &[f64],
        t: f64,
    ) -> Self {
        let cells = r1
            .iter()
            .zip(r2)
            .zip(m1.iter().zip(m2))
            .map(|((&r1, &r2), (&m1, &m2))| ConservedCell::new(r1, r2, m1, m2))
            .collect();
        GridState {
            spec: self.spec,
            cells,
            t,
        }
    }

    /// Copy translated by `shift` cells on a periodic grid.
    pub fn rolled(&self, shift: isize) -> Self {
        let n = self.len();
        let cells = (0..n)
            .map(|i| self.cells[Boundary::Periodic.resolve(i as isize - shift, n)])
            .collect();
        GridState {
            spec: self.spec,
            cells,
            t: self.t,
        }
    }
}

/// Symmetric three-point average `nu f[i-1] + (1 - 2 nu) f[i] + nu f[i+1]`.
pub fn smooth3(values: &[f64], nu: f64, boundary: Boundary) -> Vec<f64> {
    let n = values.len();
    let at = |i: isize| values[boundary.resolve(i, n)];
    (0..n as isize)
        .map(|i| nu * at(i - 1) + (1.0 - 2.0 * nu) * at(i) + nu * at(i + 1))
        .collect()
}

/// Symmetric five-point average: weight `nu` on each of the four neighbours,
/// `1 - 4 nu` on the centre.
pub fn smooth5(values: &[f64], nu: f64, boundary: Boundary) -> Vec<f64> {
    let n = values.len();
    let at = |i: isize| values[boundary.resolve(i, n)];
    (0..n as isize)
        .map(|i| nu * (at(i - 2) + at(i - 1) + at(i + 1) + at(i + 2)) + (1.0 - 4.0 * nu) * at(i))
        .collect()
}

/// Three-point average applied to all four conserved fields.
pub(crate) fn smooth3_state(state: &GridState, nu: f64) -> GridState {
    let b = state.spec.boundary;
    let r1 = smooth3(&state.field(|c| c.r1), nu, b);
    let r2 = smooth3(&state.field(|c| c.r2), nu, b);
    let m1 = smooth3(&state.field(|c| c.m1), nu, b);
    let m2 = smooth3(&state.field(|c| c.m2), nu, b);
    state.with_fields(&r1, &r2, &m1, &m2, state.t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_resolution() {
        assert_eq!(Boundary::Outflow.resolve(-2, 10), 0);
        assert_eq!(Boundary::Outflow.resolve(11, 10), 9);
        assert_eq!(Boundary::Periodic.resolve(-1, 10), 9);
        assert_eq!(Boundary::Periodic.resolve(12, 10), 2);
        assert_eq!("periodic".parse::<Boundary>().unwrap(), Boundary::Periodic);
        assert!("reflect".parse::<Boundary>().is_err());
    }

    #[test]
    fn spec_geometry() {
        let spec = GridSpec::new(0.0, 1.0, 1000, Boundary::Outflow).unwrap();
        assert_eq!(spec.h(), 1e-3);
        assert_eq!(spec.eps(), spec.h());
        assert!((spec.x_center(0) - 0.0005).abs() < 1e-15);
        assert!(GridSpec::new(0.0, 1.0, 4, Boundary::Outflow).is_err());
        assert!(GridSpec::new(1.0, 0.0, 100, Boundary::Outflow).is_err());
    }

    #[test]
    fn stencils_preserve_constants_and_sums() {
        let flat = vec![3.5; 12];
        for v in smooth3(&flat, 0.2, Boundary::Outflow)
            .into_iter()
            .chain(smooth5(&flat, 0.15, Boundary::Outflow))
        {
            assert!((v - 3.5).abs() <= 4.0 * f64::EPSILON * 3.5);
        }

        let mut delta = vec![0.0; 12];
        delta[5] = 1.0;
        let s3 = smooth3(&delta, 0.1, Boundary::Periodic);
        assert_eq!(&s3[4..7], &[0.1, 0.8, 0.1]);
        let s5 = smooth5(&delta, 0.15, Boundary::Periodic);
        assert_eq!(s5.iter().filter(|v| **v != 0.0).count(), 5);
        let total: f64 = s5.iter().sum();
        assert!((total - 1.0).abs() < 1e-15);
    }
}
