//! Brute-force check that the area-maximising center arc angle is the
//! coradial one: scan the center area over a uniform grid of angles and
//! compare the argmax with the analytic root.

use core::f64::consts::PI;
use core::ops::Range;

use super::area::center_area_unchecked;
use super::forward::solve_theta_c;
use super::root::RootFindConfig;
use crate::error::{Channel, Error, Result};

/// Clearance kept from both ends of (0, 2π).
pub const GRID_EPS: f64 = 1e-6;
pub const MIN_GRID_POINTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub grid_points: usize,
    pub grid_step: f64,
    /// Grid angle with the largest area (smallest angle on ties).
    pub theta_grid_argmax: f64,
    /// Vertex of the parabola through the argmax and its neighbours.
    /// Reported only; agreement uses the raw grid argmax.
    pub theta_refined: f64,
    pub analytic_root: f64,
    pub area_at_argmax: f64,
}

impl OracleResult {
    pub fn deviation(&self) -> f64 {
        (self.theta_grid_argmax - self.analytic_root).abs()
    }

    /// True when the grid argmax lies within one grid step of the root.
    pub fn agrees(&self) -> bool {
        self.deviation() <= self.grid_step
    }
}

/// Uniform angle grid over `[GRID_EPS, 2π − GRID_EPS]`.
#[derive(Debug, Clone, Copy)]
pub struct OracleGrid {
    pub s_c: f64,
    pub l: f64,
    pub points: usize,
}

/// Best grid point seen in a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridBest {
    pub index: usize,
    pub area: f64,
}

impl GridBest {
    /// Combines two partial scans; ties go to the smaller index so the
    /// result does not depend on how the grid was split.
    pub fn merge(self, other: GridBest) -> GridBest {
        if other.area > self.area || (other.area == self.area && other.index < self.index) {
            other
        } else {
            self
        }
    }
}

impl OracleGrid {
    pub fn new(s_c: f64, l: f64, points: usize) -> Result<Self> {
        if points < MIN_GRID_POINTS {
            return Err(Error::Domain("grid_points >= 1000 required"));
        }
        if !(s_c.is_finite() && s_c > 0.0) {
            return Err(Error::Domain("S_c must be positive"));
        }
        if !(l.is_finite() && l >= 0.0) {
            return Err(Error::Domain("L must be non-negative"));
        }
        Ok(Self { s_c, l, points })
    }

    pub fn step(&self) -> f64 {
        (2.0 * PI - 2.0 * GRID_EPS) / (self.points - 1) as f64
    }

    pub fn theta(&self, index: usize) -> f64 {
        GRID_EPS + index as f64 * self.step()
    }

    pub fn area(&self, index: usize) -> f64 {
        center_area_unchecked(self.s_c, self.l, self.theta(index))
    }

    /// Scans `range` in increasing order; `None` for an empty range.
    pub fn scan(&self, range: Range<usize>) -> Option<GridBest> {
        let mut best: Option<GridBest> = None;
        for i in range {
            let a = self.area(i);
            match best {
                Some(b) if !(a > b.area) => {}
                _ => best = Some(GridBest { index: i, area: a }),
            }
        }
        best
    }

    /// Builds the result from a completed scan.
    pub fn finish(&self, best: GridBest, cfg: &RootFindConfig) -> Result<OracleResult> {
        let analytic_root =
            solve_theta_c(self.s_c, self.l, cfg).map_err(|source| Error::Solve { channel: Channel::Center, source })?;
        let theta = self.theta(best.index);
        let step = self.step();
        let theta_refined = if best.index > 0 && best.index + 1 < self.points {
            let (fm, f0, fp) = (self.area(best.index - 1), best.area, self.area(best.index + 1));
            let denom = fm - 2.0 * f0 + fp;
            if denom < 0.0 {
                theta + 0.5 * step * (fm - fp) / denom
            } else {
                theta
            }
        } else {
            theta
        };
        Ok(OracleResult {
            grid_points: self.points,
            grid_step: step,
            theta_grid_argmax: theta,
            theta_refined,
            analytic_root,
            area_at_argmax: best.area,
        })
    }
}

/// Sequential grid scan of the center area followed by comparison with
/// the coradial root.
pub fn area_max_oracle(s_c: f64, l: f64, grid_points: usize, cfg: &RootFindConfig) -> Result<OracleResult> {
    let grid = OracleGrid::new(s_c, l, grid_points)?;
    let best = grid.scan(0..grid_points).expect("grid is non-empty");
    grid.finish(best, cfg)
}
