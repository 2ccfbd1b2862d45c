//! Design specifications, fabrication parameters and the closed-form
//! inverse model mapping one onto the other.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::error::{Error, Result};

/// Inflated shape targets, all in mm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignSpec {
    /// Height of the center channel.
    pub h_c: f64,
    /// Height of each side channel.
    pub h_s: f64,
    /// Overall inflated width.
    pub w: f64,
}

impl DesignSpec {
    pub const fn new(h_c: f64, h_s: f64, w: f64) -> Self {
        Self { h_c, h_s, w }
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self::new(self.h_c * k, self.h_s * k, self.w * k)
    }
}

/// Manufacturable segment lengths, all in mm.
///
/// `s_c` is the arc length of each of the top and bottom center segments,
/// `s_s` the arc length of each side segment and `l` the width of the
/// constraining strips (the straight segments).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FabricationParams {
    pub s_c: f64,
    pub s_s: f64,
    pub l: f64,
}

impl FabricationParams {
    pub const fn new(s_c: f64, s_s: f64, l: f64) -> Self {
        Self { s_c, s_s, l }
    }

    /// Outer membrane perimeter. The constraining strips are internal and
    /// do not count.
    pub fn perimeter(&self) -> f64 {
        2.0 * self.s_c + 2.0 * self.s_s
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self::new(self.s_c * k, self.s_s * k, self.l * k)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.s_c.is_finite() && self.s_c > 0.0) {
            return Err(Error::InvalidFabrication("S_c > 0"));
        }
        if !(self.s_s.is_finite() && self.s_s > 0.0) {
            return Err(Error::InvalidFabrication("S_s > 0"));
        }
        if !(self.l.is_finite() && self.l >= 0.0) {
            return Err(Error::InvalidFabrication("L >= 0"));
        }
        Ok(())
    }
}

/// A single failed feasibility condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    CenterHeightPositive,
    SideHeightPositive,
    WidthPositive,
    WidthExceedsSideHeight,
    GammaNonNegative,
    ArcsinArgumentInRange,
    ArcsinArgumentPositive,
}

impl Violation {
    /// The condition that failed, as it appears in reports.
    pub fn condition(&self) -> &'static str {
        match self {
            Violation::CenterHeightPositive => "H_c > 0",
            Violation::SideHeightPositive => "H_s > 0",
            Violation::WidthPositive => "w > 0",
            Violation::WidthExceedsSideHeight => "w > H_s",
            Violation::GammaNonNegative => "gamma >= 0",
            Violation::ArcsinArgumentInRange => "|arcsin argument| <= 1",
            Violation::ArcsinArgumentPositive => "arcsin argument > 0",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.condition())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub feasible: bool,
    pub violations: Vec<Violation>,
    /// Discriminant of the strip-width relation, `None` when the lengths are
    /// not all positive.
    pub gamma: Option<f64>,
    /// Argument of the arcsine yielding `S_c / H_c`, `None` when undefined.
    pub arcsin_argument: Option<f64>,
}

// Round-off allowance for boundary specs such as tangent circles, where the
// exact discriminant is zero.
const GAMMA_REL_TOL: f64 = 1e-12;
const ARCSIN_TOL: f64 = 1e-12;

/// Discriminant of the strip width,
/// `4 H_s (H_c² H_s − H_c² w − w² H_s + w³) − (w² − H_c²)²` in mm⁴.
///
/// Evaluated through its factorisation
/// `(w − H_c)(w + H_c)(H_c + 2H_s − w)(w + H_c − 2H_s)`, which is exact at the
/// boundary cases where the expanded polynomial cancels catastrophically.
pub fn gamma(spec: &DesignSpec) -> f64 {
    let DesignSpec { h_c, h_s, w } = *spec;
    (w - h_c) * (w + h_c) * (h_c + 2.0 * h_s - w) * (w + h_c - 2.0 * h_s)
}

fn gamma_tolerance(spec: &DesignSpec) -> f64 {
    let scale = spec.h_c.max(spec.h_s).max(spec.w);
    GAMMA_REL_TOL * scale * scale * scale * scale
}

/// Checks every condition under which the inverse model has a solution.
/// Never fails; the report lists each violated condition.
pub fn validate_spec(spec: &DesignSpec) -> FeasibilityReport {
    let mut violations = Vec::new();
    let positive = |v: f64| v.is_finite() && v > 0.0;
    if !positive(spec.h_c) {
        violations.push(Violation::CenterHeightPositive);
    }
    if !positive(spec.h_s) {
        violations.push(Violation::SideHeightPositive);
    }
    if !positive(spec.w) {
        violations.push(Violation::WidthPositive);
    }
    if !violations.is_empty() {
        return FeasibilityReport { feasible: false, violations, gamma: None, arcsin_argument: None };
    }

    let DesignSpec { h_c, h_s, w } = *spec;
    if w <= h_s {
        violations.push(Violation::WidthExceedsSideHeight);
    }
    let g = gamma(spec);
    if g < -gamma_tolerance(spec) {
        violations.push(Violation::GammaNonNegative);
    }
    let arcsin_argument = if w != h_s {
        let arg = arcsin_numerator(spec) / (2.0 * h_c * (w - h_s));
        if !(arg.abs() <= 1.0 + ARCSIN_TOL) {
            violations.push(Violation::ArcsinArgumentInRange);
        }
        if !(arg > 0.0) {
            violations.push(Violation::ArcsinArgumentPositive);
        }
        Some(arg)
    } else {
        None
    };

    FeasibilityReport { feasible: violations.is_empty(), violations, gamma: Some(g), arcsin_argument }
}

// w² + H_c² − 2wH_s
fn arcsin_numerator(spec: &DesignSpec) -> f64 {
    let DesignSpec { h_c, h_s, w } = *spec;
    w * w + h_c * h_c - 2.0 * w * h_s
}

/// Fabrication parameters together with the intermediate quantities of the
/// inverse model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseSolution {
    pub fab: FabricationParams,
    /// `H_s · asin(L / H_s)`, the side arc length on the `θ_s ≤ π` branch.
    pub beta: f64,
    /// True when the side arc subtends at most a half circle, i.e.
    /// `w − H_c sin(S_c/H_c) ≤ H_s`.
    pub side_minor_branch: bool,
    /// Center-channel width `H_c sin(S_c/H_c)`.
    pub w_c: f64,
}

/// Closed-form inverse design: the segment lengths that inflate to `spec`.
pub fn inverse_design(spec: &DesignSpec) -> Result<FabricationParams> {
    inverse_solution(spec).map(|s| s.fab)
}

pub fn inverse_solution(spec: &DesignSpec) -> Result<InverseSolution> {
    let report = validate_spec(spec);
    if !report.feasible {
        return Err(Error::InfeasibleSpec(report));
    }
    let DesignSpec { h_c, h_s, w } = *spec;
    let a = w - h_s;
    let root_gamma = libm::sqrt(gamma(spec).max(0.0));
    let numerator = arcsin_numerator(spec);

    // asin(n / (2 H_c a)) with cos = sqrt(γ) / (2 H_c a), via atan2 so the
    // result stays accurate when the argument is close to one.
    let s_c = h_c * libm::atan2(numerator, root_gamma);
    let l = root_gamma / (2.0 * a);
    let w_c = numerator / (2.0 * a);

    // H_s cos(S_s'/H_s); its magnitude completes L to H_s on the side circle.
    let gap = w - w_c - h_s;
    let beta = h_s * libm::atan2(l, gap.abs());
    let side_minor_branch = w - w_c <= h_s;
    let s_s = if side_minor_branch { beta } else { PI * h_s - beta };

    Ok(InverseSolution { fab: FabricationParams::new(s_c, s_s, l), beta, side_minor_branch, w_c })
}
