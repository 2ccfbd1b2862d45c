//! Design-space analysis: ergonomic index, constant-perimeter sweeps,
//! eversion force and measured-versus-model area comparison.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{CrossSection, FabricationParams, Point, Polygon};
use crate::solver::{forward_geometry, RootFindConfig};

/// Relative height difference below which the two apexes count as level.
const LEVEL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErgonomicReport {
    /// Apex of the right side channel.
    pub side_peak: Point,
    /// Apex of the center channel.
    pub center_peak: Point,
    /// Signed slope from the side apex to the center apex; negative when
    /// the side channels stand taller than the center.
    pub slope: f64,
    /// `1 / |slope|`, `f64::INFINITY` when the apexes are level.
    pub index: f64,
}

/// Flatness of the supporting surface: the inverse slope between the side
/// channel apex and the center channel apex. Larger is flatter.
pub fn ergonomic_index(cs: &CrossSection) -> ErgonomicReport {
    let spec = &cs.spec;
    let side_peak = Point::new(0.5 * spec.w - 0.5 * spec.h_s, 0.5 * spec.h_s);
    let center_peak = Point::new(0.0, 0.5 * spec.h_c);
    let rise = 0.5 * spec.h_c - 0.5 * spec.h_s;
    let run = side_peak.x;
    let level = rise.abs() <= LEVEL_TOL * spec.h_c.max(spec.h_s);
    let slope = if level { 0.0 } else { rise / run };
    let index = if level { f64::INFINITY } else { 1.0 / slope.abs() };
    ErgonomicReport { side_peak, center_peak, slope, index }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepGeometry {
    pub h_c: f64,
    pub h_s: f64,
    pub w: f64,
    pub ergonomic_index: f64,
}

/// One `(S_c, L)` combination of a constant-perimeter sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub s_c: f64,
    pub l: f64,
    /// Side arc length left over from the perimeter budget.
    pub s_s: f64,
    pub feasible: bool,
    /// Present on feasible rows only.
    pub geometry: Option<SweepGeometry>,
    /// Present on infeasible rows only.
    pub failure_reason: Option<String>,
}

impl SweepRecord {
    fn infeasible(s_c: f64, l: f64, s_s: f64, reason: String) -> Self {
        Self { s_c, l, s_s, feasible: false, geometry: None, failure_reason: Some(reason) }
    }
}

/// Evaluates a single sweep row.
pub fn sweep_row(perimeter: f64, s_c: f64, l: f64, cfg: &RootFindConfig) -> SweepRecord {
    let s_s = 0.5 * perimeter - s_c;
    if !(s_c > 0.0) {
        return SweepRecord::infeasible(s_c, l, s_s, "S_c <= 0".to_string());
    }
    if !(s_s > 0.0) {
        return SweepRecord::infeasible(s_c, l, s_s, "S_s <= 0".to_string());
    }
    match forward_geometry(&FabricationParams::new(s_c, s_s, l), cfg) {
        Ok(cs) => SweepRecord {
            s_c,
            l,
            s_s,
            feasible: true,
            geometry: Some(SweepGeometry {
                h_c: cs.spec.h_c,
                h_s: cs.spec.h_s,
                w: cs.spec.w,
                ergonomic_index: ergonomic_index(&cs).index,
            }),
            failure_reason: None,
        },
        Err(e) => SweepRecord::infeasible(s_c, l, s_s, e.to_string()),
    }
}

/// Sweeps every `(S_c, L)` pair at fixed membrane perimeter. Rows come out
/// `S_c`-major in the order given; infeasible combinations are kept and
/// carry a reason.
pub fn sweep_constant_perimeter(
    perimeter: f64,
    s_c_values: &[f64],
    l_values: &[f64],
    cfg: &RootFindConfig,
) -> Result<Vec<SweepRecord>> {
    if !(perimeter.is_finite() && perimeter > 0.0) {
        return Err(Error::Domain("perimeter must be positive"));
    }
    if s_c_values.is_empty() || l_values.is_empty() {
        return Err(Error::Domain("sweep ranges must be non-empty"));
    }
    Ok(s_c_values
        .iter()
        .flat_map(|&s_c| l_values.iter().map(move |&l| sweep_row(perimeter, s_c, l, cfg)))
        .collect())
}

/// Tip force (N) from pressure (kPa) acting on a cross-section (mm²).
pub fn eversion_force(pressure_kpa: f64, area_mm2: f64) -> f64 {
    pressure_kpa * area_mm2 * 1e-3
}

/// Center area from its closed form plus both side areas discretised with
/// chords deviating at most `arc_resolution` mm from the arcs.
pub fn total_area(cs: &CrossSection, arc_resolution: f64) -> Result<f64> {
    if !(arc_resolution > 0.0) {
        return Err(Error::Domain("arc resolution must be positive"));
    }
    let sides = cs.left.polygon(arc_resolution).area() + cs.right.polygon(arc_resolution).area();
    Ok(cs.center.area + sides)
}

/// Measured outline area over model area. No registration is needed:
/// areas are invariant under rigid motions.
pub fn area_ratio(measured: &Polygon, model: &CrossSection, arc_resolution: f64) -> Result<f64> {
    let measured_area = measured.checked_area()?;
    Ok(measured_area / total_area(model, arc_resolution)?)
}
