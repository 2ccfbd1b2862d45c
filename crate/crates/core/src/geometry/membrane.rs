use crate::error::{Error, Result};

/// Curvature (1/mm) of a membrane segment under pressure `pressure_kpa`
/// carrying tension `tension_n_per_mm`.
///
/// Pressure and tension are both uniform along an inextensible membrane
/// without bending stiffness, so the curvature is constant and every
/// curved segment of the cross-section is a circular arc.
pub fn membrane_curvature(pressure_kpa: f64, tension_n_per_mm: f64) -> Result<f64> {
    if !(tension_n_per_mm > 0.0) {
        return Err(Error::NonpositiveTension);
    }
    if !(pressure_kpa >= 0.0) {
        return Err(Error::Domain("pressure must be non-negative"));
    }
    // 1 kPa = 1e-3 N/mm²
    Ok(pressure_kpa * 1e-3 / tension_n_per_mm)
}

/// Tension (N/mm) that holds a membrane at `radius_mm` under `pressure_kpa`.
pub fn membrane_tension(pressure_kpa: f64, radius_mm: f64) -> f64 {
    pressure_kpa * 1e-3 * radius_mm
}
