//! Forward model: fabrication parameters to inflated geometry.

use core::f64::consts::PI;

use super::area::coradial_residual;
use super::root::{find_root, RootFindConfig};
use crate::error::{Channel, Error, Result, SolveError};
use crate::geometry::{CrossSection, DesignSpec, FabricationParams, DEFAULT_ARC_RESOLUTION};

/// Lower end of the angle brackets; the residuals diverge or flatten at zero.
pub const ANGLE_EPS: f64 = 1e-9;

/// Center arc angle `θ_c ∈ (0, π]` at which the top and bottom arcs are
/// coradial, `2 (S_c/θ_c) cos(θ_c/2) = L`. This is the angle maximising
/// the center-channel area.
///
/// `S_c cos(θ/2) / θ` falls strictly from +∞ to 0 on (0, π], so the root is
/// unique for every `L ≥ 0`; `L = 0` gives exactly π.
pub fn solve_theta_c(s_c: f64, l: f64, cfg: &RootFindConfig) -> Result<f64, SolveError> {
    if !(s_c.is_finite() && s_c > 0.0) {
        return Err(SolveError::Domain("S_c must be positive"));
    }
    if !(l.is_finite() && l >= 0.0) {
        return Err(SolveError::Domain("L must be non-negative"));
    }
    find_root(|t| coradial_residual(s_c, l, t), ANGLE_EPS, PI, cfg)
}

/// Half the side arc angle, `t = S_s / H_s ∈ (0, π]`, such that the chord
/// closing the arc has length `L`: `S_s sin(t) / t = L`.
pub fn solve_side_half_angle(s_s: f64, l: f64, cfg: &RootFindConfig) -> Result<f64, SolveError> {
    if !(s_s.is_finite() && s_s > 0.0) {
        return Err(SolveError::Domain("S_s must be positive"));
    }
    if !(l.is_finite() && l >= 0.0) {
        return Err(SolveError::Domain("L must be non-negative"));
    }
    if l >= s_s {
        // the chord would be at least as long as its arc
        return Err(SolveError::NoBracket { lo: ANGLE_EPS, hi: PI, f_lo: s_s - l, f_hi: -l });
    }
    // sin(π − t) vanishes exactly at t = π but is inaccurate near t = 0
    let sin = |t: f64| if t > 0.5 * PI { libm::sin(PI - t) } else { libm::sin(t) };
    find_root(|t| s_s * sin(t) / t - l, ANGLE_EPS, PI, cfg)
}

/// Side-channel height satisfying `L = H_s sin(S_s / H_s)` with
/// `H_s ≥ S_s / π` (side arc at most a full circle).
///
/// `sin(t)/t` is strictly decreasing on (0, π], so there is a single
/// solution, on either side of the half-circle, for every `0 ≤ L < S_s`.
/// `L ≥ S_s` has no solution (a chord cannot exceed its arc).
pub fn solve_h_s(s_s: f64, l: f64, cfg: &RootFindConfig) -> Result<f64, SolveError> {
    solve_side_half_angle(s_s, l, cfg).map(|t| s_s / t)
}

/// Reconstructs the inflated cross-section from fabrication parameters.
pub fn forward_geometry(fab: &FabricationParams, cfg: &RootFindConfig) -> Result<CrossSection> {
    forward_geometry_with_resolution(fab, cfg, DEFAULT_ARC_RESOLUTION)
}

pub fn forward_geometry_with_resolution(
    fab: &FabricationParams,
    cfg: &RootFindConfig,
    arc_resolution: f64,
) -> Result<CrossSection> {
    fab.validate()?;
    if !(arc_resolution > 0.0) {
        return Err(Error::Domain("arc resolution must be positive"));
    }
    let theta_c =
        solve_theta_c(fab.s_c, fab.l, cfg).map_err(|source| Error::Solve { channel: Channel::Center, source })?;
    let half_side =
        solve_side_half_angle(fab.s_s, fab.l, cfg).map_err(|source| Error::Solve { channel: Channel::Side, source })?;

    let h_c = 2.0 * fab.s_c / theta_c;
    let h_s = fab.s_s / half_side;
    let w_c = h_c * libm::sin(0.5 * theta_c);
    // w_s = r_s (1 + cos(π − t))
    let w_s = 0.5 * h_s * (1.0 - libm::cos(half_side));
    let spec = DesignSpec::new(h_c, h_s, w_c + 2.0 * w_s);
    Ok(CrossSection::assemble(spec, *fab, arc_resolution))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_strip_gives_half_turn() {
        let cfg = RootFindConfig::default();
        assert_eq!(solve_theta_c(1.0, 0.0, &cfg), Ok(PI));
        assert_eq!(solve_theta_c(152.0, 0.0, &cfg), Ok(PI));
    }

    #[test]
    fn structure_one_center_residual() {
        let cfg = RootFindConfig::default();
        let t = solve_theta_c(152.0, 76.2, &cfg).unwrap();
        let l = 2.0 * (152.0 / t) * libm::cos(0.5 * t);
        assert!((l - 76.2).abs() <= 1e-9 * 76.2, "{l}");
    }

    #[test]
    fn theta_decreases_with_strip_width() {
        let cfg = RootFindConfig::default();
        let thetas: [f64; 4] = [0.0, 20.0, 40.0, 60.0].map(|l| solve_theta_c(152.0, l, &cfg).unwrap());
        assert!(thetas.windows(2).all(|w| w[1] < w[0]), "{thetas:?}");
    }

    #[test]
    fn semicircular_side_channel() {
        let cfg = RootFindConfig::default();
        for h in [0.5, 1.0, 63.5] {
            let h_s = solve_h_s(0.5 * PI * h, h, &cfg).unwrap();
            assert!((h_s - h).abs() <= 1e-9 * h);
        }
    }

    #[test]
    fn full_circle_side_channel() {
        assert_eq!(solve_h_s(PI, 0.0, &RootFindConfig::default()), Ok(1.0));
    }

    #[test]
    fn structure_one_side_residual() {
        let h_s = solve_h_s(127.0, 76.2, &RootFindConfig::default()).unwrap();
        assert!((76.2 - h_s * libm::sin(127.0 / h_s)).abs() < 1e-9 * 76.2);
    }

    #[test]
    fn chord_longer_than_arc_has_no_solution() {
        let e = solve_h_s(10.0, 10.0, &RootFindConfig::default()).unwrap_err();
        assert!(matches!(e, SolveError::NoBracket { .. }));
        let fab = FabricationParams::new(100.0, 10.0, 12.0);
        match forward_geometry(&fab, &RootFindConfig::default()) {
            Err(Error::Solve { channel: Channel::Side, source: SolveError::NoBracket { .. } }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tangent_circles_from_fabrication() {
        let cs = forward_geometry(&FabricationParams::new(PI / 2.0, PI, 0.0), &RootFindConfig::default()).unwrap();
        assert_eq!(cs.spec, DesignSpec::new(1.0, 1.0, 3.0));
    }

    #[test]
    fn invalid_fabrication_is_rejected() {
        let cfg = RootFindConfig::default();
        assert!(matches!(
            forward_geometry(&FabricationParams::new(-1.0, 1.0, 0.0), &cfg),
            Err(Error::InvalidFabrication(_))
        ));
        assert!(forward_geometry_with_resolution(&FabricationParams::new(1.0, 1.0, 0.0), &cfg, 0.0).is_err());
    }
}
