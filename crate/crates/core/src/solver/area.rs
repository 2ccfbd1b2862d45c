//! Center-channel area as a function of the arc angle, its derivative, and
//! the coradial residual whose root is the area maximiser.

use core::f64::consts::PI;

use crate::error::{Error, Result};

const SERIES_CUTOFF: f64 = 0.5;

/// `θ − sin θ`, via its Taylor series near zero where the direct
/// difference cancels.
pub(crate) fn theta_minus_sin(theta: f64) -> f64 {
    if theta.abs() >= SERIES_CUTOFF {
        return theta - libm::sin(theta);
    }
    let t2 = theta * theta;
    let mut term = theta * t2 / 6.0;
    let mut sum = 0.0;
    // θ³/3! − θ⁵/5! + ... through θ¹⁷
    for k in 1..=8 {
        sum += term;
        let n = (2 * k + 2) as f64;
        term *= -t2 / (n * (n + 1.0));
    }
    sum
}

/// `2 sin(θ/2) − θ cos(θ/2)`, strictly positive on (0, 2π).
pub fn f2(theta: f64) -> f64 {
    if theta.abs() >= SERIES_CUTOFF {
        let h = 0.5 * theta;
        return 2.0 * libm::sin(h) - theta * libm::cos(h);
    }
    // 2 Σ (−1)^(k+1) 2k h^(2k+1) / (2k+1)!, h = θ/2
    let h = 0.5 * theta;
    let h2 = h * h;
    let mut power = h * h2; // h^(2k+1)
    let mut fact = 6.0; // (2k+1)!
    let mut sum = 0.0;
    for k in 1..=8 {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        sum += sign * (2 * k) as f64 * power / fact;
        power *= h2;
        let n = (2 * k + 2) as f64;
        fact *= n * (n + 1.0);
    }
    2.0 * sum
}

/// `S_c cos(θ/2) / θ − L/2`. Zero exactly when the top and bottom arcs
/// share their center; `cos(θ/2)` is written as `sin((π − θ)/2)` so the
/// residual at θ = π is exactly `−L/2`.
pub fn coradial_residual(s_c: f64, l: f64, theta: f64) -> f64 {
    s_c / theta * libm::sin(0.5 * (PI - theta)) - 0.5 * l
}

fn check_domain(s_c: f64, l: f64, theta: f64) -> Result<()> {
    if !(s_c.is_finite() && s_c > 0.0) {
        return Err(Error::Domain("S_c must be positive"));
    }
    if !(l.is_finite() && l >= 0.0) {
        return Err(Error::Domain("L must be non-negative"));
    }
    if !(theta > 0.0 && theta < 2.0 * PI) {
        return Err(Error::Domain("theta_c must lie in (0, 2π)"));
    }
    Ok(())
}

/// Center-channel area for arc length `s_c`, strip width `l` and arc angle
/// `theta`, whether or not the arc centers coincide:
/// `S_c²/θ − S_c² sin θ / θ² + 2 S_c sin(θ/2) L / θ`.
pub fn center_area(s_c: f64, l: f64, theta: f64) -> Result<f64> {
    check_domain(s_c, l, theta)?;
    Ok(center_area_unchecked(s_c, l, theta))
}

pub(crate) fn center_area_unchecked(s_c: f64, l: f64, theta: f64) -> f64 {
    let segments = s_c * s_c * theta_minus_sin(theta) / (theta * theta);
    segments + 2.0 * s_c / theta * libm::sin(0.5 * theta) * l
}

/// `dA_c/dθ` in factored form
/// `(2 S_c / θ²) · f2(θ) · (S_c cos(θ/2) / θ − L/2)`.
pub fn center_area_derivative(s_c: f64, l: f64, theta: f64) -> Result<f64> {
    check_domain(s_c, l, theta)?;
    Ok(2.0 * s_c / (theta * theta) * f2(theta) * coradial_residual(s_c, l, theta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semicircles_make_a_circle() {
        let a = center_area(PI / 2.0, 0.0, PI).unwrap();
        assert!((a - PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn series_matches_direct_near_cutoff() {
        for &t in &[0.49, 0.3, 0.1] {
            let direct = t - libm::sin(t);
            assert!((theta_minus_sin(t) - direct).abs() <= 1e-12 * direct, "{t}");
            let h = 0.5 * t;
            let d2 = 2.0 * libm::sin(h) - t * libm::cos(h);
            assert!((f2(t) - d2).abs() <= 1e-12 * d2, "{t}");
        }
        // leading terms at tiny angles
        let t = 1e-6;
        assert!((theta_minus_sin(t) / (t * t * t / 6.0) - 1.0).abs() < 1e-12);
        assert!((f2(t) / (t * t * t / 12.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn vanishing_angle_vanishing_area() {
        let s_c = 152.0;
        let small = center_area(s_c, 0.0, 1e-6).unwrap();
        let at_pi = center_area(s_c, 0.0, PI).unwrap();
        assert!(small < 1e-3 * at_pi);
        assert!(small > 0.0);
    }

    #[test]
    fn flat_arcs_leave_the_strip_rectangle() {
        // with L > 0 the arcs flatten onto an S_c x L rectangle
        let (s_c, l) = (152.0, 76.2);
        let small = center_area(s_c, l, 1e-6).unwrap();
        assert!((small - s_c * l).abs() < 1e-6 * s_c * l);
        assert!(small < center_area(s_c, l, PI).unwrap());
    }

    #[test]
    fn domain_errors() {
        assert!(center_area(1.0, 0.0, 0.0).is_err());
        assert!(center_area(1.0, 0.0, 2.0 * PI).is_err());
        assert!(center_area(0.0, 0.0, 1.0).is_err());
        assert!(center_area(1.0, -1.0, 1.0).is_err());
        assert!(center_area_derivative(1.0, 0.0, 7.0).is_err());
    }

    #[test]
    fn residual_exact_at_half_turn() {
        assert_eq!(coradial_residual(1.0, 0.0, PI), 0.0);
        assert_eq!(coradial_residual(3.0, 2.0, PI), -1.0);
    }
}
