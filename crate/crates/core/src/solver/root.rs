//! Bracketed scalar root finding: Illinois false position with a
//! bisection safeguard.

use crate::error::SolveError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootFindConfig {
    /// Convergence tolerance as a fraction of the initial bracket width.
    pub bracket_tol: f64,
    pub max_iter: usize,
}

impl Default for RootFindConfig {
    fn default() -> Self {
        Self { bracket_tol: 1e-12, max_iter: 200 }
    }
}

impl RootFindConfig {
    pub fn validate(&self) -> Result<(), SolveError> {
        if !(self.bracket_tol > 0.0 && self.bracket_tol < 1.0) {
            return Err(SolveError::Domain("bracket tolerance must lie in (0, 1)"));
        }
        if self.max_iter == 0 {
            return Err(SolveError::Domain("max_iter must be at least 1"));
        }
        Ok(())
    }
}

/// Finds a root of `f` on `[lo, hi]`, which must bracket a sign change.
///
/// Each step takes the false-position point unless the bracket failed to
/// halve over the previous two steps, in which case it bisects. Returns the
/// midpoint of the final bracket, or an exact zero if one is hit.
pub fn find_root<F>(mut f: F, lo: f64, hi: f64, cfg: &RootFindConfig) -> Result<f64, SolveError>
where
    F: FnMut(f64) -> f64,
{
    cfg.validate()?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(SolveError::Domain("bracket must be finite with lo < hi"));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa.is_nan() || fb.is_nan() {
        return Err(SolveError::Domain("residual is NaN at the bracket ends"));
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if (fa < 0.0) == (fb < 0.0) {
        return Err(SolveError::NoBracket { lo, hi, f_lo: fa, f_hi: fb });
    }

    let tol = cfg.bracket_tol * (hi - lo);
    // widths one and two steps back
    let mut prev = [hi - lo; 2];
    // which end was replaced last: -1 for a, +1 for b
    let mut last_side = 0i8;

    for _ in 0..cfg.max_iter {
        let width = b - a;
        if width <= tol {
            return Ok(0.5 * (a + b));
        }
        let mid = 0.5 * (a + b);
        let x = if width > 0.5 * prev[1] {
            mid
        } else {
            let s = (a * fb - b * fa) / (fb - fa);
            if s > a && s < b {
                s
            } else {
                mid
            }
        };
        prev = [width, prev[0]];

        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.is_nan() {
            return Err(SolveError::Domain("residual is NaN inside the bracket"));
        }
        if (fx < 0.0) == (fa < 0.0) {
            a = x;
            fa = fx;
            if last_side == -1 {
                fb *= 0.5;
            }
            last_side = -1;
        } else {
            b = x;
            fb = fx;
            if last_side == 1 {
                fa *= 0.5;
            }
            last_side = 1;
        }
    }
    if b - a <= tol {
        return Ok(0.5 * (a + b));
    }
    Err(SolveError::NonConvergence { iterations: cfg.max_iter, last: 0.5 * (a + b) })
}
