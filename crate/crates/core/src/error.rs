use core::fmt;

use crate::geometry::FeasibilityReport;

/// Which channel of the cross-section a solver failure belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Channel {
    Center,
    Side,
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Channel::Center => f.write_str("center channel"),
            Channel::Side => f.write_str("side channel"),
        }
    }
}

/// Failure of a bracketed scalar root solve.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveError {
    /// The residual has the same sign at both ends of the search interval.
    NoBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    /// Iteration limit reached before the bracket shrank below tolerance.
    NonConvergence { iterations: usize, last: f64 },
    /// An input is outside the domain of the residual (non-finite, negative, ...).
    Domain(&'static str),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NoBracket { lo, hi, f_lo, f_hi } => write!(
                f,
                "no sign change on [{lo}, {hi}] (f(lo) = {f_lo}, f(hi) = {f_hi})"
            ),
            SolveError::NonConvergence { iterations, last } => {
                write!(f, "no convergence after {iterations} iterations (last x = {last})")
            }
            SolveError::Domain(what) => write!(f, "domain error: {what}"),
        }
    }
}

impl core::error::Error for SolveError {}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The design specification has no admissible cross-section.
    InfeasibleSpec(FeasibilityReport),
    /// Fabrication parameters violate their own invariants.
    InvalidFabrication(&'static str),
    /// Membrane tension must be strictly positive.
    NonpositiveTension,
    /// An argument lies outside the domain of a closed-form relation.
    Domain(&'static str),
    /// A channel solve failed.
    Solve { channel: Channel, source: SolveError },
    /// The polygon has no usable area or crosses itself.
    DegeneratePolygon(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InfeasibleSpec(report) => {
                f.write_str("infeasible design specification: ")?;
                for (i, v) in report.violations.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            Error::InvalidFabrication(what) => write!(f, "invalid fabrication parameters: {what}"),
            Error::NonpositiveTension => f.write_str("membrane tension must be positive"),
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::Solve { channel, source } => write!(f, "{channel}: {source}"),
            Error::DegeneratePolygon(what) => write!(f, "degenerate polygon: {what}"),
        }
    }
}

impl core::error::Error for Error {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Error::Solve { source, .. } => Some(source),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
