//! Geometry of inflated membrane structures whose radial expansion is
//! limited by internal constraining strips.
//!
//! The cross-section consists of a center channel, bounded by two coradial
//! arcs, and two side channels, each a single arc closed by a straight
//! strip. [`geometry`] holds the closed-form inverse model (design
//! specification to fabrication parameters), [`solver`] the numerical
//! forward model and the brute-force area-maximisation oracle, and
//! [`analysis`] the design-space tools built on both.
//!
//! All lengths are in mm, pressures in kPa and forces in N.

#![cfg_attr(not(test), no_std)]
// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod analysis;
pub mod error;
pub mod geometry;
pub mod solver;

pub use error::{Channel, Error, Result, SolveError};
pub use geometry::{
    build_cross_section, inverse_design, validate_spec, CrossSection, DesignSpec, FabricationParams, Point, Polygon,
};
pub use solver::{forward_geometry, RootFindConfig};
