//! Domain types and closed-form relations of the cross-section model.

mod membrane;
mod polygon;
mod section;
mod spec;

pub use membrane::{membrane_curvature, membrane_tension};
pub use polygon::{arc_segments, arc_step, circle, push_arc, Point, Polygon};
pub use section::{build_cross_section, CenterChannel, CrossSection, Side, SideChannel, DEFAULT_ARC_RESOLUTION};
pub use spec::{
    gamma, inverse_design, inverse_solution, validate_spec, DesignSpec, FabricationParams, FeasibilityReport,
    InverseSolution, Violation,
};
