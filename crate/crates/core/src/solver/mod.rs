//! Numerical side of the model: root finding, the forward model and the
//! area-maximisation oracle.

pub mod area;
mod forward;
mod oracle;
mod root;

pub use area::{center_area, center_area_derivative, coradial_residual, f2};
pub use forward::{
    forward_geometry, forward_geometry_with_resolution, solve_h_s, solve_side_half_angle, solve_theta_c, ANGLE_EPS,
};
pub use oracle::{area_max_oracle, GridBest, OracleGrid, OracleResult, GRID_EPS, MIN_GRID_POINTS};
pub use root::{find_root, RootFindConfig};
