//! The fully determined inflated cross-section: two coradial center arcs,
//! two side arcs and two straight constraining strips.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::polygon::{push_arc, Point, Polygon};
use super::spec::{inverse_design, DesignSpec, FabricationParams};
use crate::error::Result;
use crate::solver::area::center_area_unchecked;

/// Default maximum chord-to-arc deviation (mm) used when a side channel
/// area has to be discretised.
pub const DEFAULT_ARC_RESOLUTION: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterChannel {
    /// Radius shared by the top and bottom arcs.
    pub r_c: f64,
    /// Angle subsumed by each of the top and bottom arcs.
    pub theta_c: f64,
    /// Angle subtending each straight segment, `π − θ_c`.
    pub theta_m: f64,
    pub w_c: f64,
    pub l: f64,
    pub area: f64,
    /// Common center of the top and bottom arcs.
    pub center: Point,
}

impl CenterChannel {
    pub fn new(h_c: f64, s_c: f64, l: f64) -> Self {
        let r_c = 0.5 * h_c;
        let theta_c = s_c / r_c;
        Self {
            r_c,
            theta_c,
            theta_m: PI - theta_c,
            w_c: 2.0 * r_c * libm::sin(0.5 * theta_c),
            l,
            area: center_area_unchecked(s_c, l, theta_c),
            center: Point::ORIGIN,
        }
    }

    /// `α = r_c cos(θ_c / 2)`, half the straight-segment length when the
    /// arcs are coradial.
    pub fn alpha(&self) -> f64 {
        self.r_c * libm::cos(0.5 * self.theta_c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn sign(self) -> f64 {
        match self {
            Side::Left => -1.0,
            Side::Right => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideChannel {
    pub side: Side,
    pub r_s: f64,
    pub theta_s: f64,
    /// Angle of the conjugate arc, `2π − θ_s`.
    pub theta_s_conj: f64,
    /// Length of the conjugate arc, `π H_s − S_s`.
    pub s_s_conj: f64,
    pub w_s: f64,
    pub l: f64,
    /// Signed x coordinate of the arc center; the center lies on the x axis.
    pub center_x: f64,
    /// Discretised area enclosed by the side arc and its strip.
    pub area: f64,
}

impl SideChannel {
    pub fn new(side: Side, h_s: f64, s_s: f64, l: f64, w: f64, arc_resolution: f64) -> Self {
        let r_s = 0.5 * h_s;
        let theta_s = s_s / r_s;
        let theta_s_conj = 2.0 * PI - theta_s;
        let mut ch = Self {
            side,
            r_s,
            theta_s,
            theta_s_conj,
            s_s_conj: PI * h_s - s_s,
            w_s: r_s * (1.0 + libm::cos(0.5 * theta_s_conj)),
            l,
            center_x: side.sign() * (0.5 * w - r_s),
            area: 0.0,
        };
        ch.area = ch.polygon(arc_resolution).area();
        ch
    }

    pub fn center(&self) -> Point {
        Point::new(self.center_x, 0.0)
    }

    /// Angle (about the side center) at which the arc starts, counter-clockwise.
    fn start_angle(&self) -> f64 {
        match self.side {
            Side::Right => -0.5 * self.theta_s,
            Side::Left => PI - 0.5 * self.theta_s,
        }
    }

    /// The region bounded by the side arc and the straight segment.
    pub fn polygon(&self, arc_resolution: f64) -> Polygon {
        let mut pts = Vec::new();
        push_arc(&mut pts, self.center(), self.r_s, self.start_angle(), self.theta_s, arc_resolution, false);
        Polygon::new(pts).expect("arc polygons have at least 9 vertices")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossSection {
    pub spec: DesignSpec,
    pub fab: FabricationParams,
    pub center: CenterChannel,
    pub left: SideChannel,
    pub right: SideChannel,
    /// Midpoints of the left and right straight segments.
    pub straight_midpoints: [Point; 2],
    /// Assembled width `w_c + 2 w_s`.
    pub width: f64,
}

impl CrossSection {
    /// Assembles the geometry from a consistent spec/parameter pair.
    pub fn assemble(spec: DesignSpec, fab: FabricationParams, arc_resolution: f64) -> Self {
        let center = CenterChannel::new(spec.h_c, fab.s_c, fab.l);
        let left = SideChannel::new(Side::Left, spec.h_s, fab.s_s, fab.l, spec.w, arc_resolution);
        let right = SideChannel::new(Side::Right, spec.h_s, fab.s_s, fab.l, spec.w, arc_resolution);
        let half = 0.5 * center.w_c;
        Self {
            spec,
            fab,
            center,
            left,
            right,
            straight_midpoints: [Point::new(-half, 0.0), Point::new(half, 0.0)],
            width: center.w_c + 2.0 * right.w_s,
        }
    }

    pub fn perimeter(&self) -> f64 {
        self.fab.perimeter()
    }

    /// Center area (closed form) plus both side areas (discretised).
    pub fn area(&self) -> f64 {
        self.center.area + self.left.area + self.right.area
    }

    /// Height of the bounding box.
    pub fn height(&self) -> f64 {
        let side = if self.right.theta_s >= PI { self.right.r_s } else { 0.5 * self.fab.l };
        2.0 * side.max(self.center.r_c)
    }

    /// Outer membrane outline, counter-clockwise starting at the lower end
    /// of the right strip. Strips are internal and not part of it.
    pub fn outline(&self, arc_resolution: f64) -> Polygon {
        let c = &self.center;
        let mut pts = Vec::new();
        push_arc(&mut pts, self.right.center(), self.right.r_s, self.right.start_angle(), self.right.theta_s, arc_resolution, false);
        push_arc(&mut pts, c.center, c.r_c, 0.5 * PI - 0.5 * c.theta_c, c.theta_c, arc_resolution, true);
        push_arc(&mut pts, self.left.center(), self.left.r_s, self.left.start_angle(), self.left.theta_s, arc_resolution, true);
        push_arc(&mut pts, c.center, c.r_c, 1.5 * PI - 0.5 * c.theta_c, c.theta_c, arc_resolution, true);
        pts.pop();
        Polygon::new(pts).expect("outline has at least 32 vertices")
    }
}

/// Inverse design followed by assembly of the full geometry.
pub fn build_cross_section(spec: &DesignSpec) -> Result<CrossSection> {
    let fab = inverse_design(spec)?;
    Ok(CrossSection::assemble(*spec, fab, DEFAULT_ARC_RESOLUTION))
}
