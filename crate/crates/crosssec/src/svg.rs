//! SVG rendering of a cross-section. One user unit is one millimetre; the
//! y axis is flipped on output so that +y points up.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crosssec_core::{CrossSection, Point};

use crate::format::fixed;

fn pt(p: Point) -> String {
    format!("{} {}", fixed(p.x), fixed(-p.y))
}

fn on_circle(center: Point, r: f64, angle: f64) -> Point {
    let (s, c) = angle.sin_cos();
    Point::new(center.x + r * c, center.y + r * s)
}

/// Counter-clockwise arc (in model coordinates) of at most a half turn.
/// After the y flip that is sweep-flag 0.
fn arc_to(r: f64, end: Point) -> String {
    format!("A {} {} 0 0 0 {}", fixed(r), fixed(r), pt(end))
}

fn cross(out: &mut String, c: Point, size: f64) {
    let _ = writeln!(
        out,
        "    <path d=\"M {} L {} M {} L {}\"/>",
        pt(Point::new(c.x - size, c.y)),
        pt(Point::new(c.x + size, c.y)),
        pt(Point::new(c.x, c.y - size)),
        pt(Point::new(c.x, c.y + size)),
    );
}

fn dimension(out: &mut String, a: Point, b: Point, label: &str, at: Point) {
    let _ = writeln!(out, "    <path d=\"M {} L {}\"/>", pt(a), pt(b));
    let _ = writeln!(out, "    <text x=\"{}\" y=\"{}\" fill=\"gray\" stroke=\"none\">{label}</text>", fixed(at.x), fixed(-at.y));
}

/// Renders the outer membrane as six arcs (each side arc split in two so a
/// full circle stays drawable), the straight strips as lines, arc centers
/// as crosses, and the four main dimensions.
pub fn render_svg(cs: &CrossSection) -> String {
    let spec = &cs.spec;
    let c = &cs.center;
    let (left, right) = (&cs.left, &cs.right);
    let width = spec.w;
    let height = cs.height();
    let stroke = 0.002 * width;
    let font = 0.03 * width;

    let top_start = 0.5 * PI - 0.5 * c.theta_c;
    let bottom_start = 1.5 * PI - 0.5 * c.theta_c;
    let r_start = -0.5 * right.theta_s;
    let l_start = PI - 0.5 * left.theta_s;

    let mut d = format!("M {}", pt(on_circle(right.center(), right.r_s, r_start)));
    let _ = write!(d, " {}", arc_to(right.r_s, on_circle(right.center(), right.r_s, r_start + 0.5 * right.theta_s)));
    let _ = write!(d, " {}", arc_to(right.r_s, on_circle(right.center(), right.r_s, r_start + right.theta_s)));
    let _ = write!(d, " {}", arc_to(c.r_c, on_circle(c.center, c.r_c, top_start + c.theta_c)));
    let _ = write!(d, " {}", arc_to(left.r_s, on_circle(left.center(), left.r_s, l_start + 0.5 * left.theta_s)));
    let _ = write!(d, " {}", arc_to(left.r_s, on_circle(left.center(), left.r_s, l_start + left.theta_s)));
    let _ = write!(d, " {} Z", arc_to(c.r_c, on_circle(c.center, c.r_c, bottom_start + c.theta_c)));

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"{}mm\" height=\"{}mm\" overflow=\"visible\">",
        fixed(-0.5 * width),
        fixed(-0.5 * height),
        fixed(width),
        fixed(height),
        fixed(width),
        fixed(height),
    );
    let _ = writeln!(s, "  <g id=\"membrane\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\">", fixed(stroke));
    let _ = writeln!(s, "    <path d=\"{d}\"/>");
    for m in cs.straight_midpoints {
        let a = Point::new(m.x, -0.5 * c.l);
        let b = Point::new(m.x, 0.5 * c.l);
        let _ = writeln!(
            s,
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            fixed(a.x),
            fixed(-a.y),
            fixed(b.x),
            fixed(-b.y)
        );
    }
    s.push_str("  </g>\n");

    let _ = writeln!(s, "  <g id=\"centers\" fill=\"none\" stroke=\"red\" stroke-width=\"{}\">", fixed(stroke));
    let size = 0.01 * width;
    for p in [left.center(), c.center, right.center()] {
        cross(&mut s, p, size);
    }
    s.push_str("  </g>\n");

    let _ = writeln!(
        s,
        "  <g id=\"dimensions\" fill=\"none\" stroke=\"gray\" stroke-width=\"{}\" font-family=\"sans-serif\" font-size=\"{}\">",
        fixed(0.5 * stroke),
        fixed(font)
    );
    let h_c = spec.h_c;
    let h_s = spec.h_s;
    dimension(
        &mut s,
        Point::new(0.0, -0.5 * h_c),
        Point::new(0.0, 0.5 * h_c),
        &format!("H_c = {} mm", fixed(h_c)),
        Point::new(0.01 * width, 0.25 * h_c),
    );
    dimension(
        &mut s,
        Point::new(right.center_x, -0.5 * h_s),
        Point::new(right.center_x, 0.5 * h_s),
        &format!("H_s = {} mm", fixed(h_s)),
        Point::new(right.center_x + 0.01 * width, 0.25 * h_s),
    );
    dimension(
        &mut s,
        Point::new(-0.5 * width, -0.5 * height),
        Point::new(0.5 * width, -0.5 * height),
        &format!("w = {} mm", fixed(width)),
        Point::new(-0.5 * width, -0.5 * height + 0.01 * width),
    );
    dimension(
        &mut s,
        Point::new(-0.5 * c.w_c, 0.0),
        Point::new(0.5 * c.w_c, 0.0),
        &format!("w_c = {} mm", fixed(c.w_c)),
        Point::new(-0.5 * c.w_c, 0.01 * width),
    );
    s.push_str("  </g>\n</svg>\n");
    s
}
