//! Worked examples for the three prototype structures and the degenerate
//! tangent-circle shape. Reference values were produced with an independent
//! 40-digit implementation of the forward model and frozen here.
#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use crosssec_core::analysis::{area_ratio, ergonomic_index, eversion_force, sweep_constant_perimeter, total_area};
use crosssec_core::geometry::{
    build_cross_section, inverse_design, membrane_curvature, membrane_tension, DesignSpec, FabricationParams,
};
use crosssec_core::solver::{
    area_max_oracle, center_area, center_area_derivative, forward_geometry, solve_theta_c, RootFindConfig,
};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

struct Reference {
    fab: (f64, f64, f64),
    theta_c: f64,
    h_c: f64,
    h_s: f64,
    w: f64,
    center_area: f64,
    total_area: f64,
    index: f64,
}

const STRUCTURES: [Reference; 3] = [
    Reference {
        fab: (152.0, 127.0, 76.2),
        theta_c: 2.0577377726886381,
        h_c: 147.73505353055453,
        h_s: 76.50441965746622,
        w: 209.88950273836148,
        center_area: 16050.066851507131,
        total_area: 21167.866381953359,
        index: 1.8725803187228067,
    },
    Reference {
        fab: (152.0, 127.0, 50.8),
        theta_c: 2.3386059706710776,
        h_c: 129.99197120529257,
        h_s: 59.754999100683392,
        w: 210.87438696640508,
        center_area: 12918.621881766953,
        total_area: 17512.264706284962,
        index: 2.1515646722448154,
    },
    Reference {
        fab: (127.0, 152.0, 76.2),
        theta_c: 1.9165037969359796,
        h_c: 132.53300119002311,
        h_s: 80.319221953497999,
        w: 214.14777950419739,
        center_area: 12547.290608752969,
        total_area: 19618.974486713962,
        index: 2.5630888916212041,
    },
];

fn fab(r: &Reference) -> FabricationParams {
    FabricationParams::new(r.fab.0, r.fab.1, r.fab.2)
}

#[test]
fn structures_match_reference_geometry() {
    let cfg = RootFindConfig::default();
    for r in &STRUCTURES {
        let cs = forward_geometry(&fab(r), &cfg).unwrap();
        assert!(rel(cs.center.theta_c, r.theta_c) < 1e-10, "{:?}", r.fab);
        assert!(rel(cs.spec.h_c, r.h_c) < 1e-10);
        assert!(rel(cs.spec.h_s, r.h_s) < 1e-10);
        assert!(rel(cs.spec.w, r.w) < 1e-10);
        assert!(rel(cs.center.area, r.center_area) < 1e-10);
        assert!(rel(ergonomic_index(&cs).index, r.index) < 1e-9);
        // side areas are discretised at 1e-4 mm, a deficit of about 4/3 sagitta / r_s
        assert!(rel(cs.area(), r.total_area) < 1e-5, "{} vs {}", cs.area(), r.total_area);
    }
}

#[test]
fn structures_share_the_membrane_perimeter() {
    for r in &STRUCTURES {
        let p = fab(r).perimeter();
        assert_eq!(p, 558.0);
        assert!(rel(p, 559.0) < 2e-3);
    }
}

#[test]
fn structure_one_inverts_to_its_fabrication_parameters() {
    let r = &STRUCTURES[0];
    let fab = inverse_design(&DesignSpec::new(r.h_c, r.h_s, r.w)).unwrap();
    assert!(rel(fab.s_c, 152.0) < 1e-9, "{fab:?}");
    assert!(rel(fab.s_s, 127.0) < 1e-9);
    assert!(rel(fab.l, 76.2) < 1e-9);
}

/// Center region traced directly as two coradial arcs; the straight strips
/// are the closing chords between them.
fn polygon_center_area(s_c: f64, theta: f64, n: usize) -> f64 {
    let r = s_c / theta;
    let mut pts = Vec::with_capacity(2 * n + 2);
    for half in [0.5 * PI, 1.5 * PI] {
        for i in 0..=n {
            let t = half - 0.5 * theta + theta * i as f64 / n as f64;
            pts.push((r * t.cos(), r * t.sin()));
        }
    }
    let twice: f64 = (0..pts.len())
        .map(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % pts.len()]);
            a.0 * b.1 - b.0 * a.1
        })
        .sum();
    0.5 * twice
}

#[test]
fn center_area_matches_polygonised_region() {
    let cfg = RootFindConfig::default();
    let theta = solve_theta_c(152.0, 76.2, &cfg).unwrap();
    let closed = center_area(152.0, 76.2, theta).unwrap();
    let poly = polygon_center_area(152.0, theta, 20_000);
    assert!(rel(closed, poly) < 1e-7, "{closed} vs {poly}");
}

#[test]
fn derivative_at_sample_angles() {
    let (s_c, l) = (152.0, 76.2);
    for theta in [0.5, 1.5, 3.0, 5.0] {
        let h = 1e-5;
        let fd = (center_area(s_c, l, theta + h).unwrap() - center_area(s_c, l, theta - h).unwrap()) / (2.0 * h);
        let d = center_area_derivative(s_c, l, theta).unwrap();
        assert!(rel(d, fd) < 1e-6, "θ = {theta}: {d} vs {fd}");
    }
}

#[test]
fn derivative_vanishes_and_changes_sign_at_the_root() {
    let (s_c, l) = (152.0, 76.2);
    let theta = solve_theta_c(s_c, l, &RootFindConfig::default()).unwrap();
    let a = center_area(s_c, l, theta).unwrap();
    assert!(center_area_derivative(s_c, l, theta).unwrap().abs() <= 1e-10 * a);
    assert!(center_area_derivative(s_c, l, theta - 1e-3).unwrap() > 0.0);
    assert!(center_area_derivative(s_c, l, theta + 1e-3).unwrap() < 0.0);
}

#[test]
fn oracle_reproduces_the_root() {
    let cfg = RootFindConfig::default();
    let semi = area_max_oracle(1.0, 0.0, 1_000_000, &cfg).unwrap();
    assert!(semi.agrees(), "{semi:?}");
    assert!((semi.theta_grid_argmax - PI).abs() <= semi.grid_step);
    let s1 = area_max_oracle(152.0, 76.2, 1_000_000, &cfg).unwrap();
    assert!(s1.agrees(), "{s1:?}");
    assert!(rel(s1.analytic_root, STRUCTURES[0].theta_c) < 1e-10);
    assert!(area_max_oracle(1.0, 0.0, 10, &cfg).is_err());
}

#[test]
fn membrane_tension_recovers_the_center_radius() {
    let cs = forward_geometry(&fab(&STRUCTURES[0]), &RootFindConfig::default()).unwrap();
    let p = 2.07;
    let t = membrane_tension(p, cs.center.r_c);
    let kappa = membrane_curvature(p, t).unwrap();
    assert!(rel(1.0 / kappa, cs.center.r_c) < 1e-12);
}

#[test]
fn ergonomic_index_rises_as_the_strip_narrows() {
    let cfg = RootFindConfig::default();
    let s1 = ergonomic_index(&forward_geometry(&fab(&STRUCTURES[0]), &cfg).unwrap()).index;
    let s2 = ergonomic_index(&forward_geometry(&fab(&STRUCTURES[1]), &cfg).unwrap()).index;
    let s3 = ergonomic_index(&forward_geometry(&fab(&STRUCTURES[2]), &cfg).unwrap()).index;
    assert!(s2 > s1);
    assert!(s3 > s1);
}

#[test]
fn constant_perimeter_sweep_of_the_prototypes() {
    let rows = sweep_constant_perimeter(558.0, &[127.0, 152.0], &[50.8, 76.2], &RootFindConfig::default()).unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.feasible));
    let idx: Vec<f64> = rows.iter().map(|r| r.geometry.unwrap().ergonomic_index).collect();
    // rows: (127, 50.8), (127, 76.2), (152, 50.8), (152, 76.2)
    assert!(idx[0] > idx[1] && idx[2] > idx[3], "{idx:?}");
    assert!(idx[0] > idx[2] && idx[1] > idx[3], "{idx:?}");
    assert!(rel(idx[3], STRUCTURES[0].index) < 1e-9);
    assert!(rel(idx[1], STRUCTURES[2].index) < 1e-9);

    let none = sweep_constant_perimeter(558.0, &[279.0, 300.0], &[10.0], &RootFindConfig::default()).unwrap();
    assert!(none.iter().all(|r| !r.feasible && r.failure_reason.as_deref() == Some("S_s <= 0")));
}

#[test]
fn tip_force_from_model_area() {
    assert!((eversion_force(34.0, 3.67e4) - 1247.8).abs() < 1e-9);
    assert!(rel(eversion_force(34.0, 3.67e4), 1249.0) < 2e-3);
    let cs = forward_geometry(&fab(&STRUCTURES[0]), &RootFindConfig::default()).unwrap();
    let f = eversion_force(2.07, total_area(&cs, 1e-5).unwrap());
    assert!(rel(f, 2.07e-3 * STRUCTURES[0].total_area) < 1e-6, "{f}");
}

#[test]
fn tangent_circles_total_area() {
    let cs = build_cross_section(&DesignSpec::new(1.0, 1.0, 3.0)).unwrap();
    assert_eq!(cs.fab.s_c, PI / 2.0);
    assert_eq!(cs.fab.s_s, PI);
    assert_eq!(cs.fab.l, 0.0);
    let a = total_area(&cs, 1e-4).unwrap();
    assert!(rel(a, 0.75 * PI) < 5e-4, "{a}");
}

#[test]
fn total_area_converges_under_refinement() {
    let cs = forward_geometry(&fab(&STRUCTURES[0]), &RootFindConfig::default()).unwrap();
    let coarse = total_area(&cs, 1e-3).unwrap();
    let fine = total_area(&cs, 1e-4).unwrap();
    assert!(rel(coarse, fine) < 1e-4);
    assert!(coarse < fine);
}

#[test]
fn total_area_scales_quadratically() {
    let spec = DesignSpec::new(STRUCTURES[0].h_c, STRUCTURES[0].h_s, STRUCTURES[0].w);
    let a1 = total_area(&build_cross_section(&spec).unwrap(), 1e-5).unwrap();
    let a3 = total_area(&build_cross_section(&spec.scaled(3.0)).unwrap(), 3e-5).unwrap();
    assert!(rel(a3, 9.0 * a1) < 1e-9);
}

#[test]
fn area_ratio_of_the_model_outline() {
    let cs = forward_geometry(&fab(&STRUCTURES[0]), &RootFindConfig::default()).unwrap();
    let res = 1e-6;
    let outline = cs.outline(res);
    let identity = area_ratio(&outline, &cs, res).unwrap();
    assert!((identity - 1.0).abs() < 1e-7, "{identity}");

    let shrunk = area_ratio(&outline.scaled(0.995, 0.995), &cs, res).unwrap();
    assert!((shrunk - 0.995 * 0.995).abs() < 1e-6, "{shrunk}");

    // rigid motions do not change the ratio
    let moved = area_ratio(&outline.rotated(0.3).translated(40.0, -12.0), &cs, res).unwrap();
    assert!((moved - identity).abs() < 1e-9);
}
