use std::f64::consts::PI;

use crosssec_core::analysis::{ergonomic_index, eversion_force, total_area};
use crosssec_core::geometry::{build_cross_section, gamma, inverse_design, validate_spec, DesignSpec, FabricationParams};
use crosssec_core::solver::{
    center_area, center_area_derivative, forward_geometry, solve_theta_c, OracleGrid, RootFindConfig,
};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Feasible specs: inside `max(H_c, 2H_s − H_c, H_s) < w < H_c + 2H_s` all
/// four factors of the discriminant are positive.
fn feasible_spec() -> impl Strategy<Value = DesignSpec> {
    (10.0..200.0f64, 10.0..200.0f64, 0.02..0.98f64)
        .prop_map(|(h_c, h_s, u)| {
            let lo = h_c.max(2.0 * h_s - h_c).max(h_s);
            let hi = h_c + 2.0 * h_s;
            DesignSpec::new(h_c, h_s, lo + u * (hi - lo))
        })
        .prop_filter("feasible", |s| validate_spec(s).feasible)
}

fn fabrication() -> impl Strategy<Value = FabricationParams> {
    (10.0..300.0f64, 10.0..300.0f64, 0.0..0.95f64).prop_map(|(s_c, s_s, u)| FabricationParams::new(s_c, s_s, u * s_s))
}

/// Parameters whose inflated shape lies in the domain of the inverse model.
/// Nearly flat side arcs can inflate narrower than they are tall
/// (`w ≤ H_s`), which the inverse model excludes.
fn invertible_fabrication() -> impl Strategy<Value = FabricationParams> {
    fabrication().prop_filter("w > H_s", |fab| {
        forward_geometry(fab, &RootFindConfig::default()).is_ok_and(|cs| validate_spec(&cs.spec).feasible)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(256) })]

    #[test]
    fn spec_round_trip(spec in feasible_spec()) {
        let fab = inverse_design(&spec).unwrap();
        let cs = forward_geometry(&fab, &RootFindConfig::default()).unwrap();
        prop_assert!(rel(cs.spec.h_c, spec.h_c) < 1e-9);
        prop_assert!(rel(cs.spec.h_s, spec.h_s) < 1e-9);
        prop_assert!(rel(cs.spec.w, spec.w) < 1e-9);
    }

    #[test]
    fn fabrication_round_trip(fab in invertible_fabrication()) {
        let cs = forward_geometry(&fab, &RootFindConfig::default()).unwrap();
        let back = inverse_design(&cs.spec).unwrap();
        prop_assert!(rel(back.s_c, fab.s_c) < 1e-7);
        prop_assert!(rel(back.s_s, fab.s_s) < 1e-7);
        prop_assert!((back.l - fab.l).abs() <= 1e-7 * fab.l.max(fab.s_c));
    }

    #[test]
    fn built_sections_close_and_stay_coradial(spec in feasible_spec()) {
        let cs = build_cross_section(&spec).unwrap();
        prop_assert!(rel(cs.width, spec.w) < 1e-9);
        let scale = spec.h_c;
        prop_assert!((2.0 * cs.center.alpha() - cs.fab.l).abs() <= 1e-9 * scale);
        prop_assert!((cs.right.s_s_conj + cs.fab.s_s - PI * spec.h_s).abs() <= 1e-12 * spec.h_s);
        prop_assert!(cs.center.theta_c > 0.0 && cs.center.theta_c <= PI * (1.0 + 1e-15));
        prop_assert_eq!(cs.left.center_x, -cs.right.center_x);
    }

    #[test]
    fn homogeneity(spec in feasible_spec(), k in 0.1..10.0f64) {
        let f1 = inverse_design(&spec).unwrap();
        let fk = inverse_design(&spec.scaled(k)).unwrap();
        prop_assert!(rel(fk.s_c, k * f1.s_c) < 1e-9);
        prop_assert!(rel(fk.s_s, k * f1.s_s) < 1e-9);
        prop_assert!((fk.l - k * f1.l).abs() <= 1e-9 * k * spec.h_c);
        prop_assert!(rel(gamma(&spec.scaled(k)), k.powi(4) * gamma(&spec)) < 1e-12);

        let a1 = build_cross_section(&spec).unwrap();
        let ak = build_cross_section(&spec.scaled(k)).unwrap();
        prop_assert!(rel(ak.center.area, k * k * a1.center.area) < 1e-9);
        // discretisation is absolute in mm, so compare at resolutions scaled with k
        let t1 = total_area(&a1, 1e-4).unwrap();
        let tk = total_area(&ak, 1e-4 * k).unwrap();
        prop_assert!(rel(tk, k * k * t1) < 1e-9);
        // ergonomic index is dimensionless
        let e1 = ergonomic_index(&a1).index;
        let ek = ergonomic_index(&ak).index;
        prop_assert!(e1 == ek || rel(ek, e1) < 1e-9);
    }

    #[test]
    fn derivative_matches_finite_difference(s_c in 10.0..300.0f64, l in 0.0..200.0f64, theta in 0.2..6.0f64) {
        let h = 1e-6;
        let fd = (center_area(s_c, l, theta + h).unwrap() - center_area(s_c, l, theta - h).unwrap()) / (2.0 * h);
        let d = center_area_derivative(s_c, l, theta).unwrap();
        // absolute floor for points near the stationary angle
        let floor = 1e-6 * center_area(s_c, l, theta).unwrap();
        prop_assert!((fd - d).abs() <= 1e-6 * d.abs() + floor, "fd {} vs {}", fd, d);
    }

    #[test]
    fn oracle_agrees_with_root(s_c in 10.0..300.0f64, u in 0.0..1.5f64) {
        let l = u * s_c;
        let grid = OracleGrid::new(s_c, l, 20_000).unwrap();
        let best = grid.scan(0..20_000).unwrap();
        let r = grid.finish(best, &RootFindConfig::default()).unwrap();
        prop_assert!(r.agrees(), "{:?}", r);
    }

    #[test]
    fn force_is_bilinear(p in 0.0..100.0f64, a in 1.0..1e5f64, x in 0.1..10.0f64, y in 0.1..10.0f64) {
        let f = eversion_force(p, a);
        prop_assert!((eversion_force(x * p, y * a) - x * y * f).abs() <= 1e-12 * (x * y * f).max(1e-300));
    }

    #[test]
    fn deterministic(fab in fabrication()) {
        let cfg = RootFindConfig::default();
        let a = forward_geometry(&fab, &cfg).unwrap();
        let b = forward_geometry(&fab, &cfg).unwrap();
        prop_assert_eq!(a.spec.h_c.to_bits(), b.spec.h_c.to_bits());
        prop_assert_eq!(a.spec.w.to_bits(), b.spec.w.to_bits());
        prop_assert_eq!(a, b);
    }
}

#[test]
fn side_arc_length_is_continuous_across_branches() {
    // Find a spec with the side arc exactly a half circle (θ_s = π): the
    // branch condition w − w_c ≤ H_s holds with equality there.
    let (h_c, l) = (120.0_f64, 40.0_f64);
    // L = H_c cos(S_c / H_c)
    let s_c = h_c * (l / h_c).acos();
    let w_c = h_c * (s_c / h_c).sin();
    // semicircular side: H_s = L, w_s = r_s
    let h_s = l;
    let w_boundary = w_c + h_s;
    let spec = DesignSpec::new(h_c, h_s, w_boundary);
    let at = inverse_design(&spec).unwrap();
    assert!(rel(at.s_s, 0.5 * PI * h_s) < 1e-9, "{at:?}");

    for eps in [1e-3, 1e-5, 1e-7] {
        let below = inverse_design(&DesignSpec::new(h_c, h_s, w_boundary - eps)).unwrap();
        let above = inverse_design(&DesignSpec::new(h_c, h_s, w_boundary + eps)).unwrap();
        assert!((below.s_s - above.s_s).abs() < 1e3 * eps, "{eps}: {} vs {}", below.s_s, above.s_s);
        assert!((below.s_s - at.s_s).abs() < 1e3 * eps);
    }
}

#[test]
fn narrow_tall_shapes_fall_outside_the_inverse_domain() {
    let cs = forward_geometry(&FabricationParams::new(20.0, 280.0, 260.0), &RootFindConfig::default()).unwrap();
    assert!(cs.spec.w < cs.spec.h_s, "{:?}", cs.spec);
    assert!(!validate_spec(&cs.spec).feasible);
}

#[test]
fn theta_root_is_bit_reproducible() {
    let cfg = RootFindConfig::default();
    let a = solve_theta_c(152.0, 76.2, &cfg).unwrap();
    let b = solve_theta_c(152.0, 76.2, &cfg).unwrap();
    assert_eq!(a.to_bits(), b.to_bits());
}
