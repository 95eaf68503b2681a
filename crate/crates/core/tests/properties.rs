use std::f64::consts::PI;

use proptest::prelude::*;

use omega_core::dowker::{
    inscribed_bruteforce_oracle, inscribed_max_cs_hexagon, lattice_densities,
};
use omega_core::geom::hexagon_from_support_angles;
use omega_core::leaf::{alpha_point, beta_point, kt_disk, lt_disk, Leaf};
use omega_core::regions::{octagon_apex_theta, u_bounds, IsmailescuRegion, Pentagon, Region};
use omega_core::sampler::random_cs_polygon;
use omega_core::{CsPolygon, DensityPoint, Point};

fn cs_polygon(max_m: usize) -> impl Strategy<Value = CsPolygon> {
    (any::<u64>(), 0u64..1000, 2..=max_m)
        .prop_filter_map("generation failed", |(seed, index, m)| {
            random_cs_polygon(seed, index, m).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn area_scales_quadratically(k in cs_polygon(4), c in 0.1f64..10.0) {
        let scaled = k.scaled(c).unwrap().area();
        prop_assert!((scaled - c * c * k.area()).abs() <= 1e-12 * c * c * k.area());
    }

    #[test]
    fn support_function_is_even(k in cs_polygon(4), t in 0.0f64..(2.0 * PI)) {
        let d = (k.support_value(t) - k.support_value(t + PI)).abs();
        prop_assert!(d <= 1e-14 * k.scale(), "asymmetry {d:e}");
    }

    #[test]
    fn support_hexagon_contains_the_polygon(
        k in cs_polygon(4),
        a in 0.0f64..PI,
        b in 0.0f64..PI,
        c in 0.0f64..PI,
    ) {
        let mut t = [a, b, c];
        t.sort_by(f64::total_cmp);
        prop_assume!(t[1] - t[0] > 1e-6 && t[2] - t[1] > 1e-6 && PI - (t[2] - t[0]) > 1e-6);
        let hex = hexagon_from_support_angles(&k, t).unwrap();
        for &v in k.vertices() {
            prop_assert!(hex.contains_point(v, 1e-9 * k.scale()), "{v:?} outside {hex:?}");
        }
        prop_assert!(hex.area() >= k.area() * (1.0 - 1e-12));
    }

    #[test]
    fn symmetric_inscribed_hexagon_is_optimal(k in cs_polygon(4)) {
        let sym = inscribed_max_cs_hexagon(&k).unwrap().area;
        let brute = inscribed_bruteforce_oracle(&k).unwrap();
        prop_assert!((sym - brute).abs() <= 1e-12 * k.area().max(1.0), "{sym} vs {brute}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dowker_sandwich_and_density_bounds(k in cs_polygon(4)) {
        let r = lattice_densities(&k).unwrap();
        prop_assert!(r.inscribed_area <= r.area && r.area <= r.circumscribed_area);
        let tol = 1e-9 * r.area;
        for &v in k.vertices() {
            prop_assert!(r.circumscribed.contains_point(v, tol));
        }
        for &v in &r.inscribed.vertices {
            prop_assert!(k.polygon().contains_point(v, tol));
        }
        let v = IsmailescuRegion.violations(r.densities, 1e-9);
        prop_assert!(v.is_empty(), "{:?} violates {v:?}", r.densities);
    }

    #[test]
    fn lattice_densities_are_affine_invariant(
        k in cs_polygon(4),
        c in 0.2f64..5.0,
        shear in -1.0f64..1.0,
        stretch in 0.3f64..3.0,
    ) {
        let base = lattice_densities(&k).unwrap().densities;
        let scaled = lattice_densities(&k.scaled(c).unwrap()).unwrap().densities;
        prop_assert!((scaled.delta - base.delta).abs() <= 1e-9);
        prop_assert!((scaled.theta - base.theta).abs() <= 1e-9);
        let mapped = k.map_linear(|p| Point::new(stretch * p.x + shear * p.y, p.y)).unwrap();
        let d = lattice_densities(&mapped).unwrap().densities;
        prop_assert!((d.delta - base.delta).abs() <= 1e-6, "{d:?} vs {base:?}");
        prop_assert!((d.theta - base.theta).abs() <= 1e-6, "{d:?} vs {base:?}");
    }
}

proptest! {
    #[test]
    fn arcs_satisfy_the_ratio_identity(t in 0.0f64..=1.0) {
        let want = 3.0 / (4.0 - t * t);
        let a = alpha_point(t).unwrap();
        let b = beta_point(t).unwrap();
        prop_assert!((a.delta / a.theta - want).abs() <= 1e-12);
        prop_assert!((b.delta / b.theta - want).abs() <= 1e-12);
        prop_assert!(3.0 * a.theta <= 4.0 * a.delta + 1e-12);
        prop_assert!(3.0 * b.theta <= 4.0 * b.delta + 1e-12);
    }

    #[test]
    fn closed_forms_match_the_area_oracle(t in 0.0f64..=1.0) {
        for disk in [kt_disk(t).unwrap(), lt_disk(t).unwrap()] {
            let oracle = disk.densities_for_area(disk.area_oracle(6 << 10).unwrap());
            let closed = disk.densities_closed();
            prop_assert!((oracle.delta - closed.delta).abs() <= 1e-6, "{disk:?}");
            prop_assert!((oracle.theta - closed.theta).abs() <= 1e-6, "{disk:?}");
        }
        let (k, a) = (kt_disk(t).unwrap().densities_closed(), alpha_point(t).unwrap());
        prop_assert!((k.delta - a.delta).abs() <= 1e-12 && (k.theta - a.theta).abs() <= 1e-12);
        let (l, b) = (lt_disk(t).unwrap().densities_closed(), beta_point(t).unwrap());
        prop_assert!((l.delta - b.delta).abs() <= 1e-12 && (l.theta - b.theta).abs() <= 1e-12);
    }

    #[test]
    fn u_lies_in_p_and_p0(s in 0.0f64..=1.0, w in 0.0f64..=1.0) {
        let y = 1.0 + (octagon_apex_theta() - 1.0) * s;
        let (lo, hi) = u_bounds(y).unwrap();
        let p = DensityPoint::new(lo + (hi - lo) * w, y);
        let v = [Pentagon::default().violations(p, 1e-9), IsmailescuRegion.violations(p, 1e-9)].concat();
        prop_assert!(v.is_empty(), "{p:?} violates {v:?}");
    }
}

#[test]
fn leaf_interior_lies_in_p0() {
    let leaf = Leaf::new(256).unwrap();
    let v = leaf.vertices();
    proptest!(|(i in 0..v.len(), j in 0..v.len(), w in 0.0f64..=1.0)| {
        let p = v[i] * w + v[j] * (1.0 - w);
        let p = DensityPoint::new(p.x, p.y);
        prop_assert!(leaf.contains(p, 1e-9));
        prop_assert!(IsmailescuRegion.contains_tol(p, 1e-9), "{p:?}");
    });
}
