//! Invariant suite run by `omega validate`.
//!
//! Each check is named `<group>.<property>` and returns a one-line detail
//! on success or a description of the first failure.

use std::f64::consts::PI;

use crate::dowker::{
    inscribed_bruteforce_oracle, inscribed_max_cs_hexagon, lattice_densities,
    lattice_densities_with, CircumscribedOptions,
};
use crate::geom::{hexagon_from_support_angles, shoelace_area, CsPolygon, Point};
use crate::leaf::{
    alpha_point_with, beta_point, circle_point, kt_disk, leaf_boundary, lt_disk, unit_grid,
    AlphaForm, DensityPoint, HybridDisk,
};
use crate::regions::{
    octagon_apex_theta, packing_floor, u_bounds, IsmailescuRegion, OctagonRange, Pentagon, Region,
    COVERING_CEILING,
};
use crate::sampler::{random_cs_polygon, scatter, scatter_csv, scatter_with_threads, SplitMix64};

pub const GROUPS: [&str; 5] = ["geom", "leaf", "dowker", "regions", "sampler"];

/// Resolution used by the oracle agreement check.
pub const ORACLE_N: usize = 6 << 12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Settings {
    pub alpha_form: AlphaForm,
    pub seed: u64,
    pub scatter_count: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            alpha_form: AlphaForm::Corrected,
            seed: 42,
            scatter_count: 1000,
        }
    }
}

type CheckResult = std::result::Result<String, String>;

pub struct Check {
    pub name: &'static str,
    run: fn(&Settings) -> CheckResult,
}

impl Check {
    pub fn group(&self) -> &'static str {
        self.name.split('.').next().unwrap_or(self.name)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub fn checks() -> Vec<Check> {
    macro_rules! check {
        ($name:literal, $f:path) => {
            Check {
                name: $name,
                run: $f,
            }
        };
    }
    vec![
        check!("geom.area_scaling", geom_area_scaling),
        check!("geom.support_symmetry", geom_support_symmetry),
        check!("geom.support_hexagon_circumscribes", geom_support_hexagon),
        check!("leaf.endpoints", leaf_endpoints),
        check!("leaf.oracle_agreement", leaf_oracle_agreement),
        check!("leaf.ratio_identity", leaf_ratio_identity),
        check!("leaf.monotonicity", leaf_monotonicity),
        check!("leaf.shape", leaf_shape),
        check!("leaf.sandwich_containment", leaf_sandwich),
        check!("leaf.packing_covering_inequality", leaf_packing_covering),
        check!("dowker.exact_values", dowker_exact_values),
        check!("dowker.symmetrization_oracle", dowker_symmetrization),
        check!("dowker.sandwich_and_inequalities", dowker_inequalities),
        check!("dowker.affine_invariance", dowker_affine_invariance),
        check!("dowker.grid_stability", dowker_grid_stability),
        check!("regions.leaf_inside_p_and_p0", regions_leaf_inside),
        check!("regions.u_inside_p_and_p0", regions_u_inside),
        check!("regions.u_bounds_continuity", regions_u_continuity),
        check!("regions.pentagon_vertices", regions_pentagon_vertices),
        check!("sampler.octagons_in_u", sampler_octagons_in_u),
        check!("sampler.thread_determinism", sampler_determinism),
    ]
}

/// Runs every check, or only those of `group`.
pub fn run(settings: &Settings, group: Option<&str>) -> Vec<Outcome> {
    checks()
        .into_iter()
        .filter(|c| group.is_none_or(|g| c.group() == g))
        .map(|c| {
            let (passed, detail) = match (c.run)(settings) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Outcome {
                name: c.name,
                passed,
                detail,
            }
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn random_polygons(seed: u64, count: u64) -> std::result::Result<Vec<CsPolygon>, String> {
    (0..count)
        .map(|i| random_cs_polygon(seed, i, 2 + (i % 3) as usize).map_err(err))
        .collect()
}

fn geom_area_scaling(s: &Settings) -> CheckResult {
    for k in random_polygons(s.seed, 20)? {
        let a = k.area();
        for c in [0.5, 2.0, 7.0] {
            let scaled = k.scaled(c).map_err(err)?.area();
            ensure((scaled - c * c * a).abs() <= 1e-12 * c * c * a, || {
                format!("area({c} K) = {scaled}, expected {}", c * c * a)
            })?;
        }
        let shifted: Vec<Point> = k
            .vertices()
            .iter()
            .map(|&p| p + Point::new(3.0, -2.0))
            .collect();
        let t = shoelace_area(&shifted).map_err(err)?;
        ensure((t - a).abs() <= 1e-12 * a, || {
            format!("translated area {t} vs {a}")
        })?;
    }
    Ok("20 polygons, scalings 0.5, 2, 7 and one translation".into())
}

fn geom_support_symmetry(s: &Settings) -> CheckResult {
    let mut worst = 0.0_f64;
    for k in random_polygons(s.seed, 20)? {
        for i in 0..64 {
            let t = 2.0 * PI * i as f64 / 64.0;
            let d = (k.support_value(t) - k.support_value(t + PI)).abs() / k.scale();
            worst = worst.max(d);
        }
    }
    ensure(worst <= 1e-14, || format!("relative asymmetry {worst:e}"))?;
    Ok(format!("max relative asymmetry {worst:e}"))
}

fn geom_support_hexagon(s: &Settings) -> CheckResult {
    let mut rng = SplitMix64::new(s.seed ^ 0x5eed);
    for k in random_polygons(s.seed, 20)? {
        for _ in 0..50 {
            let mut t = [
                rng.next_f64() * PI,
                rng.next_f64() * PI,
                rng.next_f64() * PI,
            ];
            t.sort_by(f64::total_cmp);
            let Ok(hex) = hexagon_from_support_angles(&k, t) else {
                continue;
            };
            let tol = 1e-9 * k.scale();
            for &v in k.vertices() {
                ensure(hex.contains_point(v, tol), || {
                    format!("vertex {v:?} escapes hexagon at {t:?}")
                })?;
            }
            ensure(hex.area() >= k.area() * (1.0 - 1e-12), || {
                format!(
                    "hexagon area {} below polygon area {}",
                    hex.area(),
                    k.area()
                )
            })?;
        }
    }
    Ok("1000 random support triples".into())
}

fn close_point(p: DensityPoint, q: DensityPoint, tol: f64) -> bool {
    (p.delta - q.delta).abs() <= tol && (p.theta - q.theta).abs() <= tol
}

fn leaf_endpoints(s: &Settings) -> CheckResult {
    let c = circle_point();
    let one = DensityPoint::new(1.0, 1.0);
    let a0 = alpha_point_with(0.0, s.alpha_form).map_err(err)?;
    let a1 = alpha_point_with(1.0, s.alpha_form).map_err(err)?;
    let b0 = beta_point(0.0).map_err(err)?;
    let b1 = beta_point(1.0).map_err(err)?;
    ensure(close_point(a0, c, 1e-12), || {
        format!("alpha(0) = {a0:?}, expected {c:?}")
    })?;
    ensure(close_point(a1, one, 1e-12), || {
        format!("alpha(1) = {a1:?}, expected (1, 1)")
    })?;
    ensure(close_point(b0, c, 1e-12), || {
        format!("beta(0) = {b0:?}, expected {c:?}")
    })?;
    ensure(close_point(b1, one, 1e-12), || {
        format!("beta(1) = {b1:?}, expected (1, 1)")
    })?;
    Ok("both arcs join (1, 1) and the circle point".into())
}

/// Largest gap between closed-form and oracle-derived density pairs over a
/// 33-point grid on both arcs.
pub fn oracle_gap(form: AlphaForm, n: usize) -> crate::Result<f64> {
    let mut worst = 0.0_f64;
    for t in unit_grid(33) {
        let k = kt_disk(t)?;
        let oracle = k.densities_for_area(k.area_oracle(n)?);
        let closed = alpha_point_with(t, form)?;
        worst = worst.max(
            (oracle.delta - closed.delta)
                .abs()
                .max((oracle.theta - closed.theta).abs()),
        );
        let l = lt_disk(t)?;
        let oracle = l.densities_for_area(l.area_oracle(n)?);
        let closed = beta_point(t)?;
        worst = worst.max(
            (oracle.delta - closed.delta)
                .abs()
                .max((oracle.theta - closed.theta).abs()),
        );
    }
    Ok(worst)
}

fn leaf_oracle_agreement(s: &Settings) -> CheckResult {
    let gap = oracle_gap(s.alpha_form, ORACLE_N).map_err(err)?;
    ensure(gap <= 1e-6, || {
        format!("closed form and area oracle differ by {gap:e}")
    })?;
    Ok(format!("max gap {gap:e} at n = {ORACLE_N}"))
}

fn arc_points(form: AlphaForm, n: usize) -> crate::Result<(Vec<DensityPoint>, Vec<DensityPoint>)> {
    let alpha = unit_grid(n)
        .map(|u| alpha_point_with(u, form))
        .collect::<crate::Result<_>>()?;
    let beta = unit_grid(n).map(beta_point).collect::<crate::Result<_>>()?;
    Ok((alpha, beta))
}

fn leaf_ratio_identity(s: &Settings) -> CheckResult {
    let (alpha, beta) = arc_points(s.alpha_form, 1000).map_err(err)?;
    for (t, (a, b)) in unit_grid(1000).zip(alpha.iter().zip(&beta)) {
        let want = 3.0 / (4.0 - t * t);
        for (arc, p) in [("alpha", a), ("beta", b)] {
            let got = p.delta / p.theta;
            ensure((got - want).abs() <= 1e-12, || {
                format!("{arc}({t}): delta/theta = {got}, expected {want}")
            })?;
        }
    }
    Ok("1000 points per arc".into())
}

fn leaf_monotonicity(s: &Settings) -> CheckResult {
    let (alpha, beta) = arc_points(s.alpha_form, 1000).map_err(err)?;
    for (arc, pts) in [("alpha", &alpha), ("beta", &beta)] {
        for (i, w) in pts.windows(2).enumerate() {
            ensure(w[1].delta > w[0].delta, || {
                format!("{arc}: delta not increasing at step {i}")
            })?;
            ensure(w[1].theta < w[0].theta, || {
                format!("{arc}: theta not decreasing at step {i}")
            })?;
        }
    }
    Ok("delta strictly increasing, theta strictly decreasing on both arcs".into())
}

/// Differences of consecutive chord slopes of `y(x)` along a polyline with
/// increasing `x`.
fn slope_changes(pts: &[DensityPoint]) -> Vec<f64> {
    let slopes: Vec<f64> = pts
        .windows(2)
        .map(|w| (w[1].theta - w[0].theta) / (w[1].delta - w[0].delta))
        .collect();
    slopes.windows(2).map(|w| w[1] - w[0]).collect()
}

fn leaf_shape(s: &Settings) -> CheckResult {
    let (alpha, beta) = arc_points(s.alpha_form, 1000).map_err(err)?;
    let worst_alpha = slope_changes(&alpha)
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    let worst_beta = slope_changes(&beta)
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    ensure(worst_alpha <= 1e-9, || {
        format!("alpha not concave: slope increase {worst_alpha:e}")
    })?;
    ensure(worst_beta >= -1e-9, || {
        format!("beta not convex: slope decrease {worst_beta:e}")
    })?;
    Ok("alpha concave, beta convex".into())
}

fn check_sandwich(disk: &HybridDisk) -> std::result::Result<(), String> {
    for &v in &disk.inner_tile().vertices {
        ensure(disk.contains(v, 1e-9), || {
            format!("{disk:?}: inner tile vertex {v:?} outside")
        })?;
    }
    let outer = disk.outer_tile();
    for p in disk.boundary_samples(96).map_err(err)? {
        ensure(outer.contains_point(p, 1e-9), || {
            format!("{disk:?}: boundary point {p:?} outside outer tile")
        })?;
    }
    Ok(())
}

fn leaf_sandwich(_: &Settings) -> CheckResult {
    for t in unit_grid(33) {
        check_sandwich(&kt_disk(t).map_err(err)?)?;
        check_sandwich(&lt_disk(t).map_err(err)?)?;
    }
    Ok("33 parameters per kind".into())
}

fn leaf_packing_covering(_: &Settings) -> CheckResult {
    let c = circle_point();
    for p in leaf_boundary(1000).map_err(err)? {
        let slack = 4.0 * p.delta - 3.0 * p.theta;
        ensure(slack >= -1e-9, || format!("3 theta > 4 delta at {p:?}"))?;
        if !close_point(p, c, 1e-12) {
            ensure(slack > 1e-9, || {
                format!("unexpected equality 3 theta = 4 delta at {p:?}")
            })?;
        }
    }
    Ok("equality only at the circle point".into())
}

fn dowker_exact_values(_: &Settings) -> CheckResult {
    let hex = CsPolygon::regular(3, 1.0, 0.0).map_err(err)?;
    let d = lattice_densities(&hex).map_err(err)?.densities;
    ensure(close_point(d, DensityPoint::new(1.0, 1.0), 1e-9), || {
        format!("hexagon -> {d:?}")
    })?;

    let sq = CsPolygon::new(vec![Point::new(0.5, -0.5), Point::new(0.5, 0.5)]).map_err(err)?;
    let d = lattice_densities(&sq).map_err(err)?.densities;
    ensure(close_point(d, DensityPoint::new(1.0, 1.0), 1e-6), || {
        format!("square -> {d:?}")
    })?;

    let oct = CsPolygon::regular(4, 1.0, 0.0).map_err(err)?;
    let d = lattice_densities(&oct).map_err(err)?.densities;
    let apex = octagon_apex_theta();
    let apex_x = u_bounds(apex).map_err(err)?.0;
    ensure((d.theta - apex).abs() <= 1e-6, || {
        format!("octagon theta_L = {}", d.theta)
    })?;
    ensure((d.delta - apex_x).abs() <= 1e-6, || {
        format!("octagon delta_L = {}, apex {apex_x}", d.delta)
    })?;
    Ok(format!("octagon -> ({:.10}, {:.10})", d.delta, d.theta))
}

fn dowker_symmetrization(s: &Settings) -> CheckResult {
    let mut worst = 0.0_f64;
    for i in 0..25 {
        let k = random_cs_polygon(s.seed, i, 4).map_err(err)?;
        let sym = inscribed_max_cs_hexagon(&k).map_err(err)?.area;
        let brute = inscribed_bruteforce_oracle(&k).map_err(err)?;
        worst = worst.max((sym - brute).abs());
    }
    ensure(worst <= 1e-12, || {
        format!("symmetric and unrestricted optima differ by {worst:e}")
    })?;
    Ok(format!("25 octagons, max gap {worst:e}"))
}

fn dowker_inequalities(s: &Settings) -> CheckResult {
    for (i, k) in random_polygons(s.seed, 50)?.iter().enumerate() {
        let r = lattice_densities(k).map_err(err)?;
        ensure(
            r.inscribed_area <= r.area && r.area <= r.circumscribed_area,
            || format!("polygon {i}: sandwich violated"),
        )?;
        let v = IsmailescuRegion.violations(r.densities, 1e-9);
        ensure(v.is_empty(), || {
            format!("polygon {i}: {:?} violates {v:?}", r.densities)
        })?;
    }
    Ok("50 polygons with 4 to 8 vertices".into())
}

fn dowker_affine_invariance(s: &Settings) -> CheckResult {
    for k in random_polygons(s.seed, 5)? {
        let base = lattice_densities(&k).map_err(err)?.densities;
        for c in [0.5, 2.0, 7.0] {
            let d = lattice_densities(&k.scaled(c).map_err(err)?)
                .map_err(err)?
                .densities;
            ensure(close_point(d, base, 1e-9), || {
                format!("scale {c}: {d:?} vs {base:?}")
            })?;
        }
        let sheared = k
            .map_linear(|p| Point::new(p.x + p.y / 3.0, p.y))
            .map_err(err)?;
        let d = lattice_densities(&sheared).map_err(err)?.densities;
        ensure(close_point(d, base, 1e-6), || {
            format!("shear: {d:?} vs {base:?}")
        })?;
    }
    Ok("5 polygons, 3 scalings and a shear".into())
}

fn dowker_grid_stability(s: &Settings) -> CheckResult {
    let mut worst = 0.0_f64;
    for k in random_polygons(s.seed, 20)? {
        let a = lattice_densities_with(
            &k,
            CircumscribedOptions {
                grid: 48,
                refinements: 3,
            },
        )
        .map_err(err)?
        .circumscribed_area;
        let b = lattice_densities_with(
            &k,
            CircumscribedOptions {
                grid: 96,
                refinements: 3,
            },
        )
        .map_err(err)?
        .circumscribed_area;
        worst = worst.max((a - b).abs() / b);
    }
    ensure(worst < 1e-7, || {
        format!("doubling the grid moved the area by {worst:e}")
    })?;
    Ok(format!("max relative change {worst:e}"))
}

fn regions_leaf_inside(_: &Settings) -> CheckResult {
    for p in leaf_boundary(4096).map_err(err)? {
        let v = [
            Pentagon::default().violations(p, 1e-9),
            IsmailescuRegion.violations(p, 1e-9),
        ]
        .concat();
        ensure(v.is_empty(), || format!("leaf vertex {p:?} violates {v:?}"))?;
    }
    Ok("8191 leaf vertices".into())
}

/// `count` points drawn uniformly in height, then uniformly across `U`.
pub fn sample_u(seed: u64, count: usize) -> Vec<DensityPoint> {
    let mut rng = SplitMix64::new(seed);
    let apex = octagon_apex_theta();
    (0..count)
        .map(|_| {
            let y = 1.0 + (apex - 1.0) * rng.next_f64();
            let (lo, hi) = u_bounds(y).expect("y is inside the domain");
            DensityPoint::new(lo + (hi - lo) * rng.next_f64(), y)
        })
        .collect()
}

fn regions_u_inside(s: &Settings) -> CheckResult {
    for p in sample_u(s.seed, 10_000) {
        let v = [
            Pentagon::default().violations(p, 1e-9),
            IsmailescuRegion.violations(p, 1e-9),
        ]
        .concat();
        ensure(v.is_empty(), || format!("U point {p:?} violates {v:?}"))?;
    }
    Ok("10000 points".into())
}

fn regions_u_continuity(_: &Settings) -> CheckResult {
    let apex = octagon_apex_theta();
    let (lo, hi) = u_bounds(1.0).map_err(err)?;
    ensure((lo - 1.0).abs() <= 1e-9 && (hi - 1.0).abs() <= 1e-9, || {
        format!("U at y = 1: ({lo}, {hi})")
    })?;
    let (lo, hi) = u_bounds(apex).map_err(err)?;
    ensure((lo - hi).abs() <= 1e-9, || {
        format!("U does not pinch at the apex: ({lo}, {hi})")
    })?;
    let n = 10_000;
    let mut prev: Option<(f64, f64)> = None;
    for k in 0..n {
        let y = 1.0 + (apex - 1.0) * k as f64 / (n - 1) as f64;
        let (lo, hi) = u_bounds(y).map_err(err)?;
        ensure(lo <= hi + 1e-12, || format!("x_min > x_max at y = {y}"))?;
        if let Some((plo, phi)) = prev {
            ensure((lo - plo).abs() < 1e-2 && (hi - phi).abs() < 1e-2, || {
                format!("jump at y = {y}")
            })?;
        }
        prev = Some((lo, hi));
    }
    Ok("pinches at both ends, no jumps on a 10000-point grid".into())
}

fn regions_pentagon_vertices(_: &Settings) -> CheckResult {
    let v = Pentagon::default().vertices();
    let expected = [
        (packing_floor(), 1.0),
        (1.0, 1.0),
        (1.0, COVERING_CEILING),
        (0.75 * COVERING_CEILING, COVERING_CEILING),
        (packing_floor(), 4.0 / 3.0 * packing_floor()),
    ];
    for (p, (x, y)) in v.iter().zip(expected) {
        ensure(close_point(*p, DensityPoint::new(x, y), 1e-9), || {
            format!("vertex {p:?}")
        })?;
        let slack = [
            p.delta - packing_floor(),
            1.0 - p.delta,
            p.theta - 1.0,
            COVERING_CEILING - p.theta,
            4.0 / 3.0 * p.delta - p.theta,
        ];
        let tight = slack.iter().filter(|s| s.abs() <= 1e-12).count();
        ensure(slack.iter().all(|&s| s >= -1e-12), || {
            format!("vertex {p:?} outside")
        })?;
        ensure(tight == 2, || {
            format!("vertex {p:?} is tight on {tight} constraints")
        })?;
    }
    Ok("five vertices, two tight constraints each".into())
}

fn sampler_octagons_in_u(s: &Settings) -> CheckResult {
    let rows = scatter(s.scatter_count, s.seed, 4).map_err(err)?;
    for r in &rows {
        let p = DensityPoint::new(r.delta_l, r.theta_l);
        ensure(r.in_u, || format!("row {}: {p:?} outside U", r.index))?;
        let v = [
            OctagonRange.violations(p, 1e-7),
            IsmailescuRegion.violations(p, 1e-7),
        ]
        .concat();
        ensure(v.is_empty(), || {
            format!("row {}: {p:?} violates {v:?}", r.index)
        })?;
    }
    Ok(format!("{} octagons", rows.len()))
}

fn sampler_determinism(s: &Settings) -> CheckResult {
    let one = scatter_csv(&scatter_with_threads(200, s.seed, 4, 1).map_err(err)?);
    let four = scatter_csv(&scatter_with_threads(200, s.seed, 4, 4).map_err(err)?);
    ensure(one == four, || {
        "1-thread and 4-thread scatters differ".into()
    })?;
    Ok("200 rows, 1 vs 4 workers".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_grouped() {
        for c in checks() {
            assert!(GROUPS.contains(&c.group()), "{}", c.name);
        }
    }

    #[test]
    fn printed_alpha_fails_the_endpoint_check() {
        let s = Settings {
            alpha_form: AlphaForm::Printed,
            ..Settings::default()
        };
        let out = leaf_endpoints(&s);
        assert!(out.is_err());
        assert!(oracle_gap(AlphaForm::Printed, 96).unwrap() > 0.1);
    }
}
