//! Extremal hexagons of centrally symmetric convex polygons.
//!
//! For a centrally symmetric convex disk `K` the lattice packing density is
//! `|K| / |H(K)|` and the lattice covering density is `|K| / |h(K)|`, where
//! `h(K)` is the largest hexagon inside `K` and `H(K)` the smallest hexagon
//! around it. Both extremal hexagons can be taken centrally symmetric.
//!
//! * `h(K)`: for fixed neighbours the area of a symmetric hexagon is linear
//!   in each vertex, so an optimum sits on vertices of `K`. We enumerate all
//!   vertex triples within a half-turn.
//! * `H(K)`: a symmetric circumscribed hexagon is fixed by three support
//!   directions. The area is piecewise smooth in those angles, with kinks at
//!   the edge normals of `K`. We seed from flush edge-normal triples plus a
//!   uniform grid, then polish the best seeds by cyclic coordinate descent
//!   with golden-section line searches.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{signed_area, CsPolygon, Hexagon, Point};
use crate::leaf::DensityPoint;

/// Largest centrally symmetric hexagon with vertices among those of `k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InscribedHexagon {
    pub hexagon: Hexagon,
    pub area: f64,
    /// Indices into the full vertex cycle of `p1, p2, p3`.
    pub indices: [usize; 3],
}

/// Maximum-area inscribed hexagon `(p1, p2, p3, -p1, -p2, -p3)`, `p_i`
/// vertices of `k` in angular order. Repeated vertices are allowed, which
/// covers quadrilaterals. Ties go to the lexicographically smallest index
/// triple.
pub fn inscribed_max_cs_hexagon(k: &CsPolygon) -> Result<InscribedHexagon> {
    let m = k.m();
    if m < 2 {
        return Err(Error::InvalidInput(format!("need m >= 2, got {m}")));
    }
    let v = k.vertices();
    let tie = 1e-14 * k.area();
    let mut best: Option<InscribedHexagon> = None;
    for i in 0..m {
        for j in i..=i + m {
            for l in j..=i + m {
                let (p1, p2, p3) = (v[i], v[j % (2 * m)], v[l % (2 * m)]);
                let area = p1.cross(p2) + p2.cross(p3) + p1.cross(p3);
                if best.is_none_or(|b| area > b.area + tie) {
                    best = Some(InscribedHexagon {
                        hexagon: Hexagon::symmetric([p1, p2, p3]),
                        area,
                        indices: [i, j % (2 * m), l % (2 * m)],
                    });
                }
            }
        }
    }
    Ok(best.expect("m >= 2 gives at least one triple"))
}

/// Largest polygon on `min(6, 2m)` vertices of `k`, with no symmetry
/// restriction. Exhaustive; only for polygons with at most 16 vertices.
pub fn inscribed_bruteforce_oracle(k: &CsPolygon) -> Result<f64> {
    let v = k.vertices();
    let n = v.len();
    if n > 16 {
        return Err(Error::Size(format!(
            "exhaustive hexagon search is limited to 16 vertices, got {n}"
        )));
    }
    let pick = n.min(6) as u32;
    let mut best = f64::NEG_INFINITY;
    let mut chosen = Vec::with_capacity(6);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != pick {
            continue;
        }
        chosen.clear();
        chosen.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| v[i]));
        best = best.max(signed_area(&chosen));
    }
    Ok(best)
}

/// Tuning for [`circumscribed_min_cs_hexagon`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircumscribedOptions {
    /// Grid points per angle over `[0, pi)`; the simplex `t1 < t2 < t3` of
    /// that grid seeds the search.
    pub grid: usize,
    /// Full coordinate-descent passes applied to each polished seed.
    pub refinements: usize,
}

impl Default for CircumscribedOptions {
    fn default() -> Self {
        CircumscribedOptions {
            grid: 48,
            refinements: 3,
        }
    }
}

/// Number of seeds polished by coordinate descent.
const POLISHED_SEEDS: usize = 10;
/// Coordinate descent stops once no angle moves by more than this.
const ANGLE_TOL: f64 = 1e-10;
const MAX_SWEEPS: usize = 500;
/// Keeps adjacent support lines from becoming parallel during line searches.
const EDGE_MARGIN: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircumscribedHexagon {
    pub hexagon: Hexagon,
    pub area: f64,
    /// Support directions in `[0, pi)`, increasing.
    pub angles: [f64; 3],
}

/// Minimum-area centrally symmetric hexagon containing `k`.
pub fn circumscribed_min_cs_hexagon(
    k: &CsPolygon,
    opts: CircumscribedOptions,
) -> Result<CircumscribedHexagon> {
    if opts.grid < 24 {
        return Err(Error::InvalidInput(format!(
            "grid must be at least 24, got {}",
            opts.grid
        )));
    }
    if opts.refinements < 1 {
        return Err(Error::InvalidInput("refinements must be at least 1".into()));
    }
    let objective = Objective { half: k.half() };

    let mut seeds = flush_seeds(k);
    seeds.extend(grid_seeds(opts.grid));
    let mut scored: Vec<(f64, usize)> = seeds
        .iter()
        .enumerate()
        .map(|(i, &t)| (objective.area(t), i))
        .collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut best: Option<([f64; 3], f64)> = None;
    for &(area, i) in scored.iter().take(POLISHED_SEEDS) {
        let mut angles = seeds[i];
        let mut value = area;
        for _ in 0..opts.refinements {
            (angles, value) = objective.coordinate_descent(angles, value);
        }
        if best.is_none_or(|(_, b)| value < b) {
            best = Some((angles, value));
        }
    }
    let (angles, _) = best.expect("seed set is never empty");
    let angles = canonical_angles(angles);
    let hexagon = crate::geom::support_hexagon(k.half(), angles);
    Ok(CircumscribedHexagon {
        area: hexagon.area(),
        hexagon,
        angles,
    })
}

// Triples drawn from the edge-normal directions and the bisectors between
// consecutive normals; the bisectors cover polygons with fewer than three
// edge directions.
fn flush_seeds(k: &CsPolygon) -> Vec<[f64; 3]> {
    let normals = k.edge_normal_angles();
    let mut dirs = normals.clone();
    for (i, &a) in normals.iter().enumerate() {
        let b = normals.get(i + 1).copied().unwrap_or(normals[0] + PI);
        dirs.push(((a + b) / 2.0).rem_euclid(PI));
    }
    dirs.sort_by(f64::total_cmp);
    dirs.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    let n = dirs.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let t = [dirs[i], dirs[j], dirs[l]];
                if PI - (t[2] - t[0]) >= 1e-9 {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn grid_seeds(grid: usize) -> Vec<[f64; 3]> {
    let step = PI / grid as f64;
    let mut out = Vec::with_capacity(grid * grid * grid / 6);
    for i in 0..grid {
        for j in i + 1..grid {
            for l in j + 1..grid {
                out.push([i as f64 * step, j as f64 * step, l as f64 * step]);
            }
        }
    }
    out
}

/// Reduces each angle mod pi and sorts.
fn canonical_angles(t: [f64; 3]) -> [f64; 3] {
    let mut c = t.map(|a| {
        let r = a.rem_euclid(PI);
        if r >= PI {
            0.0
        } else {
            r
        }
    });
    c.sort_by(f64::total_cmp);
    c
}

struct Objective<'a> {
    half: &'a [Point],
}

impl Objective<'_> {
    fn area(&self, t: [f64; 3]) -> f64 {
        let a = crate::geom::support_hexagon(self.half, t).area();
        if a.is_finite() {
            a
        } else {
            f64::INFINITY
        }
    }

    // admissible open interval for coordinate c given the other two
    fn bracket(t: [f64; 3], c: usize) -> (f64, f64) {
        let (lo, hi) = match c {
            0 => (t[2] - PI, t[1]),
            1 => (t[0], t[2]),
            _ => (t[1], t[0] + PI),
        };
        (lo + EDGE_MARGIN, hi - EDGE_MARGIN)
    }

    fn coordinate_descent(&self, mut t: [f64; 3], mut value: f64) -> ([f64; 3], f64) {
        for _ in 0..MAX_SWEEPS {
            let mut moved = 0.0_f64;
            for c in 0..3 {
                let (lo, hi) = Self::bracket(t, c);
                if lo >= hi {
                    continue;
                }
                let line = |x: f64| {
                    let mut s = t;
                    s[c] = x;
                    self.area(s)
                };
                let (x, fx) = golden_section(line, lo, hi, ANGLE_TOL / 10.0);
                if fx < value {
                    moved = moved.max((x - t[c]).abs());
                    t[c] = x;
                    value = fx;
                }
            }
            // keep t1 in [0, pi) so the brackets stay well scaled
            if t[0] < 0.0 || t[0] >= PI {
                let shift = -t[0].div_euclid(PI) * PI;
                t = t.map(|a| a + shift);
            }
            if moved < ANGLE_TOL {
                break;
            }
        }
        (t, value)
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a minimum of `f` on `[lo, hi]`. Returns the
/// best point evaluated, endpoints included.
pub(crate) fn golden_section(
    f: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> (f64, f64) {
    let mut best = (lo, f(lo));
    let f_hi = f(hi);
    if f_hi < best.1 {
        best = (hi, f_hi);
    }
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
        for (x, fx) in [(x1, f1), (x2, f2)] {
            if fx < best.1 {
                best = (x, fx);
            }
        }
    }
    best
}

/// Extremal hexagons of `k` and its lattice density pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DowkerResult {
    pub area: f64,
    pub inscribed: Hexagon,
    pub circumscribed: Hexagon,
    pub inscribed_area: f64,
    pub circumscribed_area: f64,
    /// `(|K| / |H(K)|, |K| / |h(K)|)`.
    pub densities: DensityPoint,
}

pub fn lattice_densities(k: &CsPolygon) -> Result<DowkerResult> {
    lattice_densities_with(k, CircumscribedOptions::default())
}

pub fn lattice_densities_with(k: &CsPolygon, opts: CircumscribedOptions) -> Result<DowkerResult> {
    let area = k.area();
    let inscribed = inscribed_max_cs_hexagon(k)?;
    let circumscribed = circumscribed_min_cs_hexagon(k, opts)?;
    // for tiles both extremal areas equal |K|; clamp away rounding noise
    let inscribed_area = inscribed.area.min(area);
    let circumscribed_area = circumscribed.area.max(area);
    Ok(DowkerResult {
        area,
        inscribed: inscribed.hexagon,
        circumscribed: circumscribed.hexagon,
        inscribed_area,
        circumscribed_area,
        densities: DensityPoint::new(area / circumscribed_area, area / inscribed_area),
    })
}

#[derive(Serialize)]
struct HexagonReport {
    vertices: Vec<[f64; 2]>,
    area: f64,
}

#[derive(Serialize)]
struct DowkerReport {
    area: f64,
    inscribed: HexagonReport,
    circumscribed: HexagonReport,
    #[serde(rename = "delta_L")]
    delta_l: f64,
    #[serde(rename = "theta_L")]
    theta_l: f64,
}

impl DowkerResult {
    /// `{"area", "inscribed": {"vertices", "area"}, "circumscribed": {...},
    /// "delta_L", "theta_L"}`.
    fn report(&self) -> DowkerReport {
        let hex = |h: &Hexagon, area: f64| HexagonReport {
            vertices: h.vertices.iter().map(|&p| p.into()).collect(),
            area,
        };
        DowkerReport {
            area: self.area,
            inscribed: hex(&self.inscribed, self.inscribed_area),
            circumscribed: hex(&self.circumscribed, self.circumscribed_area),
            delta_l: self.densities.delta,
            theta_l: self.densities.theta,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.report()).expect("report is always serializable")
    }

    /// JSON text with keys in the order `area, inscribed, circumscribed,
    /// delta_L, theta_L`.
    pub fn to_json_string(&self, pretty: bool) -> String {
        let report = self.report();
        if pretty {
            serde_json::to_string_pretty(&report)
        } else {
            serde_json::to_string(&report)
        }
        .expect("report is always serializable")
    }
}
