//! Regions of the density plane `(x, y) = (delta, theta)`.
//!
//! * `P`: the pentagon cut out by `x >= sqrt(3)/2`, `x <= 1`, `y >= 1`,
//!   `y <= 1.2281772` and `y <= 4x/3`; it contains every density pair of a
//!   convex disk.
//! * `P0`: the region known to contain the lattice pairs of centrally
//!   symmetric disks: `P` with the ceiling lowered to `2pi/sqrt(27)`, cut by
//!   `x + y >= 2`, `y <= 1 + (5/4) sqrt(1 - x)` and `x y >= 1`.
//! * `U`: the exact set of lattice density pairs of centrally symmetric
//!   octagons.
//! * the leaf, see [`crate::leaf`].

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::leaf::{DensityPoint, Leaf, DEFAULT_LEAF_SAMPLES};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Lower bound on the packing density of any convex disk.
pub fn packing_floor() -> f64 {
    3f64.sqrt() / 2.0
}

/// Best known upper bound on the covering density of any convex disk. No
/// closed form is known; the published decimal is used as is.
pub const COVERING_CEILING: f64 = 1.2281772;

/// Sharp covering ceiling for centrally symmetric disks, `2pi/sqrt(27)`.
pub fn symmetric_covering_ceiling() -> f64 {
    2.0 * PI / 27f64.sqrt()
}

/// Covering density of the regular octagon, `4 - 2 sqrt 2`: the top of `U`.
pub fn octagon_apex_theta() -> f64 {
    4.0 - 2.0 * 2f64.sqrt()
}

/// A density-plane region: named constraints plus a boundary sampler.
pub trait Region {
    fn name(&self) -> &'static str;

    /// Identifiers of the constraints `p` violates by more than `tol`.
    fn violations(&self, p: DensityPoint, tol: f64) -> Vec<&'static str>;

    fn contains_tol(&self, p: DensityPoint, tol: f64) -> bool {
        self.violations(p, tol).is_empty()
    }

    fn contains(&self, p: DensityPoint) -> bool {
        self.contains_tol(p, DEFAULT_TOL)
    }

    /// Counterclockwise boundary vertices, closing point not repeated.
    /// `samples` controls the resolution of curved pieces.
    fn boundary(&self, samples: usize) -> Vec<DensityPoint>;
}

/// Pentagon `P`, optionally with a lowered ceiling (as used inside `P0`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pentagon {
    ceiling: f64,
}

impl Default for Pentagon {
    fn default() -> Self {
        Pentagon {
            ceiling: COVERING_CEILING,
        }
    }
}

impl Pentagon {
    pub fn with_ceiling(ceiling: f64) -> Self {
        Pentagon { ceiling }
    }

    pub fn ceiling(&self) -> f64 {
        self.ceiling
    }

    /// `(sqrt3/2, 1), (1, 1), (1, c), (3c/4, c), (sqrt3/2, 2/sqrt3)`.
    pub fn vertices(&self) -> [DensityPoint; 5] {
        let left = packing_floor();
        let c = self.ceiling;
        [
            DensityPoint::new(left, 1.0),
            DensityPoint::new(1.0, 1.0),
            DensityPoint::new(1.0, c),
            DensityPoint::new(0.75 * c, c),
            DensityPoint::new(left, 4.0 / 3.0 * left),
        ]
    }

    fn push_violations(
        &self,
        p: DensityPoint,
        tol: f64,
        names: [&'static str; 5],
        out: &mut Vec<&'static str>,
    ) {
        let DensityPoint { delta: x, theta: y } = p;
        let checks = [
            x >= packing_floor() - tol,
            x <= 1.0 + tol,
            y >= 1.0 - tol,
            y <= self.ceiling + tol,
            y <= 4.0 / 3.0 * x + tol,
        ];
        out.extend(
            checks
                .iter()
                .zip(names)
                .filter(|(ok, _)| !**ok)
                .map(|(_, n)| n),
        );
    }
}

impl Region for Pentagon {
    fn name(&self) -> &'static str {
        "P"
    }

    fn violations(&self, p: DensityPoint, tol: f64) -> Vec<&'static str> {
        let mut out = Vec::new();
        self.push_violations(
            p,
            tol,
            ["P:left", "P:right", "P:floor", "P:ceiling", "P:slant"],
            &mut out,
        );
        out
    }

    fn boundary(&self, _samples: usize) -> Vec<DensityPoint> {
        self.vertices().to_vec()
    }
}

pub fn pentagon_p_contains(p: DensityPoint) -> bool {
    Pentagon::default().contains(p)
}

pub fn pentagon_p_vertices() -> [DensityPoint; 5] {
    Pentagon::default().vertices()
}

/// Region `P0` for lattice pairs of centrally symmetric disks.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct IsmailescuRegion;

/// An interior point of `P0` from which its boundary is star-shaped (`P0`
/// is convex).
const P0_CENTER: DensityPoint = DensityPoint::new(0.95, 1.1);

impl Region for IsmailescuRegion {
    fn name(&self) -> &'static str {
        "P0"
    }

    fn violations(&self, p: DensityPoint, tol: f64) -> Vec<&'static str> {
        let DensityPoint { delta: x, theta: y } = p;
        let mut out = Vec::new();
        Pentagon::with_ceiling(symmetric_covering_ceiling()).push_violations(
            p,
            tol,
            ["P0:left", "P0:right", "P0:floor", "P0:ceiling", "P0:slant"],
            &mut out,
        );
        if x + y < 2.0 - tol {
            out.push("P0:sum");
        }
        if y > 1.0 + 1.25 * (1.0 - x).max(0.0).sqrt() + tol {
            out.push("P0:sqrt");
        }
        if x * y < 1.0 - tol {
            out.push("P0:product");
        }
        out
    }

    /// Boundary found by bisection along `samples` rays from an interior
    /// point.
    fn boundary(&self, samples: usize) -> Vec<DensityPoint> {
        let n = samples.max(8);
        (0..n)
            .map(|k| {
                let dir = Point::polar(1.0, 2.0 * PI * k as f64 / n as f64);
                let at = |t: f64| {
                    DensityPoint::new(P0_CENTER.delta + t * dir.x, P0_CENTER.theta + t * dir.y)
                };
                let (mut inside, mut outside) = (0.0, 0.5);
                for _ in 0..60 {
                    let mid = 0.5 * (inside + outside);
                    if self.contains_tol(at(mid), 0.0) {
                        inside = mid;
                    } else {
                        outside = mid;
                    }
                }
                at(inside)
            })
            .collect()
    }
}

pub fn region_p0_contains(p: DensityPoint) -> bool {
    IsmailescuRegion.contains(p)
}

/// The tighter curve `y <= 1 + sqrt(1 - x)` that appears in prose alongside
/// the `5/4` bound. Diagnostic only; not part of `P0`.
pub fn prose_sqrt_bound_holds(p: DensityPoint, tol: f64) -> bool {
    p.theta <= 1.0 + (1.0 - p.delta).max(0.0).sqrt() + tol
}

/// Left and right boundary abscissae of `U` at height `y`,
/// `1 <= y <= 4 - 2 sqrt 2`.
pub fn u_bounds(y: f64) -> Result<(f64, f64)> {
    let apex = octagon_apex_theta();
    if !(1.0..=apex).contains(&y) {
        return Err(Error::Domain {
            name: "y",
            value: y,
            domain: "[1, 4 - 2 sqrt 2]",
        });
    }
    Ok(u_bounds_unchecked(y))
}

fn u_bounds_unchecked(y: f64) -> (f64, f64) {
    let x_min = (5.0 * y * y - 12.0 * y + 8.0) / (2.0 * y * y - 5.0 * y + 4.0);
    // y^2 - 8y + 8 in factored form, so the apex root is hit exactly
    let radicand = (octagon_apex_theta() - y) * (4.0 + 2.0 * 2f64.sqrt() - y);
    let x_max = y * (y + 4.0 + radicand.max(0.0).sqrt()) / (4.0 * y + 2.0);
    (x_min, x_max)
}

/// Exact range `U` of lattice pairs of centrally symmetric octagons.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct OctagonRange;

impl Region for OctagonRange {
    fn name(&self) -> &'static str {
        "U"
    }

    fn violations(&self, p: DensityPoint, tol: f64) -> Vec<&'static str> {
        let DensityPoint { delta: x, theta: y } = p;
        let apex = octagon_apex_theta();
        if y < 1.0 - tol || y > apex + tol {
            return vec!["U:range"];
        }
        let (x_min, x_max) = u_bounds_unchecked(y.clamp(1.0, apex));
        let mut out = Vec::new();
        if x < x_min - tol {
            out.push("U:lower");
        }
        if x > x_max + tol {
            out.push("U:upper");
        }
        out
    }

    /// Right boundary going up from `(1, 1)` to the apex, then the left
    /// boundary back down.
    fn boundary(&self, samples: usize) -> Vec<DensityPoint> {
        let n = samples.max(2);
        let apex = octagon_apex_theta();
        let ys: Vec<f64> = (0..n)
            .map(|k| 1.0 + (apex - 1.0) * k as f64 / (n - 1) as f64)
            .collect();
        let mut out: Vec<DensityPoint> = ys
            .iter()
            .map(|&y| DensityPoint::new(u_bounds_unchecked(y).1, y))
            .collect();
        out.extend(
            ys.iter()
                .rev()
                .skip(1)
                .take(n - 2)
                .map(|&y| DensityPoint::new(u_bounds_unchecked(y).0, y)),
        );
        out
    }
}

pub fn u_contains(p: DensityPoint, tol: f64) -> bool {
    OctagonRange.contains_tol(p, tol)
}

impl Region for Leaf {
    fn name(&self) -> &'static str {
        "leaf"
    }

    fn violations(&self, p: DensityPoint, tol: f64) -> Vec<&'static str> {
        if self.contains(p, tol) {
            Vec::new()
        } else {
            vec!["leaf:outside"]
        }
    }

    fn boundary(&self, _samples: usize) -> Vec<DensityPoint> {
        self.vertices()
            .iter()
            .map(|p| DensityPoint::new(p.x, p.y))
            .collect()
    }
}

/// Shared leaf polygon at the default resolution.
pub fn default_leaf() -> &'static Leaf {
    static LEAF: OnceLock<Leaf> = OnceLock::new();
    LEAF.get_or_init(|| Leaf::new(DEFAULT_LEAF_SAMPLES).expect("default resolution is valid"))
}

/// Membership of one density pair in every region.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionReport {
    pub point: DensityPoint,
    #[serde(rename = "in_P")]
    pub in_p: bool,
    #[serde(rename = "in_P0")]
    pub in_p0: bool,
    #[serde(rename = "in_U")]
    pub in_u: bool,
    pub in_leaf: bool,
    pub violated: Vec<&'static str>,
}

pub fn classify(p: DensityPoint) -> RegionReport {
    classify_with(p, DEFAULT_TOL, default_leaf())
}

pub fn classify_with(p: DensityPoint, tol: f64, leaf: &Leaf) -> RegionReport {
    let p_v = Pentagon::default().violations(p, tol);
    let p0_v = IsmailescuRegion.violations(p, tol);
    let u_v = OctagonRange.violations(p, tol);
    let leaf_v = leaf.violations(p, tol);
    RegionReport {
        point: p,
        in_p: p_v.is_empty(),
        in_p0: p0_v.is_empty(),
        in_u: u_v.is_empty(),
        in_leaf: leaf_v.is_empty(),
        violated: [p_v, p0_v, u_v, leaf_v].concat(),
    }
}

/// Fraction of the leaf's area (sampled on a `grid x grid` lattice over its
/// bounding box) that lies in `U`.
pub fn leaf_u_overlap(leaf: &Leaf, grid: usize) -> f64 {
    let v = leaf.vertices();
    let (x0, x1) = v
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| {
            (a.min(p.x), b.max(p.x))
        });
    let (y0, y1) = v
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| {
            (a.min(p.y), b.max(p.y))
        });
    let (mut inside, mut both) = (0usize, 0usize);
    for i in 0..grid {
        for j in 0..grid {
            let p = DensityPoint::new(
                x0 + (x1 - x0) * (i as f64 + 0.5) / grid as f64,
                y0 + (y1 - y0) * (j as f64 + 0.5) / grid as f64,
            );
            if leaf.contains(p, 0.0) {
                inside += 1;
                if OctagonRange.contains_tol(p, 0.0) {
                    both += 1;
                }
            }
        }
    }
    if inside == 0 {
        0.0
    } else {
        both as f64 / inside as f64
    }
}
