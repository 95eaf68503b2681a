//! The arcs alpha and beta of density pairs traced by circle/hexagon hybrid
//! disks, and the leaf-shaped region they enclose.
//!
//! Normalization: the circle always has radius 1 and the concentric regular
//! hexagon (a vertex on the positive x axis) scales.
//!
//! * `K(u)` (intersection kind) is the unit disk cut by a hexagon of apothem
//!   `d = sqrt(4 - u^2) / 2`; `u` is the length of each straight boundary
//!   piece, i.e. the chord the hexagon edge cuts from the circle.
//! * `L(v)` (hull kind) is the convex hull of the unit disk and a hexagon of
//!   circumradius `R = 2 / sqrt(4 - v^2)`; `v` is the total length of the two
//!   tangent segments at a hexagon vertex divided by `R`.
//!
//! Each hybrid disk is sandwiched between a circle and a regular hexagon
//! (a tile) in two ways, which pins down its packing and covering densities
//! as plain area ratios.
//!
//! An often-quoted closed form for alpha uses the numerator
//! `2pi - 12 asin(u/2) + 3 sqrt(4 - u^2)`. That expression misses a factor
//! `u` on its last term: at `u = 0` it evaluates to about `(1.77, 2.36)`,
//! which is neither the circle's density pair nor even a valid packing
//! density. [`AlphaForm::Printed`] keeps it available as a negative control.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{check_unit_interval, Error, Result};
use crate::geom::{contains_point, signed_area, Hexagon, Point};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// A point `(delta, theta)` of the density plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct DensityPoint {
    pub delta: f64,
    pub theta: f64,
}

impl DensityPoint {
    pub const fn new(delta: f64, theta: f64) -> Self {
        DensityPoint { delta, theta }
    }

    /// `0 < delta <= 1 <= theta`, with `tol` slack on the two unit bounds.
    pub fn is_admissible(&self, tol: f64) -> bool {
        self.delta > 0.0 && self.delta <= 1.0 + tol && self.theta >= 1.0 - tol
    }

    pub fn as_point(self) -> Point {
        Point::new(self.delta, self.theta)
    }
}

impl From<DensityPoint> for Point {
    fn from(p: DensityPoint) -> Point {
        p.as_point()
    }
}

/// Density pair of every plane tile.
pub const TILE_POINT: DensityPoint = DensityPoint::new(1.0, 1.0);

/// Density pair of the circular disk: `(pi / sqrt 12, 2 pi / sqrt 27)`.
pub fn circle_point() -> DensityPoint {
    DensityPoint::new(PI / 12f64.sqrt(), 2.0 * PI / 27f64.sqrt())
}

/// Which numerator to use for the alpha closed form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AlphaForm {
    #[default]
    Corrected,
    /// The form without the factor `u`; wrong, kept for negative controls.
    Printed,
}

fn clamped_asin(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).asin()
}

/// `2pi - 12 asin(u/2) + 3u sqrt(4 - u^2)`, twice the area of `K(u)`.
fn alpha_numerator(u: f64, form: AlphaForm) -> f64 {
    let root = (4.0 - u * u).sqrt();
    let last = match form {
        AlphaForm::Corrected => 3.0 * u * root,
        AlphaForm::Printed => 3.0 * root,
    };
    2.0 * PI - 12.0 * clamped_asin(u / 2.0) + last
}

/// Density pair of `K(u)`; runs from the circle point at `u = 0` to `(1, 1)`
/// at `u = 1`.
pub fn alpha_point(u: f64) -> Result<DensityPoint> {
    alpha_point_with(u, AlphaForm::Corrected)
}

pub fn alpha_point_with(u: f64, form: AlphaForm) -> Result<DensityPoint> {
    check_unit_interval("u", u)?;
    let n = alpha_numerator(u, form);
    Ok(DensityPoint::new(
        n / (SQRT3 * (4.0 - u * u)),
        n / (3.0 * SQRT3),
    ))
}

/// Density pair of `L(v)`; runs from the circle point at `v = 0` to `(1, 1)`
/// at `v = 1`.
pub fn beta_point(v: f64) -> Result<DensityPoint> {
    check_unit_interval("v", v)?;
    let w = 4.0 - v * v;
    let root = w.sqrt();
    let angle = PI / 6.0 - clamped_asin(v / 2.0);
    Ok(DensityPoint::new(
        SQRT3 * (angle + v / root),
        SQRT3 / 3.0 * (w * angle + v * root),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HybridKind {
    /// Unit disk intersected with the hexagon.
    Intersection,
    /// Convex hull of the unit disk and the hexagon.
    Hull,
}

/// A convex disk bounded by arcs of the unit circle and pieces of the edges
/// of one concentric regular hexagon.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HybridDisk {
    kind: HybridKind,
    param: f64,
    hex_param: f64,
}

/// Intersection-kind disk `K(u)`.
pub fn kt_disk(u: f64) -> Result<HybridDisk> {
    check_unit_interval("u", u)?;
    Ok(HybridDisk {
        kind: HybridKind::Intersection,
        param: u,
        hex_param: (4.0 - u * u).sqrt() / 2.0,
    })
}

/// Hull-kind disk `L(v)`.
pub fn lt_disk(v: f64) -> Result<HybridDisk> {
    check_unit_interval("v", v)?;
    Ok(HybridDisk {
        kind: HybridKind::Hull,
        param: v,
        hex_param: 2.0 / (4.0 - v * v).sqrt(),
    })
}

impl HybridDisk {
    pub fn kind(&self) -> HybridKind {
        self.kind
    }

    /// `u` for the intersection kind, `v` for the hull kind.
    pub fn param(&self) -> f64 {
        self.param
    }

    /// Hexagon apothem `d` (intersection) or circumradius `R` (hull).
    pub fn hex_param(&self) -> f64 {
        self.hex_param
    }

    pub fn circle_radius(&self) -> f64 {
        1.0
    }

    /// Half the angular width of one straight boundary piece as seen from
    /// the center (intersection) or of one tangent pair (hull).
    fn half_angle(&self) -> f64 {
        clamped_asin(self.param / 2.0)
    }

    // tangent length from a hexagon vertex to the unit circle
    fn tangent_length(&self) -> f64 {
        let v = self.param;
        v / (4.0 - v * v).sqrt()
    }

    /// Area from the segment/cap decomposition.
    pub fn area_closed(&self) -> f64 {
        let a = self.half_angle();
        let u = self.param;
        match self.kind {
            // six circular segments of half-angle a removed from the disk
            HybridKind::Intersection => PI - 6.0 * (a - u / 4.0 * (4.0 - u * u).sqrt()),
            // six kites minus their sectors added to the disk
            HybridKind::Hull => PI + 6.0 * (self.tangent_length() - a),
        }
    }

    /// The tile inside the disk: a regular hexagon inscribed in the unit
    /// circle (intersection) or the defining hexagon itself (hull).
    pub fn inner_tile(&self) -> Hexagon {
        match self.kind {
            HybridKind::Intersection => Hexagon::regular(1.0, 0.0),
            HybridKind::Hull => Hexagon::regular(self.hex_param, 0.0),
        }
    }

    /// The tile around the disk: the defining hexagon (intersection) or the
    /// hexagon circumscribed about the unit circle (hull).
    pub fn outer_tile(&self) -> Hexagon {
        match self.kind {
            HybridKind::Intersection => Hexagon::regular(2.0 * self.hex_param / SQRT3, 0.0),
            HybridKind::Hull => Hexagon::regular(2.0 / SQRT3, 0.0),
        }
    }

    /// Exact areas of `(inner_tile, outer_tile)`.
    pub fn tile_areas(&self) -> (f64, f64) {
        let p = self.param;
        match self.kind {
            HybridKind::Intersection => (1.5 * SQRT3, SQRT3 * (4.0 - p * p) / 2.0),
            HybridKind::Hull => (1.5 * SQRT3 * self.hex_param * self.hex_param, 2.0 * SQRT3),
        }
    }

    /// Density pair of the disk given its area: packing against the outer
    /// tile, covering against the inner tile.
    pub fn densities_for_area(&self, area: f64) -> DensityPoint {
        let (inner, outer) = self.tile_areas();
        DensityPoint::new(area / outer, area / inner)
    }

    pub fn densities_closed(&self) -> DensityPoint {
        self.densities_for_area(self.area_closed())
    }

    /// Inscribed `n`-gon whose vertices lie on the exact boundary, with every
    /// junction between straight and curved pieces included. `n` must be a
    /// multiple of 6 and at least 96.
    pub fn boundary_samples(&self, n: usize) -> Result<Vec<Point>> {
        if n < 96 || !n.is_multiple_of(6) {
            return Err(Error::InvalidInput(format!(
                "oracle resolution {n} must be a multiple of 6 and at least 96"
            )));
        }
        let per = n / 6;
        let a = self.half_angle();
        let third = PI / 3.0;
        let mut out = Vec::with_capacity(n);
        match self.kind {
            HybridKind::Intersection => {
                let interior = per - 2;
                for j in 0..6 {
                    let c = PI / 6.0 + j as f64 * third;
                    out.push(Point::polar(1.0, c - a));
                    out.push(Point::polar(1.0, c + a));
                    push_arc(&mut out, c + a, c + third - a, interior);
                }
            }
            HybridKind::Hull => {
                let interior = per - 3;
                for j in 0..6 {
                    let w = j as f64 * third;
                    out.push(Point::polar(self.hex_param, w));
                    out.push(Point::polar(1.0, w + a));
                    push_arc(&mut out, w + a, w + third - a, interior);
                    out.push(Point::polar(1.0, w + third - a));
                }
            }
        }
        debug_assert_eq!(out.len(), n);
        Ok(out)
    }

    /// Area of [`Self::boundary_samples`]; increases with `n` towards
    /// [`Self::area_closed`] with `O(1/n^2)` error.
    pub fn area_oracle(&self, n: usize) -> Result<f64> {
        Ok(signed_area(&self.boundary_samples(n)?))
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        let in_circle = p.norm() <= 1.0 + tol;
        match self.kind {
            HybridKind::Intersection => in_circle && self.outer_tile().contains_point(p, tol),
            HybridKind::Hull => {
                if in_circle {
                    return true;
                }
                let a = self.half_angle();
                if a == 0.0 {
                    return false;
                }
                // outside the circle the hull is six triangles: tangent
                // point, hexagon vertex, tangent point
                (0..6).any(|j| {
                    let w = j as f64 * PI / 3.0;
                    let tri = [
                        Point::polar(1.0, w - a),
                        Point::polar(self.hex_param, w),
                        Point::polar(1.0, w + a),
                    ];
                    contains_point(&tri, p, tol)
                })
            }
        }
    }
}

fn push_arc(out: &mut Vec<Point>, from: f64, to: f64, interior: usize) {
    let step = (to - from) / (interior + 1) as f64;
    out.extend((1..=interior).map(|i| Point::polar(1.0, from + step * i as f64)));
}

/// Relative slack allowed in the sandwich order, for bodies that equal
/// their tile up to rounding.
pub const SANDWICH_TOL: f64 = 1e-12;

/// Density of the packing generated by a tile of area `tile_area` holding a
/// body of area `body_area`.
pub fn generated_packing_density(body_area: f64, tile_area: f64) -> Result<f64> {
    if !(body_area > 0.0 && body_area <= tile_area * (1.0 + SANDWICH_TOL)) {
        return Err(Error::SandwichOrder {
            body: body_area,
            tile: tile_area,
        });
    }
    Ok((body_area / tile_area).min(1.0))
}

/// Density of the covering generated by a tile of area `tile_area` contained
/// in a body of area `body_area`.
pub fn generated_covering_density(body_area: f64, tile_area: f64) -> Result<f64> {
    if !(tile_area > 0.0 && tile_area <= body_area * (1.0 + SANDWICH_TOL)) {
        return Err(Error::SandwichOrder {
            body: body_area,
            tile: tile_area,
        });
    }
    Ok((body_area / tile_area).max(1.0))
}

/// Which arc a boundary sample belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arc {
    Alpha,
    Beta,
}

impl Arc {
    pub fn name(self) -> &'static str {
        match self {
            Arc::Alpha => "alpha",
            Arc::Beta => "beta",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcSample {
    pub arc: Arc,
    pub param: f64,
    pub point: DensityPoint,
}

/// `k / (n - 1)` for `k = 0..n`, with exact endpoints.
pub(crate) fn unit_grid(n: usize) -> impl DoubleEndedIterator<Item = f64> + Clone {
    let last = (n - 1) as f64;
    (0..n).map(move |k| k as f64 / last)
}

/// Alpha sampled from `u = 1` down to `u = 0`, then beta from `v = 0` up to
/// `v = 1`, with the shared circle point listed once. The first and last
/// samples are both `(1, 1)`, so the list is a closed polyline of
/// `2 * samples_per_arc - 1` points.
pub fn leaf_samples(samples_per_arc: usize) -> Result<Vec<ArcSample>> {
    if samples_per_arc < 2 {
        return Err(Error::InvalidInput(format!(
            "need at least 2 samples per arc, got {samples_per_arc}"
        )));
    }
    let mut out = Vec::with_capacity(2 * samples_per_arc - 1);
    for u in unit_grid(samples_per_arc).rev() {
        out.push(ArcSample {
            arc: Arc::Alpha,
            param: u,
            point: alpha_point(u)?,
        });
    }
    for v in unit_grid(samples_per_arc).skip(1) {
        out.push(ArcSample {
            arc: Arc::Beta,
            param: v,
            point: beta_point(v)?,
        });
    }
    Ok(out)
}

/// Closed counterclockwise polyline around the leaf (first point repeated
/// at the end).
pub fn leaf_boundary(samples_per_arc: usize) -> Result<Vec<DensityPoint>> {
    Ok(leaf_samples(samples_per_arc)?
        .into_iter()
        .map(|s| s.point)
        .collect())
}

/// Arc samples as CSV with header `arc,param,delta,theta`.
pub fn arcs_csv(samples_per_arc: usize) -> Result<String> {
    use std::fmt::Write;
    let mut out = String::from("arc,param,delta,theta\n");
    for s in leaf_samples(samples_per_arc)? {
        writeln!(
            out,
            "{},{},{},{}",
            s.arc.name(),
            fmt_real(s.param),
            fmt_real(s.point.delta),
            fmt_real(s.point.theta)
        )
        .expect("writing to a String cannot fail");
    }
    Ok(out)
}

/// 17 significant digits, round-trip exact.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// Default resolution for leaf membership.
pub const DEFAULT_LEAF_SAMPLES: usize = 4096;

/// Polygonal approximation of the leaf, inscribed in the true region.
#[derive(Clone, Debug)]
pub struct Leaf {
    polygon: Vec<Point>,
}

impl Leaf {
    pub fn new(samples_per_arc: usize) -> Result<Self> {
        let mut polygon: Vec<Point> = leaf_boundary(samples_per_arc)?
            .into_iter()
            .map(Point::from)
            .collect();
        polygon.pop();
        Ok(Leaf { polygon })
    }

    /// Counterclockwise vertices (closing point not repeated).
    pub fn vertices(&self) -> &[Point] {
        &self.polygon
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.polygon)
    }

    pub fn contains(&self, p: DensityPoint, tol: f64) -> bool {
        contains_point(&self.polygon, p.as_point(), tol)
    }
}

/// Membership in the leaf polygon with `samples` points per arc
/// (`samples >= 64`), boundary tolerance 1e-9.
pub fn leaf_contains(p: DensityPoint, samples: usize) -> Result<bool> {
    if samples < 64 {
        return Err(Error::InvalidInput(format!(
            "leaf membership needs at least 64 samples per arc, got {samples}"
        )));
    }
    Ok(Leaf::new(samples)?.contains(p, 1e-9))
}
