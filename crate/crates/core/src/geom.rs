//! Planar convex geometry kernel.
//!
//! Everything here is plain `f64` arithmetic on small vertex lists. Polygons
//! are stored counterclockwise; centrally symmetric polygons are centered at
//! the origin and store only one half of their vertex cycle, so that
//! `v[i + m] == -v[i]` holds bit for bit.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance used when validating convexity and duplicate vertices.
pub const CONVEXITY_TOL: f64 = 1e-12;

/// Relative tolerance used when checking central symmetry of loaded polygons.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// Minimum angular gap between adjacent support lines.
pub const MIN_SUPPORT_GAP: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn polar(radius: f64, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Point::new(radius * c, radius * s)
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point::new(x, y)
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// Signed shoelace area: positive for counterclockwise vertex order.
pub fn shoelace_area(points: &[Point]) -> Result<f64> {
    if points.len() < 3 {
        return Err(Error::InvalidInput(format!(
            "area needs at least 3 vertices, got {}",
            points.len()
        )));
    }
    Ok(signed_area(points))
}

pub(crate) fn signed_area(points: &[Point]) -> f64 {
    let n = points.len();
    let twice: f64 = (0..n).map(|i| points[i].cross(points[(i + 1) % n])).sum();
    0.5 * twice
}

/// Largest side of the bounding box, used to make tolerances scale-relative.
pub fn bbox_scale(points: &[Point]) -> f64 {
    let (mut lo_x, mut hi_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in points {
        lo_x = lo_x.min(p.x);
        hi_x = hi_x.max(p.x);
        lo_y = lo_y.min(p.y);
        hi_y = hi_y.max(p.y);
    }
    (hi_x - lo_x).max(hi_y - lo_y)
}

/// A counterclockwise convex polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Validates and wraps a counterclockwise vertex list.
    ///
    /// Inputs that are not convex are rejected, never repaired.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidInput(format!(
                "a convex polygon needs at least 3 vertices, got {n}"
            )));
        }
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite vertex {p:?}")));
        }
        let scale = bbox_scale(&vertices);
        if scale <= 0.0 {
            return Err(Error::InvalidInput("all vertices coincide".into()));
        }
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if a.distance(b) <= CONVEXITY_TOL * scale {
                return Err(Error::InvalidInput(format!(
                    "duplicate vertices {i} and {}",
                    (i + 1) % n
                )));
            }
        }
        let mut turning = 0.0;
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            let (e1, e2) = (b - a, c - b);
            if e1.cross(e2) <= -CONVEXITY_TOL * scale * scale {
                return Err(Error::InvalidInput(format!(
                    "polygon is not convex and counterclockwise at vertex {}",
                    (i + 1) % n
                )));
            }
            turning += e1.cross(e2).atan2(e1.dot(e2));
        }
        // A convex cycle turns exactly once; a star-shaped multi-winding cycle
        // with left turns everywhere would pass the local test above.
        if (turning - 2.0 * PI).abs() > 1e-6 {
            return Err(Error::InvalidInput(format!(
                "vertex cycle winds {:.3} turns",
                turning / (2.0 * PI)
            )));
        }
        if signed_area(&vertices) <= 0.0 {
            return Err(Error::InvalidInput("polygon has non-positive area".into()));
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn scale(&self) -> f64 {
        bbox_scale(&self.vertices)
    }

    pub fn contains_point(&self, p: Point, tol: f64) -> bool {
        contains_point(&self.vertices, p, tol)
    }
}

/// Half-plane containment test for a counterclockwise convex vertex cycle.
///
/// Points within `tol` (Euclidean distance to an edge line) of the boundary
/// count as inside. Edges shorter than `1e-12` times the bounding-box scale
/// have no reliable direction and are skipped.
pub fn contains_point(vertices: &[Point], p: Point, tol: f64) -> bool {
    let n = vertices.len();
    let min_len = 1e-12 * bbox_scale(vertices);
    (0..n).all(|i| {
        let a = vertices[i];
        let edge = vertices[(i + 1) % n] - a;
        let len = edge.norm();
        len <= min_len || edge.cross(p - a) / len >= -tol
    })
}

/// Origin-centered centrally symmetric convex polygon.
///
/// Only the first half of the vertex cycle is independent; the full cycle is
/// `half ++ (-half)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CsPolygon {
    half: Vec<Point>,
    full: ConvexPolygon,
}

impl CsPolygon {
    pub fn new(half: Vec<Point>) -> Result<Self> {
        if half.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "a centrally symmetric polygon needs at least 2 independent vertices, got {}",
                half.len()
            )));
        }
        let mut full = half.clone();
        full.extend(half.iter().map(|&p| -p));
        let full = ConvexPolygon::new(full)?;
        Ok(CsPolygon { half, full })
    }

    /// Regular `2m`-gon with the given circumradius, first vertex at `phase`.
    pub fn regular(m: usize, circumradius: f64, phase: f64) -> Result<Self> {
        let step = PI / m as f64;
        CsPolygon::new(
            (0..m)
                .map(|i| Point::polar(circumradius, phase + step * i as f64))
                .collect(),
        )
    }

    /// Accepts a full counterclockwise vertex cycle, recenters it at its
    /// vertex centroid and checks `v[i + m] = -v[i]` within
    /// [`SYMMETRY_TOL`] times the polygon scale.
    pub fn from_full(vertices: &[Point]) -> Result<Self> {
        let n = vertices.len();
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::NotCentrallySymmetric(format!(
                "{n} vertices; a centrally symmetric polygon has an even count of at least 4"
            )));
        }
        let centroid = vertices.iter().fold(Point::ORIGIN, |acc, &p| acc + p) * (1.0 / n as f64);
        let centered: Vec<Point> = vertices.iter().map(|&p| p - centroid).collect();
        let scale = bbox_scale(&centered);
        let m = n / 2;
        for i in 0..m {
            let gap = (centered[i] + centered[i + m]).norm();
            if gap > SYMMETRY_TOL * scale {
                return Err(Error::NotCentrallySymmetric(format!(
                    "vertex {i} and vertex {} are off by {gap:e}",
                    i + m
                )));
            }
        }
        let half = (0..m)
            .map(|i| (centered[i] - centered[i + m]) * 0.5)
            .collect();
        CsPolygon::new(half)
    }

    /// Number of independent vertices; the polygon has `2m` vertices.
    pub fn m(&self) -> usize {
        self.half.len()
    }

    pub fn half(&self) -> &[Point] {
        &self.half
    }

    pub fn vertices(&self) -> &[Point] {
        self.full.vertices()
    }

    pub fn polygon(&self) -> &ConvexPolygon {
        &self.full
    }

    pub fn area(&self) -> f64 {
        self.full.area()
    }

    pub fn scale(&self) -> f64 {
        self.full.scale()
    }

    /// Image under a linear map. Orientation-reversing maps are rejected by
    /// the convexity check.
    pub fn map_linear(&self, f: impl Fn(Point) -> Point) -> Result<Self> {
        CsPolygon::new(self.half.iter().map(|&p| f(p)).collect())
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        self.map_linear(|p| p * c)
    }

    /// Support function `max_v <v, (cos angle, sin angle)>`.
    pub fn support_value(&self, angle: f64) -> f64 {
        let n = Point::polar(1.0, angle);
        support_half(&self.half, n)
    }

    /// Angles in `[0, pi)` of the outward edge normals, one per antipodal
    /// edge pair, in counterclockwise order.
    pub fn edge_normal_angles(&self) -> Vec<f64> {
        let v = self.vertices();
        let mut out: Vec<f64> = (0..self.m())
            .map(|i| {
                let e = v[i + 1] - v[i];
                e.y.atan2(e.x) - PI / 2.0
            })
            .map(|a| a.rem_euclid(PI))
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }
}

// max over the full cycle equals max |<v, n>| over the half
#[inline]
fn support_half(half: &[Point], n: Point) -> f64 {
    half.iter().fold(0.0_f64, |acc, p| acc.max(p.dot(n).abs()))
}

/// Hexagon with exactly six counterclockwise vertices. Zero-length sides
/// are allowed, so quadrilaterals appear as degenerate hexagons.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hexagon {
    pub vertices: [Point; 6],
}

impl Hexagon {
    pub fn new(vertices: [Point; 6]) -> Self {
        Hexagon { vertices }
    }

    /// Centrally symmetric hexagon `(p1, p2, p3, -p1, -p2, -p3)`.
    pub fn symmetric(p: [Point; 3]) -> Self {
        Hexagon::new([p[0], p[1], p[2], -p[0], -p[1], -p[2]])
    }

    /// Regular hexagon centered at the origin with a vertex at `phase`.
    pub fn regular(circumradius: f64, phase: f64) -> Self {
        let mut v = [Point::ORIGIN; 6];
        for (k, slot) in v.iter_mut().enumerate() {
            *slot = Point::polar(circumradius, phase + k as f64 * PI / 3.0);
        }
        Hexagon::new(v)
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn contains_point(&self, p: Point, tol: f64) -> bool {
        contains_point(&self.vertices, p, tol)
    }
}

/// Hexagon cut out by the six support lines of `poly` with normal angles
/// `angles[i]` and `angles[i] + pi`.
///
/// Requires `0 <= t1 < t2 < t3 < pi` with every cyclic gap (including
/// `pi - (t3 - t1)`) at least [`MIN_SUPPORT_GAP`].
pub fn hexagon_from_support_angles(poly: &CsPolygon, angles: [f64; 3]) -> Result<Hexagon> {
    let [t1, t2, t3] = angles;
    if !angles.iter().all(|t| (0.0..PI).contains(t)) {
        return Err(Error::InvalidInput(format!(
            "support angles {angles:?} must lie in [0, pi)"
        )));
    }
    let gaps = [t2 - t1, t3 - t2, PI - (t3 - t1)];
    if gaps.iter().any(|&g| g < MIN_SUPPORT_GAP) {
        return Err(Error::Degenerate(format!(
            "support angles {angles:?} are not increasing with gaps >= {MIN_SUPPORT_GAP:e}"
        )));
    }
    Ok(support_hexagon(poly.half(), angles))
}

/// Unchecked variant for the optimizer: only needs `t1 < t2 < t3 < t1 + pi`.
pub(crate) fn support_hexagon(half: &[Point], angles: [f64; 3]) -> Hexagon {
    let normals = angles.map(|t| Point::polar(1.0, t));
    let contacts = normals.map(|n| support_contacts(half, n));
    // lines k = 0..2 and their antipodes 3..5 touch at opposite vertices
    let line = |k: usize| -> (Point, Contacts) {
        let (n, c) = (normals[k % 3], contacts[k % 3]);
        if k < 3 {
            (n, c)
        } else {
            (
                -n,
                Contacts {
                    cw: -c.cw,
                    ccw: -c.ccw,
                },
            )
        }
    };
    let mut p = [Point::ORIGIN; 3];
    for (k, slot) in p.iter_mut().enumerate() {
        let (na, a) = line(k);
        let (nb, b) = line(k + 1);
        *slot = meet(na, a.ccw, nb, b.cw);
    }
    Hexagon::symmetric(p)
}

/// Extreme vertices of the contact set of a support line. A line flush with
/// an edge touches both of its endpoints.
#[derive(Clone, Copy)]
struct Contacts {
    cw: Point,
    ccw: Point,
}

fn support_contacts(half: &[Point], n: Point) -> Contacts {
    let h = support_half(half, n);
    let tol = 1e-12 * half.iter().fold(0.0_f64, |acc, p| acc.max(p.norm()));
    let along = Point::new(-n.y, n.x);
    let mut out: Option<(Contacts, f64, f64)> = None;
    for p in half.iter().flat_map(|&p| [p, -p]) {
        if p.dot(n) < h - tol {
            continue;
        }
        let s = p.dot(along);
        out = Some(match out {
            None => (Contacts { cw: p, ccw: p }, s, s),
            Some((c, lo, hi)) => (
                Contacts {
                    cw: if s < lo { p } else { c.cw },
                    ccw: if s > hi { p } else { c.ccw },
                },
                lo.min(s),
                hi.max(s),
            ),
        });
    }
    out.expect("some vertex attains the support value").0
}

/// Meeting point of the line through `qa` with normal `na` and the line
/// through `qb` with normal `nb`.
///
/// Walks along line `a` from its contact vertex, so rounding only moves the
/// result along that line; a plain 2x2 solve loses `eps / gap` in every
/// direction once the lines are nearly parallel. Lines sharing a contact
/// vertex meet exactly there.
#[inline]
fn meet(na: Point, qa: Point, nb: Point, qb: Point) -> Point {
    if qa == qb {
        return qa;
    }
    let da = Point::new(-na.y, na.x);
    qa + da * (nb.dot(qb - qa) / nb.dot(da))
}

/// On-disk polygon format: `{"vertices": [[x, y], ...]}`, counterclockwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonFile {
    pub vertices: Vec<[f64; 2]>,
}

impl PolygonFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn points(&self) -> Vec<Point> {
        self.vertices.iter().map(|&v| v.into()).collect()
    }

    pub fn to_convex(&self) -> Result<ConvexPolygon> {
        ConvexPolygon::new(self.points())
    }

    pub fn to_cs(&self) -> Result<CsPolygon> {
        CsPolygon::from_full(&self.points())
    }
}

impl From<&[Point]> for PolygonFile {
    fn from(points: &[Point]) -> Self {
        PolygonFile {
            vertices: points.iter().map(|&p| p.into()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn centered_square() -> CsPolygon {
        CsPolygon::new(vec![Point::new(0.5, -0.5), Point::new(0.5, 0.5)]).unwrap()
    }

    #[test]
    fn area_examples() {
        assert_eq!(unit_square().area(), 1.0);
        let hex = Hexagon::regular(1.0, 0.0);
        assert!((hex.area() - 1.5 * 3f64.sqrt()).abs() < 1e-12);
        // shoelace over the exact vertices of the circumradius-1 octagon
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let oct = [
            (1.0, 0.0),
            (s, s),
            (0.0, 1.0),
            (-s, s),
            (-1.0, 0.0),
            (-s, -s),
            (0.0, -1.0),
            (s, -s),
        ]
        .map(|(x, y)| Point::new(x, y));
        let a = shoelace_area(&oct).unwrap();
        assert!((a - 2.0 * 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn area_needs_three_vertices() {
        let err = shoelace_area(&[Point::ORIGIN, Point::new(1.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn rejects_bad_polygons() {
        // clockwise
        let cw = vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
        ];
        assert!(ConvexPolygon::new(cw).is_err());
        // reflex vertex
        let dart = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 0.2),
            Point::new(1.0, 2.0),
        ];
        assert!(ConvexPolygon::new(dart).is_err());
        // duplicate vertex
        let dup = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ];
        assert!(ConvexPolygon::new(dup).is_err());
        // pentagram: left turns everywhere but winds twice
        let star: Vec<Point> = (0..5)
            .map(|k| Point::polar(1.0, 4.0 * PI * k as f64 / 5.0))
            .collect();
        assert!(ConvexPolygon::new(star).is_err());
    }

    #[test]
    fn support_value_examples() {
        let sq = centered_square();
        assert!((sq.support_value(0.0) - 0.5).abs() < 1e-15);
        assert!((sq.support_value(PI / 4.0) - 0.5f64.sqrt()).abs() < 1e-15);
        let oct = CsPolygon::regular(4, 1.0, 0.0).unwrap();
        assert!((oct.support_value(0.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn support_hexagon_examples() {
        let sq = centered_square();
        let hex = hexagon_from_support_angles(&sq, [0.0, PI / 3.0, 2.0 * PI / 3.0]).unwrap();
        let area = hex.area();
        assert!(area > 1.0 && area < 2.0, "area {area}");
        for &v in sq.vertices() {
            assert!(hex.contains_point(v, 1e-9));
        }

        // regular hexagon (vertex at 30 degrees so the edge normals sit at
        // 0, pi/3, 2pi/3) reproduces itself
        let apothem = 0.8;
        let r = apothem * 2.0 / 3f64.sqrt();
        let k = CsPolygon::regular(3, r, PI / 6.0).unwrap();
        let hex = hexagon_from_support_angles(&k, [0.0, PI / 3.0, 2.0 * PI / 3.0]).unwrap();
        assert!((hex.area() - 2.0 * 3f64.sqrt() * apothem * apothem).abs() < 1e-12);

        // a near-circular 64-gon
        let c = CsPolygon::regular(32, 1.0, 0.0).unwrap();
        let hex = hexagon_from_support_angles(&c, [0.0, PI / 3.0, 2.0 * PI / 3.0]).unwrap();
        let rel = (hex.area() - 2.0 * 3f64.sqrt()).abs() / (2.0 * 3f64.sqrt());
        assert!(rel < 2e-3, "relative error {rel}");
    }

    #[test]
    fn support_hexagon_rejects_bad_angles() {
        let sq = centered_square();
        assert!(matches!(
            hexagon_from_support_angles(&sq, [0.0, 1.0, 1.0 + 1e-12]),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            hexagon_from_support_angles(&sq, [0.0, 1.0, PI - 1e-12]),
            Err(Error::Degenerate(_))
        ));
        assert!(hexagon_from_support_angles(&sq, [-0.1, 1.0, 2.0]).is_err());
    }

    #[test]
    fn containment_examples() {
        let sq = unit_square();
        assert!(sq.contains_point(Point::new(0.5, 0.5), 0.0));
        assert!(!sq.contains_point(Point::new(1.5, 0.5), 1e-9));
        assert!(sq.contains_point(Point::new(1.0 + 1e-12, 0.5), 1e-9));
    }

    #[test]
    fn nearly_parallel_support_lines_meet_at_the_shared_vertex() {
        let k = CsPolygon::new(vec![
            Point::new(0.7123687696760792, 0.03783179009399409),
            Point::new(0.6287558452849475, 0.4998636003988746),
        ])
        .unwrap();
        let flush = k.edge_normal_angles();
        for t in [
            [flush[0], flush[0] + 2e-9, flush[1]],
            [flush[0] - 2e-9, flush[0], flush[1]],
        ] {
            let hex = hexagon_from_support_angles(&k, t).unwrap();
            assert!(
                hex.area() >= k.area() * (1.0 - 1e-15),
                "{}",
                hex.area() - k.area()
            );
            for &v in k.vertices() {
                assert!(hex.contains_point(v, 1e-12));
            }
        }
    }

    #[test]
    fn rounding_sized_edges_are_ignored() {
        // support hexagon of this parallelogram has two vertices 2e-16 apart
        let k = CsPolygon::new(vec![
            Point::new(0.4338571426273404, 0.2383559596282917),
            Point::new(-0.3722285583908293, 0.39249834832178543),
        ])
        .unwrap();
        let hex = hexagon_from_support_angles(
            &k,
            [1.5957557371910096, 1.6557133997578517, 2.547717341270821],
        )
        .unwrap();
        for &v in k.vertices() {
            assert!(hex.contains_point(v, 1e-9));
        }
    }

    #[test]
    fn loads_polygon_files() {
        let text = r#"{"vertices": [[1.5, 1.5], [2.5, 1.5], [2.5, 2.5], [1.5, 2.5]]}"#;
        let cs = PolygonFile::parse(text).unwrap().to_cs().unwrap();
        assert_eq!(cs.m(), 2);
        assert!((cs.area() - 1.0).abs() < 1e-12);
        assert_eq!(cs.vertices()[2], -cs.vertices()[0]);

        let tri = r#"{"vertices": [[0, 0], [1, 0], [0, 1]]}"#;
        assert!(matches!(
            PolygonFile::parse(tri).unwrap().to_cs(),
            Err(Error::NotCentrallySymmetric(_))
        ));
        let lopsided = r#"{"vertices": [[0, 0], [2, 0], [2, 1], [0, 1.1]]}"#;
        assert!(matches!(
            PolygonFile::parse(lopsided).unwrap().to_cs(),
            Err(Error::NotCentrallySymmetric(_))
        ));
        assert!(matches!(
            PolygonFile::parse("{\"vertices\": [[0, 0]"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn edge_normals_of_square() {
        let sq = centered_square();
        let n = sq.edge_normal_angles();
        assert_eq!(n.len(), 2);
        assert!(n[0].abs() < 1e-15 || (n[0] - PI).abs() < 1e-15);
        assert!((n[1] - PI / 2.0).abs() < 1e-15);
    }
}
