//! Seeded random centrally symmetric polygons and the density scatter.
//!
//! Every polygon index draws from its own SplitMix64 stream seeded with
//! `seed ^ (index * 0x9E3779B97F4A7C15)`, so rows can be computed in any
//! order or on any number of threads and still come out bit-identical.

use std::f64::consts::PI;
use std::fmt::Write;

use rayon::prelude::*;

use crate::dowker::lattice_densities;
use crate::error::{Error, Result};
use crate::geom::{CsPolygon, Point};
use crate::leaf::fmt_real;
use crate::regions::u_contains;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Attempts allowed before [`random_cs_polygon`] gives up.
pub const MAX_ATTEMPTS: u32 = 100;

/// Smallest radius drawn; keeps polygons away from needles.
pub const MIN_RADIUS: f64 = 0.3;

/// Tolerance for the `in_U` column.
pub const U_TOL: f64 = 1e-7;

/// SplitMix64 (Steele, Lea and Flood), bit-exact.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Stream for polygon `index` under `seed`.
    pub fn for_index(seed: u64, index: u64) -> Self {
        SplitMix64::new(seed ^ index.wrapping_mul(GOLDEN_GAMMA))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Random centrally symmetric `2m`-gon, deterministic in `(seed, index, m)`.
///
/// Draws `m` angles in `[0, pi)` (sorted; every cyclic gap of the `2m`
/// directions at least `pi / 8m`) and `m` radii in `[0.3, 1)`, and keeps the
/// polygon only if all `2m` points are strict hull vertices. Rejections keep
/// drawing from the same stream.
pub fn random_cs_polygon(seed: u64, index: u64, m: usize) -> Result<CsPolygon> {
    if m < 2 {
        return Err(Error::InvalidInput(format!("need m >= 2, got {m}")));
    }
    let mut rng = SplitMix64::for_index(seed, index);
    let min_gap = PI / (8 * m) as f64;
    for _ in 0..MAX_ATTEMPTS {
        let mut angles: Vec<f64> = (0..m).map(|_| rng.next_f64() * PI).collect();
        angles.sort_by(f64::total_cmp);
        let wrap = angles[0] + PI - angles[m - 1];
        if wrap < min_gap || angles.windows(2).any(|w| w[1] - w[0] < min_gap) {
            continue;
        }
        let half: Vec<Point> = angles
            .iter()
            .map(|&a| Point::polar(MIN_RADIUS + (1.0 - MIN_RADIUS) * rng.next_f64(), a))
            .collect();
        if all_strict_hull_vertices(&half) {
            if let Ok(poly) = CsPolygon::new(half) {
                return Ok(poly);
            }
        }
    }
    Err(Error::GenerationFailure {
        seed,
        index,
        attempts: MAX_ATTEMPTS,
    })
}

// The 2m points are already in angular order around the origin, so they are
// all hull vertices exactly when every turn is strictly to the left.
fn all_strict_hull_vertices(half: &[Point]) -> bool {
    let full: Vec<Point> = half
        .iter()
        .copied()
        .chain(half.iter().map(|&p| -p))
        .collect();
    let n = full.len();
    (0..n).all(|i| {
        let (a, b, c) = (full[i], full[(i + 1) % n], full[(i + 2) % n]);
        (b - a).cross(c - b) > 0.0
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScatterRow {
    pub index: u64,
    pub n_vertices: usize,
    pub delta_l: f64,
    pub theta_l: f64,
    pub in_u: bool,
}

/// Lattice density pairs of `count` random `2m`-gons.
pub fn scatter(count: usize, seed: u64, m: usize) -> Result<Vec<ScatterRow>> {
    scatter_with(count, |i| random_cs_polygon(seed, i, m))
}

/// Same as [`scatter`], on a dedicated pool of `threads` workers.
pub fn scatter_with_threads(
    count: usize,
    seed: u64,
    m: usize,
    threads: usize,
) -> Result<Vec<ScatterRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot start worker pool: {e}")))?;
    pool.install(|| scatter(count, seed, m))
}

/// Scatter over an arbitrary polygon source. Rows come back in index order;
/// the first failing index aborts the run.
pub fn scatter_with<F>(count: usize, polygon: F) -> Result<Vec<ScatterRow>>
where
    F: Fn(u64) -> Result<CsPolygon> + Sync,
{
    if count < 1 {
        return Err(Error::InvalidInput("scatter needs count >= 1".into()));
    }
    let rows: Vec<Result<ScatterRow>> = (0..count as u64)
        .into_par_iter()
        .map(|index| {
            let poly = polygon(index)?;
            let d = lattice_densities(&poly)?.densities;
            Ok(ScatterRow {
                index,
                n_vertices: 2 * poly.m(),
                delta_l: d.delta,
                theta_l: d.theta,
                in_u: u_contains(d, U_TOL),
            })
        })
        .collect();
    rows.into_iter()
        .enumerate()
        .map(|(index, r)| {
            r.map_err(|e| Error::Row {
                index: index as u64,
                source: Box::new(e),
            })
        })
        .collect()
}

/// CSV with header `index,n,delta_L,theta_L,in_U`.
pub fn scatter_csv(rows: &[ScatterRow]) -> String {
    let mut out = String::from("index,n,delta_L,theta_L,in_U\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.index,
            r.n_vertices,
            fmt_real(r.delta_l),
            fmt_real(r.theta_l),
            r.in_u
        )
        .expect("writing to a String cannot fail");
    }
    out
}

/// Fraction of rows with `theta_L < threshold`.
pub fn near_tile_fraction(rows: &[ScatterRow], threshold: f64) -> f64 {
    if rows.is_empty() {
        return 0.0;
    }
    rows.iter().filter(|r| r.theta_l < threshold).count() as f64 / rows.len() as f64
}
