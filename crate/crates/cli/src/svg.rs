//! Scatter plot over the region boundaries, as a standalone SVG document.

use std::fmt::Write;

use omega_core::regions::{default_leaf, IsmailescuRegion, OctagonRange, Pentagon, Region};
use omega_core::sampler::ScatterRow;
use omega_core::DensityPoint;

/// Density-plane window `[x0, x1] x [y0, y1]`.
pub const VIEWPORT: [f64; 4] = [0.84, 1.02, 0.98, 1.26];

const WIDTH: f64 = 540.0;
const HEIGHT: f64 = 840.0;
const BOUNDARY_SAMPLES: usize = 512;

/// Maps a density pair to pixels, clamped to the canvas.
fn to_px(p: DensityPoint) -> (f64, f64) {
    let [x0, x1, y0, y1] = VIEWPORT;
    let sx = ((p.delta - x0) / (x1 - x0)).clamp(0.0, 1.0) * WIDTH;
    let sy = (1.0 - (p.theta - y0) / (y1 - y0)).clamp(0.0, 1.0) * HEIGHT;
    (sx, sy)
}

fn path(out: &mut String, class: &str, pts: &[DensityPoint]) {
    let mut d = String::new();
    for (i, &p) in pts.iter().enumerate() {
        let (x, y) = to_px(p);
        let _ = write!(d, "{}{x:.3},{y:.3} ", if i == 0 { "M" } else { "L" });
    }
    d.push('Z');
    let _ = writeln!(out, r#"  <path class="{class}" d="{d}"/>"#);
}

pub fn render(rows: &[ScatterRow]) -> String {
    let leaf: Vec<DensityPoint> = default_leaf()
        .vertices()
        .iter()
        .map(|v| DensityPoint::new(v.x, v.y))
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        out,
        "  <style>path {{ fill: none; stroke-width: 1.5 }} .P {{ stroke: #444 }} .P0 {{ stroke: #1f77b4 }} \
         .U {{ stroke: #d62728 }} .leaf {{ stroke: #2ca02c }} circle {{ fill: #000; fill-opacity: 0.5 }}</style>"
    );
    path(&mut out, "P", &Pentagon::default().boundary(0));
    path(&mut out, "P0", &IsmailescuRegion.boundary(BOUNDARY_SAMPLES));
    path(&mut out, "U", &OctagonRange.boundary(BOUNDARY_SAMPLES));
    path(&mut out, "leaf", &leaf);
    for r in rows {
        let (x, y) = to_px(DensityPoint::new(r.delta_l, r.theta_l));
        let _ = writeln!(out, r#"  <circle cx="{x:.3}" cy="{y:.3}" r="1.2"/>"#);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corners_map_to_canvas_corners() {
        assert_eq!(to_px(DensityPoint::new(0.84, 1.26)), (0.0, 0.0));
        assert_eq!(to_px(DensityPoint::new(1.02, 0.98)), (WIDTH, HEIGHT));
        assert_eq!(to_px(DensityPoint::new(2.0, 0.0)), (WIDTH, HEIGHT));
    }

    #[test]
    fn one_circle_per_row() {
        let rows: Vec<ScatterRow> = (0..3)
            .map(|i| ScatterRow {
                index: i,
                n_vertices: 8,
                delta_l: 0.95,
                theta_l: 1.1,
                in_u: true,
            })
            .collect();
        let svg = render(&rows);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<path").count(), 4);
    }
}
