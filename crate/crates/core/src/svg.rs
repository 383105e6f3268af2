//! SVG drawings of embedded complexes. Planar complexes are drawn as is;
//! higher-dimensional ones are projected orthographically onto a pair of
//! coordinate axes.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::bottomcx::EmbeddedComplex;
use crate::error::{Error, Result};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 32.0;

/// Default projection onto the first two axes; for bottoms in R^3 this drops
/// the last coordinate.
pub fn default_plane(_dim: usize) -> (usize, usize) {
    (0, 1)
}

/// Projected vertex positions in SVG coordinates (y axis pointing up).
fn project(k: &EmbeddedComplex, (i, j): (usize, usize)) -> Vec<(f64, f64)> {
    let raw: Vec<(f64, f64)> = k
        .coords
        .iter()
        .map(|x| (x[i].to_f64().unwrap_or(0.0), x[j].to_f64().unwrap_or(0.0)))
        .collect();
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &raw {
        lo_x = lo_x.min(x);
        hi_x = hi_x.max(x);
        lo_y = lo_y.min(y);
        hi_y = hi_y.max(y);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y).max(1.0);
    let s = (SIZE - 2.0 * MARGIN) / span;
    raw.into_iter()
        .map(|(x, y)| (MARGIN + (x - lo_x) * s, SIZE - MARGIN - (y - lo_y) * s))
        .collect()
}

/// Facet boundary as a polygon: for triangles and other 2-cells the
/// vertices are ordered by angle around their projected barycenter.
fn outline(facet: &[usize], pos: &[(f64, f64)]) -> Vec<usize> {
    let n = facet.len() as f64;
    let cx = facet.iter().map(|&v| pos[v].0).sum::<f64>() / n;
    let cy = facet.iter().map(|&v| pos[v].1).sum::<f64>() / n;
    let mut vs = facet.to_vec();
    vs.sort_by(|&a, &b| {
        let ta = (pos[a].1 - cy).atan2(pos[a].0 - cx);
        let tb = (pos[b].1 - cy).atan2(pos[b].0 - cx);
        ta.total_cmp(&tb)
    });
    vs
}

pub fn render(k: &EmbeddedComplex, plane: Option<(usize, usize)>) -> Result<String> {
    let plane = plane.unwrap_or_else(|| default_plane(k.dim));
    if plane.0 >= k.dim || plane.1 >= k.dim || plane.0 == plane.1 {
        return Err(Error::InvalidInput(format!(
            "projection plane ({}, {}) is invalid in dimension {}",
            plane.0, plane.1, k.dim
        )));
    }
    let pos = project(k, plane);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    for f in &k.facets {
        let pts: Vec<String> =
            outline(f, &pos).iter().map(|&v| format!("{:.2},{:.2}", pos[v].0, pos[v].1)).collect();
        let _ = writeln!(
            out,
            r##"  <polygon points="{}" fill="#dde6f0" fill-opacity="0.6" stroke="#1f3b57" stroke-width="1.5"/>"##,
            pts.join(" ")
        );
    }
    for (v, &(x, y)) in pos.iter().enumerate() {
        let _ = writeln!(out, r##"  <circle cx="{x:.2}" cy="{y:.2}" r="3" fill="#1f3b57"/>"##);
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-size="11" font-family="monospace">{}</text>"#,
            x + 5.0,
            y - 5.0,
            k.ids[v]
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
