//! Shared helpers for the integration suites: an independently coded
//! brute-force crossing counter and the set of constructed drawings.

use num::{BigRational, Signed, Zero};

use crossings_core::geometry::{Drawing, Point};
use crossings_core::graph::EdgeId;

/// Brute-force pairwise crossing count, written against the drawing's raw
/// polylines with a different intersection routine than the validator:
/// each segment pair is solved as a 2x2 linear system by Cramer's rule and
/// counted only for strictly interior parameters on both segments.
pub fn oracle_total(d: &Drawing) -> u64 {
    let g = d.graph();
    let mut total = 0u64;
    for e in 0..g.edge_count() {
        for f in (e + 1)..g.edge_count() {
            let (a, b) = (EdgeId(e as u32), EdgeId(f as u32));
            if g.adjacent_edges(a, b) {
                continue;
            }
            total += oracle_pair(d.route(a), d.route(b));
        }
    }
    total
}

/// Crossings between two polylines: the number of segment pairs meeting at
/// strictly interior parameters of both segments.
pub fn oracle_pair(route_a: &[Point], route_b: &[Point]) -> u64 {
    let mut count = 0u64;
    for sa in route_a.windows(2) {
        for sb in route_b.windows(2) {
            if segments_cross_interior(&sa[0], &sa[1], &sb[0], &sb[1]) {
                count += 1;
            }
        }
    }
    count
}

/// Solve p + t (q - p) = r + s (w - r) for (t, s) and require 0 < t < 1 and
/// 0 < s < 1. A zero determinant (parallel or collinear) never counts.
fn segments_cross_interior(p: &Point, q: &Point, r: &Point, w: &Point) -> bool {
    let dx1 = &q.x - &p.x;
    let dy1 = &q.y - &p.y;
    let dx2 = &w.x - &r.x;
    let dy2 = &w.y - &r.y;
    let det = &dx1 * &dy2 - &dy1 * &dx2;
    if det.is_zero() {
        return false;
    }
    let rx = &r.x - &p.x;
    let ry = &r.y - &p.y;
    let t_num = &rx * &dy2 - &ry * &dx2;
    let s_num = &rx * &dy1 - &ry * &dx1;
    let t = t_num / det.clone();
    let s = s_num / det;
    let zero = BigRational::zero();
    let one = BigRational::from_integer(1.into());
    t.is_positive() && t < one && s.is_positive() && s < one && zero < one
}
