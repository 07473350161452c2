//! Drawings, good-drawing validation, and the crossing functionals.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num::Zero;

use super::segments::{point_on_segment, seg_contact, SegContact};
use super::Point;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, PartitionedGraph, VertexId};

/// A drawing: every vertex at a distinct exact-rational position, every edge
/// a polyline from its first endpoint to its second.
#[derive(Debug)]
pub struct Drawing {
    graph: PartitionedGraph,
    positions: Vec<Point>,
    routes: Vec<Vec<Point>>,
    report: OnceLock<CrossingReport>,
}

impl Clone for Drawing {
    fn clone(&self) -> Self {
        Drawing {
            graph: self.graph.clone(),
            positions: self.positions.clone(),
            routes: self.routes.clone(),
            report: OnceLock::new(),
        }
    }
}

/// A violation of the good-drawing conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An edge polyline intersects itself or doubles back.
    SelfIntersection { edge: String },
    /// Two edges sharing an endpoint meet somewhere other than that endpoint.
    AdjacentContact { e: String, f: String },
    /// Independent edges touch without crossing (endpoint on interior,
    /// endpoint on endpoint).
    DegenerateContact { e: String, f: String },
    /// Two edges share a collinear sub-segment.
    CollinearOverlap { e: String, f: String },
    /// Independent edges meet in more than one point.
    MultipleCrossings { e: String, f: String },
    /// Three or more edges pass through one point.
    SharedCrossingPoint { edges: Vec<String> },
    /// An edge passes through the position of a vertex it is not incident to,
    /// or through its own endpoint's position mid-route.
    VertexOnEdge { vertex: String, edge: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SelfIntersection { edge } => write!(f, "edge {edge} intersects itself"),
            Violation::AdjacentContact { e, f: g } => {
                write!(
                    f,
                    "adjacent edges {e} and {g} meet outside their shared endpoint"
                )
            }
            Violation::DegenerateContact { e, f: g } => {
                write!(f, "edges {e} and {g} touch without crossing")
            }
            Violation::CollinearOverlap { e, f: g } => {
                write!(f, "edges {e} and {g} overlap along a segment")
            }
            Violation::MultipleCrossings { e, f: g } => {
                write!(
                    f,
                    "independent edges {e} and {g} meet in more than one point"
                )
            }
            Violation::SharedCrossingPoint { edges } => {
                write!(
                    f,
                    "three or more edges through one point: {}",
                    edges.join(", ")
                )
            }
            Violation::VertexOnEdge { vertex, edge } => {
                write!(f, "edge {edge} passes through vertex {vertex}")
            }
        }
    }
}

/// One validated crossing: an unordered pair of edges and the exact point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub e: EdgeId,
    pub f: EdgeId,
    pub point: Point,
}

/// Validation outcome plus the crossing set.
#[derive(Debug, Clone)]
pub struct CrossingReport {
    pub violations: Vec<Violation>,
    pub crossings: Vec<Crossing>,
}

impl CrossingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// `cr_φ(E)`: the total number of crossings.
    pub fn total(&self) -> u64 {
        self.crossings.len() as u64
    }
}

impl Drawing {
    /// Builds a drawing, checking the structural invariants: one position per
    /// vertex, all positions distinct, each route running endpoint to
    /// endpoint with no zero-length segment.
    pub fn new(
        graph: PartitionedGraph,
        positions: Vec<Point>,
        routes: Vec<Vec<Point>>,
    ) -> Result<Self> {
        if positions.len() != graph.vertex_count() {
            return Err(Error::invalid(format!(
                "{} positions for {} vertices",
                positions.len(),
                graph.vertex_count()
            )));
        }
        if routes.len() != graph.edge_count() {
            return Err(Error::invalid(format!(
                "{} routes for {} edges",
                routes.len(),
                graph.edge_count()
            )));
        }
        for (i, p) in positions.iter().enumerate() {
            for (j, q) in positions.iter().enumerate().skip(i + 1) {
                if p == q {
                    return Err(Error::invalid(format!(
                        "vertices {} and {} share a position",
                        graph.vertex_name(VertexId(i as u32)),
                        graph.vertex_name(VertexId(j as u32))
                    )));
                }
            }
        }
        for (idx, route) in routes.iter().enumerate() {
            let e = EdgeId(idx as u32);
            let (u, v) = graph.edge_endpoints(e);
            if route.len() < 2 {
                return Err(Error::invalid(format!(
                    "route of {} too short",
                    graph.edge_name(e)
                )));
            }
            if route[0] != positions[u.0 as usize]
                || route[route.len() - 1] != positions[v.0 as usize]
            {
                return Err(Error::invalid(format!(
                    "route of {} does not join its endpoints",
                    graph.edge_name(e)
                )));
            }
            if route.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!(
                    "route of {} has a zero-length segment",
                    graph.edge_name(e)
                )));
            }
        }
        Ok(Drawing {
            graph,
            positions,
            routes,
            report: OnceLock::new(),
        })
    }

    pub fn graph(&self) -> &PartitionedGraph {
        &self.graph
    }

    pub fn position(&self, v: VertexId) -> &Point {
        &self.positions[v.0 as usize]
    }

    pub fn route(&self, e: EdgeId) -> &[Point] {
        &self.routes[e.0 as usize]
    }

    /// Bend points of an edge: the route without its two endpoints.
    pub fn bends(&self, e: EdgeId) -> &[Point] {
        let r = &self.routes[e.0 as usize];
        &r[1..r.len() - 1]
    }

    /// Applies an affine map with rational entries to every coordinate.
    /// The determinant must be nonzero (positive keeps orientation).
    pub fn affine(&self, m: [[super::Rat; 2]; 2], t: [super::Rat; 2]) -> Result<Drawing> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.is_zero() {
            return Err(Error::invalid("affine map must be invertible"));
        }
        let map = |p: &Point| {
            Point::new(
                &m[0][0] * &p.x + &m[0][1] * &p.y + &t[0],
                &m[1][0] * &p.x + &m[1][1] * &p.y + &t[1],
            )
        };
        Drawing::new(
            self.graph.clone(),
            self.positions.iter().map(&map).collect(),
            self.routes
                .iter()
                .map(|r| r.iter().map(&map).collect())
                .collect(),
        )
    }

    /// Validates the good-drawing conditions and collects the crossing set.
    /// The result is computed once and cached.
    pub fn validate(&self) -> &CrossingReport {
        self.report.get_or_init(|| self.compute_report())
    }

    fn compute_report(&self) -> CrossingReport {
        let g = &self.graph;
        let mut violations = Vec::new();
        let mut crossings: Vec<Crossing> = Vec::new();

        // Edges through vertex positions.
        for v in g.vertex_ids() {
            let p = self.position(v);
            for (idx, route) in self.routes.iter().enumerate() {
                let e = EdgeId(idx as u32);
                let (a, b) = g.edge_endpoints(e);
                let incident = a == v || b == v;
                for (si, seg) in route.windows(2).enumerate() {
                    if !point_on_segment(&seg[0], &seg[1], p) {
                        continue;
                    }
                    let at_start = si == 0 && *p == route[0];
                    let at_end = si + 2 == route.len() && *p == route[route.len() - 1];
                    if incident && (at_start || at_end) {
                        continue;
                    }
                    violations.push(Violation::VertexOnEdge {
                        vertex: g.vertex_name(v).to_string(),
                        edge: g.edge_name(e),
                    });
                    break;
                }
            }
        }

        // Per-edge simplicity.
        for (idx, route) in self.routes.iter().enumerate() {
            let e = EdgeId(idx as u32);
            let segs: Vec<(&Point, &Point)> = route.windows(2).map(|w| (&w[0], &w[1])).collect();
            let mut bad = false;
            for i in 0..segs.len() {
                for j in (i + 1)..segs.len() {
                    let contact = seg_contact(segs[i].0, segs[i].1, segs[j].0, segs[j].1);
                    if j == i + 1 {
                        // Consecutive segments share exactly the bend point;
                        // doubling back is rejected by `seg_contact` returning
                        // Overlap, a straight continuation returns Touch.
                        match contact {
                            SegContact::Touch(ref p) if p == segs[j].0 => {}
                            _ => bad = true,
                        }
                    } else if contact != SegContact::None {
                        bad = true;
                    }
                }
            }
            if bad {
                violations.push(Violation::SelfIntersection {
                    edge: g.edge_name(e),
                });
            }
        }

        // Pairwise analysis.
        for ei in 0..self.routes.len() {
            for fi in (ei + 1)..self.routes.len() {
                let e = EdgeId(ei as u32);
                let f = EdgeId(fi as u32);
                let (a, b) = g.edge_endpoints(e);
                let (c, d) = g.edge_endpoints(f);
                let shared: Option<&Point> = [a, b]
                    .iter()
                    .find(|v| **v == c || **v == d)
                    .map(|v| self.position(*v));

                let mut proper_points: Vec<Point> = Vec::new();
                let mut overlap = false;
                let mut bad_touch = false;
                for se in self.routes[ei].windows(2) {
                    for sf in self.routes[fi].windows(2) {
                        match seg_contact(&se[0], &se[1], &sf[0], &sf[1]) {
                            SegContact::None => {}
                            SegContact::Overlap => overlap = true,
                            SegContact::Proper(p) => {
                                if !proper_points.contains(&p) {
                                    proper_points.push(p);
                                }
                            }
                            SegContact::Touch(p) => match shared {
                                Some(sp) if *sp == p => {}
                                _ => bad_touch = true,
                            },
                        }
                    }
                }

                if overlap {
                    violations.push(Violation::CollinearOverlap {
                        e: g.edge_name(e),
                        f: g.edge_name(f),
                    });
                }
                match shared {
                    Some(_) => {
                        // Adjacent edges: only the shared endpoint may be met.
                        if bad_touch || !proper_points.is_empty() {
                            violations.push(Violation::AdjacentContact {
                                e: g.edge_name(e),
                                f: g.edge_name(f),
                            });
                        }
                    }
                    None => {
                        if bad_touch {
                            violations.push(Violation::DegenerateContact {
                                e: g.edge_name(e),
                                f: g.edge_name(f),
                            });
                        }
                        if proper_points.len() > 1 {
                            violations.push(Violation::MultipleCrossings {
                                e: g.edge_name(e),
                                f: g.edge_name(f),
                            });
                        }
                        if proper_points.len() == 1 {
                            crossings.push(Crossing {
                                e,
                                f,
                                point: proper_points.pop().unwrap(),
                            });
                        }
                    }
                }
            }
        }

        // No point may carry two crossings (three or more edges through it).
        let mut by_point: BTreeMap<&Point, Vec<usize>> = BTreeMap::new();
        for (i, c) in crossings.iter().enumerate() {
            by_point.entry(&c.point).or_default().push(i);
        }
        for (_, group) in by_point {
            if group.len() > 1 {
                let mut edges: Vec<String> = group
                    .iter()
                    .flat_map(|&i| [g.edge_name(crossings[i].e), g.edge_name(crossings[i].f)])
                    .collect();
                edges.sort();
                edges.dedup();
                violations.push(Violation::SharedCrossingPoint { edges });
            }
        }

        CrossingReport {
            violations,
            crossings,
        }
    }
}

/// `cr_φ(A)` when `b` is absent, `cr_φ(A,B)` otherwise.
///
/// Rejects invalid drawings with their violation list. Each unordered
/// crossing pair is counted once.
pub fn count_crossings(d: &Drawing, a: &EdgeSet, b: Option<&EdgeSet>) -> Result<u64> {
    let fp = d.graph().fingerprint();
    if a.fingerprint() != fp || b.is_some_and(|b| b.fingerprint() != fp) {
        return Err(Error::invalid(
            "edge set does not belong to the drawing's graph",
        ));
    }
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::InvalidDrawing(report.violations.clone()));
    }
    let count = report
        .crossings
        .iter()
        .filter(|c| match b {
            None => a.contains(c.e) && a.contains(c.f),
            Some(b) => (a.contains(c.e) && b.contains(c.f)) || (a.contains(c.f) && b.contains(c.e)),
        })
        .count();
    Ok(count as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    fn square_k4() -> Drawing {
        // K_4 on a unit square with both diagonals: one crossing.
        let g = PartitionedGraph::complete_multipartite(&[1, 1, 1, 1]).unwrap();
        let pos = vec![
            Point::int(0, 0),
            Point::int(1, 0),
            Point::int(1, 1),
            Point::int(0, 1),
        ];
        let routes = g
            .edges()
            .iter()
            .map(|&(u, v)| vec![pos[u.0 as usize].clone(), pos[v.0 as usize].clone()])
            .collect();
        Drawing::new(g, pos, routes).unwrap()
    }

    #[test]
    fn k4_square_has_one_crossing() {
        let d = square_k4();
        let r = d.validate();
        assert!(r.is_valid(), "{:?}", r.violations);
        assert_eq!(r.total(), 1);
        assert_eq!(r.crossings[0].point, Point::frac(1, 2, 1, 2));
    }

    #[test]
    fn collinear_overlap_is_rejected() {
        // Edges a1-b1 and a1-b2 both run straight along the x axis and share
        // the stretch [0,2] x {0}.
        let g = PartitionedGraph::complete_multipartite(&[2, 2]).unwrap();
        let pos = vec![
            Point::int(0, 0),
            Point::int(4, 1),
            Point::int(2, 0),
            Point::int(6, 0),
        ];
        let routes = g
            .edges()
            .iter()
            .map(|&(u, v)| vec![pos[u.0 as usize].clone(), pos[v.0 as usize].clone()])
            .collect();
        let d = Drawing::new(g, pos, routes).unwrap();
        let report = d.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::CollinearOverlap { .. })));
    }

    #[test]
    fn degenerate_touch_is_rejected() {
        // Independent edges touching at one point without crossing.
        let g = PartitionedGraph::complete_multipartite(&[2, 2]).unwrap();
        // Edges a1-b1 and a2-b2 are independent. Let a2-b2 touch the interior
        // of a1-b1 at (1,0) and bounce back up.
        let pos = vec![
            Point::int(0, 0), // a1
            Point::int(0, 2), // a2
            Point::int(2, 0), // b1
            Point::int(2, 2), // b2
        ];
        let mut routes = Vec::new();
        for &(u, v) in g.edges() {
            let (un, vn) = (g.vertex_name(u), g.vertex_name(v));
            let mut r = vec![pos[u.0 as usize].clone(), pos[v.0 as usize].clone()];
            if (un, vn) == ("a2", "b2") || (vn, un) == ("a2", "b2") {
                r = vec![
                    pos[u.0 as usize].clone(),
                    Point::int(1, 0),
                    pos[v.0 as usize].clone(),
                ];
            }
            routes.push(r);
        }
        let d = Drawing::new(g, pos, routes).unwrap();
        let report = d.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DegenerateContact { .. })));
    }

    #[test]
    fn vertex_on_edge_is_rejected() {
        let g = PartitionedGraph::complete_multipartite(&[1, 2]).unwrap();
        // a1 at origin, b1 and b2 to the right; edge a1-b2 passes through b1.
        let pos = vec![Point::int(0, 0), Point::int(1, 0), Point::int(2, 0)];
        let routes = g
            .edges()
            .iter()
            .map(|&(u, v)| vec![pos[u.0 as usize].clone(), pos[v.0 as usize].clone()])
            .collect();
        let d = Drawing::new(g, pos, routes).unwrap();
        assert!(d
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, Violation::VertexOnEdge { .. })));
    }

    #[test]
    fn structural_invariants_enforced() {
        let g = PartitionedGraph::complete_multipartite(&[1, 1]).unwrap();
        // Missing a position.
        assert!(Drawing::new(g.clone(), vec![Point::int(0, 0)], vec![]).is_err());
        // Duplicate positions.
        let pos = vec![Point::int(0, 0), Point::int(0, 0)];
        let routes = vec![vec![Point::int(0, 0), Point::int(0, 0)]];
        assert!(Drawing::new(g.clone(), pos, routes).is_err());
        // Route that does not join its endpoints.
        let pos = vec![Point::int(0, 0), Point::int(1, 0)];
        let routes = vec![vec![Point::int(0, 0), Point::int(2, 2)]];
        assert!(Drawing::new(g.clone(), pos, routes).is_err());
        // Zero-length segment.
        let pos = vec![Point::int(0, 0), Point::int(1, 0)];
        let routes = vec![vec![Point::int(0, 0), Point::int(0, 0), Point::int(1, 0)]];
        assert!(Drawing::new(g, pos, routes).is_err());
    }

    #[test]
    fn count_crossings_rejects_invalid() {
        let g = PartitionedGraph::complete_multipartite(&[1, 2]).unwrap();
        let pos = vec![Point::int(0, 0), Point::int(1, 0), Point::int(2, 0)];
        let routes = g
            .edges()
            .iter()
            .map(|&(u, v)| vec![pos[u.0 as usize].clone(), pos[v.0 as usize].clone()])
            .collect();
        let d = Drawing::new(g, pos, routes).unwrap();
        let all = d.graph().all_edges();
        assert!(matches!(
            count_crossings(&d, &all, None),
            Err(Error::InvalidDrawing(_))
        ));
    }

    #[test]
    fn single_edge_set_never_self_crosses() {
        let d = square_k4();
        let g = d.graph();
        let one = g.edge_set_from([EdgeId(0)]).unwrap();
        assert_eq!(count_crossings(&d, &one, None).unwrap(), 0);
        let empty = g.empty_edge_set();
        assert_eq!(
            count_crossings(&d, &empty, Some(&g.all_edges())).unwrap(),
            0
        );
    }

    #[test]
    fn affine_invariance_of_counts() {
        let d = square_k4();
        let before = d.validate().total();
        let m = [[rat(2, 1), rat(1, 1)], [rat(1, 1), rat(1, 1)]];
        let t = [rat(-3, 2), rat(5, 7)];
        let d2 = d.affine(m, t).unwrap();
        let r2 = d2.validate();
        assert!(r2.is_valid());
        assert_eq!(r2.total(), before);
    }
}
