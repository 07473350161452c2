//! Drawing generators: classic Zarankiewicz drawings of `K_{m,n}` and the
//! optimal spine drawings of the catalogued families.
//!
//! The generators pick integer-grid anchor points with a small rational
//! clearance for near-axis detours, then run the validator. On a degeneracy
//! violation the clearance is halved (and anchor coordinates are stretched
//! for the Zarankiewicz grid) and the attempt is retried a bounded number of
//! times; correctness of the final drawing rests entirely on the validator
//! and the count-equals-formula checks, never on float luck.

use num::Zero;

use crate::error::{Error, Result};
use crate::families::{self, Family, RouteKind, Side, SpineLayout};
use crate::geometry::{Drawing, Point, Rat};
use crate::graph::{PartitionedGraph, VertexId};

const MAX_ATTEMPTS: u32 = 8;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// The classic drawing of `K_{m,n}` with `Z(m,n)` crossings: the `m`-part
/// split over the positive and negative y axis, the `n`-part over the x axis,
/// all edges straight.
pub fn zarankiewicz_drawing(m: usize, n: usize) -> Result<Drawing> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("both sides must be nonempty"));
    }
    let g = PartitionedGraph::complete_multipartite_named(&[
        ("A".to_string(), m),
        ("B".to_string(), n),
    ])?;
    let mut last = None;
    for attempt in 0..MAX_ATTEMPTS {
        // Stretched coordinate k + attempt * k^2 / 97 keeps each half of an
        // axis strictly ordered, so the crossing count is unaffected, while
        // shifting any accidental triple point apart.
        let coord = |k: i64| rat(k, 1) + rat(attempt as i64 * k * k, 97);
        let axis_split = |count: usize, idx: usize| -> Rat {
            let up = count.div_ceil(2);
            if idx < up {
                coord((idx + 1) as i64)
            } else {
                -coord((idx - up + 1) as i64)
            }
        };
        let mut positions = Vec::new();
        for i in 0..m {
            positions.push(Point::new(Rat::zero(), axis_split(m, i)));
        }
        for j in 0..n {
            positions.push(Point::new(axis_split(n, j), Rat::zero()));
        }
        let routes = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                vec![
                    positions[u.0 as usize].clone(),
                    positions[v.0 as usize].clone(),
                ]
            })
            .collect();
        let d = Drawing::new(g.clone(), positions, routes)?;
        if d.validate().is_valid() {
            return Ok(d);
        }
        last = Some(d.validate().violations.first().cloned());
    }
    Err(Error::invalid(format!(
        "could not realize a clean K_{{{m},{n}}} drawing: {:?}",
        last.flatten()
    )))
}

/// Builds the catalogued optimal drawing of `family` at `n`.
///
/// The drawing's total crossing count equals the family's formula value;
/// tests pin that equality for every family and n.
pub fn construct_family(family: &str, n: usize) -> Result<Drawing> {
    let fam = families::lookup(family)
        .ok_or_else(|| Error::invalid(format!("unknown family {family:?}")))?;
    let layout = fam.layout().ok_or_else(|| {
        Error::invalid(format!(
            "family {} has no catalogued drawing construction",
            fam.code()
        ))
    })?;
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut last = None;
    for attempt in 0..MAX_ATTEMPTS {
        let d = spine_drawing(fam, layout, n, attempt)?;
        if d.validate().is_valid() {
            return Ok(d);
        }
        last = Some(d.validate().violations.first().cloned());
    }
    Err(Error::invalid(format!(
        "could not realize a clean {} drawing at n={n}: {:?}",
        fam.code(),
        last.flatten()
    )))
}

/// The spine layout for a constructible family.
pub fn layout_for(family: &str) -> Result<&'static SpineLayout> {
    let fam = families::lookup(family)
        .ok_or_else(|| Error::invalid(format!("unknown family {family:?}")))?;
    fam.layout().ok_or_else(|| {
        Error::invalid(format!(
            "family {} has no catalogued drawing construction",
            fam.code()
        ))
    })
}

/// Spine y coordinate for position `i` (0-based, top to bottom): two
/// vertices above the x axis, the rest below.
fn spine_height(i: usize) -> i64 {
    if i < 2 {
        2 - i as i64
    } else {
        1 - i as i64
    }
}

fn spine_drawing(
    fam: &dyn Family,
    layout: &SpineLayout,
    n: usize,
    attempt: u32,
) -> Result<Drawing> {
    let g = fam.graph(n)?;
    let z_part = g.part_index("Z").expect("family graphs have a Z part");
    let right = n.div_ceil(2) as i64;
    let left = (n / 2) as i64;

    // Clearance for near-axis runs, halved on every retry.
    let eps = rat(1, 8 * (n as i64 + 5) * (1 << attempt));
    let half = rat(1, 2);

    let mut positions: Vec<Option<Point>> = vec![None; g.vertex_count()];
    for (i, name) in layout.order.iter().enumerate() {
        let v = g
            .vertex_by_name(name)
            .ok_or_else(|| Error::invalid(format!("layout names unknown vertex {name}")))?;
        positions[v.0 as usize] = Some(Point::int(0, spine_height(i)));
    }
    for (j, &zv) in g.part_members(z_part).iter().enumerate() {
        let x = if (j as i64) < right {
            j as i64 + 1
        } else {
            -(j as i64 - right + 1)
        };
        positions[zv.0 as usize] = Some(Point::int(x, 0));
    }
    let positions: Vec<Point> = positions
        .into_iter()
        .map(|p| p.expect("all vertices placed"))
        .collect();

    // Arc lanes per side, inner arcs first: sort by enclosed span length.
    let mut arc_lane = std::collections::BTreeMap::new();
    for side in [Side::Left, Side::Right] {
        let mut arcs: Vec<(usize, usize)> = layout
            .routes
            .iter()
            .enumerate()
            .filter(|(_, r)| r.kind == RouteKind::Arc(side))
            .map(|(i, r)| {
                let a = layout.position(r.from).unwrap();
                let b = layout.position(r.to).unwrap();
                (i, a.abs_diff(b))
            })
            .collect();
        arcs.sort_by_key(|&(i, span)| (span, i));
        for (lane, (i, _)) in arcs.into_iter().enumerate() {
            arc_lane.insert(i, lane as i64);
        }
    }
    let far = |side: Side| -> i64 {
        match side {
            Side::Left => left,
            Side::Right => right,
        }
    };

    let mut routes: Vec<Option<Vec<Point>>> = vec![None; g.edge_count()];
    let mut set_route = |u: VertexId, v: VertexId, pts: Vec<Point>| {
        let e = g.edge_between(u, v).expect("route endpoints are adjacent");
        let (a, _) = g.edge_endpoints(e);
        let mut pts = pts;
        if a != u {
            pts.reverse();
        }
        routes[e.0 as usize] = Some(pts);
    };

    // Z edges are straight segments.
    for &zv in g.part_members(z_part) {
        for name in layout.order {
            let sv = g.vertex_by_name(name).unwrap();
            set_route(
                zv,
                sv,
                vec![
                    positions[zv.0 as usize].clone(),
                    positions[sv.0 as usize].clone(),
                ],
            );
        }
    }

    for (ri, route) in layout.routes.iter().enumerate() {
        let u = g.vertex_by_name(route.from).unwrap();
        let v = g.vertex_by_name(route.to).unwrap();
        let pu = positions[u.0 as usize].clone();
        let pv = positions[v.0 as usize].clone();
        let pts = match route.kind {
            RouteKind::Axis => vec![pu, pv],
            RouteKind::Run(side) => {
                let x = rat(side.sign(), 1) * &eps;
                let (top, bot) = if pu.y > pv.y { (&pu, &pv) } else { (&pv, &pu) };
                let mut pts = vec![
                    top.clone(),
                    Point::new(x.clone(), &top.y - &half),
                    Point::new(x.clone(), &bot.y + &half),
                    bot.clone(),
                ];
                if pu.y < pv.y {
                    pts.reverse();
                }
                pts
            }
            RouteKind::Arc(side) => {
                let lane = arc_lane[&ri];
                let radius = rat(side.sign() * (far(side) + 2 * (lane + 1)), 1);
                // Top segments fan upward with lane-increasing slope so that
                // nested arcs from a shared vertex stay nested; approach
                // segments descend gently enough to stay below every edge
                // into the arc's lower endpoint.
                let beta = rat(1 << lane, 8 * (1 << attempt));
                let gamma = rat(1, 8 * (1 << attempt));
                let (top, bot) = if pu.y > pv.y { (&pu, &pv) } else { (&pv, &pu) };
                let mut pts = vec![
                    top.clone(),
                    Point::new(radius.clone(), &top.y + &beta),
                    Point::new(radius.clone(), &bot.y + &gamma),
                    bot.clone(),
                ];
                if pu.y < pv.y {
                    pts.reverse();
                }
                pts
            }
        };
        set_route(u, v, pts);
    }

    let routes: Vec<Vec<Point>> = routes
        .into_iter()
        .map(|r| r.expect("every edge routed"))
        .collect();
    Drawing::new(g, positions, routes)
}
