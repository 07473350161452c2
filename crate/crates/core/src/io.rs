//! The `crossing-drawing/1` JSON format and edge-set selectors.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{format_rational, parse_rational, Drawing, Point};
use crate::graph::{EdgeSet, PartitionedGraph, VertexId};

pub const DRAWING_FORMAT: &str = "crossing-drawing/1";
pub const REPORT_FORMAT: &str = "crossing-report/1";
pub const CENSUS_FORMAT: &str = "crossing-census/1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DrawingFile {
    format: String,
    parts: Vec<Vec<String>>,
    positions: BTreeMap<String, [String; 2]>,
    edges: Vec<EdgeFile>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    u: String,
    v: String,
    bends: Vec<[String; 2]>,
}

/// Serializes a drawing to `crossing-drawing/1` JSON.
pub fn drawing_to_json(d: &Drawing) -> String {
    let g = d.graph();
    let parts = (0..g.part_count())
        .map(|i| {
            g.part_members(i)
                .iter()
                .map(|&v| g.vertex_name(v).to_string())
                .collect()
        })
        .collect();
    let positions = g
        .vertex_ids()
        .map(|v| {
            let p = d.position(v);
            (
                g.vertex_name(v).to_string(),
                [format_rational(&p.x), format_rational(&p.y)],
            )
        })
        .collect();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| EdgeFile {
            u: g.vertex_name(u).to_string(),
            v: g.vertex_name(v).to_string(),
            bends: d
                .bends(crate::graph::EdgeId(i as u32))
                .iter()
                .map(|p| [format_rational(&p.x), format_rational(&p.y)])
                .collect(),
        })
        .collect();
    let file = DrawingFile {
        format: DRAWING_FORMAT.to_string(),
        parts,
        positions,
        edges,
    };
    serde_json::to_string_pretty(&file).expect("drawing serialization cannot fail")
}

/// Parses `crossing-drawing/1` JSON back into a drawing.
///
/// The parts must describe a complete multipartite graph and the edge list
/// must cover every cross-part pair exactly once. Unknown fields, malformed
/// rationals, and inconsistent routes are rejected.
pub fn drawing_from_json(text: &str) -> Result<Drawing> {
    let file: DrawingFile = serde_json::from_str(text)?;
    if file.format != DRAWING_FORMAT {
        return Err(Error::Format(format!(
            "unsupported format {:?}, expected {DRAWING_FORMAT:?}",
            file.format
        )));
    }
    let named: Vec<(String, Vec<String>)> = file
        .parts
        .iter()
        .enumerate()
        .map(|(i, members)| (derive_part_name(i, members), members.clone()))
        .collect();
    let graph = PartitionedGraph::from_named_parts(&named)?;

    let mut positions: Vec<Option<Point>> = vec![None; graph.vertex_count()];
    for (name, [x, y]) in &file.positions {
        let v = graph
            .vertex_by_name(name)
            .ok_or_else(|| Error::Format(format!("position for unknown vertex {name:?}")))?;
        positions[v.0 as usize] = Some(Point::new(parse_rational(x)?, parse_rational(y)?));
    }
    let positions: Vec<Point> = positions
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            p.ok_or_else(|| {
                Error::Format(format!(
                    "vertex {} has no position",
                    graph.vertex_name(VertexId(i as u32))
                ))
            })
        })
        .collect::<Result<_>>()?;

    let mut routes: Vec<Option<Vec<Point>>> = vec![None; graph.edge_count()];
    for ef in &file.edges {
        let u = graph
            .vertex_by_name(&ef.u)
            .ok_or_else(|| Error::Format(format!("edge endpoint {:?} unknown", ef.u)))?;
        let v = graph
            .vertex_by_name(&ef.v)
            .ok_or_else(|| Error::Format(format!("edge endpoint {:?} unknown", ef.v)))?;
        let e = graph
            .edge_between(u, v)
            .ok_or_else(|| Error::Format(format!("{}-{} is not an edge", ef.u, ef.v)))?;
        if routes[e.0 as usize].is_some() {
            return Err(Error::Format(format!("duplicate edge {}-{}", ef.u, ef.v)));
        }
        let mut bends: Vec<Point> = ef
            .bends
            .iter()
            .map(|[x, y]| Ok(Point::new(parse_rational(x)?, parse_rational(y)?)))
            .collect::<Result<_>>()?;
        let (a, _) = graph.edge_endpoints(e);
        if a != u {
            bends.reverse();
        }
        let (a, b) = graph.edge_endpoints(e);
        let mut route = vec![positions[a.0 as usize].clone()];
        route.extend(bends);
        route.push(positions[b.0 as usize].clone());
        routes[e.0 as usize] = Some(route);
    }
    let routes: Vec<Vec<Point>> = routes
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            r.ok_or_else(|| {
                Error::Format(format!(
                    "missing edge {}",
                    graph.edge_name(crate::graph::EdgeId(i as u32))
                ))
            })
        })
        .collect::<Result<_>>()?;

    Drawing::new(graph, positions, routes)
}

/// Part names are recovered from the shared alphabetic prefix of the member
/// names (`z1`, `z2` -> `Z`); parts without one get `P1`, `P2`, ...
fn derive_part_name(index: usize, members: &[String]) -> String {
    let prefix_of =
        |s: &String| -> String { s.chars().take_while(|c| c.is_ascii_alphabetic()).collect() };
    match members.first() {
        Some(first) => {
            let p = prefix_of(first);
            if !p.is_empty() && members.iter().all(|m| prefix_of(m) == p) {
                p.to_uppercase()
            } else {
                format!("P{}", index + 1)
            }
        }
        None => format!("P{}", index + 1),
    }
}

impl PartitionedGraph {
    /// Builds a complete multipartite graph from explicit member names.
    pub fn from_named_parts(parts: &[(String, Vec<String>)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("part list must be nonempty"));
        }
        let mut seen = BTreeSet::new();
        for (name, members) in parts {
            if members.is_empty() {
                return Err(Error::invalid(format!("part {name} is empty")));
            }
            for m in members {
                if !seen.insert(m.clone()) {
                    return Err(Error::invalid(format!("duplicate vertex name {m:?}")));
                }
            }
        }
        let names: BTreeSet<&String> = parts.iter().map(|(n, _)| n).collect();
        if names.len() != parts.len() {
            return Err(Error::invalid("duplicate part name"));
        }
        Self::assemble_named(parts)
    }
}

/// Parses an edge-set selector against a graph.
///
/// A selector is a comma-separated union of atoms; each atom is a vertex name
/// (`z1`, giving `E(z1)`), a part name (`Z`, giving the union of `E(v)` over
/// the part), or a concatenation of two part names (`XY`, giving `E_{XY}`).
pub fn parse_edge_selector(g: &PartitionedGraph, selector: &str) -> Result<EdgeSet> {
    let mut acc = g.empty_edge_set();
    for atom in selector.split(',') {
        let atom = atom.trim();
        if atom.is_empty() {
            return Err(Error::invalid(format!(
                "empty atom in selector {selector:?}"
            )));
        }
        acc = acc.union(&parse_atom(g, atom)?);
    }
    Ok(acc)
}

fn parse_atom(g: &PartitionedGraph, atom: &str) -> Result<EdgeSet> {
    if let Some(v) = g.vertex_by_name(atom) {
        return g.incident_edges(v);
    }
    if let Some(i) = g.part_index(atom) {
        return g.part_star(i);
    }
    // Two concatenated part names, e.g. "XY".
    for split in 1..atom.len() {
        let (a, b) = atom.split_at(split);
        if let (Some(i), Some(j)) = (g.part_index(a), g.part_index(b)) {
            if i != j {
                return g.edge_set_between(i, j);
            }
        }
    }
    Err(Error::invalid(format!(
        "selector atom {atom:?} names no vertex, part, or part pair of {g}"
    )))
}
