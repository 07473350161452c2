//! Complete multipartite graphs with named parts and edge-set algebra.
//!
//! Vertices carry deterministic names derived from their part (part `X` with
//! two members yields `x1`, `x2`), edges are stored as sorted id pairs in a
//! fixed global order, and [`EdgeSet`] values are plain sets of edge ids tied
//! to their owning graph by a structural fingerprint. Everything here is
//! immutable after construction and safe to share across threads.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Index of a vertex within its graph's vertex table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Index of an edge within its graph's edge table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

#[derive(Debug, Clone)]
struct Vertex {
    name: String,
    part: usize,
}

#[derive(Debug, Clone)]
struct Part {
    name: String,
    members: Vec<VertexId>,
}

/// A complete multipartite graph `K_{a_1,...,a_k}` with an ordered partition.
///
/// Parts are disjoint and nonempty, every edge joins distinct parts, and for
/// graphs built by [`PartitionedGraph::complete_multipartite`] every
/// cross-part pair is present.
#[derive(Debug, Clone)]
pub struct PartitionedGraph {
    parts: Vec<Part>,
    vertices: Vec<Vertex>,
    edges: Vec<(VertexId, VertexId)>,
    by_name: BTreeMap<String, VertexId>,
    edge_index: BTreeMap<(VertexId, VertexId), EdgeId>,
    fingerprint: u64,
}

const DEFAULT_PART_NAMES: [&str; 12] = ["A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L"];

impl PartitionedGraph {
    /// Builds `K_{sizes[0],...,sizes[k-1]}` with default part names `A`, `B`, ...
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self> {
        if sizes.len() > DEFAULT_PART_NAMES.len() {
            return Err(Error::invalid(format!(
                "at most {} parts supported with default names",
                DEFAULT_PART_NAMES.len()
            )));
        }
        let named: Vec<(String, usize)> = sizes
            .iter()
            .enumerate()
            .map(|(i, &s)| (DEFAULT_PART_NAMES[i].to_string(), s))
            .collect();
        Self::complete_multipartite_named(&named)
    }

    /// Builds a complete multipartite graph with explicit part names.
    ///
    /// Vertex names are the lowercased part name followed by a 1-based index,
    /// so part `("Z", 3)` contributes `z1`, `z2`, `z3`.
    pub fn complete_multipartite_named(parts: &[(String, usize)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("part list must be nonempty"));
        }
        let mut names = BTreeSet::new();
        for (name, size) in parts {
            if *size == 0 {
                return Err(Error::invalid(format!("part {name} has size 0")));
            }
            if name.is_empty() || !names.insert(name.clone()) {
                return Err(Error::invalid(format!(
                    "bad or duplicate part name {name:?}"
                )));
            }
        }

        let mut vertices = Vec::new();
        let mut part_table = Vec::new();
        for (name, size) in parts {
            let mut members = Vec::new();
            for i in 0..*size {
                let id = VertexId(vertices.len() as u32);
                vertices.push(Vertex {
                    name: format!("{}{}", name.to_lowercase(), i + 1),
                    part: part_table.len(),
                });
                members.push(id);
            }
            part_table.push(Part {
                name: name.clone(),
                members,
            });
        }

        let mut edges = Vec::new();
        for u in 0..vertices.len() {
            for v in (u + 1)..vertices.len() {
                if vertices[u].part != vertices[v].part {
                    edges.push((VertexId(u as u32), VertexId(v as u32)));
                }
            }
        }

        Ok(Self::assemble(part_table, vertices, edges))
    }

    pub(crate) fn assemble_named(named: &[(String, Vec<String>)]) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut part_table = Vec::new();
        for (name, members) in named {
            let mut ids = Vec::new();
            for m in members {
                let id = VertexId(vertices.len() as u32);
                vertices.push(Vertex {
                    name: m.clone(),
                    part: part_table.len(),
                });
                ids.push(id);
            }
            part_table.push(Part {
                name: name.clone(),
                members: ids,
            });
        }
        let mut edges = Vec::new();
        for u in 0..vertices.len() {
            for v in (u + 1)..vertices.len() {
                if vertices[u].part != vertices[v].part {
                    edges.push((VertexId(u as u32), VertexId(v as u32)));
                }
            }
        }
        Ok(Self::assemble(part_table, vertices, edges))
    }

    fn assemble(
        parts: Vec<Part>,
        vertices: Vec<Vertex>,
        mut edges: Vec<(VertexId, VertexId)>,
    ) -> Self {
        edges.sort();
        let by_name = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.name.clone(), VertexId(i as u32)))
            .collect();
        let edge_index = edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, EdgeId(i as u32)))
            .collect();
        let mut hasher = DefaultHasher::new();
        for p in &parts {
            p.name.hash(&mut hasher);
            p.members.len().hash(&mut hasher);
        }
        for v in &vertices {
            v.name.hash(&mut hasher);
        }
        for e in &edges {
            e.hash(&mut hasher);
        }
        let fingerprint = hasher.finish();
        PartitionedGraph {
            parts,
            vertices,
            edges,
            by_name,
            edge_index,
            fingerprint,
        }
    }

    /// The subgraph induced by `vs`: parts restricted to `vs` (empty parts
    /// dropped), edges restricted to pairs inside `vs`. Vertex names persist.
    pub fn induced(&self, vs: &BTreeSet<VertexId>) -> Result<Self> {
        for &v in vs {
            if v.0 as usize >= self.vertices.len() {
                return Err(Error::invalid(format!("unknown vertex id {}", v.0)));
            }
        }
        let mut remap: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut vertices = Vec::new();
        let mut parts: Vec<Part> = Vec::new();
        for (pi, part) in self.parts.iter().enumerate() {
            let kept: Vec<VertexId> = part
                .members
                .iter()
                .copied()
                .filter(|m| vs.contains(m))
                .collect();
            if kept.is_empty() {
                continue;
            }
            let mut members = Vec::new();
            for old in kept {
                let id = VertexId(vertices.len() as u32);
                vertices.push(Vertex {
                    name: self.vertices[old.0 as usize].name.clone(),
                    part: parts.len(),
                });
                remap.insert(old, id);
                members.push(id);
            }
            let _ = pi;
            parts.push(Part {
                name: part.name.clone(),
                members,
            });
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| match (remap.get(&u), remap.get(&v)) {
                (Some(&a), Some(&b)) => Some(if a < b { (a, b) } else { (b, a) }),
                _ => None,
            })
            .collect();
        Ok(Self::assemble(parts, vertices, edges))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.members.len()).collect()
    }

    pub fn part_name(&self, i: usize) -> &str {
        &self.parts[i].name
    }

    pub fn part_members(&self, i: usize) -> &[VertexId] {
        &self.parts[i].members
    }

    pub fn part_index(&self, name: &str) -> Option<usize> {
        self.parts.iter().position(|p| p.name == name)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(|i| VertexId(i as u32))
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0 as usize].name
    }

    pub fn vertex_part(&self, v: VertexId) -> usize {
        self.vertices[v.0 as usize].part
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.by_name.get(name).copied()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0 as usize]
    }

    pub fn edge_name(&self, e: EdgeId) -> String {
        let (u, v) = self.edge_endpoints(e);
        format!("{}-{}", self.vertex_name(u), self.vertex_name(v))
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edge_index.get(&key).copied()
    }

    /// True when the two edges share an endpoint.
    pub fn adjacent_edges(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edge_endpoints(e);
        let (c, d) = self.edge_endpoints(f);
        a == c || a == d || b == c || b == d
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// `E_{A_iA_j}`: exactly the edges between parts `i` and `j`.
    pub fn edge_set_between(&self, i: usize, j: usize) -> Result<EdgeSet> {
        if i == j {
            return Err(Error::invalid(
                "edge set between a part and itself is empty by definition",
            ));
        }
        if i >= self.parts.len() || j >= self.parts.len() {
            return Err(Error::invalid(format!("part index out of range: {i}, {j}")));
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| {
                let (pu, pv) = (self.vertex_part(u), self.vertex_part(v));
                (pu == i && pv == j) || (pu == j && pv == i)
            })
            .map(|(idx, _)| EdgeId(idx as u32))
            .collect();
        Ok(EdgeSet {
            fingerprint: self.fingerprint,
            edges,
        })
    }

    /// `E(v)`: all edges incident with `v`.
    pub fn incident_edges(&self, v: VertexId) -> Result<EdgeSet> {
        if v.0 as usize >= self.vertices.len() {
            return Err(Error::invalid(format!("unknown vertex id {}", v.0)));
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(idx, _)| EdgeId(idx as u32))
            .collect();
        Ok(EdgeSet {
            fingerprint: self.fingerprint,
            edges,
        })
    }

    /// Union of `E(v)` over every vertex of part `i`.
    pub fn part_star(&self, i: usize) -> Result<EdgeSet> {
        if i >= self.parts.len() {
            return Err(Error::invalid(format!("part index out of range: {i}")));
        }
        let mut set = self.empty_edge_set();
        for &v in &self.parts[i].members {
            set = set.union(&self.incident_edges(v)?);
        }
        Ok(set)
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet {
            fingerprint: self.fingerprint,
            edges: (0..self.edges.len() as u32).map(EdgeId).collect(),
        }
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet {
            fingerprint: self.fingerprint,
            edges: BTreeSet::new(),
        }
    }

    pub fn edge_set_from(&self, ids: impl IntoIterator<Item = EdgeId>) -> Result<EdgeSet> {
        let edges: BTreeSet<EdgeId> = ids.into_iter().collect();
        if let Some(bad) = edges.iter().find(|e| e.0 as usize >= self.edges.len()) {
            return Err(Error::invalid(format!("unknown edge id {}", bad.0)));
        }
        Ok(EdgeSet {
            fingerprint: self.fingerprint,
            edges,
        })
    }
}

impl fmt::Display for PartitionedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self
            .parts
            .iter()
            .map(|p| p.members.len().to_string())
            .collect();
        write!(f, "K_{{{}}}", sizes.join(","))
    }
}

/// A set of edge ids of one graph. Pure value type; all set operations are
/// checked against the owning graph's fingerprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSet {
    fingerprint: u64,
    edges: BTreeSet<EdgeId>,
}

impl EdgeSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().copied()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    fn check(&self, other: &EdgeSet) {
        assert_eq!(
            self.fingerprint, other.fingerprint,
            "edge sets belong to different graphs"
        );
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        self.check(other);
        EdgeSet {
            fingerprint: self.fingerprint,
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        self.check(other);
        EdgeSet {
            fingerprint: self.fingerprint,
            edges: self.edges.intersection(&other.edges).copied().collect(),
        }
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        self.check(other);
        EdgeSet {
            fingerprint: self.fingerprint,
            edges: self.edges.difference(&other.edges).copied().collect(),
        }
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.check(other);
        self.edges.is_disjoint(&other.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_multipartite_edge_counts() {
        // K_5 as five singleton parts.
        let k5 = PartitionedGraph::complete_multipartite(&[1, 1, 1, 1, 1]).unwrap();
        assert_eq!(k5.vertex_count(), 5);
        assert_eq!(k5.edge_count(), 10);

        let k23 = PartitionedGraph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(k23.vertex_count(), 5);
        assert_eq!(k23.edge_count(), 6);

        // Sum over part pairs: 2+2+4+4+8+8 = 28.
        let g = PartitionedGraph::complete_multipartite(&[1, 2, 2, 4]).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 28);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(PartitionedGraph::complete_multipartite(&[]).is_err());
        assert!(PartitionedGraph::complete_multipartite(&[2, 0, 1]).is_err());
    }

    #[test]
    fn vertex_names_are_deterministic() {
        let g = PartitionedGraph::complete_multipartite_named(&[
            ("X".to_string(), 1),
            ("Z".to_string(), 3),
        ])
        .unwrap();
        assert_eq!(g.vertex_name(VertexId(0)), "x1");
        assert_eq!(g.vertex_name(VertexId(3)), "z3");
        assert_eq!(g.vertex_by_name("z2"), Some(VertexId(2)));
    }

    #[test]
    fn edge_set_between_parts() {
        let g = PartitionedGraph::complete_multipartite(&[1, 2, 2]).unwrap();
        assert_eq!(g.edge_set_between(1, 2).unwrap().len(), 4);
        let g = PartitionedGraph::complete_multipartite(&[1, 4, 3]).unwrap();
        assert_eq!(g.edge_set_between(0, 1).unwrap().len(), 4);
        let g = PartitionedGraph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(g.edge_set_between(0, 1).unwrap().len(), g.edge_count());
        assert!(g.edge_set_between(0, 0).is_err());
        assert!(g.edge_set_between(0, 7).is_err());
    }

    #[test]
    fn incident_edge_degrees() {
        let g = PartitionedGraph::complete_multipartite(&[1, 1, 1, 1, 6]).unwrap();
        let z3 = g.vertex_by_name("e3").unwrap();
        assert_eq!(g.incident_edges(z3).unwrap().len(), 4);

        let g = PartitionedGraph::complete_multipartite(&[1, 2, 2, 3]).unwrap();
        let z = g.vertex_by_name("d2").unwrap();
        assert_eq!(g.incident_edges(z).unwrap().len(), 5);

        let k5 = PartitionedGraph::complete_multipartite(&[1, 1, 1, 1, 1]).unwrap();
        for v in k5.vertex_ids() {
            assert_eq!(k5.incident_edges(v).unwrap().len(), 4);
        }
        assert!(g.incident_edges(VertexId(99)).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        // K_{1,1,1,2,1} restricted to one vertex per part is a K_5.
        let g = PartitionedGraph::complete_multipartite_named(&[
            ("X".to_string(), 1),
            ("Y".to_string(), 1),
            ("S".to_string(), 1),
            ("T".to_string(), 2),
            ("Z".to_string(), 1),
        ])
        .unwrap();
        let keep: BTreeSet<VertexId> = ["x1", "y1", "s1", "t1", "z1"]
            .iter()
            .map(|n| g.vertex_by_name(n).unwrap())
            .collect();
        let sub = g.induced(&keep).unwrap();
        assert_eq!(sub.part_sizes(), vec![1, 1, 1, 1, 1]);
        assert_eq!(sub.edge_count(), 10);

        // K_{1,2,2,n} restricted to the non-Z parts is K_{1,2,2}.
        let g = PartitionedGraph::complete_multipartite_named(&[
            ("X".to_string(), 1),
            ("Y".to_string(), 2),
            ("U".to_string(), 2),
            ("Z".to_string(), 4),
        ])
        .unwrap();
        let keep: BTreeSet<VertexId> = g.vertex_ids().filter(|&v| g.vertex_part(v) != 3).collect();
        let sub = g.induced(&keep).unwrap();
        assert_eq!(sub.part_sizes(), vec![1, 2, 2]);
        assert_eq!(sub.edge_count(), 8);

        // Identity on the full vertex set.
        let all: BTreeSet<VertexId> = g.vertex_ids().collect();
        let same = g.induced(&all).unwrap();
        assert_eq!(same.edge_count(), g.edge_count());
        assert_eq!(same.part_sizes(), g.part_sizes());

        // Idempotent and monotone under inclusion.
        let sub2 = sub.induced(&sub.vertex_ids().collect()).unwrap();
        assert_eq!(sub2.edge_count(), sub.edge_count());
    }

    #[test]
    fn edge_set_algebra() {
        let g = PartitionedGraph::complete_multipartite(&[1, 2, 2]).unwrap();
        let a = g.edge_set_between(0, 1).unwrap();
        let b = g.edge_set_between(1, 2).unwrap();
        assert!(a.is_disjoint(&b));
        assert_eq!(a.union(&b).len(), a.len() + b.len());

        // incident_edges(v) meets E_{ij} iff v lies in part i or j.
        for v in g.vertex_ids() {
            let star = g.incident_edges(v).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    if i == j {
                        continue;
                    }
                    let between = g.edge_set_between(i, j).unwrap();
                    let touches = g.vertex_part(v) == i || g.vertex_part(v) == j;
                    assert_eq!(!star.intersection(&between).is_empty(), touches);
                }
            }
        }
    }
}
