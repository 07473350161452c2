//! Census of good drawings of tiny graphs.
//!
//! A good drawing is captured combinatorially as a crossing configuration
//! plus a sphere embedding of its planarization in which the two edges of
//! every crossing alternate around their dummy vertex. Two drawings belong
//! to the same class when some relabeling by a graph automorphism (with
//! dummies following their edge pairs) makes the embeddings equal, up to
//! reflection of the whole sphere.
//!
//! Enumeration is brute force over crossing pair sets, per-edge crossing
//! orders, and rotation systems, filtered by the Euler genus-0 condition;
//! the intended inputs have at most 6 vertices and 10 edges.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formulas::family_formula;
use crate::geometry::{count_crossings, Drawing};
use crate::graph::{EdgeId, PartitionedGraph, VertexId};
use crate::planarity::{is_planar, trace_faces, Rotation, SimpleGraph};
use crate::solver::{planarize, CrossingConfiguration};

/// One face of an embedded planarization.
#[derive(Debug, Clone)]
pub struct Face {
    /// Directed derived-edge cycle (derived vertex ids).
    pub walk: Vec<(usize, usize)>,
    /// Original (non-dummy) vertices on the boundary.
    pub original_boundary: BTreeSet<VertexId>,
}

impl Face {
    pub fn original_count(&self) -> usize {
        self.original_boundary.len()
    }
}

/// An isomorphism class of good drawings.
#[derive(Debug, Clone)]
pub struct DrawingClass {
    pub config: CrossingConfiguration,
    pub rotation: Rotation,
    pub code: String,
    pub crossings: u64,
    pub faces: Vec<Face>,
}

/// Faces of an embedded planarization; boundary counts exclude dummies.
pub fn faces_of(g: &PartitionedGraph, rotation: &Rotation) -> Vec<Face> {
    let n = g.vertex_count();
    trace_faces(rotation)
        .into_iter()
        .map(|walk| {
            let original_boundary = walk
                .iter()
                .map(|&(u, _)| u)
                .filter(|&u| u < n)
                .map(|u| VertexId(u as u32))
                .collect();
            Face {
                walk,
                original_boundary,
            }
        })
        .collect()
}

/// All automorphisms of a complete multipartite graph, as vertex
/// permutations: member permutations within parts composed with swaps of
/// equal-size parts.
pub fn automorphisms(g: &PartitionedGraph) -> Vec<Vec<u32>> {
    let sizes = g.part_sizes();
    let k = sizes.len();

    // Part-level bijections preserving sizes.
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &s) in sizes.iter().enumerate() {
        groups.entry(s).or_default().push(i);
    }
    let group_perms: Vec<Vec<Vec<usize>>> = groups
        .values()
        .map(|idxs| idxs.iter().copied().permutations(idxs.len()).collect())
        .collect();
    let mut part_maps: Vec<Vec<usize>> = Vec::new();
    for combo in group_perms.iter().multi_cartesian_product() {
        let mut map = vec![0usize; k];
        for (group, perm) in groups.values().zip(combo) {
            for (src, dst) in group.iter().zip(perm.iter()) {
                map[*src] = *dst;
            }
        }
        part_maps.push(map);
    }
    if part_maps.is_empty() {
        part_maps.push((0..k).collect());
    }

    let mut out = Vec::new();
    for part_map in &part_maps {
        // Per-part member bijections.
        let member_choices: Vec<Vec<Vec<usize>>> = (0..k)
            .map(|i| {
                let a = sizes[i];
                (0..a).permutations(a).collect()
            })
            .collect();
        for combo in member_choices.iter().multi_cartesian_product() {
            let mut perm = vec![0u32; g.vertex_count()];
            for i in 0..k {
                let src = g.part_members(i);
                let dst = g.part_members(part_map[i]);
                for (t, &sv) in src.iter().enumerate() {
                    perm[sv.0 as usize] = dst[combo[i][t]].0;
                }
            }
            out.push(perm);
        }
    }
    out
}

/// Canonical code of a drawing given as (configuration, rotation system of
/// its planarization): two drawings are equivalent iff their codes agree.
pub fn class_code(
    g: &PartitionedGraph,
    config: &CrossingConfiguration,
    rotation: &Rotation,
) -> String {
    canonical_code(g, config, rotation, &automorphisms(g))
}

/// Canonical code of (configuration, rotation): minimum serialization over
/// all automorphisms of `g` and both sphere orientations.
fn canonical_code(
    g: &PartitionedGraph,
    config: &CrossingConfiguration,
    rotation: &Rotation,
    autos: &[Vec<u32>],
) -> String {
    let n = g.vertex_count();
    let pairs = config.pairs();
    let mut best: Option<String> = None;
    for phi in autos {
        for mirror in [false, true] {
            let label = |x: usize| -> String {
                if x < n {
                    g.vertex_name(VertexId(phi[x])).to_string()
                } else {
                    let (e, f) = pairs[x - n];
                    let mut names = [edge_label(g, phi, e), edge_label(g, phi, f)];
                    names.sort();
                    format!("d[{}|{}]", names[0], names[1])
                }
            };
            let mut lines: Vec<String> = Vec::new();
            for (x, cycle) in rotation.0.iter().enumerate() {
                if cycle.is_empty() {
                    lines.push(format!("{}:", label(x)));
                    continue;
                }
                let mut labels: Vec<String> = cycle.iter().map(|&y| label(y)).collect();
                if mirror {
                    labels.reverse();
                }
                let start = labels
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.cmp(b.1))
                    .map(|(i, _)| i)
                    .unwrap();
                labels.rotate_left(start);
                lines.push(format!("{}:{}", label(x), labels.join(",")));
            }
            lines.sort();
            let code = lines.join(";");
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap()
}

fn edge_label(g: &PartitionedGraph, phi: &[u32], e: EdgeId) -> String {
    let (u, v) = g.edge_endpoints(e);
    let mut names = [
        g.vertex_name(VertexId(phi[u.0 as usize])).to_string(),
        g.vertex_name(VertexId(phi[v.0 as usize])).to_string(),
    ];
    names.sort();
    format!("{}-{}", names[0], names[1])
}

/// Enumerates every good-drawing class of `g` with at most `max_crossings`
/// crossings, each exactly once under the census equivalence.
pub fn enumerate_drawings(
    g: &PartitionedGraph,
    max_crossings: usize,
    threads: usize,
) -> Result<Vec<DrawingClass>> {
    let pairs = independent_pairs(g);
    if g.vertex_count() > 6 || g.edge_count() > 10 {
        let mut estimate = 0f64;
        for k in 0..=max_crossings.min(pairs.len()) {
            estimate += binomial(pairs.len(), k);
        }
        return Err(Error::ScaleGuard(format!(
            "census of {} ({} vertices, {} edges) refused: roughly {estimate:.1e} configurations",
            g,
            g.vertex_count(),
            g.edge_count(),
        )));
    }
    let autos = automorphisms(g);
    let max_k = max_crossings.min(pairs.len());

    // All pair subsets up to max_k, in (size, lex) order, pre-filtered to
    // canonical representatives of their automorphism orbit.
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for k in 0..=max_k {
        let mut current = Vec::new();
        collect_subsets(pairs.len(), k, 0, &mut current, &mut subsets);
    }
    let subsets: Vec<Vec<usize>> = subsets
        .into_iter()
        .filter(|s| is_canonical_subset(g, &pairs, s, &autos))
        .collect();

    let process =
        |subset: &Vec<usize>| -> Vec<DrawingClass> { classes_of_subset(g, &pairs, subset, &autos) };
    let per_subset: Vec<Vec<DrawingClass>> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| subsets.par_iter().map(process).collect())
    } else {
        subsets.iter().map(process).collect()
    };

    // Single-threaded merge by canonical code, in enumeration order.
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut classes = Vec::new();
    for group in per_subset {
        for class in group {
            if seen.insert(class.code.clone()) {
                classes.push(class);
            }
        }
    }
    classes.sort_by(|a, b| (a.crossings, &a.code).cmp(&(b.crossings, &b.code)));
    Ok(classes)
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut v = 1f64;
    for i in 0..k {
        v *= (n - i) as f64 / (i + 1) as f64;
    }
    v
}

fn collect_subsets(
    n: usize,
    k: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    let need = k - current.len();
    if start + need > n {
        return;
    }
    for i in start..=(n - need) {
        current.push(i);
        collect_subsets(n, k, i + 1, current, out);
        current.pop();
    }
}

fn independent_pairs(g: &PartitionedGraph) -> Vec<(EdgeId, EdgeId)> {
    let m = g.edge_count() as u32;
    let mut out = Vec::new();
    for e in 0..m {
        for f in (e + 1)..m {
            if !g.adjacent_edges(EdgeId(e), EdgeId(f)) {
                out.push((EdgeId(e), EdgeId(f)));
            }
        }
    }
    out
}

/// Keep only the lexicographically least subset within its orbit under the
/// automorphism action on pairs. Classes from skipped subsets reappear under
/// their canonical representative, since the class equivalence includes the
/// same automorphisms.
fn is_canonical_subset(
    g: &PartitionedGraph,
    pairs: &[(EdgeId, EdgeId)],
    subset: &[usize],
    autos: &[Vec<u32>],
) -> bool {
    if subset.is_empty() {
        return true;
    }
    let pair_index: BTreeMap<(EdgeId, EdgeId), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let edge_of = |u: u32, v: u32| -> EdgeId {
        g.edge_between(VertexId(u), VertexId(v))
            .expect("automorphism preserves edges")
    };
    for phi in autos {
        let mut image: Vec<usize> = subset
            .iter()
            .map(|&pi| {
                let (e, f) = pairs[pi];
                let (eu, ev) = g.edge_endpoints(e);
                let (fu, fv) = g.edge_endpoints(f);
                let e2 = edge_of(phi[eu.0 as usize], phi[ev.0 as usize]);
                let f2 = edge_of(phi[fu.0 as usize], phi[fv.0 as usize]);
                let key = if e2 < f2 { (e2, f2) } else { (f2, e2) };
                pair_index[&key]
            })
            .collect();
        image.sort_unstable();
        if image.as_slice() < subset {
            return false;
        }
    }
    true
}

/// All drawing classes arising from one crossing pair subset.
fn classes_of_subset(
    g: &PartitionedGraph,
    pairs: &[(EdgeId, EdgeId)],
    subset: &[usize],
    autos: &[Vec<u32>],
) -> Vec<DrawingClass> {
    let chosen: Vec<(EdgeId, EdgeId)> = subset.iter().map(|&i| pairs[i]).collect();

    // Crossing slots per edge.
    let mut per_edge: BTreeMap<EdgeId, Vec<usize>> = BTreeMap::new();
    for (slot, &(e, f)) in chosen.iter().enumerate() {
        per_edge.entry(e).or_default().push(slot);
        per_edge.entry(f).or_default().push(slot);
    }
    let multi: Vec<(EdgeId, Vec<usize>)> = per_edge
        .iter()
        .filter(|(_, v)| v.len() >= 2)
        .map(|(e, v)| (*e, v.clone()))
        .collect();
    let perms: Vec<Vec<Vec<usize>>> = multi
        .iter()
        .map(|(_, v)| v.iter().copied().permutations(v.len()).collect())
        .collect();

    let mut out = Vec::new();
    let mut idx = vec![0usize; perms.len()];
    loop {
        let orders: BTreeMap<EdgeId, Vec<usize>> = multi
            .iter()
            .enumerate()
            .map(|(i, (e, _))| (*e, perms[i][idx[i]].clone()))
            .collect();
        let config = CrossingConfiguration::new(g, chosen.clone(), orders)
            .expect("enumerated configuration is well-formed");
        let pl = planarize(g, &config).expect("enumerated configuration planarizes");
        if is_planar(&pl.graph) {
            collect_embeddings(g, &config, &pl.graph, &pl.edge_paths, autos, &mut out);
        }
        // Advance the mixed-radix order counter.
        if perms.is_empty() {
            break;
        }
        let mut d = perms.len();
        let mut done = false;
        loop {
            if d == 0 {
                done = true;
                break;
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < perms[d].len() {
                break;
            }
            idx[d] = 0;
        }
        if done {
            break;
        }
    }
    out
}

/// Enumerates rotation systems of the planarization — all cyclic orders at
/// original vertices, the two alternating orders at each dummy — and keeps
/// the sphere embeddings.
fn collect_embeddings(
    g: &PartitionedGraph,
    config: &CrossingConfiguration,
    pl: &SimpleGraph,
    edge_paths: &[Vec<usize>],
    autos: &[Vec<u32>],
    out: &mut Vec<DrawingClass>,
) {
    let n = g.vertex_count();
    let k = config.size();

    // Candidate rotations per vertex.
    let mut candidates: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n + k);
    for v in 0..n {
        let nbrs = pl.neighbors(v).to_vec();
        if nbrs.len() <= 2 {
            candidates.push(vec![nbrs]);
        } else {
            let first = nbrs[0];
            let rest = &nbrs[1..];
            let mut cycles = Vec::new();
            for perm in rest.iter().copied().permutations(rest.len()) {
                let mut c = vec![first];
                c.extend(perm);
                cycles.push(c);
            }
            candidates.push(cycles);
        }
    }
    for slot in 0..k {
        let d = n + slot;
        let (e, f) = config.pairs()[slot];
        let along = |edge: EdgeId| -> (usize, usize) {
            let path = &edge_paths[edge.0 as usize];
            let pos = path
                .iter()
                .position(|&x| x == d)
                .expect("dummy on its edge");
            (path[pos - 1], path[pos + 1])
        };
        let (e_prev, e_next) = along(e);
        let (f_prev, f_next) = along(f);
        // The two strand interleavings around the crossing.
        candidates.push(vec![
            vec![e_prev, f_prev, e_next, f_next],
            vec![e_prev, f_next, e_next, f_prev],
        ]);
    }

    let v_total = n + k;
    let e_total = pl.edge_count();
    let mut idx = vec![0usize; v_total];
    loop {
        let rotation = Rotation(
            idx.iter()
                .enumerate()
                .map(|(v, &i)| candidates[v][i].clone())
                .collect(),
        );
        let faces = trace_faces(&rotation);
        if v_total as i64 - e_total as i64 + faces.len() as i64 == 2 {
            let code = canonical_code(g, config, &rotation, autos);
            if !out.iter().any(|c| c.code == code) {
                let faces = faces_of(g, &rotation);
                out.push(DrawingClass {
                    config: config.clone(),
                    rotation,
                    code,
                    crossings: k as u64,
                    faces,
                });
            }
        }
        // Advance.
        let mut d = v_total;
        let mut done = v_total == 0;
        while !done {
            if d == 0 {
                done = true;
                break;
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < candidates[d].len() {
                break;
            }
            idx[d] = 0;
        }
        if done {
            break;
        }
    }
}

/// Report of the region-structure checks on tiny censuses.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RegionLemmaReport {
    /// Number of good-drawing classes of K_{2,3}.
    pub k23_classes: usize,
    /// Crossing-count distribution of the K_{2,3} census.
    pub k23_distribution: BTreeMap<u64, usize>,
    /// Number of good-drawing classes of K_{1,2,2}.
    pub k122_classes: usize,
    /// Classes of K_{1,2,2} with more than one face having >= 4 original
    /// boundary vertices (must be empty).
    pub counterexamples: Vec<String>,
    /// Classes of K_{1,2,2} with a face containing all 5 vertices.
    pub all_five_classes: usize,
}

impl RegionLemmaReport {
    pub fn passed(&self) -> bool {
        self.k23_classes == 6 && self.counterexamples.is_empty() && self.all_five_classes == 3
    }
}

/// Enumerates the relevant censuses and checks the region structure: every
/// drawing of K_{1,2,2} has at most one region with >= 4 vertices on its
/// boundary, and exactly 3 classes have a region with all 5.
pub fn verify_region_lemmas(threads: usize) -> Result<RegionLemmaReport> {
    let k23 = PartitionedGraph::complete_multipartite(&[2, 3])?;
    let k23_classes = enumerate_drawings(&k23, 2 * k23.edge_count(), threads)?;
    let mut k23_distribution: BTreeMap<u64, usize> = BTreeMap::new();
    for c in &k23_classes {
        *k23_distribution.entry(c.crossings).or_default() += 1;
    }

    let k122 = PartitionedGraph::complete_multipartite_named(&[
        ("X".to_string(), 1),
        ("Y".to_string(), 2),
        ("U".to_string(), 2),
    ])?;
    let k122_classes = enumerate_drawings(&k122, 2 * k122.edge_count(), threads)?;
    let mut counterexamples = Vec::new();
    let mut all_five = 0usize;
    for class in &k122_classes {
        let big = class
            .faces
            .iter()
            .filter(|f| f.original_count() >= 4)
            .count();
        if big > 1 {
            counterexamples.push(class.code.clone());
        }
        if class.faces.iter().any(|f| f.original_count() == 5) {
            all_five += 1;
        }
    }

    Ok(RegionLemmaReport {
        k23_classes: k23_classes.len(),
        k23_distribution,
        k122_classes: k122_classes.len(),
        counterexamples,
        all_five_classes: all_five,
    })
}

/// Both sides of the vertex-suppression counting inequality on a drawing of
/// K_{1,3,n} or K_{1,4,n}.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CountingCheck {
    pub n: u64,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    /// cr(E_XY, union of E(z_i)).
    pub xy_z: u64,
    /// cr(union of E(z_i)).
    pub zz: u64,
}

/// Averaging a drawing's crossings over the `n` sub-drawings obtained by
/// suppressing one `Z` vertex yields
/// `(n-1)*cr(E_XY, Ez) + (n-2)*cr(Ez) >= n * cr(family at n-1)`,
/// provided `cr(E_XY) = 0` in the drawing.
pub fn check_counting_inequality(d: &Drawing, family: &str) -> Result<CountingCheck> {
    if family != "K13n" && family != "K14n" {
        return Err(Error::invalid(format!(
            "counting inequality applies to K13n and K14n, not {family:?}"
        )));
    }
    let g = d.graph();
    let x = g
        .part_index("X")
        .ok_or_else(|| Error::invalid("drawing lacks part X"))?;
    let y = g
        .part_index("Y")
        .ok_or_else(|| Error::invalid("drawing lacks part Y"))?;
    let z = g
        .part_index("Z")
        .ok_or_else(|| Error::invalid("drawing lacks part Z"))?;
    let n = g.part_members(z).len() as u64;
    if n < 2 {
        return Err(Error::invalid("counting inequality needs n >= 2"));
    }
    let exy = g.edge_set_between(x, y)?;
    let ez = g.part_star(z)?;
    if count_crossings(d, &exy, None)? != 0 {
        return Err(Error::invalid(
            "precondition violated: cr(E_XY) != 0 in this drawing",
        ));
    }
    let xy_z = count_crossings(d, &exy, Some(&ez))?;
    let zz = count_crossings(d, &ez, None)?;
    let lhs = (n - 1) * xy_z + (n - 2) * zz;
    let rhs = n * family_formula(family, n - 1)?.value;
    Ok(CountingCheck {
        n,
        lhs,
        rhs,
        holds: lhs >= rhs,
        xy_z,
        zz,
    })
}
