//! Exact crossing numbers of small graphs.
//!
//! A drawing with `k` crossings exists iff some size-`k` crossing
//! configuration planarizes to a planar graph, so iterative deepening over
//! configurations (crossing pair sets plus per-edge crossing orders) finds
//! `cr(G)` exactly: the first planarizable level is the crossing number.
//! Configurations stick to the good-drawing search space — independent edge
//! pairs cross at most once, adjacent edges never — which is safe because
//! some crossing-minimal drawing is good.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formulas::best_lower_bound;
use crate::graph::{EdgeId, PartitionedGraph};
use crate::planarity::{is_planar, planar_embedding, Rotation, SimpleGraph};

/// Combinatorial crossing data of a drawing: which independent edge pairs
/// cross, and in what order the crossings sit along each edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingConfiguration {
    pairs: Vec<(EdgeId, EdgeId)>,
    /// For each edge with two or more crossings: its crossings (as indices
    /// into `pairs`) in order from the edge's lower endpoint.
    orders: BTreeMap<EdgeId, Vec<usize>>,
}

impl CrossingConfiguration {
    pub fn new(
        g: &PartitionedGraph,
        mut pairs: Vec<(EdgeId, EdgeId)>,
        orders: BTreeMap<EdgeId, Vec<usize>>,
    ) -> Result<Self> {
        for p in &mut pairs {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::invalid("duplicate crossing pair"));
            }
        }
        let edge_count = g.edge_count() as u32;
        for &(e, f) in &pairs {
            if e.0 >= edge_count || f.0 >= edge_count {
                return Err(Error::invalid("crossing pair names an unknown edge"));
            }
            if e == f {
                return Err(Error::invalid("an edge cannot cross itself"));
            }
            if g.adjacent_edges(e, f) {
                return Err(Error::invalid(format!(
                    "adjacent edges {} and {} may not cross",
                    g.edge_name(e),
                    g.edge_name(f)
                )));
            }
        }
        let cfg = CrossingConfiguration { pairs, orders };
        // Order lists must match each multi-crossed edge exactly.
        for (e, order) in &cfg.orders {
            let mut expected = cfg.crossing_indices(*e);
            if expected.len() < 2 {
                return Err(Error::invalid(
                    "order given for an edge with fewer than 2 crossings",
                ));
            }
            let mut got = order.clone();
            got.sort_unstable();
            expected.sort_unstable();
            if got != expected {
                return Err(Error::invalid(format!(
                    "order for {} does not list exactly its crossings",
                    g.edge_name(*e)
                )));
            }
        }
        for e in cfg.edges_with_crossings() {
            if cfg.crossing_indices(e).len() >= 2 && !cfg.orders.contains_key(&e) {
                return Err(Error::invalid(format!(
                    "edge {} carries several crossings but no order",
                    g.edge_name(e)
                )));
            }
        }
        Ok(cfg)
    }

    pub fn empty() -> Self {
        CrossingConfiguration {
            pairs: Vec::new(),
            orders: BTreeMap::new(),
        }
    }

    pub fn pairs(&self) -> &[(EdgeId, EdgeId)] {
        &self.pairs
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn orders(&self) -> &BTreeMap<EdgeId, Vec<usize>> {
        &self.orders
    }

    fn crossing_indices(&self, e: EdgeId) -> Vec<usize> {
        self.pairs
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == e || b == e)
            .map(|(i, _)| i)
            .collect()
    }

    fn edges_with_crossings(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Crossings along `e` in traversal order from its lower endpoint.
    pub fn order_along(&self, e: EdgeId) -> Vec<usize> {
        match self.orders.get(&e) {
            Some(o) => o.clone(),
            None => self.crossing_indices(e),
        }
    }
}

/// Planarization: the derived graph with one degree-4 dummy vertex per
/// crossing pair.
#[derive(Debug, Clone)]
pub struct Planarization {
    pub graph: SimpleGraph,
    /// Dummy vertex of pair `i` is `original_count + i`.
    pub original_count: usize,
    /// Original edge index -> derived vertex path from lower to upper endpoint.
    pub edge_paths: Vec<Vec<usize>>,
}

impl Planarization {
    pub fn dummy_vertex(&self, pair_index: usize) -> usize {
        self.original_count + pair_index
    }
}

/// Replaces each crossing of `cfg` by a dummy vertex.
pub fn planarize(g: &PartitionedGraph, cfg: &CrossingConfiguration) -> Result<Planarization> {
    let n = g.vertex_count();
    let mut derived_edges = Vec::new();
    let mut edge_paths = Vec::new();
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        let e = EdgeId(idx as u32);
        let mut path = vec![u.0 as usize];
        for pair_idx in cfg.order_along(e) {
            path.push(n + pair_idx);
        }
        path.push(v.0 as usize);
        for w in path.windows(2) {
            derived_edges.push((w[0], w[1]));
        }
        edge_paths.push(path);
    }
    let graph = SimpleGraph::new(n + cfg.size(), &derived_edges);
    if graph.edge_count() != g.edge_count() + 2 * cfg.size() {
        return Err(Error::invalid(
            "inconsistent crossing orders produced a degenerate planarization",
        ));
    }
    Ok(Planarization {
        graph,
        original_count: n,
        edge_paths,
    })
}

/// Whether the configuration is realizable: its planarization is planar.
/// On success the witness embedding of the planarization is returned.
pub fn realizable(g: &PartitionedGraph, cfg: &CrossingConfiguration) -> Result<Option<Rotation>> {
    let pl = planarize(g, cfg)?;
    Ok(planar_embedding(&pl.graph))
}

#[derive(Debug, Clone)]
pub struct SolveLimits {
    pub budget: Option<Duration>,
    pub max_k: Option<u64>,
    pub threads: usize,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            budget: None,
            max_k: None,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone)]
pub enum SolveOutcome {
    /// `crossings` is exactly `cr(G)`, certified by the witness.
    Exact {
        crossings: u64,
        witness: CrossingConfiguration,
    },
    /// The budget ran out: `cr(G)` lies in `[lower, upper]`.
    Bounds { lower: u64, upper: u64 },
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub outcome: SolveOutcome,
    pub elapsed: Duration,
    pub nodes: u64,
}

/// Crossing count of the straight-line drawing with all vertices in convex
/// position: a cheap, valid upper bound.
fn convex_upper_bound(edges: &[(usize, usize)]) -> u64 {
    let mut count = 0;
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            // Chords of a circle cross iff their endpoints interleave.
            let inside = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
            if inside(c, a, b) != inside(d, a, b) {
                count += 1;
            }
        }
    }
    count
}

/// Exact crossing number by iterative deepening, starting at the best known
/// lower bound. Within a level, configurations are enumerated in canonical
/// lexicographic order over the fixed edge-pair ordering, so results and
/// witnesses are identical across runs and thread counts.
pub fn exact_crossing_number(g: &PartitionedGraph, limits: &SolveLimits) -> Result<SolveReport> {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.0 as usize, v.0 as usize))
        .collect();
    let raw = exact_crossing_number_raw(g.vertex_count(), &edges, best_lower_bound(g), limits)?;
    let outcome = match raw.outcome {
        RawOutcome::Exact {
            crossings,
            pairs,
            orders,
        } => {
            let cfg_pairs: Vec<(EdgeId, EdgeId)> = pairs
                .iter()
                .map(|&(e, f)| (EdgeId(e as u32), EdgeId(f as u32)))
                .collect();
            let cfg_orders: BTreeMap<EdgeId, Vec<usize>> = orders
                .into_iter()
                .map(|(e, slots)| (EdgeId(e as u32), slots))
                .collect();
            SolveOutcome::Exact {
                crossings,
                witness: CrossingConfiguration::new(g, cfg_pairs, cfg_orders)?,
            }
        }
        RawOutcome::Bounds { lower, upper } => SolveOutcome::Bounds { lower, upper },
    };
    Ok(SolveReport {
        outcome,
        elapsed: raw.elapsed,
        nodes: raw.nodes,
    })
}

/// Solver outcome over a plain edge list (no multipartite structure).
#[derive(Debug, Clone)]
pub enum RawOutcome {
    Exact {
        crossings: u64,
        /// Crossing pairs as indices into the sorted edge list.
        pairs: Vec<(usize, usize)>,
        /// Per-edge crossing orders (slots into `pairs`), for edges with
        /// several crossings.
        orders: BTreeMap<usize, Vec<usize>>,
    },
    Bounds {
        lower: u64,
        upper: u64,
    },
}

#[derive(Debug, Clone)]
pub struct RawSolveReport {
    pub outcome: RawOutcome,
    pub elapsed: Duration,
    pub nodes: u64,
}

/// Exact crossing number of an arbitrary small simple connected graph given
/// as an edge list. `extra_lower` folds in any externally known lower bound.
pub fn exact_crossing_number_raw(
    n: usize,
    edge_list: &[(usize, usize)],
    extra_lower: u64,
    limits: &SolveLimits,
) -> Result<RawSolveReport> {
    let start = Instant::now();
    if edge_list.len() > 64 || n > 24 {
        return Err(Error::ScaleGuard(format!(
            "graph has {n} vertices and {} edges; the exact search handles at most 24 and 64",
            edge_list.len()
        )));
    }
    let simple = SimpleGraph::new(n, edge_list);
    if !is_connected(&simple) {
        return Err(Error::invalid("exact search requires a connected graph"));
    }
    let edges = simple.edges();

    let deadline = limits.budget.map(|b| start + b);
    let upper = convex_upper_bound(&edges);
    let packing = kuratowski_packing(&simple);
    let euler = (edges.len() as i64 - 3 * n as i64 + 6).max(0) as u64;
    let lower = extra_lower.max(packing.len() as u64).max(euler);
    let max_k = limits.max_k.unwrap_or(u64::MAX).min(upper);

    let pairs = independent_pairs_of(&edges);
    let nodes = AtomicU64::new(0);

    let mut k = lower;
    loop {
        if k > max_k {
            return Ok(RawSolveReport {
                outcome: RawOutcome::Bounds { lower: k, upper },
                elapsed: start.elapsed(),
                nodes: nodes.load(Ordering::Relaxed),
            });
        }
        match search_level(
            &simple,
            &pairs,
            k as usize,
            &packing,
            deadline,
            limits.threads,
            &nodes,
        ) {
            LevelResult::Found(chosen, orders) => {
                let witness_pairs: Vec<(usize, usize)> = chosen
                    .iter()
                    .map(|&pi| {
                        let (e, f) = pairs[pi as usize];
                        (e as usize, f as usize)
                    })
                    .collect();
                let witness_orders: BTreeMap<usize, Vec<usize>> = orders
                    .into_iter()
                    .map(|(e, slots)| (e as usize, slots))
                    .collect();
                return Ok(RawSolveReport {
                    outcome: RawOutcome::Exact {
                        crossings: k,
                        pairs: witness_pairs,
                        orders: witness_orders,
                    },
                    elapsed: start.elapsed(),
                    nodes: nodes.load(Ordering::Relaxed),
                });
            }
            LevelResult::Exhausted => {
                k += 1;
            }
            LevelResult::TimedOut => {
                return Ok(RawSolveReport {
                    outcome: RawOutcome::Bounds { lower: k, upper },
                    elapsed: start.elapsed(),
                    nodes: nodes.load(Ordering::Relaxed),
                });
            }
        }
    }
}

fn is_connected(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

/// All unordered pairs of independent (non-adjacent) edges, in lexicographic
/// order of edge indices.
fn independent_pairs_of(edges: &[(usize, usize)]) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for e in 0..edges.len() {
        for f in (e + 1)..edges.len() {
            let (a, b) = edges[e];
            let (c, d) = edges[f];
            if a != c && a != d && b != c && b != d {
                out.push((e as u32, f as u32));
            }
        }
    }
    out
}

/// Greedy packing of edge-disjoint Kuratowski subdivisions, as edge bitmasks.
///
/// Removing edges from a nonplanar graph while it stays nonplanar terminates
/// in an edge-minimal nonplanar graph, which is exactly a subdivision of
/// `K_5` or `K_{3,3}`. Any drawing must put a crossing between two edges of
/// each packed subdivision, giving both a lower bound and a cover constraint.
fn kuratowski_packing(g: &SimpleGraph) -> Vec<u64> {
    let all_edges = g.edges();
    let mut available: Vec<bool> = vec![true; all_edges.len()];
    let mut packing = Vec::new();
    loop {
        let current: Vec<(usize, usize)> = all_edges
            .iter()
            .zip(&available)
            .filter(|(_, &a)| a)
            .map(|(&e, _)| e)
            .collect();
        let sub = SimpleGraph::new(g.vertex_count(), &current);
        if is_planar(&sub) {
            return packing;
        }
        let mut kept = current.clone();
        let mut i = 0;
        while i < kept.len() {
            let mut trial = kept.clone();
            trial.remove(i);
            if !is_planar(&SimpleGraph::new(g.vertex_count(), &trial)) {
                kept = trial;
            } else {
                i += 1;
            }
        }
        let mut mask = 0u64;
        for e in &kept {
            let idx = all_edges.iter().position(|x| x == e).unwrap();
            mask |= 1 << idx;
            available[idx] = false;
        }
        packing.push(mask);
    }
}

enum LevelResult {
    Found(Vec<u32>, BTreeMap<u32, Vec<usize>>),
    Exhausted,
    TimedOut,
}

struct LevelContext<'a> {
    simple: &'a SimpleGraph,
    pairs: &'a [(u32, u32)],
    k: usize,
    /// For each candidate pair: bitmask of packed subdivisions it covers.
    pair_cover: Vec<u32>,
    /// For each subdivision: largest candidate index covering it.
    last_cover: Vec<usize>,
    deadline: Option<Instant>,
    nodes: &'a AtomicU64,
    /// Index of the lowest first-pair task that already found a witness;
    /// tasks above it abandon their subtrees.
    found_at: &'a AtomicUsize,
}

fn search_level(
    simple: &SimpleGraph,
    pairs: &[(u32, u32)],
    k: usize,
    packing: &[u64],
    deadline: Option<Instant>,
    threads: usize,
    nodes: &AtomicU64,
) -> LevelResult {
    if k == 0 {
        nodes.fetch_add(1, Ordering::Relaxed);
        return if is_planar(simple) {
            LevelResult::Found(Vec::new(), BTreeMap::new())
        } else {
            LevelResult::Exhausted
        };
    }
    if pairs.len() < k {
        return LevelResult::Exhausted;
    }

    let pair_cover: Vec<u32> = pairs
        .iter()
        .map(|&(e, f)| {
            let mut mask = 0u32;
            for (hi, h) in packing.iter().enumerate() {
                if h & (1 << e) != 0 && h & (1 << f) != 0 {
                    mask |= 1 << hi;
                }
            }
            mask
        })
        .collect();
    let mut last_cover = vec![0usize; packing.len()];
    for (pi, &cover) in pair_cover.iter().enumerate() {
        for (hi, lc) in last_cover.iter_mut().enumerate() {
            if cover & (1 << hi) != 0 {
                *lc = pi;
            }
        }
    }
    // A packed subdivision no pair covers can never host a crossing; the
    // level (and all levels) would be unsatisfiable, which cannot happen for
    // nonplanar input, but guard anyway.
    if last_cover
        .iter()
        .enumerate()
        .any(|(hi, _)| !pair_cover.iter().any(|c| c & (1 << hi) != 0))
    {
        return LevelResult::Exhausted;
    }

    let found_at = AtomicUsize::new(usize::MAX);
    let ctx = LevelContext {
        simple,
        pairs,
        k,
        pair_cover,
        last_cover,
        deadline,
        nodes,
        found_at: &found_at,
    };

    let all_uncovered = (0..packing.len()).fold(0u32, |m, hi| m | (1 << hi));
    let run_task = |first: usize| -> (usize, Option<LevelResult>) {
        if ctx.found_at.load(Ordering::Relaxed) < first {
            return (first, None);
        }
        let mut chosen = vec![first as u32];
        let uncovered = all_uncovered & !ctx.pair_cover[first];
        let res = dfs(&ctx, &mut chosen, first + 1, uncovered);
        match res {
            DfsResult::Found(orders) => {
                ctx.found_at.fetch_min(first, Ordering::SeqCst);
                (first, Some(LevelResult::Found(chosen, orders)))
            }
            DfsResult::Exhausted => (first, None),
            DfsResult::TimedOut => (first, Some(LevelResult::TimedOut)),
        }
    };

    let results: Vec<(usize, Option<LevelResult>)> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..=pairs.len() - k)
                .into_par_iter()
                .map(run_task)
                .collect()
        })
    } else {
        (0..=pairs.len() - k).map(run_task).collect()
    };

    // The lexicographically least witness wins; a timeout only matters if no
    // task found one.
    let mut timed_out = false;
    for (_, res) in results {
        match res {
            Some(LevelResult::Found(p, o)) => return LevelResult::Found(p, o),
            Some(LevelResult::TimedOut) => timed_out = true,
            _ => {}
        }
    }
    if timed_out {
        LevelResult::TimedOut
    } else {
        LevelResult::Exhausted
    }
}

enum DfsResult {
    Found(BTreeMap<u32, Vec<usize>>),
    Exhausted,
    TimedOut,
}

fn dfs(ctx: &LevelContext, chosen: &mut Vec<u32>, cursor: usize, uncovered: u32) -> DfsResult {
    if ctx
        .nodes
        .fetch_add(1, Ordering::Relaxed)
        .is_multiple_of(4096)
    {
        if let Some(d) = ctx.deadline {
            if Instant::now() > d {
                return DfsResult::TimedOut;
            }
        }
    }
    let remaining = ctx.k - chosen.len();
    if uncovered.count_ones() as usize > remaining {
        return DfsResult::Exhausted;
    }
    // Every still-uncovered subdivision must have a covering pair ahead.
    for (hi, &lc) in ctx.last_cover.iter().enumerate() {
        if uncovered & (1 << hi) != 0 && lc < cursor {
            return DfsResult::Exhausted;
        }
    }
    if remaining == 0 {
        return check_leaf(ctx, chosen);
    }
    if cursor + remaining > ctx.pairs.len() {
        return DfsResult::Exhausted;
    }
    for next in cursor..=(ctx.pairs.len() - remaining) {
        if ctx.found_at.load(Ordering::Relaxed) < chosen[0] as usize {
            return DfsResult::Exhausted;
        }
        chosen.push(next as u32);
        match dfs(ctx, chosen, next + 1, uncovered & !ctx.pair_cover[next]) {
            DfsResult::Exhausted => {
                chosen.pop();
            }
            // Leave `chosen` intact: it is the witness pair selection.
            other => return other,
        }
    }
    DfsResult::Exhausted
}

/// Builds the planarization for every admissible crossing order of the
/// chosen pairs and tests planarity; orders are enumerated lexicographically.
fn check_leaf(ctx: &LevelContext, chosen: &[u32]) -> DfsResult {
    // Per-edge crossing slots (positions within `chosen`).
    let mut per_edge: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (slot, &pi) in chosen.iter().enumerate() {
        let (e, f) = ctx.pairs[pi as usize];
        per_edge.entry(e).or_default().push(slot);
        per_edge.entry(f).or_default().push(slot);
    }
    let multi: Vec<(u32, Vec<usize>)> = per_edge
        .iter()
        .filter(|(_, v)| v.len() >= 2)
        .map(|(e, v)| (*e, v.clone()))
        .collect();

    let n = ctx.simple.vertex_count();
    let base_edges = ctx.simple.edges();

    // All crossing orders per multi-crossed edge, walked as a mixed-radix
    // counter in lexicographic order.
    let perms: Vec<Vec<Vec<usize>>> = multi.iter().map(|(_, v)| permutations_lex(v)).collect();
    let mut idx = vec![0usize; perms.len()];
    loop {
        let mut assignments: BTreeMap<u32, &Vec<usize>> = BTreeMap::new();
        for (i, (e, _)) in multi.iter().enumerate() {
            assignments.insert(*e, &perms[i][idx[i]]);
        }
        let mut derived: Vec<(usize, usize)> = Vec::with_capacity(base_edges.len() + 2 * ctx.k);
        for (eidx, &(u, v)) in base_edges.iter().enumerate() {
            let e = eidx as u32;
            let slots: &[usize] = match assignments.get(&e) {
                Some(s) => s,
                None => per_edge.get(&e).map(|v| v.as_slice()).unwrap_or(&[]),
            };
            let mut prev = u;
            for &slot in slots {
                derived.push((prev, n + slot));
                prev = n + slot;
            }
            derived.push((prev, v));
        }
        let pg = SimpleGraph::new(n + ctx.k, &derived);
        if is_planar(&pg) {
            let map: BTreeMap<u32, Vec<usize>> = multi
                .iter()
                .enumerate()
                .map(|(i, (e, _))| (*e, perms[i][idx[i]].clone()))
                .collect();
            return DfsResult::Found(map);
        }
        // Advance the counter.
        let mut d = perms.len();
        loop {
            if d == 0 {
                return DfsResult::Exhausted;
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < perms[d].len() {
                break;
            }
            idx[d] = 0;
        }
    }
}

/// All permutations of `v` in lexicographic order.
fn permutations_lex(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PartitionedGraph;

    fn solve(sizes: &[usize]) -> u64 {
        let g = PartitionedGraph::complete_multipartite(sizes).unwrap();
        let report = exact_crossing_number(&g, &SolveLimits::default()).unwrap();
        match report.outcome {
            SolveOutcome::Exact { crossings, .. } => crossings,
            SolveOutcome::Bounds { lower, upper } => {
                panic!("expected exact result, got bounds [{lower},{upper}]")
            }
        }
    }

    #[test]
    fn tiny_planar_graphs() {
        assert_eq!(solve(&[2, 3]), 0);
        assert_eq!(solve(&[1, 1, 1]), 0);
        assert_eq!(solve(&[1, 2, 2]), 0);
    }

    #[test]
    fn k5_and_k33() {
        assert_eq!(solve(&[1, 1, 1, 1, 1]), 1);
        assert_eq!(solve(&[3, 3]), 1);
    }

    #[test]
    fn small_family_instances() {
        assert_eq!(solve(&[1, 2, 2, 1]), 1);
        assert_eq!(solve(&[1, 3, 2]), 1);
        assert_eq!(solve(&[1, 1, 1, 2, 1]), 2);
    }

    fn graph_pairs(g: &PartitionedGraph) -> Vec<(EdgeId, EdgeId)> {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (u.0 as usize, v.0 as usize))
            .collect();
        independent_pairs_of(&edges)
            .into_iter()
            .map(|(e, f)| (EdgeId(e), EdgeId(f)))
            .collect()
    }

    #[test]
    fn planarize_k5_single_pair() {
        let g = PartitionedGraph::complete_multipartite(&[1, 1, 1, 1, 1]).unwrap();
        let (e, f) = graph_pairs(&g)[0];
        let cfg = CrossingConfiguration::new(&g, vec![(e, f)], BTreeMap::new()).unwrap();
        let pl = planarize(&g, &cfg).unwrap();
        assert_eq!(pl.graph.vertex_count(), 6);
        assert_eq!(pl.graph.edge_count(), 12);
        assert_eq!(pl.dummy_vertex(0), 5);

        // Empty configuration: isomorphic copy.
        let empty = CrossingConfiguration::empty();
        let pl = planarize(&g, &empty).unwrap();
        assert_eq!(pl.graph.vertex_count(), 5);
        assert_eq!(pl.graph.edge_count(), 10);
    }

    #[test]
    fn realizable_checks() {
        let k23 = PartitionedGraph::complete_multipartite(&[2, 3]).unwrap();
        assert!(realizable(&k23, &CrossingConfiguration::empty())
            .unwrap()
            .is_some());

        let k5 = PartitionedGraph::complete_multipartite(&[1, 1, 1, 1, 1]).unwrap();
        assert!(realizable(&k5, &CrossingConfiguration::empty())
            .unwrap()
            .is_none());

        // Every single independent pair of K_{3,3} is realizable.
        let k33 = PartitionedGraph::complete_multipartite(&[3, 3]).unwrap();
        for (e, f) in graph_pairs(&k33) {
            let cfg = CrossingConfiguration::new(&k33, vec![(e, f)], BTreeMap::new()).unwrap();
            assert!(
                realizable(&k33, &cfg).unwrap().is_some(),
                "pair ({e:?},{f:?}) should planarize"
            );
        }
    }

    #[test]
    fn adjacent_pairs_rejected() {
        let g = PartitionedGraph::complete_multipartite(&[1, 1, 1]).unwrap();
        assert!(
            CrossingConfiguration::new(&g, vec![(EdgeId(0), EdgeId(1))], BTreeMap::new()).is_err()
        );
    }

    #[test]
    fn budget_exhaustion_reports_bounds() {
        let g = PartitionedGraph::complete_multipartite(&[1, 1, 1, 2, 2]).unwrap();
        let limits = SolveLimits {
            budget: Some(Duration::from_millis(1)),
            ..Default::default()
        };
        let report = exact_crossing_number(&g, &limits).unwrap();
        match report.outcome {
            SolveOutcome::Bounds { lower, upper } => {
                assert!(lower <= 4 && 4 <= upper, "true value in [{lower},{upper}]");
            }
            SolveOutcome::Exact { .. } => (), // a very fast machine may finish
        }
    }

    #[test]
    fn max_k_cutoff() {
        let g = PartitionedGraph::complete_multipartite(&[1, 1, 1, 1, 1]).unwrap();
        let limits = SolveLimits {
            max_k: Some(0),
            ..Default::default()
        };
        let report = exact_crossing_number(&g, &limits).unwrap();
        match report.outcome {
            SolveOutcome::Bounds { lower, upper } => {
                assert_eq!(lower, 1);
                assert!(upper >= 1);
            }
            _ => panic!("expected bounds"),
        }
    }

    #[test]
    fn witness_is_realizable_and_deterministic() {
        let g = PartitionedGraph::complete_multipartite(&[1, 3, 2]).unwrap();
        let r1 = exact_crossing_number(&g, &SolveLimits::default()).unwrap();
        let r2 = exact_crossing_number(
            &g,
            &SolveLimits {
                threads: 4,
                ..Default::default()
            },
        )
        .unwrap();
        match (&r1.outcome, &r2.outcome) {
            (
                SolveOutcome::Exact {
                    crossings: c1,
                    witness: w1,
                },
                SolveOutcome::Exact {
                    crossings: c2,
                    witness: w2,
                },
            ) => {
                assert_eq!(c1, c2);
                assert_eq!(w1, w2);
                assert!(realizable(&g, w1).unwrap().is_some());
            }
            _ => panic!("expected exact results"),
        }
    }
}
