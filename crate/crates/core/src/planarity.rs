//! Planarity testing with a rotation-system witness.
//!
//! The test is the classic face-by-face embedding algorithm: embed a cycle,
//! then repeatedly pick a bridge of the remaining graph, check which faces
//! can host it, and route one path of the bridge through an admissible face.
//! A bridge with no admissible face certifies nonplanarity. Blocks are
//! embedded independently and their rotations spliced at cut vertices.
//!
//! Faces are kept as directed vertex cycles, so the final rotation system
//! falls out of the face-next relation.

use std::collections::{BTreeMap, BTreeSet};

/// Small undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            assert!(u != v && u < n && v < n, "bad edge ({u},{v})");
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { n, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        SimpleGraph::new(self.n, &edges)
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Cyclic order of neighbors around each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rotation(pub Vec<Vec<usize>>);

impl Rotation {
    /// Reverses every cycle: the mirror embedding.
    pub fn mirrored(&self) -> Rotation {
        Rotation(
            self.0
                .iter()
                .map(|cycle| {
                    let mut c = cycle.clone();
                    c.reverse();
                    c
                })
                .collect(),
        )
    }
}

/// Traces the faces of a rotation system as directed-edge cycles.
///
/// The successor of directed edge `(u,v)` is `(v,w)` where `w` follows `u` in
/// the rotation at `v`. Every directed edge lies on exactly one face.
pub fn trace_faces(rot: &Rotation) -> Vec<Vec<(usize, usize)>> {
    let n = rot.0.len();
    let mut pos: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for (v, cycle) in rot.0.iter().enumerate() {
        for (i, &u) in cycle.iter().enumerate() {
            pos[v].insert(u, i);
        }
    }
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut faces = Vec::new();
    for v in 0..n {
        for &u in &rot.0[v] {
            if used.contains(&(v, u)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (v, u);
            loop {
                face.push((a, b));
                used.insert((a, b));
                let i = pos[b][&a];
                let w = rot.0[b][(i + 1) % rot.0[b].len()];
                a = b;
                b = w;
                if (a, b) == (v, u) {
                    break;
                }
            }
            faces.push(face);
        }
    }
    faces
}

/// Euler check: a rotation system is a sphere embedding exactly when every
/// component with edges satisfies `V - E + F = 2` under face tracing.
pub fn is_sphere_embedding(g: &SimpleGraph, rot: &Rotation) -> bool {
    let faces = trace_faces(rot);
    let comps = g.components();
    let mut expected: i64 = 0;
    for comp in &comps {
        let e: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        if e > 0 {
            expected += 2 - comp.len() as i64 + e as i64;
        }
    }
    faces.len() as i64 == expected
}

/// Planarity test with witness: `Some(rotation)` iff the graph is planar.
pub fn planar_embedding(g: &SimpleGraph) -> Option<Rotation> {
    let n = g.vertex_count();
    // Quick edge-count rejection.
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rot = vec![Vec::new(); n];
    for comp in g.components() {
        for block in blocks(g, &comp) {
            let faces = embed_block(g, &block)?;
            splice_rotation(&mut rot, &faces);
        }
    }
    let rotation = Rotation(rot);
    debug_assert!(is_sphere_embedding(g, &rotation));
    Some(rotation)
}

/// Boolean planarity test; skips witness extraction, which matters on the
/// search hot paths.
pub fn is_planar(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    for comp in g.components() {
        for block in blocks(g, &comp) {
            if embed_block(g, &block).is_none() {
                return false;
            }
        }
    }
    true
}

/// Biconnected components (as edge lists) of the component containing `comp`.
fn blocks(g: &SimpleGraph, comp: &[usize]) -> Vec<Vec<(usize, usize)>> {
    // Iterative Tarjan block decomposition.
    let root = comp[0];
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    let mut timer = 0;

    // Explicit DFS stack: (vertex, neighbor index).
    let mut dfs: Vec<(usize, usize)> = vec![(root, 0)];
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    while let Some(&mut (u, ref mut i)) = dfs.last_mut() {
        if *i < g.neighbors(u).len() {
            let v = g.neighbors(u)[*i];
            *i += 1;
            if disc[v] == usize::MAX {
                parent[v] = u;
                disc[v] = timer;
                low[v] = timer;
                timer += 1;
                stack.push((u, v));
                dfs.push((v, 0));
            } else if v != parent[u] && disc[v] < disc[u] {
                stack.push((u, v));
                low[u] = low[u].min(disc[v]);
            }
        } else {
            dfs.pop();
            if let Some(&(p, _)) = dfs.last() {
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    // p is a cut vertex (or the root): pop one block.
                    let mut block = Vec::new();
                    while let Some(&(a, b)) = stack.last() {
                        if disc[a] >= disc[u] || (a, b) == (p, u) {
                            block.push((a, b));
                            stack.pop();
                            if (a, b) == (p, u) {
                                break;
                            }
                        } else {
                            break;
                        }
                    }
                    if !block.is_empty() {
                        blocks.push(block);
                    }
                }
            }
        }
    }
    if !stack.is_empty() {
        blocks.push(stack);
    }
    blocks
}

/// Splices a block's face structure into the global rotation: at each vertex
/// the block's cyclic order is appended as a contiguous arc.
///
/// Faces arrive as directed vertex cycles `[v0, v1, ..., vk]` standing for
/// the directed edges `(v0,v1), ..., (vk,v0)`.
fn splice_rotation(rot: &mut [Vec<usize>], faces: &[Vec<usize>]) {
    let mut next: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for face in faces {
        let m = face.len();
        for k in 0..m {
            let u = face[k];
            let v = face[(k + 1) % m];
            let w = face[(k + 2) % m];
            // After entering v from u, the face leaves along (v,w):
            // rotation successor of u at v is w.
            next.insert((v, u), w);
        }
    }
    let mut by_vertex: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(v, u) in next.keys() {
        by_vertex.entry(v).or_default().push(u);
    }
    for (v, neighbors) in by_vertex {
        let start = neighbors[0];
        let mut cycle = vec![start];
        let mut cur = next[&(v, start)];
        while cur != start {
            cycle.push(cur);
            cur = next[&(v, cur)];
        }
        debug_assert_eq!(
            cycle.len(),
            neighbors.len(),
            "rotation at {v} is not a single cycle"
        );
        rot[v].extend(cycle);
    }
}

/// Embeds one block (a single edge or a 2-connected subgraph), returning its
/// directed face cycles as vertex lists, or `None` when nonplanar.
///
/// Classic face-by-face embedding: start from a cycle, then repeatedly take
/// a bridge of the unembedded remainder, prefer one with a unique admissible
/// face, and route one of its paths through an admissible face, splitting it.
fn embed_block(g: &SimpleGraph, block_edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    if block_edges.len() == 1 {
        let (u, v) = block_edges[0];
        // A lone edge has a single face walked u -> v -> u.
        return Some(vec![vec![u, v]]);
    }
    let n = g.vertex_count();
    let mut st = BlockState::new(n, block_edges);
    let cycle = st.find_cycle()?;
    st.init_faces(cycle);

    let mut chord_buf: Vec<usize> = Vec::new();
    let mut comp_reps: Vec<usize> = Vec::new();
    while st.embedded_count < st.edges.len() {
        // Bridges of the remainder: chords between embedded vertices, and
        // components of the unembedded vertices.
        chord_buf.clear();
        for (idx, &(u, v)) in st.edges.iter().enumerate() {
            if !st.edge_embedded[idx] && st.in_h[u] && st.in_h[v] {
                chord_buf.push(idx);
            }
        }
        comp_reps.clear();
        for i in 0..st.verts.len() {
            let v = st.verts[i];
            st.seen[v] = st.in_h[v];
        }
        for i in 0..st.verts.len() {
            let s = st.verts[i];
            if st.seen[s] {
                continue;
            }
            comp_reps.push(s);
            st.mark_component(s);
        }

        // Pick a bridge: any with a unique admissible face if one exists,
        // otherwise the first; none admissible anywhere means nonplanar.
        let mut chosen: Option<(BridgeRef, usize)> = None;
        let mut have_forced = false;
        let mut attachments: Vec<usize> = Vec::new();
        for &idx in &chord_buf {
            let (u, v) = st.edges[idx];
            attachments.clear();
            attachments.extend([u, v]);
            match st.pick_face(&attachments) {
                FacePick::None => return None,
                FacePick::Unique(f) => {
                    chosen = Some((BridgeRef::Chord(idx), f));
                    have_forced = true;
                    break;
                }
                FacePick::Several(f) => {
                    if chosen.is_none() {
                        chosen = Some((BridgeRef::Chord(idx), f));
                    }
                }
            }
        }
        if !have_forced {
            for &rep in &comp_reps {
                st.component_attachments(rep, &mut attachments);
                match st.pick_face(&attachments) {
                    FacePick::None => return None,
                    FacePick::Unique(f) => {
                        chosen = Some((BridgeRef::Component(rep), f));
                        break;
                    }
                    FacePick::Several(f) => {
                        if chosen.is_none() {
                            chosen = Some((BridgeRef::Component(rep), f));
                        }
                    }
                }
            }
        }
        let (bridge, face) = chosen.expect("remainder nonempty implies a bridge");
        let path = match bridge {
            BridgeRef::Chord(idx) => {
                let (u, v) = st.edges[idx];
                vec![u, v]
            }
            BridgeRef::Component(rep) => {
                st.component_attachments(rep, &mut attachments);
                st.bridge_path(rep, attachments[0], *attachments.last().unwrap())
            }
        };
        st.embed_path(face, &path);
    }
    Some(st.faces)
}

enum BridgeRef {
    Chord(usize),
    Component(usize),
}

enum FacePick {
    None,
    Unique(usize),
    Several(usize),
}

struct BlockState {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    verts: Vec<usize>,
    in_h: Vec<bool>,
    edge_embedded: Vec<bool>,
    embedded_count: usize,
    faces: Vec<Vec<usize>>,
    // Scratch buffers.
    seen: Vec<bool>,
    mark: Vec<bool>,
    stack: Vec<usize>,
}

impl BlockState {
    fn new(n: usize, block_edges: &[(usize, usize)]) -> Self {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut verts = Vec::new();
        let mut in_block = vec![false; n];
        let mut edges: Vec<(usize, usize)> = block_edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            for w in [u, v] {
                if !in_block[w] {
                    in_block[w] = true;
                    verts.push(w);
                }
            }
        }
        for &v in &verts {
            adj[v].sort_unstable();
        }
        verts.sort_unstable();
        let m = edges.len();
        BlockState {
            adj,
            edges,
            verts,
            in_h: vec![false; n],
            edge_embedded: vec![false; m],
            embedded_count: 0,
            faces: Vec::new(),
            seen: vec![false; n],
            mark: vec![false; n],
            stack: Vec::new(),
        }
    }

    fn edge_index(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search(&key)
            .expect("edge belongs to block")
    }

    fn find_cycle(&self) -> Option<Vec<usize>> {
        let &start = self.verts.first()?;
        let n = self.in_h.len();
        // 0 = unvisited, 1 = on the current DFS path, 2 = finished.
        let mut state = vec![0u8; n];
        let mut parent = vec![usize::MAX; n];
        let mut frames = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(&mut (u, ref mut i)) = frames.last_mut() {
            if *i < self.adj[u].len() {
                let v = self.adj[u][*i];
                *i += 1;
                if parent[u] == v {
                    continue;
                }
                match state[v] {
                    0 => {
                        state[v] = 1;
                        parent[v] = u;
                        frames.push((v, 0));
                    }
                    1 => {
                        // Back edge to an ancestor: walk u up to v.
                        let mut cycle = vec![u];
                        let mut cur = u;
                        while cur != v {
                            cur = parent[cur];
                            cycle.push(cur);
                        }
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                state[u] = 2;
                frames.pop();
            }
        }
        None
    }

    fn init_faces(&mut self, cycle: Vec<usize>) {
        for k in 0..cycle.len() {
            let idx = self.edge_index(cycle[k], cycle[(k + 1) % cycle.len()]);
            self.edge_embedded[idx] = true;
            self.embedded_count += 1;
        }
        for &v in &cycle {
            self.in_h[v] = true;
        }
        let mut rev = cycle.clone();
        rev.reverse();
        self.faces.push(cycle);
        self.faces.push(rev);
    }

    /// Marks the component of unembedded vertex `s` as seen.
    fn mark_component(&mut self, s: usize) {
        self.stack.clear();
        self.stack.push(s);
        self.seen[s] = true;
        while let Some(u) = self.stack.pop() {
            for i in 0..self.adj[u].len() {
                let v = self.adj[u][i];
                if !self.in_h[v] && !self.seen[v] {
                    self.seen[v] = true;
                    self.stack.push(v);
                }
            }
        }
    }

    /// Attachment vertices (sorted) of the component containing `rep`.
    fn component_attachments(&mut self, rep: usize, out: &mut Vec<usize>) {
        out.clear();
        self.stack.clear();
        self.stack.push(rep);
        self.mark[rep] = true;
        let mut comp = vec![rep];
        while let Some(u) = self.stack.pop() {
            for i in 0..self.adj[u].len() {
                let v = self.adj[u][i];
                if self.in_h[v] {
                    if !self.mark[v] {
                        self.mark[v] = true;
                        out.push(v);
                    }
                } else if !self.mark[v] {
                    self.mark[v] = true;
                    comp.push(v);
                    self.stack.push(v);
                }
            }
        }
        for &v in comp.iter().chain(out.iter()) {
            self.mark[v] = false;
        }
        out.sort_unstable();
    }

    /// First admissible face for a set of attachments, flagged unique when
    /// it is the only one.
    fn pick_face(&mut self, attachments: &[usize]) -> FacePick {
        let mut first: Option<usize> = None;
        let mut count = 0;
        for (fi, face) in self.faces.iter().enumerate() {
            for &v in face {
                self.mark[v] = true;
            }
            let ok = attachments.iter().all(|&a| self.mark[a]);
            for &v in face {
                self.mark[v] = false;
            }
            if ok {
                count += 1;
                if first.is_none() {
                    first = Some(fi);
                }
                if count > 1 {
                    break;
                }
            }
        }
        match (count, first) {
            (0, _) => FacePick::None,
            (1, Some(f)) => FacePick::Unique(f),
            (_, Some(f)) => FacePick::Several(f),
            _ => unreachable!(),
        }
    }

    /// BFS path a -> ... -> b through the unembedded component of `rep`.
    fn bridge_path(&mut self, rep: usize, a: usize, b: usize) -> Vec<usize> {
        debug_assert_ne!(a, b, "2-connected block bridge with one attachment");
        let n = self.in_h.len();
        let mut prev = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        let _ = rep;
        for i in 0..self.adj[a].len() {
            let x = self.adj[a][i];
            if !self.in_h[x] && prev[x] == usize::MAX {
                prev[x] = a;
                queue.push_back(x);
            }
        }
        while let Some(u) = queue.pop_front() {
            if self.adj[u].binary_search(&b).is_ok() {
                let mut path = vec![b, u];
                let mut cur = u;
                while cur != a {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
            for i in 0..self.adj[u].len() {
                let v = self.adj[u][i];
                if !self.in_h[v] && prev[v] == usize::MAX {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        unreachable!("bridge component disconnected from attachment")
    }

    fn embed_path(&mut self, face_idx: usize, path: &[usize]) {
        let face = self.faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&v| v == a).unwrap();
        let ib = face.iter().position(|&v| v == b).unwrap();
        let m = face.len();

        // Walk the face from a to b and from b to a.
        let mut fwd = Vec::new();
        let mut k = ia;
        loop {
            fwd.push(face[k]);
            if k == ib {
                break;
            }
            k = (k + 1) % m;
        }
        let mut bwd = Vec::new();
        let mut k = ib;
        loop {
            bwd.push(face[k]);
            if k == ia {
                break;
            }
            k = (k + 1) % m;
        }

        let interior = &path[1..path.len() - 1];
        // Face 1: a -> (face) -> b, then the path reversed back to a.
        let mut f1 = fwd;
        f1.extend(interior.iter().rev());
        // Face 2: b -> (face) -> a, then the path forward back to b.
        let mut f2 = bwd;
        f2.extend(interior.iter());
        self.faces.push(f1);
        self.faces.push(f2);

        for &w in interior {
            self.in_h[w] = true;
        }
        for win in path.windows(2) {
            let idx = self.edge_index(win[0], win[1]);
            if !self.edge_embedded[idx] {
                self.edge_embedded[idx] = true;
                self.embedded_count += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::new(n, &edges)
    }

    fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        SimpleGraph::new(a + b, &edges)
    }

    #[test]
    fn small_planar_graphs() {
        assert!(is_planar(&complete(1)));
        assert!(is_planar(&complete(2)));
        assert!(is_planar(&complete(3)));
        assert!(is_planar(&complete(4)));
        assert!(is_planar(&complete_bipartite(2, 3)));
        // Trees and cycles.
        assert!(is_planar(&SimpleGraph::new(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4)]
        )));
        assert!(is_planar(&SimpleGraph::new(
            4,
            &[(0, 1), (1, 2), (2, 3), (3, 0)]
        )));
        // Disconnected.
        assert!(is_planar(&SimpleGraph::new(6, &[(0, 1), (2, 3), (4, 5)])));
        assert!(is_planar(&SimpleGraph::new(3, &[])));
    }

    #[test]
    fn kuratowski_graphs_are_nonplanar() {
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(!is_planar(&complete(6)));
    }

    #[test]
    fn subdivided_kuratowski_is_nonplanar() {
        // K_5 with every edge subdivided once: still nonplanar.
        let k5 = complete(5);
        let mut edges = Vec::new();
        let mut next = 5;
        for (u, v) in k5.edges() {
            edges.push((u, next));
            edges.push((next, v));
            next += 1;
        }
        assert!(!is_planar(&SimpleGraph::new(next, &edges)));
    }

    #[test]
    fn witness_satisfies_euler() {
        for g in [
            complete(4),
            complete_bipartite(2, 3),
            SimpleGraph::new(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 3),
                    (5, 6),
                ],
            ),
        ] {
            let rot = planar_embedding(&g).expect("planar");
            assert!(is_sphere_embedding(&g, &rot));
            // Every neighbor appears exactly once in the rotation.
            for v in 0..g.vertex_count() {
                let mut r = rot.0[v].clone();
                r.sort_unstable();
                assert_eq!(r, g.neighbors(v));
            }
        }
    }

    #[test]
    fn planar_plus_edge_flips() {
        // The octahedron K_{2,2,2} is planar; K_{2,2,2} plus any chord in a
        // part is K-something nonplanar? Adding one edge keeps it simple:
        // check the maximal planar bound instead.
        let octa = SimpleGraph::new(
            6,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
            ],
        );
        assert!(is_planar(&octa));
        assert_eq!(octa.edge_count(), 12); // 3*6 - 6: maximal planar
    }

    /// Independent oracle: brute-force search for a genus-0 rotation system.
    fn planar_by_rotation_search(g: &SimpleGraph) -> bool {
        fn rec(g: &SimpleGraph, rot: &mut Vec<Vec<usize>>, v: usize) -> bool {
            if v == g.vertex_count() {
                return is_sphere_embedding(g, &Rotation(rot.clone()));
            }
            let nbrs = g.neighbors(v).to_vec();
            if nbrs.len() <= 2 {
                rot[v] = nbrs;
                return rec(g, rot, v + 1);
            }
            let first = nbrs[0];
            let rest: Vec<usize> = nbrs[1..].to_vec();
            let mut perm = rest.clone();
            permute(&mut perm, 0, &mut |p| {
                let mut cycle = vec![first];
                cycle.extend_from_slice(p);
                rot[v] = cycle;
                rec(g, rot, v + 1)
            })
        }
        fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
            if k == items.len() {
                return f(items);
            }
            for i in k..items.len() {
                items.swap(k, i);
                if permute(items, k + 1, f) {
                    items.swap(k, i);
                    return true;
                }
                items.swap(k, i);
            }
            false
        }
        let mut rot = vec![Vec::new(); g.vertex_count()];
        rec(g, &mut rot, 0)
    }

    #[test]
    fn agrees_with_rotation_search_on_small_graphs() {
        // Deterministic battery of graphs on up to 6 vertices.
        let mut cases: Vec<SimpleGraph> = vec![
            complete(5),
            complete_bipartite(3, 3),
            complete_bipartite(2, 3),
            complete(4),
        ];
        // All graphs on 5 vertices with 7..9 edges from a fixed pseudo-random
        // sweep of edge subsets.
        let all_edges: Vec<(usize, usize)> = complete(5).edges();
        for seed in 0..200u32 {
            let mut picked = Vec::new();
            let mut x = seed.wrapping_mul(2654435761).wrapping_add(17);
            for &e in &all_edges {
                x = x.wrapping_mul(1664525).wrapping_add(1013904223);
                if x % 3 != 0 {
                    picked.push(e);
                }
            }
            cases.push(SimpleGraph::new(5, &picked));
        }
        for g in cases {
            assert_eq!(
                is_planar(&g),
                planar_by_rotation_search(&g),
                "disagreement on {:?}",
                g.edges()
            );
        }
    }
}
