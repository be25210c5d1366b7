//! Immutable simple undirected graphs with dense integer vertex ids.
//!
//! Vertices are `0..n`. Graphs are immutable after construction; the
//! "remove" operations return new values together with an index map so
//! recursive engines can color a subgraph and lift the result back.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edge_count: usize,
}

/// A path or cycle given by its vertex sequence.
///
/// Consecutive vertices are adjacent; if `is_cycle`, the last vertex is
/// also adjacent to the first. No vertex repeats.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CyclePath {
    pub vertices: Vec<VertexId>,
    pub is_cycle: bool,
}

impl CyclePath {
    pub fn cycle(vertices: Vec<VertexId>) -> Self {
        CyclePath { vertices, is_cycle: true }
    }

    pub fn path(vertices: Vec<VertexId>) -> Self {
        CyclePath { vertices, is_cycle: false }
    }

    /// Number of edges on the ear.
    pub fn edge_len(&self) -> usize {
        if self.is_cycle {
            self.vertices.len()
        } else {
            self.vertices.len().saturating_sub(1)
        }
    }

    /// Edges of the ear as unordered pairs.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_len());
        for w in self.vertices.windows(2) {
            out.push(ordered(w[0], w[1]));
        }
        if self.is_cycle && self.vertices.len() >= 2 {
            out.push(ordered(*self.vertices.last().unwrap(), self.vertices[0]));
        }
        out
    }

    /// Checks adjacency of consecutive vertices, the closing edge for
    /// cycles, and that no vertex repeats.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::Input("empty vertex sequence".into()));
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.vertices {
            if v >= g.n() {
                return Err(Error::Input(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::Input(format!("vertex {v} repeats on ear")));
            }
            seen[v] = true;
        }
        for w in self.vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::Input(format!("{} and {} not adjacent", w[0], w[1])));
            }
        }
        if self.is_cycle {
            if self.vertices.len() < 3 {
                return Err(Error::Input("cycle shorter than 3".into()));
            }
            let (a, b) = (*self.vertices.last().unwrap(), self.vertices[0]);
            if !g.has_edge(a, b) {
                return Err(Error::Input(format!("closing edge {a}-{b} missing")));
            }
        }
        Ok(())
    }
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph from an edge list. Self-loops are rejected,
    /// duplicate edges are collapsed.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph { adj, edge_count: edge_count / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.n() {
            return Err(Error::Input(format!("unknown vertex {v} (n={})", self.n())));
        }
        Ok(())
    }

    /// Edges as ordered pairs (u < v), sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `s`; `usize::MAX` for unreachable vertices.
    pub fn bfs_distances(&self, s: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_two_edge_connected(&self) -> bool {
        self.n() > 0 && self.is_connected() && self.cut_edges().is_empty()
    }

    /// The square of the graph: same vertices, edges between all pairs at
    /// distance 1 or 2.
    pub fn square(&self) -> Graph {
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); self.n()];
        for u in 0..self.n() {
            let mut mark = vec![false; self.n()];
            mark[u] = true;
            for &v in &self.adj[u] {
                mark[v] = true;
            }
            for &v in &self.adj[u] {
                for &w in &self.adj[v] {
                    mark[w] = true;
                }
            }
            for (w, &m) in mark.iter().enumerate() {
                if m && w != u {
                    adj[u].push(w);
                }
            }
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, edge_count }
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n() {
            for v in (u + 1)..self.n() {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n(), &edges).expect("complement edges valid")
    }

    /// Bridges of the graph via a low-link DFS, as ordered pairs sorted.
    pub fn cut_edges(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.n();
        let mut ord = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut bridges = Vec::new();
        let mut counter = 0usize;
        // Iterative DFS: stack holds (vertex, parent edge endpoint, next neighbor index).
        for start in 0..n {
            if ord[start] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(VertexId, VertexId, usize)> = vec![(start, usize::MAX, 0)];
            ord[start] = counter;
            low[start] = counter;
            counter += 1;
            while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[u].len() {
                    let w = self.adj[u][*idx];
                    *idx += 1;
                    if ord[w] == usize::MAX {
                        ord[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push((w, u, 0));
                    } else if w != parent {
                        low[u] = low[u].min(ord[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > ord[p] {
                            bridges.push(ordered(p, u));
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// Shortest cycle, or `None` for forests.
    ///
    /// Among shortest cycles, returns one through a vertex of minimum
    /// degree over all shortest-cycle vertices; ties among those are
    /// broken by the lexicographically smallest vertex sequence after
    /// rotating the min-degree vertex to the end.
    pub fn girth_cycle(&self) -> Option<CyclePath> {
        let girth = self.girth()?;
        // Vertices on some shortest cycle: BFS candidate length from v equals the girth.
        let mut on_short: Vec<VertexId> = (0..self.n())
            .filter(|&v| self.shortest_cycle_through(v) == Some(girth))
            .collect();
        let dmin = on_short.iter().map(|&v| self.degree(v)).min()?;
        on_short.retain(|&v| self.degree(v) == dmin);
        let mut best: Option<Vec<VertexId>> = None;
        for &v in &on_short {
            self.enumerate_cycles_through(v, girth, &mut |seq| {
                if best.as_ref().map_or(true, |b| seq < b.as_slice()) {
                    best = Some(seq.to_vec());
                }
            });
        }
        best.map(CyclePath::cycle)
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Option<usize> {
        (0..self.n()).filter_map(|v| self.shortest_cycle_through(v)).min()
    }

    // Length of a shortest closed walk through v computed from BFS; equals
    // the length of a shortest cycle through v whenever it equals the girth.
    fn shortest_cycle_through(&self, v: VertexId) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut parent = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::from([v]);
        dist[v] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut best = None;
        for u in 0..self.n() {
            if dist[u] == usize::MAX {
                continue;
            }
            for &w in &self.adj[u] {
                if w <= u || dist[w] == usize::MAX || parent[u] == w || parent[w] == u {
                    continue;
                }
                let cand = dist[u] + dist[w] + 1;
                if best.map_or(true, |b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        best
    }

    // Enumerates all cycles of length exactly `len` through `v`, reporting
    // each as a sequence ending at v. Pruned by BFS distance back to v.
    fn enumerate_cycles_through(&self, v: VertexId, len: usize, report: &mut dyn FnMut(&[VertexId])) {
        let dist = self.bfs_distances(v);
        let mut path = vec![v];
        let mut on_path = vec![false; self.n()];
        on_path[v] = true;
        self.cycle_dfs(v, len, &dist, &mut path, &mut on_path, report);
    }

    fn cycle_dfs(
        &self,
        v: VertexId,
        len: usize,
        dist: &[usize],
        path: &mut Vec<VertexId>,
        on_path: &mut Vec<bool>,
        report: &mut dyn FnMut(&[VertexId]),
    ) {
        let depth = path.len() - 1;
        let cur = *path.last().unwrap();
        if depth == len - 1 {
            if self.has_edge(cur, v) {
                // Sequence ends at v: rotate so path[0]=v moves to the back.
                let mut seq: Vec<VertexId> = path[1..].to_vec();
                seq.push(v);
                report(&seq);
            }
            return;
        }
        for &w in &self.adj[cur] {
            if on_path[w] || dist[w] > len - 1 - depth {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            self.cycle_dfs(v, len, dist, path, on_path, report);
            path.pop();
            on_path[w] = false;
        }
    }

    /// Same vertex set with one edge removed.
    pub fn remove_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::Input(format!("edge ({u},{v}) not present")));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        g.edge_count -= 1;
        Ok(g)
    }

    /// Removes a set of vertices. Returns the new graph and the index map
    /// `new id -> old id` (survivors keep their relative order).
    pub fn remove_vertices(&self, vs: &[VertexId]) -> Result<(Graph, Vec<VertexId>)> {
        let mut drop = vec![false; self.n()];
        for &v in vs {
            self.check_vertex(v)?;
            drop[v] = true;
        }
        let keep: Vec<VertexId> = (0..self.n()).filter(|&v| !drop[v]).collect();
        self.induced(&keep)
    }

    pub fn remove_vertex(&self, v: VertexId) -> Result<(Graph, Vec<VertexId>)> {
        self.remove_vertices(&[v])
    }

    /// Induced subgraph on `vs`. Returns the graph and the index map
    /// `new id -> old id`.
    pub fn induced(&self, vs: &[VertexId]) -> Result<(Graph, Vec<VertexId>)> {
        let mut old_of: Vec<VertexId> = vs.to_vec();
        old_of.sort_unstable();
        old_of.dedup();
        let mut new_of = vec![usize::MAX; self.n()];
        for (new, &old) in old_of.iter().enumerate() {
            self.check_vertex(old)?;
            new_of[old] = new;
        }
        let mut adj = vec![Vec::new(); old_of.len()];
        let mut edge_count = 0;
        for (new, &old) in old_of.iter().enumerate() {
            for &w in &self.adj[old] {
                let nw = new_of[w];
                if nw != usize::MAX {
                    adj[new].push(nw);
                }
            }
            adj[new].sort_unstable();
            edge_count += adj[new].len();
        }
        Ok((Graph { adj, edge_count: edge_count / 2 }, old_of))
    }
}
