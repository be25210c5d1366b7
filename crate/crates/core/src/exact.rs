//! Brute-force / branch-and-bound ground truth for chromatic parameters
//! on desk-scale graphs.
//!
//! The search orders vertices by a degeneracy peel (reversed, so the core
//! is assigned first), canonicalizes colors (color c+1 may first appear
//! only after color c), and prunes the h-CF and dynamic conditions both
//! lazily (when a neighborhood completes) and optimistically (a vertex's
//! remaining uncolored neighbors must be able to supply its deficit).

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Which coloring notion the oracle decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExactMode {
    Proper,
    Odd,
    Hcf(u32),
    Dynamic(u32),
    /// Proper coloring of the square of the graph.
    Square,
}

impl ExactMode {
    pub fn name(&self) -> String {
        match self {
            ExactMode::Proper => "proper".into(),
            ExactMode::Odd => "odd".into(),
            ExactMode::Hcf(h) => format!("hcf({h})"),
            ExactMode::Dynamic(h) => format!("dynamic({h})"),
            ExactMode::Square => "square".into(),
        }
    }
}

/// Node and wall-clock limits for one query.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 100_000_000, max_millis: 60_000 }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes, ..Budget::default() }
    }
}

/// Decision outcome. Budget exhaustion is distinct from "none".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(Coloring),
    None,
    BudgetExceeded,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub outcome: Outcome,
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Exact,
    Budget,
}

/// Result of a minimizing query. On budget exhaustion `value` is absent
/// and `lower`/`upper` bracket the parameter.
#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub value: Option<u32>,
    pub witness: Option<Coloring>,
    pub lower: u32,
    pub upper: Option<u32>,
    pub status: Status,
    pub nodes: u64,
}

struct Searcher<'g> {
    g: &'g Graph,
    mode: ExactMode,
    k: u32,
    order: Vec<VertexId>,
    colors: Vec<Color>,
    // cnt[v][c] = multiplicity of color c among colored neighbors of v
    cnt: Vec<Vec<u16>>,
    distinct: Vec<u32>,
    unique: Vec<u32>,
    uncolored_nbrs: Vec<u32>,
    canonical: bool,
    nodes: u64,
    budget: Budget,
    start: Instant,
    out_of_budget: bool,
}

fn hv(g: &Graph, v: VertexId, h: u32) -> u32 {
    (g.degree(v) as u32).min(h)
}

impl<'g> Searcher<'g> {
    fn new(g: &'g Graph, mode: ExactMode, k: u32, budget: Budget, canonical: bool) -> Self {
        let order = search_order(g);
        Searcher {
            g,
            mode,
            k,
            order,
            colors: vec![0; g.n()],
            cnt: vec![vec![0; k as usize + 1]; g.n()],
            distinct: vec![0; g.n()],
            unique: vec![0; g.n()],
            uncolored_nbrs: (0..g.n()).map(|v| g.degree(v) as u32).collect(),
            canonical,
            nodes: 0,
            budget,
            start: Instant::now(),
            out_of_budget: false,
        }
    }

    fn budget_hit(&mut self) -> bool {
        if self.out_of_budget {
            return true;
        }
        if self.nodes > self.budget.max_nodes
            || (self.nodes % 4096 == 0
                && self.start.elapsed().as_millis() as u64 > self.budget.max_millis)
        {
            self.out_of_budget = true;
        }
        self.out_of_budget
    }

    // Places color c on v and checks the constraints it can decide.
    // Returns false (after undoing nothing visible to the caller; the
    // caller must call unassign) if a constraint fails.
    fn assign(&mut self, v: VertexId, c: Color) {
        self.colors[v] = c;
        for &u in self.g.neighbors(v) {
            let m = &mut self.cnt[u][c as usize];
            *m += 1;
            match *m {
                1 => {
                    self.distinct[u] += 1;
                    self.unique[u] += 1;
                }
                2 => self.unique[u] -= 1,
                _ => {}
            }
            self.uncolored_nbrs[u] -= 1;
        }
    }

    fn unassign(&mut self, v: VertexId) {
        let c = self.colors[v];
        self.colors[v] = 0;
        for &u in self.g.neighbors(v) {
            let m = &mut self.cnt[u][c as usize];
            *m -= 1;
            match *m {
                0 => {
                    self.distinct[u] -= 1;
                    self.unique[u] -= 1;
                }
                1 => self.unique[u] += 1,
                _ => {}
            }
            self.uncolored_nbrs[u] += 1;
        }
    }

    // Constraint screen after v got its color: neighbors with completed
    // neighborhoods are checked exactly; h-CF and dynamic neighbors are
    // also screened optimistically.
    fn feasible_after(&self, v: VertexId) -> bool {
        for &u in self.g.neighbors(v) {
            match self.mode {
                ExactMode::Proper | ExactMode::Square => {}
                ExactMode::Odd => {
                    if self.uncolored_nbrs[u] == 0 && self.g.degree(u) > 0 && !self.has_odd(u) {
                        return false;
                    }
                }
                ExactMode::Hcf(h) => {
                    if self.unique[u] + self.uncolored_nbrs[u] < hv(self.g, u, h) {
                        return false;
                    }
                }
                ExactMode::Dynamic(h) => {
                    if self.distinct[u] + self.uncolored_nbrs[u] < hv(self.g, u, h) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn has_odd(&self, u: VertexId) -> bool {
        self.cnt[u].iter().any(|&m| m % 2 == 1)
    }

    fn solve(&mut self, idx: usize, max_used: u32) -> Option<bool> {
        if idx == self.order.len() {
            return Some(true);
        }
        let v = self.order[idx];
        let limit = if self.canonical { self.k.min(max_used + 1) } else { self.k };
        for c in 1..=limit {
            self.nodes += 1;
            if self.budget_hit() {
                return None;
            }
            if self.cnt[v][c as usize] > 0 {
                continue; // a neighbor already has c
            }
            self.assign(v, c);
            if self.feasible_after(v) {
                match self.solve(idx + 1, max_used.max(c)) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => {
                        self.unassign(v);
                        return None;
                    }
                }
            }
            self.unassign(v);
        }
        Some(false)
    }
}

// Degeneracy peel order (min degree first), ties by original degree then id.
fn search_order(g: &Graph) -> Vec<VertexId> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut peel = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], g.degree(v), v))
            .unwrap();
        removed[v] = true;
        peel.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    peel.reverse();
    peel
}

fn underlying<'a>(g: &'a Graph, mode: ExactMode) -> std::borrow::Cow<'a, Graph> {
    match mode {
        ExactMode::Square => std::borrow::Cow::Owned(g.square()),
        _ => std::borrow::Cow::Borrowed(g),
    }
}

/// Decides whether a coloring with exactly `k` available colors exists.
pub fn exists_coloring(g: &Graph, mode: ExactMode, k: u32, budget: Budget) -> SearchResult {
    exists_coloring_inner(g, mode, k, budget, true)
}

pub(crate) fn exists_coloring_inner(
    g: &Graph,
    mode: ExactMode,
    k: u32,
    budget: Budget,
    canonical: bool,
) -> SearchResult {
    let gg = underlying(g, mode);
    if gg.n() == 0 {
        return SearchResult {
            outcome: Outcome::Found(Coloring::empty(0, k)),
            nodes: 0,
        };
    }
    if k == 0 {
        return SearchResult { outcome: Outcome::None, nodes: 0 };
    }
    let mut s = Searcher::new(&gg, mode, k, budget, canonical);
    match s.solve(0, 0) {
        Some(true) => {
            let phi = Coloring { colors: s.colors.clone(), palette: k };
            SearchResult { outcome: Outcome::Found(phi), nodes: s.nodes }
        }
        Some(false) => SearchResult { outcome: Outcome::None, nodes: s.nodes },
        None => SearchResult { outcome: Outcome::BudgetExceeded, nodes: s.nodes },
    }
}

// Greedy clique through each start vertex; a found clique is a sound
// lower bound for every mode here.
fn clique_floor(g: &Graph) -> u32 {
    let mut best = if g.n() > 0 { 1 } else { 0 };
    for start in 0..g.n() {
        let mut clique = vec![start];
        let mut cands: Vec<VertexId> = g.neighbors(start).to_vec();
        cands.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in cands {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len() as u32);
    }
    best
}

/// Least `k` admitting a coloring, found by incrementing from the clique
/// floor. On budget exhaustion reports the bracket proven so far.
pub fn chromatic(g: &Graph, mode: ExactMode, budget: Budget) -> ChromaticResult {
    let gg = underlying(g, mode);
    if gg.n() == 0 {
        return ChromaticResult {
            value: Some(0),
            witness: Some(Coloring::empty(0, 0)),
            lower: 0,
            upper: Some(0),
            status: Status::Exact,
            nodes: 0,
        };
    }
    let floor = clique_floor(&gg);
    let mut nodes = 0;
    let mut k = floor.max(1);
    loop {
        let res = exists_coloring(g, mode, k, budget);
        nodes += res.nodes;
        match res.outcome {
            Outcome::Found(w) => {
                return ChromaticResult {
                    value: Some(k),
                    witness: Some(w),
                    lower: k,
                    upper: Some(k),
                    status: Status::Exact,
                    nodes,
                };
            }
            Outcome::None => k += 1,
            Outcome::BudgetExceeded => {
                return ChromaticResult {
                    value: None,
                    witness: None,
                    lower: k,
                    upper: Some(g.n() as u32),
                    status: Status::Budget,
                    nodes,
                };
            }
        }
        // An all-distinct coloring satisfies every mode.
        if k > g.n() as u32 {
            return ChromaticResult {
                value: None,
                witness: None,
                lower: k,
                upper: Some(g.n() as u32),
                status: Status::Budget,
                nodes,
            };
        }
    }
}

/// DSATUR greedy proper coloring; deterministic. Used as the non-exact
/// fallback when coloring squares of larger graphs.
pub fn dsatur(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors: Vec<Color> = vec![0; n];
    let mut sat: Vec<std::collections::BTreeSet<Color>> = vec![Default::default(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (sat[v].len(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let mut c = 1;
        while sat[v].contains(&c) {
            c += 1;
        }
        colors[v] = c;
        for &u in g.neighbors(v) {
            sat[u].insert(c);
        }
    }
    let palette = colors.iter().copied().max().unwrap_or(0).max(1);
    Coloring { colors, palette }
}

/// Convenience wrapper asserting the coloring exists within `k` colors and
/// returning it, failing with a budget or contract error otherwise.
pub fn require_coloring(g: &Graph, mode: ExactMode, k: u32, budget: Budget) -> Result<Coloring> {
    let res = exists_coloring(g, mode, k, budget);
    match res.outcome {
        Outcome::Found(c) => Ok(c),
        Outcome::None => Err(Error::EngineFailure(format!(
            "no {} coloring with {k} colors exists (n={}, nodes={})",
            mode.name(),
            g.n(),
            res.nodes
        ))),
        Outcome::BudgetExceeded => Err(Error::Budget(format!(
            "{} query with k={k} exceeded budget after {} nodes",
            mode.name(),
            res.nodes
        ))),
    }
}
