//! Graph family generators for tests and experiments, including the
//! orthogonal-Latin-square construction that makes the (h+1)(Δ−1) lower
//! bound concrete.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A family of n−1 pairwise orthogonal Latin squares of prime order n,
/// built from modular arithmetic: `L_k(i,j) = (k·i + j) mod n`.
#[derive(Clone, Debug)]
pub struct LatinFamily {
    pub order: usize,
    /// `squares[k-1][i][j]` is the 0-based symbol of L_k at row i, column j.
    pub squares: Vec<Vec<Vec<usize>>>,
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl LatinFamily {
    /// Constructs and verifies the family. Prime orders only; prime powers
    /// would need finite-field tables.
    pub fn new(order: usize) -> Result<Self> {
        if !is_prime(order) {
            return Err(Error::Input(format!("order {order} is not prime")));
        }
        let mut squares = Vec::with_capacity(order - 1);
        for k in 1..order {
            let mut sq = vec![vec![0usize; order]; order];
            for (i, row) in sq.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = (k * i + j) % order;
                }
            }
            squares.push(sq);
        }
        let fam = LatinFamily { order, squares };
        fam.verify()?;
        Ok(fam)
    }

    /// Checks each square is Latin and every pair is orthogonal,
    /// exhaustively.
    pub fn verify(&self) -> Result<()> {
        let n = self.order;
        for (k, sq) in self.squares.iter().enumerate() {
            for i in 0..n {
                let mut row = vec![false; n];
                let mut col = vec![false; n];
                for j in 0..n {
                    if std::mem::replace(&mut row[sq[i][j]], true) {
                        return Err(Error::Structure(format!("L_{} row {} repeats", k + 1, i)));
                    }
                    if std::mem::replace(&mut col[sq[j][i]], true) {
                        return Err(Error::Structure(format!("L_{} column {} repeats", k + 1, i)));
                    }
                }
            }
        }
        for a in 0..self.squares.len() {
            for b in (a + 1)..self.squares.len() {
                let mut seen = vec![false; n * n];
                for i in 0..n {
                    for j in 0..n {
                        let pair = self.squares[a][i][j] * n + self.squares[b][i][j];
                        if std::mem::replace(&mut seen[pair], true) {
                            return Err(Error::Structure(format!(
                                "L_{} and L_{} are not orthogonal",
                                a + 1,
                                b + 2
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Role of a vertex in the Latin-square graph G_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role")]
pub enum Role {
    /// Cell vertex v_{i,j} (1-based in labels).
    V { row: usize, col: usize },
    /// Row vertex r_i.
    R { row: usize },
    /// Column vertex c_j.
    C { col: usize },
    /// Symbol vertex s_{k,t} of square L_k.
    S { square: usize, symbol: usize },
}

/// The graph G_n together with its role labels.
#[derive(Clone, Debug)]
pub struct LatinGraph {
    pub order: usize,
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub labels: Vec<String>,
}

impl LatinGraph {
    pub fn vertex_of_cell(&self, i: usize, j: usize) -> VertexId {
        i * self.order + j
    }

    /// Ids of all cell vertices v_{i,j}.
    pub fn cell_vertices(&self) -> Vec<VertexId> {
        (0..self.order * self.order).collect()
    }
}

/// Builds G_n on n² + (n−1)n + 2n vertices: every cell vertex v_{i,j} is
/// joined to its row vertex r_i, its column vertex c_j, and the symbol
/// vertex s_{k,L_k(i,j)} of each square.
pub fn latin_gn(order: usize) -> Result<LatinGraph> {
    if order < 2 {
        return Err(Error::Input("order must be at least 2".into()));
    }
    let fam = LatinFamily::new(order)?;
    let n = order;
    let v_base = 0;
    let r_base = n * n;
    let c_base = r_base + n;
    let s_base = c_base + n;
    let total = s_base + (n - 1) * n;

    let mut roles = Vec::with_capacity(total);
    let mut labels = Vec::with_capacity(total);
    for i in 0..n {
        for j in 0..n {
            roles.push(Role::V { row: i + 1, col: j + 1 });
            labels.push(format!("v_{}_{}", i + 1, j + 1));
        }
    }
    for i in 0..n {
        roles.push(Role::R { row: i + 1 });
        labels.push(format!("r_{}", i + 1));
    }
    for j in 0..n {
        roles.push(Role::C { col: j + 1 });
        labels.push(format!("c_{}", j + 1));
    }
    for k in 1..n {
        for t in 0..n {
            roles.push(Role::S { square: k, symbol: t + 1 });
            labels.push(format!("s_{}_{}", k, t + 1));
        }
    }

    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = v_base + i * n + j;
            edges.push((v, r_base + i));
            edges.push((v, c_base + j));
            for k in 1..n {
                let sym = fam.squares[k - 1][i][j];
                edges.push((v, s_base + (k - 1) * n + sym));
            }
        }
    }
    let graph = Graph::from_edges(total, &edges)?;
    Ok(LatinGraph { order, graph, roles, labels })
}

/// Checks the lower-bound certificate for G_n: the cell vertices form an
/// n²-clique in square(G_n).
pub fn latin_square_clique_holds(lg: &LatinGraph) -> bool {
    let sq = lg.graph.square();
    let cells = lg.cell_vertices();
    for (a, &u) in cells.iter().enumerate() {
        for &v in &cells[a + 1..] {
            if !sq.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("valid cycle")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("valid complete graph")
}

/// Star K_{1,leaves} with the center at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("valid star")
}

/// Wheel W_rim: a rim cycle 0..rim plus a hub joined to every rim vertex.
pub fn wheel(rim: usize) -> Graph {
    let hub = rim;
    let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, hub)));
    Graph::from_edges(rim + 1, &edges).expect("valid wheel")
}

/// Seeded random graph: candidate edges are shuffled and kept with
/// probability `p` as long as neither endpoint exceeds `max_deg`.
pub fn random_maxdeg(n: usize, max_deg: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            candidates.push((u, v));
        }
    }
    candidates.shuffle(&mut rng);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in candidates {
        if deg[u] < max_deg && deg[v] < max_deg && rng.gen_bool(p) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("valid random graph")
}

/// Seeded k-tree on `n` vertices: K_{k+1} plus iterated simplicial
/// additions, each new vertex joined to a random existing k-clique.
/// Chordal by construction.
pub fn ktree(k: usize, n: usize, seed: u64) -> Result<Graph> {
    if n < k + 1 || k == 0 {
        return Err(Error::Input(format!("ktree needs n >= k+1 >= 2, got k={k}, n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in (u + 1)..=k {
            edges.push((u, v));
        }
    }
    // All k-subsets of the initial K_{k+1} are k-cliques.
    let mut kcliques: Vec<Vec<VertexId>> = Vec::new();
    for skip in 0..=k {
        kcliques.push((0..=k).filter(|&v| v != skip).collect());
    }
    for v in (k + 1)..n {
        let pick = rng.gen_range(0..kcliques.len());
        let base = kcliques[pick].clone();
        for &u in &base {
            edges.push((u, v));
        }
        for skip in 0..k {
            let mut fresh: Vec<VertexId> =
                base.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &u)| u).collect();
            fresh.push(v);
            kcliques.push(fresh);
        }
        kcliques.push(base);
    }
    Graph::from_edges(n, &edges)
}

/// Line graph: one vertex per edge of the base graph, adjacent when the
/// base edges share an endpoint. Returns the graph and the map from line
/// vertex to base edge.
pub fn line_graph(g: &Graph) -> (Graph, Vec<(VertexId, VertexId)>) {
    let base_edges = g.edges();
    let mut edges = Vec::new();
    for (a, &(u1, v1)) in base_edges.iter().enumerate() {
        for (b, &(u2, v2)) in base_edges.iter().enumerate().skip(a + 1) {
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                edges.push((a, b));
            }
        }
    }
    let lg = Graph::from_edges(base_edges.len(), &edges).expect("valid line graph");
    (lg, base_edges)
}

/// The shipped corpus of all 996 connected graphs on 1..=7 vertices, one
/// per isomorphism class.
pub fn connected_atlas_le7() -> Vec<Graph> {
    let text = include_str!("../fixtures/connected_le7.txt");
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let nums: Vec<usize> =
            line.split_whitespace().map(|t| t.parse().expect("fixture numeric")).collect();
        let (n, m) = (nums[0], nums[1]);
        let edges: Vec<(VertexId, VertexId)> =
            (0..m).map(|i| (nums[2 + 2 * i], nums[3 + 2 * i])).collect();
        out.push(Graph::from_edges(n, &edges).expect("fixture graph"));
    }
    out
}

/// Seeded 2-edge-connected graph: a Hamiltonian cycle plus random chords.
pub fn random_two_edge_connected(n: usize, extra_edges: usize, seed: u64) -> Graph {
    assert!(n >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges: Vec<_> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    let mut tries = 0;
    let mut added = 0;
    while added < extra_edges && tries < extra_edges * 20 {
        tries += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
            edges.push((u, v));
            added += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("valid 2-edge-connected graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure;

    #[test]
    fn latin_family_orthogonality_small_primes() {
        for n in [2usize, 3, 5, 7] {
            let fam = LatinFamily::new(n).unwrap();
            assert_eq!(fam.squares.len(), n - 1);
            fam.verify().unwrap();
        }
        assert!(LatinFamily::new(4).is_err());
        assert!(LatinFamily::new(6).is_err());
    }

    #[test]
    fn latin_gn_degrees_match_formulas() {
        for n in [2usize, 3, 5] {
            let lg = latin_gn(n).unwrap();
            assert_eq!(lg.graph.n(), n * n + (n - 1) * n + 2 * n);
            for (v, role) in lg.roles.iter().enumerate() {
                let expected = match role {
                    Role::V { .. } => n + 1,
                    _ => n,
                };
                assert_eq!(lg.graph.degree(v), expected, "vertex {v} of G_{n}");
            }
            assert_eq!(lg.graph.max_degree(), n + 1);
        }
    }

    #[test]
    fn latin_g3_has_21_vertices() {
        let lg = latin_gn(3).unwrap();
        assert_eq!(lg.graph.n(), 21);
    }

    #[test]
    fn latin_g2_has_10_vertices_delta_3() {
        let lg = latin_gn(2).unwrap();
        assert_eq!(lg.graph.n(), 10);
        assert_eq!(lg.graph.max_degree(), 3);
    }

    #[test]
    fn cell_vertices_clique_in_square() {
        for n in [2usize, 3, 5] {
            let lg = latin_gn(n).unwrap();
            assert!(latin_square_clique_holds(&lg), "G_{n}");
        }
    }

    #[test]
    fn cell_vertices_induce_edgeless_graph() {
        let lg = latin_gn(3).unwrap();
        let (sub, _) = lg.graph.induced(&lg.cell_vertices()).unwrap();
        assert_eq!(sub.n(), 9);
        assert_eq!(sub.edge_count(), 0);
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let (lg, _) = line_graph(&star(3));
        assert_eq!(lg, complete(3));
    }

    #[test]
    fn line_graphs_are_claw_free() {
        for seed in 0..10u64 {
            let base = random_maxdeg(8, 5, 0.5, seed);
            let (lg, _) = line_graph(&base);
            assert!(structure::star_free(&lg, 2).free, "seed {seed}");
        }
    }

    #[test]
    fn ktrees_are_chordal_with_s_k_plus_1() {
        for (k, n, seed) in [(1usize, 8usize, 1u64), (2, 9, 2), (3, 10, 3)] {
            let g = ktree(k, n, seed).unwrap();
            let cert = structure::chordal_certificate(&g).expect("ktree is chordal");
            assert_eq!(cert.s_value, k + 1, "k={k} n={n}");
        }
    }

    #[test]
    fn family_shapes() {
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(complete(6).edge_count(), 15);
        assert_eq!(star(4).max_degree(), 4);
        let w = wheel(5);
        assert_eq!(w.n(), 6);
        assert_eq!(w.max_degree(), 5);
    }

    #[test]
    fn random_two_edge_connected_has_no_bridges() {
        for seed in 0..20u64 {
            let g = random_two_edge_connected(10, 5, seed);
            assert!(g.is_two_edge_connected(), "seed {seed}");
        }
    }
}
