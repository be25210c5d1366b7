//! Partial-coloring state with the bookkeeping the greedy engine needs:
//! per-vertex color multiplicities, unique-color sets, and risky flags.
//!
//! A state is *good* when every vertex either has at least h unique colors
//! or all its colored neighbors have distinct colors. A vertex is *risky*
//! when it has an uncolored neighbor and at most h unique colors. The
//! available colors of an uncolored vertex v are the palette minus its
//! forbidden set: the colors on N(v) plus every unique color of every
//! risky neighbor. Extending with an available color keeps the state good.

use std::collections::BTreeSet;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug)]
pub struct GoodColoringState<'g> {
    g: &'g Graph,
    h: u32,
    palette: u32,
    colors: Vec<Color>,
    /// cnt[v][c] = multiplicity of color c among colored neighbors of v.
    cnt: Vec<Vec<u32>>,
    /// Colors of multiplicity exactly one per vertex, ordered.
    unique: Vec<BTreeSet<Color>>,
    uncolored_nbrs: Vec<u32>,
    /// Vertices in coloring order.
    trail: Vec<VertexId>,
}

impl<'g> GoodColoringState<'g> {
    pub fn new(g: &'g Graph, h: u32, palette: u32) -> Self {
        GoodColoringState {
            g,
            h,
            palette,
            colors: vec![0; g.n()],
            cnt: vec![vec![0; palette as usize + 1]; g.n()],
            unique: vec![BTreeSet::new(); g.n()],
            uncolored_nbrs: (0..g.n()).map(|v| g.degree(v) as u32).collect(),
            trail: Vec::with_capacity(g.n()),
        }
    }

    /// Rebuilds a state from an existing partial coloring. Used as the
    /// from-scratch oracle against the incremental updates.
    pub fn from_coloring(g: &'g Graph, h: u32, phi: &Coloring) -> Result<Self> {
        if phi.n() != g.n() {
            return Err(Error::Input("coloring size mismatch".into()));
        }
        let mut st = GoodColoringState::new(g, h, phi.palette);
        for v in 0..g.n() {
            if let Some(c) = phi.get(v) {
                st.place(v, c);
            }
        }
        Ok(st)
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn color(&self, v: VertexId) -> Option<Color> {
        match self.colors[v] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn is_colored(&self, v: VertexId) -> bool {
        self.colors[v] != 0
    }

    pub fn colored_count(&self) -> usize {
        self.trail.len()
    }

    pub fn uncolored(&self) -> Vec<VertexId> {
        (0..self.g.n()).filter(|&v| self.colors[v] == 0).collect()
    }

    pub fn trail(&self) -> &[VertexId] {
        &self.trail
    }

    pub fn as_coloring(&self) -> Coloring {
        Coloring { colors: self.colors.clone(), palette: self.palette }
    }

    pub fn unique_colors(&self, v: VertexId) -> &BTreeSet<Color> {
        &self.unique[v]
    }

    pub fn colored_neighbor_color_count(&self, v: VertexId) -> usize {
        self.cnt[v].iter().filter(|&&m| m > 0).count()
    }

    pub fn is_risky(&self, u: VertexId) -> bool {
        self.uncolored_nbrs[u] > 0 && (self.unique[u].len() as u32) <= self.h
    }

    pub fn risky_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.g.neighbors(v).iter().copied().filter(|&u| self.is_risky(u)).collect()
    }

    /// Common neighbors of u and v with exactly h+1 unique colors.
    pub fn special_common_neighbors(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        self.g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| {
                self.g.has_edge(w, v) && self.unique[w].len() as u32 == self.h + 1
            })
            .collect()
    }

    /// The forbidden set FC(v): colors on N(v) plus the unique colors of
    /// every risky neighbor.
    pub fn forbidden_colors(&self, v: VertexId) -> BTreeSet<Color> {
        let mut fc = BTreeSet::new();
        for (c, &m) in self.cnt[v].iter().enumerate() {
            if m > 0 {
                fc.insert(c as Color);
            }
        }
        for &u in self.g.neighbors(v) {
            if self.is_risky(u) {
                fc.extend(self.unique[u].iter().copied());
            }
        }
        fc
    }

    /// Available colors of an uncolored vertex, ascending.
    pub fn available_colors(&self, v: VertexId) -> Result<Vec<Color>> {
        self.g.check_vertex(v)?;
        if self.is_colored(v) {
            return Err(Error::Input(format!("vertex {v} is already colored")));
        }
        let fc = self.forbidden_colors(v);
        Ok((1..=self.palette).filter(|c| !fc.contains(c)).collect())
    }

    pub fn has_available_color(&self, v: VertexId) -> bool {
        let fc = self.forbidden_colors(v);
        (fc.len() as u32) < self.palette
    }

    fn place(&mut self, v: VertexId, c: Color) {
        debug_assert_eq!(self.colors[v], 0);
        self.colors[v] = c;
        self.trail.push(v);
        for &u in self.g.neighbors(v) {
            let m = &mut self.cnt[u][c as usize];
            *m += 1;
            match *m {
                1 => {
                    self.unique[u].insert(c);
                }
                2 => {
                    self.unique[u].remove(&c);
                }
                _ => {}
            }
            self.uncolored_nbrs[u] -= 1;
        }
    }

    /// Extends the state by coloring `v` with `c`. The color must be
    /// available; that is what keeps the state good.
    pub fn good_extend(&mut self, v: VertexId, c: Color) -> Result<()> {
        if self.is_colored(v) {
            return Err(Error::Input(format!("vertex {v} is already colored")));
        }
        if c == 0 || c > self.palette {
            return Err(Error::Contract(format!("color {c} outside palette")));
        }
        let fc = self.forbidden_colors(v);
        if fc.contains(&c) {
            return Err(Error::Contract(format!(
                "color {c} is forbidden at vertex {v}; extension would not stay good"
            )));
        }
        self.place(v, c);
        Ok(())
    }

    /// Removes the color of the most recently colored vertex.
    pub fn uncolor_last(&mut self) -> Option<VertexId> {
        let v = self.trail.pop()?;
        let c = self.colors[v];
        self.colors[v] = 0;
        for &u in self.g.neighbors(v) {
            let m = &mut self.cnt[u][c as usize];
            *m -= 1;
            match *m {
                0 => {
                    self.unique[u].remove(&c);
                }
                1 => {
                    self.unique[u].insert(c);
                }
                _ => {}
            }
            self.uncolored_nbrs[u] += 1;
        }
        Some(v)
    }

    pub fn vertex_is_good(&self, v: VertexId) -> bool {
        if self.unique[v].len() as u32 >= self.h {
            return true;
        }
        // all colored neighbors distinctly colored?
        self.cnt[v].iter().all(|&m| m <= 1)
    }

    /// From-scratch goodness check over every vertex.
    pub fn is_good(&self) -> bool {
        (0..self.g.n()).all(|v| self.vertex_is_good(v))
    }
}
