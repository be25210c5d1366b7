//! Coloring values and verdicts.
//!
//! A [`Coloring`] is a (possibly partial) assignment of colors `1..=k` to
//! vertices, with `0` standing for "uncolored". [`verify`] reports which
//! of proper / odd / h-conflict-free / h-dynamic hold, with witnesses.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Colors are `1..=palette`; `0` means uncolored.
pub type Color = u32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    /// Per-vertex color, 0 = uncolored.
    pub colors: Vec<Color>,
    /// Palette size k.
    pub palette: u32,
}

impl Coloring {
    pub fn empty(n: usize, palette: u32) -> Self {
        Coloring { colors: vec![0; n], palette }
    }

    pub fn from_colors(colors: Vec<Color>, palette: u32) -> Result<Self> {
        for (v, &c) in colors.iter().enumerate() {
            if c > palette {
                return Err(Error::Input(format!(
                    "vertex {v} has color {c} outside palette 1..={palette}"
                )));
            }
        }
        Ok(Coloring { colors, palette })
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: VertexId) -> Option<Color> {
        match self.colors[v] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn is_colored(&self, v: VertexId) -> bool {
        self.colors[v] != 0
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != 0)
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count()
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> u32 {
        let mut seen = vec![false; self.palette as usize + 1];
        let mut count = 0;
        for &c in &self.colors {
            if c != 0 && !std::mem::replace(&mut seen[c as usize], true) {
                count += 1;
            }
        }
        count
    }

    /// Largest color id used (0 if fully uncolored).
    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }
}

/// Verdict object for one coloring at one `h`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColoringReport {
    pub h: u32,
    /// Whether the coloring was total; partial inputs get advisory verdicts
    /// that only consider vertices whose closed neighborhood is colored.
    pub total: bool,
    pub proper: bool,
    pub violating_edge: Option<(VertexId, VertexId)>,
    /// Per-vertex count of colors appearing exactly once on the neighborhood.
    pub unique_color_count: Vec<u32>,
    /// Smallest odd-multiplicity color per vertex, if any.
    pub odd_color: Vec<Option<Color>>,
    pub odd_ok: bool,
    pub odd_violator: Option<VertexId>,
    pub hcf_ok: bool,
    pub hcf_violator: Option<VertexId>,
    pub dynamic_ok: bool,
    pub dynamic_violator: Option<VertexId>,
}

impl ColoringReport {
    pub fn all_ok(&self) -> bool {
        self.proper && self.odd_ok && self.hcf_ok && self.dynamic_ok
    }
}

fn color_multiplicities(g: &Graph, phi: &Coloring, v: VertexId) -> Vec<(Color, u32)> {
    let mut counts: Vec<(Color, u32)> = Vec::new();
    for &u in g.neighbors(v) {
        if let Some(c) = phi.get(u) {
            match counts.iter_mut().find(|(cc, _)| *cc == c) {
                Some((_, m)) => *m += 1,
                None => counts.push((c, 1)),
            }
        }
    }
    counts.sort_unstable();
    counts
}

/// All colors of multiplicity exactly 1 on the colored neighbors of `v`.
/// Uncolored neighbors are ignored.
pub fn unique_colors(g: &Graph, phi: &Coloring, v: VertexId) -> Result<Vec<Color>> {
    g.check_vertex(v)?;
    Ok(color_multiplicities(g, phi, v)
        .into_iter()
        .filter(|&(_, m)| m == 1)
        .map(|(c, _)| c)
        .collect())
}

/// The smallest color of odd multiplicity on N(v), or `None`.
pub fn designated_odd_color(g: &Graph, phi: &Coloring, v: VertexId) -> Option<Color> {
    color_multiplicities(g, phi, v).into_iter().find(|&(_, m)| m % 2 == 1).map(|(c, _)| c)
}

/// Verifies all four coloring notions at parameter `h`.
///
/// h-CF requires every vertex `v` to see `min(deg v, h)` colors exactly
/// once on its neighborhood; odd requires every positive-degree vertex to
/// see some color an odd number of times; h-dynamic requires at least
/// `min(deg v, h)` distinct colors on the neighborhood. Partial inputs
/// yield advisory verdicts (`total = false`) that skip vertices whose
/// closed neighborhood is not fully colored.
pub fn verify(g: &Graph, phi: &Coloring, h: u32) -> Result<ColoringReport> {
    if phi.n() != g.n() {
        return Err(Error::Input(format!(
            "coloring covers {} vertices but graph has {}",
            phi.n(),
            g.n()
        )));
    }
    if h == 0 {
        return Err(Error::Input("h must be positive".into()));
    }
    for (v, &c) in phi.colors.iter().enumerate() {
        if c > phi.palette {
            return Err(Error::Input(format!(
                "vertex {v} colored {c}, outside palette 1..={}",
                phi.palette
            )));
        }
    }

    let total = phi.is_total();
    let mut proper = true;
    let mut violating_edge = None;
    'edges: for u in 0..g.n() {
        for &w in g.neighbors(u) {
            if u < w {
                if let (Some(a), Some(b)) = (phi.get(u), phi.get(w)) {
                    if a == b {
                        proper = false;
                        violating_edge = Some((u, w));
                        break 'edges;
                    }
                }
            }
        }
    }

    let mut unique_color_count = vec![0u32; g.n()];
    let mut odd_color = vec![None; g.n()];
    let mut odd_ok = true;
    let mut odd_violator = None;
    let mut hcf_ok = true;
    let mut hcf_violator = None;
    let mut dynamic_ok = true;
    let mut dynamic_violator = None;

    for v in 0..g.n() {
        let counts = color_multiplicities(g, phi, v);
        unique_color_count[v] = counts.iter().filter(|&&(_, m)| m == 1).count() as u32;
        odd_color[v] = counts.iter().find(|&&(_, m)| m % 2 == 1).map(|&(c, _)| c);

        // Advisory mode: only judge vertices with a fully colored closed
        // neighborhood.
        let judged = total
            || (phi.is_colored(v) && g.neighbors(v).iter().all(|&u| phi.is_colored(u)));
        if !judged {
            continue;
        }
        let hv = (g.degree(v) as u32).min(h);
        if g.degree(v) > 0 && odd_color[v].is_none() && odd_ok {
            odd_ok = false;
            odd_violator = Some(v);
        }
        if unique_color_count[v] < hv && hcf_ok {
            hcf_ok = false;
            hcf_violator = Some(v);
        }
        let distinct = counts.len() as u32;
        if distinct < hv && dynamic_ok {
            dynamic_ok = false;
            dynamic_violator = Some(v);
        }
    }

    Ok(ColoringReport {
        h,
        total,
        proper,
        violating_edge,
        unique_color_count,
        odd_color,
        odd_ok,
        odd_violator,
        hcf_ok,
        hcf_violator,
        dynamic_ok,
        dynamic_violator,
    })
}
