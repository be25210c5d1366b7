//! Engine for the boundary case h = Δ−2 (Δ ≥ 4): recurse on G−uv for a
//! max-degree vertex u and its max-degree neighbor v, then repair the
//! coloring locally with the forbidden-set calculus.

use std::collections::BTreeSet;

use crate::coloring::{unique_colors, Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// F(x): a designated h-subset of x's unique colors when x has at least h
/// of them, otherwise all colors on x's colored neighborhood. In both
/// cases |F(x)| ≤ Δ−2, and coloring an uncolored neighbor of x with a
/// color outside F(x) cannot drop x below h unique colors.
fn f_set(g: &Graph, phi: &Coloring, x: VertexId, h: u32) -> BTreeSet<Color> {
    let uniq = unique_colors(g, phi, x).expect("vertex in range");
    if uniq.len() as u32 >= h {
        uniq.into_iter().take(h as usize).collect()
    } else {
        let mut all = BTreeSet::new();
        for &u in g.neighbors(x) {
            if let Some(c) = phi.get(u) {
                all.insert(c);
            }
        }
        all
    }
}

/// B(y; S) = φ(N(y)) ∪ ⋃_{x ∈ N(y) \ S} F(x).
fn b_set(g: &Graph, phi: &Coloring, y: VertexId, skip: Option<VertexId>, h: u32) -> BTreeSet<Color> {
    let mut b = BTreeSet::new();
    for &u in g.neighbors(y) {
        if let Some(c) = phi.get(u) {
            b.insert(c);
        }
    }
    for &x in g.neighbors(y) {
        if Some(x) == skip {
            continue;
        }
        b.extend(f_set(g, phi, x, h));
    }
    b
}

fn smallest_outside(b: &BTreeSet<Color>, palette: u32) -> Option<Color> {
    (1..=palette).find(|c| !b.contains(c))
}

/// Proper h-CF coloring for h = Δ(g)−2, Δ(g) ≥ 4, within Δ²−Δ−1 colors.
/// Recurses through the dispatcher on G−uv and repairs u, v (and a third
/// neighbor w when deg(v) < Δ) by recoloring outside their B-sets.
pub fn color_h_eq_dm2(g: &Graph, h: u32) -> Result<Coloring> {
    let delta = g.max_degree() as u32;
    if h + 2 != delta {
        return Err(Error::Input(format!("engine needs h = Δ−2, got h={h}, Δ={delta}")));
    }
    if delta < 4 {
        return Err(Error::Input(format!(
            "engine needs Δ ≥ 4, got Δ={delta}; the Δ=3 case is exact"
        )));
    }
    let palette = (h + 1) * delta - 1;

    let u = (0..g.n())
        .max_by_key(|&x| (g.degree(x), std::cmp::Reverse(x)))
        .expect("nonempty graph");
    let v = g
        .neighbors(u)
        .iter()
        .copied()
        .max_by_key(|&x| (g.degree(x), std::cmp::Reverse(x)))
        .expect("max degree vertex has neighbors");

    let sub = g.remove_edge(u, v)?;
    let inner = super::color_hcf(&sub, h, &super::HcfOptions::default())?;
    let mut phi = inner.coloring;
    if phi.palette > palette {
        return Err(Error::EngineFailure(format!(
            "recursive coloring used palette {} beyond {palette}",
            phi.palette
        )));
    }
    phi.palette = palette;

    if g.degree(v) as u32 == delta {
        phi.colors[v] = 0;
        let b = b_set(g, &phi, v, Some(u), h);
        let c = smallest_outside(&b, palette).ok_or_else(|| {
            Error::EngineFailure(format!("B(v;u) covers the palette at {v}"))
        })?;
        phi.colors[v] = c;
    } else {
        let w = g
            .neighbors(u)
            .iter()
            .copied()
            .find(|&x| x != v)
            .expect("Δ ≥ 4 leaves u another neighbor");
        for &x in &[u, v, w] {
            phi.colors[x] = 0;
        }
        for &x in &[u, v, w] {
            let b = b_set(g, &phi, x, None, h);
            let c = smallest_outside(&b, palette).ok_or_else(|| {
                Error::EngineFailure(format!("B(x;∅) covers the palette at {x}"))
            })?;
            phi.colors[x] = c;
        }
    }
    Ok(phi)
}
