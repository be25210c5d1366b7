//! Odd-coloring engines driven by clique peeling.
//!
//! The drivers repeatedly remove a large clique (or a dense adjacent
//! pair), color the residual graph, and extend back over each removal.
//! The extension steps guarantee the palette fixed from the original
//! graph always suffices:
//!   - clique K with m ≥ 2Δ−|K|+3 colors,
//!   - adjacent pair v1,v2 with K = `N[v1] ∩ N[v2]` and
//!     m ≥ 2Δ−|K|+⌈3/2+√(2|K|−3)⌉ colors.

use serde::{Deserialize, Serialize};

use crate::coloring::{designated_odd_color, verify, Color, Coloring};
use crate::error::{Error, Result};
use crate::exact::{self, Budget, ExactMode};
use crate::graph::{Graph, VertexId};
use crate::pcf::{self, HcfOptions};
use crate::structure;

/// One removal layer of a peel.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum PeelKind {
    Clique { clique: Vec<VertexId> },
    Pair { v1: VertexId, v2: VertexId, k: Vec<VertexId> },
}

impl PeelKind {
    pub fn removed(&self) -> Vec<VertexId> {
        match self {
            PeelKind::Clique { clique } => clique.clone(),
            PeelKind::Pair { v1, v2, .. } => vec![*v1, *v2],
        }
    }
}

/// Removal layer plus the precondition values that licensed it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PeelLayer {
    pub kind: PeelKind,
    /// Vertex set (original ids) of the graph this layer was peeled from.
    pub vertices: Vec<VertexId>,
    /// Max degree of that graph.
    pub delta: u32,
    /// Right-hand side of the inequality that licensed the removal.
    pub required_m: u32,
}

/// The full peel: layers in removal order, the residual base, and the
/// palette size m fixed from the original graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PeelStack {
    pub m: u32,
    pub layers: Vec<PeelLayer>,
    pub base_vertices: Vec<VertexId>,
    pub base_method: String,
}

impl PeelStack {
    /// Replays the removals from the original graph, checking each layer's
    /// vertex set, max degree, and licensing inequality.
    pub fn validate_replay(&self, g: &Graph) -> Result<()> {
        let mut current: Vec<VertexId> = (0..g.n()).collect();
        for (i, layer) in self.layers.iter().enumerate() {
            if layer.vertices != current {
                return Err(Error::Structure(format!("layer {i} vertex set mismatch")));
            }
            let (sub, _) = g.induced(&current)?;
            if sub.max_degree() as u32 != layer.delta {
                return Err(Error::Structure(format!("layer {i} records wrong max degree")));
            }
            if self.m < layer.required_m {
                return Err(Error::Structure(format!(
                    "layer {i} violates its licensing inequality: m={} < {}",
                    self.m, layer.required_m
                )));
            }
            let removed = layer.kind.removed();
            current.retain(|v| !removed.contains(v));
        }
        if current != self.base_vertices {
            return Err(Error::Structure("base vertex set mismatch".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct OddOutcome {
    pub coloring: Coloring,
    pub m: u32,
    pub stack: PeelStack,
}

/// All odd-multiplicity colors on the colored neighbors of `v`.
fn odd_colors(g: &Graph, phi: &Coloring, v: VertexId) -> Vec<Color> {
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
    counts.into_iter().filter(|&(_, m)| m % 2 == 1).map(|(c, _)| c).collect()
}

fn check_partial_odd(g: &Graph, phi: &Coloring, uncolored: &[VertexId]) -> Result<()> {
    for v in 0..g.n() {
        let should = !uncolored.contains(&v);
        if phi.is_colored(v) != should {
            return Err(Error::Contract(format!(
                "vertex {v} expected to be {}",
                if should { "colored" } else { "uncolored" }
            )));
        }
    }
    // Odd coloring of G − removed: every positive-degree vertex of the
    // residual must see an odd color among colored neighbors.
    for v in 0..g.n() {
        if uncolored.contains(&v) || phi.colors.iter().all(|&c| c == 0) {
            continue;
        }
        let cnbrs = g.neighbors(v).iter().filter(|&&u| phi.is_colored(u)).count();
        if cnbrs > 0 && odd_colors(g, phi, v).is_empty() {
            return Err(Error::Contract(format!(
                "residual coloring is not odd at vertex {v}"
            )));
        }
        for &u in g.neighbors(v) {
            if phi.is_colored(u) && phi.get(u) == phi.get(v) {
                return Err(Error::Contract(format!("residual coloring improper at {v},{u}")));
            }
        }
    }
    Ok(())
}

/// Extends an odd coloring of G−K over the clique K using m colors,
/// m ≥ 2Δ(G)−|K|+3. Pairs are routed through [`extend_over_pair`];
/// singletons have no such guarantee and are rejected.
pub fn extend_over_clique(g: &Graph, phi: &Coloring, k: &[VertexId], m: u32) -> Result<Coloring> {
    for (i, &a) in k.iter().enumerate() {
        g.check_vertex(a)?;
        for &b in &k[i + 1..] {
            if !g.has_edge(a, b) {
                return Err(Error::Contract(format!("{a},{b} not adjacent; K is not a clique")));
            }
        }
    }
    let delta = g.max_degree() as u32;
    let required = 2 * delta + 3 - k.len() as u32;
    if m < required {
        return Err(Error::Contract(format!(
            "palette m={m} below 2Δ−|K|+3 = {required}"
        )));
    }
    match k.len() {
        0 | 1 => {
            return Err(Error::Contract(
                "clique extension needs |K| ≥ 2; peel never produces smaller".into(),
            ))
        }
        2 => return extend_over_pair(g, phi, k[0], k[1], m),
        _ => {}
    }
    check_partial_odd(g, phi, k)?;

    // Per clique vertex: allowed colors exclude the colors and one
    // designated odd color of each colored neighbor.
    let mut lists: Vec<(VertexId, Vec<Color>, Vec<Color>)> = Vec::new();
    for &u in k {
        let mut forbid: Vec<Color> = Vec::new();
        for &w in g.neighbors(u) {
            if let Some(c) = phi.get(w) {
                forbid.push(c);
                if let Some(o) = designated_odd_color(g, phi, w) {
                    forbid.push(o);
                }
            }
        }
        let list: Vec<Color> = (1..=m).filter(|c| !forbid.contains(c)).collect();
        if (list.len() as u32) < k.len() as u32 + 1 {
            return Err(Error::EngineFailure(format!(
                "list at {u} has {} colors, the count argument promises {}",
                list.len(),
                k.len() + 1
            )));
        }
        let o_u = odd_colors(g, phi, u);
        lists.push((u, list, o_u));
    }
    // Vertices with many pre-existing odd colors are the constrained ones.
    lists.sort_by_key(|(u, _, o)| (std::cmp::Reverse(o.len()), *u));

    let mut assignment: Vec<Color> = vec![0; lists.len()];
    if !assign_clique(&lists, 0, &mut assignment) {
        return Err(Error::EngineFailure(
            "clique coloring search exhausted; this contradicts the counting bound".into(),
        ));
    }
    let mut out = phi.clone();
    out.palette = out.palette.max(m);
    for ((u, _, _), c) in lists.iter().zip(assignment.iter()) {
        out.colors[*u] = *c;
    }
    Ok(out)
}

// Distinct colors from the lists; a vertex u with |O(u)| = |K|−1 must not
// see exactly O(u) on K∖{u}.
fn assign_clique(
    lists: &[(VertexId, Vec<Color>, Vec<Color>)],
    idx: usize,
    assignment: &mut Vec<Color>,
) -> bool {
    if idx == lists.len() {
        for (i, (_, _, o_u)) in lists.iter().enumerate() {
            if o_u.len() == lists.len() - 1 {
                let mut others: Vec<Color> = assignment
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &c)| c)
                    .collect();
                others.sort_unstable();
                if others == *o_u {
                    return false;
                }
            }
        }
        return true;
    }
    for &c in &lists[idx].1 {
        if assignment[..idx].contains(&c) {
            continue;
        }
        assignment[idx] = c;
        if assign_clique(lists, idx + 1, assignment) {
            return true;
        }
    }
    assignment[idx] = 0;
    false
}

/// ⌈3/2 + √t⌉: the smallest c with (2c−3)² ≥ 4t.
fn ceil_three_halves_plus_sqrt(t: u32) -> u32 {
    let mut c = 2u32;
    while (2 * c as u64 - 3).pow(2) < 4 * t as u64 {
        c += 1;
    }
    c
}

fn ceil_sqrt(x: u32) -> u32 {
    let mut c = 0u32;
    while (c as u64) * (c as u64) < x as u64 {
        c += 1;
    }
    c
}

/// Extends an odd coloring of G−{v1,v2} over the adjacent pair, with
/// K = `N[v1] ∩ N[v2]` and m ≥ 2Δ(G)−|K|+⌈3/2+√(2|K|−3)⌉.
pub fn extend_over_pair(
    g: &Graph,
    phi: &Coloring,
    v1: VertexId,
    v2: VertexId,
    m: u32,
) -> Result<Coloring> {
    g.check_vertex(v1)?;
    g.check_vertex(v2)?;
    if !g.has_edge(v1, v2) {
        return Err(Error::Contract(format!("{v1} and {v2} are not adjacent")));
    }
    let mut k: Vec<VertexId> = vec![v1, v2];
    for w in 0..g.n() {
        if w != v1 && w != v2 && g.has_edge(w, v1) && g.has_edge(w, v2) {
            k.push(w);
        }
    }
    let delta = g.max_degree() as u32;
    let required = 2 * delta - k.len() as u32 + ceil_three_halves_plus_sqrt(2 * k.len() as u32 - 3);
    if m < required {
        return Err(Error::Contract(format!(
            "palette m={m} below 2Δ−|K|+⌈3/2+√(2|K|−3)⌉ = {required}"
        )));
    }
    check_partial_odd(g, phi, &[v1, v2])?;

    let list = |vi: VertexId, other: VertexId| -> Vec<Color> {
        let mut forbid: Vec<Color> = Vec::new();
        for &w in g.neighbors(vi) {
            if w == other {
                continue;
            }
            if let Some(c) = phi.get(w) {
                forbid.push(c);
            }
            if !k.contains(&w) {
                if let Some(o) = designated_odd_color(g, phi, w) {
                    forbid.push(o);
                }
            }
        }
        if let Some(o) = designated_odd_color(g, phi, other) {
            forbid.push(o);
        }
        (1..=m).filter(|c| !forbid.contains(c)).collect()
    };
    let l1 = list(v1, v2);
    let l2 = list(v2, v1);
    if l1.len() < 2 || l2.len() < 2 {
        return Err(Error::EngineFailure(format!(
            "pair lists too small ({}, {}); contradicts the counting bound",
            l1.len(),
            l2.len()
        )));
    }

    // Bad pairs: a common neighbor u with exactly two odd colors fails iff
    // {c1, c2} equals that set.
    let mut bad: Vec<[Color; 2]> = Vec::new();
    for &u in &k {
        if u == v1 || u == v2 {
            continue;
        }
        let o = odd_colors(g, phi, u);
        if o.len() == 2 {
            bad.push([o[0], o[1]]);
        }
    }
    for &c1 in &l1 {
        for &c2 in &l2 {
            if c1 == c2 {
                continue;
            }
            let pair = if c1 < c2 { [c1, c2] } else { [c2, c1] };
            if bad.contains(&pair) {
                continue;
            }
            let mut out = phi.clone();
            out.palette = out.palette.max(m);
            out.colors[v1] = c1;
            out.colors[v2] = c2;
            return Ok(out);
        }
    }
    Err(Error::EngineFailure(
        "pair coloring search exhausted; contradicts the counting bound".into(),
    ))
}

/// Palette for graphs with local clique cover number ≤ ℓ:
/// ⌊(2ℓ−1)Δ/ℓ⌋ + 2 = 2Δ − ⌈Δ/ℓ⌉ + 2.
pub fn lcc_palette(delta: u32, ell: u32) -> u32 {
    2 * delta - delta.div_ceil(ell) + 2
}

/// Palette for K_{1,ℓ+1}-free graphs: ⌊(2ℓ−1)Δ/ℓ⌋ + 1 + ⌈√(2Δ/ℓ+1)⌉.
pub fn starfree_palette(delta: u32, ell: u32) -> u32 {
    let base = (2 * ell - 1) * delta / ell;
    // smallest c with ℓ·c² ≥ 2Δ + ℓ
    let mut c = 0u32;
    while (ell as u64) * (c as u64) * (c as u64) < (2 * delta + ell) as u64 {
        c += 1;
    }
    base + 1 + c
}

/// Palette for claw-free graphs: ⌊3Δ/2⌋ + ⌈√Δ⌉.
pub fn claw_palette(delta: u32) -> u32 {
    3 * delta / 2 + ceil_sqrt(delta)
}

const BASE_THRESHOLD: usize = 10;

/// Odd coloring of a graph with lcc(G) ≤ ℓ within [`lcc_palette`] colors:
/// peels a clique of size ≥ ⌈Δ_cur/ℓ⌉+1 out of a maximum-degree vertex's
/// neighborhood cover until the residual is small, exact-colors the base,
/// then unwinds the extensions.
pub fn odd_color_lcc(g: &Graph, ell: u32) -> Result<OddOutcome> {
    if ell == 0 {
        return Err(Error::Input("ell must be positive".into()));
    }
    let m = lcc_palette(g.max_degree() as u32, ell);
    let mut layers: Vec<PeelLayer> = Vec::new();
    let mut current: Vec<VertexId> = (0..g.n()).collect();

    loop {
        let (sub, map) = g.induced(&current)?;
        if sub.n() <= BASE_THRESHOLD || sub.max_degree() <= 2 {
            break;
        }
        let delta_cur = sub.max_degree() as u32;
        let vstar = (0..sub.n())
            .max_by_key(|&v| (sub.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let clique_local = cover_clique(&sub, vstar)?;
        let need = delta_cur.div_ceil(ell) + 1;
        if (clique_local.len() as u32) < need {
            return Err(Error::Structure(format!(
                "largest cover clique at vertex {} has {} vertices, lcc ≤ {ell} demands ≥ {need}; \
                 the lcc precondition does not hold",
                map[vstar],
                clique_local.len()
            )));
        }
        let clique: Vec<VertexId> = clique_local.iter().map(|&v| map[v]).collect();
        let required_m = 2 * delta_cur + 3 - clique.len() as u32;
        if m < required_m {
            return Err(Error::Structure(format!(
                "palette m={m} cannot license removing a {}-clique at Δ={delta_cur}",
                clique.len()
            )));
        }
        layers.push(PeelLayer {
            kind: PeelKind::Clique { clique: clique.clone() },
            vertices: current.clone(),
            delta: delta_cur,
            required_m,
        });
        current.retain(|v| !clique.contains(v));
    }

    let stack_info = (current.clone(), layers);
    unwind(g, m, stack_info)
}

// Largest class of an exact minimum clique cover of N(v), plus v itself.
fn cover_clique(g: &Graph, v: VertexId) -> Result<Vec<VertexId>> {
    let nbrs: Vec<VertexId> = g.neighbors(v).to_vec();
    let (sub, map) = g.induced(&nbrs)?;
    let classes = minimum_clique_cover(&sub)?;
    let best = classes
        .into_iter()
        .max_by_key(|c| c.len())
        .ok_or_else(|| Error::Structure("empty neighborhood".into()))?;
    let mut out: Vec<VertexId> = best.into_iter().map(|i| map[i]).collect();
    out.push(v);
    out.sort_unstable();
    Ok(out)
}

// Exact minimum clique cover via proper coloring of the complement.
fn minimum_clique_cover(g: &Graph) -> Result<Vec<Vec<VertexId>>> {
    if g.n() == 0 {
        return Ok(vec![]);
    }
    if g.n() > structure::LCC_EXACT_LIMIT {
        return Err(Error::Budget(format!(
            "neighborhood of {} vertices exceeds the exact cover budget",
            g.n()
        )));
    }
    let comp = g.complement();
    let res = exact::chromatic(&comp, ExactMode::Proper, Budget::default());
    let witness = res
        .witness
        .ok_or_else(|| Error::Budget("clique cover search ran out of budget".into()))?;
    let k = res.value.unwrap();
    let mut classes: Vec<Vec<VertexId>> = vec![Vec::new(); k as usize];
    for (v, &c) in witness.colors.iter().enumerate() {
        classes[c as usize - 1].push(v);
    }
    Ok(classes)
}

/// Odd coloring of a K_{1,ℓ+1}-free graph within [`starfree_palette`]
/// colors (or [`claw_palette`] when `claw` is set, requiring ℓ = 2):
/// peels dense pairs, or in claw mode the clique certified by the dense
/// pair when |K| is at its minimum.
pub fn odd_color_starfree(g: &Graph, ell: u32, claw: bool) -> Result<OddOutcome> {
    if ell == 0 {
        return Err(Error::Input("ell must be positive".into()));
    }
    if claw && ell != 2 {
        return Err(Error::Input("claw mode fixes ell = 2".into()));
    }
    let probe = structure::star_free(g, ell);
    if let Some(w) = probe.witness {
        return Err(Error::Input(format!(
            "graph contains K_(1,{}) at center {} with leaves {:?}",
            ell + 1,
            w.center,
            w.leaves
        )));
    }
    let delta0 = g.max_degree() as u32;
    let m = if claw { claw_palette(delta0) } else { starfree_palette(delta0, ell) };
    let mut layers: Vec<PeelLayer> = Vec::new();
    let mut current: Vec<VertexId> = (0..g.n()).collect();

    loop {
        let (sub, map) = g.induced(&current)?;
        let delta_cur = sub.max_degree() as u32;
        if sub.n() <= BASE_THRESHOLD || delta_cur <= 2 {
            break;
        }
        if delta_cur <= ell || (claw && delta_cur == 3) {
            break; // routed through the conflict-free engine below
        }
        let dp = structure::dense_pair(&sub, ell)?;
        let kmin_clique = claw && dp.k.len() as u32 == delta_cur / 2 + delta_cur % 2 + 1;
        if kmin_clique {
            let q_local = dp.clique.clone().expect("claw mode provides the clique");
            let q: Vec<VertexId> = q_local.iter().map(|&v| map[v]).collect();
            let required_m = 2 * delta_cur + 3 - q.len() as u32;
            if m < required_m {
                return Err(Error::Structure(format!(
                    "palette m={m} cannot license removing the {}-clique (needs {required_m})",
                    q.len()
                )));
            }
            layers.push(PeelLayer {
                kind: PeelKind::Clique { clique: q.clone() },
                vertices: current.clone(),
                delta: delta_cur,
                required_m,
            });
            current.retain(|v| !q.contains(v));
        } else {
            let required_m = 2 * delta_cur - dp.k.len() as u32
                + ceil_three_halves_plus_sqrt(2 * dp.k.len() as u32 - 3);
            if m < required_m {
                return Err(Error::Structure(format!(
                    "palette m={m} cannot license removing the dense pair (needs {required_m})"
                )));
            }
            let (v1, v2) = (map[dp.v1], map[dp.v2]);
            layers.push(PeelLayer {
                kind: PeelKind::Pair {
                    v1,
                    v2,
                    k: dp.k.iter().map(|&v| map[v]).collect(),
                },
                vertices: current.clone(),
                delta: delta_cur,
                required_m,
            });
            current.retain(|&v| v != v1 && v != v2);
        }
    }

    let stack_info = (current.clone(), layers);
    unwind(g, m, stack_info)
}

// Colors the base residual, then replays the layers backwards extending
// over each removal, verifying oddness after every step.
fn unwind(
    g: &Graph,
    m: u32,
    (base_vertices, layers): (Vec<VertexId>, Vec<PeelLayer>),
) -> Result<OddOutcome> {
    let mut colors: Vec<Color> = vec![0; g.n()];
    let (base, base_map) = g.induced(&base_vertices)?;
    let base_method = color_base(&base, m, &mut colors, &base_map)?;

    for layer in layers.iter().rev() {
        let (sub, map) = g.induced(&layer.vertices)?;
        let mut local = Coloring::empty(sub.n(), m);
        for (new, &old) in map.iter().enumerate() {
            local.colors[new] = colors[old];
        }
        let extended = match &layer.kind {
            PeelKind::Clique { clique } => {
                let local_k: Vec<VertexId> =
                    clique.iter().map(|v| map.binary_search(v).unwrap()).collect();
                extend_over_clique(&sub, &local, &local_k, m)?
            }
            PeelKind::Pair { v1, v2, .. } => {
                let lv1 = map.binary_search(v1).unwrap();
                let lv2 = map.binary_search(v2).unwrap();
                extend_over_pair(&sub, &local, lv1, lv2, m)?
            }
        };
        let rep = verify(&sub, &extended, 1)?;
        if !(rep.proper && rep.odd_ok) {
            return Err(Error::EngineFailure(format!(
                "unwind produced a non-odd coloring at a layer with {} vertices",
                layer.vertices.len()
            )));
        }
        for (new, &old) in map.iter().enumerate() {
            colors[old] = extended.colors[new];
        }
    }

    let coloring = Coloring { colors, palette: m.max(1) };
    let rep = verify(g, &coloring, 1)?;
    if !(rep.proper && rep.odd_ok) {
        return Err(Error::EngineFailure("final coloring is not odd".into()));
    }
    if coloring.max_color() > m.max(1) {
        return Err(Error::EngineFailure(format!(
            "palette exceeded: used {} of {m}",
            coloring.max_color()
        )));
    }
    let stack = PeelStack { m, layers, base_vertices, base_method };
    stack.validate_replay(g)?;
    Ok(OddOutcome { coloring, m, stack })
}

// Base residual: direct constructions for Δ ≤ 2, the conflict-free engine
// for 3 ≤ Δ ≤ ℓ-style routes, exact search otherwise (the residual is
// small by construction).
fn color_base(
    base: &Graph,
    m: u32,
    colors: &mut [Color],
    map: &[VertexId],
) -> Result<String> {
    if base.n() == 0 {
        return Ok("empty".into());
    }
    let label;
    let local: Coloring = if base.max_degree() <= 2 {
        label = "paths-cycles";
        paths_and_cycles(base)?
    } else if base.n() <= BASE_THRESHOLD {
        label = "exact";
        let res = exact::chromatic(base, ExactMode::Odd, Budget::default());
        res.witness.ok_or_else(|| Error::Budget("base odd search out of budget".into()))?
    } else {
        // Max degree 3..=ℓ residual: a proper conflict-free coloring is odd.
        label = "pcf-engine";
        pcf::color_hcf(base, 1, &HcfOptions::default())?.coloring
    };
    if local.max_color() > m {
        return Err(Error::Structure(format!(
            "base needs {} colors, palette allows {m}; class precondition violated",
            local.max_color()
        )));
    }
    for (new, &old) in map.iter().enumerate() {
        colors[old] = local.colors[new];
    }
    Ok(label.into())
}

/// Direct odd coloring of a graph with maximum degree ≤ 2 (disjoint
/// paths and cycles), using at most 5 colors and exactly 5 only on C_5.
pub fn paths_and_cycles(g: &Graph) -> Result<Coloring> {
    if g.max_degree() > 2 {
        return Err(Error::Input("paths_and_cycles needs Δ ≤ 2".into()));
    }
    let mut colors: Vec<Color> = vec![0; g.n()];
    for comp in g.components() {
        let (walk, is_cycle) = trace_component(g, &comp);
        let n = walk.len();
        let pattern: Vec<Color> = if !is_cycle {
            match n {
                1 => vec![1],
                2 => vec![1, 2],
                _ => (0..n).map(|i| (i % 3) as Color + 1).collect(),
            }
        } else {
            cycle_pattern(n)
        };
        for (i, &v) in walk.iter().enumerate() {
            colors[v] = pattern[i];
        }
    }
    let palette = colors.iter().copied().max().unwrap_or(1).max(1);
    Ok(Coloring { colors, palette })
}

// Walks a path or cycle component into a linear order.
fn trace_component(g: &Graph, comp: &[VertexId]) -> (Vec<VertexId>, bool) {
    let start = comp
        .iter()
        .copied()
        .find(|&v| g.degree(v) <= 1)
        .unwrap_or_else(|| *comp.iter().min().unwrap());
    let is_cycle = g.degree(start) == 2;
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev && (walk.len() < 2 || w != start || walk.len() == comp.len()));
        match next {
            Some(w) if w == start => break,
            Some(w) if walk.len() < comp.len() => {
                walk.push(w);
                prev = cur;
                cur = w;
            }
            _ => break,
        }
    }
    (walk, is_cycle)
}

/// Odd coloring pattern around an n-cycle: 3 colors when 3 | n, the
/// rainbow for C_5, otherwise 4 colors.
fn cycle_pattern(n: usize) -> Vec<Color> {
    assert!(n >= 3);
    if n % 3 == 0 {
        return (0..n).map(|i| (i % 3) as Color + 1).collect();
    }
    if n == 5 {
        return vec![1, 2, 3, 4, 5];
    }
    let mut pat: Vec<Color> = Vec::with_capacity(n);
    if n % 3 == 1 {
        for i in 0..(n - 4) {
            pat.push((i % 3) as Color + 1);
        }
        pat.extend([1, 2, 3, 4]);
    } else {
        // n ≡ 2 (mod 3), n ≥ 8
        for i in 0..(n - 8) {
            pat.push((i % 3) as Color + 1);
        }
        pat.extend([1, 2, 3, 4, 1, 2, 3, 4]);
    }
    pat
}
