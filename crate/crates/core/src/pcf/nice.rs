//! The almost-greedy engine: color along the ear-decomposition ordering,
//! keeping every uncolored vertex alive, then finish the last three
//! vertices (the initial-cycle endgame) by bounded search.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::structure::{ear_ordering, VertexOrdering};

use super::state::GoodColoringState;

/// One extension step of the sequence.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StepRecord {
    pub vertex: VertexId,
    pub color: Color,
    /// Whether the tail-vertex constraint restricted this step's choices.
    pub s4_constrained: bool,
    pub candidates_tried: u32,
}

/// Audit trace of one sequence run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NiceSequenceTrace {
    pub order: Vec<VertexId>,
    /// 0-based index of the first initial-cycle vertex.
    pub cycle_start: usize,
    pub steps: Vec<StepRecord>,
    pub relabel_applied: bool,
    pub s4_active: bool,
    pub seed: u64,
    pub fallbacks: Vec<String>,
}

impl NiceSequenceTrace {
    /// Replays the trace and checks the sequence conditions at every step:
    /// (S1) step i colors the i-th vertex of the order, (S2) every
    /// uncolored vertex keeps an available color, (S3) every step is a
    /// good extension, and (S4) when active, the last vertex of the order
    /// sees all-distinct colors on its colored neighborhood from the step
    /// that colors the first cycle vertex onward.
    pub fn validate(&self, g: &Graph, h: u32) -> Result<()> {
        let delta = g.max_degree() as u32;
        let palette = (h + 1) * delta - 1;
        let mut st = GoodColoringState::new(g, h, palette);
        let vn = *self.order.last().ok_or_else(|| Error::Input("empty order".into()))?;
        for (i, step) in self.steps.iter().enumerate() {
            if step.vertex != self.order[i] {
                return Err(Error::Structure(format!(
                    "step {i} colors {} but the order says {}",
                    step.vertex, self.order[i]
                )));
            }
            let avail = st.available_colors(step.vertex)?;
            if !avail.contains(&step.color) {
                return Err(Error::Structure(format!(
                    "step {i} uses color {} which is not available",
                    step.color
                )));
            }
            st.good_extend(step.vertex, step.color)?;
            if !st.is_good() {
                return Err(Error::Structure(format!("state not good after step {i}")));
            }
            for w in st.uncolored() {
                if !st.has_available_color(w) {
                    return Err(Error::Structure(format!(
                        "vertex {w} has no available color after step {i}"
                    )));
                }
            }
            if self.s4_active && i >= self.cycle_start {
                let distinct = st.colored_neighbor_color_count(vn) as u32;
                if distinct != delta - 1 {
                    return Err(Error::Structure(format!(
                        "tail vertex sees {distinct} distinct colors after step {i}, expected {}",
                        delta - 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Preconditions of the sequence engine; used by the dispatcher to reroute.
pub fn nice_preconditions(g: &Graph, h: u32) -> Result<()> {
    if h == 0 {
        return Err(Error::Input("h must be positive".into()));
    }
    let delta = g.max_degree();
    if (delta as u32) < h + 3 {
        return Err(Error::Structure(format!(
            "max degree {delta} below h+3 = {}; use another engine",
            h + 3
        )));
    }
    if !g.is_connected() {
        return Err(Error::Structure("graph is disconnected".into()));
    }
    if !g.cut_edges().is_empty() {
        return Err(Error::Structure("graph has a cut-edge".into()));
    }
    let girth = g.girth().ok_or_else(|| Error::Structure("graph is acyclic".into()))?;
    if g.n() < girth + 3 {
        return Err(Error::Structure(format!(
            "n = {} below girth+3 = {}; fall back to exact search",
            g.n(),
            girth + 3
        )));
    }
    Ok(())
}

/// Runs the greedy sequence, coloring all but the last three vertices of
/// the ordering. `seed = 0` tries colors in ascending order; other seeds
/// shuffle the candidate order for retries.
pub fn nice_sequence_color<'g>(
    g: &'g Graph,
    h: u32,
    seed: u64,
) -> Result<(GoodColoringState<'g>, NiceSequenceTrace)> {
    nice_preconditions(g, h)?;
    let delta = g.max_degree() as u32;
    let palette = (h + 1) * delta - 1;
    let ordering: VertexOrdering = ear_ordering(g)?;
    let mut order = ordering.order;
    let cycle_start = ordering.cycle_start;
    let n = g.n();

    let mut st = GoodColoringState::new(g, h, palette);
    let mut trace = NiceSequenceTrace {
        order: order.clone(),
        cycle_start,
        steps: Vec::with_capacity(n - 3),
        relabel_applied: false,
        s4_active: false,
        seed,
        fallbacks: Vec::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for i in 0..(n - 3) {
        // Relabel rule: before coloring the first cycle vertex, when every
        // cycle vertex has degree Δ and h = Δ−3, rotate the cycle so the
        // vertex seeing the fewest distinct colors comes last.
        if i == cycle_start && h + 3 == delta && cycle_start <= n.saturating_sub(4) {
            let tail = &order[cycle_start..];
            if tail.iter().all(|&x| g.degree(x) as u32 == delta) {
                let pick = tail
                    .iter()
                    .copied()
                    .min_by_key(|&x| (st.colored_neighbor_color_count(x), x))
                    .unwrap();
                let pos = order[cycle_start..].iter().position(|&x| x == pick).unwrap();
                order[cycle_start..].rotate_left((pos + 1) % (n - cycle_start));
                trace.relabel_applied = true;
                trace.s4_active = true;
                trace.order = order.clone();
            }
        }

        let v = order[i];
        let mut candidates = st.available_colors(v)?;
        let mut s4_constrained = false;
        if trace.s4_active && i == cycle_start {
            let vn = *order.last().unwrap();
            let blocked: Vec<Color> =
                (1..=palette).filter(|&c| forbidden_at(&st, vn, c)).collect();
            candidates.retain(|c| !blocked.contains(c));
            s4_constrained = true;
        }
        if seed != 0 {
            candidates.shuffle(&mut rng);
        }
        // Prefer colors outside the unique sets of special common
        // neighbors shared with the next vertex, when the two are adjacent.
        if i + 1 < n {
            let next = order[i + 1];
            if g.has_edge(v, next) {
                let specials = st.special_common_neighbors(v, next);
                if !specials.is_empty() {
                    let mut avoid: std::collections::BTreeSet<Color> = Default::default();
                    for w in specials {
                        avoid.extend(st.unique_colors(w).iter().copied());
                    }
                    let (clear, rest): (Vec<Color>, Vec<Color>) =
                        candidates.into_iter().partition(|c| !avoid.contains(c));
                    candidates = clear;
                    candidates.extend(rest);
                }
            }
        }

        let mut chosen = None;
        let mut tried = 0u32;
        for &c in &candidates {
            tried += 1;
            st.good_extend(v, c)?;
            if all_near_uncolored_alive(&st, v) {
                chosen = Some(c);
                break;
            }
            st.uncolor_last();
        }
        match chosen {
            Some(c) => {
                trace.steps.push(StepRecord {
                    vertex: v,
                    color: c,
                    s4_constrained,
                    candidates_tried: tried,
                });
            }
            None => {
                trace.fallbacks.push(format!(
                    "stall at step {i} (vertex {v}): no candidate keeps all uncolored vertices alive"
                ));
                return Err(Error::EngineFailure(format!(
                    "sequence stalled at step {i} of {} (seed {seed})",
                    n - 3
                )));
            }
        }
    }
    Ok((st, trace))
}

fn forbidden_at(st: &GoodColoringState, v: VertexId, c: Color) -> bool {
    // Colors already on N(v) would repeat there.
    st.graph()
        .neighbors(v)
        .iter()
        .any(|&u| st.color(u) == Some(c))
}

// After coloring v, only uncolored vertices within distance two of v can
// have lost availability; everything else is untouched.
fn all_near_uncolored_alive(st: &GoodColoringState, v: VertexId) -> bool {
    let g = st.graph();
    let mut seen = vec![false; g.n()];
    for &u in g.neighbors(v) {
        if !seen[u] {
            seen[u] = true;
            if !st.is_colored(u) && !st.has_available_color(u) {
                return false;
            }
        }
        for &w in g.neighbors(u) {
            if w != v && !seen[w] {
                seen[w] = true;
                if !st.is_colored(w) && !st.has_available_color(w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Completes a good state with at most a few uncolored vertices into a
/// total proper h-CF coloring within the same palette: exhaustive search
/// over the uncolored color tuples, then escalating backtracking that
/// uncolors the last r trail vertices for r = 1..=6.
pub fn endgame_complete(g: &Graph, mut st: GoodColoringState) -> Result<Coloring> {
    const R_MAX: usize = 6;
    let h = st.h();
    let palette = st.palette();
    if st.uncolored().len() > 3 {
        return Err(Error::Contract(format!(
            "endgame expects at most 3 uncolored vertices, got {}",
            st.uncolored().len()
        )));
    }
    for r in 0..=R_MAX {
        if r > 0 && st.uncolor_last().is_none() {
            break;
        }
        let base = st.as_coloring();
        let cap = if r == 0 { u64::MAX } else { 2_000_000 };
        if let Some(colors) = endgame_search(g, h, &base, palette, cap) {
            return Ok(Coloring { colors, palette });
        }
    }
    Err(Error::EngineFailure(format!(
        "endgame failed after uncoloring {R_MAX} extra vertices"
    )))
}

/// Backtracking completion of a partial coloring into a proper h-CF total
/// coloring, assuming the partial state is good. Only vertices adjacent to
/// the uncolored set are rechecked at the leaves; every other vertex had a
/// fully colored neighborhood in the good state already.
pub fn endgame_search(
    g: &Graph,
    h: u32,
    base: &Coloring,
    palette: u32,
    node_cap: u64,
) -> Option<Vec<Color>> {
    let uncolored: Vec<VertexId> = (0..g.n()).filter(|&v| !base.is_colored(v)).collect();
    let mut affected: Vec<VertexId> = uncolored.clone();
    for &v in &uncolored {
        affected.extend(g.neighbors(v).iter().copied());
    }
    affected.sort_unstable();
    affected.dedup();

    let mut colors = base.colors.clone();
    let mut nodes = 0u64;
    if fill(g, h, palette, &uncolored, 0, &mut colors, &affected, &mut nodes, node_cap) {
        Some(colors)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn fill(
    g: &Graph,
    h: u32,
    palette: u32,
    uncolored: &[VertexId],
    idx: usize,
    colors: &mut Vec<Color>,
    affected: &[VertexId],
    nodes: &mut u64,
    node_cap: u64,
) -> bool {
    if idx == uncolored.len() {
        // Leaf: all affected vertices must see their required unique count.
        return affected.iter().all(|&w| {
            let hv = (g.degree(w) as u32).min(h);
            if hv == 0 {
                return true;
            }
            unique_count(g, colors, w) >= hv
        });
    }
    let v = uncolored[idx];
    for c in 1..=palette {
        *nodes += 1;
        if *nodes > node_cap {
            return false;
        }
        if g.neighbors(v).iter().any(|&u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if fill(g, h, palette, uncolored, idx + 1, colors, affected, nodes, node_cap) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

fn unique_count(g: &Graph, colors: &[Color], w: VertexId) -> u32 {
    let mut seen: Vec<Color> = Vec::new();
    let mut dup: Vec<Color> = Vec::new();
    for &u in g.neighbors(w) {
        let c = colors[u];
        if c == 0 {
            continue;
        }
        if seen.contains(&c) {
            if !dup.contains(&c) {
                dup.push(c);
            }
        } else {
            seen.push(c);
        }
    }
    (seen.len() - dup.len()) as u32
}
