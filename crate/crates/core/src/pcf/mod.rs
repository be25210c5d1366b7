//! Constructive proper h-conflict-free coloring engines.
//!
//! [`color_hcf`] dispatches per connected component: squares are colored
//! exactly (or by DSATUR) when h ≥ Δ−1, chordal graphs go through the
//! elimination-ordering greedy, h = Δ−2 through the edge-removal
//! recursion, and everything with Δ ≥ h+3 through bridge decomposition
//! followed by the nice-sequence greedy plus endgame per 2-edge-connected
//! piece. Whenever Δ(G) ≥ h+2 the output stays within (h+1)Δ(G)−1 colors.

mod chordal;
mod dm2;
mod nice;
mod state;

pub use chordal::{chordal_hcf, chordal_palette};
pub use dm2::color_h_eq_dm2;
pub use nice::{endgame_complete, endgame_search, nice_preconditions, nice_sequence_color, NiceSequenceTrace, StepRecord};
pub use state::GoodColoringState;

use std::collections::BTreeSet;

use crate::coloring::{unique_colors, verify, Color, Coloring};
use crate::error::{Error, Result};
use crate::exact::{self, Budget, ExactMode};
use crate::graph::{Graph, VertexId};
use crate::structure::chordal_certificate;

/// Engine selection for [`color_hcf`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EngineChoice {
    #[default]
    Auto,
    Nice,
    Dm2,
    Chordal,
    Square,
    Exact,
}

impl EngineChoice {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "auto" => EngineChoice::Auto,
            "nice" => EngineChoice::Nice,
            "dm2" => EngineChoice::Dm2,
            "chordal" => EngineChoice::Chordal,
            "square" => EngineChoice::Square,
            "exact" => EngineChoice::Exact,
            other => return Err(Error::Input(format!("unknown engine '{other}'"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct HcfOptions {
    pub engine: EngineChoice,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for HcfOptions {
    fn default() -> Self {
        HcfOptions { engine: EngineChoice::Auto, seed: 0, budget: Budget::default() }
    }
}

#[derive(Clone, Debug)]
pub struct HcfOutcome {
    pub coloring: Coloring,
    /// Engine labels used across components/pieces, deduplicated.
    pub engines: Vec<String>,
    /// (h+1)Δ(G)−1 whenever Δ(G) ≥ h+2; no bound is promised below that.
    pub bound: Option<u32>,
    pub traces: Vec<NiceSequenceTrace>,
}

impl HcfOutcome {
    pub fn engine_label(&self) -> String {
        self.engines.join("+")
    }
}

/// Total proper h-CF coloring of an arbitrary graph. Components are
/// colored independently and reuse color ids.
pub fn color_hcf(g: &Graph, h: u32, opts: &HcfOptions) -> Result<HcfOutcome> {
    if h == 0 {
        return Err(Error::Input("h must be positive".into()));
    }
    let delta = g.max_degree() as u32;
    let bound = if delta >= h + 2 { Some((h + 1) * delta - 1) } else { None };
    let mut colors: Vec<Color> = vec![0; g.n()];
    let mut palette = 1u32;
    let mut engines: Vec<String> = Vec::new();
    let mut traces = Vec::new();

    for comp in g.components() {
        let (sub, map) = g.induced(&comp)?;
        let piece = color_piece(&sub, h, opts, &mut traces)?;
        for (new, &old) in map.iter().enumerate() {
            colors[old] = piece.coloring.colors[new];
        }
        palette = palette.max(piece.coloring.palette);
        for label in piece.engines {
            if !engines.contains(&label) {
                engines.push(label);
            }
        }
    }
    if g.n() == 0 {
        engines.push("trivial".into());
    }

    let coloring = Coloring { colors, palette };
    let report = verify(g, &coloring, h)?;
    if !(report.proper && report.hcf_ok) {
        return Err(Error::EngineFailure(format!(
            "engine produced an invalid coloring (proper={}, hcf={}, violator={:?}); engines: {}",
            report.proper,
            report.hcf_ok,
            report.hcf_violator.or(report.violating_edge.map(|e| e.0)),
            engines.join("+"),
        )));
    }
    if let Some(b) = bound {
        if coloring.max_color() > b {
            return Err(Error::EngineFailure(format!(
                "palette bound violated: used {} > {b}",
                coloring.max_color()
            )));
        }
    }
    Ok(HcfOutcome { coloring, engines, bound, traces })
}

struct PieceResult {
    coloring: Coloring,
    engines: Vec<String>,
}

// Connected input.
fn color_piece(
    g: &Graph,
    h: u32,
    opts: &HcfOptions,
    traces: &mut Vec<NiceSequenceTrace>,
) -> Result<PieceResult> {
    match opts.engine {
        EngineChoice::Auto => color_piece_auto(g, h, opts, traces),
        EngineChoice::Nice => {
            let (phi, trace) = nice_engine(g, h, opts)?;
            if let Some(t) = trace {
                traces.push(t);
            }
            Ok(PieceResult { coloring: phi, engines: vec!["nice".into()] })
        }
        EngineChoice::Dm2 => Ok(PieceResult {
            coloring: color_h_eq_dm2(g, h)?,
            engines: vec!["dm2".into()],
        }),
        EngineChoice::Chordal => {
            let cert = chordal_certificate(g)
                .ok_or_else(|| Error::Input("graph is not chordal".into()))?;
            Ok(PieceResult {
                coloring: chordal_hcf(g, &cert, h)?,
                engines: vec!["chordal".into()],
            })
        }
        EngineChoice::Square => {
            let (phi, label) = square_regime(g, opts.budget);
            Ok(PieceResult { coloring: phi, engines: vec![label.into()] })
        }
        EngineChoice::Exact => {
            let res = exact::chromatic(g, ExactMode::Hcf(h), opts.budget);
            match res.value {
                Some(_) => Ok(PieceResult {
                    coloring: res.witness.unwrap(),
                    engines: vec!["exact-min".into()],
                }),
                None => Err(Error::Budget(format!(
                    "exact engine ran out of budget after {} nodes",
                    res.nodes
                ))),
            }
        }
    }
}

fn color_piece_auto(
    g: &Graph,
    h: u32,
    opts: &HcfOptions,
    traces: &mut Vec<NiceSequenceTrace>,
) -> Result<PieceResult> {
    let delta = g.max_degree() as u32;
    if g.n() == 1 {
        return Ok(PieceResult {
            coloring: Coloring { colors: vec![1], palette: 1 },
            engines: vec!["trivial".into()],
        });
    }
    // h ≥ Δ−1: the parameter coincides with the chromatic number of the
    // square, so color the square.
    if h >= delta.saturating_sub(1) {
        let (phi, label) = square_regime(g, opts.budget);
        return Ok(PieceResult { coloring: phi, engines: vec![label.into()] });
    }
    let engine_bound = (h + 1) * delta - 1;
    if let Some(cert) = chordal_certificate(g) {
        let b = chordal_palette(cert.s_value, g.max_degree(), h);
        if b <= engine_bound {
            return Ok(PieceResult {
                coloring: chordal_hcf(g, &cert, h)?,
                engines: vec!["chordal".into()],
            });
        }
    }
    if h == delta - 2 {
        if delta == 3 {
            // Cubic graphs have a proper 1-CF 4-coloring; pin it exactly.
            let phi = exact::require_coloring(g, ExactMode::Hcf(h), 4, opts.budget)?;
            return Ok(PieceResult { coloring: phi, engines: vec!["exact4".into()] });
        }
        return Ok(PieceResult {
            coloring: color_h_eq_dm2(g, h)?,
            engines: vec!["dm2".into()],
        });
    }
    // Δ ≥ h+3: split at bridges, then run the sequence engine per piece.
    if let Some(&(u, v)) = g.cut_edges().first() {
        return bridge_split(g, h, u, v, opts, traces);
    }
    if nice_preconditions(g, h).is_err() {
        // Tiny 2-edge-connected piece (n < girth+3): search inside the
        // guaranteed palette.
        let phi = exact::require_coloring(g, ExactMode::Hcf(h), engine_bound, opts.budget)?;
        return Ok(PieceResult { coloring: phi, engines: vec!["exact-palette".into()] });
    }
    let (phi, trace) = nice_engine(g, h, opts)?;
    let mut engines = vec!["nice".into()];
    if trace.is_none() {
        engines.push("exact-fallback".into());
    }
    if let Some(t) = trace {
        traces.push(t);
    }
    Ok(PieceResult { coloring: phi, engines })
}

fn square_regime(g: &Graph, budget: Budget) -> (Coloring, &'static str) {
    if g.n() <= 14 {
        let res = exact::chromatic(g, ExactMode::Square, budget);
        if let (Some(_), Some(w)) = (res.value, res.witness) {
            return (w, "square-exact");
        }
    }
    // Non-optimal upper bound; any proper coloring of the square is h-CF
    // for every h.
    (exact::dsatur(&g.square()), "square-dsatur")
}

// Sequence engine with the retry ladder: deterministic run, seeded
// restarts, then exact search within the guaranteed palette.
fn nice_engine(
    g: &Graph,
    h: u32,
    opts: &HcfOptions,
) -> Result<(Coloring, Option<NiceSequenceTrace>)> {
    nice_preconditions(g, h)?;
    let delta = g.max_degree() as u32;
    let palette = (h + 1) * delta - 1;
    let mut last_err = None;
    for attempt in 0..4u64 {
        let seed = if attempt == 0 { opts.seed } else { opts.seed.wrapping_add(attempt) | 1 };
        match nice_sequence_color(g, h, seed) {
            Ok((st, mut trace)) => match endgame_complete(g, st) {
                Ok(phi) => return Ok((phi, Some(trace))),
                Err(e) => {
                    trace.fallbacks.push(format!("endgame: {e}"));
                    last_err = Some(e);
                }
            },
            Err(e) => last_err = Some(e),
        }
    }
    // The palette bound guarantees a coloring exists; pin it exactly.
    match exact::require_coloring(g, ExactMode::Hcf(h), palette, opts.budget) {
        Ok(phi) => Ok((phi, None)),
        Err(e) => Err(Error::EngineFailure(format!(
            "sequence engine and exact fallback both failed: {e} (previous: {last_err:?})"
        ))),
    }
}

fn bridge_split(
    g: &Graph,
    h: u32,
    u: VertexId,
    v: VertexId,
    opts: &HcfOptions,
    traces: &mut Vec<NiceSequenceTrace>,
) -> Result<PieceResult> {
    let cut = g.remove_edge(u, v)?;
    let comps = cut.components();
    if comps.len() != 2 {
        return Err(Error::Structure(format!(
            "edge ({u},{v}) is not a bridge of the piece"
        )));
    }
    let side_of_u = usize::from(!comps[0].contains(&u));
    let comp_u = &comps[side_of_u];
    let comp_v = &comps[1 - side_of_u];

    let (sub_u, map_u) = cut.induced(comp_u)?;
    let (sub_v, map_v) = cut.induced(comp_v)?;
    let piece_u = color_piece(&sub_u, h, opts, traces)?;
    let piece_v = color_piece(&sub_v, h, opts, traces)?;

    let lu = map_u.binary_search(&u).expect("u on its side");
    let lv = map_v.binary_search(&v).expect("v on its side");

    let t_u = designated_tset(&sub_u, &piece_u.coloring, lu, h)?;
    let t_v = designated_tset(&sub_v, &piece_v.coloring, lv, h)?;
    let cu = piece_u.coloring.colors[lu];
    let cv = piece_v.coloring.colors[lv];

    let needed = (t_u.len() + 1 + t_v.len() + 1) as u32;
    let palette = piece_u.coloring.palette.max(piece_v.coloring.palette).max(needed);

    // Permute side-v colors so that T(u) ∪ {φ(u)} and T(v) ∪ {φ(v)} end up
    // disjoint.
    let mut avoid: BTreeSet<Color> = t_u.clone();
    avoid.insert(cu);
    let mut sources: Vec<Color> = t_v.iter().copied().collect();
    sources.push(cv);
    sources.sort_unstable();
    sources.dedup();
    let targets: Vec<Color> =
        (1..=palette).filter(|c| !avoid.contains(c)).take(sources.len()).collect();
    if targets.len() < sources.len() {
        return Err(Error::EngineFailure("palette too small for bridge merge".into()));
    }
    let mut perm: Vec<Color> = vec![0; palette as usize + 1];
    for (s, t) in sources.iter().zip(targets.iter()) {
        perm[*s as usize] = *t;
    }
    let taken: BTreeSet<Color> = targets.iter().copied().collect();
    let mut free = (1..=palette).filter(|c| !taken.contains(c));
    for s in 1..=palette {
        if perm[s as usize] == 0 {
            perm[s as usize] = free.next().expect("bijection completes");
        }
    }

    let mut colors = vec![0; g.n()];
    for (new, &old) in map_u.iter().enumerate() {
        colors[old] = piece_u.coloring.colors[new];
    }
    for (new, &old) in map_v.iter().enumerate() {
        colors[old] = perm[piece_v.coloring.colors[new] as usize];
    }
    let mut engines = piece_u.engines;
    for label in piece_v.engines {
        if !engines.contains(&label) {
            engines.push(label);
        }
    }
    if !engines.contains(&"bridge".to_string()) {
        engines.push("bridge".into());
    }
    Ok(PieceResult { coloring: Coloring { colors, palette }, engines })
}

// min(deg(v), h) smallest unique colors of v; existence is the h-CF
// guarantee of the side coloring.
fn designated_tset(g: &Graph, phi: &Coloring, v: VertexId, h: u32) -> Result<BTreeSet<Color>> {
    let uniq = unique_colors(g, phi, v)?;
    let want = (g.degree(v) as u32).min(h) as usize;
    if uniq.len() < want {
        return Err(Error::EngineFailure(format!(
            "side coloring gives {} unique colors at the bridge endpoint, needs {want}",
            uniq.len()
        )));
    }
    Ok(uniq.into_iter().take(want).collect())
}

/// h-dynamic coloring with at most hΔ−1 colors for 2 ≤ h ≤ Δ−1: a proper
/// (h−1)-CF coloring is h-dynamic.
pub fn dynamic_coloring(g: &Graph, h: u32, opts: &HcfOptions) -> Result<HcfOutcome> {
    let delta = g.max_degree() as u32;
    if h < 2 || h > delta.saturating_sub(1) {
        return Err(Error::Input(format!(
            "dynamic coloring needs 2 ≤ h ≤ Δ−1, got h={h}, Δ={delta}"
        )));
    }
    color_hcf(g, h - 1, opts)
}
