//! Greedy h-CF coloring of chordal graphs along a reverse perfect
//! elimination ordering, within 1 + ⌊(h+1)·min{s−1, (Δ+h−1)/2}⌋ colors.

use std::collections::BTreeSet;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::structure::ChordalCertificate;

/// Palette bound for a chordal graph with parameters (s, Δ, h).
pub fn chordal_palette(s: usize, delta: usize, h: u32) -> u32 {
    // Track min{s−1, (Δ+h−1)/2} as a half-integer via its double.
    let m2 = (2 * (s.saturating_sub(1))).min(delta + h as usize - 1) as u32;
    1 + (h + 1) * m2 / 2
}

/// Colors the vertices in reverse elimination order, one simplicial
/// extension at a time. At each step the relevant instance is the colored
/// suffix including the new vertex: a vertex whose suffix degree d keeps
/// 2d ≤ min{2(s_i−1), Δ_i+h−1} avoids the colors and designated unique
/// sets of its colored neighbors; a higher-degree vertex only needs a
/// proper color, the distinctly-colored simplicial clique around it
/// guaranteeing the unique counts of its neighbors.
pub fn chordal_hcf(g: &Graph, cert: &ChordalCertificate, h: u32) -> Result<Coloring> {
    if h == 0 {
        return Err(Error::Input("h must be positive".into()));
    }
    if cert.peo.len() != g.n() {
        return Err(Error::Input("certificate does not match the graph".into()));
    }
    let n = g.n();
    if n == 0 {
        return Ok(Coloring::empty(0, 1));
    }
    let palette = chordal_palette(cert.s_value, g.max_degree(), h).max(1);

    let mut pos = vec![0usize; n];
    for (i, &v) in cert.peo.iter().enumerate() {
        pos[v] = i;
    }
    // s(G_i) for the suffix instance is the suffix maximum of the
    // certificate's clique sizes; Δ(G_i) is tracked as the suffix grows.
    let mut s_suffix = vec![0usize; n];
    let mut running = 0usize;
    for i in (0..n).rev() {
        running = running.max(cert.simplicial_clique_sizes[i]);
        s_suffix[i] = running;
    }
    let mut suffix_deg = vec![0usize; n];
    let mut delta_i = 0usize;

    let mut colors: Vec<Color> = vec![0; n];
    for i in (0..n).rev() {
        let v = cert.peo[i];
        let colored: Vec<VertexId> =
            g.neighbors(v).iter().copied().filter(|&u| pos[u] > i).collect();
        let d = colored.len();
        suffix_deg[v] = d;
        delta_i = delta_i.max(d);
        for &u in &colored {
            suffix_deg[u] += 1;
            delta_i = delta_i.max(suffix_deg[u]);
        }
        let m2 = (2 * (s_suffix[i].saturating_sub(1))).min(delta_i + h as usize - 1);

        let mut avoid: BTreeSet<Color> = colored.iter().map(|&u| colors[u]).collect();
        if 2 * d <= m2 {
            for &u in &colored {
                avoid.extend(designated_uniques(g, &colors, &pos, i, u, h));
            }
        }
        let c = (1..=palette).find(|c| !avoid.contains(c)).ok_or_else(|| {
            Error::EngineFailure(format!(
                "palette {palette} exhausted at vertex {v} ({} forbidden)",
                avoid.len()
            ))
        })?;
        colors[v] = c;
    }
    Ok(Coloring { colors, palette })
}

// The smallest min(current degree, h) unique colors of u within the
// already-colored suffix.
fn designated_uniques(
    g: &Graph,
    colors: &[Color],
    pos: &[usize],
    frontier: usize,
    u: VertexId,
    h: u32,
) -> Vec<Color> {
    let mut counts: Vec<(Color, u32)> = Vec::new();
    let mut deg_cur = 0u32;
    for &w in g.neighbors(u) {
        if pos[w] > frontier {
            deg_cur += 1;
            let c = colors[w];
            match counts.iter_mut().find(|(cc, _)| *cc == c) {
                Some((_, m)) => *m += 1,
                None => counts.push((c, 1)),
            }
        }
    }
    counts.sort_unstable();
    let take = deg_cur.min(h) as usize;
    counts.into_iter().filter(|&(_, m)| m == 1).map(|(c, _)| c).take(take).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify;
    use crate::exact::{self, Budget, ExactMode};
    use crate::gen;
    use crate::structure::chordal_certificate;

    fn run(g: &Graph, h: u32) -> Coloring {
        let cert = chordal_certificate(g).expect("chordal input");
        let phi = chordal_hcf(g, &cert, h).unwrap();
        let rep = verify(g, &phi, h).unwrap();
        assert!(rep.proper && rep.hcf_ok);
        phi
    }

    #[test]
    fn trees_use_h_plus_2_colors() {
        // Random trees are 1-trees.
        for seed in 0..10u64 {
            let g = gen::ktree(1, 9, seed).unwrap();
            for h in 1..=3u32 {
                let phi = run(&g, h);
                assert!(phi.max_color() <= h + 2, "seed {seed} h {h}");
            }
        }
    }

    #[test]
    fn k6_h1_within_7() {
        let g = gen::complete(6);
        let phi = run(&g, 1);
        assert!(phi.max_color() <= 7);
        // Exact value is 6: all colors distinct in any proper coloring.
        let r = exact::chromatic(&g, ExactMode::Hcf(1), Budget::default());
        assert_eq!(r.value, Some(6));
    }

    #[test]
    fn three_tree_on_12_vertices() {
        let g = gen::ktree(3, 12, 7).unwrap();
        let cert = chordal_certificate(&g).unwrap();
        let phi = run(&g, 1);
        let bound = chordal_palette(cert.s_value, g.max_degree(), 1);
        assert!(phi.max_color() <= bound);
    }

    #[test]
    fn rejects_mismatched_certificate() {
        let g = gen::complete(4);
        let cert = chordal_certificate(&gen::complete(5)).unwrap();
        assert!(chordal_hcf(&g, &cert, 1).is_err());
    }

    #[test]
    fn seeded_ktrees_meet_bound() {
        for seed in 0..15u64 {
            let k = 1 + (seed % 3) as usize;
            let g = gen::ktree(k, 14, seed).unwrap();
            let cert = chordal_certificate(&g).unwrap();
            for h in 1..=3u32 {
                let phi = chordal_hcf(&g, &cert, h).unwrap();
                let rep = verify(&g, &phi, h).unwrap();
                assert!(rep.proper && rep.hcf_ok, "seed {seed} h {h}");
                assert!(
                    phi.max_color() <= chordal_palette(cert.s_value, g.max_degree(), h),
                    "seed {seed} h {h}"
                );
            }
        }
    }
}
