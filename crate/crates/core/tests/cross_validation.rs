//! Oracle-side cross checks: the constructive engines certify each palette
//! bound by exhibiting a coloring; here the exact oracle independently
//! re-proves the same bounds on the small-graph atlas, and the endgame
//! search is checked complete against brute-force tuple enumeration.

use cfkit::coloring::{verify, Coloring};
use cfkit::exact::{self, Budget, ExactMode};
use cfkit::gen;
use cfkit::graph::Graph;
use cfkit::odd;
use cfkit::pcf::{self, GoodColoringState, HcfOptions};
use cfkit::structure::{self, LccOutcome};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn oracle_reproves_hcf_bound_on_atlas() {
    // χ^h_pcf(G) ≤ (h+1)Δ−1 for Δ ≥ h+2, proven per instance by search
    // rather than by running the engine.
    let mut checked = 0;
    for (i, g) in gen::connected_atlas_le7().into_iter().enumerate() {
        let delta = g.max_degree() as u32;
        for h in 1..=2u32 {
            if delta < h + 2 {
                continue;
            }
            let bound = (h + 1) * delta - 1;
            let v = exact::chromatic(&g, ExactMode::Hcf(h), Budget::default())
                .value
                .unwrap_or_else(|| panic!("oracle budget on atlas graph {i}"));
            assert!(v <= bound, "atlas graph {i}: chi^{h}_pcf = {v} > {bound}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1867);
}

#[test]
fn oracle_reproves_odd_bounds_on_atlas() {
    let mut lcc_checked = 0;
    let mut claw_checked = 0;
    let mut star3_checked = 0;
    for (i, g) in gen::connected_atlas_le7().into_iter().enumerate() {
        if g.edge_count() == 0 {
            continue;
        }
        let delta = g.max_degree() as u32;
        let odd_chi = exact::chromatic(&g, ExactMode::Odd, Budget::default()).value.unwrap();
        if let LccOutcome::Exact(v) = structure::lcc(&g, 8) {
            if v >= 1 && v <= 2 {
                assert!(
                    odd_chi <= odd::lcc_palette(delta, v),
                    "atlas graph {i}: odd {odd_chi} > lcc palette"
                );
                lcc_checked += 1;
            }
        }
        if structure::star_free(&g, 2).free {
            assert!(
                odd_chi <= odd::claw_palette(delta),
                "atlas graph {i}: odd {odd_chi} > claw palette {}",
                odd::claw_palette(delta)
            );
            claw_checked += 1;
        }
        if structure::star_free(&g, 3).free {
            assert!(
                odd_chi <= odd::starfree_palette(delta, 3),
                "atlas graph {i}: odd {odd_chi} > star-free palette"
            );
            star3_checked += 1;
        }
    }
    assert!(lcc_checked > 100 && claw_checked > 200 && star3_checked > 300);
}

#[test]
fn square_regime_engine_is_exact_on_atlas() {
    // For h ≥ Δ−1 the engine must hit χ(G²) exactly on small graphs.
    let mut checked = 0;
    for g in gen::connected_atlas_le7() {
        if g.n() > 6 {
            continue;
        }
        let delta = g.max_degree() as u32;
        let h = delta.saturating_sub(1).max(1);
        let sq = exact::chromatic(&g, ExactMode::Square, Budget::default()).value.unwrap();
        let out = pcf::color_hcf(&g, h, &HcfOptions::default()).unwrap();
        assert_eq!(out.coloring.used_colors(), sq);
        checked += 1;
    }
    assert!(checked > 100);
}

// Brute-force completion decision: try every color tuple on the uncolored
// vertices and run the full verifier.
fn brute_completable(g: &Graph, h: u32, base: &Coloring) -> bool {
    let uncolored: Vec<usize> = (0..g.n()).filter(|&v| !base.is_colored(v)).collect();
    let mut colors = base.colors.clone();
    fn rec(
        g: &Graph,
        h: u32,
        palette: u32,
        uncolored: &[usize],
        idx: usize,
        colors: &mut Vec<u32>,
    ) -> bool {
        if idx == uncolored.len() {
            let phi = Coloring { colors: colors.clone(), palette };
            let rep = verify(g, &phi, h).unwrap();
            return rep.proper && rep.hcf_ok;
        }
        for c in 1..=palette {
            colors[uncolored[idx]] = c;
            if rec(g, h, palette, uncolored, idx + 1, colors) {
                return true;
            }
            colors[uncolored[idx]] = 0;
        }
        false
    }
    rec(g, h, base.palette, &uncolored, 0, &mut colors)
}

#[test]
fn endgame_search_matches_brute_force_on_good_states() {
    // The endgame only re-verifies vertices adjacent to the uncolored
    // set; on good states that must coincide with the full check.
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut agree_sat = 0;
    let mut agree_unsat = 0;
    let mut seed = 0u64;
    while agree_sat < 150 || agree_unsat < 40 {
        seed += 1;
        if seed > 4000 {
            panic!("not enough cases gathered: sat={agree_sat} unsat={agree_unsat}");
        }
        let g = gen::random_maxdeg(5 + (seed % 4) as usize, 4, 0.6, seed);
        if g.n() < 4 {
            continue;
        }
        let h = 1 + (seed % 2) as u32;
        // Small palettes produce both satisfiable and unsatisfiable cases.
        let palette = 2 + (seed % 4) as u32;
        // Random proper partial coloring with exactly 3 uncolored vertices.
        let mut colors = vec![0u32; g.n()];
        let mut order: Vec<usize> = (0..g.n()).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let mut ok = true;
        for &v in order.iter().take(g.n() - 3) {
            let free: Vec<u32> = (1..=palette)
                .filter(|&c| g.neighbors(v).iter().all(|&u| colors[u] != c))
                .collect();
            if free.is_empty() {
                ok = false;
                break;
            }
            colors[v] = free[rng.gen_range(0..free.len())];
        }
        if !ok {
            continue;
        }
        let base = Coloring { colors, palette };
        let st = GoodColoringState::from_coloring(&g, h, &base).unwrap();
        if !st.is_good() {
            continue;
        }
        let fast = pcf::endgame_search(&g, h, &base, palette, u64::MAX);
        let brute = brute_completable(&g, h, &base);
        assert_eq!(fast.is_some(), brute, "seed {seed} h {h} palette {palette}");
        if let Some(found) = fast {
            let phi = Coloring { colors: found, palette };
            let rep = verify(&g, &phi, h).unwrap();
            assert!(rep.proper && rep.hcf_ok, "seed {seed}: bogus witness");
            agree_sat += 1;
        } else {
            agree_unsat += 1;
        }
    }
}
