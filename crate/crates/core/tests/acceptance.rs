//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured numbers. Run with `cargo test --test acceptance --
//! --nocapture` to see the lines.

use std::time::Instant;

use cfkit::coloring::verify;
use cfkit::exact::{self, Budget, ExactMode, Outcome};
use cfkit::gen;
use cfkit::graph::Graph;
use cfkit::odd;
use cfkit::pcf::{self, GoodColoringState, HcfOptions};
use cfkit::structure;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn criterion_1_c5_fixture() {
    let start = Instant::now();
    let g = gen::cycle(5);
    let odd_chi = exact::chromatic(&g, ExactMode::Odd, Budget::default()).value.unwrap();
    let pcf_chi = exact::chromatic(&g, ExactMode::Hcf(1), Budget::default()).value.unwrap();
    assert_eq!(odd_chi, 5, "odd chromatic number of C_5");
    assert_eq!(pcf_chi, 5, "1-CF chromatic number of C_5");
    let r4 = exact::exists_coloring(&g, ExactMode::Hcf(1), 4, Budget::default());
    assert_eq!(r4.outcome, Outcome::None, "no 1-CF 4-coloring of C_5");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 1 took {elapsed:?}");
    println!(
        "criterion 1: PASS — C_5: odd=5, pcf=5, hcf(1) with 4 colors unsatisfiable, {:?}",
        elapsed
    );
}

#[test]
fn criterion_2_thm13_sweep() {
    let start = Instant::now();
    let graphs = gen::connected_atlas_le7();
    assert_eq!(graphs.len(), 996, "isomorph-reduced corpus size");
    let mut runs = 0u32;
    for (i, g) in graphs.iter().enumerate() {
        let delta = g.max_degree() as u32;
        for h in 1..=2u32 {
            if delta < h + 2 {
                continue;
            }
            let out = pcf::color_hcf(g, h, &HcfOptions::default())
                .unwrap_or_else(|e| panic!("engine failure on graph {i}, h={h}: {e}"));
            let rep = verify(g, &out.coloring, h).unwrap();
            assert!(rep.proper && rep.hcf_ok, "graph {i}, h={h}");
            assert!(
                out.coloring.max_color() <= (h + 1) * delta - 1,
                "graph {i}, h={h}: {} colors > bound {}",
                out.coloring.max_color(),
                (h + 1) * delta - 1
            );
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 600.0, "criterion 2 took {elapsed:?}");
    println!(
        "criterion 2: PASS — {} engine runs over 996 connected graphs ≤ 7 vertices, zero failures, {:?}",
        runs, elapsed
    );
}

#[test]
fn criterion_3_latin_tightness_family() {
    let start = Instant::now();
    for n in [2usize, 3, 5] {
        let lg = gen::latin_gn(n).unwrap();
        assert_eq!(lg.graph.n(), n * n + (n - 1) * n + 2 * n);
        for (v, role) in lg.roles.iter().enumerate() {
            let expected = match role {
                gen::Role::V { .. } => n + 1,
                _ => n,
            };
            assert_eq!(lg.graph.degree(v), expected, "degree formula in G_{n}");
        }
        assert!(gen::latin_square_clique_holds(&lg), "n²-clique in square(G_{n})");
    }
    let g2 = gen::latin_gn(2).unwrap();
    let pinned = exact::chromatic(&g2.graph, ExactMode::Hcf(1), Budget::default())
        .value
        .unwrap();
    assert!((4..=5).contains(&pinned), "chi^1_pcf(G_2) = {pinned} outside [4,5]");
    let out = pcf::color_hcf(&g2.graph, 1, &HcfOptions::default()).unwrap();
    assert!(out.coloring.max_color() <= 5);
    let elapsed = start.elapsed();
    println!(
        "criterion 3: PASS — degree formulas and clique certificates for n ∈ {{2,3,5}}, chi^1_pcf(G_2)={pinned}, engine ≤ 5 colors, {:?}",
        elapsed
    );
}

#[test]
fn criterion_4_thm14_chordal() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut corpora: Vec<(Graph, bool)> = Vec::new();
    // 100 seeded k-trees, k in {1,2,3}, n ≤ 40; trees are the k = 1 runs.
    for seed in 0..100u64 {
        let k = 1 + (seed % 3) as usize;
        let n = 5 + (seed as usize * 7) % 36;
        let g = gen::ktree(k, n.max(k + 2), seed).unwrap();
        corpora.push((g, k == 1));
    }
    // 50 random chordal graphs: induced subgraphs of k-trees stay chordal.
    for seed in 100..150u64 {
        let k = 2 + (seed % 3) as usize;
        let g = gen::ktree(k, 30, seed).unwrap();
        let keep: Vec<usize> = (0..30).filter(|_| rng.gen_bool(0.7)).collect();
        if keep.is_empty() {
            continue;
        }
        let (sub, _) = g.induced(&keep).unwrap();
        corpora.push((sub, false));
    }
    let mut runs = 0;
    for (i, (g, is_tree)) in corpora.iter().enumerate() {
        let cert = structure::chordal_certificate(g)
            .unwrap_or_else(|| panic!("corpus graph {i} is not chordal"));
        for h in 1..=3u32 {
            let phi = pcf::chordal_hcf(g, &cert, h).unwrap();
            let rep = verify(g, &phi, h).unwrap();
            assert!(rep.proper && rep.hcf_ok, "graph {i}, h={h}");
            let bound = pcf::chordal_palette(cert.s_value, g.max_degree(), h);
            assert!(phi.max_color() <= bound, "graph {i}, h={h}");
            if *is_tree {
                assert!(phi.max_color() <= h + 2, "tree {i} used more than h+2 colors");
            }
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "criterion 4 took {elapsed:?}");
    println!(
        "criterion 4: PASS — {} chordal runs ({} graphs), palettes within bound, trees ≤ h+2, {:?}",
        runs,
        corpora.len(),
        elapsed
    );
}

#[test]
fn criterion_5_thm15_16_17_line_graphs() {
    let start = Instant::now();
    let mut bases = Vec::new();
    let mut seed = 0u64;
    while bases.len() < 100 {
        let n = 5 + (seed as usize) % 8; // ≤ 12
        let g = gen::random_maxdeg(n, 3 + (seed % 4) as usize, 0.55, seed);
        if g.edge_count() >= 2 {
            bases.push(g);
        }
        seed += 1;
    }
    let mut layers_checked = 0usize;
    for (i, base) in bases.iter().enumerate() {
        let (lg, _) = gen::line_graph(base);
        let delta = lg.max_degree() as u32;

        let out = odd::odd_color_lcc(&lg, 2)
            .unwrap_or_else(|e| panic!("lcc engine failed on line graph {i}: {e}"));
        let rep = verify(&lg, &out.coloring, 1).unwrap();
        assert!(rep.proper && rep.odd_ok, "line graph {i}");
        assert!(rep.hcf_ok, "line graph {i}: quasi-line odd coloring must be 1-CF");
        assert!(out.coloring.max_color() <= odd::lcc_palette(delta, 2), "line graph {i}");
        out.stack.validate_replay(&lg).unwrap();
        layers_checked += out.stack.layers.len();

        let out2 = odd::odd_color_starfree(&lg, 2, true)
            .unwrap_or_else(|e| panic!("claw engine failed on line graph {i}: {e}"));
        let rep2 = verify(&lg, &out2.coloring, 1).unwrap();
        assert!(rep2.proper && rep2.odd_ok, "line graph {i}");
        assert!(out2.coloring.max_color() <= odd::claw_palette(delta), "line graph {i}");
        out2.stack.validate_replay(&lg).unwrap();
        layers_checked += out2.stack.layers.len();
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 300.0, "criterion 5 took {elapsed:?}");
    println!(
        "criterion 5: PASS — 100 line graphs through both odd engines, {} peel layers replay-validated, zero contract violations, {:?}",
        layers_checked, elapsed
    );
}

#[test]
fn criterion_6_cor15_dynamic() {
    let start = Instant::now();
    let mut graphs = Vec::new();
    let mut seed = 0u64;
    while graphs.len() < 50 {
        let n = 8 + (seed as usize) % 7;
        let cap = 3 + (seed % 6) as usize; // Δ ≤ 8
        let g = gen::random_maxdeg(n, cap, 0.6, seed);
        if (3..=8).contains(&g.max_degree()) {
            graphs.push(g);
        }
        seed += 1;
    }
    let mut runs = 0;
    for (i, g) in graphs.iter().enumerate() {
        let delta = g.max_degree() as u32;
        for h in 2..=delta - 1 {
            let out = pcf::dynamic_coloring(g, h, &HcfOptions::default())
                .unwrap_or_else(|e| panic!("dynamic engine failed on graph {i}, h={h}: {e}"));
            let rep = verify(g, &out.coloring, h).unwrap();
            assert!(rep.proper && rep.dynamic_ok, "graph {i}, h={h}");
            assert!(
                out.coloring.max_color() <= h * delta - 1,
                "graph {i}, h={h}: {} > {}",
                out.coloring.max_color(),
                h * delta - 1
            );
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 6: PASS — {} h-dynamic runs over 50 graphs (3 ≤ Δ ≤ 8), all within hΔ−1, {:?}",
        runs, elapsed
    );
}

#[test]
fn criterion_7_chain_and_identity() {
    let start = Instant::now();
    let mut count = 0;
    for seed in 0..200u64 {
        let n = 4 + (seed as usize) % 7; // ≤ 10
        let g = gen::random_maxdeg(n, 3 + (seed % 4) as usize, 0.5, seed);
        let chi = exact::chromatic(&g, ExactMode::Proper, Budget::default()).value.unwrap();
        let odd_chi = exact::chromatic(&g, ExactMode::Odd, Budget::default()).value.unwrap();
        let pcf_chi = exact::chromatic(&g, ExactMode::Hcf(1), Budget::default()).value.unwrap();
        let sq_chi = exact::chromatic(&g, ExactMode::Square, Budget::default()).value.unwrap();
        assert!(
            chi <= odd_chi && odd_chi <= pcf_chi && pcf_chi <= sq_chi,
            "seed {seed}: chain {chi} ≤ {odd_chi} ≤ {pcf_chi} ≤ {sq_chi} broken"
        );
        let delta = g.max_degree() as u32;
        for h in [delta.saturating_sub(1).max(1), delta.max(1)] {
            let v = exact::chromatic(&g, ExactMode::Hcf(h), Budget::default()).value.unwrap();
            assert_eq!(v, sq_chi, "seed {seed}: chi^{h}_pcf must equal chi(G²)");
        }
        count += 1;
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 7: PASS — chain and square identity verified on {count} seeded graphs ≤ 10 vertices, {:?}",
        elapsed
    );
}

#[test]
fn criterion_8_machinery_properties() {
    let start = Instant::now();

    // Goodness preservation: incremental extensions match from-scratch
    // recomputation over at least 10^4 randomized steps.
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut steps = 0u32;
    let mut seed = 0u64;
    while steps < 10_000 {
        let g = gen::random_maxdeg(9 + (seed % 4) as usize, 5, 0.5, seed);
        let h = 1 + (seed % 3) as u32;
        let delta = g.max_degree().max(2) as u32;
        let palette = (h + 1) * delta - 1;
        let mut st = GoodColoringState::new(&g, h, palette);
        loop {
            let uncolored = st.uncolored();
            if uncolored.is_empty() {
                break;
            }
            let v = uncolored[rng.gen_range(0..uncolored.len())];
            let avail = st.available_colors(v).unwrap();
            if avail.is_empty() {
                break;
            }
            let c = avail[rng.gen_range(0..avail.len())];
            st.good_extend(v, c).unwrap();
            steps += 1;
            assert!(st.is_good(), "seed {seed}: goodness lost");
            let fresh = GoodColoringState::from_coloring(&g, h, &st.as_coloring()).unwrap();
            for w in 0..g.n() {
                assert_eq!(
                    st.unique_colors(w),
                    fresh.unique_colors(w),
                    "seed {seed}: incremental unique sets diverged at {w}"
                );
            }
        }
        seed += 1;
    }

    // Availability guarantees: an uncolored vertex with deg < Δ, or at
    // most Δ−2 distinct neighbor colors, or at most Δ−2 risky neighbors,
    // always keeps an available color in a good state.
    let mut avail_checks = 0u32;
    for seed in 0..120u64 {
        let g = gen::random_maxdeg(10, 5, 0.55, seed);
        let delta = g.max_degree();
        if delta < 3 {
            continue;
        }
        let h = 1 + (seed % 2) as u32;
        let palette = (h + 1) * delta as u32 - 1;
        let mut st = GoodColoringState::new(&g, h, palette);
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        for &v in &order {
            if st.is_colored(v) {
                continue;
            }
            let avail = st.available_colors(v).unwrap();
            if avail.is_empty() {
                continue;
            }
            st.good_extend(v, avail[rng.gen_range(0..avail.len())]).unwrap();
            for w in st.uncolored() {
                let few_colors = st.colored_neighbor_color_count(w) <= delta - 2;
                let few_risky = st.risky_neighbors(w).len() <= delta - 2;
                if g.degree(w) < delta || few_colors || few_risky {
                    assert!(
                        st.has_available_color(w),
                        "seed {seed}: vertex {w} lost availability"
                    );
                    avail_checks += 1;
                }
            }
        }
    }
    assert!(avail_checks > 1_000);

    // Monotonicity under extensions with no special common neighbor:
    // A'(u) ⊇ A(u) ∖ {color given to v}.
    let mut mono_checks = 0u32;
    let mut seed = 0u64;
    while mono_checks < 1_000 {
        let g = gen::random_maxdeg(10, 5, 0.55, seed);
        seed += 1;
        let delta = g.max_degree();
        if delta < 3 {
            continue;
        }
        let h = 1 + (seed % 2) as u32;
        if (h as usize) > delta - 2 {
            continue;
        }
        let palette = (h + 1) * delta as u32 - 1;
        let mut st = GoodColoringState::new(&g, h, palette);
        for _ in 0..g.n() / 2 {
            let uncolored = st.uncolored();
            if uncolored.is_empty() {
                break;
            }
            let v = uncolored[rng.gen_range(0..uncolored.len())];
            let avail = st.available_colors(v).unwrap();
            if avail.is_empty() {
                break;
            }
            st.good_extend(v, avail[rng.gen_range(0..avail.len())]).unwrap();
        }
        for (u, v) in g.edges() {
            if st.is_colored(u) || st.is_colored(v) {
                continue;
            }
            if !st.special_common_neighbors(u, v).is_empty() {
                continue;
            }
            let before = st.available_colors(u).unwrap();
            let vavail = st.available_colors(v).unwrap();
            let Some(&c) = vavail.first() else { continue };
            let mut probe = st.clone();
            probe.good_extend(v, c).unwrap();
            let after = probe.available_colors(u).unwrap();
            for b in before {
                if b != c {
                    assert!(after.contains(&b), "seed {seed}: lost color {b} at {u}");
                }
            }
            mono_checks += 1;
        }
    }

    // Ear decompositions and orderings validate on seeded
    // 2-edge-connected graphs.
    for seed in 0..100u64 {
        let n = 8 + (seed % 6) as usize;
        let g = gen::random_two_edge_connected(n, n / 2 + (seed % 4) as usize, seed);
        let initial = g.girth_cycle().unwrap();
        let d = structure::ear_decompose(&g, &initial).unwrap();
        d.validate(&g).unwrap();
        let o = structure::ear_ordering(&g).unwrap();
        o.validate(&g).unwrap();
    }

    let elapsed = start.elapsed();
    println!(
        "criterion 8: PASS — {steps} goodness steps, {avail_checks} availability checks, {mono_checks} monotonicity checks, 100 decompositions validated, {:?}",
        elapsed
    );
}
