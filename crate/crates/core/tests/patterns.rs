mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turanp::constructions as c;
use turanp::patterns::*;
use turanp::Graph;

fn generic(g: &Graph, f: &ForestPattern) -> bool {
    let (n, e) = f.edge_list();
    contains_forest_generic(g, n, &e).unwrap()
}

#[test]
fn detectors_match_generic_on_every_graph_up_to_seven_vertices() {
    for n in 1..=7 {
        let pats = common::patterns_up_to(n.max(2));
        for g in common::iso_classes(n) {
            for f in &pats {
                assert_eq!(contains(&g, f), generic(&g, f), "{f} on {g:?}");
            }
        }
    }
}

#[test]
fn detectors_match_generic_on_labelled_graphs_up_to_five_vertices() {
    // Labelled, not just up to isomorphism: catches label-dependent pruning.
    for n in 2..=5 {
        let pats = common::patterns_up_to(n);
        for g in common::all_graphs(n) {
            for f in &pats {
                assert_eq!(contains(&g, f), generic(&g, f), "{f} on {g:?}");
            }
        }
    }
}

#[test]
fn detectors_match_generic_on_random_graphs_up_to_twelve_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pats = common::patterns_up_to(9);
    for _ in 0..500 {
        let n = rng.gen_range(2..=12);
        let d = rng.gen_range(0.05..0.6);
        let g = common::random_graph(&mut rng, n, d);
        for f in &pats {
            assert_eq!(contains(&g, f), generic(&g, f), "{f} on {g:?}");
        }
    }
}

#[test]
fn brooms_match_generic_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..500 {
        let n = rng.gen_range(4..=12);
        let d = rng.gen_range(0.1..0.5);
        let g = common::random_graph(&mut rng, n, d);
        let ell = rng.gen_range(4..=7);
        let s = rng.gen_range(0..=3);
        let f = ForestPattern::Broom { ell, s };
        assert_eq!(contains_broom(&g, ell, s), generic(&g, &f), "{f} on {g:?}");
    }
}

#[test]
fn freeness_is_inherited_by_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let pats = common::patterns_up_to(8);
    for _ in 0..200 {
        let n = rng.gen_range(4..=11);
        let g = common::random_graph(&mut rng, n, 0.3);
        let mut h = g.clone();
        let edges: Vec<_> = g.edges().collect();
        for &(u, v) in &edges {
            if rng.gen_bool(0.4) {
                h.remove_edge(u, v).unwrap();
            }
        }
        for f in &pats {
            if is_free(&g, f) {
                assert!(is_free(&h, f), "{f}: {g:?} free but subgraph {h:?} is not");
            }
        }
    }
}

#[test]
fn more_edges_than_erdos_gallai_forces_a_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut forced = 0;
    for _ in 0..3000 {
        let n = rng.gen_range(4..=20);
        let d = rng.gen_range(0.05..0.4);
        let g = common::random_graph(&mut rng, n, d);
        for ell in 2..=8 {
            // |E| > (ℓ/2 - 1) n  ⇔  2|E| > (ℓ - 2) n
            if 2 * g.size() > (ell - 2) * n {
                forced += 1;
                assert!(contains_path(&g, ell), "ℓ={ell} {g:?}");
            }
        }
    }
    assert!(forced > 1000);
}

#[test]
fn star_free_iff_small_max_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rng.gen_range(1..=14);
        let d = rng.gen_range(0.0..0.7);
        let g = common::random_graph(&mut rng, n, d);
        for r in 1..=8 {
            assert_eq!(is_free(&g, &ForestPattern::Star(r)), g.max_degree() < r);
            assert_eq!(
                contains_star_forest(&g, &[r]),
                g.max_degree() >= r,
                "single-star forest detector, r={r}"
            );
        }
    }
}

#[test]
fn extremal_constructions_avoid_their_patterns() {
    for n in 6..=30 {
        assert!(!contains_path(&c::h_path(n, 6).unwrap(), 6));
        assert!(!contains_broom(&c::h_path(n, 6).unwrap(), 6, 2));
        assert!(!contains_broom(&c::k_join_matching(n, 2).unwrap(), 5, 1));
    }
    assert!(contains_path(&c::h_path(12, 6).unwrap(), 5));
}

#[test]
fn budget_outcomes_are_never_wrong() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let pats = common::patterns_up_to(8);
    for _ in 0..200 {
        let n = rng.gen_range(4..=10);
        let g = common::random_graph(&mut rng, n, 0.4);
        for f in &pats {
            let mut b = Budget::limited(rng.gen_range(1..40));
            match detect(&g, f, &mut b) {
                Detection::Found => assert!(contains(&g, f)),
                Detection::Absent => assert!(!contains(&g, f)),
                Detection::Unknown => {}
            }
        }
    }
}
