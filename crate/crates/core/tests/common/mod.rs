#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use turanp::{canonical_code, ForestPattern, Graph};

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let ps = pairs(n);
    let m = ps.len();
    (0u64..1 << m).map(move |mask| {
        let mut g = Graph::empty(n).unwrap();
        for (i, &(u, v)) in ps.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    })
}

/// One graph per isomorphism class on `n` vertices, grown one vertex at a
/// time and deduplicated by canonical code.
pub fn iso_classes(n: usize) -> Vec<Graph> {
    let mut level: BTreeMap<_, Graph> = BTreeMap::new();
    let g0 = Graph::empty(0).unwrap();
    level.insert(canonical_code(&g0).unwrap(), g0);
    for k in 0..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for mask in 0u64..1 << k {
                let mut h = g.disjoint_union(&Graph::empty(1).unwrap()).unwrap();
                for u in 0..k {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, k).unwrap();
                    }
                }
                next.entry(canonical_code(&h).unwrap()).or_insert(h);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for (u, v) in pairs(n) {
        if rng.gen_bool(density) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Forest patterns of every kind with order at most `max_order`.
pub fn patterns_up_to(max_order: usize) -> Vec<ForestPattern> {
    let mut out = Vec::new();
    for l in 2..=max_order {
        out.push(ForestPattern::Path(l));
    }
    for r in 1..max_order {
        out.push(ForestPattern::Star(r));
    }
    let linear = [
        vec![2, 2],
        vec![3, 2],
        vec![3, 3],
        vec![4, 2],
        vec![2, 2, 2],
        vec![4, 3],
        vec![5, 2],
        vec![3, 2, 2],
        vec![4, 4],
        vec![5, 3],
        vec![6, 2],
        vec![4, 2, 2],
        vec![3, 3, 2],
        vec![2, 2, 2, 2],
    ];
    let stars = [
        vec![1, 1],
        vec![2, 1],
        vec![2, 2],
        vec![3, 1],
        vec![1, 1, 1],
        vec![3, 2],
        vec![4, 1],
        vec![2, 1, 1],
        vec![3, 3],
        vec![2, 2, 1],
        vec![1, 1, 1, 1],
    ];
    for ls in linear {
        let f = ForestPattern::linear_forest(ls).unwrap();
        if f.order() <= max_order {
            out.push(f);
        }
    }
    for rs in stars {
        let f = ForestPattern::star_forest(rs).unwrap();
        if f.order() <= max_order {
            out.push(f);
        }
    }
    for ell in 4..=max_order {
        for s in 0..=max_order - ell {
            out.push(ForestPattern::Broom { ell, s });
        }
    }
    out
}

/// `K_{t_1} ∪ K_{t_2} ∪ ...`.
pub fn union_of_cliques(sizes: &[usize]) -> Graph {
    let mut g = Graph::empty(0).unwrap();
    for &t in sizes {
        g = g.disjoint_union(&turanp::constructions::complete(t).unwrap()).unwrap();
    }
    g
}
