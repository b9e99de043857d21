mod common;

use std::collections::BTreeSet;

use turanp::oracle::*;
use turanp::patterns::{is_free, ForestPattern};
use turanp::{canonical_code, BigCount, Error};

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

fn small_patterns() -> Vec<ForestPattern> {
    vec![
        ForestPattern::Path(4),
        ForestPattern::Path(5),
        ForestPattern::linear_forest(vec![3, 2]).unwrap(),
        ForestPattern::star_forest(vec![2, 1]).unwrap(),
        ForestPattern::Broom { ell: 4, s: 1 },
        ForestPattern::Star(3),
    ]
}

// The oracle only walks edge-maximal graphs; a plain scan over every
// isomorphism class must find the same optimum and the same maximizers.
#[test]
fn agrees_with_unrestricted_search() {
    for n in 2..=6 {
        let classes = common::iso_classes(n);
        for f in small_patterns() {
            for p in [1, 2] {
                let free: Vec<_> = classes.iter().filter(|g| is_free(g, &f)).collect();
                let best = free.iter().map(|g| g.ep_value(p)).max().unwrap();
                let want: BTreeSet<_> = free
                    .iter()
                    .filter(|g| g.ep_value(p) == best)
                    .map(|g| canonical_code(g).unwrap())
                    .collect();
                let r = max_ep(n, &f, p, &cfg()).unwrap();
                assert_eq!(r.max_value, best, "{f} n={n} p={p}");
                let got: BTreeSet<_> = r.maximizer_graphs().unwrap().iter().map(|g| canonical_code(g).unwrap()).collect();
                assert_eq!(got, want, "{f} n={n} p={p}");
                assert_eq!(r.unique, want.len() == 1);
            }
        }
    }
}

#[test]
fn maximizers_are_free_and_edge_maximal() {
    for f in small_patterns() {
        let r = max_ep(7, &f, 2, &cfg()).unwrap();
        for g in r.maximizer_graphs().unwrap() {
            assert!(is_free(&g, &f));
            assert_eq!(g.ep_value(2), r.max_value);
            for (u, v) in g.non_edges() {
                assert!(!is_free(&g.with_edge(u, v).unwrap(), &f), "{f}: {u}{v} can be added");
            }
        }
    }
}

#[test]
fn classical_values_match_closed_forms() {
    for ell in 2..=6 {
        for n in 2..=7 {
            let r = ex_classical(n, &ForestPattern::Path(ell), &cfg()).unwrap();
            let want = turanp::formulas::ex_path(n as u64, ell).unwrap().value;
            assert_eq!(r.edges, Some(want), "ell={ell} n={n}");
            assert_eq!(r.max_value, r.edges.clone().unwrap() * 2u64);
        }
    }
}

#[test]
fn caps_are_enforced() {
    let f = ForestPattern::Path(4);
    assert!(matches!(max_ep(9, &f, 2, &cfg()), Err(Error::OracleCap { n: 9, cap: 8 })));
    let over = OracleConfig { override_cap: true, ..cfg() };
    assert!(matches!(max_ep(10, &f, 2, &over), Err(Error::OracleCap { n: 10, cap: 9 })));
    assert!(max_ep(1, &f, 2, &cfg()).is_err());
    assert!(verify_range(&f, 5..=9, 2..=2, &cfg()).is_err());
}

#[test]
fn verify_rows_report_agreement() {
    let rows = verify_range(&ForestPattern::Path(3), 2..=6, 1..=3, &cfg()).unwrap();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|r| r.agree == Some(true)));
    let rows = verify_range(&ForestPattern::star_forest(vec![1, 1]).unwrap(), 5..=6, 2..=2, &cfg()).unwrap();
    for r in rows {
        let n = r.n as u64;
        assert_eq!(r.oracle, BigCount::from((n - 1) * (n - 1) + (n - 1)));
    }
}

#[test]
fn thread_count_does_not_change_the_report() {
    let f = ForestPattern::linear_forest(vec![3, 2]).unwrap();
    let one = max_ep(7, &f, 2, &OracleConfig { threads: Some(1), ..cfg() }).unwrap();
    let four = max_ep(7, &f, 2, &OracleConfig { threads: Some(4), ..cfg() }).unwrap();
    assert_eq!(one, four);
    let json = serde_json::to_string(&one).unwrap();
    assert!(json.contains("\"meta\""));
    assert!(json.contains("\"max_value\":\""));
}
