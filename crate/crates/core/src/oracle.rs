//! Exhaustive `ex_p(n, F)` for small `n`.
//!
//! Adding an edge never lowers any degree, so some edge-maximal `F`-free
//! graph attains the maximum of `e_p`, and every maximizer is edge-maximal.
//! The search decides the vertex pairs in a fixed order (include or exclude)
//! and only emits edge-maximal leaves. A node whose remaining pairs can all be
//! added without creating `F` has exactly one edge-maximal completion, which
//! is emitted directly.
//!
//! The tree is split into independent subtrees at depth 3. Each subtree keeps
//! its own incumbent, seeded with the same greedy maximal graph, so results
//! and counters do not depend on the number of worker threads.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_code, CanonicalCode};
use crate::count::BigCount;
use crate::error::{domain, Error, Result};
use crate::formulas::{self, FormulaResult};
use crate::graph::Graph;
use crate::graph6::g6_encode;
use crate::patterns::{contains, ForestPattern};

/// Largest `n` without the override.
pub const ORACLE_CAP: usize = 8;
/// Largest `n` with the override.
pub const ORACLE_HARD_CAP: usize = 9;
/// Largest exponent; keeps `e_p` of a 9-vertex graph inside `u128`.
pub const MAX_P: u32 = 40;

const SPLIT_DEPTH: usize = 3;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Upper-bound pruning. Never changes the report, only the counters.
    pub prune: bool,
    /// Allows `n = 9`.
    pub override_cap: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { threads: None, prune: true, override_cap: false }
    }
}

impl OracleConfig {
    pub fn cap(&self) -> usize {
        if self.override_cap {
            ORACLE_HARD_CAP
        } else {
            ORACLE_CAP
        }
    }

    pub fn check_n(&self, n: usize) -> Result<()> {
        if n < 2 {
            return domain(format!("oracle needs n >= 2, got {n}"));
        }
        if n > self.cap() {
            return Err(Error::OracleCap { n, cap: self.cap() });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Maximizer {
    pub graph6: String,
    pub canonical: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleStats {
    /// Search nodes expanded.
    pub nodes: u64,
    /// Edge-maximal `F`-free graphs reached.
    pub graphs_visited: u64,
    /// Subtrees cut by the upper bound.
    pub pruned: u64,
}

impl std::ops::AddAssign<&OracleStats> for OracleStats {
    fn add_assign(&mut self, o: &OracleStats) {
        self.nodes += o.nodes;
        self.graphs_visited += o.graphs_visited;
        self.pruned += o.pruned;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub p: u32,
    pub pattern: ForestPattern,
    pub max_value: BigCount,
    /// `max_value / 2` when maximizing edges.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<BigCount>,
    /// One labelled representative per isomorphism class, by canonical code.
    pub maximizers: Vec<Maximizer>,
    pub unique: bool,
    #[serde(rename = "meta")]
    pub stats: OracleStats,
}

impl OracleReport {
    /// The maximizers as graphs, in report order.
    pub fn maximizer_graphs(&self) -> Result<Vec<Graph>> {
        self.maximizers.iter().map(|m| crate::graph6::g6_decode(&m.graph6)).collect()
    }
}

fn ep_u128(g: &Graph, p: u32) -> u128 {
    (0..g.order()).map(|v| (g.degree(v) as u128).pow(p)).sum()
}

struct Problem<'a> {
    pattern: &'a ForestPattern,
    p: u32,
    pairs: Vec<(usize, usize)>,
    prune: bool,
    /// Proven cap on the number of edges of an `F`-free graph.
    edge_cap: Option<usize>,
    /// Proven cap on every degree.
    degree_cap: Option<usize>,
}

impl Problem<'_> {
    fn free(&self, g: &Graph) -> bool {
        !contains(g, self.pattern)
    }

    /// Upper bound on `e_p` over completions of `g` using pairs `i..`.
    fn bound(&self, g: &Graph, i: usize) -> u128 {
        let n = g.order();
        let mut room = vec![0usize; n];
        for &(u, v) in &self.pairs[i..] {
            room[u] += 1;
            room[v] += 1;
        }
        let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        for v in 0..n {
            if let Some(c) = self.degree_cap {
                room[v] = room[v].min(c.saturating_sub(deg[v]));
            }
        }
        let base: u128 = deg.iter().map(|&d| (d as u128).pow(self.p)).sum();
        let mut budget = 2 * (self.pairs.len() - i);
        if let Some(cap) = self.edge_cap {
            budget = budget.min(2 * cap.saturating_sub(g.size()));
        }
        // Gains are convex in the added degree, so each lies under its chord:
        // a fractional knapsack on chord slopes bounds the total gain.
        let mut items: Vec<(u128, u128)> = (0..n)
            .filter(|&v| room[v] > 0)
            .map(|v| {
                let gain = (deg[v] as u128 + room[v] as u128).pow(self.p) - (deg[v] as u128).pow(self.p);
                (gain, room[v] as u128)
            })
            .collect();
        items.sort_by(|a, b| (b.0 * a.1).cmp(&(a.0 * b.1)));
        let mut left = budget as u128;
        let mut total = base;
        for (gain, width) in items {
            if left == 0 {
                break;
            }
            if width <= left {
                total += gain;
                left -= width;
            } else {
                total += (left * gain).div_ceil(width);
                left = 0;
            }
        }
        total
    }

    fn greedy(&self, n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("n within cap");
        for &(u, v) in &self.pairs {
            let h = g.with_edge(u, v).expect("valid pair");
            if self.free(&h) {
                g = h;
            }
        }
        g
    }
}

#[derive(Clone)]
struct Root {
    g: Graph,
    pending: Vec<(usize, usize)>,
}

struct Subtree<'a> {
    prob: &'a Problem<'a>,
    best: u128,
    found: BTreeMap<CanonicalCode, Graph>,
    stats: OracleStats,
}

impl Subtree<'_> {
    fn leaf(&mut self, g: Graph, pending: &[(usize, usize)]) {
        for &(u, v) in pending {
            if self.prob.free(&g.with_edge(u, v).expect("valid pair")) {
                return;
            }
        }
        self.stats.graphs_visited += 1;
        let val = ep_u128(&g, self.prob.p);
        if val > self.best {
            self.best = val;
            self.found.clear();
        }
        if val == self.best {
            let code = canonical_code(&g).expect("oracle order is below the canonical cap");
            self.found.entry(code).or_insert(g);
        }
    }

    fn dfs(&mut self, g: &mut Graph, i: usize, pending: &mut Vec<(usize, usize)>) {
        self.stats.nodes += 1;
        let prob = self.prob;
        if prob.prune && prob.bound(g, i) < self.best {
            self.stats.pruned += 1;
            return;
        }
        let mut full = g.clone();
        for &(u, v) in &prob.pairs[i..] {
            full.add_edge(u, v).expect("valid pair");
        }
        if prob.free(&full) {
            self.leaf(full, pending);
            return;
        }
        let (u, v) = prob.pairs[i];
        g.add_edge(u, v).expect("valid pair");
        let fits = prob.free(g);
        if fits {
            self.dfs(g, i + 1, pending);
        }
        g.remove_edge(u, v).expect("valid pair");
        if fits {
            pending.push((u, v));
            self.dfs(g, i + 1, pending);
            pending.pop();
        } else {
            self.dfs(g, i + 1, pending);
        }
    }
}

fn split(prob: &Problem, n: usize) -> Vec<Root> {
    let mut roots = vec![Root { g: Graph::empty(n).expect("n within cap"), pending: Vec::new() }];
    let depth = SPLIT_DEPTH.min(prob.pairs.len());
    for &(u, v) in &prob.pairs[..depth] {
        let mut next = Vec::with_capacity(roots.len() * 2);
        for r in roots {
            let with = r.g.with_edge(u, v).expect("valid pair");
            if prob.free(&with) {
                next.push(Root { g: with, pending: r.pending.clone() });
                let mut pending = r.pending;
                pending.push((u, v));
                next.push(Root { g: r.g, pending });
            } else {
                next.push(r);
            }
        }
        roots = next;
    }
    roots
}

fn run(n: usize, pattern: &ForestPattern, p: u32, cfg: &OracleConfig) -> Result<OracleReport> {
    cfg.check_n(n)?;
    pattern.validate()?;
    if p == 0 || p > MAX_P {
        return domain(format!("oracle supports 1 <= p <= {MAX_P}, got {p}"));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edge_cap = match pattern {
        ForestPattern::Path(l) => Some(n * (l - 2) / 2),
        _ => None,
    };
    let degree_cap = match pattern {
        ForestPattern::Star(r) => Some(r - 1),
        _ => None,
    };
    let prob = Problem { pattern, p, pairs, prune: cfg.prune, edge_cap, degree_cap };
    let seed = ep_u128(&prob.greedy(n), p);
    let roots = split(&prob, n);
    let depth = SPLIT_DEPTH.min(prob.pairs.len());

    let work = |root: &Root| {
        let mut sub = Subtree { prob: &prob, best: seed, found: BTreeMap::new(), stats: OracleStats::default() };
        let mut g = root.g.clone();
        let mut pending = root.pending.clone();
        sub.dfs(&mut g, depth, &mut pending);
        (sub.best, sub.found, sub.stats)
    };
    let results: Vec<_> = match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?
            .install(|| roots.par_iter().map(work).collect()),
        None => roots.par_iter().map(work).collect(),
    };

    let mut stats = OracleStats::default();
    let best = results
        .iter()
        .filter(|r| !r.1.is_empty())
        .map(|r| r.0)
        .max()
        .expect("the greedy seed is reached by its own subtree");
    let mut found: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    for (b, f, s) in results {
        stats += &s;
        if b == best {
            for (code, g) in f {
                found.entry(code).or_insert(g);
            }
        }
    }
    let maximizers: Vec<Maximizer> = found
        .iter()
        .map(|(code, g)| Maximizer { graph6: g6_encode(g), canonical: code.to_hex() })
        .collect();
    Ok(OracleReport {
        n,
        p,
        pattern: pattern.clone(),
        max_value: BigCount::from(best),
        edges: None,
        unique: maximizers.len() == 1,
        maximizers,
        stats,
    })
}

/// `ex_p(n, F)` with its maximizers up to isomorphism.
pub fn max_ep(n: usize, pattern: &ForestPattern, p: u32, cfg: &OracleConfig) -> Result<OracleReport> {
    run(n, pattern, p, cfg)
}

/// `ex(n, F)`: the `p = 1` search, with `edges = max_value / 2`.
pub fn ex_classical(n: usize, pattern: &ForestPattern, cfg: &OracleConfig) -> Result<OracleReport> {
    let mut r = run(n, pattern, 1, cfg)?;
    r.edges = Some(r.max_value.div_floor(2));
    Ok(r)
}

/// The closed form that should match the oracle for `pattern` at `(n, p)`:
/// the `ex_p` formula for `p >= 2`, twice the `ex` formula for `p = 1`.
/// `None` when no formula covers the pattern.
pub fn matching_formula(pattern: &ForestPattern, n: usize, p: u32) -> Option<Result<FormulaResult>> {
    let n64 = n as u64;
    let doubled = |r: Result<FormulaResult>| {
        r.map(|mut f| {
            f.value = f.value * 2u64;
            f
        })
    };
    let r = match pattern {
        ForestPattern::Path(l) if p == 1 => doubled(formulas::ex_path(n64, *l)),
        ForestPattern::Path(l) => formulas::exp_path(n64, *l, p),
        ForestPattern::LinearForest(ls) if ls.len() == 1 => return matching_formula(&ForestPattern::Path(ls[0]), n, p),
        ForestPattern::LinearForest(ls) if ls.iter().all(|&l| l == 3) => {
            let k = ls.len() as u64;
            if p == 1 {
                doubled(formulas::ex_kP3(n64, k))
            } else {
                formulas::exp_kP3(n64, k, p)
            }
        }
        ForestPattern::LinearForest(ls) if p == 1 => doubled(formulas::ex_linear_forest(n64, ls)),
        ForestPattern::LinearForest(ls) => formulas::exp_linear_forest(n64, ls, p),
        ForestPattern::Star(r) => formulas::exp_star(n64, *r as u64, p),
        ForestPattern::StarForest(rs) if rs.len() == 1 => formulas::exp_star(n64, rs[0] as u64, p),
        ForestPattern::StarForest(rs) if p == 1 => doubled(formulas::ex_star_forest(n64, rs)),
        ForestPattern::StarForest(rs) => formulas::exp_star_forest(n64, rs, p),
        ForestPattern::Broom { ell, s: 0 } => return matching_formula(&ForestPattern::Path(*ell), n, p),
        ForestPattern::Broom { ell: 4, s } if p == 1 => doubled(formulas::ex_broom4(n64, *s as u64)),
        ForestPattern::Broom { ell: 5, s } if p == 1 => match formulas::ex_broom5_partial(n64, *s as u64) {
            Ok(formulas::Broom5::Exact(f)) => doubled(Ok(f)),
            Ok(formulas::Broom5::Unspecified(_)) => return None,
            Err(e) => Err(e),
        },
        ForestPattern::Broom { .. } if p == 1 => return None,
        ForestPattern::Broom { ell, s } => formulas::exp_broom(n64, *ell, *s as u64, p),
    };
    Some(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub n: usize,
    pub p: u32,
    pub oracle: BigCount,
    pub formula: Option<BigCount>,
    /// `None` when no formula applies at this cell.
    pub agree: Option<bool>,
    pub in_window: Option<bool>,
    pub unique: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Oracle value against the matching formula for every `(n, p)` cell.
/// Disagreements are reported, not raised.
pub fn verify_range(
    pattern: &ForestPattern,
    n_range: std::ops::RangeInclusive<usize>,
    p_range: std::ops::RangeInclusive<u32>,
    cfg: &OracleConfig,
) -> Result<Vec<VerifyRow>> {
    for n in [*n_range.start(), *n_range.end()] {
        cfg.check_n(n)?;
    }
    let mut rows = Vec::new();
    for n in n_range {
        for p in p_range.clone() {
            let rep = max_ep(n, pattern, p, cfg)?;
            let (formula, agree, in_window, note) = match matching_formula(pattern, n, p) {
                Some(Ok(f)) => (Some(f.value.clone()), Some(f.value == rep.max_value), Some(f.in_window), None),
                Some(Err(e)) => (None, None, None, Some(e.to_string())),
                None => (None, None, None, Some("no closed form for this pattern".into())),
            };
            rows.push(VerifyRow { n, p, oracle: rep.max_value, formula, agree, in_window, unique: rep.unique, note });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions as c;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn p3_on_five_vertices() {
        let r = max_ep(5, &ForestPattern::Path(3), 2, &cfg()).unwrap();
        assert_eq!(r.max_value.to_u128(), Some(4));
        assert!(r.unique);
        let g = &r.maximizer_graphs().unwrap()[0];
        assert_eq!(canonical_code(g).unwrap(), canonical_code(&c::matching(5).unwrap()).unwrap());
    }

    #[test]
    fn p2_free_is_empty() {
        let r = max_ep(4, &ForestPattern::Path(2), 3, &cfg()).unwrap();
        assert_eq!(r.max_value.to_u128(), Some(0));
        assert!(r.unique);
        assert_eq!(r.maximizers[0].graph6, g6_encode(&Graph::empty(4).unwrap()));
    }

    #[test]
    fn two_edges_forbidden_gives_star() {
        let r = max_ep(6, &ForestPattern::StarForest(vec![1, 1]), 2, &cfg()).unwrap();
        assert_eq!(r.max_value.to_u128(), Some(30));
        assert!(r.unique);
        let g = &r.maximizer_graphs().unwrap()[0];
        assert_eq!(canonical_code(g).unwrap(), canonical_code(&c::star(5).unwrap()).unwrap());
    }

    #[test]
    fn classical_examples() {
        let e = |n, f: ForestPattern| ex_classical(n, &f, &cfg()).unwrap().edges.unwrap().to_u128().unwrap();
        assert_eq!(e(8, ForestPattern::Path(4)), 7);
        assert_eq!(e(6, ForestPattern::LinearForest(vec![2, 2])), 5);
        assert_eq!(e(7, ForestPattern::Path(3)), 3);
    }

    #[test]
    fn pattern_larger_than_host_gives_complete_graph() {
        let r = max_ep(4, &ForestPattern::Path(6), 2, &cfg()).unwrap();
        assert_eq!(r.max_value, c::complete(4).unwrap().ep_value(2));
        assert!(r.unique);
    }

    #[test]
    fn caps() {
        assert_eq!(
            max_ep(9, &ForestPattern::Path(3), 2, &cfg()),
            Err(Error::OracleCap { n: 9, cap: 8 })
        );
        let over = OracleConfig { override_cap: true, ..cfg() };
        assert_eq!(max_ep(10, &ForestPattern::Path(3), 2, &over), Err(Error::OracleCap { n: 10, cap: 9 }));
        assert!(max_ep(1, &ForestPattern::Path(3), 2, &cfg()).is_err());
        assert!(max_ep(5, &ForestPattern::Path(3), 0, &cfg()).is_err());
        assert!(Error::OracleCap { n: 9, cap: 8 }.to_string().contains("8"));
    }

    #[test]
    fn verify_rows() {
        let rows = verify_range(&ForestPattern::Path(3), 2..=6, 2..=3, &cfg()).unwrap();
        assert_eq!(rows.len(), 10);
        assert!(rows.iter().all(|r| r.agree == Some(true) && r.in_window == Some(true)));
        assert!(verify_range(&ForestPattern::Path(3), 2..=9, 2..=2, &cfg()).is_err());
    }
}
