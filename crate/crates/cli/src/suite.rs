//! The suites behind `verify`: construction identities, lemma grids,
//! pendent-site rewrites and oracle agreement.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use turanp::constructions::FamilySpec;
use turanp::formulas::{self as f, Broom5, LemmaVariant};
use turanp::oracle::{self, OracleConfig};
use turanp::patterns::{self as pat, ForestPattern};
use turanp::transforms::{self as tr, SiteKind};
use turanp::{BigCount, DegreeSequence, Graph, VERTEX_CAP};

use crate::config::{Config, Suite};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Meta {
    pub oracle_cells: u64,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub pass: bool,
    pub checks: Vec<Check>,
    pub meta: Meta,
}

struct Tally {
    suite: Suite,
    name: String,
    cases: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new(suite: Suite, name: impl Into<String>) -> Self {
        Tally { suite, name: name.into(), cases: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, why: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(why());
            }
        }
    }

    fn done(self) -> Check {
        Check {
            suite: self.suite,
            name: self.name,
            cases: self.cases,
            pass: self.failures == 0 && self.cases > 0,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

/// Fails fast, before any suite runs, when an oracle row is out of reach.
pub fn check_oracle_caps(cfg: &Config, ocfg: &OracleConfig) -> turanp::Result<()> {
    if cfg.suites.contains(&Suite::Oracle) {
        for row in &cfg.oracle {
            ocfg.check_n(row.n.0)?;
            ocfg.check_n(row.n.1)?;
        }
    }
    Ok(())
}

pub fn run(cfg: &Config, ocfg: &OracleConfig) -> turanp::Result<Report> {
    check_oracle_caps(cfg, ocfg)?;
    let mut checks = Vec::new();
    let mut meta = Meta::default();
    for suite in Suite::ALL {
        if !cfg.suites.contains(&suite) {
            continue;
        }
        match suite {
            Suite::Construction => construction(cfg, &mut checks),
            Suite::Lemmas => lemmas(cfg, &mut checks),
            Suite::Rewrite => rewrite(cfg, &mut checks),
            Suite::Oracle => oracle_rows(cfg, ocfg, &mut checks, &mut meta)?,
        }
    }
    Ok(Report { pass: checks.iter().all(|c| c.pass), checks, meta })
}

// ------------------------------------------------------------ construction

type Value = Box<dyn Fn(u64, u32) -> turanp::Result<Option<BigCount>>>;
type Family = Box<dyn Fn(u64) -> Vec<FamilySpec>>;

/// A formula and the graph family whose `e_p` it should equal. Classical
/// cases give `2·ex`, compared at `p = 1` only.
struct Case {
    name: String,
    min_n: u64,
    classical: bool,
    family: Family,
    value: Value,
}

fn case(name: String, min_n: u64, family: Family, value: Value) -> Case {
    Case { name, min_n, classical: false, family, value }
}

fn classical(name: String, min_n: u64, family: Family, value: Value) -> Case {
    Case { name, min_n, classical: true, family, value }
}

fn some(r: turanp::Result<f::FormulaResult>) -> turanp::Result<Option<BigCount>> {
    r.map(|x| Some(x.value))
}

fn doubled(r: turanp::Result<f::FormulaResult>) -> turanp::Result<Option<BigCount>> {
    r.map(|x| Some(x.value * 2u64))
}

/// `a` copies of `K_m` and one `K_b`.
fn cliques(a: u64, m: u64, b: u64) -> Vec<FamilySpec> {
    let mut v = vec![FamilySpec::Complete { t: m as usize }; a as usize];
    v.push(FamilySpec::Complete { t: b as usize });
    v
}

const LINEAR: &[&[usize]] = &[&[2, 2], &[3, 2], &[4, 2], &[4, 4], &[5, 3], &[5, 5], &[6, 4], &[2, 2, 2], &[3, 3, 2], &[5, 3, 3]];
const STARS: &[&[usize]] = &[&[1, 1], &[2, 1], &[2, 2], &[3, 2], &[4, 2], &[2, 2, 2], &[3, 2, 1], &[4, 3, 2]];

fn cases() -> Vec<Case> {
    use FamilySpec::*;
    let mut out = Vec::new();
    for ell in 2..=9usize {
        out.push(case(
            format!("exp_path ell={ell}"),
            ell as u64,
            Box::new(move |n| {
                let n = n as usize;
                vec![match ell {
                    2 => Empty { t: n },
                    3 => Matching { t: n },
                    _ => HPath { n, ell },
                }]
            }),
            Box::new(move |n, p| some(f::exp_path(n, ell, p))),
        ));
        out.push(classical(
            format!("ex_path ell={ell}"),
            ell as u64,
            Box::new(move |n| {
                let m = ell as u64 - 1;
                cliques(n / m, m, n % m)
            }),
            Box::new(move |n, _| doubled(f::ex_path(n, ell))),
        ));
    }
    for &ls in LINEAR {
        let total = ls.iter().sum::<usize>() as u64;
        let fam = move |n: u64| vec![HLinearForest { n: n as usize, lengths: ls.to_vec() }];
        out.push(case(format!("exp_linear_forest {ls:?}"), total, Box::new(fam), Box::new(move |n, p| some(f::exp_linear_forest(n, ls, p)))));
        out.push(classical(format!("ex_linear_forest {ls:?}"), total, Box::new(fam), Box::new(move |n, _| doubled(f::ex_linear_forest(n, ls)))));
    }
    for &rs in STARS {
        let order = rs.iter().map(|r| r + 1).sum::<usize>() as u64;
        let (k, rk) = (rs.len(), *rs.iter().min().expect("nonempty"));
        out.push(case(
            format!("exp_star_forest {rs:?}"),
            order,
            Box::new(move |n| vec![GStarJoin { n: n as usize, i: k, r: rk }]),
            Box::new(move |n, p| some(f::exp_star_forest(n, rs, p))),
        ));
        out.push(classical(
            format!("ex_star_forest {rs:?}"),
            order,
            Box::new(move |n| {
                let r = f::ex_star_forest(n, rs).expect("n >= k");
                let i = r.argmax.expect("maximum")[0];
                let mut sorted = rs.to_vec();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                vec![GStarJoin { n: n as usize, i, r: sorted[i - 1] }]
            }),
            Box::new(move |n, _| doubled(f::ex_star_forest(n, rs))),
        ));
    }
    for k in 1..=6usize {
        let fam = move |n: u64| vec![KJoinMatching { n: n as usize, k }];
        if k >= 2 {
            out.push(case(format!("exp_kP3 k={k}"), 3 * k as u64, Box::new(fam), Box::new(move |n, p| some(f::exp_kP3(n, k as u64, p)))));
        }
        out.push(classical(format!("ex_kP3 k={k}"), 3 * k as u64, Box::new(fam), Box::new(move |n, _| doubled(f::ex_kP3(n, k as u64)))));
    }
    for r in 1..=10usize {
        out.push(case(
            format!("exp_star r={r}"),
            1,
            Box::new(move |n| {
                let n = n as usize;
                vec![if n < r { Complete { t: n } } else { NearRegular { n, d: r - 1 } }]
            }),
            Box::new(move |n, p| some(f::exp_star(n, r as u64, p))),
        ));
    }
    for s in 0..=4usize {
        for ell in 4..=7usize {
            out.push(case(
                format!("exp_broom ell={ell} s={s}"),
                (ell + s) as u64,
                Box::new(move |n| {
                    let n = n as usize;
                    vec![match (ell, s) {
                        (4, 0) | (5, 0) | (6, _) | (7, _) => HPath { n, ell },
                        (4, _) => Star { r: n - 1 },
                        _ => KJoinMatching { n, k: 2 },
                    }]
                }),
                Box::new(move |n, p| some(f::exp_broom(n, ell, s as u64, p))),
            ));
        }
    }
    for s in 1..=6u64 {
        out.push(classical(
            format!("ex_broom4 s={s}"),
            s + 4,
            Box::new(move |n| {
                let m = s + 3;
                let (a, b) = (n / m, n % m);
                if s >= 3 && (2..=s).contains(&b) {
                    let mut v = vec![Complete { t: m as usize }; a as usize - 1];
                    v.push(NearRegular { n: (m + b) as usize, d: s as usize + 1 });
                    v
                } else {
                    cliques(a, m, b)
                }
            }),
            Box::new(move |n, _| doubled(f::ex_broom4(n, s))),
        ));
        out.push(classical(
            format!("ex_broom5 s={s}"),
            s + 5,
            Box::new(move |n| cliques(n / (s + 4), s + 4, n % (s + 4))),
            Box::new(move |n, _| match f::ex_broom5_partial(n, s)? {
                Broom5::Exact(r) => Ok(Some(r.value * 2u64)),
                Broom5::Unspecified(_) => Ok(None),
            }),
        ));
    }
    for r in 1..=7usize {
        out.push(case(
            format!("exp_turan_clique r={r}"),
            r as u64 + 1,
            Box::new(move |n| vec![Turan { n: n as usize, r }]),
            Box::new(move |n, p| some(f::exp_turan_clique(n, r as u64, p))),
        ));
    }
    out
}

fn union_degrees(parts: &[FamilySpec]) -> turanp::Result<DegreeSequence> {
    let mut d = Vec::new();
    for part in parts {
        d.extend_from_slice(part.degree_sequence()?.as_slice());
    }
    Ok(DegreeSequence::from_degrees(d))
}

fn union_graph(parts: &[FamilySpec]) -> turanp::Result<Graph> {
    let mut g = Graph::empty(0)?;
    for part in parts {
        g = g.disjoint_union(&part.build()?)?;
    }
    Ok(g)
}

fn construction(cfg: &Config, checks: &mut Vec<Check>) {
    for c in cases() {
        let mut t = Tally::new(Suite::Construction, c.name.clone());
        let ns = (c.min_n..=cfg.n_max).chain(cfg.large_n.iter().copied().filter(|&n| n >= c.min_n && n > cfg.n_max));
        let ps = if c.classical { 1..=1 } else { cfg.p_range.0..=cfg.p_range.1 };
        for n in ns {
            let parts = (c.family)(n);
            let degrees = match union_degrees(&parts) {
                Ok(d) if d.len() as u64 == n => d,
                Ok(d) => {
                    t.record(false, || format!("n={n}: construction has {} vertices", d.len()));
                    continue;
                }
                Err(e) => {
                    t.record(false, || format!("n={n}: construction: {e}"));
                    continue;
                }
            };
            let graph = if n as usize <= VERTEX_CAP { union_graph(&parts).ok() } else { None };
            for p in ps.clone() {
                let want = match (c.value)(n, p) {
                    Ok(Some(v)) => v,
                    Ok(None) => continue,
                    Err(e) => {
                        t.record(false, || format!("n={n} p={p}: formula: {e}"));
                        continue;
                    }
                };
                let by_multiset = degrees.power_sum(p);
                let by_graph = graph.as_ref().map(|g| g.ep_value(p));
                let ok = want == by_multiset && by_graph.as_ref().is_none_or(|v| *v == want);
                t.record(ok, || format!("n={n} p={p}: formula {want}, multiset {by_multiset}, graph {by_graph:?}"));
            }
        }
        checks.push(t.done());
    }
}

// ------------------------------------------------------------------ lemmas

fn lemmas(cfg: &Config, checks: &mut Vec<Check>) {
    for ell in 5..=7usize {
        let variants: &[LemmaVariant] = if ell == 5 { &[LemmaVariant::JoinMatching, LemmaVariant::HPath] } else { &[LemmaVariant::HPath] };
        for &variant in variants {
            let mut t = Tally::new(Suite::Lemmas, format!("superadd ell={ell} {}", variant_name(variant)));
            let hi = ell as u64 + cfg.lemma_span;
            for n1 in ell as u64..=hi {
                for n2 in ell as u64..=hi {
                    for p in [2, 3] {
                        let r = f::lemma_superadd_check(ell, n1, n2, p, variant);
                        t.record(matches!(r, Ok(true)), || format!("n1={n1} n2={n2} p={p}: {r:?}"));
                    }
                }
            }
            checks.push(t.done());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for variant in [LemmaVariant::JoinMatching, LemmaVariant::HPath] {
        let mut t = Tally::new(Suite::Lemmas, format!("absorb {}", variant_name(variant)));
        for i in 0..cfg.absorb_tuples {
            let ell = if variant == LemmaVariant::JoinMatching { 5 } else { 5 + i % 3 };
            let s = rng.gen_range(0..=5u64);
            let d = f::absorb_degree(ell, s).expect("ell in 5..=7");
            let threshold = (ell as u64 + s + d).pow(2);
            let h = rng.gen_range(ell as u64..=2 * threshold);
            let lo = (threshold + 1).saturating_sub(h).max(1);
            let hstar = rng.gen_range(lo..=lo + 2 * threshold);
            let p = rng.gen_range(2..=4);
            let r = f::lemma_absorb_check(ell, s, h, hstar, d, p, variant);
            t.record(matches!(r, Ok(true)), || format!("ell={ell} s={s} h={h} h*={hstar} d={d} p={p}: {r:?}"));
        }
        checks.push(t.done());
    }
}

fn variant_name(v: LemmaVariant) -> &'static str {
    match v {
        LemmaVariant::JoinMatching => "join-matching",
        LemmaVariant::HPath => "h-path",
    }
}

// ----------------------------------------------------------------- rewrite

const REWRITE_MAX_ORDER: usize = 16;

/// Planted site on a star centred at `v = 0`, with sparse edges among the
/// other leaves and sometimes the anchor moved one step away from `v`.
fn host(rng: &mut ChaCha8Rng, kind: SiteKind, ell: usize, s: usize) -> Option<(Graph, tr::PendentSite)> {
    let min_leaves = ell + s - 2;
    let leaves = rng.gen_range(min_leaves..=min_leaves + 3);
    let (mut g, site) = tr::planted_instance(kind, leaves).ok()?;
    if g.order() > REWRITE_MAX_ORDER {
        return None;
    }
    let base = 2 + leaves;
    for a in 2..base {
        for b in a + 1..base {
            if rng.gen_bool(0.06) {
                g.add_edge(a, b).ok()?;
            }
        }
    }
    if rng.gen_bool(0.3) {
        g.remove_edge(0, 1).ok()?;
        g.add_edge(1, 2).ok()?;
    }
    Some((g, site))
}

fn rewrite(cfg: &Config, checks: &mut Vec<Check>) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let kinds: [(&str, &[SiteKind]); 5] = [
        ("edge", &[SiteKind::Edge]),
        ("triangle", &[SiteKind::Triangle]),
        ("diamond", &[SiteKind::Diamond]),
        ("spindle", &[SiteKind::Spindle(2), SiteKind::Spindle(3)]),
        ("spindle-plus", &[SiteKind::SpindlePlus(2), SiteKind::SpindlePlus(3)]),
    ];
    for (name, variants) in kinds {
        let mut t = Tally::new(Suite::Rewrite, name);
        let mut generated = 0;
        let mut attempts = 0;
        while generated < cfg.rewrite_instances && attempts < 1000 * cfg.rewrite_instances.max(1) {
            attempts += 1;
            let kind = variants[generated % variants.len()];
            let ell = rng.gen_range(5..=7);
            let s = rng.gen_range(0..=2);
            let Some((g, planted)) = host(&mut rng, kind, ell, s) else { continue };
            let broom = ForestPattern::Broom { ell, s };
            if !g.is_connected() || g.degree(0) != g.max_degree() || g.degree(0) < ell + s - 1 || pat::contains(&g, &broom) {
                continue;
            }
            generated += 1;
            let g6 = turanp::g6_encode(&g);
            let sites = match tr::find_sites(&g, 0) {
                Ok(sites) => sites,
                Err(e) => {
                    t.record(false, || format!("{g6}: {e}"));
                    continue;
                }
            };
            t.record(sites.contains(&planted), || format!("{g6}: planted {kind} not found"));
            for site in &sites {
                let label = || format!("{g6} site {} x={}", site.kind, site.x);
                let h = match tr::apply(&g, 0, site, ell, s) {
                    Ok(h) => h,
                    Err(e) => {
                        t.record(false, || format!("{}: {e}", label()));
                        continue;
                    }
                };
                let increased = (2..=4).all(|p| h.ep_value(p) > g.ep_value(p));
                t.record(increased, || format!("{}: e_p did not increase", label()));
                t.record(!pat::contains(&h, &broom), || format!("{}: rewrite contains the broom", label()));
                t.record(h.degree(0) == h.max_degree(), || format!("{}: v lost maximum degree", label()));
                let raised = (1..g.order()).any(|u| h.degree(u) > g.degree(u));
                t.record(!raised, || format!("{}: a vertex other than v gained degree", label()));
            }
        }
        t.record(generated == cfg.rewrite_instances, || format!("generated {generated} of {} hosts", cfg.rewrite_instances));
        checks.push(t.done());
    }
}

// ------------------------------------------------------------------ oracle

fn oracle_rows(cfg: &Config, ocfg: &OracleConfig, checks: &mut Vec<Check>, meta: &mut Meta) -> turanp::Result<()> {
    for row in &cfg.oracle {
        let name = format!("{} n={}:{} p={}:{}", row.pattern, row.n.0, row.n.1, row.p.0, row.p.1);
        let mut t = Tally::new(Suite::Oracle, name);
        for r in oracle::verify_range(&row.pattern, row.n.0..=row.n.1, row.p.0..=row.p.1, ocfg)? {
            meta.oracle_cells += 1;
            let ok = r.agree == Some(true) && (!row.unique || r.unique);
            t.record(ok, || {
                let note = r.note.clone().unwrap_or_default();
                format!("n={} p={}: oracle {} formula {:?} unique {} {note}", r.n, r.p, r.oracle, r.formula.as_ref().map(|v| v.to_string()), r.unique)
            });
        }
        checks.push(t.done());
    }
    Ok(())
}
