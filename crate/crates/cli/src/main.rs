//! `turanp`: construct extremal graphs, evaluate formulas, test freeness,
//! run the exhaustive oracle and the verification suites.
//!
//! Results go to standard output, diagnostics to standard error. Exit codes
//! are 0 on success, 1 on a domain error or a failed verification, 2 on a
//! usage error.

mod config;
mod io;
mod suite;

use std::fmt;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};
use turanp::constructions::FamilySpec;
use turanp::formulas::{self as f, Broom5, FormulaResult, LemmaVariant};
use turanp::oracle::{self, OracleConfig};
use turanp::patterns::{self as pat, Budget, Detection, ForestPattern};
use turanp::transforms::{self as tr, PendentSite, SiteKind};
use turanp::{g6_encode, BigCount, Graph, VERTEX_CAP};

use config::{Config, Suite, DEFAULT_CONFIG};
use io::{parse_list, parse_range, OutFormat, Sink};

pub enum Failure {
    /// Bad flags or arguments; exit 2.
    Usage(String),
    /// Valid request the library rejects, or a failed check; exit 1.
    Domain(String),
    /// Standard output was closed by the reader, as with `| head`.
    Closed,
}

impl From<turanp::Error> for Failure {
    fn from(e: turanp::Error) -> Self {
        match e {
            turanp::Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Domain(e.to_string())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => f.write_str(m),
            Failure::Closed => f.write_str("output closed"),
        }
    }
}

type Out = Result<ExitCode, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

#[derive(Parser)]
#[command(name = "turanp", version, about = "Degree-power Turán numbers of forests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a member of a graph family.
    Construct(ConstructArgs),
    /// Degree power sums e_p of a family member or of graph6 input.
    Ep(EpArgs),
    /// Whether graphs avoid a forest pattern.
    Free(FreeArgs),
    /// Evaluate a closed-form extremal number.
    Formula(FormulaArgs),
    /// Find and apply pendent-site rewrites at a vertex.
    Rewrite(RewriteArgs),
    /// Exhaustive maximum of e_p over pattern-free graphs.
    Oracle(OracleArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Check one instance of the superadditivity or absorption inequality.
    Lemmas(LemmaArgs),
}

fn family(s: &str) -> Result<FamilySpec, String> {
    s.parse().map_err(|e: turanp::Error| e.to_string())
}

fn pattern(s: &str) -> Result<ForestPattern, String> {
    s.parse().map_err(|e: turanp::Error| e.to_string())
}

fn site_kind(s: &str) -> Result<SiteKind, String> {
    s.parse().map_err(|e: turanp::Error| e.to_string())
}

fn range_u64(s: &str) -> Result<(u64, u64), String> {
    parse_range(s)
}

fn range_u32(s: &str) -> Result<(u32, u32), String> {
    parse_range(s)
}

fn range_usize(s: &str) -> Result<(usize, usize), String> {
    parse_range(s)
}

#[derive(Args)]
struct Input {
    /// Family grammar, e.g. `h-path:n=10,ell=6`.
    #[arg(long, value_parser = family)]
    family: Option<FamilySpec>,
    /// graph6 file, one graph per line; `-` reads standard input.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<String>,
}

#[derive(Args)]
struct PRange {
    #[arg(long, conflicts_with = "p_range")]
    p: Option<u32>,
    #[arg(long, value_parser = range_u32, value_name = "A:B")]
    p_range: Option<(u32, u32)>,
}

impl PRange {
    fn get(&self, default: u32) -> (u32, u32) {
        match (self.p, self.p_range) {
            (Some(p), _) => (p, p),
            (None, Some(r)) => r,
            (None, None) => (default, default),
        }
    }
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_parser = family)]
    family: FamilySpec,
    #[arg(long, value_enum, default_value_t)]
    out: OutFormat,
}

#[derive(Args)]
struct EpArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    p: PRange,
    #[arg(long, value_enum, default_value_t)]
    out: OutFormat,
}

#[derive(Args)]
struct FreeArgs {
    #[arg(long, value_parser = pattern)]
    pattern: ForestPattern,
    #[command(flatten)]
    input: Input,
    /// Search step budget; without it the search runs to completion.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    out: OutFormat,
}

#[derive(Args)]
struct FormulaArgs {
    /// Operation name, e.g. `exp_path` or `ex_broom5_partial`.
    #[arg(long)]
    name: String,
    #[arg(long, conflicts_with = "n_range")]
    n: Option<u64>,
    #[arg(long, value_parser = range_u64, value_name = "A:B")]
    n_range: Option<(u64, u64)>,
    #[command(flatten)]
    p: PRange,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    /// Path orders for linear forests, comma-separated.
    #[arg(long, value_parser = parse_list)]
    lengths: Option<Vec<usize>>,
    /// Star degrees for star forests, comma-separated.
    #[arg(long, value_parser = parse_list)]
    degrees: Option<Vec<usize>>,
    /// For ex_broom5_partial: settle an unspecified base instance with the
    /// oracle when it is small enough.
    #[arg(long)]
    chain_oracle: bool,
    #[arg(long, value_enum, default_value_t)]
    out: OutFormat,
}

#[derive(Args)]
struct RewriteArgs {
    /// graph6 input; `-` reads standard input.
    #[arg(long = "in", value_name = "PATH", conflicts_with = "demo")]
    input: Option<String>,
    /// Use a generated host with one planted site of `--kind`.
    #[arg(long)]
    demo: bool,
    /// Leaves of the demo star besides the anchor; defaults to ell + s - 2.
    #[arg(long, requires = "demo")]
    leaves: Option<usize>,
    /// Site kind: edge, triangle, diamond, spindle:T, spindle-plus:T.
    #[arg(long, value_parser = site_kind)]
    kind: Option<SiteKind>,
    /// The maximum-degree vertex.
    #[arg(long, default_value_t = 0)]
    v: usize,
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    s: usize,
    /// Index among the matching sites.
    #[arg(long, default_value_t = 0)]
    site: usize,
    /// Print the sites instead of rewriting.
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value_t)]
    out: OutFormat,
}

#[derive(Args)]
struct OracleFlags {
    #[arg(long, env = "TURANP_THREADS")]
    threads: Option<usize>,
    /// Disable upper-bound pruning; only the `meta` counters change.
    #[arg(long)]
    no_prune: bool,
    /// Allow n = 9.
    #[arg(long)]
    override_cap: bool,
}

impl OracleFlags {
    fn config(&self) -> Result<OracleConfig, Failure> {
        if self.threads == Some(0) {
            return usage("--threads must be at least 1");
        }
        Ok(OracleConfig { threads: self.threads, prune: !self.no_prune, override_cap: self.override_cap })
    }
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_parser = pattern)]
    pattern: ForestPattern,
    #[arg(long, conflicts_with = "n_range")]
    n: Option<usize>,
    #[arg(long, value_parser = range_usize, value_name = "A:B")]
    n_range: Option<(usize, usize)>,
    #[command(flatten)]
    p: PRange,
    /// Maximize edges (p = 1) and report ex(n, F).
    #[arg(long, conflicts_with = "compare")]
    classical: bool,
    /// Compare against the matching closed form at each (n, p).
    #[arg(long)]
    compare: bool,
    #[command(flatten)]
    flags: OracleFlags,
    #[arg(long, value_enum, default_value_t)]
    out: OutFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Configuration file; the built-in defaults otherwise.
    #[arg(long)]
    config: Option<String>,
    /// Run only these suites, comma-separated.
    #[arg(long, value_delimiter = ',')]
    only: Option<Vec<String>>,
    /// Print the default configuration and exit.
    #[arg(long)]
    print_config: bool,
    #[command(flatten)]
    flags: OracleFlags,
    #[arg(long, value_enum, default_value_t)]
    out: OutFormat,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum LemmaKind {
    Superadd,
    Absorb,
}

#[derive(Args)]
struct LemmaArgs {
    #[arg(long, value_enum)]
    lemma: LemmaKind,
    #[arg(long)]
    ell: usize,
    /// `a` for K_1 + M_{n-1} (ell = 5), `b` for H(n, ell).
    #[arg(long, default_value = "b")]
    variant: String,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    n1: Option<u64>,
    #[arg(long)]
    n2: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    h: Option<u64>,
    #[arg(long)]
    hstar: Option<u64>,
    /// Degree cap of the absorbed part; defaults to d(ell, s).
    #[arg(long)]
    d: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    out: OutFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Ep(a) => ep(a),
        Command::Free(a) => free(a),
        Command::Formula(a) => formula(a),
        Command::Rewrite(a) => rewrite(a),
        Command::Oracle(a) => run_oracle(a),
        Command::Verify(a) => verify(a),
        Command::Lemmas(a) => lemmas(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("turanp: {e}");
            match e {
                Failure::Usage(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn no_g6(format: OutFormat, what: &str) -> Result<(), Failure> {
    if format == OutFormat::G6 {
        return usage(format!("{what} has no graph output; use --out json or csv"));
    }
    Ok(())
}

fn construct(a: ConstructArgs) -> Out {
    let g = a.family.build()?;
    let g6 = g6_encode(&g);
    let mut sink = Sink::new(a.out);
    match a.out {
        OutFormat::G6 => sink.line(&g6)?,
        OutFormat::Json => sink.json(&json!({
            "family": a.family.to_string(),
            "n": g.order(),
            "m": g.size(),
            "graph6": g6,
            "degrees": g.degrees(),
        }))?,
        OutFormat::Csv => {
            sink.csv_row(["family", "n", "m", "graph6"])?;
            sink.csv_row([a.family.to_string(), g.order().to_string(), g.size().to_string(), g6])?;
        }
    }
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

fn ep(a: EpArgs) -> Out {
    no_g6(a.out, "ep")?;
    let (p0, p1) = a.p.get(2);
    // Family members too large to build are summed from their degree multiset.
    let items: Vec<(String, usize, turanp::DegreeSequence)> = match io::source(a.input.family, a.input.input)? {
        io::Source::Family(spec) if spec.order() > VERTEX_CAP => {
            vec![(spec.to_string(), spec.order(), spec.degree_sequence()?)]
        }
        io::Source::Family(spec) => {
            let g = spec.build()?;
            vec![(spec.to_string(), g.order(), g.degree_sequence())]
        }
        io::Source::Graphs(gs) => gs.iter().map(|g| (g6_encode(g), g.order(), g.degree_sequence())).collect(),
    };
    let mut sink = Sink::new(a.out);
    if a.out == OutFormat::Csv {
        sink.csv_row(["source", "n", "p", "value"])?;
    }
    for (source, n, degrees) in &items {
        for p in p0..=p1 {
            let value = degrees.power_sum(p);
            match a.out {
                OutFormat::Csv => sink.csv_row([source.clone(), n.to_string(), p.to_string(), value.to_string()])?,
                _ => sink.json(&json!({ "source": source, "n": n, "p": p, "value": value }))?,
            }
        }
    }
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

fn free(a: FreeArgs) -> Out {
    let graphs = io::graphs(io::source(a.input.family, a.input.input)?)?;
    let mut sink = Sink::new(a.out);
    if a.out == OutFormat::Csv {
        sink.csv_row(["graph6", "free"])?;
    }
    for g in &graphs {
        let mut budget = a.budget.map_or_else(Budget::unlimited, Budget::limited);
        let free = match pat::detect(g, &a.pattern, &mut budget) {
            Detection::Found => Some(false),
            Detection::Absent => Some(true),
            Detection::Unknown => None,
        };
        match a.out {
            OutFormat::Json => sink.json(&json!({ "free": free }))?,
            OutFormat::Csv => {
                let cell = free.map_or("unknown".to_string(), |b| b.to_string());
                sink.csv_row([g6_encode(g), cell])?;
            }
            OutFormat::G6 => {
                if free == Some(true) {
                    sink.line(&g6_encode(g))?;
                }
            }
        }
    }
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

enum Evaluated {
    Result(FormulaResult),
    Bare(BigCount),
    Broom5(Broom5, Option<BigCount>),
}

fn need<T: Copy>(v: Option<T>, flag: &str, name: &str) -> Result<T, Failure> {
    v.map_or_else(|| usage(format!("{name} needs --{flag}")), Ok)
}

fn evaluate(a: &FormulaArgs, n: u64, p: u32) -> Result<Evaluated, Failure> {
    let name = a.name.as_str();
    let ell = || need(a.ell, "ell", name);
    let s = || need(a.s, "s", name);
    let k = || need(a.k, "k", name);
    let r = || need(a.r, "r", name);
    let lengths = || a.lengths.clone().map_or_else(|| usage(format!("{name} needs --lengths")), Ok);
    let degrees = || a.degrees.clone().map_or_else(|| usage(format!("{name} needs --degrees")), Ok);
    let res = match name {
        "ex_path" => f::ex_path(n, ell()?)?,
        "eg_bound" => return Ok(Evaluated::Bare(f::eg_bound(n, ell()?)?)),
        "ex_linear_forest" => f::ex_linear_forest(n, &lengths()?)?,
        "ex_kP3" => f::ex_kP3(n, k()?)?,
        "ex_star_forest" => f::ex_star_forest(n, &degrees()?)?,
        "ex_broom4" => f::ex_broom4(n, s()?)?,
        "ex_broom5_partial" => {
            let s = s()?;
            let r = f::ex_broom5_partial(n, s)?;
            let chained = match &r {
                Broom5::Unspecified(u) if a.chain_oracle => {
                    let cfg = OracleConfig::default();
                    let base = u.base_n as usize;
                    cfg.check_n(base)?;
                    let rep = oracle::ex_classical(base, &ForestPattern::Broom { ell: 5, s: s as usize }, &cfg)?;
                    Some(u.known.clone() + rep.edges.expect("classical run"))
                }
                _ => None,
            };
            return Ok(Evaluated::Broom5(r, chained));
        }
        "exp_path" => f::exp_path(n, ell()?, p)?,
        "exp_star" => f::exp_star(n, r()?, p)?,
        "exp_star_forest" => f::exp_star_forest(n, &degrees()?, p)?,
        "exp_linear_forest" => f::exp_linear_forest(n, &lengths()?, p)?,
        "exp_kP3" => f::exp_kP3(n, k()?, p)?,
        "exp_broom" => f::exp_broom(n, ell()?, s()?, p)?,
        "exp_turan_clique" => f::exp_turan_clique(n, r()?, p)?,
        _ => return usage(format!("unknown formula `{name}`")),
    };
    Ok(Evaluated::Result(res))
}

fn object<T: Serialize>(v: &T) -> Map<String, Value> {
    match serde_json::to_value(v) {
        Ok(Value::Object(m)) => m,
        _ => Map::new(),
    }
}

fn formula(a: FormulaArgs) -> Out {
    no_g6(a.out, "formula")?;
    let (n0, n1) = match (a.n, a.n_range) {
        (Some(n), _) => (n, n),
        (None, Some(r)) => r,
        (None, None) => return usage("formula needs --n or --n-range"),
    };
    let uses_p = a.name.starts_with("exp_");
    let (p0, p1) = if uses_p {
        if a.p.p.is_none() && a.p.p_range.is_none() {
            return usage(format!("{} needs --p or --p-range", a.name));
        }
        a.p.get(1)
    } else {
        (1, 1)
    };
    let mut sink = Sink::new(a.out);
    if a.out == OutFormat::Csv {
        sink.csv_row(["name", "n", "p", "value", "in_window", "window", "source", "note"])?;
    }
    for n in n0..=n1 {
        for p in p0..=p1 {
            let ev = evaluate(&a, n, p)?;
            let mut rec = match &ev {
                Evaluated::Result(r) => object(r),
                Evaluated::Bare(v) => object(&json!({ "value": v })),
                Evaluated::Broom5(b, chained) => {
                    let mut m = object(b);
                    if let Some(v) = chained {
                        m.insert("chained_value".into(), json!(v));
                    }
                    m
                }
            };
            rec.insert("n".into(), json!(n));
            if uses_p {
                rec.insert("p".into(), json!(p));
            }
            if a.out == OutFormat::Json {
                sink.json(&rec)?;
                continue;
            }
            let cell = |key: &str| match rec.get(key) {
                Some(Value::String(s)) => s.clone(),
                Some(Value::Null) | None => String::new(),
                Some(v) => v.to_string(),
            };
            let value = match &ev {
                Evaluated::Broom5(Broom5::Unspecified(_), chained) => chained.as_ref().map(|v| v.to_string()).unwrap_or_default(),
                _ => cell("value"),
            };
            let note = match &ev {
                Evaluated::Broom5(Broom5::Unspecified(u), _) => {
                    format!("{} + ex({}, {})", u.known, u.base_n, u.base_pattern)
                }
                _ => String::new(),
            };
            let p_cell = if uses_p { p.to_string() } else { String::new() };
            sink.csv_row([a.name.clone(), n.to_string(), p_cell, value, cell("in_window"), cell("window"), cell("source"), note])?;
        }
    }
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

fn ep_pairs(before: &Graph, after: &Graph) -> Vec<Value> {
    (2..=4).map(|p| json!({ "p": p, "before": before.ep_value(p), "after": after.ep_value(p) })).collect()
}

fn rewrite(a: RewriteArgs) -> Out {
    let (graphs, planted): (Vec<Graph>, Option<PendentSite>) = if a.demo {
        let kind = match a.kind {
            Some(k) => k,
            None => return usage("--demo needs --kind"),
        };
        if a.v != 0 {
            return usage("the demo host has v = 0");
        }
        let leaves = a.leaves.unwrap_or((a.ell + a.s).saturating_sub(2));
        let (g, site) = tr::planted_instance(kind, leaves)?;
        (vec![g], Some(site))
    } else {
        match &a.input {
            Some(path) => (io::read_graph6(path)?, None),
            None => return usage("give --in PATH or --demo"),
        }
    };
    let mut sink = Sink::new(a.out);
    if a.out == OutFormat::Csv {
        if a.list {
            sink.csv_row(["graph6", "kind", "v", "x", "peripheral"])?;
        } else {
            sink.csv_row(["before", "after", "kind", "x", "ep2_before", "ep2_after"])?;
        }
    }
    for g in &graphs {
        let mut sites = tr::find_sites(g, a.v)?;
        if let Some(kind) = a.kind {
            sites.retain(|s| s.kind == kind);
        }
        // The demo rewrites its planted site unless another one is asked for.
        if let (Some(planted), 0) = (&planted, a.site) {
            if let Some(i) = sites.iter().position(|s| s == planted) {
                sites.swap(0, i);
            }
        }
        if a.list {
            no_g6(a.out, "rewrite --list")?;
            for s in &sites {
                match a.out {
                    OutFormat::Csv => {
                        let per: Vec<String> = s.peripheral.iter().map(|u| u.to_string()).collect();
                        sink.csv_row([g6_encode(g), s.kind.to_string(), s.v.to_string(), s.x.to_string(), per.join(" ")])?;
                    }
                    _ => sink.json(&json!({ "graph6": g6_encode(g), "site": s }))?,
                }
            }
            continue;
        }
        let Some(site) = sites.get(a.site) else {
            return Err(Failure::Domain(format!(
                "{}: no site {} at v = {} ({} found)",
                g6_encode(g),
                a.site,
                a.v,
                sites.len()
            )));
        };
        let h = tr::apply(g, a.v, site, a.ell, a.s)?;
        match a.out {
            OutFormat::G6 => sink.line(&g6_encode(&h))?,
            OutFormat::Json => sink.json(&json!({
                "before": g6_encode(g),
                "after": g6_encode(&h),
                "site": site,
                "ep": ep_pairs(g, &h),
            }))?,
            OutFormat::Csv => sink.csv_row([
                g6_encode(g),
                g6_encode(&h),
                site.kind.to_string(),
                site.x.to_string(),
                g.ep_value(2).to_string(),
                h.ep_value(2).to_string(),
            ])?,
        }
    }
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

fn run_oracle(a: OracleArgs) -> Out {
    let cfg = a.flags.config()?;
    let (n0, n1) = match (a.n, a.n_range) {
        (Some(n), _) => (n, n),
        (None, Some(r)) => r,
        (None, None) => return usage("oracle needs --n or --n-range"),
    };
    cfg.check_n(n0)?;
    cfg.check_n(n1)?;
    let (p0, p1) = if a.classical { (1, 1) } else { a.p.get(2) };
    if p1 > oracle::MAX_P {
        return Err(Failure::Domain(format!("oracle supports p <= {}", oracle::MAX_P)));
    }
    let mut sink = Sink::new(a.out);
    if a.compare {
        no_g6(a.out, "oracle --compare")?;
        if a.out == OutFormat::Csv {
            sink.csv_row(["pattern", "n", "p", "oracle", "formula", "agree", "in_window", "unique", "note"])?;
        }
        let opt = |v: Option<String>| v.unwrap_or_default();
        for row in oracle::verify_range(&a.pattern, n0..=n1, p0..=p1, &cfg)? {
            match a.out {
                OutFormat::Csv => sink.csv_row([
                    a.pattern.to_string(),
                    row.n.to_string(),
                    row.p.to_string(),
                    row.oracle.to_string(),
                    opt(row.formula.as_ref().map(|v| v.to_string())),
                    opt(row.agree.map(|b| b.to_string())),
                    opt(row.in_window.map(|b| b.to_string())),
                    row.unique.to_string(),
                    opt(row.note.clone()),
                ])?,
                _ => {
                    let mut rec = Map::new();
                    rec.insert("pattern".into(), json!(a.pattern));
                    rec.extend(object(&row));
                    sink.json(&rec)?;
                }
            }
        }
        sink.finish()?;
        return Ok(ExitCode::SUCCESS);
    }
    if a.out == OutFormat::Csv {
        sink.csv_row(["pattern", "n", "p", "max_value", "maximizers", "unique"])?;
    }
    for n in n0..=n1 {
        for p in p0..=p1 {
            let rep = if a.classical { oracle::ex_classical(n, &a.pattern, &cfg)? } else { oracle::max_ep(n, &a.pattern, p, &cfg)? };
            match a.out {
                OutFormat::Json => sink.json(&rep)?,
                OutFormat::Csv => sink.csv_row([
                    a.pattern.to_string(),
                    n.to_string(),
                    p.to_string(),
                    rep.max_value.to_string(),
                    rep.maximizers.len().to_string(),
                    rep.unique.to_string(),
                ])?,
                OutFormat::G6 => {
                    for m in &rep.maximizers {
                        sink.line(&m.graph6)?;
                    }
                }
            }
        }
    }
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}

fn verify(a: VerifyArgs) -> Out {
    if a.print_config {
        print!("{DEFAULT_CONFIG}");
        return Ok(ExitCode::SUCCESS);
    }
    no_g6(a.out, "verify")?;
    let text = match &a.config {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read `{path}`: {e}")))?,
        None => DEFAULT_CONFIG.to_string(),
    };
    let mut cfg: Config = text.parse().map_err(|e| Failure::Usage(format!("config: {e}")))?;
    if let Some(only) = &a.only {
        let suites: Result<Vec<Suite>, String> = only.iter().map(|s| s.trim().parse()).collect();
        cfg.suites = suites.map_err(Failure::Usage)?;
    }
    let ocfg = a.flags.config()?;
    let report = suite::run(&cfg, &ocfg)?;
    let mut sink = Sink::new(a.out);
    match a.out {
        OutFormat::Csv => {
            sink.csv_row(["suite", "name", "cases", "failures", "pass", "first_failure"])?;
            for c in &report.checks {
                sink.csv_row([
                    c.suite.to_string(),
                    c.name.clone(),
                    c.cases.to_string(),
                    c.failures.to_string(),
                    c.pass.to_string(),
                    c.first_failure.clone().unwrap_or_default(),
                ])?;
            }
        }
        _ => sink.json(&report)?,
    }
    sink.finish()?;
    for c in report.checks.iter().filter(|c| !c.pass) {
        eprintln!("turanp: FAIL {} {}: {}", c.suite, c.name, c.first_failure.as_deref().unwrap_or("no cases"));
    }
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn lemmas(a: LemmaArgs) -> Out {
    no_g6(a.out, "lemmas")?;
    let variant: LemmaVariant = a.variant.parse()?;
    let (name, holds, params) = match a.lemma {
        LemmaKind::Superadd => {
            let n1 = need(a.n1, "n1", "superadd")?;
            let n2 = need(a.n2, "n2", "superadd")?;
            let holds = f::lemma_superadd_check(a.ell, n1, n2, a.p, variant)?;
            ("superadd", holds, json!({ "ell": a.ell, "n1": n1, "n2": n2, "p": a.p }))
        }
        LemmaKind::Absorb => {
            let s = need(a.s, "s", "absorb")?;
            let h = need(a.h, "h", "absorb")?;
            let hstar = need(a.hstar, "hstar", "absorb")?;
            let d = match a.d {
                Some(d) => d,
                None => f::absorb_degree(a.ell, s)?,
            };
            let holds = f::lemma_absorb_check(a.ell, s, h, hstar, d, a.p, variant)?;
            ("absorb", holds, json!({ "ell": a.ell, "s": s, "h": h, "hstar": hstar, "d": d, "p": a.p }))
        }
    };
    let mut sink = Sink::new(a.out);
    match a.out {
        OutFormat::Csv => {
            sink.csv_row(["lemma", "variant", "holds", "params"])?;
            sink.csv_row([name.to_string(), a.variant.clone(), holds.to_string(), params.to_string()])?;
        }
        _ => sink.json(&json!({ "lemma": name, "variant": a.variant, "holds": holds, "params": params }))?,
    }
    sink.finish()?;
    Ok(ExitCode::SUCCESS)
}
