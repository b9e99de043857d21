//! Builders for the named graph families.
//!
//! Labeling convention: universal (clique) vertices come first, then the
//! remaining vertices. Graph6 goldens depend on this order.

use std::fmt;
use std::str::FromStr;

use crate::degree::DegreeSequence;
use crate::error::{domain, Error, Result};
use crate::graph::{Graph, VERTEX_CAP};

fn check_cap(n: usize) -> Result<()> {
    if n > VERTEX_CAP {
        Err(Error::CapExceeded { n, cap: VERTEX_CAP })
    } else {
        Ok(())
    }
}

/// `K_t`.
pub fn complete(t: usize) -> Result<Graph> {
    let mut g = Graph::empty(t)?;
    for u in 0..t {
        for v in u + 1..t {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `E_t`.
pub fn empty(t: usize) -> Result<Graph> {
    Graph::empty(t)
}

/// `P_t`: vertices `0..t` in path order.
pub fn path(t: usize) -> Result<Graph> {
    let mut g = Graph::empty(t)?;
    for v in 1..t {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

/// `S_r`: centre 0 and leaves `1..=r`.
pub fn star(r: usize) -> Result<Graph> {
    let mut g = Graph::empty(r + 1)?;
    for v in 1..=r {
        g.add_edge(0, v)?;
    }
    Ok(g)
}

/// `M_t`: edges `(0,1), (2,3), ...`; the last vertex is unmatched when `t` is odd.
pub fn matching(t: usize) -> Result<Graph> {
    let mut g = Graph::empty(t)?;
    for v in (0..t / 2).map(|i| 2 * i) {
        g.add_edge(v, v + 1)?;
    }
    Ok(g)
}

/// Part sizes of `T_r(n)`, largest first.
pub fn turan_parts(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// `T_r(n)`: complete `r`-partite graph with parts as equal as possible,
/// each part a consecutive block of labels.
pub fn turan(n: usize, r: usize) -> Result<Graph> {
    if r == 0 {
        return domain("Turán graph needs r >= 1");
    }
    let mut part = Vec::with_capacity(n);
    for (i, size) in turan_parts(n, r).into_iter().enumerate() {
        part.extend(std::iter::repeat_n(i, size));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Friendship graph `F_n = K_1 + M_{n-1}` for odd `n >= 3`.
pub fn friendship(n: usize) -> Result<Graph> {
    if n < 3 || n.is_multiple_of(2) {
        return domain(format!("friendship graph needs odd n >= 3, got {n}"));
    }
    complete(1)?.join(&matching(n - 1)?)
}

/// Broom `B_{ℓ,s}`: path `0..ℓ` with `s` leaves `ℓ..ℓ+s` hanging off vertex `ℓ-2`.
pub fn broom(ell: usize, s: usize) -> Result<Graph> {
    if ell < 4 {
        return domain(format!("broom needs ell >= 4, got {ell}"));
    }
    check_cap(ell + s)?;
    let mut g = path(ell)?.disjoint_union(&Graph::empty(s)?)?;
    for leaf in ell..ell + s {
        g.add_edge(ell - 2, leaf)?;
    }
    Ok(g)
}

/// Realizes a degree sequence by Havel–Hakimi: repeatedly take the vertex of
/// largest remaining demand (lowest label on ties) and join it to the next
/// largest demands.
pub fn havel_hakimi(degrees: &[usize]) -> Result<Graph> {
    let n = degrees.len();
    let mut g = Graph::empty(n)?;
    let mut rest: Vec<usize> = degrees.to_vec();
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&v| rest[v] > 0).collect();
        if order.is_empty() {
            return Ok(g);
        }
        order.sort_by(|&a, &b| rest[b].cmp(&rest[a]).then(a.cmp(&b)));
        let v = order[0];
        let d = rest[v];
        let targets = &order[1..];
        if targets.len() < d {
            return domain(format!("degree sequence {degrees:?} is not graphical"));
        }
        rest[v] = 0;
        for &u in &targets[..d] {
            g.add_edge(v, u)?;
            rest[u] -= 1;
        }
    }
}

/// A near `d`-regular graph on `n` vertices: every degree is `d`, except the
/// last vertex has degree `d-1` when `dn` is odd.
pub fn near_regular(n: usize, d: usize) -> Result<Graph> {
    if d >= n {
        return domain(format!("near-regular graph needs d < n, got n={n}, d={d}"));
    }
    check_cap(n)?;
    let mut degrees = vec![d; n];
    if (d * n) % 2 == 1 {
        degrees[n - 1] = d - 1;
    }
    havel_hakimi(&degrees)
}

/// `K_b + E_{n-b}` with an optional edge between vertices `b` and `b+1`.
fn clique_join_independent(n: usize, b: usize, extra_edge: bool) -> Result<Graph> {
    check_cap(n)?;
    let mut g = complete(b)?.join(&Graph::empty(n - b)?)?;
    if extra_edge {
        g.add_edge(b, b + 1)?;
    }
    Ok(g)
}

/// `H(n,ℓ)`: `K_b + E_{n-b}` with `b = ⌊ℓ/2⌋ - 1`, plus one edge in the
/// independent side when `ℓ` is odd.
pub fn h_path(n: usize, ell: usize) -> Result<Graph> {
    if ell < 4 {
        return domain(format!("H(n, ell) needs ell >= 4, got {ell}"));
    }
    if n < ell {
        return domain(format!("H(n, ell) needs n >= ell, got n={n}, ell={ell}"));
    }
    clique_join_independent(n, ell / 2 - 1, ell % 2 == 1)
}

/// `b = Σ⌊ℓ_i/2⌋ - 1` for a linear forest, or `None` when that is negative.
pub fn linear_forest_b(lengths: &[usize]) -> Option<usize> {
    lengths.iter().map(|l| l / 2).sum::<usize>().checked_sub(1)
}

/// `H(n,F)` for the linear forest with the given path orders.
pub fn h_linear_forest(n: usize, lengths: &[usize]) -> Result<Graph> {
    if lengths.is_empty() {
        return domain("linear forest needs at least one path");
    }
    if let Some(&l) = lengths.iter().find(|&&l| l < 2) {
        return domain(format!("path orders must be >= 2, got {l}"));
    }
    let total: usize = lengths.iter().sum();
    if n < total {
        return domain(format!("H(n,F) needs n >= {total}, got {n}"));
    }
    let b = linear_forest_b(lengths).expect("some path has order >= 2");
    let all_odd = lengths.iter().all(|l| l % 2 == 1);
    clique_join_independent(n, b, all_odd)
}

/// `G(n,i,r) = K_{i-1} + L` with `L` near `(r-1)`-regular on `n-i+1` vertices.
pub fn g_star_join(n: usize, i: usize, r: usize) -> Result<Graph> {
    if i < 1 || r < 1 {
        return domain(format!("G(n,i,r) needs i, r >= 1, got i={i}, r={r}"));
    }
    if n + 1 < i || n + 1 - i < r {
        return domain(format!("G(n,i,r) needs n-i+1 > r-1, got n={n}, i={i}, r={r}"));
    }
    check_cap(n)?;
    complete(i - 1)?.join(&near_regular(n - i + 1, r - 1)?)
}

/// `K_{k-1} + M_{n-k+1}`.
pub fn k_join_matching(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || n < k {
        return domain(format!("K_(k-1) + M_(n-k+1) needs 1 <= k <= n, got n={n}, k={k}"));
    }
    check_cap(n)?;
    complete(k - 1)?.join(&matching(n - k + 1)?)
}

/// Part sizes `(⌊n/2⌋-1, ⌈n/2⌉+1)` of the unbalanced complete bipartite graph.
pub fn unbalanced_parts(n: usize) -> (usize, usize) {
    (n / 2 - 1, n.div_ceil(2) + 1)
}

pub fn unbalanced_bipartite(n: usize) -> Result<Graph> {
    if n < 6 {
        return domain(format!("unbalanced bipartite graph needs n >= 6, got {n}"));
    }
    check_cap(n)?;
    let (a, b) = unbalanced_parts(n);
    Graph::empty(a)?.join(&Graph::empty(b)?)
}

/// A named family with its parameters, as written on the command line,
/// e.g. `h-path:n=10,ell=6` or `g-star:n=9,i=2,r=2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete { t: usize },
    Empty { t: usize },
    Path { t: usize },
    Star { r: usize },
    Matching { t: usize },
    NearRegular { n: usize, d: usize },
    Turan { n: usize, r: usize },
    Friendship { n: usize },
    Broom { ell: usize, s: usize },
    HPath { n: usize, ell: usize },
    HLinearForest { n: usize, lengths: Vec<usize> },
    GStarJoin { n: usize, i: usize, r: usize },
    KJoinMatching { n: usize, k: usize },
    UnbalancedBipartite { n: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        match self {
            Complete { t } => complete(*t),
            Empty { t } => empty(*t),
            Path { t } => path(*t),
            Star { r } => star(*r),
            Matching { t } => matching(*t),
            NearRegular { n, d } => near_regular(*n, *d),
            Turan { n, r } => turan(*n, *r),
            Friendship { n } => friendship(*n),
            Broom { ell, s } => broom(*ell, *s),
            HPath { n, ell } => h_path(*n, *ell),
            HLinearForest { n, lengths } => h_linear_forest(*n, lengths),
            GStarJoin { n, i, r } => g_star_join(*n, *i, *r),
            KJoinMatching { n, k } => k_join_matching(*n, *k),
            UnbalancedBipartite { n } => unbalanced_bipartite(*n),
        }
    }
}

/// Largest vertex count accepted by [`FamilySpec::degree_sequence`].
pub const MULTISET_CAP: usize = 1 << 24;

impl FamilySpec {
    /// Degree multiset of the family member, from its structure rather than
    /// from a built graph, so it is available above [`VERTEX_CAP`].
    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        use FamilySpec::*;
        let n = self.order();
        if n > MULTISET_CAP {
            return Err(Error::CapExceeded { n, cap: MULTISET_CAP });
        }
        let mut d: Vec<usize> = Vec::with_capacity(n);
        let rep = |d: &mut Vec<usize>, deg: usize, k: usize| d.extend(std::iter::repeat_n(deg, k));
        match self {
            Complete { t } => rep(&mut d, t.saturating_sub(1), *t),
            Empty { t } => rep(&mut d, 0, *t),
            Path { t } => match t {
                0 => {}
                1 => d.push(0),
                _ => {
                    rep(&mut d, 1, 2);
                    rep(&mut d, 2, t - 2);
                }
            },
            Star { r } => {
                d.push(*r);
                rep(&mut d, 1, *r);
            }
            Matching { t } => {
                rep(&mut d, 1, t - t % 2);
                rep(&mut d, 0, t % 2);
            }
            NearRegular { n, d: deg } => {
                if deg >= n {
                    return domain(format!("near-regular graph needs d < n, got n={n}, d={deg}"));
                }
                near_regular_degrees(&mut d, *n, *deg, 0);
            }
            Turan { n, r } => {
                if *r == 0 {
                    return domain("Turán graph needs r >= 1");
                }
                for size in turan_parts(*n, *r) {
                    rep(&mut d, n - size, size);
                }
            }
            Friendship { n } => {
                if *n < 3 || n.is_multiple_of(2) {
                    return domain(format!("friendship graph needs odd n >= 3, got {n}"));
                }
                d.push(n - 1);
                rep(&mut d, 2, n - 1);
            }
            Broom { ell, s } => {
                if *ell < 4 {
                    return domain(format!("broom needs ell >= 4, got {ell}"));
                }
                rep(&mut d, 1, 2 + s);
                rep(&mut d, 2, ell - 3);
                d.push(2 + s);
            }
            HPath { n, ell } => {
                if *ell < 4 {
                    return domain(format!("H(n, ell) needs ell >= 4, got {ell}"));
                }
                if n < ell {
                    return domain(format!("H(n, ell) needs n >= ell, got n={n}, ell={ell}"));
                }
                clique_join_independent_degrees(&mut d, *n, ell / 2 - 1, ell % 2 == 1);
            }
            HLinearForest { n, lengths } => {
                if lengths.is_empty() || lengths.iter().any(|&l| l < 2) {
                    return domain("linear forest needs path orders >= 2");
                }
                let total: usize = lengths.iter().sum();
                if *n < total {
                    return domain(format!("H(n,F) needs n >= {total}, got {n}"));
                }
                let b = linear_forest_b(lengths).expect("some path has order >= 2");
                clique_join_independent_degrees(&mut d, *n, b, lengths.iter().all(|l| l % 2 == 1));
            }
            GStarJoin { n, i, r } => {
                if *i < 1 || *r < 1 || n + 1 < *i || n + 1 - i < *r {
                    return domain(format!("G(n,i,r) needs i, r >= 1 and n-i+1 > r-1, got n={n}, i={i}, r={r}"));
                }
                rep(&mut d, n - 1, i - 1);
                near_regular_degrees(&mut d, n + 1 - i, r - 1, i - 1);
            }
            KJoinMatching { n, k } => {
                if *k < 1 || n < k {
                    return domain(format!("K_(k-1) + M_(n-k+1) needs 1 <= k <= n, got n={n}, k={k}"));
                }
                let m = n - k + 1;
                rep(&mut d, n - 1, k - 1);
                rep(&mut d, *k, m - m % 2);
                rep(&mut d, k - 1, m % 2);
            }
            UnbalancedBipartite { n } => {
                if *n < 6 {
                    return domain(format!("unbalanced bipartite graph needs n >= 6, got {n}"));
                }
                let (a, b) = unbalanced_parts(*n);
                rep(&mut d, b, a);
                rep(&mut d, a, b);
            }
        }
        Ok(DegreeSequence::from_degrees(d))
    }

    /// Number of vertices of the family member.
    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match self {
            Complete { t } | Empty { t } | Path { t } | Matching { t } => *t,
            Star { r } => r + 1,
            Broom { ell, s } => ell + s,
            NearRegular { n, .. }
            | Turan { n, .. }
            | Friendship { n }
            | HPath { n, .. }
            | HLinearForest { n, .. }
            | GStarJoin { n, .. }
            | KJoinMatching { n, .. }
            | UnbalancedBipartite { n } => *n,
        }
    }
}

/// Near `deg`-regular degrees on `n` vertices, each raised by `shift`.
fn near_regular_degrees(out: &mut Vec<usize>, n: usize, deg: usize, shift: usize) {
    out.extend(std::iter::repeat_n(deg + shift, n));
    if deg * n % 2 == 1 {
        *out.last_mut().expect("dn odd, so n >= 1") -= 1;
    }
}

fn clique_join_independent_degrees(out: &mut Vec<usize>, n: usize, b: usize, extra_edge: bool) {
    out.extend(std::iter::repeat_n(n - 1, b));
    out.extend(std::iter::repeat_n(b, n - b));
    if extra_edge {
        let len = out.len();
        out[len - 1] += 1;
        out[len - 2] += 1;
    }
}

struct Params<'a> {
    family: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
}

impl Params<'_> {
    fn get(&self, key: &str) -> Result<&str> {
        self.pairs
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::Parse(format!("family `{}` needs `{key}=`", self.family)))
    }

    fn num(&self, key: &str) -> Result<usize> {
        let v = self.get(key)?;
        v.parse()
            .map_err(|_| Error::Parse(format!("`{key}={v}` is not a nonnegative integer")))
    }

    fn list(&self, key: &str) -> Result<Vec<usize>> {
        self.get(key)?
            .split('/')
            .map(|x| {
                x.parse()
                    .map_err(|_| Error::Parse(format!("bad list entry `{x}` in `{key}`")))
            })
            .collect()
    }

    fn only(&self, keys: &[&str]) -> Result<()> {
        for (k, _) in &self.pairs {
            if !keys.contains(k) {
                return Err(Error::Parse(format!("family `{}` has no parameter `{k}`", self.family)));
            }
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut pairs = Vec::new();
        for item in rest.split(',').filter(|x| !x.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{item}`")))?;
            pairs.push((k.trim(), v.trim()));
        }
        let p = Params { family, pairs };
        use FamilySpec::*;
        let spec = match family {
            "complete" => { p.only(&["t"])?; Complete { t: p.num("t")? } }
            "empty" => { p.only(&["t"])?; Empty { t: p.num("t")? } }
            "path" => { p.only(&["t"])?; Path { t: p.num("t")? } }
            "star" => { p.only(&["r"])?; Star { r: p.num("r")? } }
            "matching" => { p.only(&["t"])?; Matching { t: p.num("t")? } }
            "near-regular" => { p.only(&["n", "d"])?; NearRegular { n: p.num("n")?, d: p.num("d")? } }
            "turan" => { p.only(&["n", "r"])?; Turan { n: p.num("n")?, r: p.num("r")? } }
            "friendship" => { p.only(&["n"])?; Friendship { n: p.num("n")? } }
            "broom" => { p.only(&["ell", "s"])?; Broom { ell: p.num("ell")?, s: p.num("s")? } }
            "h-path" => { p.only(&["n", "ell"])?; HPath { n: p.num("n")?, ell: p.num("ell")? } }
            "h-linear" => {
                p.only(&["n", "lengths"])?;
                HLinearForest { n: p.num("n")?, lengths: p.list("lengths")? }
            }
            "g-star" => {
                p.only(&["n", "i", "r"])?;
                GStarJoin { n: p.num("n")?, i: p.num("i")?, r: p.num("r")? }
            }
            "k-join-matching" => {
                p.only(&["n", "k"])?;
                KJoinMatching { n: p.num("n")?, k: p.num("k")? }
            }
            "unbalanced-bipartite" => { p.only(&["n"])?; UnbalancedBipartite { n: p.num("n")? } }
            other => return Err(Error::Parse(format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Complete { t } => write!(f, "complete:t={t}"),
            Empty { t } => write!(f, "empty:t={t}"),
            Path { t } => write!(f, "path:t={t}"),
            Star { r } => write!(f, "star:r={r}"),
            Matching { t } => write!(f, "matching:t={t}"),
            NearRegular { n, d } => write!(f, "near-regular:n={n},d={d}"),
            Turan { n, r } => write!(f, "turan:n={n},r={r}"),
            Friendship { n } => write!(f, "friendship:n={n}"),
            Broom { ell, s } => write!(f, "broom:ell={ell},s={s}"),
            HPath { n, ell } => write!(f, "h-path:n={n},ell={ell}"),
            HLinearForest { n, lengths } => {
                let l: Vec<String> = lengths.iter().map(|x| x.to_string()).collect();
                write!(f, "h-linear:n={n},lengths={}", l.join("/"))
            }
            GStarJoin { n, i, r } => write!(f, "g-star:n={n},i={i},r={r}"),
            KJoinMatching { n, k } => write!(f, "k-join-matching:n={n},k={k}"),
            UnbalancedBipartite { n } => write!(f, "unbalanced-bipartite:n={n}"),
        }
    }
}
