//! Exact containment tests for the forbidden forests.
//!
//! Every detector is an exhaustive backtracking search, so the worst case is
//! exponential. Each search can run under a [`Budget`]; when the budget runs
//! out the answer is [`Detection::Unknown`], never a guess.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::graph::{bit, Bits, Graph};

/// A forbidden forest. Lists are kept sorted in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ForestPattern {
    /// `P_ℓ`, the path on `ℓ` vertices.
    Path(usize),
    /// Vertex-disjoint paths of the given orders.
    LinearForest(Vec<usize>),
    /// `S_r`, the star with maximum degree `r`.
    Star(usize),
    /// Vertex-disjoint stars with the given maximum degrees.
    StarForest(Vec<usize>),
    /// `B_{ℓ,s}`: `P_ℓ` with `s` pendant edges at a penultimate vertex.
    Broom { ell: usize, s: usize },
}

impl ForestPattern {
    pub fn linear_forest(mut lengths: Vec<usize>) -> Result<Self> {
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        let f = ForestPattern::LinearForest(lengths);
        f.validate()?;
        Ok(f)
    }

    pub fn star_forest(mut degrees: Vec<usize>) -> Result<Self> {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let f = ForestPattern::StarForest(degrees);
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ForestPattern::Path(l) if *l < 2 => domain(format!("path order must be >= 2, got {l}")),
            ForestPattern::LinearForest(ls) => {
                if ls.is_empty() {
                    domain("linear forest needs at least one path")
                } else if ls.iter().any(|&l| l < 2) {
                    domain("linear forest path orders must be >= 2")
                } else if ls.windows(2).any(|w| w[0] < w[1]) {
                    domain("linear forest orders must be sorted descending")
                } else {
                    Ok(())
                }
            }
            ForestPattern::Star(r) if *r < 1 => domain("star degree must be >= 1"),
            ForestPattern::StarForest(rs) => {
                if rs.is_empty() {
                    domain("star forest needs at least one star")
                } else if rs.iter().any(|&r| r < 1) {
                    domain("star forest degrees must be >= 1")
                } else if rs.windows(2).any(|w| w[0] < w[1]) {
                    domain("star forest degrees must be sorted descending")
                } else {
                    Ok(())
                }
            }
            ForestPattern::Broom { ell, .. } if *ell < 4 => {
                domain(format!("broom needs ell >= 4, got {ell}"))
            }
            _ => Ok(()),
        }
    }

    /// Number of vertices of the pattern.
    pub fn order(&self) -> usize {
        match self {
            ForestPattern::Path(l) => *l,
            ForestPattern::LinearForest(ls) => ls.iter().sum(),
            ForestPattern::Star(r) => r + 1,
            ForestPattern::StarForest(rs) => rs.iter().map(|r| r + 1).sum(),
            ForestPattern::Broom { ell, s } => ell + s,
        }
    }

    /// The pattern as an explicit forest: `(vertex count, edges)`.
    pub fn edge_list(&self) -> (usize, Vec<(usize, usize)>) {
        let mut edges = Vec::new();
        let mut next = 0;
        let add_path = |edges: &mut Vec<_>, len: usize, next: &mut usize| {
            for i in 1..len {
                edges.push((*next + i - 1, *next + i));
            }
            *next += len;
        };
        let add_star = |edges: &mut Vec<_>, r: usize, next: &mut usize| {
            for i in 1..=r {
                edges.push((*next, *next + i));
            }
            *next += r + 1;
        };
        match self {
            ForestPattern::Path(l) => add_path(&mut edges, *l, &mut next),
            ForestPattern::LinearForest(ls) => {
                for &l in ls {
                    add_path(&mut edges, l, &mut next);
                }
            }
            ForestPattern::Star(r) => add_star(&mut edges, *r, &mut next),
            ForestPattern::StarForest(rs) => {
                for &r in rs {
                    add_star(&mut edges, r, &mut next);
                }
            }
            ForestPattern::Broom { ell, s } => {
                add_path(&mut edges, *ell, &mut next);
                for leaf in 0..*s {
                    edges.push((ell - 2, ell + leaf));
                }
                next += s;
            }
        }
        (next, edges)
    }
}

impl fmt::Display for ForestPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            ForestPattern::Path(l) => write!(f, "path:{l}"),
            ForestPattern::LinearForest(ls) => write!(f, "linear:{}", join(ls)),
            ForestPattern::Star(r) => write!(f, "star:{r}"),
            ForestPattern::StarForest(rs) => write!(f, "stars:{}", join(rs)),
            ForestPattern::Broom { ell, s } => write!(f, "broom:{ell},{s}"),
        }
    }
}

impl Serialize for ForestPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for ForestPattern {
    type Err = Error;

    /// Grammar: `path:6`, `linear:5,3,2`, `star:4`, `stars:3,2,2`,
    /// `broom:6,3`, `kpath:3x4` (three copies of `P_4`).
    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("pattern `{s}` needs the form kind:args")))?;
        let nums = |a: &str| -> Result<Vec<usize>> {
            a.split(',')
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad number `{x}` in pattern `{s}`")))
                })
                .collect()
        };
        let one = |a: &str| -> Result<usize> {
            match nums(a)?.as_slice() {
                [x] => Ok(*x),
                _ => Err(Error::Parse(format!("pattern `{s}` takes one number"))),
            }
        };
        let f = match kind {
            "path" => ForestPattern::Path(one(args)?),
            "linear" => ForestPattern::linear_forest(nums(args)?)?,
            "star" => ForestPattern::Star(one(args)?),
            "stars" => ForestPattern::star_forest(nums(args)?)?,
            "broom" => match nums(args)?.as_slice() {
                [ell, s] => ForestPattern::Broom { ell: *ell, s: *s },
                _ => return Err(Error::Parse(format!("broom takes ell,s: `{s}`"))),
            },
            "kpath" => {
                let (k, l) = args
                    .split_once('x')
                    .ok_or_else(|| Error::Parse(format!("kpath takes KxL: `{s}`")))?;
                let k = one(k)?;
                let l = one(l)?;
                if k == 0 {
                    return Err(Error::Parse("kpath needs k >= 1".into()));
                }
                ForestPattern::linear_forest(vec![l; k])?
            }
            other => return Err(Error::Parse(format!("unknown pattern kind `{other}`"))),
        };
        f.validate()?;
        Ok(f)
    }
}

/// Result of a budgeted containment search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Detection {
    Found,
    Absent,
    /// The step budget ran out before the search finished.
    Unknown,
}

/// Step budget for a search. Each visited search node costs one step.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None, used: 0 }
    }

    pub fn limited(steps: u64) -> Self {
        Budget { limit: Some(steps), used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    fn tick(&mut self) -> std::result::Result<(), Exhausted> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(Exhausted),
            _ => Ok(()),
        }
    }
}

#[derive(Debug)]
struct Exhausted;

type Search<T> = std::result::Result<T, Exhausted>;

fn to_detection(r: Search<bool>) -> Detection {
    match r {
        Ok(true) => Detection::Found,
        Ok(false) => Detection::Absent,
        Err(Exhausted) => Detection::Unknown,
    }
}

fn unwrap_unlimited(d: Detection) -> bool {
    match d {
        Detection::Found => true,
        Detection::Absent => false,
        Detection::Unknown => unreachable!("unlimited budget cannot run out"),
    }
}

/// Twin classes: `u` and `w` are twins when `N(u) - w = N(w) - u`. Any
/// permutation of a class is an automorphism. Entry `v` is the class of `v`.
fn twin_classes(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut class: Vec<u64> = (0..n).map(bit).collect();
    for u in 0..n {
        for w in u + 1..n {
            if g.neighbors(u) & !bit(w) == g.neighbors(w) & !bit(u) {
                class[u] |= bit(w);
                class[w] |= bit(u);
            }
        }
    }
    class
}

/// Whether `u` is the lowest vertex of its twin class inside `free`.
/// Trying only these is enough: permuting twins maps solutions to solutions,
/// so some solution always takes the lowest unused twin at every step.
#[inline]
fn twin_rep(twins: &[u64], u: usize, free: u64) -> bool {
    twins[u] & free & crate::graph::low_mask(u) == 0
}

/// Enumerates simple paths on `len` vertices inside `avail` that start at
/// `start`, calling `visit(path, mask)` for each. Stops when `visit` returns true.
struct PathWalk<'a, F> {
    g: &'a Graph,
    twins: &'a [u64],
    len: usize,
    budget: &'a mut Budget,
    visit: F,
    stack: Vec<usize>,
}

impl<F: FnMut(&[usize], u64, &mut Budget) -> Search<bool>> PathWalk<'_, F> {
    fn extend(&mut self, avail: u64, used: u64) -> Search<bool> {
        self.budget.tick()?;
        if self.stack.len() == self.len {
            return (self.visit)(&self.stack, used, self.budget);
        }
        let end = *self.stack.last().expect("walk starts with one vertex");
        let free = avail & !used;
        let remaining = self.len - self.stack.len();
        if remaining > 1 {
            // Everything still needed must be reachable from the current end.
            let reach = self.g.reach(end, free | bit(end));
            if (reach.count_ones() as usize) < remaining + 1 {
                return Ok(false);
            }
        }
        for u in Bits(self.g.neighbors(end) & free) {
            if !twin_rep(self.twins, u, free) {
                continue;
            }
            self.stack.push(u);
            let hit = self.extend(avail, used | bit(u))?;
            self.stack.pop();
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn from(&mut self, start: usize, avail: u64) -> Search<bool> {
        self.stack.clear();
        self.stack.push(start);
        self.extend(avail, bit(start))
    }

    /// Runs from every start in `starts` that is the lowest of its twin class.
    fn search_from(&mut self, starts: u64, avail: u64) -> Search<bool> {
        for s in Bits(starts) {
            if twin_rep(self.twins, s, avail) && self.from(s, avail)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn walk<'a, F>(
    g: &'a Graph,
    twins: &'a [u64],
    len: usize,
    budget: &'a mut Budget,
    visit: F,
) -> PathWalk<'a, F> {
    PathWalk { g, twins, len, budget, visit, stack: Vec::with_capacity(len) }
}

/// Vertices of `avail` lying in components (of `g[avail]`) with at least `size` vertices.
fn big_components(g: &Graph, avail: u64, size: usize) -> u64 {
    let mut rest = avail;
    let mut out = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let c = g.reach(v, avail);
        if c.count_ones() as usize >= size {
            out |= c;
        }
        rest &= !c;
    }
    out
}

fn path_search(g: &Graph, ell: usize, budget: &mut Budget) -> Search<bool> {
    if ell == 0 {
        return Ok(true);
    }
    if ell > g.order() {
        return Ok(false);
    }
    let starts = big_components(g, g.vertex_mask(), ell);
    let twins = twin_classes(g);
    let mut w = walk(g, &twins, ell, budget, |_: &[usize], _: u64, _: &mut Budget| Ok(true));
    w.search_from(starts, starts)
}

/// Whether `g` has a (not necessarily induced) path on `ell` vertices.
pub fn contains_path(g: &Graph, ell: usize) -> bool {
    unwrap_unlimited(detect_path(g, ell, &mut Budget::unlimited()))
}

pub fn detect_path(g: &Graph, ell: usize, budget: &mut Budget) -> Detection {
    to_detection(path_search(g, ell, budget))
}

/// Places the paths `lengths[idx..]` disjointly inside `avail`.
fn place_paths(
    g: &Graph,
    twins: &[u64],
    lengths: &[usize],
    idx: usize,
    avail: u64,
    budget: &mut Budget,
) -> Search<bool> {
    if idx == lengths.len() {
        return Ok(true);
    }
    let need: usize = lengths[idx..].iter().sum();
    if (avail.count_ones() as usize) < need {
        return Ok(false);
    }
    let ell = lengths[idx];
    let smallest = *lengths.last().expect("nonempty");
    if (big_components(g, avail, smallest).count_ones() as usize) < need {
        return Ok(false);
    }
    let starts = big_components(g, avail, ell);
    // Twin reduction already breaks most symmetry; orientation and the order
    // of equal paths are left free because label-based rules would not
    // combine soundly with it.
    let mut w = walk(g, twins, ell, budget, |_: &[usize], mask: u64, b: &mut Budget| {
        place_paths(g, twins, lengths, idx + 1, avail & !mask, b)
    });
    w.search_from(starts, starts)
}

/// Whether `g` has vertex-disjoint paths of the given orders.
pub fn contains_linear_forest(g: &Graph, lengths: &[usize]) -> bool {
    unwrap_unlimited(detect_linear_forest(g, lengths, &mut Budget::unlimited()))
}

pub fn detect_linear_forest(g: &Graph, lengths: &[usize], budget: &mut Budget) -> Detection {
    let mut ls = lengths.to_vec();
    ls.sort_unstable_by(|a, b| b.cmp(a));
    if ls.is_empty() {
        return Detection::Found;
    }
    let twins = twin_classes(g);
    to_detection(place_paths(g, &twins, &ls, 0, g.vertex_mask(), budget))
}

/// Kuhn's augmenting-path matching of star slots to leaf vertices.
struct LeafMatcher<'a> {
    g: &'a Graph,
    slots: Vec<usize>,
    /// Slot index matched to each vertex.
    owner: Vec<Option<usize>>,
}

impl LeafMatcher<'_> {
    fn augment(&mut self, slot: usize, leaves: u64, seen: &mut u64) -> bool {
        for u in Bits(self.g.neighbors(self.slots[slot]) & leaves & !*seen) {
            *seen |= bit(u);
            match self.owner[u] {
                None => {
                    self.owner[u] = Some(slot);
                    return true;
                }
                Some(other) => {
                    if self.augment(other, leaves, seen) {
                        self.owner[u] = Some(slot);
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Whether each centre `centres[i]` can get `degrees[i]` private leaves
/// outside the centre set.
fn leaves_feasible(g: &Graph, centres: &[usize], degrees: &[usize]) -> bool {
    let centre_mask = centres.iter().fold(0u64, |m, &c| m | bit(c));
    let leaves = g.vertex_mask() & !centre_mask;
    let slots: Vec<usize> = centres
        .iter()
        .zip(degrees)
        .flat_map(|(&c, &r)| std::iter::repeat_n(c, r))
        .collect();
    let mut m = LeafMatcher { g, slots, owner: vec![None; g.order()] };
    (0..m.slots.len()).all(|s| {
        let mut seen = 0;
        m.augment(s, leaves, &mut seen)
    })
}

fn place_centres(
    g: &Graph,
    degrees: &[usize],
    candidates: &[Vec<usize>],
    centres: &mut Vec<usize>,
    // Index into the candidate list used by the previous centre.
    prev_pos: usize,
    budget: &mut Budget,
) -> Search<bool> {
    budget.tick()?;
    let i = centres.len();
    if i == degrees.len() {
        return Ok(leaves_feasible(g, centres, degrees));
    }
    // Stars of equal degree are interchangeable: take their centres in list order.
    let from = if i > 0 && degrees[i - 1] == degrees[i] { prev_pos + 1 } else { 0 };
    let chosen = centres.iter().fold(0u64, |m, &c| m | bit(c));
    for (pos, &c) in candidates[i].iter().enumerate().skip(from) {
        if chosen & bit(c) != 0 {
            continue;
        }
        let taken = chosen | bit(c);
        if (g.neighbors(c) & !taken).count_ones() < degrees[i] as u32 {
            continue;
        }
        if centres
            .iter()
            .zip(degrees)
            .any(|(&d, &r)| (g.neighbors(d) & !taken).count_ones() < r as u32)
        {
            continue;
        }
        centres.push(c);
        let hit = place_centres(g, degrees, candidates, centres, pos, budget)?;
        centres.pop();
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `g` has vertex-disjoint stars `S_{r_1}, ..., S_{r_k}`.
pub fn contains_star_forest(g: &Graph, degrees: &[usize]) -> bool {
    unwrap_unlimited(detect_star_forest(g, degrees, &mut Budget::unlimited()))
}

pub fn detect_star_forest(g: &Graph, degrees: &[usize], budget: &mut Budget) -> Detection {
    let mut rs = degrees.to_vec();
    rs.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = rs.iter().map(|r| r + 1).sum();
    if total > g.order() {
        return Detection::Absent;
    }
    // Centres in decreasing host degree, lowest label first on ties.
    let mut by_degree: Vec<usize> = (0..g.order()).collect();
    by_degree.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let candidates: Vec<Vec<usize>> = rs
        .iter()
        .map(|&r| by_degree.iter().copied().filter(|&v| g.degree(v) >= r).collect())
        .collect();
    to_detection(place_centres(g, &rs, &candidates, &mut Vec::new(), 0, budget))
}

/// Whether `g` contains `B_{ℓ,s}`.
pub fn contains_broom(g: &Graph, ell: usize, s: usize) -> bool {
    unwrap_unlimited(detect_broom(g, ell, s, &mut Budget::unlimited()))
}

/// The broom is a path `c = w_0, w_1, ..., w_{ℓ-2}` from its centre `c`
/// (the penultimate vertex) plus `s + 1` further neighbours of `c` off the
/// path: one finishes `P_ℓ`, the other `s` are the pendant leaves.
pub fn detect_broom(g: &Graph, ell: usize, s: usize, budget: &mut Budget) -> Detection {
    if ell + s > g.order() {
        return Detection::Absent;
    }
    let live = big_components(g, g.vertex_mask(), ell + s);
    let centres = Bits(live).filter(|&c| g.degree(c) > s + 1).fold(0u64, |m, c| m | bit(c));
    let twins = twin_classes(g);
    let mut w = walk(g, &twins, ell - 1, budget, |p: &[usize], mask: u64, _: &mut Budget| {
        Ok((g.neighbors(p[0]) & !mask).count_ones() as usize > s)
    });
    to_detection(w.search_from(centres, live))
}

/// Whether `g` contains `f` as a subgraph.
pub fn contains(g: &Graph, f: &ForestPattern) -> bool {
    unwrap_unlimited(detect(g, f, &mut Budget::unlimited()))
}

pub fn detect(g: &Graph, f: &ForestPattern, budget: &mut Budget) -> Detection {
    match f {
        ForestPattern::Path(l) => detect_path(g, *l, budget),
        ForestPattern::LinearForest(ls) if ls.len() == 1 => detect_path(g, ls[0], budget),
        ForestPattern::LinearForest(ls) => detect_linear_forest(g, ls, budget),
        ForestPattern::Star(r) => {
            if g.max_degree() >= *r {
                Detection::Found
            } else {
                Detection::Absent
            }
        }
        ForestPattern::StarForest(rs) => detect_star_forest(g, rs, budget),
        ForestPattern::Broom { ell, s: 0 } => detect_path(g, *ell, budget),
        ForestPattern::Broom { ell, s } => detect_broom(g, *ell, *s, budget),
    }
}

/// `true` when `g` does not contain `f`.
pub fn is_free(g: &Graph, f: &ForestPattern) -> bool {
    !contains(g, f)
}

struct GenericMatch<'a> {
    host: &'a Graph,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    pdeg: Vec<usize>,
    image: Vec<usize>,
}

impl GenericMatch<'_> {
    fn place(&mut self, idx: usize, used: u64, budget: &mut Budget) -> Search<bool> {
        budget.tick()?;
        if idx == self.order.len() {
            return Ok(true);
        }
        let pv = self.order[idx];
        let cands = match self.parent[pv] {
            Some(par) => self.host.neighbors(self.image[par]),
            None => self.host.vertex_mask(),
        } & !used;
        for h in Bits(cands) {
            if self.host.degree(h) < self.pdeg[pv] {
                continue;
            }
            self.image[pv] = h;
            if self.place(idx + 1, used | bit(h), budget)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Subgraph containment of an arbitrary forest given as an edge list on
/// `pattern_n` vertices, by vertex-map backtracking. Independent of the
/// specialized detectors and used to cross-check them.
pub fn contains_forest_generic(
    g: &Graph,
    pattern_n: usize,
    pattern_edges: &[(usize, usize)],
) -> Result<bool> {
    match detect_forest_generic(g, pattern_n, pattern_edges, &mut Budget::unlimited())? {
        Detection::Found => Ok(true),
        _ => Ok(false),
    }
}

pub fn detect_forest_generic(
    g: &Graph,
    pattern_n: usize,
    pattern_edges: &[(usize, usize)],
    budget: &mut Budget,
) -> Result<Detection> {
    let mut adj = vec![Vec::new(); pattern_n];
    let mut uf: Vec<usize> = (0..pattern_n).collect();
    fn root(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for &(a, b) in pattern_edges {
        if a >= pattern_n || b >= pattern_n {
            return domain("pattern edge endpoint out of range");
        }
        let (ra, rb) = (root(&mut uf, a), root(&mut uf, b));
        if ra == rb {
            return Err(Error::NotAForest);
        }
        uf[ra] = rb;
        adj[a].push(b);
        adj[b].push(a);
    }
    if pattern_n > g.order() {
        return Ok(Detection::Absent);
    }
    let pdeg: Vec<usize> = adj.iter().map(Vec::len).collect();

    // Components largest first; BFS from the highest-degree vertex of each so
    // every later vertex has an already-placed parent.
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; pattern_n];
    for s in 0..pattern_n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &u in &adj[comp[i]] {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comps.push(comp);
    }
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut order = Vec::with_capacity(pattern_n);
    let mut parent = vec![None; pattern_n];
    for comp in comps {
        let r = *comp.iter().max_by_key(|&&v| (pdeg[v], std::cmp::Reverse(v))).expect("nonempty");
        let mut queue = vec![r];
        let mut placed = vec![false; pattern_n];
        placed[r] = true;
        let mut i = 0;
        while i < queue.len() {
            let v = queue[i];
            for &u in &adj[v] {
                if !placed[u] {
                    placed[u] = true;
                    parent[u] = Some(v);
                    queue.push(u);
                }
            }
            i += 1;
        }
        order.extend(queue);
    }
    let mut m = GenericMatch { host: g, order, parent, pdeg, image: vec![0; pattern_n] };
    Ok(to_detection(m.place(0, 0, budget)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions as c;

    fn cycle(n: usize) -> Graph {
        let mut g = c::path(n).unwrap();
        g.add_edge(0, n - 1).unwrap();
        g
    }

    #[test]
    fn path_examples() {
        assert!(contains_path(&c::complete(3).unwrap(), 3));
        assert!(!contains_path(&c::matching(8).unwrap(), 3));
        assert!(!contains_path(&c::h_path(12, 6).unwrap(), 6));
        assert!(contains_path(&c::h_path(12, 6).unwrap(), 5));
        assert!(!contains_path(&c::complete(3).unwrap(), 4));
    }

    #[test]
    fn linear_forest_examples() {
        assert!(contains_linear_forest(&c::matching(6).unwrap(), &[2, 2]));
        assert!(!contains_linear_forest(&c::star(5).unwrap(), &[2, 2]));
        assert!(!contains_linear_forest(&c::h_linear_forest(12, &[4, 2]).unwrap(), &[4, 2]));
        assert!(contains_linear_forest(&c::h_linear_forest(12, &[4, 2]).unwrap(), &[4]));
    }

    #[test]
    fn star_forest_examples() {
        assert!(contains_star_forest(&c::matching(4).unwrap(), &[1, 1]));
        assert!(!contains_star_forest(&c::g_star_join(10, 2, 2).unwrap(), &[2, 2]));
        assert!(!contains_star_forest(&c::complete(5).unwrap(), &[3, 1]));
        assert!(contains_star_forest(&c::complete(6).unwrap(), &[3, 1]));
    }

    #[test]
    fn star_forest_needs_matching_not_greedy() {
        // Centres 0 and 1 share neighbours {2, 3}; 1 also sees 4.
        // Greedy 0 -> {2,3} leaves 1 only {4}; the right split exists.
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(contains_star_forest(&g, &[2, 1]));
        assert!(!contains_star_forest(&g, &[2, 2]));
    }

    #[test]
    fn broom_examples() {
        assert!(contains_broom(&c::broom(6, 3).unwrap(), 6, 3));
        assert!(!contains_broom(&c::star(9).unwrap(), 4, 1));
        assert!(!contains_broom(&c::h_path(20, 6).unwrap(), 6, 3));
        assert!(!contains_broom(&c::broom(6, 3).unwrap(), 6, 4));
        assert!(!contains_broom(&c::broom(6, 3).unwrap(), 7, 1));
    }

    #[test]
    fn is_free_examples() {
        let any_edge = [
            ForestPattern::Path(2),
            ForestPattern::Star(1),
            ForestPattern::Broom { ell: 5, s: 2 },
            ForestPattern::StarForest(vec![2, 1]),
        ];
        for f in &any_edge {
            assert!(is_free(&c::empty(9).unwrap(), f));
        }
        let k1m8 = c::k_join_matching(9, 2).unwrap();
        assert!(is_free(&k1m8, &ForestPattern::Broom { ell: 5, s: 2 }));
        assert!(!is_free(&c::complete(6).unwrap(), &ForestPattern::Path(4)));
    }

    #[test]
    fn generic_examples() {
        let (n, e) = ForestPattern::Path(5).edge_list();
        assert!(contains_forest_generic(&cycle(5), n, &e).unwrap());
        assert_eq!(
            contains_forest_generic(&cycle(5), 3, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::NotAForest)
        );
    }

    #[test]
    fn budget_gives_unknown() {
        // K_6 + K_7 has 13 vertices but no disjoint P_5, P_5, P_3.
        let g = c::complete(6).unwrap().disjoint_union(&c::complete(7).unwrap()).unwrap();
        let mut b = Budget::limited(3);
        assert_eq!(detect_linear_forest(&g, &[5, 5, 3], &mut b), Detection::Unknown);
        let mut b = Budget::limited(1_000_000);
        assert_eq!(detect_linear_forest(&g, &[5, 5, 3], &mut b), Detection::Absent);
        let k12 = c::complete(12).unwrap();
        assert_eq!(detect(&k12, &ForestPattern::Path(12), &mut Budget::limited(1_000)), Detection::Found);
    }

    #[test]
    fn pattern_grammar() {
        assert_eq!("path:6".parse::<ForestPattern>().unwrap(), ForestPattern::Path(6));
        assert_eq!(
            "linear:2,5,3".parse::<ForestPattern>().unwrap(),
            ForestPattern::LinearForest(vec![5, 3, 2])
        );
        assert_eq!(
            "kpath:3x4".parse::<ForestPattern>().unwrap(),
            ForestPattern::LinearForest(vec![4, 4, 4])
        );
        assert_eq!(
            "stars:2,3,2".parse::<ForestPattern>().unwrap(),
            ForestPattern::StarForest(vec![3, 2, 2])
        );
        assert_eq!(
            "broom:6,3".parse::<ForestPattern>().unwrap(),
            ForestPattern::Broom { ell: 6, s: 3 }
        );
        for s in ["path:6", "linear:5,3,2", "star:4", "stars:3,2,2", "broom:6,3"] {
            assert_eq!(s.parse::<ForestPattern>().unwrap().to_string(), s);
        }
        for bad in ["path:1", "broom:3,1", "star:0", "stars:", "linear:1,2", "cycle:5", "path", "kpath:0x3"] {
            assert!(bad.parse::<ForestPattern>().is_err(), "{bad}");
        }
    }

    #[test]
    fn pattern_edge_lists_are_forests_of_the_right_order() {
        for f in [
            ForestPattern::Broom { ell: 6, s: 2 },
            ForestPattern::StarForest(vec![3, 1]),
            ForestPattern::LinearForest(vec![4, 3]),
        ] {
            let (n, e) = f.edge_list();
            assert_eq!(n, f.order());
            let comps = match &f {
                ForestPattern::StarForest(v) | ForestPattern::LinearForest(v) => v.len(),
                _ => 1,
            };
            assert_eq!(e.len(), n - comps);
            let built = Graph::from_edges(n, &e).unwrap();
            assert!(contains(&built, &f));
        }
    }
}
