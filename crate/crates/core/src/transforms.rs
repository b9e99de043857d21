//! Pendent structures hanging off an anchor `x`, and the rewrites that move
//! them onto a maximum-degree vertex `v`.
//!
//! Each rewrite deletes the structure's edges and joins its peripheral
//! vertices to `v`. When `d(v) = Δ >= ℓ + s - 1` this keeps the graph
//! `B_{ℓ,s}`-free and strictly increases `e_p` for every `p >= 2`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::graph::{bit, Bits, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SiteKind {
    Edge,
    Triangle,
    Diamond,
    /// `t` spokes `y_k`, each adjacent to exactly `x` and `z`; `xz` absent.
    Spindle(usize),
    /// As [`SiteKind::Spindle`] with the edge `xz` present.
    SpindlePlus(usize),
}

impl fmt::Display for SiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SiteKind::Edge => f.write_str("edge"),
            SiteKind::Triangle => f.write_str("triangle"),
            SiteKind::Diamond => f.write_str("diamond"),
            SiteKind::Spindle(t) => write!(f, "spindle:{t}"),
            SiteKind::SpindlePlus(t) => write!(f, "spindle-plus:{t}"),
        }
    }
}

impl Serialize for SiteKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for SiteKind {
    type Err = Error;

    /// `edge`, `triangle`, `diamond`, `spindle:T`, `spindle-plus:T`.
    /// A bare `spindle` or `spindle-plus` means `t = 2`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, t) = match s.split_once(':') {
            Some((name, t)) => {
                let t = t
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad spindle size in `{s}`")))?;
                (name, Some(t))
            }
            None => (s, None),
        };
        let kind = match (name, t) {
            ("edge", None) => SiteKind::Edge,
            ("triangle", None) => SiteKind::Triangle,
            ("diamond", None) => SiteKind::Diamond,
            ("spindle", t) => SiteKind::Spindle(t.unwrap_or(2)),
            ("spindle-plus", t) => SiteKind::SpindlePlus(t.unwrap_or(2)),
            _ => return Err(Error::Parse(format!("unknown site kind `{s}`"))),
        };
        if let SiteKind::Spindle(t) | SiteKind::SpindlePlus(t) = kind {
            if t < 2 {
                return Err(Error::Parse(format!("spindles need t >= 2, got {t}")));
            }
        }
        Ok(kind)
    }
}

/// A pendent structure at anchor `x`, relative to the reference vertex `v`.
///
/// `peripheral` lists `[y]` for an edge, `[y, y']` for a triangle,
/// `[z, y, y']` for a diamond and `[z, y_1, ..., y_t]` for spindles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PendentSite {
    pub kind: SiteKind,
    pub v: usize,
    pub x: usize,
    pub peripheral: Vec<usize>,
}

impl PendentSite {
    fn mask(&self) -> u64 {
        self.peripheral.iter().fold(0, |m, &u| m | bit(u))
    }
}

fn set(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &u| m | bit(u))
}

/// Why `site` does not hold in `c`, or `None` when it does.
fn violation(c: &Graph, site: &PendentSite) -> Option<String> {
    let n = c.order();
    let (v, x) = (site.v, site.x);
    let per = &site.peripheral;
    if v >= n || x >= n || per.iter().any(|&u| u >= n) {
        return Some("vertex out of range".into());
    }
    if v == x {
        return Some("anchor equals the reference vertex".into());
    }
    let m = site.mask();
    if m.count_ones() as usize != per.len() || m & (bit(v) | bit(x)) != 0 {
        return Some("site vertices are not distinct from v, x and each other".into());
    }
    let nb = |u: usize| c.neighbors(u);
    let expect = |u: usize, want: u64| -> Option<String> {
        (nb(u) != want).then(|| format!("vertex {u} has neighbours outside the site"))
    };
    match site.kind {
        SiteKind::Edge => {
            let [y] = per[..] else { return Some("edge site needs one peripheral vertex".into()) };
            expect(y, bit(x))
        }
        SiteKind::Triangle => {
            let [y, y2] = per[..] else { return Some("triangle needs two peripheral vertices".into()) };
            expect(y, bit(x) | bit(y2)).or_else(|| expect(y2, bit(x) | bit(y)))
        }
        SiteKind::Diamond => {
            let [z, y, y2] = per[..] else { return Some("diamond needs three peripheral vertices".into()) };
            expect(z, bit(y) | bit(y2))
                .or_else(|| expect(y, bit(x) | bit(z) | bit(y2)))
                .or_else(|| expect(y2, bit(x) | bit(z) | bit(y)))
        }
        SiteKind::Spindle(t) | SiteKind::SpindlePlus(t) => {
            let plus = matches!(site.kind, SiteKind::SpindlePlus(_));
            if t < 2 || per.len() != t + 1 {
                return Some(format!("spindle of size {t} needs t >= 2 and {} peripheral vertices", t + 1));
            }
            let z = per[0];
            let spokes = set(&per[1..]);
            let z_want = if plus { spokes | bit(x) } else { spokes };
            expect(z, z_want).or_else(|| per[1..].iter().find_map(|&y| expect(y, bit(x) | bit(z))))
        }
    }
}

/// Every pendent site of `c` relative to `v`, ordered by anchor, then kind
/// (edge, triangle, diamond, spindle, spindle-plus), then peripheral vertices.
pub fn find_sites(c: &Graph, v: usize) -> Result<Vec<PendentSite>> {
    let n = c.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    if !c.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut out = Vec::new();
    let mut keep = |site: PendentSite| {
        if violation(c, &site).is_none() {
            out.push(site);
        }
    };
    let others = c.vertex_mask() & !bit(v);
    for x in Bits(others) {
        let around = c.neighbors(x) & !bit(v);
        for y in Bits(around) {
            keep(PendentSite { kind: SiteKind::Edge, v, x, peripheral: vec![y] });
        }
        for y in Bits(around) {
            for y2 in Bits(around & !crate::graph::low_mask(y + 1)) {
                keep(PendentSite { kind: SiteKind::Triangle, v, x, peripheral: vec![y, y2] });
            }
        }
        for z in Bits(others & !bit(x) & !c.neighbors(x)) {
            if let [y, y2] = Bits(c.neighbors(z)).collect::<Vec<_>>()[..] {
                keep(PendentSite { kind: SiteKind::Diamond, v, x, peripheral: vec![z, y, y2] });
            }
        }
        for z in Bits(others & !bit(x)) {
            let plus = c.has_edge(x, z);
            let spokes: Vec<usize> = Bits(c.neighbors(z) & !bit(x)).collect();
            let t = spokes.len();
            if t < 2 {
                continue;
            }
            let kind = if plus { SiteKind::SpindlePlus(t) } else { SiteKind::Spindle(t) };
            let mut peripheral = vec![z];
            peripheral.extend(spokes);
            keep(PendentSite { kind, v, x, peripheral });
        }
    }
    // Spindles were found per anchor in z order; put plain ones before plus.
    out.sort_by_key(|s| {
        let rank = match s.kind {
            SiteKind::Edge => 0,
            SiteKind::Triangle => 1,
            SiteKind::Diamond => 2,
            SiteKind::Spindle(_) => 3,
            SiteKind::SpindlePlus(_) => 4,
        };
        (s.x, rank, s.peripheral.clone())
    });
    Ok(out)
}

/// Applies the rewrite for `site`, after checking that the site still holds
/// and that `d(v) = Δ(c) >= ℓ + s - 1` for the broom `B_{ℓ,s}` under study.
pub fn apply(c: &Graph, v: usize, site: &PendentSite, ell: usize, s: usize) -> Result<Graph> {
    if ell < 5 {
        return domain(format!("the pendent rewrites are stated for ell >= 5, got {ell}"));
    }
    if site.v != v {
        return Err(Error::StaleSite(format!("site was found for v = {}, not {v}", site.v)));
    }
    if let Some(why) = violation(c, site) {
        return Err(Error::StaleSite(why));
    }
    let degree = c.degree(v);
    let max_degree = c.max_degree();
    let required = ell + s - 1;
    if degree != max_degree || degree < required {
        return Err(Error::DegreeCondition { v, degree, max_degree, required });
    }
    let mut g = c.clone();
    for &u in &site.peripheral {
        for w in Bits(c.neighbors(u)) {
            g.remove_edge(u, w)?;
        }
    }
    if let SiteKind::SpindlePlus(_) = site.kind {
        g.remove_edge(site.x, site.peripheral[0])?;
    }
    for &u in &site.peripheral {
        g.add_edge(v, u)?;
    }
    Ok(g)
}

/// A small host with one planted site: `v = 0` is the centre of a star
/// whose leaves are `x = 1` and `leaves` further vertices; the structure
/// hangs off `x` on the highest labels.
pub fn planted_instance(kind: SiteKind, leaves: usize) -> Result<(Graph, PendentSite)> {
    let extra = match kind {
        SiteKind::Edge => 1,
        SiteKind::Triangle => 2,
        SiteKind::Diamond => 3,
        SiteKind::Spindle(t) | SiteKind::SpindlePlus(t) => {
            if t < 2 {
                return domain("spindles need t >= 2");
            }
            t + 1
        }
    };
    let base = 2 + leaves;
    let mut g = Graph::empty(base + extra)?;
    for u in 1..base {
        g.add_edge(0, u)?;
    }
    let x = 1;
    let peripheral: Vec<usize> = (base..base + extra).collect();
    let p = &peripheral;
    match kind {
        SiteKind::Edge => g.add_edge(x, p[0])?,
        SiteKind::Triangle => {
            g.add_edge(x, p[0])?;
            g.add_edge(x, p[1])?;
            g.add_edge(p[0], p[1])?;
        }
        SiteKind::Diamond => {
            let (z, y, y2) = (p[0], p[1], p[2]);
            for (a, b) in [(x, y), (x, y2), (z, y), (z, y2), (y, y2)] {
                g.add_edge(a, b)?;
            }
        }
        SiteKind::Spindle(_) | SiteKind::SpindlePlus(_) => {
            for &y in &p[1..] {
                g.add_edge(x, y)?;
                g.add_edge(p[0], y)?;
            }
            if let SiteKind::SpindlePlus(_) = kind {
                g.add_edge(x, p[0])?;
            }
        }
    }
    Ok((g, PendentSite { kind, v: 0, x, peripheral }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions as c;

    #[test]
    fn pendant_path_has_one_edge_site() {
        // Star at v = 0 with leaves 1..4, and a path 0 - 1 - 5.
        let mut g = c::star(4).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        g.add_edge(1, 5).unwrap();
        let sites = find_sites(&g, 0).unwrap();
        assert_eq!(sites, vec![PendentSite { kind: SiteKind::Edge, v: 0, x: 1, peripheral: vec![5] }]);
        let h = apply(&g, 0, &sites[0], 5, 0).unwrap();
        assert!(h.ep_value(2) > g.ep_value(2));
        assert_eq!(h, c::star(5).unwrap());
    }

    #[test]
    fn planted_triangle_is_found() {
        let (g, site) = planted_instance(SiteKind::Triangle, 4).unwrap();
        assert_eq!(find_sites(&g, 0).unwrap(), vec![site.clone()]);
        let h = apply(&g, 0, &site, 5, 0).unwrap();
        assert_eq!(h.degree(site.peripheral[0]), 1);
        assert_eq!(h.degree(site.peripheral[1]), 1);
        assert_eq!(h.degree(0), g.degree(0) + 2);
        assert_eq!(h.degree(1), g.degree(1) - 2);
    }

    #[test]
    fn complete_graph_has_no_sites() {
        assert!(find_sites(&c::complete(4).unwrap(), 0).unwrap().is_empty());
    }

    #[test]
    fn spindle_plus_centre_drops_to_one() {
        let (g, site) = planted_instance(SiteKind::SpindlePlus(2), 5).unwrap();
        let z = site.peripheral[0];
        assert_eq!(g.degree(z), 3);
        let h = apply(&g, 0, &site, 5, 1).unwrap();
        assert_eq!(h.degree(z), 1);
    }

    #[test]
    fn every_planted_kind_is_found_exactly() {
        for kind in [
            SiteKind::Edge,
            SiteKind::Triangle,
            SiteKind::Diamond,
            SiteKind::Spindle(2),
            SiteKind::Spindle(4),
            SiteKind::SpindlePlus(3),
        ] {
            let (g, site) = planted_instance(kind, 6).unwrap();
            assert_eq!(find_sites(&g, 0).unwrap(), vec![site], "{kind}");
        }
    }

    #[test]
    fn diamond_with_xz_is_not_a_diamond() {
        let (mut g, site) = planted_instance(SiteKind::Diamond, 5).unwrap();
        g.add_edge(site.x, site.peripheral[0]).unwrap();
        assert!(find_sites(&g, 0).unwrap().iter().all(|s| s.kind != SiteKind::Diamond));
        assert!(matches!(apply(&g, 0, &site, 5, 0), Err(Error::StaleSite(_))));
    }

    #[test]
    fn errors() {
        let g = c::matching(4).unwrap();
        assert_eq!(find_sites(&g, 0), Err(Error::Disconnected));
        let (g, site) = planted_instance(SiteKind::Edge, 2).unwrap();
        assert!(matches!(apply(&g, 0, &site, 5, 0), Err(Error::DegreeCondition { required: 4, .. })));
        let (mut g, site) = planted_instance(SiteKind::Edge, 5).unwrap();
        g.add_edge(site.peripheral[0], 2).unwrap();
        assert!(matches!(apply(&g, 0, &site, 5, 0), Err(Error::StaleSite(_))));
    }

    #[test]
    fn kind_grammar() {
        assert_eq!("spindle:3".parse::<SiteKind>().unwrap(), SiteKind::Spindle(3));
        assert_eq!("spindle-plus".parse::<SiteKind>().unwrap(), SiteKind::SpindlePlus(2));
        assert!("spindle:1".parse::<SiteKind>().is_err());
        assert!("edge:2".parse::<SiteKind>().is_err());
        for k in ["edge", "triangle", "diamond", "spindle:2", "spindle-plus:5"] {
            assert_eq!(k.parse::<SiteKind>().unwrap().to_string(), k);
        }
    }
}
