//! Simple undirected graphs on at most [`VERTEX_CAP`] vertices, stored as one
//! `u64` neighbourhood mask per vertex.

use std::fmt;

use crate::count::BigCount;
use crate::degree::DegreeSequence;
use crate::error::{Error, Result};

/// Largest vertex count a materialized [`Graph`] may have.
pub const VERTEX_CAP: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A simple undirected graph.
///
/// Invariants: `adj` has exactly `n` rows, rows only use the low `n` bits,
/// the relation is symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > VERTEX_CAP {
            return Err(Error::CapExceeded { n, cap: VERTEX_CAP });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > VERTEX_CAP {
            return Err(Error::CapExceeded { n, cap: VERTEX_CAP });
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Domain(format!("row {v} has bits outside 0..{n}")));
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for u in Bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::Domain(format!("adjacency not symmetric at ({v},{u})")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    /// Copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertex_mask();
        (0..self.n).flat_map(move |u| {
            Bits(!self.adj[u] & all & !low_mask(u + 1)).map(move |v| (u, v))
        })
    }

    /// `e_p(G)`: the sum of the `p`-th powers of all degrees.
    pub fn ep_value(&self, p: u32) -> BigCount {
        self.degree_sequence().power_sum(p)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees())
    }

    /// Vertices reachable from `v` inside `within` (which must contain `v`).
    pub fn reach(&self, v: usize, within: u64) -> u64 {
        let mut seen = bit(v);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut rest = self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.reach(v, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Domain("permutation length differs from order".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Disjoint union `self ∪ other`; `other`'s vertices are shifted after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > VERTEX_CAP {
            return Err(Error::CapExceeded { n, cap: VERTEX_CAP });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Join `self + other`: the disjoint union plus every edge across.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = low_mask(self.n);
        let right = low_mask(g.n) & !left;
        for v in 0..g.n {
            g.adj[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
