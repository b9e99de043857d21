//! Canonical codes for small graphs.
//!
//! Vertices are first coloured by iterated degree refinement, which is
//! label-invariant. The code is then the lexicographically smallest
//! upper-triangle adjacency bitstring over all orderings that list the
//! colour classes in colour order. Search is a branch-and-bound over
//! positions, abandoning any prefix already larger than the best found.

use std::fmt;

use crate::graph::{bit, Bits, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_code`].
pub const CANON_CAP: usize = 10;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Label-invariant vertex colours: start from degrees and refine by the
/// multiset of neighbour colours until stable. Colours are ranks `0..`.
fn refine_colours(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour: Vec<usize> = g.degrees();
    let mut classes = count_classes(&colour);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = Bits(g.neighbors(v)).map(|u| colour[u]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        let next_classes = distinct.len();
        colour = next;
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

fn count_classes(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    /// Allowed vertices for each position.
    slot_class: Vec<u64>,
    order: Vec<usize>,
    /// `cols[j]`: adjacency of position j to positions `0..j`, bit i = position i.
    cols: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    /// `tight`: the prefix `0..pos` equals the best code's prefix.
    /// Returns whether the best code was replaced in this subtree.
    fn run(&mut self, pos: usize, used: u64, mut tight: bool) -> bool {
        let n = self.g.order();
        if pos == n {
            if self.best.is_none() || !tight {
                self.best = Some(self.cols.clone());
                return true;
            }
            return false;
        }
        let mut updated = false;
        for v in Bits(self.slot_class[pos] & !used) {
            // Column bits, with position 0 as most significant to get a lexicographic order.
            let mut col = 0u64;
            for (i, &u) in self.order[..pos].iter().enumerate() {
                if self.g.has_edge(u, v) {
                    col |= bit(63 - i);
                }
            }
            let next_tight = match &self.best {
                None => true,
                Some(best) if tight => match col.cmp(&best[pos]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Equal => true,
                    std::cmp::Ordering::Less => false,
                },
                Some(_) => false,
            };
            self.order.push(v);
            self.cols.push(col);
            if self.run(pos + 1, used | bit(v), next_tight) {
                updated = true;
                tight = true;
            }
            self.order.pop();
            self.cols.pop();
        }
        updated
    }
}

/// Canonical code of `g`; equal codes iff the graphs are isomorphic.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let n = g.order();
    if n > CANON_CAP {
        return Err(Error::CanonCapExceeded { n, cap: CANON_CAP });
    }
    let colour = refine_colours(g);
    let mut by_colour: Vec<usize> = (0..n).collect();
    by_colour.sort_by_key(|&v| colour[v]);
    let slot_class: Vec<u64> = by_colour
        .iter()
        .map(|&v| {
            (0..n)
                .filter(|&u| colour[u] == colour[v])
                .fold(0u64, |m, u| m | bit(u))
        })
        .collect();

    let mut search = Search {
        g,
        slot_class,
        order: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0, true);
    let best = search.best.unwrap_or_default();

    // Code: order, then the colour-class sizes in colour order, then the packed
    // triangle (column j contributes its top j bits).
    let mut code = vec![n as u8];
    let mut sizes = vec![0u8; n];
    for &c in &colour {
        sizes[c] += 1;
    }
    code.extend(sizes.iter().copied().filter(|&s| s > 0));
    let mut acc = 0u64;
    let mut nbits = 0;
    for (j, col) in best.iter().enumerate() {
        for i in 0..j {
            acc = (acc << 1) | ((col >> (63 - i)) & 1);
            nbits += 1;
        }
    }
    code.extend_from_slice(&(nbits as u8).to_be_bytes());
    code.extend_from_slice(&acc.to_be_bytes());
    Ok(CanonicalCode(code))
}
