use crate::count::BigCount;
use crate::error::{Error, Result};

/// Degrees of a graph sorted in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

/// Outcome of comparing two sorted degree sequences position by position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    /// `a_i >= b_i` everywhere and `a_i > b_i` somewhere.
    Strict,
    /// The sequences are equal.
    Equal,
    /// Some position has `a_i < b_i`.
    None,
}

impl Dominance {
    pub fn holds(self) -> bool {
        !matches!(self, Dominance::None)
    }

    pub fn is_strict(self) -> bool {
        matches!(self, Dominance::Strict)
    }
}

impl DegreeSequence {
    /// Sorts the given degrees descending. No graphicality check is made.
    pub fn from_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn power_sum(&self, p: u32) -> BigCount {
        self.0.iter().map(|&d| BigCount::power(d as u64, p)).sum()
    }

    /// Componentwise dominance of `self` over `other` after descending sort.
    pub fn dominates(&self, other: &DegreeSequence) -> Result<Dominance> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        let mut strict = false;
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return Ok(Dominance::None);
            }
            strict |= a > b;
        }
        Ok(if strict { Dominance::Strict } else { Dominance::Equal })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::from_degrees(v.to_vec())
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(seq(&[3, 3, 2]).dominates(&seq(&[3, 2, 2])).unwrap(), Dominance::Strict);
        assert_eq!(seq(&[3, 2, 2]).dominates(&seq(&[3, 2, 2])).unwrap(), Dominance::Equal);
        assert_eq!(seq(&[4, 1, 1]).dominates(&seq(&[2, 2, 2])).unwrap(), Dominance::None);
    }

    #[test]
    fn dominance_sorts_first() {
        assert!(seq(&[2, 3, 3]).dominates(&seq(&[2, 2, 3])).unwrap().is_strict());
    }

    #[test]
    fn dominance_length_mismatch() {
        assert_eq!(seq(&[1, 1]).dominates(&seq(&[1])), Err(Error::LengthMismatch(2, 1)));
    }

    proptest! {
        #[test]
        fn dominance_implies_power_sum_order(
            base in proptest::collection::vec(0usize..20, 1..12),
            bumps in proptest::collection::vec(0usize..3, 12),
            p in 1u32..6,
        ) {
            let b = seq(&base);
            let a = DegreeSequence::from_degrees(
                b.as_slice().iter().zip(&bumps).map(|(x, y)| x + y).collect(),
            );
            let d = a.dominates(&b).unwrap();
            prop_assert!(d.holds());
            if d.is_strict() {
                prop_assert!(a.power_sum(p) > b.power_sum(p));
            } else {
                prop_assert_eq!(a.power_sum(p), b.power_sum(p));
            }
        }
    }
}
