//! Integer partitions, Young-frame box operations and hook-length dimensions.
//!
//! Partitions of `n` index the irreducible representations of the symmetric
//! group on `n` letters. The remove-then-add box count between two partitions
//! is the edge multiplicity of the McKay quiver built in [`crate::quiver`].

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of a positive integer: weakly decreasing positive parts.
///
/// Coordinates into the associated Young frame are 1-based `(row, column)`
/// pairs with rows increasing downward.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntegerPartition {
    parts: Vec<u64>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    /// The empty partition of 0. Used only as an intermediate in branching.
    fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Boxes whose removal leaves a valid Young frame: no box below or to the
    /// right. Returned as 1-based `(row, column)` pairs, top row first.
    pub fn removable_boxes(&self) -> Vec<(usize, u64)> {
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            let below = self.parts.get(i + 1).copied().unwrap_or(0);
            if p > below {
                out.push((i + 1, p));
            }
        }
        out
    }

    /// Slots where a box can be added keeping a valid frame, including the
    /// fresh row below the frame. 1-based `(row, column)` pairs.
    pub fn addable_boxes(&self) -> Vec<(usize, u64)> {
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            let above = if i == 0 { u64::MAX } else { self.parts[i - 1] };
            if p < above {
                out.push((i + 1, p + 1));
            }
        }
        out.push((self.parts.len() + 1, 1));
        out
    }

    /// The partition obtained by deleting the box at `coord`, which must be
    /// removable. The result partitions `n - 1`.
    fn remove_box(&self, coord: (usize, u64)) -> Self {
        let mut parts = self.parts.clone();
        parts[coord.0 - 1] -= 1;
        if parts[coord.0 - 1] == 0 {
            parts.remove(coord.0 - 1);
        }
        Self { parts }
    }

    /// The partition obtained by inserting a box at `coord`, which must be
    /// addable.
    fn add_box(&self, coord: (usize, u64)) -> Self {
        let mut parts = self.parts.clone();
        if coord.0 > parts.len() {
            parts.push(1);
        } else {
            parts[coord.0 - 1] += 1;
        }
        Self { parts }
    }

    /// All partitions of `n - 1` reachable by one box removal, with repeats
    /// impossible (each removable box yields a distinct frame).
    pub fn restrictions(&self) -> Vec<IntegerPartition> {
        if self.parts.is_empty() {
            return Vec::new();
        }
        if self.n() == 1 {
            return vec![IntegerPartition::empty()];
        }
        self.removable_boxes()
            .into_iter()
            .map(|c| self.remove_box(c))
            .collect()
    }

    /// All partitions of `n + 1` reachable by one box addition.
    pub fn inductions(&self) -> Vec<IntegerPartition> {
        if self.parts.is_empty() {
            return vec![IntegerPartition { parts: vec![1] }];
        }
        self.addable_boxes()
            .into_iter()
            .map(|c| self.add_box(c))
            .collect()
    }

    /// Hook length of the box at 1-based `(row, col)`: arm + leg + 1.
    fn hook_length(&self, row: usize, col: u64) -> u64 {
        let arm = self.parts[row - 1] - col;
        let leg = self.parts[row..].iter().filter(|&&p| p >= col).count() as u64;
        arm + leg + 1
    }

    /// Dimension of the irreducible indexed by this partition, by the
    /// hook-length formula. Exact big-integer arithmetic throughout.
    pub fn specht_dimension(&self) -> Result<BigUint> {
        let n = self.n();
        let mut numerator = BigUint::one();
        for i in 2..=n {
            numerator *= i;
        }
        let mut hooks = BigUint::one();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                hooks *= self.hook_length(i + 1, j);
            }
        }
        if (&numerator % &hooks) != BigUint::ZERO {
            return Err(Error::HookDivision(self.parts.clone()));
        }
        Ok(numerator / hooks)
    }

    /// Number of ways to turn `self` into `other` by removing one box and
    /// then adding one box. Both must partition the same integer.
    pub fn remove_add_count(&self, other: &IntegerPartition) -> Result<u64> {
        if self.n() != other.n() {
            return Err(Error::MismatchedN(self.n(), other.n()));
        }
        let targets = other.restrictions();
        let count = self
            .restrictions()
            .iter()
            .map(|x| targets.iter().filter(|&t| t == x).count() as u64)
            .sum();
        Ok(count)
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse-lexicographic order, so `(n)` comes
/// first and `(1^n)` last. This ordering indexes every matrix over the
/// partitions of `n` in this crate.
pub fn enumerate_partitions(n: u64) -> Result<Vec<IntegerPartition>> {
    if n == 0 {
        return Err(Error::NTooSmall { min: 1, got: 0 });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<IntegerPartition>) {
    if remaining == 0 {
        out.push(IntegerPartition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_small() {
        let parts4 = enumerate_partitions(4).unwrap();
        let expect: Vec<IntegerPartition> = vec![
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(parts4, expect);
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p(&[1])]);
        assert_eq!(enumerate_partitions(6).unwrap().len(), 11);
        assert!(enumerate_partitions(0).is_err());
    }

    #[test]
    fn partition_counts() {
        // p(n) = 1, 2, 3, 5, 7, 11 for n = 1..6
        let expected = [1, 2, 3, 5, 7, 11];
        for (n, &e) in (1..=6).zip(expected.iter()) {
            assert_eq!(enumerate_partitions(n).unwrap().len(), e);
        }
    }

    #[test]
    fn removable() {
        assert_eq!(p(&[4, 2, 2]).removable_boxes(), vec![(1, 4), (3, 2)]);
        assert_eq!(p(&[5]).removable_boxes(), vec![(1, 5)]);
        assert_eq!(p(&[2, 1]).removable_boxes(), vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn addable() {
        assert_eq!(p(&[4, 2, 2]).addable_boxes(), vec![(1, 5), (2, 3), (4, 1)]);
        assert_eq!(p(&[1]).addable_boxes(), vec![(1, 2), (2, 1)]);
        assert_eq!(p(&[3, 3]).addable_boxes(), vec![(1, 4), (3, 1)]);
    }

    #[test]
    fn remove_then_add_round_trips() {
        for lam in enumerate_partitions(7).unwrap() {
            for coord in lam.removable_boxes() {
                assert_eq!(lam.remove_box(coord).add_box(coord), lam);
            }
        }
    }

    #[test]
    fn specht_dimensions() {
        assert_eq!(p(&[6]).specht_dimension().unwrap(), BigUint::from(1u32));
        assert_eq!(p(&[3, 1]).specht_dimension().unwrap(), BigUint::from(3u32));
        assert_eq!(p(&[5, 1]).specht_dimension().unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 1..=7u64 {
            let total: BigUint = enumerate_partitions(n)
                .unwrap()
                .iter()
                .map(|lam| {
                    let d = lam.specht_dimension().unwrap();
                    &d * &d
                })
                .sum();
            let mut fact = BigUint::one();
            for i in 2..=n {
                fact *= i;
            }
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn remove_add_counts() {
        assert_eq!(p(&[6]).remove_add_count(&p(&[5, 1])).unwrap(), 1);
        assert_eq!(p(&[3, 2, 1]).remove_add_count(&p(&[3, 2, 1])).unwrap(), 3);
        assert_eq!(p(&[3, 3]).remove_add_count(&p(&[4, 1, 1])).unwrap(), 0);
        assert!(p(&[3]).remove_add_count(&p(&[2, 2])).is_err());
    }

    #[test]
    fn remove_add_symmetric() {
        for n in 2..=6u64 {
            let all = enumerate_partitions(n).unwrap();
            for a in &all {
                for b in &all {
                    assert_eq!(
                        a.remove_add_count(b).unwrap(),
                        b.remove_add_count(a).unwrap()
                    );
                }
            }
        }
    }
}
