//! Set partitions of `[m]`: enumeration by restricted growth strings,
//! Stirling and (restricted) Bell counting, refinement order, block
//! labelling and the fold/unfold reinterpretation between Hom-space shapes.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set partition of `{1, ..., m}` into disjoint nonempty blocks.
///
/// Blocks are stored in canonical order: the block containing 1 first, then
/// the block containing the smallest element not yet covered, and so on.
/// Elements within a block are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<usize>>", try_from = "Vec<Vec<usize>>")]
pub struct SetPartition {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a set partition from blocks in any order; canonicalizes.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let m: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; m + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidBlocks("empty block".into()));
            }
            for &e in b {
                if e == 0 || e > m || seen[e] {
                    return Err(Error::InvalidBlocks(format!(
                        "blocks must partition 1..={m}, bad element {e}"
                    )));
                }
                seen[e] = true;
            }
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        Ok(Self { m, blocks })
    }

    /// The empty set partition of `[0]`.
    pub fn empty() -> Self {
        Self {
            m: 0,
            blocks: Vec::new(),
        }
    }

    /// Builds from a restricted growth string: `rgs[i]` is the 0-based block
    /// label of element `i + 1`, with labels appearing in increasing order of
    /// first use.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let t = rgs.iter().copied().max().map_or(0, |x| x + 1);
        let mut blocks = vec![Vec::new(); t];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        Self {
            m: rgs.len(),
            blocks,
        }
    }

    /// The restricted growth string of this partition.
    pub fn to_rgs(&self) -> Vec<usize> {
        let mut rgs = vec![0; self.m];
        for (label, block) in self.blocks.iter().enumerate() {
            for &e in block {
                rgs[e - 1] = label;
            }
        }
        rgs
    }

    pub fn ground_set_size(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// True iff every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> Result<bool> {
        if self.m != other.m {
            return Err(Error::MismatchedGroundSet(self.m, other.m));
        }
        let other_rgs = other.to_rgs();
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&e| other_rgs[e - 1] == other_rgs[b[0] - 1])))
    }

    /// The canonical block-label tuple split at `split.l`: position `i` of
    /// the concatenation carries the 1-based canonical index of the block
    /// containing `i`.
    pub fn block_labelling(&self, split: ShapeSplit) -> Result<(Vec<u64>, Vec<u64>)> {
        if split.l + split.k != self.m {
            return Err(Error::ShapeMismatch {
                expected: format!("l + k = {}", self.m),
                got: format!("{} + {}", split.l, split.k),
            });
        }
        let labels: Vec<u64> = self.to_rgs().iter().map(|&b| b as u64 + 1).collect();
        let (top, bottom) = labels.split_at(split.l);
        Ok((top.to_vec(), bottom.to_vec()))
    }

    /// Relabels the ground set through `map` (1-based positions), e.g. for
    /// embedding a factor partition into a product diagram.
    pub fn relabelled(&self, map: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&e| map(e)).collect())
            .collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, "}}")
    }
}

impl From<SetPartition> for Vec<Vec<usize>> {
    fn from(p: SetPartition) -> Self {
        p.blocks
    }
}

impl TryFrom<Vec<Vec<usize>>> for SetPartition {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        SetPartition::new(blocks)
    }
}

/// How a set partition of `[l + k]` is read as a two-row diagram: the first
/// `l` elements are the top (output) row, the remaining `k` the bottom
/// (input) row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShapeSplit {
    pub l: usize,
    pub k: usize,
}

impl ShapeSplit {
    pub fn new(l: usize, k: usize) -> Self {
        Self { l, k }
    }

    pub fn total(&self) -> usize {
        self.l + self.k
    }
}

/// Reinterprets `partition` from one split to another of the same total
/// size. Blocks are untouched; only the top/bottom reading changes.
pub fn refold(partition: &SetPartition, from: ShapeSplit, to: ShapeSplit) -> Result<SetPartition> {
    if from.total() != partition.ground_set_size() || to.total() != from.total() {
        return Err(Error::ShapeMismatch {
            expected: format!("splits totalling {}", partition.ground_set_size()),
            got: format!("{}+{} -> {}+{}", from.l, from.k, to.l, to.k),
        });
    }
    Ok(partition.clone())
}

/// All set partitions of `[m]` with at most `max_blocks` blocks (or all of
/// them when `max_blocks` is `None`), in restricted-growth-string
/// lexicographic order. This order is the artifact-wide parameter numbering.
pub fn enumerate_set_partitions(m: usize, max_blocks: Option<usize>) -> Vec<SetPartition> {
    if m == 0 {
        return vec![SetPartition::empty()];
    }
    let cap = max_blocks.unwrap_or(m);
    if cap == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; m];
    rgs_walk(&mut rgs, 1, 1, cap, &mut out);
    out
}

fn rgs_walk(
    rgs: &mut Vec<usize>,
    pos: usize,
    used: usize,
    cap: usize,
    out: &mut Vec<SetPartition>,
) {
    if pos == rgs.len() {
        out.push(SetPartition::from_rgs(rgs));
        return;
    }
    let top = (used + 1).min(cap);
    for label in 0..top {
        rgs[pos] = label;
        rgs_walk(rgs, pos + 1, used.max(label + 1), cap, out);
    }
}

/// Stirling number of the second kind: set partitions of `[m]` with exactly
/// `t` blocks.
pub fn stirling2(m: usize, t: usize) -> BigUint {
    if t > m {
        return BigUint::zero();
    }
    if m == 0 {
        return BigUint::one();
    }
    if t == 0 {
        return BigUint::zero();
    }
    // S(i, j) = j * S(i-1, j) + S(i-1, j-1), one row kept at a time
    let mut dp = vec![BigUint::zero(); t + 1];
    dp[0] = BigUint::one();
    for _ in 1..=m {
        for j in (1..=t).rev() {
            dp[j] = &dp[j] * BigUint::from(j) + &dp[j - 1];
        }
        dp[0] = BigUint::zero();
    }
    dp[t].clone()
}

/// The Bell number: all set partitions of `[m]`.
pub fn bell(m: usize) -> BigUint {
    (0..=m).map(|t| stirling2(m, t)).sum()
}

/// The n-restricted Bell number: set partitions of `[m]` with at most `n`
/// blocks.
pub fn restricted_bell(m: usize, n: u64) -> BigUint {
    if m == 0 {
        return BigUint::one();
    }
    let cap = (n as usize).min(m);
    (1..=cap).map(|t| stirling2(m, t)).sum()
}
