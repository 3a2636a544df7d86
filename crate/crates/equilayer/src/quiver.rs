//! The McKay quiver of the permutation representation, walk counting, the
//! restriction-induction ladder between adjacent symmetric groups, and the
//! dimension formulas for spaces of equivariant linear maps.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::young::{enumerate_partitions, IntegerPartition};

/// The quiver on the partitions of `n` whose edge count between two nodes is
/// the number of remove-one-box-then-add-one-box paths between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McKayQuiver {
    n: u64,
    nodes: Vec<IntegerPartition>,
    adjacency: Vec<Vec<u64>>,
}

impl McKayQuiver {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Nodes in reverse-lexicographic order, matching `enumerate_partitions`.
    pub fn nodes(&self) -> &[IntegerPartition] {
        &self.nodes
    }

    pub fn adjacency(&self) -> &[Vec<u64>] {
        &self.adjacency
    }

    pub fn node_index(&self, partition: &IntegerPartition) -> Option<usize> {
        self.nodes.iter().position(|p| p == partition)
    }

    /// The `(from, to)` entry of the `power`-th power of the adjacency
    /// matrix, i.e. the number of walks of that length.
    pub fn walk_count(&self, from: usize, to: usize, power: usize) -> BigUint {
        let mut vec = vec![BigUint::zero(); self.nodes.len()];
        vec[from] = BigUint::one();
        for _ in 0..power {
            vec = self.apply(&vec);
        }
        vec[to].clone()
    }

    fn apply(&self, vec: &[BigUint]) -> Vec<BigUint> {
        let dim = self.nodes.len();
        let mut out = vec![BigUint::zero(); dim];
        for (i, row) in self.adjacency.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if a != 0 && !vec[j].is_zero() {
                    out[i] += &vec[j] * BigUint::from(a);
                }
            }
        }
        out
    }
}

/// Walk counts from the one-row partition after `level` steps: the
/// multiplicity of each irreducible in the corresponding tensor power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector {
    pub level: usize,
    pub counts: BTreeMap<IntegerPartition, BigUint>,
}

impl MultiplicityVector {
    pub fn get(&self, partition: &IntegerPartition) -> BigUint {
        self.counts.get(partition).cloned().unwrap_or_default()
    }
}

/// Builds the quiver for the permutation representation of the symmetric
/// group on `n` letters, `n >= 2`.
pub fn build_quiver(n: u64) -> Result<McKayQuiver> {
    if n < 2 {
        return Err(Error::NTooSmall { min: 2, got: n });
    }
    let nodes = enumerate_partitions(n)?;
    let adjacency = nodes
        .iter()
        .map(|a| {
            nodes
                .iter()
                .map(|b| a.remove_add_count(b).expect("same n"))
                .collect()
        })
        .collect();
    Ok(McKayQuiver {
        n,
        nodes,
        adjacency,
    })
}

/// Multiplicities at tensor power `k` by iterated matrix-vector products
/// starting from the indicator of the one-row partition.
pub fn multiplicities_via_power(quiver: &McKayQuiver, k: usize) -> MultiplicityVector {
    let start = quiver
        .node_index(&IntegerPartition::new(vec![quiver.n]).unwrap())
        .expect("one-row node present");
    let mut vec = vec![BigUint::zero(); quiver.nodes.len()];
    vec[start] = BigUint::one();
    for _ in 0..k {
        vec = quiver.apply(&vec);
    }
    let counts = quiver
        .nodes
        .iter()
        .cloned()
        .zip(vec)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    MultiplicityVector { level: k, counts }
}

/// One row of the restriction-induction ladder: either an integer level
/// (partitions of `n`) or a half-integer level (partitions of `n - 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BratteliRow {
    /// Level `k`: multiplicities over partitions of `n`.
    Integer(MultiplicityVector),
    /// Level `k + 1/2`: multiplicities over partitions of `n - 1`.
    Half {
        level: usize,
        counts: BTreeMap<IntegerPartition, BigUint>,
    },
}

/// Runs `levels` full restrict-then-induct steps and returns every row,
/// starting with level 0 and including the half-integer rows.
pub fn bratteli_rows(n: u64, levels: usize) -> Result<Vec<BratteliRow>> {
    if n < 2 {
        return Err(Error::NTooSmall { min: 2, got: n });
    }
    let top = IntegerPartition::new(vec![n]).unwrap();
    let mut current: BTreeMap<IntegerPartition, BigUint> =
        [(top, BigUint::one())].into_iter().collect();
    let mut rows = vec![BratteliRow::Integer(MultiplicityVector {
        level: 0,
        counts: current.clone(),
    })];
    for step in 0..levels {
        let mut half: BTreeMap<IntegerPartition, BigUint> = BTreeMap::new();
        for (lam, count) in &current {
            for mu in lam.restrictions() {
                *half.entry(mu).or_default() += count;
            }
        }
        rows.push(BratteliRow::Half {
            level: step,
            counts: half.clone(),
        });
        let mut next: BTreeMap<IntegerPartition, BigUint> = BTreeMap::new();
        for (mu, count) in &half {
            for nu in mu.inductions() {
                *next.entry(nu).or_default() += count;
            }
        }
        current = next;
        rows.push(BratteliRow::Integer(MultiplicityVector {
            level: step + 1,
            counts: current.clone(),
        }));
    }
    Ok(rows)
}

/// Multiplicities at level `k` computed by alternating restriction and
/// induction branching steps, an independent route from matrix powers.
pub fn multiplicities_via_bratteli(n: u64, k: usize) -> Result<MultiplicityVector> {
    let rows = bratteli_rows(n, k)?;
    match rows.into_iter().last().expect("at least level 0") {
        BratteliRow::Integer(mv) => Ok(mv),
        BratteliRow::Half { .. } => unreachable!("rows end on an integer level"),
    }
}

/// Dimension of the space of equivariant endomorphisms of the k-th tensor
/// power: the sum of squared multiplicities.
pub fn end_dim(n: u64, k: usize) -> Result<BigUint> {
    let quiver = build_quiver(n)?;
    let mv = multiplicities_via_power(&quiver, k);
    Ok(mv.counts.values().map(|c| c * c).sum())
}

/// Dimension of the space of equivariant maps from the k-th to the l-th
/// tensor power: the sum over partitions of the product of multiplicities.
pub fn hom_dim(n: u64, k: usize, l: usize) -> Result<BigUint> {
    let quiver = build_quiver(n)?;
    let mk = multiplicities_via_power(&quiver, k);
    let ml = multiplicities_via_power(&quiver, l);
    Ok(mk.counts.iter().map(|(lam, c)| c * ml.get(lam)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setpart::restricted_bell;

    fn p(parts: &[u64]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn quiver_n2() {
        let q = build_quiver(2).unwrap();
        assert_eq!(q.nodes(), &[p(&[2]), p(&[1, 1])]);
        assert_eq!(q.adjacency(), &[vec![1, 1], vec![1, 1]]);
        assert!(build_quiver(1).is_err());
    }

    #[test]
    fn quiver_is_symmetric() {
        let q = build_quiver(5).unwrap();
        let a = q.adjacency();
        for (i, row) in a.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, a[j][i]);
            }
        }
    }

    #[test]
    fn one_row_node_has_two_edges() {
        for n in 2..=7u64 {
            let q = build_quiver(n).unwrap();
            let row = &q.adjacency()[0];
            let nonzero: Vec<(usize, u64)> = row
                .iter()
                .copied()
                .enumerate()
                .filter(|&(_, v)| v != 0)
                .collect();
            assert_eq!(nonzero, vec![(0, 1), (1, 1)], "n = {n}");
        }
    }

    #[test]
    fn power_multiplicities() {
        let q = build_quiver(6).unwrap();
        let m1 = multiplicities_via_power(&q, 1);
        assert_eq!(m1.get(&p(&[6])), BigUint::one());
        assert_eq!(m1.get(&p(&[5, 1])), BigUint::one());
        assert_eq!(m1.counts.len(), 2);

        let m2 = multiplicities_via_power(&q, 2);
        assert_eq!(m2.get(&p(&[6])), BigUint::from(2u32));

        let m0 = multiplicities_via_power(&q, 0);
        assert_eq!(m0.counts.len(), 1);
        assert_eq!(m0.get(&p(&[6])), BigUint::one());
    }

    #[test]
    fn bratteli_matches_power() {
        for n in 2..=7u64 {
            let q = build_quiver(n).unwrap();
            for k in 0..=6usize {
                assert_eq!(
                    multiplicities_via_bratteli(n, k).unwrap().counts,
                    multiplicities_via_power(&q, k).counts,
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn bratteli_half_level_zero() {
        let rows = bratteli_rows(6, 1).unwrap();
        match &rows[1] {
            BratteliRow::Half { level, counts } => {
                assert_eq!(*level, 0);
                assert_eq!(counts.len(), 1);
                assert_eq!(counts.get(&p(&[5])).unwrap(), &BigUint::one());
            }
            _ => panic!("expected half row"),
        }
    }

    #[test]
    fn dims() {
        assert_eq!(end_dim(6, 2).unwrap(), BigUint::from(15u32));
        assert_eq!(end_dim(2, 2).unwrap(), BigUint::from(8u32));
        assert_eq!(end_dim(3, 0).unwrap(), BigUint::one());
        assert_eq!(hom_dim(2, 2, 1).unwrap(), BigUint::from(4u32));
        assert_eq!(hom_dim(2, 3, 0).unwrap(), BigUint::from(4u32));
        assert_eq!(hom_dim(3, 0, 0).unwrap(), BigUint::one());
    }

    #[test]
    fn bridge_identity() {
        for n in 2..=6u64 {
            for k in 0..=4usize {
                assert_eq!(end_dim(n, k).unwrap(), restricted_bell(2 * k, n));
            }
        }
    }

    #[test]
    fn conservation_of_dimension() {
        for n in 2..=6u64 {
            let q = build_quiver(n).unwrap();
            for k in 0..=5usize {
                let total: BigUint = multiplicities_via_power(&q, k)
                    .counts
                    .iter()
                    .map(|(lam, c)| c * lam.specht_dimension().unwrap())
                    .sum();
                assert_eq!(total, BigUint::from(n).pow(k as u32), "n={n} k={k}");
            }
        }
    }
}
