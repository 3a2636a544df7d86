//! Standard-basis matrices of equivariant linear maps: orbits of the index
//! action, the surjection from the partition algebra onto the equivariant
//! endomorphisms, bias and feature bases, an exact equivariance verifier,
//! and a brute-force orbit oracle that shares no code with the main path.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{transition_to_orbit, AlgebraElement, BasisKind};
use crate::error::{Error, Result};
use crate::setpart::{enumerate_set_partitions, SetPartition, ShapeSplit};

/// Default limit on dense materializations and full index-grid scans.
pub const DEFAULT_CAP: u128 = 10_000_000;

/// The 0/1 standard-basis matrix attached to one set partition: support is
/// one orbit of the coordinatewise index action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisMatrix {
    pub n: u64,
    pub k: usize,
    pub l: usize,
    pub rows: usize,
    pub cols: usize,
    pub source_partition: SetPartition,
    /// Sorted distinct `(row, col)` positions carrying an implicit 1.
    pub entries: Vec<(usize, usize)>,
}

impl BasisMatrix {
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "blocks": self.source_partition.blocks(),
            "shape": [self.rows, self.cols],
            "entries": self.entries,
        })
    }
}

/// The kernel partition of an index tuple: positions share a block exactly
/// when they carry equal values.
pub fn kernel_partition(t: &[u64]) -> SetPartition {
    let mut groups: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, &v) in t.iter().enumerate() {
        groups.entry(v).or_default().push(i + 1);
    }
    SetPartition::new(groups.into_values().collect()).expect("groups partition 1..=m")
}

/// Row-major flat index of a multi-index over `[n]`: leftmost coordinate
/// most significant, 1-based coordinates, 0-based result. The empty tuple
/// encodes to 0.
pub fn encode_index(t: &[u64], n: u64) -> Result<usize> {
    let mut flat: usize = 0;
    for &v in t {
        if v == 0 || v > n {
            return Err(Error::IndexOutOfRange { value: v, n });
        }
        flat = flat * n as usize + (v as usize - 1);
    }
    Ok(flat)
}

/// Inverse of [`encode_index`] for tuples of length `m`.
pub fn decode_index(mut flat: usize, n: u64, m: usize) -> Vec<u64> {
    let mut t = vec![0u64; m];
    for i in (0..m).rev() {
        t[i] = (flat % n as usize) as u64 + 1;
        flat /= n as usize;
    }
    t
}

fn pow_u128(n: u64, e: usize) -> u128 {
    (n as u128).pow(e as u32)
}

/// The standard-basis matrix of `partition` read with the given split: one
/// entry per injective assignment of block labels into `[n]`, never by
/// scanning the full index grid.
pub fn basis_matrix(partition: &SetPartition, n: u64, split: ShapeSplit) -> Result<BasisMatrix> {
    if split.total() != partition.ground_set_size() {
        return Err(Error::ShapeMismatch {
            expected: format!("split totalling {}", partition.ground_set_size()),
            got: format!("{}+{}", split.l, split.k),
        });
    }
    let t = partition.num_blocks();
    if t as u64 > n {
        return Err(Error::TooManyBlocks { blocks: t, n });
    }
    let rgs = partition.to_rgs();
    let mut entries = Vec::new();
    for assignment in (1..=n).permutations(t) {
        let tuple: Vec<u64> = rgs.iter().map(|&b| assignment[b]).collect();
        let row = encode_index(&tuple[..split.l], n)?;
        let col = encode_index(&tuple[split.l..], n)?;
        entries.push((row, col));
    }
    entries.sort_unstable();
    entries.dedup();
    Ok(BasisMatrix {
        n,
        k: split.k,
        l: split.l,
        rows: pow_u128(n, split.l) as usize,
        cols: pow_u128(n, split.k) as usize,
        source_partition: partition.clone(),
        entries,
    })
}

/// The full ordered basis of equivariant maps from the k-th to the l-th
/// tensor power: one matrix per set partition of `[l + k]` with at most `n`
/// blocks, in canonical enumeration order.
pub fn full_basis(n: u64, k: usize, l: usize) -> Result<Vec<BasisMatrix>> {
    full_basis_with_cap(n, k, l, DEFAULT_CAP)
}

/// As [`full_basis`] with an explicit entry cap; the total entry count is
/// `n^(l+k)`, the size of the index grid the supports tile.
pub fn full_basis_with_cap(n: u64, k: usize, l: usize, cap: u128) -> Result<Vec<BasisMatrix>> {
    if n < 1 {
        return Err(Error::NTooSmall { min: 1, got: n });
    }
    let required = pow_u128(n, l + k);
    if required > cap {
        return Err(Error::CapExceeded { required, cap });
    }
    enumerate_set_partitions(l + k, Some(n as usize))
        .iter()
        .map(|p| basis_matrix(p, n, ShapeSplit::new(l, k)))
        .collect()
}

/// Equivariant bias vectors: column vectors constant on each index orbit.
pub fn bias_basis(n: u64, l: usize) -> Result<Vec<BasisMatrix>> {
    full_basis(n, 0, l)
}

/// A sparse matrix with exact integer entries, the common currency of the
/// verifier and of images under the algebra surjection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, row: usize, col: usize, value: BigInt) {
        let e = self.entries.entry((row, col)).or_insert_with(BigInt::zero);
        *e += value;
        if self.entries[&(row, col)].is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn matmul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                expected: format!("{} rows", self.cols),
                got: format!("{} rows", other.rows),
            });
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        // index other's rows once so the product stays sparse-sparse
        let mut by_row: BTreeMap<usize, Vec<(usize, &BigInt)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        for (&(r, c), v) in &self.entries {
            if let Some(row) = by_row.get(&c) {
                for &(c2, v2) in row {
                    out.add(r, c2, v * v2);
                }
            }
        }
        Ok(out)
    }
}

impl From<&BasisMatrix> for IntMatrix {
    fn from(b: &BasisMatrix) -> Self {
        let mut m = IntMatrix::zero(b.rows, b.cols);
        for &(r, c) in &b.entries {
            m.add(r, c, BigInt::from(1));
        }
        m
    }
}

/// Image of a square diagram-basis algebra element under the surjection
/// onto equivariant endomorphisms: rewrite in the orbit basis, drop terms
/// with more than `n` blocks, and sum the weighted basis matrices.
pub fn phi_on_diagram(a: &AlgebraElement, n: u64) -> Result<IntMatrix> {
    if a.basis_kind() != BasisKind::Diagram {
        return Err(Error::WrongBasis("diagram"));
    }
    let k = a.k();
    let required = pow_u128(n, 2 * k);
    if required > DEFAULT_CAP {
        return Err(Error::CapExceeded {
            required,
            cap: DEFAULT_CAP,
        });
    }
    let orbit = transition_to_orbit(a)?;
    let dim = pow_u128(n, k) as usize;
    let mut out = IntMatrix::zero(dim, dim);
    for (p, c) in orbit.terms() {
        if p.num_blocks() as u64 > n {
            continue;
        }
        let b = basis_matrix(p, n, ShapeSplit::new(k, k))?;
        for &(r, col) in &b.entries {
            out.add(r, col, c.clone());
        }
    }
    Ok(out)
}

/// A lazily indexed basis for layers with feature dimensions: each element
/// is a basis matrix placed at one feature block, with the feature index
/// least significant in the flat index.
#[derive(Debug, Clone)]
pub struct FeatureBasis {
    pub n: u64,
    pub k: usize,
    pub l: usize,
    pub d_k: usize,
    pub d_l: usize,
    partitions: Vec<SetPartition>,
}

impl FeatureBasis {
    pub fn new(n: u64, k: usize, l: usize, d_k: usize, d_l: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::NTooSmall { min: 1, got: n });
        }
        if d_k < 1 || d_l < 1 {
            return Err(Error::ShapeMismatch {
                expected: "feature dimensions >= 1".into(),
                got: format!("{d_k}, {d_l}"),
            });
        }
        Ok(Self {
            n,
            k,
            l,
            d_k,
            d_l,
            partitions: enumerate_set_partitions(l + k, Some(n as usize)),
        })
    }

    pub fn len(&self) -> usize {
        self.partitions.len() * self.d_k * self.d_l
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn partitions(&self) -> &[SetPartition] {
        &self.partitions
    }

    /// The element for partition index `pi_idx` at output feature `i` and
    /// input feature `j` (both 1-based).
    pub fn matrix(&self, pi_idx: usize, i: usize, j: usize) -> Result<BasisMatrix> {
        if pi_idx >= self.partitions.len() || i < 1 || i > self.d_l || j < 1 || j > self.d_k {
            return Err(Error::ShapeMismatch {
                expected: format!(
                    "pi < {}, i in 1..={}, j in 1..={}",
                    self.partitions.len(),
                    self.d_l,
                    self.d_k
                ),
                got: format!("({pi_idx}, {i}, {j})"),
            });
        }
        let base = basis_matrix(
            &self.partitions[pi_idx],
            self.n,
            ShapeSplit::new(self.l, self.k),
        )?;
        let entries = base
            .entries
            .iter()
            .map(|&(r, c)| (r * self.d_l + (i - 1), c * self.d_k + (j - 1)))
            .collect();
        Ok(BasisMatrix {
            n: self.n,
            k: self.k,
            l: self.l,
            rows: base.rows * self.d_l,
            cols: base.cols * self.d_k,
            source_partition: base.source_partition,
            entries,
        })
    }

    /// The element at a flat family index, ordered partition-major, then
    /// output feature, then input feature.
    pub fn get(&self, index: usize) -> Result<BasisMatrix> {
        let j = index % self.d_k;
        let rest = index / self.d_k;
        let i = rest % self.d_l;
        let pi_idx = rest / self.d_l;
        self.matrix(pi_idx, i + 1, j + 1)
    }
}

/// Checks that `sigma` is a bijection of `[n]` written as `sigma[i-1]` =
/// image of `i`.
fn check_permutation(sigma: &[u64], n: u64) -> Result<()> {
    if sigma.len() != n as usize {
        return Err(Error::NotBijective);
    }
    let mut seen = vec![false; n as usize];
    for &v in sigma {
        if v == 0 || v > n || seen[v as usize - 1] {
            return Err(Error::NotBijective);
        }
        seen[v as usize - 1] = true;
    }
    Ok(())
}

/// The permutation of flat indices induced by applying `sigma`
/// coordinatewise to `[n]^k`: `result[flat(I)] = flat(sigma(I))`.
pub fn permutation_tensor_matrix(sigma: &[u64], n: u64, k: usize) -> Result<Vec<usize>> {
    check_permutation(sigma, n)?;
    let size = pow_u128(n, k) as usize;
    let mut out = vec![0usize; size];
    for (flat, slot) in out.iter_mut().enumerate() {
        let t = decode_index(flat, n, k);
        let image: Vec<u64> = t.iter().map(|&v| sigma[v as usize - 1]).collect();
        *slot = encode_index(&image, n)?;
    }
    Ok(out)
}

/// A witness that a matrix is not equivariant: a permutation and a cell
/// where the permuted matrix disagrees with the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub sigma: Vec<u64>,
    pub row: usize,
    pub col: usize,
}

/// The generator set used throughout: adjacent transpositions and the full
/// cycle. For `n = 1` the group is trivial and the set is empty.
pub fn generators(n: u64) -> Vec<Vec<u64>> {
    let mut gens = Vec::new();
    if n < 2 {
        return gens;
    }
    for i in 1..n {
        let mut t: Vec<u64> = (1..=n).collect();
        t.swap(i as usize - 1, i as usize);
        gens.push(t);
    }
    let cycle: Vec<u64> = (1..=n).map(|i| i % n + 1).collect();
    gens.push(cycle);
    gens
}

/// Verifies `rho_l(sigma) * M == M * rho_k(sigma)` exactly for the fixed
/// generators plus `trials` seeded pseudo-random permutations. Returns
/// `None` on success, otherwise the first counterexample found.
pub fn verify_equivariance(
    m: &IntMatrix,
    n: u64,
    k: usize,
    l: usize,
    trials: usize,
    seed: u64,
) -> Result<Option<Counterexample>> {
    let rows = pow_u128(n, l) as usize;
    let cols = pow_u128(n, k) as usize;
    if m.rows != rows || m.cols != cols {
        return Err(Error::ShapeMismatch {
            expected: format!("{rows}x{cols}"),
            got: format!("{}x{}", m.rows, m.cols),
        });
    }
    let mut sigmas = generators(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut s: Vec<u64> = (1..=n).collect();
        s.shuffle(&mut rng);
        sigmas.push(s);
    }
    for sigma in sigmas {
        let pl = permutation_tensor_matrix(&sigma, n, l)?;
        let pk = permutation_tensor_matrix(&sigma, n, k)?;
        // equivariance is exactly invariance of the entry map under the
        // simultaneous row/column permutation
        let permuted: BTreeMap<(usize, usize), BigInt> = m
            .entries
            .iter()
            .map(|(&(r, c), v)| ((pl[r], pk[c]), v.clone()))
            .collect();
        if permuted != m.entries {
            let bad = m
                .entries
                .keys()
                .chain(permuted.keys())
                .find(|key| m.entries.get(*key) != permuted.get(*key))
                .copied()
                .expect("maps differ at some key");
            return Ok(Some(Counterexample {
                sigma,
                row: bad.0,
                col: bad.1,
            }));
        }
    }
    Ok(None)
}

/// Verifies a whole family of disjoint-support 0/1 matrices at once: the
/// permutation actions are computed once per permutation and shared across
/// the family, so the cost is one grid scan per permutation. Equivalent to
/// running [`verify_equivariance`] on every matrix with the same seed
/// policy (generators plus `trials` seeded permutations). On failure
/// returns the index of the first offending matrix and its counterexample.
pub fn verify_basis_equivariance(
    basis: &[BasisMatrix],
    n: u64,
    k: usize,
    l: usize,
    trials: usize,
    seed: u64,
) -> Result<Option<(usize, Counterexample)>> {
    let rows = pow_u128(n, l) as usize;
    let cols = pow_u128(n, k) as usize;
    // cell -> 1-based matrix id; 0 marks cells outside every support
    let mut grid = vec![0u32; rows * cols];
    for (i, b) in basis.iter().enumerate() {
        if b.rows != rows || b.cols != cols {
            return Err(Error::ShapeMismatch {
                expected: format!("{rows}x{cols}"),
                got: format!("{}x{}", b.rows, b.cols),
            });
        }
        for &(r, c) in &b.entries {
            grid[r * cols + c] = i as u32 + 1;
        }
    }
    let mut sigmas = generators(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut s: Vec<u64> = (1..=n).collect();
        s.shuffle(&mut rng);
        sigmas.push(s);
    }
    for sigma in sigmas {
        let pl = permutation_tensor_matrix(&sigma, n, l)?;
        let pk = permutation_tensor_matrix(&sigma, n, k)?;
        for r in 0..rows {
            for c in 0..cols {
                let here = grid[r * cols + c];
                let there = grid[pl[r] * cols + pk[c]];
                if here != there {
                    let idx = (here.max(there) - 1) as usize;
                    return Ok(Some((
                        idx,
                        Counterexample {
                            sigma,
                            row: r,
                            col: c,
                        },
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Brute-force orbit computation over the full index grid: union-find on
/// all `n^(l+k)` cells under the generator action, sharing nothing with the
/// set-partition path. Intended for desk-scale cross-checks only.
pub fn oracle_basis(n: u64, k: usize, l: usize) -> Result<Vec<BasisMatrix>> {
    oracle_basis_with_cap(n, k, l, DEFAULT_CAP)
}

/// As [`oracle_basis`] with an explicit cap on the grid size.
pub fn oracle_basis_with_cap(n: u64, k: usize, l: usize, cap: u128) -> Result<Vec<BasisMatrix>> {
    if n < 1 {
        return Err(Error::NTooSmall { min: 1, got: n });
    }
    let required = pow_u128(n, l + k);
    if required > cap {
        return Err(Error::CapExceeded { required, cap });
    }
    let rows = pow_u128(n, l) as usize;
    let cols = pow_u128(n, k) as usize;
    let total = rows * cols;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for sigma in generators(n) {
        let pl = permutation_tensor_matrix(&sigma, n, l)?;
        let pk = permutation_tensor_matrix(&sigma, n, k)?;
        for (r, &plr) in pl.iter().enumerate() {
            for (c, &pkc) in pk.iter().enumerate() {
                let a = find(&mut parent, r * cols + c);
                let b = find(&mut parent, plr * cols + pkc);
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut orbits: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for cell in 0..total {
        let root = find(&mut parent, cell);
        orbits
            .entry(root)
            .or_default()
            .push((cell / cols, cell % cols));
    }
    let mut out: Vec<BasisMatrix> = orbits
        .into_values()
        .map(|mut entries| {
            entries.sort_unstable();
            let (r0, c0) = entries[0];
            let mut tuple = decode_index(r0, n, l);
            tuple.extend(decode_index(c0, n, k));
            BasisMatrix {
                n,
                k,
                l,
                rows,
                cols,
                source_partition: kernel_partition(&tuple),
                entries,
            }
        })
        .collect();
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    Ok(out)
}
