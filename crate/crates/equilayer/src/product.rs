//! Layers equivariant to products of symmetric groups: per-factor diagram
//! tuples, sparse Kronecker assembly of their basis matrices, dimension
//! counting, and the embedding into the single large symmetric group
//! obtained by forgetting the factor demarcations.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::equimap::{basis_matrix, permutation_tensor_matrix, Counterexample, IntMatrix};
use crate::error::{Error, Result};
use crate::setpart::{enumerate_set_partitions, restricted_bell, SetPartition, ShapeSplit};

/// One factor of a product group layer: maps from the `k`-th to the `l`-th
/// tensor power of the permutation representation of `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub n: u64,
    pub k: usize,
    pub l: usize,
}

/// An ordered list of factors. The order is significant: the leftmost
/// factor is most significant in every flat index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerSpec {
    pub factors: Vec<Factor>,
}

impl LayerSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::SpecParse("at least one factor required".into()));
        }
        for f in &factors {
            if f.n < 1 {
                return Err(Error::SpecParse(format!(
                    "factor n must be >= 1, got {}",
                    f.n
                )));
            }
        }
        Ok(Self { factors })
    }

    /// Parses the compact form `"n:k->l"` joined by commas, e.g.
    /// `"2:2->1,4:1->1"`. A feature factor is written `"f d:p->q"` and
    /// desugars to an ordinary factor with `n = d, k = p, l = q`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for raw in s.split(',') {
            let part = raw.trim();
            let part = part.strip_prefix("f ").unwrap_or(part).trim();
            let (n_str, rest) = part
                .split_once(':')
                .ok_or_else(|| Error::SpecParse(format!("missing ':' in factor '{part}'")))?;
            let (k_str, l_str) = rest
                .split_once("->")
                .ok_or_else(|| Error::SpecParse(format!("missing '->' in factor '{part}'")))?;
            let parse_num = |t: &str| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::SpecParse(format!("bad number '{t}' in '{part}'")))
            };
            factors.push(Factor {
                n: parse_num(n_str)?,
                k: parse_num(k_str)? as usize,
                l: parse_num(l_str)? as usize,
            });
        }
        Self::new(factors)
    }

    /// Total row count `prod n_r^{l_r}` of the layer's weight matrix.
    pub fn rows(&self) -> u128 {
        self.factors
            .iter()
            .map(|f| (f.n as u128).pow(f.l as u32))
            .product()
    }

    /// Total column count `prod n_r^{k_r}`.
    pub fn cols(&self) -> u128 {
        self.factors
            .iter()
            .map(|f| (f.n as u128).pow(f.k as u32))
            .product()
    }
}

/// The number of free parameters of the layer: the product over factors of
/// the restricted Bell numbers.
pub fn product_dim(spec: &LayerSpec) -> BigUint {
    spec.factors
        .iter()
        .map(|f| restricted_bell(f.l + f.k, f.n))
        .fold(BigUint::one(), |acc, b| acc * b)
}

/// One side-by-side arrangement of per-factor set partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramTuple {
    pub components: Vec<SetPartition>,
}

/// All diagram tuples for the spec: the Cartesian product of each factor's
/// canonical partition list, rightmost factor varying fastest.
pub fn enumerate_diagram_tuples(spec: &LayerSpec) -> Vec<DiagramTuple> {
    spec.factors
        .iter()
        .map(|f| enumerate_set_partitions(f.l + f.k, Some(f.n as usize)))
        .multi_cartesian_product()
        .map(|components| DiagramTuple { components })
        .collect()
}

/// A product-group basis matrix: the sparse Kronecker product of the
/// per-factor standard-basis matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductBasisMatrix {
    pub rows: usize,
    pub cols: usize,
    pub components: Vec<SetPartition>,
    pub entries: Vec<(usize, usize)>,
}

impl ProductBasisMatrix {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": [self.rows, self.cols],
            "components": self.components.iter().map(|p| p.blocks().to_vec()).collect::<Vec<_>>(),
            "entries": self.entries,
        })
    }
}

/// Assembles the Kronecker product of the per-factor basis matrices over
/// sparse entry lists; the leftmost factor is most significant.
pub fn product_basis_matrix(t: &DiagramTuple, spec: &LayerSpec) -> Result<ProductBasisMatrix> {
    if t.components.len() != spec.factors.len() {
        return Err(Error::ShapeMismatch {
            expected: format!("{} components", spec.factors.len()),
            got: format!("{}", t.components.len()),
        });
    }
    let mut per_factor = Vec::new();
    for (p, f) in t.components.iter().zip(&spec.factors) {
        per_factor.push(basis_matrix(p, f.n, ShapeSplit::new(f.l, f.k))?);
    }
    let rows = spec.rows() as usize;
    let cols = spec.cols() as usize;
    let mut entries: Vec<(usize, usize)> = per_factor
        .iter()
        .map(|b| b.entries.iter().copied())
        .multi_cartesian_product()
        .map(|cells| {
            let mut row = 0usize;
            let mut col = 0usize;
            for (b, &(r, c)) in per_factor.iter().zip(&cells) {
                row = row * b.rows + r;
                col = col * b.cols + c;
            }
            (row, col)
        })
        .collect();
    entries.sort_unstable();
    Ok(ProductBasisMatrix {
        rows,
        cols,
        components: t.components.clone(),
        entries,
    })
}

/// Forgets the factor demarcations: relabels each component into one set
/// partition over the concatenated ground set, all top rows first, then all
/// bottom rows, preserving factor order within each row.
pub fn demarcation_embed(t: &DiagramTuple, spec: &LayerSpec) -> Result<(SetPartition, ShapeSplit)> {
    if t.components.len() != spec.factors.len() {
        return Err(Error::ShapeMismatch {
            expected: format!("{} components", spec.factors.len()),
            got: format!("{}", t.components.len()),
        });
    }
    let total_l: usize = spec.factors.iter().map(|f| f.l).sum();
    let mut blocks = Vec::new();
    let mut top_offset = 0usize;
    let mut bottom_offset = 0usize;
    for (p, f) in t.components.iter().zip(&spec.factors) {
        if p.ground_set_size() != f.l + f.k {
            return Err(Error::ShapeMismatch {
                expected: format!("partition of [{}]", f.l + f.k),
                got: format!("partition of [{}]", p.ground_set_size()),
            });
        }
        let (t_off, b_off, l) = (top_offset, bottom_offset, f.l);
        blocks.extend(p.relabelled(|e| {
            if e <= l {
                t_off + e
            } else {
                total_l + b_off + (e - l)
            }
        }));
        top_offset += f.l;
        bottom_offset += f.k;
    }
    let partition = SetPartition::new(blocks)?;
    let split = ShapeSplit::new(total_l, spec.factors.iter().map(|f| f.k).sum());
    Ok((partition, split))
}

/// Verifies product-group equivariance of a sparse matrix exactly: for the
/// per-factor generator sets and `trials` tuples of independently sampled
/// permutations, the Kronecker row action must match the column action.
pub fn verify_product_equivariance(
    m: &IntMatrix,
    spec: &LayerSpec,
    trials: usize,
    seed: u64,
) -> Result<Option<Counterexample>> {
    let rows = spec.rows() as usize;
    let cols = spec.cols() as usize;
    if m.rows != rows || m.cols != cols {
        return Err(Error::ShapeMismatch {
            expected: format!("{rows}x{cols}"),
            got: format!("{}x{}", m.rows, m.cols),
        });
    }
    // generator tuples: one factor uses a generator while the others stay
    // at the identity, which generates the whole product group
    let mut tuples: Vec<Vec<Vec<u64>>> = Vec::new();
    for (idx, f) in spec.factors.iter().enumerate() {
        for g in crate::equimap::generators(f.n) {
            let mut tuple: Vec<Vec<u64>> =
                spec.factors.iter().map(|f| (1..=f.n).collect()).collect();
            tuple[idx] = g;
            tuples.push(tuple);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let tuple = spec
            .factors
            .iter()
            .map(|f| {
                let mut s: Vec<u64> = (1..=f.n).collect();
                s.shuffle(&mut rng);
                s
            })
            .collect();
        tuples.push(tuple);
    }
    for tuple in tuples {
        let pl = kron_permutation(&tuple, spec, true)?;
        let pk = kron_permutation(&tuple, spec, false)?;
        let permuted: std::collections::BTreeMap<(usize, usize), num_bigint::BigInt> = m
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
                sigma: tuple.concat(),
                row: bad.0,
                col: bad.1,
            }));
        }
    }
    Ok(None)
}

/// The flat index permutation of the Kronecker action of a permutation
/// tuple on the row (`top = true`) or column side.
fn kron_permutation(tuple: &[Vec<u64>], spec: &LayerSpec, top: bool) -> Result<Vec<usize>> {
    let mut perms = Vec::new();
    let mut sizes = Vec::new();
    for (sigma, f) in tuple.iter().zip(&spec.factors) {
        let power = if top { f.l } else { f.k };
        perms.push(permutation_tensor_matrix(sigma, f.n, power)?);
        sizes.push((f.n as usize).pow(power as u32));
    }
    let total: usize = sizes.iter().product();
    let mut out = vec![0usize; total];
    for (flat, slot) in out.iter_mut().enumerate() {
        // peel factor sub-indices from least to most significant
        let mut rest = flat;
        let mut subs = vec![0usize; sizes.len()];
        for i in (0..sizes.len()).rev() {
            subs[i] = rest % sizes[i];
            rest /= sizes[i];
        }
        let mut image = 0usize;
        for (i, &s) in subs.iter().enumerate() {
            image = image * sizes[i] + perms[i][s];
        }
        *slot = image;
    }
    Ok(out)
}
