//! The partition vector spaces and the partition algebra: diagram
//! composition with its power-of-n coefficient, and the triangular change
//! of basis between the diagram and orbit bases.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setpart::{enumerate_set_partitions, SetPartition, ShapeSplit};

/// Largest ground-set size for which basis transitions are computed; the
/// zeta matrix has Bell(m) squared entries.
pub const TRANSITION_CAP: usize = 10;

/// Which basis an element's coefficients refer to. The underlying data is
/// a set partition either way; only the semantics differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Diagram,
    Orbit,
}

/// A single two-row diagram: a set partition of `[l + k]` read with `l` top
/// and `k` bottom vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub partition: SetPartition,
    pub split: ShapeSplit,
    pub basis_kind: BasisKind,
}

impl Diagram {
    pub fn new(partition: SetPartition, split: ShapeSplit, basis_kind: BasisKind) -> Result<Self> {
        if split.total() != partition.ground_set_size() {
            return Err(Error::ShapeMismatch {
                expected: format!("split totalling {}", partition.ground_set_size()),
                got: format!("{}+{}", split.l, split.k),
            });
        }
        Ok(Self {
            partition,
            split,
            basis_kind,
        })
    }

    /// The identity diagram of the square algebra: `{1, k+1 | 2, k+2 | ...}`.
    pub fn identity(k: usize) -> Self {
        let blocks = (1..=k).map(|i| vec![i, k + i]).collect();
        Self {
            partition: SetPartition::new(blocks).unwrap_or_else(|_| SetPartition::empty()),
            split: ShapeSplit::new(k, k),
            basis_kind: BasisKind::Diagram,
        }
    }
}

/// An element of the square partition algebra on `2k` vertices: an exact
/// integer combination of set partitions in one fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    k: usize,
    basis_kind: BasisKind,
    terms: BTreeMap<SetPartition, BigInt>,
}

impl AlgebraElement {
    pub fn zero(k: usize, basis_kind: BasisKind) -> Self {
        Self {
            k,
            basis_kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: &Diagram) -> Result<Self> {
        if d.split.l != d.split.k {
            return Err(Error::ShapeMismatch {
                expected: "square diagram".into(),
                got: format!("{}+{}", d.split.l, d.split.k),
            });
        }
        let mut terms = BTreeMap::new();
        terms.insert(d.partition.clone(), BigInt::one());
        Ok(Self {
            k: d.split.k,
            basis_kind: d.basis_kind,
            terms,
        })
    }

    pub fn identity(k: usize) -> Self {
        Self::from_diagram(&Diagram::identity(k)).expect("identity is square")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn basis_kind(&self) -> BasisKind {
        self.basis_kind
    }

    pub fn terms(&self) -> &BTreeMap<SetPartition, BigInt> {
        &self.terms
    }

    pub fn add_term(&mut self, partition: SetPartition, coeff: BigInt) {
        let entry = self.terms.entry(partition).or_insert_with(BigInt::zero);
        *entry += coeff;
        // prune exact zeros so equality is structural
        self.terms.retain(|_, c| !c.is_zero());
    }

    /// JSON form with decimal-string coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(p, c)| {
                serde_json::json!({
                    "blocks": p.blocks(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "k": self.k,
            "basis": match self.basis_kind {
                BasisKind::Diagram => "diagram",
                BasisKind::Orbit => "orbit",
            },
            "terms": terms,
        })
    }
}

/// Stacks `d1` over `d2`, merging blocks through the shared middle row.
/// Returns the count `c` of removed purely-middle components, the exact
/// coefficient `n^c`, and the composed diagram.
pub fn compose(d1: &Diagram, d2: &Diagram, n: u64) -> Result<(u32, BigUint, Diagram)> {
    if d1.basis_kind != BasisKind::Diagram || d2.basis_kind != BasisKind::Diagram {
        return Err(Error::WrongBasis("diagram"));
    }
    if d1.split.l != d1.split.k || d2.split.l != d2.split.k || d1.split.k != d2.split.k {
        return Err(Error::ShapeMismatch {
            expected: "matching square diagrams".into(),
            got: format!(
                "{}+{} with {}+{}",
                d1.split.l, d1.split.k, d2.split.l, d2.split.k
            ),
        });
    }
    if n < 1 {
        return Err(Error::NTooSmall { min: 1, got: n });
    }
    let k = d1.split.k;
    // vertices 0..k: top, k..2k: middle (d1 bottom = d2 top), 2k..3k: bottom
    let mut uf = UnionFind::new(3 * k);
    for block in d1.partition.blocks() {
        for w in block.windows(2) {
            uf.union(w[0] - 1, w[1] - 1);
        }
    }
    for block in d2.partition.blocks() {
        // d2's vertex v maps to k + (v - 1): its top row coincides with the
        // middle row, its bottom row shifts past it
        for w in block.windows(2) {
            uf.union(k + w[0] - 1, k + w[1] - 1);
        }
    }
    let mut middle_only = std::collections::BTreeMap::new();
    for v in 0..3 * k {
        let root = uf.find(v);
        let e = middle_only.entry(root).or_insert(true);
        if v < k || v >= 2 * k {
            *e = false;
        }
    }
    let c = middle_only.values().filter(|&&only| only).count() as u32;

    // surviving components restricted to top and bottom rows
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in (0..k).chain(2 * k..3 * k) {
        let outer = if v < k { v + 1 } else { v - k + 1 };
        groups.entry(uf.find(v)).or_default().push(outer);
    }
    let partition = SetPartition::new(groups.into_values().collect())?;
    let result = Diagram {
        partition,
        split: ShapeSplit::new(k, k),
        basis_kind: BasisKind::Diagram,
    };
    Ok((c, BigUint::from(n).pow(c), result))
}

/// Bilinear extension of [`compose`] over diagram-basis elements.
pub fn algebra_product(a1: &AlgebraElement, a2: &AlgebraElement, n: u64) -> Result<AlgebraElement> {
    if a1.basis_kind != BasisKind::Diagram || a2.basis_kind != BasisKind::Diagram {
        return Err(Error::WrongBasis("diagram"));
    }
    if a1.k != a2.k {
        return Err(Error::ShapeMismatch {
            expected: format!("k = {}", a1.k),
            got: format!("k = {}", a2.k),
        });
    }
    let mut out = AlgebraElement::zero(a1.k, BasisKind::Diagram);
    for (p1, c1) in &a1.terms {
        let d1 = Diagram::new(p1.clone(), ShapeSplit::new(a1.k, a1.k), BasisKind::Diagram)?;
        for (p2, c2) in &a2.terms {
            let d2 = Diagram::new(p2.clone(), ShapeSplit::new(a2.k, a2.k), BasisKind::Diagram)?;
            let (_, coeff, composed) = compose(&d1, &d2, n)?;
            out.add_term(composed.partition, c1 * c2 * BigInt::from(coeff));
        }
    }
    Ok(out)
}

/// Expands one diagram-basis element over the orbit basis: the sum of all
/// orbit elements at or above it in the refinement order.
fn diagram_in_orbit_basis(p: &SetPartition) -> Vec<SetPartition> {
    enumerate_set_partitions(p.ground_set_size(), None)
        .into_iter()
        .filter(|theta| p.refines(theta).expect("same ground set"))
        .collect()
}

/// Rewrites a diagram-basis element in the orbit basis.
pub fn transition_to_orbit(a: &AlgebraElement) -> Result<AlgebraElement> {
    if a.basis_kind != BasisKind::Diagram {
        return Err(Error::WrongBasis("diagram"));
    }
    check_transition_cap(a.k)?;
    let mut out = AlgebraElement::zero(a.k, BasisKind::Orbit);
    for (p, c) in &a.terms {
        for theta in diagram_in_orbit_basis(p) {
            out.add_term(theta, c.clone());
        }
    }
    Ok(out)
}

/// Rewrites an orbit-basis element in the diagram basis by unitriangular
/// back-substitution: process partitions from coarsest to finest, peeling
/// the known coarser corrections off each diagram expansion.
pub fn transition_to_diagram(a: &AlgebraElement) -> Result<AlgebraElement> {
    if a.basis_kind != BasisKind::Orbit {
        return Err(Error::WrongBasis("orbit"));
    }
    check_transition_cap(a.k)?;
    let m = 2 * a.k;
    // orbit element for pi in the diagram basis, computed coarsest-first so
    // every strictly coarser expansion is available when needed
    let mut all = enumerate_set_partitions(m, None);
    all.sort_by_key(|p| p.num_blocks());
    let mut orbit_as_diagram: BTreeMap<SetPartition, BTreeMap<SetPartition, BigInt>> =
        BTreeMap::new();
    for p in &all {
        // x_p = d_p - sum over strictly coarser theta of x_theta
        let mut expansion: BTreeMap<SetPartition, BigInt> =
            [(p.clone(), BigInt::one())].into_iter().collect();
        for theta in diagram_in_orbit_basis(p) {
            if &theta == p {
                continue;
            }
            for (d, c) in &orbit_as_diagram[&theta] {
                let entry = expansion.entry(d.clone()).or_insert_with(BigInt::zero);
                *entry -= c;
            }
        }
        expansion.retain(|_, c| !c.is_zero());
        orbit_as_diagram.insert(p.clone(), expansion);
    }
    let mut out = AlgebraElement::zero(a.k, BasisKind::Diagram);
    for (p, c) in &a.terms {
        for (d, dc) in &orbit_as_diagram[p] {
            out.add_term(d.clone(), c * dc);
        }
    }
    Ok(out)
}

fn check_transition_cap(k: usize) -> Result<()> {
    let m = 2 * k;
    if m > TRANSITION_CAP {
        return Err(Error::TransitionCap {
            m,
            cap: TRANSITION_CAP,
        });
    }
    Ok(())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
