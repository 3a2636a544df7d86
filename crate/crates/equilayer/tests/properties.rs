//! Randomized invariants: serialization round trips and pattern
//! canonicalization, driven by proptest.

use proptest::prelude::*;

use equilayer::equimap::{basis_matrix, BasisMatrix};
use equilayer::pattern::PatternMatrix;
use equilayer::setpart::{SetPartition, ShapeSplit};

/// A random restricted growth string of length `m`.
fn rgs_strategy(m: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..m, m).prop_map(|raw| {
        let mut rgs = vec![0usize; raw.len()];
        let mut used = 0usize;
        for (i, &r) in raw.iter().enumerate() {
            rgs[i] = r % (used + 1);
            used = used.max(rgs[i] + 1);
        }
        rgs
    })
}

proptest! {
    #[test]
    fn set_partition_json_round_trip(rgs in rgs_strategy(7)) {
        let p = SetPartition::from_rgs(&rgs);
        let json = serde_json::to_string(&p).unwrap();
        let back: SetPartition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rgs_round_trip(rgs in rgs_strategy(8)) {
        let p = SetPartition::from_rgs(&rgs);
        prop_assert_eq!(p.to_rgs(), rgs);
    }

    #[test]
    fn basis_matrix_json_round_trip(rgs in rgs_strategy(4), l in 0..=4usize) {
        let p = SetPartition::from_rgs(&rgs);
        let n = 4u64;
        let b = basis_matrix(&p, n, ShapeSplit::new(l, 4 - l)).unwrap();
        let doc = b.to_json();
        // parse back the pieces the CLI consumers rely on
        let entries: Vec<(usize, usize)> = serde_json::from_value(doc["entries"].clone()).unwrap();
        let blocks: Vec<Vec<usize>> = serde_json::from_value(doc["blocks"].clone()).unwrap();
        let rebuilt = BasisMatrix {
            n,
            k: 4 - l,
            l,
            rows: b.rows,
            cols: b.cols,
            source_partition: SetPartition::new(blocks).unwrap(),
            entries,
        };
        prop_assert_eq!(rebuilt, b);
    }

    #[test]
    fn pattern_canonicalization_invariants(
        cells in proptest::collection::vec(1..6u32, 12),
        perm_seed in 0..5u32,
    ) {
        let p = PatternMatrix::from_grid(3, 4, cells).unwrap();
        let canonical = p.canonicalize();
        // idempotent
        prop_assert_eq!(canonical.canonicalize(), canonical.clone());
        // invariant under an arbitrary bijective relabelling
        let relabel = |v: u32| ((v + perm_seed) % 97) + 100;
        let relabelled = PatternMatrix::from_grid(
            3,
            4,
            p.cells.iter().map(|&v| relabel(v)).collect(),
        ).unwrap();
        prop_assert!(p.same_pattern(&relabelled));
    }
}
