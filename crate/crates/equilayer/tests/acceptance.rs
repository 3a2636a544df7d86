//! Acceptance suite: ten end-to-end criteria, each printing one PASS/FAIL
//! line (visible with `--nocapture`). Every comparison is exact; there are
//! no tolerances anywhere.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use equilayer::diagram::{
    algebra_product, transition_to_diagram, transition_to_orbit, AlgebraElement, BasisKind, Diagram,
};
use equilayer::equimap::{
    full_basis, oracle_basis, phi_on_diagram, verify_basis_equivariance, IntMatrix,
};
use equilayer::fixtures::{check_appendix, Appendix};
use equilayer::product::{
    enumerate_diagram_tuples, product_basis_matrix, product_dim, verify_product_equivariance,
    Factor, LayerSpec,
};
use equilayer::quiver::{build_quiver, hom_dim, multiplicities_via_power};
use equilayer::setpart::{
    bell, enumerate_set_partitions, restricted_bell, SetPartition, ShapeSplit,
};

/// Prints the criterion verdict before asserting, so a failing run still
/// shows one line per criterion.
fn verdict(criterion: usize, name: &str, pass: bool) {
    println!(
        "criterion {criterion:2}: {} — {name}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {name}");
}

#[test]
fn criterion_01_restricted_bell_tables() {
    // rows k = 0..=6, columns n = 2..=8 then the unrestricted Bell number
    let even_table: [[u64; 8]; 7] = [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [2, 2, 2, 2, 2, 2, 2, 2],
        [8, 14, 15, 15, 15, 15, 15, 15],
        [32, 122, 187, 202, 203, 203, 203, 203],
        [128, 1094, 2795, 3845, 4111, 4139, 4140, 4140],
        [512, 9842, 43947, 86472, 109299, 115179, 115929, 115975],
        [
            2048, 88574, 700075, 2079475, 3403127, 4030523, 4189550, 4213597,
        ],
    ];
    // rows k = 1..=8, same column layout
    let single_table: [[u64; 8]; 8] = [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [2, 2, 2, 2, 2, 2, 2, 2],
        [4, 5, 5, 5, 5, 5, 5, 5],
        [8, 14, 15, 15, 15, 15, 15, 15],
        [16, 41, 51, 52, 52, 52, 52, 52],
        [32, 122, 187, 202, 203, 203, 203, 203],
        [64, 365, 715, 855, 876, 877, 877, 877],
        [128, 1094, 2795, 3845, 4111, 4139, 4140, 4140],
    ];
    let mut pass = true;
    for (k, row) in even_table.iter().enumerate() {
        for (col, &expect) in row.iter().enumerate() {
            let got = if col < 7 {
                restricted_bell(2 * k, col as u64 + 2)
            } else {
                bell(2 * k)
            };
            pass &= got == BigUint::from(expect);
        }
    }
    for (i, row) in single_table.iter().enumerate() {
        let k = i + 1;
        for (col, &expect) in row.iter().enumerate() {
            let got = if col < 7 {
                restricted_bell(k, col as u64 + 2)
            } else {
                bell(k)
            };
            pass &= got == BigUint::from(expect);
        }
    }
    verdict(1, "restricted Bell tables (56 + 64 entries)", pass);
}

#[test]
fn criterion_02_mckay_quiver_n6() {
    let expect: [[u64; 11]; 11] = [
        [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 2, 1, 1, 1, 0, 0, 0, 0, 0],
        [0, 1, 1, 2, 0, 1, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 3, 1, 1, 1, 0, 0],
        [0, 0, 0, 1, 0, 1, 2, 0, 1, 1, 0],
        [0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 1, 1, 1, 2, 1, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 1, 2, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    ];
    let quiver = build_quiver(6).unwrap();
    let pass = quiver
        .adjacency()
        .iter()
        .zip(expect.iter())
        .all(|(got, want)| got.as_slice() == want.as_slice());
    verdict(2, "McKay quiver adjacency for n = 6 (121 entries)", pass);
}

#[test]
fn criterion_03_dimension_bridge() {
    let mut pass = true;
    for n in 2..=6u64 {
        for k in 0..=8usize {
            for l in 0..=(8 - k) {
                pass &= hom_dim(n, k, l).unwrap() == restricted_bell(k + l, n);
            }
        }
    }
    verdict(3, "hom_dim equals restricted Bell for n ≤ 6, k+l ≤ 8", pass);
}

#[test]
fn criterion_04_conservation_of_dimension() {
    let mut pass = true;
    for n in 2..=6u64 {
        let quiver = build_quiver(n).unwrap();
        for k in 0..=5usize {
            let total: BigUint = multiplicities_via_power(&quiver, k)
                .counts
                .iter()
                .map(|(lam, c)| c * lam.specht_dimension().unwrap())
                .sum();
            pass &= total == BigUint::from(n).pow(k as u32);
        }
    }
    verdict(4, "Σ multiplicities · irreducible dims = n^k", pass);
}

#[test]
fn criterion_05_appendix_fixtures() {
    let mut pass = true;
    for which in Appendix::all() {
        for report in check_appendix(which).unwrap() {
            if !report.pass {
                println!(
                    "  appendix {} {} differs at {:?}",
                    report.appendix, report.table, report.first_difference
                );
            }
            pass &= report.pass;
        }
    }
    verdict(5, "appendix fixtures A–E match after relabelling", pass);
}

#[test]
fn criterion_06_oracle_equivalence() {
    let mut shapes = Vec::new();
    for n in 1..=4u64 {
        for l in 0..=4usize {
            for k in 0..=(4 - l) {
                shapes.push((n, k, l));
            }
        }
    }
    shapes.push((2, 3, 0));
    shapes.push((2, 0, 3));
    let mut pass = true;
    for (n, k, l) in shapes {
        let mut a: Vec<Vec<(usize, usize)>> = full_basis(n, k, l)
            .unwrap()
            .into_iter()
            .map(|b| b.entries)
            .collect();
        a.sort();
        let b: Vec<Vec<(usize, usize)>> = oracle_basis(n, k, l)
            .unwrap()
            .into_iter()
            .map(|b| b.entries)
            .collect();
        pass &= a == b;
    }
    verdict(
        6,
        "independent orbit oracle agrees with set-partition path",
        pass,
    );
}

#[test]
fn criterion_07_equivariance() {
    let mut pass = true;
    for n in 2..=6u64 {
        for k in 0..=8usize {
            for l in 0..=(8 - k) {
                if (n as u128).pow(k.max(l) as u32) > 10_000 {
                    continue;
                }
                let basis = full_basis(n, k, l).unwrap();
                pass &= verify_basis_equivariance(&basis, n, k, l, 50, 424242)
                    .unwrap()
                    .is_none();
            }
        }
    }
    verdict(
        7,
        "all basis matrices equivariant (generators + 50 seeded trials)",
        pass,
    );
}

#[test]
fn criterion_08_homomorphism_and_kernel() {
    let mut pass = true;
    let partitions = enumerate_set_partitions(4, None);
    for n in 2..=5u64 {
        let elements: Vec<AlgebraElement> = partitions
            .iter()
            .map(|p| {
                AlgebraElement::from_diagram(
                    &Diagram::new(p.clone(), ShapeSplit::new(2, 2), BasisKind::Diagram).unwrap(),
                )
                .unwrap()
            })
            .collect();
        let images: Vec<IntMatrix> = elements
            .iter()
            .map(|a| phi_on_diagram(a, n).unwrap())
            .collect();
        for (a, ma) in elements.iter().zip(&images) {
            for (b, mb) in elements.iter().zip(&images) {
                let lhs = phi_on_diagram(&algebra_product(a, b, n).unwrap(), n).unwrap();
                pass &= lhs == ma.matmul(mb).unwrap();
            }
        }
    }
    for n in 1..=5u64 {
        for k in 1..=3usize {
            let dropped = enumerate_set_partitions(2 * k, None)
                .iter()
                .filter(|p| p.num_blocks() as u64 > n)
                .count();
            pass &= BigUint::from(dropped) == bell(2 * k) - restricted_bell(2 * k, n);
        }
    }
    verdict(8, "Φ is a homomorphism; kernel dimension matches", pass);
}

#[test]
fn criterion_09_product_groups() {
    let mut pass = true;
    let hartford = LayerSpec::parse("2:1->1,2:1->1,2:1->1").unwrap();
    let mixed = LayerSpec::parse("2:2->1,4:1->1").unwrap();
    pass &= product_dim(&hartford) == BigUint::from(8u32);
    pass &= product_dim(&mixed) == BigUint::from(8u32);

    for spec in [&hartford, &mixed] {
        for t in enumerate_diagram_tuples(spec) {
            let m = product_basis_matrix(&t, spec).unwrap();
            let mut im = IntMatrix::zero(m.rows, m.cols);
            for &(r, c) in &m.entries {
                im.add(r, c, BigInt::one());
            }
            pass &= verify_product_equivariance(&im, spec, 10, 5)
                .unwrap()
                .is_none();
        }
    }

    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    for _ in 0..20 {
        let m = rng.gen_range(1..=3usize);
        let factors: Vec<Factor> = (0..m)
            .map(|_| Factor {
                n: rng.gen_range(1..=5),
                k: rng.gen_range(0..=2),
                l: rng.gen_range(0..=2),
            })
            .collect();
        let spec = LayerSpec::new(factors).unwrap();
        let total_m: usize = spec.factors.iter().map(|f| f.l + f.k).sum();
        let total_n: u64 = spec.factors.iter().map(|f| f.n).sum();
        pass &= product_dim(&spec) <= restricted_bell(total_m, total_n);
    }
    verdict(
        9,
        "product dimensions, equivariance and subspace bound",
        pass,
    );
}

#[test]
fn criterion_10_transition_matrix() {
    let mut pass = true;
    // round trip: one element carrying every diagram of P_k, k = 1..=4
    for k in 1..=4usize {
        let mut a = AlgebraElement::zero(k, BasisKind::Diagram);
        for (i, p) in enumerate_set_partitions(2 * k, None)
            .into_iter()
            .enumerate()
        {
            a.add_term(p, BigInt::from(i as i64 + 1));
        }
        let back = transition_to_diagram(&transition_to_orbit(&a).unwrap()).unwrap();
        pass &= back == a;
    }
    // unitriangularity of the zeta matrix for every ground set up to 8
    for m in 1..=8usize {
        let mut all = enumerate_set_partitions(m, None);
        all.sort_by_key(|p: &SetPartition| p.num_blocks());
        for (i, pi) in all.iter().enumerate() {
            pass &= pi.refines(pi).unwrap();
            for pj in all.iter().skip(i + 1) {
                if pj.num_blocks() > pi.num_blocks() {
                    pass &= !pi.refines(pj).unwrap();
                }
            }
        }
    }
    verdict(
        10,
        "diagram↔orbit round trip and unitriangularity (m ≤ 8)",
        pass,
    );
}
