//! Embedded reference fixtures: the published appendix weight-sharing
//! tables, shipped as JSON pattern grids, together with the code that
//! regenerates each table from scratch and compares up to relabelling.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::equimap::{bias_basis, full_basis};
use crate::error::Result;
use crate::pattern::PatternMatrix;
use crate::product::{enumerate_diagram_tuples, product_basis_matrix, LayerSpec};

/// The five shipped appendix fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Appendix {
    A,
    B,
    C,
    D,
    E,
}

impl Appendix {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Some(Self::A),
            "B" => Some(Self::B),
            "C" => Some(Self::C),
            "D" => Some(Self::D),
            "E" => Some(Self::E),
            _ => None,
        }
    }

    pub fn all() -> [Self; 5] {
        [Self::A, Self::B, Self::C, Self::D, Self::E]
    }

    pub fn letter(self) -> char {
        match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
            Self::E => 'E',
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FixtureFile {
    note: String,
    matrices: BTreeMap<String, PatternMatrix>,
}

fn fixture_file(which: Appendix) -> FixtureFile {
    let raw = match which {
        Appendix::A => include_str!("../fixtures/appendix_a.json"),
        Appendix::B => include_str!("../fixtures/appendix_b.json"),
        Appendix::C => include_str!("../fixtures/appendix_c.json"),
        Appendix::D => include_str!("../fixtures/appendix_d.json"),
        Appendix::E => include_str!("../fixtures/appendix_e.json"),
    };
    serde_json::from_str(raw).expect("embedded fixture parses")
}

/// The transcribed reference patterns of an appendix, keyed by table name.
pub fn reference_patterns(which: Appendix) -> BTreeMap<String, PatternMatrix> {
    fixture_file(which).matrices
}

fn pattern_of_basis(basis: &[crate::equimap::BasisMatrix]) -> Result<PatternMatrix> {
    let (rows, cols) = basis.first().map(|b| b.shape()).unwrap_or((0, 0));
    let supports: Vec<Vec<(usize, usize)>> = basis.iter().map(|b| b.entries.clone()).collect();
    PatternMatrix::from_supports(rows, cols, &supports)
}

fn pattern_of_spec(spec: &LayerSpec) -> Result<PatternMatrix> {
    let supports: Vec<Vec<(usize, usize)>> = enumerate_diagram_tuples(spec)
        .iter()
        .map(|t| product_basis_matrix(t, spec).map(|m| m.entries))
        .collect::<Result<_>>()?;
    PatternMatrix::from_supports(spec.rows() as usize, spec.cols() as usize, &supports)
}

/// Recomputes the patterns of an appendix from the basis machinery, keyed
/// identically to [`reference_patterns`].
pub fn generated_patterns(which: Appendix) -> Result<BTreeMap<String, PatternMatrix>> {
    let mut out = BTreeMap::new();
    match which {
        Appendix::A => {
            out.insert("weight".into(), pattern_of_basis(&full_basis(4, 2, 2)?)?);
            out.insert("bias".into(), pattern_of_basis(&bias_basis(4, 2)?)?);
        }
        Appendix::B => {
            out.insert("weight".into(), pattern_of_basis(&full_basis(2, 2, 2)?)?);
        }
        Appendix::C => {
            out.insert(
                "weight_2x4".into(),
                pattern_of_basis(&full_basis(2, 2, 1)?)?,
            );
            out.insert(
                "weight_1x8".into(),
                pattern_of_basis(&full_basis(2, 3, 0)?)?,
            );
        }
        Appendix::D => {
            let spec = LayerSpec::parse("2:1->1,2:1->1,2:1->1")?;
            out.insert("weight".into(), pattern_of_spec(&spec)?);
        }
        Appendix::E => {
            let spec = LayerSpec::parse("2:2->1,4:1->1")?;
            out.insert("weight".into(), pattern_of_spec(&spec)?);
        }
    }
    Ok(out)
}

/// Outcome of comparing one regenerated table with its reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub appendix: char,
    pub table: String,
    pub classes: usize,
    pub pass: bool,
    /// `(row, col, generated class, reference class)` after
    /// canonicalization, for the first mismatching cell.
    pub first_difference: Option<(usize, usize, u32, u32)>,
}

/// Regenerates every table of an appendix and compares it with the shipped
/// reference, cell for cell, up to relabelling.
pub fn check_appendix(which: Appendix) -> Result<Vec<FixtureReport>> {
    let reference = reference_patterns(which);
    let generated = generated_patterns(which)?;
    let mut reports = Vec::new();
    for (name, ref_pattern) in &reference {
        let gen_pattern = generated
            .get(name)
            .expect("generated tables mirror the fixture keys");
        let pass = gen_pattern.same_pattern(ref_pattern);
        reports.push(FixtureReport {
            appendix: which.letter(),
            table: name.clone(),
            classes: gen_pattern.num_classes(),
            pass,
            first_difference: if pass {
                None
            } else {
                gen_pattern.first_difference(ref_pattern)
            },
        });
    }
    Ok(reports)
}
