//! Weight-sharing pattern matrices: a dense grid assigning every cell its
//! parameter class, with a canonical labelling that makes two patterns
//! comparable regardless of how their classes were numbered.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The partition of a weight matrix's cells into equal-parameter classes,
/// stored as a dense grid of 1-based class ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Row-major cells; every value is a class id in `1..=num_classes`.
    pub cells: Vec<u32>,
}

impl PatternMatrix {
    /// Builds a pattern from per-class support lists. Every cell of the
    /// grid must be covered exactly once.
    pub fn from_supports(
        rows: usize,
        cols: usize,
        supports: &[Vec<(usize, usize)>],
    ) -> Result<Self> {
        let mut cells = vec![0u32; rows * cols];
        for (class, support) in supports.iter().enumerate() {
            for &(r, c) in support {
                if r >= rows || c >= cols {
                    return Err(Error::ShapeMismatch {
                        expected: format!("cells within {rows}x{cols}"),
                        got: format!("({r}, {c})"),
                    });
                }
                let cell = &mut cells[r * cols + c];
                if *cell != 0 {
                    return Err(Error::InvalidBlocks(format!(
                        "cell ({r}, {c}) covered twice"
                    )));
                }
                *cell = class as u32 + 1;
            }
        }
        if let Some(i) = cells.iter().position(|&v| v == 0) {
            return Err(Error::InvalidBlocks(format!(
                "cell ({}, {}) not covered",
                i / cols,
                i % cols
            )));
        }
        Ok(Self { rows, cols, cells })
    }

    /// Builds a pattern directly from a dense grid of class ids.
    pub fn from_grid(rows: usize, cols: usize, cells: Vec<u32>) -> Result<Self> {
        if cells.len() != rows * cols || cells.contains(&0) {
            return Err(Error::ShapeMismatch {
                expected: format!("{rows}*{cols} positive cells"),
                got: format!("{} cells", cells.len()),
            });
        }
        Ok(Self { rows, cols, cells })
    }

    pub fn num_classes(&self) -> usize {
        self.cells.iter().copied().max().unwrap_or(0) as usize
    }

    /// Relabels classes by first occurrence scanning row-major, making the
    /// labelling independent of the original class numbering.
    pub fn canonicalize(&self) -> PatternMatrix {
        let mut map = std::collections::BTreeMap::new();
        let mut next = 1u32;
        let cells = self
            .cells
            .iter()
            .map(|&v| {
                *map.entry(v).or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                })
            })
            .collect();
        PatternMatrix {
            rows: self.rows,
            cols: self.cols,
            cells,
        }
    }

    /// True when the two patterns induce the same partition of cells, i.e.
    /// are equal after canonical relabelling.
    pub fn same_pattern(&self, other: &PatternMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.canonicalize().cells == other.canonicalize().cells
    }

    /// The first cell where the two canonicalized patterns differ, as
    /// `(row, col, self class, other class)`.
    pub fn first_difference(&self, other: &PatternMatrix) -> Option<(usize, usize, u32, u32)> {
        let a = self.canonicalize();
        let b = other.canonicalize();
        a.cells
            .iter()
            .zip(&b.cells)
            .position(|(x, y)| x != y)
            .map(|i| (i / self.cols, i % self.cols, a.cells[i], b.cells[i]))
    }
}
