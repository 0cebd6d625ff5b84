//! The 3×n² orthogonal-array representation of a Latin square.
//!
//! Each column of the array is a triple (row index, column index, symbol);
//! a square of order n yields n² such triples. The three component rows
//! satisfy:
//!
//! - O1: every entry is a value in 1..n;
//! - O2: every value appears exactly n times in each component row;
//! - O3: two distinct columns agree in at most one position.
//!
//! Permuting the component rows of a valid array yields another valid array,
//! whose square is a conjugate of the original. This module is the oracle
//! route for the direct conjugate constructions in [`crate::conjugate`].

use alloc::vec;
use alloc::vec::Vec;

use crate::conjugate::ConjugateTag;
use crate::error::Error;
use crate::square::LatinSquare;

/// A 3×n² array of (row, column, symbol) triples, stored column-wise and
/// 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrthogonalArray {
    order: usize,
    triples: Vec<[u8; 3]>,
}

impl OrthogonalArray {
    /// The array of a square, with columns (i, j, cell(i, j)) in row-major
    /// order of (i, j).
    pub fn from_square(square: &LatinSquare) -> Self {
        let n = square.order();
        let mut triples = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                triples.push([i as u8, j as u8, square.get(i, j) as u8]);
            }
        }
        OrthogonalArray { order: n, triples }
    }

    /// Wraps raw triples without checking O1–O3 (only the column count);
    /// [`OrthogonalArray::to_square`] performs the full validation.
    pub fn from_triples(order: usize, triples: Vec<[u8; 3]>) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::OrderTooSmall { order, min: 1 });
        }
        if triples.len() != order * order {
            return Err(Error::OaShape {
                expected: order * order,
                got: triples.len(),
            });
        }
        Ok(OrthogonalArray { order, triples })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The columns as (row, column, symbol) triples, 0-based.
    pub fn triples(&self) -> &[[u8; 3]] {
        &self.triples
    }

    /// Moves component row η⁻¹(k) to position k in every column, so the
    /// triple (t₁, t₂, t₃) becomes (t_{η⁻¹(1)}, t_{η⁻¹(2)}, t_{η⁻¹(3)}).
    /// Column order is preserved.
    pub fn permute_rows(&self, tag: ConjugateTag) -> OrthogonalArray {
        let inv = tag.inverse().images();
        let triples = self
            .triples
            .iter()
            .map(|t| [t[inv[0]], t[inv[1]], t[inv[2]]])
            .collect();
        OrthogonalArray {
            order: self.order,
            triples,
        }
    }

    /// Validates O1–O3 and rebuilds the square by placing each symbol at its
    /// (row, column) position. Column order is irrelevant.
    pub fn to_square(&self) -> Result<LatinSquare, Error> {
        let n = self.order;

        // O1: range check, naming the first bad component row and column.
        for (k, t) in self.triples.iter().enumerate() {
            for (comp, &value) in t.iter().enumerate() {
                if (value as usize) >= n {
                    return Err(Error::O1Violation {
                        row: comp + 1,
                        col: k + 1,
                    });
                }
            }
        }

        // O2: every value exactly n times in each component row.
        for comp in 0..3 {
            let mut counts = vec![0usize; n];
            for t in &self.triples {
                counts[t[comp] as usize] += 1;
            }
            if let Some(v) = counts.iter().position(|&c| c != n) {
                return Err(Error::O2Violation {
                    row: comp + 1,
                    value: v + 1,
                });
            }
        }

        // O3: the three pairwise projections must be injective. Two columns
        // agreeing in two (or three) positions agree in some projection.
        let mut witness = vec![0usize; n * n];
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            witness.fill(usize::MAX);
            for (k, t) in self.triples.iter().enumerate() {
                let key = t[a] as usize * n + t[b] as usize;
                if witness[key] != usize::MAX {
                    return Err(Error::O3Violation {
                        col1: witness[key] + 1,
                        col2: k + 1,
                    });
                }
                witness[key] = k;
            }
        }

        let mut cells = vec![0u8; n * n];
        for t in &self.triples {
            cells[t[0] as usize * n + t[1] as usize] = t[2];
        }
        Ok(LatinSquare::new_unchecked(n, cells))
    }
}
