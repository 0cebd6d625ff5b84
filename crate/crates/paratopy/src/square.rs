//! Latin squares and isotopisms.
//!
//! A Latin square of order n is an n×n grid in which every row and every
//! column is a permutation of the symbols. Symbols are 1..n in all textual
//! forms and 0..n-1 in memory. The grid is stored row-major, so squares
//! compare lexicographically row by row, which is the order used to pick
//! class representatives.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::perm::{Permutation, MAX_DEGREE};

/// An order-n Latin square over symbols 1..n (stored 0-based, row-major).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<u8>,
}

impl LatinSquare {
    /// Validates a row-major grid of 0-based cells.
    ///
    /// Checks, in order: the cell count matches `order`², every entry is in
    /// range, every row is duplicate-free, every column is duplicate-free.
    /// Errors carry the first offending 1-based coordinate.
    pub fn try_new(order: usize, cells: Vec<u8>) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::OrderTooSmall { order, min: 1 });
        }
        if order > MAX_DEGREE {
            return Err(Error::OrderTooLarge { order });
        }
        if cells.len() != order * order {
            let rows = cells.len() / order.max(1);
            return Err(Error::NotSquare { rows, cols: order });
        }
        for (k, &v) in cells.iter().enumerate() {
            if (v as usize) >= order {
                return Err(Error::EntryOutOfRange {
                    row: k / order + 1,
                    col: k % order + 1,
                });
            }
        }
        let mut seen = vec![false; order];
        for r in 0..order {
            seen.fill(false);
            for c in 0..order {
                let v = cells[r * order + c] as usize;
                if seen[v] {
                    return Err(Error::RowDuplicate { row: r + 1 });
                }
                seen[v] = true;
            }
        }
        for c in 0..order {
            seen.fill(false);
            for r in 0..order {
                let v = cells[r * order + c] as usize;
                if seen[v] {
                    return Err(Error::ColumnDuplicate { col: c + 1 });
                }
                seen[v] = true;
            }
        }
        Ok(LatinSquare { order, cells })
    }

    pub(crate) fn new_unchecked(order: usize, cells: Vec<u8>) -> Self {
        debug_assert!(LatinSquare::try_new(order, cells.clone()).is_ok());
        LatinSquare { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// 0-based symbol at 0-based position (r, c).
    pub fn get(&self, r: usize, c: usize) -> usize {
        self.cells[r * self.order + c] as usize
    }

    /// Row-major 0-based cells.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub(crate) fn row_slice(&self, r: usize) -> &[u8] {
        &self.cells[r * self.order..(r + 1) * self.order]
    }

    /// Row `r` (0-based) read as a permutation: j ↦ cell(r, j).
    pub fn row_as_perm(&self, r: usize) -> Result<Permutation, Error> {
        if r >= self.order {
            return Err(Error::IndexOutOfRange {
                index: r + 1,
                len: self.order,
            });
        }
        Ok(Permutation::from_images_unchecked(self.row_slice(r).to_vec()))
    }

    /// Column `c` (0-based) read as a permutation: i ↦ cell(i, c).
    pub fn col_as_perm(&self, c: usize) -> Result<Permutation, Error> {
        if c >= self.order {
            return Err(Error::IndexOutOfRange {
                index: c + 1,
                len: self.order,
            });
        }
        let images = (0..self.order).map(|r| self.cells[r * self.order + c]).collect();
        Ok(Permutation::from_images_unchecked(images))
    }

    /// True when both the first row and the first column are in natural order.
    pub fn is_reduced(&self) -> bool {
        let n = self.order;
        (0..n).all(|j| self.get(0, j) == j) && (0..n).all(|i| self.get(i, 0) == i)
    }

    /// The standard form of this square together with the isotopism that
    /// produces it: columns are permuted to make the first row natural, then
    /// rows to make the first column natural. Symbols are never relabeled.
    pub fn to_reduced(&self) -> (LatinSquare, Isotopism) {
        let n = self.order;
        // Column j must move to position cell(0, j).
        let col = Permutation::from_images_unchecked(self.row_slice(0).to_vec());
        let col_inv = col.inverse();
        let mut mid = vec![0u8; n * n];
        for r in 0..n {
            for j in 0..n {
                mid[r * n + j] = self.cells[r * n + col_inv.apply(j)];
            }
        }
        // Row i must move to position mid(i, 0).
        let row_images: Vec<u8> = (0..n).map(|r| mid[r * n]).collect();
        let row = Permutation::from_images_unchecked(row_images);
        let row_inv = row.inverse();
        let mut cells = vec![0u8; n * n];
        for i in 0..n {
            let src = row_inv.apply(i);
            cells[i * n..(i + 1) * n].copy_from_slice(&mid[src * n..(src + 1) * n]);
        }
        let reduced = LatinSquare::new_unchecked(n, cells);
        debug_assert!(reduced.is_reduced());
        let iso = Isotopism {
            row,
            col,
            sym: Permutation::identity(n),
        };
        (reduced, iso)
    }

    pub fn transpose(&self) -> LatinSquare {
        let n = self.order;
        let mut cells = vec![0u8; n * n];
        for r in 0..n {
            for c in 0..n {
                cells[c * n + r] = self.cells[r * n + c];
            }
        }
        LatinSquare { order: n, cells }
    }
}

impl fmt::Display for LatinSquare {
    /// The "grid" text form: n lines of n space-separated 1-based symbols.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.order {
            for c in 0..self.order {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c) + 1)?;
            }
            if r + 1 < self.order {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatinSquare(order {})", self.order)?;
        for r in 0..self.order {
            write!(f, " |")?;
            for c in 0..self.order {
                write!(f, " {}", self.get(r, c) + 1)?;
            }
        }
        Ok(())
    }
}

/// A triple (row permutation, column permutation, symbol permutation),
/// acting on a square by moving row i to row α(i), column j to column β(j)
/// and relabeling symbol s to γ(s).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Isotopism {
    row: Permutation,
    col: Permutation,
    sym: Permutation,
}

impl Isotopism {
    pub fn new(row: Permutation, col: Permutation, sym: Permutation) -> Result<Self, Error> {
        if row.degree() != col.degree() {
            return Err(Error::DegreeMismatch {
                left: row.degree(),
                right: col.degree(),
            });
        }
        if row.degree() != sym.degree() {
            return Err(Error::DegreeMismatch {
                left: row.degree(),
                right: sym.degree(),
            });
        }
        Ok(Isotopism { row, col, sym })
    }

    pub fn identity(n: usize) -> Self {
        Isotopism {
            row: Permutation::identity(n),
            col: Permutation::identity(n),
            sym: Permutation::identity(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.row.degree()
    }

    pub fn row(&self) -> &Permutation {
        &self.row
    }

    pub fn col(&self) -> &Permutation {
        &self.col
    }

    pub fn sym(&self) -> &Permutation {
        &self.sym
    }

    /// Components in (row, column, symbol) order.
    pub fn components(&self) -> [&Permutation; 3] {
        [&self.row, &self.col, &self.sym]
    }

    pub fn is_identity(&self) -> bool {
        self.row.is_identity() && self.col.is_identity() && self.sym.is_identity()
    }

    /// Componentwise inverse; isotopisms compose componentwise.
    pub fn inverse(&self) -> Isotopism {
        Isotopism {
            row: self.row.inverse(),
            col: self.col.inverse(),
            sym: self.sym.inverse(),
        }
    }

    /// Componentwise composition: `other` acts first.
    pub fn compose(&self, other: &Isotopism) -> Result<Isotopism, Error> {
        Ok(Isotopism {
            row: self.row.compose(&other.row)?,
            col: self.col.compose(&other.col)?,
            sym: self.sym.compose(&other.sym)?,
        })
    }

    /// Applies the isotopism: row i of the result is γ·Y_{α⁻¹(i)}·β⁻¹ in
    /// one-row form, which is the closed form of moving rows by α, columns
    /// by β and relabeling symbols by γ.
    pub fn apply(&self, square: &LatinSquare) -> Result<LatinSquare, Error> {
        let n = square.order();
        if self.degree() != n {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: n,
            });
        }
        let row_inv = self.row.inverse();
        let col_inv = self.col.inverse();
        let mut cells = vec![0u8; n * n];
        for i in 0..n {
            let src = square.row_slice(row_inv.apply(i));
            for j in 0..n {
                cells[i * n + j] = self.sym.images()[src[col_inv.apply(j)] as usize];
            }
        }
        Ok(LatinSquare::new_unchecked(n, cells))
    }
}

impl fmt::Display for Isotopism {
    /// Semicolon-separated one-row forms: "α; β; γ".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {}; {}", self.row, self.col, self.sym)
    }
}
