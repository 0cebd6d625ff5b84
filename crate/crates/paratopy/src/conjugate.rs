//! The six conjugate (adjugate, parastrophe) transformations of a Latin
//! square.
//!
//! A conjugate permutes the three roles of a cell triple (row, column,
//! symbol). The library builds every conjugate directly from the square in
//! one pass; the orthogonal-array route ([`LatinSquare::conjugate_via_oa`])
//! is kept as an independent oracle and the two must agree cell for cell.
//!
//! "Inverse of a row (or column)" always means the permutation inverse of
//! its one-row form, never the sequence reversed: the inverse of the row
//! `3 5 4 2 1` is `5 4 1 3 2`.

use alloc::vec;
use core::fmt;

use crate::error::Error;
use crate::oa::OrthogonalArray;
use crate::square::LatinSquare;

/// One of the six elements of S₃ naming a conjugate transformation.
///
/// Each value carries two interchangeable names: the cycle form of the
/// permutation of the three roles, and a bracket form. The pairs are
/// (1)↔`[r,c,e]`, (1 2)↔`[c,r,e]`, (2 3)↔`[r,e,c]`, (1 3)↔`[e,c,r]`,
/// (1 2 3)↔`[c,e,r]`, (1 3 2)↔`[e,r,c]`. Variant names use the bracket
/// letters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ConjugateTag {
    /// (1) — identity.
    Rce,
    /// (1 2) — transpose.
    Cre,
    /// (2 3) — every row replaced by its inverse.
    Rec,
    /// (1 3) — every column replaced by its inverse.
    Ecr,
    /// (1 2 3) — column i of the result is the inverse of row i.
    Cer,
    /// (1 3 2) — row i of the result is the inverse of column i.
    Erc,
}

use ConjugateTag::*;

impl ConjugateTag {
    /// All six tags, identity first.
    pub const ALL: [ConjugateTag; 6] = [Rce, Cre, Rec, Ecr, Cer, Erc];

    /// The underlying permutation of the three roles as 0-based images.
    pub fn images(self) -> [usize; 3] {
        match self {
            Rce => [0, 1, 2],
            Cre => [1, 0, 2],
            Rec => [0, 2, 1],
            Ecr => [2, 1, 0],
            Cer => [1, 2, 0],
            Erc => [2, 0, 1],
        }
    }

    pub fn from_images(images: [usize; 3]) -> Option<ConjugateTag> {
        ConjugateTag::ALL.into_iter().find(|t| t.images() == images)
    }

    /// Group product: `other` acts first, so F_self ∘ F_other = F_{self·other}.
    pub fn compose(self, other: ConjugateTag) -> ConjugateTag {
        let a = self.images();
        let b = other.images();
        ConjugateTag::from_images([a[b[0]], a[b[1]], a[b[2]]]).unwrap()
    }

    pub fn inverse(self) -> ConjugateTag {
        let a = self.images();
        let mut inv = [0usize; 3];
        for (i, &v) in a.iter().enumerate() {
            inv[v] = i;
        }
        ConjugateTag::from_images(inv).unwrap()
    }

    pub fn is_identity(self) -> bool {
        self == Rce
    }

    /// Cycle-form name, e.g. `"(1 3 2)"`.
    pub fn cycle_str(self) -> &'static str {
        match self {
            Rce => "(1)",
            Cre => "(1 2)",
            Rec => "(2 3)",
            Ecr => "(1 3)",
            Cer => "(1 2 3)",
            Erc => "(1 3 2)",
        }
    }

    /// Bracket-form name, e.g. `"[e,r,c]"`.
    pub fn bracket_str(self) -> &'static str {
        match self {
            Rce => "[r,c,e]",
            Cre => "[c,r,e]",
            Rec => "[r,e,c]",
            Ecr => "[e,c,r]",
            Cer => "[c,e,r]",
            Erc => "[e,r,c]",
        }
    }

    /// Parses either naming scheme, case-insensitively: `"(2 3)"`,
    /// `"[r,e,c]"`, or the bare letters `"rec"`.
    pub fn parse(text: &str) -> Result<ConjugateTag, Error> {
        let mut norm = alloc::string::String::new();
        for ch in text.chars() {
            if !ch.is_whitespace() && ch != ',' {
                norm.extend(ch.to_lowercase());
            }
        }
        let tag = match norm.as_str() {
            "(1)" | "[r,c,e]" | "[rce]" | "rce" => Rce,
            "(12)" | "[c,r,e]" | "[cre]" | "cre" => Cre,
            "(23)" | "[r,e,c]" | "[rec]" | "rec" => Rec,
            "(13)" | "[e,c,r]" | "[ecr]" | "ecr" => Ecr,
            "(123)" | "[c,e,r]" | "[cer]" | "cer" => Cer,
            "(132)" | "[e,r,c]" | "[erc]" | "erc" => Erc,
            _ => return Err(Error::InvalidPermutation),
        };
        Ok(tag)
    }
}

impl fmt::Display for ConjugateTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cycle_str())
    }
}

impl LatinSquare {
    /// The conjugate of this square under `tag`, built directly without an
    /// orthogonal array. Each case is a single pass over the cells.
    pub fn conjugate(&self, tag: ConjugateTag) -> LatinSquare {
        let n = self.order();
        match tag {
            Rce => self.clone(),
            Cre => self.transpose(),
            Rec => {
                // Row i becomes its inverse: cell (i, y(i,j)) = j.
                let mut cells = vec![0u8; n * n];
                for i in 0..n {
                    for j in 0..n {
                        cells[i * n + self.get(i, j)] = j as u8;
                    }
                }
                LatinSquare::new_unchecked(n, cells)
            }
            Ecr => {
                // Column j becomes its inverse: cell (y(i,j), j) = i.
                let mut cells = vec![0u8; n * n];
                for i in 0..n {
                    for j in 0..n {
                        cells[self.get(i, j) * n + j] = i as u8;
                    }
                }
                LatinSquare::new_unchecked(n, cells)
            }
            Cer => {
                // Column i of the result is the inverse of row i:
                // cell (y(i,j), i) = j.
                let mut cells = vec![0u8; n * n];
                for i in 0..n {
                    for j in 0..n {
                        cells[self.get(i, j) * n + i] = j as u8;
                    }
                }
                LatinSquare::new_unchecked(n, cells)
            }
            Erc => {
                // Row j of the result is the inverse of column j:
                // cell (j, y(i,j)) = i.
                let mut cells = vec![0u8; n * n];
                for i in 0..n {
                    for j in 0..n {
                        cells[j * n + self.get(i, j)] = i as u8;
                    }
                }
                LatinSquare::new_unchecked(n, cells)
            }
        }
    }

    /// The conjugate computed through the orthogonal array: convert, permute
    /// the component rows, convert back. Ground truth for
    /// [`LatinSquare::conjugate`].
    pub fn conjugate_via_oa(&self, tag: ConjugateTag) -> LatinSquare {
        OrthogonalArray::from_square(self)
            .permute_rows(tag)
            .to_square()
            .expect("row permutation preserves orthogonality")
    }
}
