//! Enumeration and classification of reduced Latin squares.
//!
//! Reduced squares of one order are partitioned into equivalence classes of
//! four kinds, each the closure of isotopy together with a subgroup of the
//! conjugate tags:
//!
//! - isotopy: tags {(1)};
//! - type: tags {(1), (1 2)} — isotopy together with transposition;
//! - inverse type: tags {(1), (2 3)} — isotopy together with row inversion;
//! - main class: all six tags.
//!
//! A class representative is its lexicographically smallest (row-major)
//! reduced member. Class sizes count reduced members; total squares follow
//! by the n!·(n-1)! factor.

mod enumerate;
mod stabilizer;

pub use enumerate::{all_reduced, count_reduced, reduced_squares, EnumOptions, Partition};
pub use stabilizer::{autoparatopism_group, StabilizerGroup};

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::conjugate::ConjugateTag;
use crate::error::Error;
use crate::perm::{next_arrangement, CycleStructure};
use crate::square::LatinSquare;

/// Which closure defines the classes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ClassKind {
    Isotopy,
    Type,
    InverseType,
    MainClass,
}

impl ClassKind {
    pub const ALL: [ClassKind; 4] = [
        ClassKind::Isotopy,
        ClassKind::Type,
        ClassKind::InverseType,
        ClassKind::MainClass,
    ];

    /// The conjugate tags whose isotopy classes make up one class.
    pub fn tags(self) -> &'static [ConjugateTag] {
        use ConjugateTag::*;
        match self {
            ClassKind::Isotopy => &[Rce],
            ClassKind::Type => &[Rce, Cre],
            ClassKind::InverseType => &[Rce, Rec],
            ClassKind::MainClass => &[Rce, Cre, Rec, Ecr, Cer, Erc],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Isotopy => "isotopy",
            ClassKind::Type => "type",
            ClassKind::InverseType => "inverse-type",
            ClassKind::MainClass => "main-class",
        }
    }

    pub fn parse(text: &str) -> Result<ClassKind, Error> {
        match text.to_ascii_lowercase().replace('_', "-").as_str() {
            "isotopy" => Ok(ClassKind::Isotopy),
            "type" => Ok(ClassKind::Type),
            "inverse-type" => Ok(ClassKind::InverseType),
            "main-class" => Ok(ClassKind::MainClass),
            _ => Err(Error::InvalidPermutation),
        }
    }
}

impl core::fmt::Display for ClassKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// The multiset, over unordered row pairs {i, j}, of the cycle structure of
/// the quotient Y_i·Y_j⁻¹. Invariant under isotopy and under the
/// row-inverse conjugate, which makes it a cheap class filter.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PairSignature {
    entries: Vec<CycleStructure>,
}

impl PairSignature {
    /// Sorted entries, n(n-1)/2 of them.
    pub fn entries(&self) -> &[CycleStructure] {
        &self.entries
    }
}

/// Computes the pair signature of a square of order at least 2.
pub fn pair_signature(square: &LatinSquare) -> Result<PairSignature, Error> {
    let n = square.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { order: n, min: 2 });
    }
    let mut entries = Vec::with_capacity(n * (n - 1) / 2);
    let mut quotient = alloc::vec![0u8; n];
    for i in 0..n {
        for j in i + 1..n {
            // q = Y_i ∘ Y_j⁻¹ computed pointwise: q(Y_j(p)) = Y_i(p).
            for p in 0..n {
                quotient[square.get(j, p)] = square.cells()[i * n + p];
            }
            let perm = crate::perm::Permutation::from_images(quotient.clone())
                .expect("row quotient is a permutation");
            entries.push(perm.cycle_structure());
        }
    }
    entries.sort_unstable();
    Ok(PairSignature { entries })
}

/// Every reduced square isotopic to the given square.
///
/// The expansion enumerates exactly the isotopisms with a reduced image:
/// choosing the source row `r` sent to the top, the source column `c` sent
/// to the left, and a relabeling γ with γ(cell(r, c)) = 1 determines the
/// row and column permutations. That is n²·(n-1)! candidate squares.
pub fn isotopy_class_reduced(square: &LatinSquare) -> BTreeSet<LatinSquare> {
    let n = square.order();
    let mut out = BTreeSet::new();
    if n == 1 {
        out.insert(square.clone());
        return out;
    }
    let mut gamma = alloc::vec![0u8; n];
    let mut cells = alloc::vec![0u8; n * n];
    let mut row_dest = alloc::vec![0usize; n];
    let mut col_dest = alloc::vec![0usize; n];
    for r in 0..n {
        for c in 0..n {
            let fixed = square.get(r, c);
            // Symbols other than `fixed`, relabeled to 1..n-1 in every order.
            let others: Vec<u8> = (0..n as u8).filter(|&s| s as usize != fixed).collect();
            let mut assign: Vec<u8> = (1..n as u8).collect();
            loop {
                gamma[fixed] = 0;
                for (k, &s) in others.iter().enumerate() {
                    gamma[s as usize] = assign[k];
                }
                for i in 0..n {
                    row_dest[i] = gamma[square.get(i, c)] as usize;
                }
                for j in 0..n {
                    col_dest[j] = gamma[square.get(r, j)] as usize;
                }
                for i in 0..n {
                    for j in 0..n {
                        cells[row_dest[i] * n + col_dest[j]] = gamma[square.get(i, j)];
                    }
                }
                let candidate = LatinSquare::new_unchecked(n, cells.clone());
                debug_assert!(candidate.is_reduced());
                out.insert(candidate);
                if !next_arrangement(&mut assign) {
                    break;
                }
            }
        }
    }
    out
}

/// One class: its smallest reduced member and how many reduced squares it
/// contains.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub representative: LatinSquare,
    pub size: u64,
}

/// A full partition of the reduced squares of one order.
#[derive(Clone, Debug)]
pub struct Classification {
    pub order: usize,
    pub kind: ClassKind,
    /// Classes ordered by representative (ascending row-major).
    pub classes: Vec<ClassInfo>,
}

impl Classification {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Total reduced squares across all classes.
    pub fn total_reduced(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }
}

/// Partitions all reduced squares of order `n` into `kind`-classes.
///
/// The enumeration stream ascends, so the first square not yet covered by
/// an earlier class is that class's representative; its members are the
/// union of the reduced isotopy classes of its conjugates under the kind's
/// tags. With `opts.pruning` set, prefixes that cannot reach a
/// representative are never extended; class sizes still come from the full
/// member expansion, so the result is identical either way.
pub fn classify(n: usize, kind: ClassKind, opts: &EnumOptions) -> Result<Classification, Error> {
    let mut classes: Vec<ClassInfo> = Vec::new();
    // Reduced members of already-seen classes that the stream has not
    // reached yet; entries behind the stream position are evicted as it
    // advances.
    let mut covered: BTreeSet<LatinSquare> = BTreeSet::new();
    reduced_squares(n, opts, |sq| {
        covered = covered.split_off(sq);
        if covered.contains(sq) {
            covered.remove(sq);
            return;
        }
        let mut members: BTreeSet<LatinSquare> = BTreeSet::new();
        for &tag in kind.tags() {
            members.extend(isotopy_class_reduced(&sq.conjugate(tag)));
        }
        debug_assert!(members.contains(sq));
        let representative = members
            .iter()
            .next()
            .expect("class contains at least its seed")
            .clone();
        assert_eq!(
            &representative, sq,
            "enumeration must meet each class at its minimum"
        );
        let size = members.len() as u64;
        for m in members {
            if &m > sq {
                covered.insert(m);
            }
        }
        classes.push(ClassInfo {
            representative,
            size,
        });
    })?;
    Ok(Classification {
        order: n,
        kind,
        classes,
    })
}
