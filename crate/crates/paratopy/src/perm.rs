//! Permutations of {1..n} in one-row form.
//!
//! A permutation is stored as its image sequence. Storage is 0-based; every
//! textual form (parsing, display) is 1-based, so `"3 5 4 2 1"` is the map
//! 1→3, 2→5, 3→4, 4→2, 5→1. Composition follows (p·q)(i) = p(q(i)):
//! the right factor acts first.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Largest supported degree; images are stored as bytes.
pub const MAX_DEGREE: usize = 255;

/// A bijection of {1..n} in one-row form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// The identity of degree `n`.
    ///
    /// # Panics
    /// If `n` is 0 or exceeds [`MAX_DEGREE`].
    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n), "degree must be in 1..=255");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self, Error> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidPermutation);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if (v as usize) >= n || seen[v as usize] {
                return Err(Error::InvalidPermutation);
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u8>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Parses the 1-based one-row textual form, e.g. `"3 5 4 2 1"`.
    pub fn parse_one_row(text: &str) -> Result<Self, Error> {
        let mut images = Vec::new();
        for token in text.split_whitespace() {
            let v: usize = token.parse().map_err(|_| Error::InvalidPermutation)?;
            if v == 0 || v > MAX_DEGREE {
                return Err(Error::InvalidPermutation);
            }
            images.push((v - 1) as u8);
        }
        Permutation::from_images(images)
    }

    /// Number of points moved, i.e. the `n` of {1..n}.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// The 0-based image sequence.
    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// (self·other)(i) = self(other(i)); `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = other.images.iter().map(|&v| self.images[v as usize]).collect();
        Ok(Permutation { images })
    }

    /// The inverse map: `result[self(i)] = i`.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Multiset of cycle lengths of the functional digraph i → p(i).
    pub fn cycle_structure(&self) -> CycleStructure {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u8;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = self.images[i] as usize;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        CycleStructure { lengths }
    }
}

impl fmt::Display for Permutation {
    /// 1-based one-row form, space separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v as usize + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

/// Multiset of cycle lengths, stored sorted ascending. The lengths sum to
/// the degree of the permutation they came from.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleStructure {
    lengths: Vec<u8>,
}

impl CycleStructure {
    /// Builds a structure from raw lengths; sorts them, rejects zeros and
    /// empty input.
    pub fn from_lengths(mut lengths: Vec<u8>) -> Result<Self, Error> {
        if lengths.is_empty() || lengths.contains(&0) {
            return Err(Error::InvalidPermutation);
        }
        lengths.sort_unstable();
        Ok(CycleStructure { lengths })
    }

    /// Ascending cycle lengths.
    pub fn lengths(&self) -> &[u8] {
        &self.lengths
    }

    /// Sum of the lengths.
    pub fn degree(&self) -> usize {
        self.lengths.iter().map(|&l| l as usize).sum()
    }
}

impl fmt::Display for CycleStructure {
    /// Comma-separated lengths ascending, e.g. `"1,2,2"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &l) in self.lengths.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleStructure[{self}]")
    }
}

/// Advances `slice` to its next lexicographic arrangement in place.
/// Returns false (leaving the slice sorted) once the last one is passed.
pub(crate) fn next_arrangement(slice: &mut [u8]) -> bool {
    let n = slice.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && slice[i - 1] >= slice[i] {
        i -= 1;
    }
    if i == 0 {
        slice.reverse();
        return false;
    }
    let mut j = n - 1;
    while slice[j] <= slice[i - 1] {
        j -= 1;
    }
    slice.swap(i - 1, j);
    slice[i..].reverse();
    true
}

/// Iterator over all permutations of degree `n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        current: Permutation::identity(n).images,
        done: false,
    }
}

pub struct Permutations {
    current: Vec<u8>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation {
            images: self.current.clone(),
        };
        if !next_arrangement(&mut self.current) {
            self.done = true;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(text: &str) -> Permutation {
        Permutation::parse_one_row(text).unwrap()
    }

    #[test]
    fn compose_with_identity() {
        let a = p("2 3 1");
        assert_eq!(a.compose(&Permutation::identity(3)).unwrap(), a);
        assert_eq!(Permutation::identity(3).compose(&a).unwrap(), a);
    }

    #[test]
    fn compose_pointwise() {
        // (p·q)(i) = p(q(i)), evaluated for i = 1, 2, 3.
        let a = p("2 3 1");
        let b = p("2 1 3");
        assert_eq!(a.compose(&b).unwrap(), p("3 2 1"));
    }

    #[test]
    fn compose_inverse_is_identity() {
        for text in ["3 5 4 2 1", "2 3 4 5 1", "1 2 3 4 5"] {
            let a = p(text);
            assert!(a.compose(&a.inverse()).unwrap().is_identity());
            assert!(a.inverse().compose(&a).unwrap().is_identity());
        }
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = p("2 1");
        let b = p("2 3 1");
        assert_eq!(
            a.compose(&b),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn inverse_worked_example() {
        assert_eq!(p("3 5 4 2 1").inverse(), p("5 4 1 3 2"));
        assert_eq!(p("2 3 4 5 1").inverse(), p("5 1 2 3 4"));
        assert!(Permutation::identity(7).inverse().is_identity());
    }

    #[test]
    fn cycle_structure_examples() {
        assert_eq!(
            Permutation::identity(5).cycle_structure().lengths(),
            &[1, 1, 1, 1, 1]
        );
        assert_eq!(p("2 3 4 5 1").cycle_structure().lengths(), &[5]);
        assert_eq!(p("2 1 4 3 5").cycle_structure().lengths(), &[1, 2, 2]);
    }

    #[test]
    fn cycle_structure_display() {
        assert_eq!(p("2 1 4 3 5").cycle_structure().to_string(), "1,2,2");
    }

    #[test]
    fn parse_rejects_non_permutations() {
        assert!(Permutation::parse_one_row("1 1 2").is_err());
        assert!(Permutation::parse_one_row("0 1 2").is_err());
        assert!(Permutation::parse_one_row("1 2 4").is_err());
        assert!(Permutation::parse_one_row("").is_err());
        assert!(Permutation::parse_one_row("1 2 x").is_err());
    }

    #[test]
    fn display_round_trip() {
        let a = p("3 5 4 2 1");
        assert_eq!(a.to_string(), "3 5 4 2 1");
        assert_eq!(Permutation::parse_one_row(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn permutations_iterator_counts() {
        assert_eq!(permutations(1).count(), 1);
        assert_eq!(permutations(3).count(), 6);
        assert_eq!(permutations(4).count(), 24);
        // Lexicographically first and ascending.
        let all: Vec<_> = permutations(3).collect();
        assert!(all[0].is_identity());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn exhaustive_associativity_small_degrees() {
        for n in 1..=4 {
            let all: Vec<_> = permutations(n).collect();
            for a in &all {
                for b in &all {
                    for c in &all {
                        let left = a.compose(b).unwrap().compose(c).unwrap();
                        let right = a.compose(&b.compose(c).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }
}
