//! Backtracking enumeration of reduced Latin squares.
//!
//! Squares are built row by row with the first row and column fixed in
//! natural order, emitting completed squares in ascending row-major order.
//! Column bitmasks keep the extension test cheap.
//!
//! With pruning enabled the enumeration cuts rectangle prefixes that cannot
//! complete to the lexicographically smallest reduced member of their
//! isotopy class. The cut rests on one fact: from any two rows i, j of a
//! square one can reach, inside the isotopy class, a reduced square whose
//! second row is any permutation conjugate to the quotient of those rows.
//! The smallest such second row is the minimal one-row form of the
//! quotient's cycle structure, so a prefix whose pair quotients admit a
//! second row strictly below the current one is never class-minimal. Class
//! representatives of every kind are isotopy-class minima, hence the pruned
//! stream retains all of them.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::square::LatinSquare;

/// Worker partition for enumeration: worker `index` of `count` owns the
/// second rows whose rank (in lexicographic order) is congruent to `index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Partition {
    pub index: u64,
    pub count: u64,
}

impl Default for Partition {
    fn default() -> Self {
        Partition { index: 0, count: 1 }
    }
}

/// Options for [`reduced_squares`] and friends.
#[derive(Clone, Copy, Debug, Default)]
pub struct EnumOptions {
    /// Cut prefixes that cannot lead to class-minimal squares.
    pub pruning: bool,
    /// Opt-in for the long-running order 7 (16,942,080 squares).
    pub allow_order_7: bool,
    /// Second-row partition for parallel runs.
    pub partition: Partition,
}

pub(crate) fn order_gate(n: usize, allow_order_7: bool) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::OrderTooSmall { order: n, min: 1 });
    }
    if n > 7 || (n == 7 && !allow_order_7) {
        return Err(Error::OrderUnsupported { order: n });
    }
    Ok(())
}

/// Streams every reduced Latin square of order `n` exactly once, in
/// ascending row-major order, and returns how many were emitted. With
/// `pruning` enabled only prefixes that can still reach a class-minimal
/// square are extended, so the stream shrinks to a superset of all class
/// representatives.
pub fn reduced_squares<F>(n: usize, opts: &EnumOptions, mut sink: F) -> Result<u64, Error>
where
    F: FnMut(&LatinSquare),
{
    enumerate_raw(n, opts, |cells| {
        sink(&LatinSquare::new_unchecked(n, cells.to_vec()))
    })
}

/// [`reduced_squares`] without materializing squares; returns the count.
pub fn count_reduced(n: usize, opts: &EnumOptions) -> Result<u64, Error> {
    enumerate_raw(n, opts, |_| {})
}

/// All reduced squares of a small order, collected. Panics above order 6;
/// use [`reduced_squares`] for the gated orders.
pub fn all_reduced(n: usize) -> Vec<LatinSquare> {
    assert!((1..=6).contains(&n), "all_reduced is for orders 1..=6");
    let mut out = Vec::new();
    reduced_squares(n, &EnumOptions::default(), |sq| out.push(sq.clone())).unwrap();
    out
}

pub(crate) fn enumerate_raw<F>(n: usize, opts: &EnumOptions, sink: F) -> Result<u64, Error>
where
    F: FnMut(&[u8]),
{
    order_gate(n, opts.allow_order_7)?;
    let part = opts.partition;
    assert!(part.count >= 1 && part.index < part.count, "bad partition");

    if n == 1 {
        let mut sink = sink;
        if part.index == 0 {
            sink(&[0]);
            return Ok(1);
        }
        return Ok(0);
    }

    let mut bt = Backtracker {
        n,
        pruning: opts.pruning,
        part,
        cells: vec![0u8; n * n],
        col_masks: vec![0u32; n],
        second_row_rank: 0,
        keys: BTreeMap::new(),
        quotient: vec![0u8; n],
        count: 0,
        sink,
    };
    for c in 0..n {
        bt.cells[c] = c as u8;
        bt.col_masks[c] = 1 << c;
    }
    bt.extend_row(1);
    Ok(bt.count)
}

struct Backtracker<F: FnMut(&[u8])> {
    n: usize,
    pruning: bool,
    part: Partition,
    cells: Vec<u8>,
    col_masks: Vec<u32>,
    second_row_rank: u64,
    /// Cycle structure → minimal one-row form of that structure.
    keys: BTreeMap<Vec<u8>, Vec<u8>>,
    quotient: Vec<u8>,
    count: u64,
    sink: F,
}

impl<F: FnMut(&[u8])> Backtracker<F> {
    fn extend_row(&mut self, r: usize) {
        let n = self.n;
        if r == n {
            (self.sink)(&self.cells);
            self.count += 1;
            return;
        }
        // First column is natural: cell (r, 0) = r.
        if self.col_masks[0] & (1 << r) != 0 {
            return;
        }
        self.cells[r * n] = r as u8;
        self.col_masks[0] |= 1 << r;
        let row_mask = 1u32 << r;
        self.fill_cell(r, 1, row_mask);
        self.col_masks[0] &= !(1 << r);
    }

    fn fill_cell(&mut self, r: usize, c: usize, row_mask: u32) {
        let n = self.n;
        if c == n {
            self.row_complete(r);
            return;
        }
        let full = (1u32 << n) - 1;
        let mut avail = full & !(row_mask | self.col_masks[c]);
        while avail != 0 {
            let s = avail.trailing_zeros() as usize;
            let bit = 1u32 << s;
            avail &= !bit;
            self.cells[r * n + c] = s as u8;
            self.col_masks[c] |= bit;
            self.fill_cell(r, c + 1, row_mask | bit);
            self.col_masks[c] &= !bit;
        }
    }

    fn row_complete(&mut self, r: usize) {
        if r == 1 {
            // The partition rank counts every valid second row, before any
            // pruning, so worker splits are stable across modes.
            let rank = self.second_row_rank;
            self.second_row_rank += 1;
            if rank % self.part.count != self.part.index {
                return;
            }
        }
        if self.pruning && !self.prefix_can_be_minimal(r) {
            return;
        }
        self.extend_row(r + 1);
    }

    /// Checks the quotients of the newly finished row `r` against every
    /// earlier row: if some pair admits a second row strictly below the
    /// current one, no extension of this prefix is class-minimal.
    fn prefix_can_be_minimal(&mut self, r: usize) -> bool {
        let n = self.n;
        for i in 0..r {
            for p in 0..n {
                let x = self.cells[i * n + p] as usize;
                self.quotient[x] = self.cells[r * n + p];
            }
            let structure = cycle_lengths(&self.quotient);
            let second_row = &self.cells[n..2 * n];
            let key = self
                .keys
                .entry(structure.clone())
                .or_insert_with(|| minimal_one_row_form(&structure));
            if key.as_slice() < second_row {
                return false;
            }
        }
        true
    }
}

/// Sorted cycle lengths of a permutation given as 0-based images.
fn cycle_lengths(images: &[u8]) -> Vec<u8> {
    let n = images.len();
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
            i = images[i] as usize;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}

/// The lexicographically smallest permutation (0-based images) with the
/// given sorted cycle lengths: consecutive blocks, shortest cycles first,
/// each block cycling upward.
pub(crate) fn minimal_one_row_form(lengths: &[u8]) -> Vec<u8> {
    let n: usize = lengths.iter().map(|&l| l as usize).sum();
    let mut images = vec![0u8; n];
    let mut start = 0usize;
    for &l in lengths {
        let l = l as usize;
        for t in 0..l - 1 {
            images[start + t] = (start + t + 1) as u8;
        }
        images[start + l - 1] = start as u8;
        start += l;
    }
    images
}
