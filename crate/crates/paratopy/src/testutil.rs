//! Fixtures shared by the unit tests.

use alloc::vec::Vec;

use crate::square::LatinSquare;

/// Builds a square from 1-based rows, panicking on invalid input.
pub fn sq(rows: &[&[u8]]) -> LatinSquare {
    let n = rows.len();
    let mut cells = Vec::with_capacity(n * n);
    for row in rows {
        assert_eq!(row.len(), n);
        cells.extend(row.iter().map(|&v| v - 1));
    }
    LatinSquare::try_new(n, cells).expect("fixture must be a Latin square")
}

/// The cyclic square of order n: cell(i, j) = i + j (mod n).
pub fn cyclic(n: usize) -> LatinSquare {
    let cells = (0..n)
        .flat_map(|r| (0..n).map(move |c| ((r + c) % n) as u8))
        .collect();
    LatinSquare::try_new(n, cells).unwrap()
}

/// The reduced order-5 square used as a running example; symmetric, with
/// third row 3 5 4 2 1.
pub fn symmetric_reduced_5() -> LatinSquare {
    sq(&[
        &[1, 2, 3, 4, 5],
        &[2, 3, 5, 1, 4],
        &[3, 5, 4, 2, 1],
        &[4, 1, 2, 5, 3],
        &[5, 4, 1, 3, 2],
    ])
}

/// The Klein four-group table: every row pair composes to a double
/// transposition.
pub fn klein4() -> LatinSquare {
    sq(&[
        &[1, 2, 3, 4],
        &[2, 1, 4, 3],
        &[3, 4, 1, 2],
        &[4, 3, 2, 1],
    ])
}
