//! Seeded random generation of squares, isotopisms, and paratopisms.
//!
//! ChaCha with a fixed seed keeps every run reproducible byte for byte;
//! seed 0 is the default everywhere.

use paratopy::{ConjugateTag, Isotopism, LatinSquare, Paratopism, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random Latin square: depth-first fill with shuffled symbol choices.
/// Always terminates (the search is exhaustive under the shuffle).
pub fn random_square(rng: &mut impl Rng, n: usize) -> LatinSquare {
    assert!((1..=16).contains(&n), "random squares are for small orders");
    let mut cells = vec![0u8; n * n];
    let mut col_masks = vec![0u32; n];
    let mut row_masks = vec![0u32; n];
    let full = (1u32 << n) - 1;
    let ok = fill_cell(0, n, full, &mut cells, &mut col_masks, &mut row_masks, rng);
    debug_assert!(ok);
    LatinSquare::try_new(n, cells).expect("fill produces a Latin square")
}

fn fill_cell(
    k: usize,
    n: usize,
    full: u32,
    cells: &mut [u8],
    col_masks: &mut [u32],
    row_masks: &mut [u32],
    rng: &mut impl Rng,
) -> bool {
    if k == n * n {
        return true;
    }
    let (r, c) = (k / n, k % n);
    let avail = full & !(col_masks[c] | row_masks[r]);
    let mut symbols: Vec<u8> = (0..n as u8).filter(|&s| avail & (1 << s) != 0).collect();
    symbols.shuffle(rng);
    for s in symbols {
        let bit = 1u32 << s;
        cells[k] = s;
        col_masks[c] |= bit;
        row_masks[r] |= bit;
        if fill_cell(k + 1, n, full, cells, col_masks, row_masks, rng) {
            return true;
        }
        col_masks[c] &= !bit;
        row_masks[r] &= !bit;
    }
    false
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<u8> = (0..n as u8).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffle keeps bijectivity")
}

pub fn random_isotopism(rng: &mut impl Rng, n: usize) -> Isotopism {
    Isotopism::new(
        random_permutation(rng, n),
        random_permutation(rng, n),
        random_permutation(rng, n),
    )
    .expect("equal degrees")
}

pub fn random_tag(rng: &mut impl Rng) -> ConjugateTag {
    ConjugateTag::ALL[rng.gen_range(0..6)]
}

pub fn random_paratopism(rng: &mut impl Rng, n: usize) -> Paratopism {
    Paratopism::new(random_isotopism(rng, n), random_tag(rng))
}
