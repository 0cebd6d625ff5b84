//! Shared helpers for the integration tests.

use paratopy::{Isotopism, LatinSquare, Paratopism, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

/// A uniformly shuffled DFS fill: always terminates with a valid square.
pub fn random_square(rng: &mut impl Rng, n: usize) -> LatinSquare {
    assert!((1..=16).contains(&n));
    let mut cells = vec![0u8; n * n];
    let mut col_masks = vec![0u32; n];
    let mut row_masks = vec![0u32; n];
    let full = (1u32 << n) - 1;

    fn fill(
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
            if fill(k + 1, n, full, cells, col_masks, row_masks, rng) {
                return true;
            }
            col_masks[c] &= !bit;
            row_masks[r] &= !bit;
        }
        false
    }

    let ok = fill(0, n, full, &mut cells, &mut col_masks, &mut row_masks, rng);
    assert!(ok, "square fill must succeed");
    LatinSquare::try_new(n, cells).expect("fill produces a Latin square")
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<u8> = (0..n as u8).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

pub fn random_isotopism(rng: &mut impl Rng, n: usize) -> Isotopism {
    Isotopism::new(
        random_permutation(rng, n),
        random_permutation(rng, n),
        random_permutation(rng, n),
    )
    .unwrap()
}

pub fn random_paratopism(rng: &mut impl Rng, n: usize) -> Paratopism {
    let tag = paratopy::ConjugateTag::ALL[rng.gen_range(0..6)];
    Paratopism::new(random_isotopism(rng, n), tag)
}
