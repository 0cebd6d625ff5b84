//! Independent reference implementations used by `verify` and the
//! acceptance suite. Each deliberately avoids the code path it checks:
//! isotopisms are applied by moving cells one at a time, reduced squares are
//! counted by filtering or by a column-major search, and class partitions
//! are rebuilt as orbits in the space of all squares.

use std::collections::{HashMap, HashSet, VecDeque};

use paratopy::{
    permutations, ClassKind, ConjugateTag, Isotopism, LatinSquare, Paratopism, Permutation,
};

/// Applies an isotopism cell by cell: γ(cell) lands at (α(i), β(j)).
pub fn naive_apply_isotopism(iso: &Isotopism, square: &LatinSquare) -> LatinSquare {
    let n = square.order();
    assert_eq!(iso.degree(), n);
    let mut cells = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            let sym = iso.sym().apply(square.get(i, j)) as u8;
            cells[iso.row().apply(i) * n + iso.col().apply(j)] = sym;
        }
    }
    LatinSquare::try_new(n, cells).expect("isotopism preserves the Latin property")
}

/// Counts reduced squares by brute force, for tiny orders only: every
/// n^(n²) grid is generated and filtered.
pub fn reduced_count_by_grid_filter(n: usize) -> u64 {
    assert!((1..=3).contains(&n), "grid filter explodes past order 3");
    let total = (n as u64 * n as u64) as u32;
    let mut count = 0u64;
    let mut grid = vec![0u8; n * n];
    let mut k = 0u64;
    let limit = (n as u64).pow(total);
    while k < limit {
        let mut v = k;
        for cell in grid.iter_mut() {
            *cell = (v % n as u64) as u8;
            v /= n as u64;
        }
        if is_latin_and_reduced(n, &grid) {
            count += 1;
        }
        k += 1;
    }
    count
}

/// Counts reduced squares by choosing each row from the n! permutations and
/// filtering on columns; independent of the cell-level backtracker.
/// Feasible through order 4 (24⁴ row tuples).
pub fn reduced_count_by_row_tuples(n: usize) -> u64 {
    assert!((1..=4).contains(&n), "row tuples explode past order 4");
    let perms: Vec<Vec<u8>> = permutations(n).map(|p| p.images().to_vec()).collect();
    let mut rows: Vec<usize> = vec![0; n];
    let mut count = 0u64;
    // Row 0 is the identity (index 0 in lexicographic order).
    count_rows(n, &perms, &mut rows, 1, &mut count);
    count
}

fn count_rows(n: usize, perms: &[Vec<u8>], rows: &mut Vec<usize>, depth: usize, count: &mut u64) {
    if depth == n {
        *count += 1;
        return;
    }
    'next: for (idx, candidate) in perms.iter().enumerate() {
        // First column natural.
        if candidate[0] as usize != depth {
            continue;
        }
        for &earlier in rows[..depth].iter() {
            let prev = &perms[earlier];
            for c in 0..n {
                if prev[c] == candidate[c] {
                    continue 'next;
                }
            }
        }
        rows[depth] = idx;
        count_rows(n, perms, rows, depth + 1, count);
    }
}

fn is_latin_and_reduced(n: usize, grid: &[u8]) -> bool {
    for i in 0..n {
        if grid[i] != i as u8 || grid[i * n] != i as u8 {
            return false;
        }
    }
    for r in 0..n {
        for c in 0..n {
            for c2 in c + 1..n {
                if grid[r * n + c] == grid[r * n + c2] {
                    return false;
                }
            }
            for r2 in r + 1..n {
                if grid[r * n + c] == grid[r2 * n + c] {
                    return false;
                }
            }
        }
    }
    true
}

/// Counts reduced squares with a column-major backtracker: cells are filled
/// down each column in turn, the opposite order from the row-major
/// enumerator in the library.
pub fn reduced_count_column_major(n: usize) -> u64 {
    assert!((1..=6).contains(&n));
    if n == 1 {
        return 1;
    }
    let mut cells = vec![0u8; n * n];
    let mut row_masks = vec![0u32; n];
    let mut col_masks = vec![0u32; n];
    // First column and first row fixed natural.
    for i in 0..n {
        cells[i * n] = i as u8;
        row_masks[i] |= 1 << i;
        col_masks[0] |= 1 << i;
        cells[i] = i as u8;
        col_masks[i] |= 1 << i;
        row_masks[0] |= 1 << i;
    }
    let mut count = 0u64;
    fill_column_major(n, 1, 1, &mut cells, &mut row_masks, &mut col_masks, &mut count);
    count
}

fn fill_column_major(
    n: usize,
    c: usize,
    r: usize,
    cells: &mut [u8],
    row_masks: &mut [u32],
    col_masks: &mut [u32],
    count: &mut u64,
) {
    if c == n {
        *count += 1;
        return;
    }
    let (next_c, next_r) = if r + 1 == n { (c + 1, 1) } else { (c, r + 1) };
    let full = (1u32 << n) - 1;
    let mut avail = full & !(row_masks[r] | col_masks[c]);
    while avail != 0 {
        let s = avail.trailing_zeros() as usize;
        let bit = 1u32 << s;
        avail &= !bit;
        cells[r * n + c] = s as u8;
        row_masks[r] |= bit;
        col_masks[c] |= bit;
        fill_column_major(n, next_c, next_r, cells, row_masks, col_masks, count);
        row_masks[r] &= !bit;
        col_masks[c] &= !bit;
    }
}

/// Generating paratopisms: transposition and full cycle on each of the
/// three components, plus the two generating tags.
fn paratopism_generators(n: usize) -> Vec<Paratopism> {
    let mut gens = vec![
        Paratopism::from_tag(n, ConjugateTag::Cre),
        Paratopism::from_tag(n, ConjugateTag::Rec),
    ];
    if n >= 2 {
        let id = Permutation::identity(n);
        let mut swap_img: Vec<u8> = (0..n as u8).collect();
        swap_img.swap(0, 1);
        let swap = Permutation::from_images(swap_img).unwrap();
        let cycle_img: Vec<u8> = (1..n as u8).chain([0]).collect();
        let cycle = Permutation::from_images(cycle_img).unwrap();
        for p in [swap, cycle] {
            gens.push(Paratopism::from_isotopism(
                Isotopism::new(p.clone(), id.clone(), id.clone()).unwrap(),
            ));
            gens.push(Paratopism::from_isotopism(
                Isotopism::new(id.clone(), p.clone(), id.clone()).unwrap(),
            ));
            gens.push(Paratopism::from_isotopism(
                Isotopism::new(id.clone(), id.clone(), p.clone()).unwrap(),
            ));
        }
    }
    gens
}

fn isotopism_generators(n: usize) -> Vec<Paratopism> {
    paratopism_generators(n)
        .into_iter()
        .filter(|p| p.tag().is_identity())
        .collect()
}

fn kind_generators(n: usize, kind: ClassKind) -> Vec<Paratopism> {
    let mut gens = isotopism_generators(n);
    match kind {
        ClassKind::Isotopy => {}
        ClassKind::Type => gens.push(Paratopism::from_tag(n, ConjugateTag::Cre)),
        ClassKind::InverseType => gens.push(Paratopism::from_tag(n, ConjugateTag::Rec)),
        ClassKind::MainClass => {
            gens.push(Paratopism::from_tag(n, ConjugateTag::Cre));
            gens.push(Paratopism::from_tag(n, ConjugateTag::Rec));
        }
    }
    gens
}

/// Breadth-first orbit of a square under the full paratopism group, in the
/// space of all (not necessarily reduced) squares.
pub fn paratopism_orbit(square: &LatinSquare) -> HashSet<LatinSquare> {
    orbit(square, &paratopism_generators(square.order()))
}

/// Every Latin square of order n, generated by pushing all row and column
/// permutations through the reduced squares. Feasible through order 5.
pub fn all_squares(n: usize) -> HashSet<LatinSquare> {
    assert!((1..=5).contains(&n));
    let id = Permutation::identity(n);
    let mut out = HashSet::new();
    let mut reduced = Vec::new();
    paratopy::reduced_squares(n, &paratopy::EnumOptions::default(), |sq| {
        reduced.push(sq.clone())
    })
    .unwrap();
    for base in &reduced {
        for alpha in permutations(n) {
            let rowed = Isotopism::new(alpha, id.clone(), id.clone())
                .unwrap()
                .apply(base)
                .unwrap();
            for beta in permutations(n) {
                let full = Isotopism::new(id.clone(), beta, id.clone())
                    .unwrap()
                    .apply(&rowed)
                    .unwrap();
                out.insert(full);
            }
        }
    }
    out
}

fn orbit(square: &LatinSquare, gens: &[Paratopism]) -> HashSet<LatinSquare> {
    let mut seen: HashSet<LatinSquare> = HashSet::new();
    let mut queue: VecDeque<LatinSquare> = VecDeque::new();
    seen.insert(square.clone());
    queue.push_back(square.clone());
    while let Some(current) = queue.pop_front() {
        for g in gens {
            let next = g.apply(&current).expect("equal degrees");
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// A reference classification: BFS orbits in the space of all squares,
/// restricted to reduced members at the end. Independent of the library's
/// expansion-based partition. Feasible through order 5.
pub fn classify_by_raw_orbits(n: usize, kind: ClassKind) -> Vec<(LatinSquare, u64)> {
    assert!((1..=5).contains(&n));
    let gens = kind_generators(n, kind);
    let mut reduced: Vec<LatinSquare> = Vec::new();
    paratopy::reduced_squares(n, &paratopy::EnumOptions::default(), |sq| {
        reduced.push(sq.clone())
    })
    .unwrap();
    let mut assigned: HashMap<LatinSquare, usize> = HashMap::new();
    let mut classes: Vec<(LatinSquare, u64)> = Vec::new();
    for sq in &reduced {
        if assigned.contains_key(sq) {
            continue;
        }
        let class_id = classes.len();
        let members = orbit(sq, &gens);
        let mut reduced_members: Vec<&LatinSquare> =
            members.iter().filter(|m| m.is_reduced()).collect();
        reduced_members.sort();
        for m in &reduced_members {
            assigned.insert((*m).clone(), class_id);
        }
        classes.push((
            reduced_members[0].clone(),
            reduced_members.len() as u64,
        ));
    }
    classes.sort_by(|a, b| a.0.cmp(&b.0));
    classes
}
