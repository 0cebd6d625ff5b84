//! Autoparatopism (stabilizer) groups of Latin squares.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::conjugate::ConjugateTag;
use crate::paratopism::Paratopism;
use crate::perm::{permutations, Permutation};
use crate::square::{Isotopism, LatinSquare};

/// The set of paratopisms fixing one square, stored as an explicit element
/// list. Closed under composition and inversion; contains the identity.
#[derive(Clone, Debug)]
pub struct StabilizerGroup {
    elements: Vec<Paratopism>,
}

impl StabilizerGroup {
    pub fn elements(&self) -> &[Paratopism] {
        &self.elements
    }

    /// Number of elements (the group order).
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Paratopism) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Computes the full autoparatopism group of a square: every paratopism P
/// with P(Y) = Y.
///
/// For each of the six tags η the search solves I(F_η(Y)) = Y for
/// isotopisms I directly: fixing which row of the conjugate lands on top and
/// which column permutation is used determines the symbol relabeling, and
/// the remaining rows must then match rows of Y exactly. The result is
/// verified to contain the identity and to be closed under composition and
/// inversion before it is returned.
pub fn autoparatopism_group(square: &LatinSquare) -> StabilizerGroup {
    let mut elements = Vec::new();
    for tag in ConjugateTag::ALL {
        let conjugated = square.conjugate(tag);
        for iso in isotopisms_onto(&conjugated, square) {
            elements.push(Paratopism::new(iso, tag));
        }
    }
    elements.sort_unstable();
    let group = StabilizerGroup { elements };
    verify_group(&group, square);
    group
}

/// All isotopisms I with I(from) = to. Degrees must match.
pub(crate) fn isotopisms_onto(from: &LatinSquare, to: &LatinSquare) -> Vec<Isotopism> {
    let n = from.order();
    assert_eq!(n, to.order(), "degree mismatch in isotopism search");

    let mut row_index: BTreeMap<&[u8], usize> = BTreeMap::new();
    for i in 0..n {
        row_index.insert(to.row_slice(i), i);
    }
    let target_first = to.row_slice(0);

    let all_cols: Vec<Permutation> = permutations(n).collect();
    let mut found = Vec::new();
    let mut gamma = alloc::vec![0u8; n];
    let mut transformed = alloc::vec![0u8; n];
    let mut row_map = alloc::vec![0u8; n];

    for source_row in 0..n {
        let src = from.row_slice(source_row);
        for col in &all_cols {
            // γ is forced by sending row `source_row` to the first row of
            // the target: γ(src[j]) = target_first[col(j)].
            for j in 0..n {
                gamma[src[j] as usize] = target_first[col.apply(j)];
            }
            let mut ok = true;
            for (t, slot) in row_map.iter_mut().enumerate() {
                let row = from.row_slice(t);
                for j in 0..n {
                    transformed[col.apply(j)] = gamma[row[j] as usize];
                }
                match row_index.get(transformed.as_slice()) {
                    Some(&u) => *slot = u as u8,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let iso = Isotopism::new(
                    Permutation::from_images(row_map.clone()).expect("rows map bijectively"),
                    col.clone(),
                    Permutation::from_images(gamma.clone()).expect("gamma is a relabeling"),
                )
                .expect("equal degrees");
                debug_assert_eq!(&iso.apply(from).unwrap(), to);
                found.push(iso);
            }
        }
    }
    found
}

fn verify_group(group: &StabilizerGroup, square: &LatinSquare) {
    let set: BTreeSet<&Paratopism> = group.elements.iter().collect();
    assert_eq!(set.len(), group.size(), "stabilizer elements must be distinct");
    assert!(
        set.contains(&Paratopism::identity(square.order())),
        "stabilizer must contain the identity"
    );
    for p in &group.elements {
        assert!(
            set.contains(&p.inverse()),
            "stabilizer must be closed under inversion"
        );
        for q in &group.elements {
            let c = p.compose(q).expect("equal degrees");
            assert!(
                set.contains(&c),
                "stabilizer must be closed under composition"
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paratopism::paratopism;
    use crate::testutil::{cyclic, sq};

    #[test]
    fn order_1_stabilizer_has_all_six_tags() {
        let y = LatinSquare::try_new(1, alloc::vec![0]).unwrap();
        let g = autoparatopism_group(&y);
        assert_eq!(g.size(), 6);
    }

    #[test]
    fn order_2_stabilizer_matches_exhaustive_scan() {
        let y = sq(&[&[1, 2], &[2, 1]]);
        let g = autoparatopism_group(&y);

        // Scan all 6·(2!)³ = 48 paratopisms and count the fixers.
        let perms: Vec<Permutation> = permutations(2).collect();
        let mut fixers = 0usize;
        for a in &perms {
            for b in &perms {
                for c in &perms {
                    for tag in ConjugateTag::ALL {
                        let p = paratopism(a.clone(), b.clone(), c.clone(), tag).unwrap();
                        if p.apply(&y).unwrap() == y {
                            fixers += 1;
                            assert!(g.contains(&p));
                        }
                    }
                }
            }
        }
        assert_eq!(fixers, 24);
        assert_eq!(g.size(), 24);
    }

    #[test]
    fn cyclic_order_3_matches_exhaustive_scan() {
        let y = cyclic(3);
        let g = autoparatopism_group(&y);
        let perms: Vec<Permutation> = permutations(3).collect();
        let mut fixers = 0usize;
        for a in &perms {
            for b in &perms {
                for c in &perms {
                    for tag in ConjugateTag::ALL {
                        let p = paratopism(a.clone(), b.clone(), c.clone(), tag).unwrap();
                        if p.apply(&y).unwrap() == y {
                            fixers += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(g.size(), fixers);
    }

    #[test]
    fn stabilizer_elements_fix_the_square() {
        let y = crate::testutil::symmetric_reduced_5();
        let g = autoparatopism_group(&y);
        for p in g.elements() {
            assert_eq!(p.apply(&y).unwrap(), y);
        }
        assert!(g.size() >= 1);
    }
}
