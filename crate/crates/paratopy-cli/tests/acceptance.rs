//! Acceptance suite: each test is one criterion, asserted exactly at its
//! stated tolerance and time budget. The harness output gives one pass/fail
//! line per criterion; run with `--nocapture` to see the measured values.
//!
//! Criterion 10 (the order-7 campaign) is `#[ignore]`d because it takes
//! minutes; run it explicitly in release mode:
//! `cargo test --release -p paratopy-cli --test acceptance -- --ignored`.

use std::collections::HashMap;
use std::time::Instant;

use paratopy::{
    autoparatopism_group, classify, count_reduced, isotopy_class_reduced, pair_signature,
    swap_conjugate_isotopism, ClassKind, Classification, ConjugateTag, EnumOptions, Isotopism,
    LatinSquare, OrthogonalArray, Permutation, SwapSide,
};
use paratopy_cli::oracle::{
    classify_by_raw_orbits, naive_apply_isotopism, paratopism_orbit,
    reduced_count_by_grid_filter, reduced_count_by_row_tuples, reduced_count_column_major,
};
use paratopy_cli::random::{
    random_isotopism, random_paratopism, random_permutation, random_square, seeded_rng,
};

fn cyclic(n: usize) -> LatinSquare {
    let cells = (0..n)
        .flat_map(|r| (0..n).map(move |c| ((r + c) % n) as u8))
        .collect();
    LatinSquare::try_new(n, cells).unwrap()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Criterion 1: for 1000 random squares per order 3..=8 and all six tags,
/// the direct conjugate equals the orthogonal-array route cell for cell.
#[test]
fn criterion_01_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = seeded_rng(0);
    let mut checks = 0u64;
    for n in 3..=8 {
        for _ in 0..1000 {
            let sq = random_square(&mut rng, n);
            for tag in ConjugateTag::ALL {
                assert_eq!(
                    sq.conjugate(tag),
                    sq.conjugate_via_oa(tag),
                    "order {n} tag {tag}"
                );
                checks += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 1: {checks} equivalences checked in {elapsed:.2?}");
    assert_eq!(checks, 6000 * 6);
    assert!(elapsed.as_secs() < 10, "budget 10 s, took {elapsed:?}");
}

/// Criterion 2: worked-example fidelity — the orthogonal array of the
/// cyclic order-5 square, the row-inverse worked example, and the transpose
/// conjugate on 100 random squares.
#[test]
fn criterion_02_worked_example_fidelity() {
    // The 3×25 array exactly as displayed: first row blocks of equal row
    // indices, second row cycling 1..5, third row the square's rows.
    let a1 = cyclic(5);
    let v1 = OrthogonalArray::from_square(&a1);
    #[rustfmt::skip]
    let expected: [[u8; 25]; 3] = [
        [1,1,1,1,1, 2,2,2,2,2, 3,3,3,3,3, 4,4,4,4,4, 5,5,5,5,5],
        [1,2,3,4,5, 1,2,3,4,5, 1,2,3,4,5, 1,2,3,4,5, 1,2,3,4,5],
        [1,2,3,4,5, 2,3,4,5,1, 3,4,5,1,2, 4,5,1,2,3, 5,1,2,3,4],
    ];
    for (k, t) in v1.triples().iter().enumerate() {
        for comp in 0..3 {
            assert_eq!(t[comp] + 1, expected[comp][k], "component {comp} column {k}");
        }
    }

    let p = Permutation::parse_one_row("3 5 4 2 1").unwrap();
    assert_eq!(p.inverse(), Permutation::parse_one_row("5 4 1 3 2").unwrap());

    let mut rng = seeded_rng(0);
    for _ in 0..100 {
        let n = 3 + (rng_usize(&mut rng) % 6); // orders 3..=8
        let sq = random_square(&mut rng, n);
        assert_eq!(sq.conjugate(ConjugateTag::Cre), sq.transpose());
    }
    println!("criterion 2: array display, row inverse, and 100 transposes exact");
}

fn rng_usize(rng: &mut impl rand::Rng) -> usize {
    rng.gen_range(0..usize::MAX)
}

/// Criterion 3: the composition law F_a ∘ F_b = F_ab for all 36 tag pairs
/// on 100 random squares per order 3..=6.
#[test]
fn criterion_03_conjugate_composition_law() {
    let mut rng = seeded_rng(0);
    let mut checks = 0u64;
    for n in 3..=6 {
        for _ in 0..100 {
            let sq = random_square(&mut rng, n);
            for t1 in ConjugateTag::ALL {
                for t2 in ConjugateTag::ALL {
                    assert_eq!(
                        sq.conjugate(t2).conjugate(t1),
                        sq.conjugate(t1.compose(t2)),
                        "order {n}: {t1} after {t2}"
                    );
                    checks += 1;
                }
            }
        }
    }
    println!("criterion 3: {checks} composition identities exact");
    assert_eq!(checks, 4 * 100 * 36);
}

/// Criterion 4: the swap law in both directions plus the nine
/// single-component relations, applied to 100 random inputs per tag and
/// order 3..=6.
#[test]
fn criterion_04_swap_relations() {
    let mut rng = seeded_rng(0);
    let mut checks = 0u64;
    for n in 3..=6 {
        for tag in ConjugateTag::ALL {
            for _ in 0..100 {
                let sq = random_square(&mut rng, n);
                let iso = random_isotopism(&mut rng, n);
                // I ∘ F_tag = F_tag ∘ I′ with I′ indexed by tag.
                let right = swap_conjugate_isotopism(tag, &iso, SwapSide::Right);
                assert_eq!(
                    iso.apply(&sq.conjugate(tag)).unwrap(),
                    right.apply(&sq).unwrap().conjugate(tag),
                    "right swap, order {n} tag {tag}"
                );
                // F_tag ∘ I = I″ ∘ F_tag with I″ indexed by tag inverse.
                let left = swap_conjugate_isotopism(tag, &iso, SwapSide::Left);
                assert_eq!(
                    iso.apply(&sq).unwrap().conjugate(tag),
                    left.apply(&sq.conjugate(tag)).unwrap(),
                    "left swap, order {n} tag {tag}"
                );
                checks += 2;
            }
        }
    }

    // The single-component table: row/column/symbol permutations moved past
    // each involution tag.
    use ConjugateTag::*;
    for n in 3..=6 {
        for _ in 0..100 {
            let sq = random_square(&mut rng, n);
            let p = random_permutation(&mut rng, n);
            let id = Permutation::identity(n);
            let as_row = Isotopism::new(p.clone(), id.clone(), id.clone()).unwrap();
            let as_col = Isotopism::new(id.clone(), p.clone(), id.clone()).unwrap();
            let as_sym = Isotopism::new(id.clone(), id.clone(), p.clone()).unwrap();
            let table: [(&Isotopism, ConjugateTag, &Isotopism); 9] = [
                (&as_row, Cre, &as_col),
                (&as_col, Cre, &as_row),
                (&as_sym, Cre, &as_sym),
                (&as_row, Rec, &as_row),
                (&as_col, Rec, &as_sym),
                (&as_sym, Rec, &as_col),
                (&as_row, Ecr, &as_sym),
                (&as_col, Ecr, &as_col),
                (&as_sym, Ecr, &as_row),
            ];
            for (lhs, tag, rhs) in table {
                assert_eq!(
                    lhs.apply(&sq.conjugate(tag)).unwrap(),
                    rhs.apply(&sq).unwrap().conjugate(tag),
                    "component relation past {tag} at order {n}"
                );
                checks += 1;
            }
        }
    }
    println!("criterion 4: {checks} swap identities exact");
}

/// Companion to criteria 4 and 5: the closed isotopism formula agrees with
/// naive cell-by-cell application on 1000 random pairs per order 3..=7.
#[test]
fn isotopism_formula_matches_naive_route() {
    let mut rng = seeded_rng(0);
    for n in 3..=7usize {
        for _ in 0..1000 {
            let sq = random_square(&mut rng, n);
            let iso = random_isotopism(&mut rng, n);
            assert_eq!(
                iso.apply(&sq).unwrap(),
                naive_apply_isotopism(&iso, &sq),
                "order {n}"
            );
        }
    }
    println!("isotopism formula: 5000 dual-route checks exact");
}

/// Criterion 5: composed paratopisms act like sequential application on
/// 10⁴ random triples at order 5, and 10³ random paratopisms cancel
/// against their inverses.
#[test]
fn criterion_05_paratopism_composition_law() {
    let start = Instant::now();
    let mut rng = seeded_rng(0);
    for _ in 0..10_000 {
        let sq = random_square(&mut rng, 5);
        let p = random_paratopism(&mut rng, 5);
        let q = random_paratopism(&mut rng, 5);
        assert_eq!(
            p.compose(&q).unwrap().apply(&sq).unwrap(),
            p.apply(&q.apply(&sq).unwrap()).unwrap()
        );
    }
    for _ in 0..1_000 {
        let p = random_paratopism(&mut rng, 6);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }
    let elapsed = start.elapsed();
    println!("criterion 5: 10^4 composition triples and 10^3 inverses exact in {elapsed:.2?}");
    assert!(elapsed.as_secs() < 30, "budget 30 s, took {elapsed:?}");
}

/// Criterion 6: reduced counts 1, 1, 1, 4, 56, 9408 for orders 1..=6, each
/// confirmed by two independent implementations.
#[test]
fn criterion_06_enumeration_counts() {
    let start = Instant::now();
    let expected = [1u64, 1, 1, 4, 56, 9408];
    let opts = EnumOptions::default();
    for (n, &want) in (1..=6).zip(&expected) {
        let backtracking = count_reduced(n, &opts).unwrap();
        let independent = match n {
            1..=3 => reduced_count_by_grid_filter(n),
            4 => reduced_count_by_row_tuples(n),
            _ => reduced_count_column_major(n),
        };
        assert_eq!(backtracking, want, "order {n} backtracking");
        assert_eq!(independent, want, "order {n} independent oracle");
    }
    // Counting consistency: n!·(n-1)!·R(n) equals the number of all
    // squares, checked by explicit generation for n ≤ 4.
    for n in 1..=4usize {
        let all = paratopy_cli::oracle::all_squares(n);
        assert_eq!(
            all.len() as u64,
            factorial(n) * factorial(n - 1) * expected[n - 1],
            "total squares of order {n}"
        );
    }
    let elapsed = start.elapsed();
    println!("criterion 6: dual-oracle counts exact in {elapsed:.2?}");
    assert!(elapsed.as_secs() < 10, "budget 10 s, took {elapsed:?}");
}

/// Membership map: square → class index under the given classification.
fn membership(c: &Classification) -> HashMap<LatinSquare, usize> {
    let mut map = HashMap::new();
    for (idx, info) in c.classes.iter().enumerate() {
        for tag in c.kind.tags() {
            for member in isotopy_class_reduced(&info.representative.conjugate(*tag)) {
                let prev = map.insert(member, idx);
                assert!(
                    prev.is_none() || prev == Some(idx),
                    "classes must not overlap"
                );
            }
        }
    }
    map
}

/// Criterion 7: classification self-consistency for orders up to 6 — sizes
/// sum to the reduced count, classes nest (isotopy ⊆ type/inverse-type ⊆
/// main class), results are identical with pruning on and off, and the
/// orbit-stabilizer sum reproduces the total number of squares for every
/// kind.
#[test]
fn criterion_07_classification_consistency() {
    let start = Instant::now();
    let reduced_counts = [1u64, 1, 1, 4, 56, 9408];
    let plain = EnumOptions::default();
    let pruned = EnumOptions {
        pruning: true,
        ..EnumOptions::default()
    };

    // Known class counts: orders 1..6.
    let expect_isotopy = [1usize, 1, 1, 2, 2, 22];
    let expect_main = [1usize, 1, 1, 2, 2, 12];

    for n in 1..=6usize {
        let mut results: HashMap<ClassKind, Classification> = HashMap::new();
        for kind in ClassKind::ALL {
            let a = classify(n, kind, &plain).unwrap();
            let b = classify(n, kind, &pruned).unwrap();
            assert_eq!(a.class_count(), b.class_count(), "order {n} kind {kind}");
            for (x, y) in a.classes.iter().zip(&b.classes) {
                assert_eq!(x.representative, y.representative, "order {n} kind {kind}");
                assert_eq!(x.size, y.size, "order {n} kind {kind}");
            }
            assert_eq!(
                a.total_reduced(),
                reduced_counts[n - 1],
                "order {n} kind {kind}: sizes must cover all reduced squares"
            );
            results.insert(kind, a);
        }
        assert_eq!(results[&ClassKind::Isotopy].class_count(), expect_isotopy[n - 1]);
        assert_eq!(results[&ClassKind::MainClass].class_count(), expect_main[n - 1]);

        // Refinement: squares sharing an isotopy class share every coarser
        // class; types and inverse types refine main classes.
        let iso_map = membership(&results[&ClassKind::Isotopy]);
        let type_map = membership(&results[&ClassKind::Type]);
        let inv_map = membership(&results[&ClassKind::InverseType]);
        let main_map = membership(&results[&ClassKind::MainClass]);
        assert_eq!(iso_map.len() as u64, reduced_counts[n - 1]);
        for (sq, &iso_id) in &iso_map {
            let rep = &results[&ClassKind::Isotopy].classes[iso_id].representative;
            assert_eq!(type_map[sq], type_map[rep], "type splits an isotopy class");
            assert_eq!(inv_map[sq], inv_map[rep], "inverse type splits an isotopy class");
            assert_eq!(main_map[sq], main_map[rep], "main class splits an isotopy class");
        }
        for (sq, &type_id) in &type_map {
            let rep = &results[&ClassKind::Type].classes[type_id].representative;
            assert_eq!(main_map[sq], main_map[rep], "main class splits a type");
        }
        for (sq, &inv_id) in &inv_map {
            let rep = &results[&ClassKind::InverseType].classes[inv_id].representative;
            assert_eq!(main_map[sq], main_map[rep], "main class splits an inverse type");
        }

        // Orbit-stabilizer sum: for each kind, the orbit sizes |G|/|stab|
        // add up to the number of all squares of order n.
        let total_squares = factorial(n) * factorial(n - 1) * reduced_counts[n - 1];
        let iso_group_order = factorial(n).pow(3);
        for kind in ClassKind::ALL {
            let group_order = iso_group_order * kind.tags().len() as u64;
            let mut sum = 0u64;
            for info in &results[&kind].classes {
                let stab = autoparatopism_group(&info.representative);
                let in_kind = stab
                    .elements()
                    .iter()
                    .filter(|p| kind.tags().contains(&p.tag()))
                    .count() as u64;
                assert_eq!(group_order % in_kind, 0, "Lagrange at order {n} kind {kind}");
                sum += group_order / in_kind;
            }
            assert_eq!(sum, total_squares, "orbit sum at order {n} kind {kind}");
        }

        // Cross-check the whole partition against the raw-orbit oracle.
        if n <= 5 {
            for kind in ClassKind::ALL {
                let oracle = classify_by_raw_orbits(n, kind);
                let ours = &results[&kind];
                assert_eq!(oracle.len(), ours.class_count());
                for ((rep, size), info) in oracle.iter().zip(&ours.classes) {
                    assert_eq!(rep, &info.representative, "order {n} kind {kind}");
                    assert_eq!(*size, info.size, "order {n} kind {kind}");
                }
            }
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 7: partitions consistent for orders 1..=6 in {elapsed:.2?}");
    assert!(elapsed.as_secs() < 600, "budget 10 min, took {elapsed:?}");
}

/// Criterion 8: for every main-class representative at orders 1..=5, the
/// explicitly generated paratopism orbit times the stabilizer order equals
/// 6(n!)³.
#[test]
fn criterion_08_orbit_stabilizer_identity() {
    let start = Instant::now();
    let opts = EnumOptions::default();
    for n in 1..=5usize {
        let group_order = 6 * factorial(n).pow(3);
        let classification = classify(n, ClassKind::MainClass, &opts).unwrap();
        for info in &classification.classes {
            let orbit = paratopism_orbit(&info.representative);
            let stab = autoparatopism_group(&info.representative);
            assert_eq!(
                orbit.len() as u64 * stab.size() as u64,
                group_order,
                "order {n}: |orbit| {} × |stab| {}",
                orbit.len(),
                stab.size()
            );
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 8: orbit-stabilizer identity exact for orders 1..=5 in {elapsed:.2?}");
    assert!(elapsed.as_secs() < 300, "budget 5 min, took {elapsed:?}");
}

/// Criterion 9: the pair signature is unchanged by 10³ random isotopisms
/// per order 3..=7 and by the row-inverse conjugate.
#[test]
fn criterion_09_signature_invariance() {
    let mut rng = seeded_rng(0);
    for n in 3..=7usize {
        for _ in 0..1000 {
            let sq = random_square(&mut rng, n);
            let base = pair_signature(&sq).unwrap();
            let iso = random_isotopism(&mut rng, n);
            assert_eq!(
                pair_signature(&iso.apply(&sq).unwrap()).unwrap(),
                base,
                "isotopism changed the signature at order {n}"
            );
            assert_eq!(
                pair_signature(&sq.conjugate(ConjugateTag::Rec)).unwrap(),
                base,
                "row inversion changed the signature at order {n}"
            );
        }
    }
    println!("criterion 9: signature invariant under 5000 isotopisms and row inversions");
}

/// Criterion 10 (long-running, opt-in): the order-7 stream counts
/// 16,942,080 reduced squares, and the measured pruning-rejection fraction
/// is reported next to the literature figure of "more than 96.4%" for
/// comparison (reported, not asserted — the exact filter battery differs).
#[test]
#[ignore = "order-7 campaign; run in release mode"]
fn criterion_10_order_7_campaign() {
    let start = Instant::now();
    let full = EnumOptions {
        allow_order_7: true,
        ..EnumOptions::default()
    };
    let total = count_reduced(7, &full).unwrap();
    let t_total = start.elapsed();
    assert_eq!(total, 16_942_080);

    let start = Instant::now();
    let pruned_opts = EnumOptions {
        allow_order_7: true,
        pruning: true,
        ..EnumOptions::default()
    };
    let survivors = count_reduced(7, &pruned_opts).unwrap();
    let t_pruned = start.elapsed();
    assert!(survivors >= 1 && survivors < total);
    let rejected = 100.0 * (total - survivors) as f64 / total as f64;
    println!(
        "criterion 10: order 7 reduced = {total} (in {t_total:.2?}); \
         pruning keeps {survivors} candidates (in {t_pruned:.2?}); \
         measured rejection {rejected:.2}% vs reported >96.4%"
    );
}
