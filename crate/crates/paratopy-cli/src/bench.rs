//! Wall-clock comparisons: direct conjugates against the orthogonal-array
//! route, and pruned against unpruned enumeration.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use paratopy::{ConjugateTag, EnumOptions};

use crate::random::{random_square, seeded_rng};

fn per_item(total: Duration, items: u64) -> String {
    if items == 0 {
        return "-".into();
    }
    let nanos = total.as_nanos() / items as u128;
    if nanos >= 1_000_000 {
        format!("{:.2}ms", nanos as f64 / 1e6)
    } else if nanos >= 1_000 {
        format!("{:.2}µs", nanos as f64 / 1e3)
    } else {
        format!("{nanos}ns")
    }
}

/// Runs the benchmarks and renders a table. Timings vary run to run; the
/// table layout does not.
pub fn run(order: usize, iterations: usize) -> String {
    let mut rng = seeded_rng(0);
    let squares: Vec<_> = (0..iterations).map(|_| random_square(&mut rng, order)).collect();

    let start = Instant::now();
    let mut sink = 0usize;
    for sq in &squares {
        for tag in ConjugateTag::ALL {
            sink ^= sq.conjugate(tag).get(0, 0);
        }
    }
    let direct = start.elapsed();

    let start = Instant::now();
    for sq in &squares {
        for tag in ConjugateTag::ALL {
            sink ^= sq.conjugate_via_oa(tag).get(0, 0);
        }
    }
    let via_oa = start.elapsed();
    std::hint::black_box(sink);

    let enum_order = order.min(6);
    let start = Instant::now();
    let unpruned = paratopy::count_reduced(enum_order, &EnumOptions::default()).unwrap();
    let t_unpruned = start.elapsed();

    let pruned_opts = EnumOptions {
        pruning: true,
        ..EnumOptions::default()
    };
    let start = Instant::now();
    let pruned = paratopy::count_reduced(enum_order, &pruned_opts).unwrap();
    let t_pruned = start.elapsed();

    let conj_items = (iterations * 6) as u64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<34} {:>5} {:>10} {:>12} {:>12}",
        "benchmark", "order", "items", "total", "per-item"
    );
    let _ = writeln!(
        out,
        "{:<34} {:>5} {:>10} {:>12} {:>12}",
        "conjugate direct (6 tags)",
        order,
        conj_items,
        format!("{direct:.2?}"),
        per_item(direct, conj_items)
    );
    let _ = writeln!(
        out,
        "{:<34} {:>5} {:>10} {:>12} {:>12}",
        "conjugate via OA (6 tags)",
        order,
        conj_items,
        format!("{via_oa:.2?}"),
        per_item(via_oa, conj_items)
    );
    let _ = writeln!(
        out,
        "{:<34} {:>5} {:>10} {:>12} {:>12}",
        "enumerate reduced, pruning off",
        enum_order,
        unpruned,
        format!("{t_unpruned:.2?}"),
        per_item(t_unpruned, unpruned)
    );
    let _ = writeln!(
        out,
        "{:<34} {:>5} {:>10} {:>12} {:>12}",
        "enumerate candidates, pruning on",
        enum_order,
        pruned,
        format!("{t_pruned:.2?}"),
        per_item(t_pruned, pruned)
    );
    out
}
