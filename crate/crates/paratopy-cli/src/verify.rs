//! Self-check suites over random inputs: the oracle equivalences and the
//! algebra identities, each returning a pass/fail result with a check
//! count. The CLI `verify` command runs all of them with a fixed seed.

use paratopy::{
    pair_signature, swap_conjugate_isotopism, ConjugateTag, Isotopism, Permutation, SwapSide,
};
use rand::Rng;

use crate::oracle::naive_apply_isotopism;
use crate::random::{random_isotopism, random_paratopism, random_square};

pub struct SuiteResult {
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub detail: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn suite(name: &'static str) -> SuiteResult {
    SuiteResult {
        name,
        checks: 0,
        failures: 0,
        detail: None,
    }
}

impl SuiteResult {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(detail());
            }
        }
    }
}

/// Direct conjugates against the orthogonal-array route, all six tags.
pub fn conjugate_oracle(rng: &mut impl Rng, orders: &[usize], rounds: usize) -> SuiteResult {
    let mut result = suite("conjugate-oracle");
    for &n in orders {
        for _ in 0..rounds {
            let sq = random_square(rng, n);
            for tag in ConjugateTag::ALL {
                let direct = sq.conjugate(tag);
                let via_oa = sq.conjugate_via_oa(tag);
                result.check(direct == via_oa, || {
                    format!("order {n} tag {tag}: direct and OA routes differ\n{sq}")
                });
            }
        }
    }
    result
}

/// Closed-form isotopism application against naive cell-by-cell movement.
pub fn isotopism_formula(rng: &mut impl Rng, orders: &[usize], rounds: usize) -> SuiteResult {
    let mut result = suite("isotopism-formula");
    for &n in orders {
        for _ in 0..rounds {
            let sq = random_square(rng, n);
            let iso = random_isotopism(rng, n);
            let fast = iso.apply(&sq).expect("degrees match");
            let slow = naive_apply_isotopism(&iso, &sq);
            result.check(fast == slow, || {
                format!("order {n}: formula disagrees with naive application")
            });
        }
    }
    result
}

/// The conjugate composition law over all 36 tag pairs.
pub fn conjugate_composition(rng: &mut impl Rng, orders: &[usize], rounds: usize) -> SuiteResult {
    let mut result = suite("conjugate-composition");
    for &n in orders {
        for _ in 0..rounds {
            let sq = random_square(rng, n);
            for t1 in ConjugateTag::ALL {
                for t2 in ConjugateTag::ALL {
                    let stepwise = sq.conjugate(t2).conjugate(t1);
                    let direct = sq.conjugate(t1.compose(t2));
                    result.check(stepwise == direct, || {
                        format!("order {n}: composition law fails for {t1}·{t2}")
                    });
                }
            }
        }
    }
    result
}

/// Both swap identities for full isotopisms, plus the single-component
/// table, applied to squares.
pub fn swap_relations(rng: &mut impl Rng, orders: &[usize], rounds: usize) -> SuiteResult {
    let mut result = suite("swap-relations");
    for &n in orders {
        for _ in 0..rounds {
            let sq = random_square(rng, n);
            let iso = random_isotopism(rng, n);
            for tag in ConjugateTag::ALL {
                let right = swap_conjugate_isotopism(tag, &iso, SwapSide::Right);
                result.check(
                    iso.apply(&sq.conjugate(tag)).unwrap()
                        == right.apply(&sq).unwrap().conjugate(tag),
                    || format!("order {n} tag {tag}: right swap identity fails"),
                );
                let left = swap_conjugate_isotopism(tag, &iso, SwapSide::Left);
                result.check(
                    iso.apply(&sq).unwrap().conjugate(tag)
                        == left.apply(&sq.conjugate(tag)).unwrap(),
                    || format!("order {n} tag {tag}: left swap identity fails"),
                );
            }
            if n >= 2 {
                single_component_relations(rng, n, &mut result);
            }
        }
    }
    result
}

/// The nine single-component relations: each of row/column/symbol
/// permutation moved past each involution tag.
fn single_component_relations(rng: &mut impl Rng, n: usize, result: &mut SuiteResult) {
    use ConjugateTag::*;
    let p = crate::random::random_permutation(rng, n);
    let id = Permutation::identity(n);
    let as_row = Isotopism::new(p.clone(), id.clone(), id.clone()).unwrap();
    let as_col = Isotopism::new(id.clone(), p.clone(), id.clone()).unwrap();
    let as_sym = Isotopism::new(id.clone(), id.clone(), p.clone()).unwrap();
    let sq = random_square(rng, n);
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
    for (left, tag, right) in table {
        result.check(
            left.apply(&sq.conjugate(tag)).unwrap()
                == right.apply(&sq).unwrap().conjugate(tag),
            || format!("order {n} tag {tag}: component relation fails"),
        );
    }
}

/// Paratopism composition against sequential application, and inverses
/// composing to the identity.
pub fn paratopism_algebra(rng: &mut impl Rng, orders: &[usize], rounds: usize) -> SuiteResult {
    let mut result = suite("paratopism-algebra");
    for &n in orders {
        for _ in 0..rounds {
            let sq = random_square(rng, n);
            let p = random_paratopism(rng, n);
            let q = random_paratopism(rng, n);
            result.check(
                p.compose(&q).unwrap().apply(&sq).unwrap()
                    == p.apply(&q.apply(&sq).unwrap()).unwrap(),
                || format!("order {n}: composed action differs from sequential"),
            );
            result.check(
                p.compose(&p.inverse()).unwrap().is_identity()
                    && p.inverse().compose(&p).unwrap().is_identity(),
                || format!("order {n}: inverse does not cancel"),
            );
        }
    }
    result
}

/// Pair-signature invariance under isotopisms and the row-inverse tag.
pub fn signature_invariance(rng: &mut impl Rng, orders: &[usize], rounds: usize) -> SuiteResult {
    let mut result = suite("signature-invariance");
    for &n in orders {
        if n < 2 {
            continue;
        }
        for _ in 0..rounds {
            let sq = random_square(rng, n);
            let base = pair_signature(&sq).expect("order at least 2");
            let iso = random_isotopism(rng, n);
            result.check(
                pair_signature(&iso.apply(&sq).unwrap()).unwrap() == base,
                || format!("order {n}: signature changed under isotopism"),
            );
            result.check(
                pair_signature(&sq.conjugate(ConjugateTag::Rec)).unwrap() == base,
                || format!("order {n}: signature changed under row inversion"),
            );
        }
    }
    result
}

/// Runs every suite with the shared random stream.
pub fn run_all(rng: &mut impl Rng, orders: &[usize], rounds: usize) -> Vec<SuiteResult> {
    vec![
        conjugate_oracle(rng, orders, rounds),
        isotopism_formula(rng, orders, rounds),
        conjugate_composition(rng, orders, rounds),
        swap_relations(rng, orders, rounds),
        paratopism_algebra(rng, orders, rounds),
        signature_invariance(rng, orders, rounds),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::seeded_rng;

    #[test]
    fn all_suites_pass_on_a_quick_run() {
        let mut rng = seeded_rng(0);
        let results = run_all(&mut rng, &[3, 4, 5], 5);
        for r in &results {
            assert!(r.passed(), "{}: {:?}", r.name, r.detail);
            assert!(r.checks > 0);
        }
    }
}
