//! Bundled oracle and property suites behind a single weight budget.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::classification::{irreducible_outer, is_mult_free};
use crate::error::Result;
use crate::oracle::{standard_shifted_count, Oracle};
use crate::partitions::{strict_partitions, StrictPartition};
use crate::shifted_tableaux::st_count;
use crate::spin_characters::{
    branch_down, branch_up, outer_product_decompose, restrict_to_an, standard_count_formula,
    SpinCombination, SpinLabel,
};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: u64,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, pass: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !pass {
            self.failures.push(what());
        }
    }

    fn merge(&mut self, other: VerifyReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// Ordered pairs of non-empty strict partitions with `|μ| + |ν| <= max_weight`.
pub fn strict_pairs(max_weight: usize) -> Vec<(StrictPartition, StrictPartition)> {
    let mut out = Vec::new();
    for n in 2..=max_weight {
        for l in 1..n {
            for mu in strict_partitions(l) {
                for nu in strict_partitions(n - l) {
                    out.push((mu.clone(), nu));
                }
            }
        }
    }
    out
}

/// Skips the odd `λ = μ ∪ ν` entry, which only balances through degrees.
pub fn is_exceptional(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> bool {
    let union = mu.union(nu);
    union.is_strict() && union.sign().is_odd() && lambda.as_partition() == &union
}

/// `st(λ; μ, ν)` against Q-function structure constants.
pub fn oracle_suite(max_weight: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let mut oracle = Oracle::new();
    for (mu, nu) in strict_pairs(max_weight) {
        let f = oracle.structure_constants(&mu, &nu)?;
        for lambda in strict_partitions(mu.size() + nu.size()) {
            let expected = f.get(&lambda).cloned().unwrap_or_default();
            if is_exceptional(&lambda, &mu, &nu) {
                report.check(expected > BigInt::from(0), || {
                    format!("oracle misses ({lambda}) for ({mu})x({nu})")
                });
                continue;
            }
            let st = st_count(&lambda, &mu, &nu)?;
            report.check(BigInt::from(st) == expected, || {
                format!("st(({lambda});({mu}),({nu})) = {st}, oracle {expected}")
            });
        }
    }
    Ok(report)
}

pub fn standard_count_suite(max_weight: usize) -> VerifyReport {
    let mut report = VerifyReport::default();
    for n in 1..=max_weight {
        for lambda in strict_partitions(n) {
            let a = standard_shifted_count(&lambda);
            let b = standard_count_formula(&lambda);
            report.check(a == b, || {
                format!("g({lambda}): recursion {a}, formula {b}")
            });
        }
    }
    report
}

/// Mult-free classification against brute-force decompositions.
pub fn mult_free_suite(max_weight: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for (mu, nu) in strict_pairs(max_weight) {
        let dec = outer_product_decompose(&mu, &nu)?;
        let brute = dec.max_multiplicity() == 1;
        let claimed = is_mult_free(&mu, &nu);
        report.check(brute == claimed.is_some(), || {
            format!("mult-free ({mu})x({nu}): classified {claimed:?}, brute force {brute}")
        });
    }
    Ok(report)
}

pub fn collapse_combination(c: &SpinCombination) -> BTreeMap<StrictPartition, u64> {
    c.collapsed().into_iter().collect()
}

/// Branching against outer products with `⟨1⟩`, irreducibility, reciprocity
/// and restriction degrees for `n <= max_weight`.
pub fn branching_suite(max_weight: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let one = StrictPartition::new(vec![1]).expect("strict");
    for n in 1..max_weight {
        for mu in strict_partitions(n) {
            let up = branch_up(&SpinLabel::of(mu.clone()));
            let outer = outer_product_decompose(&mu, &one)?;
            report.check(
                collapse_combination(&up) == collapse_combination(&outer),
                || format!("branch_up(<{mu}>) differs from <{mu}> x <1>"),
            );

            let collapsed = outer.collapsed();
            let irreducible = match collapsed.as_slice() {
                [(lambda, 1)] if lambda.sign().is_even() => Some(lambda.clone()),
                _ => None,
            };
            report.check(irreducible == irreducible_outer(&mu, &one), || {
                format!("irreducibility of <{mu}> x <1>")
            });
        }
    }
    for n in 2..=max_weight {
        let labels: Vec<SpinLabel> = strict_partitions(n)
            .into_iter()
            .flat_map(both_variants)
            .collect();
        let lower: Vec<SpinLabel> = strict_partitions(n - 1)
            .into_iter()
            .flat_map(both_variants)
            .collect();
        for x in &labels {
            let down = branch_down(x);
            for y in &lower {
                let up = branch_up(y);
                report.check(up.multiplicity(x) == down.multiplicity(y), || {
                    format!("reciprocity fails for {x} over {y}")
                });
            }
            let restricted: num_bigint::BigUint =
                restrict_to_an(x).iter().map(|a| a.degree()).sum();
            report.check(restricted == x.degree(), || {
                format!("restriction degree of {x}")
            });
        }
    }
    Ok(report)
}

/// `⟨λ⟩`, plus `⟨λ⟩^a` when it differs.
pub fn both_variants(shape: StrictPartition) -> Vec<SpinLabel> {
    let x = SpinLabel::of(shape);
    if x.is_self_associate() {
        vec![x]
    } else {
        vec![x.associate(), x]
    }
}

/// Runs every suite; `max_weight` bounds `|λ|` throughout.
pub fn verify_all(max_weight: usize) -> Result<VerifyReport> {
    let mut report = oracle_suite(max_weight)?;
    report.merge(standard_count_suite(max_weight));
    report.merge(mult_free_suite(max_weight)?);
    report.merge(branching_suite(max_weight)?);
    Ok(report)
}
