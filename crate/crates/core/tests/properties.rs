use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::sample::subsequence;

use spinfold::cli::parse_strict;
use spinfold::oracle::q_function;
use spinfold::partitions::{Partition, StrictPartition};
use spinfold::shifted_tableaux::{fillings, st_count, tp_tableaux};
use spinfold::spin_characters::{
    branch_down, branch_up, degree, outer_product_decompose, SpinCombination, SpinLabel,
};

/// Strict partitions as subsets of `1..=max_part`, filtered by total size.
fn strict(max_part: u32, max_size: usize) -> impl Strategy<Value = StrictPartition> {
    let parts: Vec<u32> = (1..=max_part).collect();
    subsequence(parts, 0..=max_part as usize)
        .prop_filter("size bound", move |v| {
            v.iter().sum::<u32>() as usize <= max_size
        })
        .prop_map(|v| StrictPartition::new(v).unwrap())
}

fn nonempty(max_part: u32, max_size: usize) -> impl Strategy<Value = StrictPartition> {
    strict(max_part, max_size).prop_filter("non-empty", |p| !p.is_empty())
}

fn associate_all(c: &SpinCombination) -> SpinCombination {
    let mut out = SpinCombination::new();
    for (l, m) in c.terms() {
        out.add(l.associate(), m);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn render_parse_round_trip(p in strict(20, 20)) {
        prop_assert_eq!(parse_strict(&p.to_string()).unwrap(), p.clone());
        let reversed: Vec<String> = p.parts().iter().rev().map(u32::to_string).collect();
        prop_assert_eq!(parse_strict(&reversed.join(",")).unwrap(), p);
    }

    #[test]
    fn st_symmetric_in_factors(mu in nonempty(5, 5), nu in nonempty(5, 5)) {
        let n = mu.size() + nu.size();
        for lambda in spinfold::partitions::strict_partitions(n) {
            prop_assert_eq!(st_count(&lambda, &mu, &nu).unwrap(), st_count(&lambda, &nu, &mu).unwrap());
        }
    }

    #[test]
    fn tp_tableaux_are_fillings(mu in nonempty(4, 5), nu in nonempty(4, 4)) {
        let n = mu.size() + nu.size();
        for lambda in spinfold::partitions::strict_partitions(n) {
            if !spinfold::shifted_tableaux::contains(&lambda, &mu) {
                continue;
            }
            let all = fillings(&lambda, &mu, &nu).unwrap();
            let tp = tp_tableaux(&lambda, &mu, &nu).unwrap();
            let filtered: Vec<_> = all.into_iter().filter(|t| t.word().satisfies_tp()).collect();
            prop_assert_eq!(tp.len() as u64, st_count(&lambda, &mu, &nu).unwrap());
            prop_assert_eq!(filtered, tp);
        }
    }

    #[test]
    fn parity_identity(mu in nonempty(5, 6), nu in nonempty(5, 6)) {
        let union = mu.union(&nu);
        for lambda in spinfold::partitions::strict_partitions(mu.size() + nu.size()) {
            if st_count(&lambda, &mu, &nu).unwrap() > 0 {
                let gap = mu.len() + nu.len() - lambda.len();
                let signs = lambda.sign().bit() as usize + union.sign().bit() as usize;
                prop_assert_eq!((gap + signs) % 2, 0);
            }
        }
    }

    #[test]
    fn decomposition_degree_sum(mu in nonempty(6, 7), nu in nonempty(6, 7)) {
        let d = outer_product_decompose(&mu, &nu).unwrap();
        let n = (mu.size() + nu.size()) as u64;
        let l = mu.size() as u64;
        let binom: BigUint = (0..l).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1));
        let both_odd = mu.sign().bit() * nu.sign().bit();
        let expected = (binom * degree(&mu) * degree(&nu)) << both_odd;
        prop_assert_eq!(d.total_degree(), expected);
        prop_assert_eq!(outer_product_decompose(&nu, &mu).unwrap(), d);
    }

    #[test]
    fn branching_commutes_with_associate(shape in nonempty(6, 12)) {
        let x = SpinLabel::of(shape);
        prop_assert_eq!(branch_up(&x.associate()), associate_all(&branch_up(&x)));
        prop_assert_eq!(branch_down(&x.associate()), associate_all(&branch_down(&x)));
    }

    #[test]
    fn q_function_leading_coefficient(shape in nonempty(4, 6)) {
        let k = shape.len() + 1;
        let q = q_function(&shape, k).unwrap();
        let mut lead = shape.parts().to_vec();
        lead.resize(k, 0);
        prop_assert_eq!(q.coefficient(&lead), num_bigint::BigInt::from(1u32) << shape.len());
        prop_assert_eq!(q_function(&shape, k + 1).unwrap().truncate(k), q);
    }

    #[test]
    fn strictness_validated(v in proptest::collection::vec(1u32..6, 0..6)) {
        let p = Partition::new(v).unwrap();
        prop_assert_eq!(StrictPartition::try_from(p.clone()).is_ok(), p.is_strict());
    }
}
