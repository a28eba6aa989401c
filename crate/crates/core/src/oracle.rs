//! Brute-force cross-checks: Schur Q-functions built from shifted tableaux
//! without the lattice condition, and standard shifted tableau counts.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{partitions, strict_partitions, Partition, StrictPartition};

/// Polynomial in `k` variables with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    k: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(k: usize) -> Self {
        SparsePolynomial {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn variables(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coefficient: BigInt) {
        assert_eq!(exponents.len(), self.k, "exponent vector has wrong length");
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_default();
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.k, other.k, "variable counts differ");
        let mut out = SparsePolynomial::zero(self.k);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *out.terms.entry(e).or_default() += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    /// Sets the variables past the first `k` to zero.
    pub fn truncate(&self, k: usize) -> SparsePolynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[k.min(e.len())..].iter().all(|&x| x == 0))
            .map(|(e, c)| (e[..k.min(e.len())].to_vec(), c.clone()))
            .collect();
        SparsePolynomial {
            k: k.min(self.k),
            terms,
        }
    }
}

/// Counts shifted tableaux of straight shape `shape` with the given content,
/// using only the four column and row rules.
fn count_tableaux(shape: &StrictPartition, content: &[u32]) -> BigUint {
    let mut cells = Vec::new();
    for (i, &len) in shape.parts().iter().enumerate() {
        for j in i..i + len as usize {
            cells.push((i, j));
        }
    }
    let mut grid: HashMap<(usize, usize), u32> = HashMap::new();
    let mut remaining = content.to_vec();
    let mut count = BigUint::zero();
    fill(&cells, 0, &mut grid, &mut remaining, &mut count);
    count
}

// Letters are encoded as rank 2v - 1 for v' and 2v for v.
fn fill(
    cells: &[(usize, usize)],
    at: usize,
    grid: &mut HashMap<(usize, usize), u32>,
    remaining: &mut [u32],
    count: &mut BigUint,
) {
    if at == cells.len() {
        if remaining.iter().all(|&r| r == 0) {
            *count += 1u32;
        }
        return;
    }
    let (i, j) = cells[at];
    let left = if j > i {
        grid.get(&(i, j - 1)).copied()
    } else {
        None
    };
    let up = if i > 0 {
        grid.get(&(i - 1, j)).copied()
    } else {
        None
    };
    for v in 1..=remaining.len() as u32 {
        if remaining[v as usize - 1] == 0 {
            continue;
        }
        for rank in [2 * v - 1, 2 * v] {
            let marked = rank % 2 == 1;
            if left.is_some_and(|l| l > rank || (marked && l == rank)) {
                continue;
            }
            if up.is_some_and(|u| u > rank || (!marked && u == rank)) {
                continue;
            }
            remaining[v as usize - 1] -= 1;
            grid.insert((i, j), rank);
            fill(cells, at + 1, grid, remaining, count);
            grid.remove(&(i, j));
            remaining[v as usize - 1] += 1;
        }
    }
}

/// Monomial coefficients of `Q_λ`, keyed by partition exponents.
struct Expansions {
    cache: HashMap<StrictPartition, BTreeMap<Partition, BigInt>>,
}

impl Expansions {
    fn new() -> Self {
        Expansions {
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, shape: &StrictPartition) -> &BTreeMap<Partition, BigInt> {
        self.cache.entry(shape.clone()).or_insert_with(|| {
            partitions(shape.size())
                .into_iter()
                .filter_map(|alpha| {
                    let c = count_tableaux(shape, alpha.parts());
                    (!c.is_zero()).then(|| (alpha, BigInt::from(c)))
                })
                .collect()
        })
    }
}

fn sorted_partition(mut v: Vec<u32>) -> Partition {
    v.retain(|&x| x > 0);
    Partition::new(v).expect("positive parts")
}

/// Next permutation in lexicographic order; false once the last is reached.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `Q_λ(x_1, …, x_k)`.
pub fn q_function(shape: &StrictPartition, k: usize) -> Result<SparsePolynomial> {
    if k < shape.len() {
        return Err(Error::TooFewVariables {
            k,
            needed: shape.len(),
        });
    }
    let mut exp = Expansions::new();
    let mut out = SparsePolynomial::zero(k);
    for (alpha, c) in exp.get(shape) {
        if alpha.len() > k {
            continue;
        }
        let mut v = alpha.parts().to_vec();
        v.resize(k, 0);
        v.sort_unstable();
        loop {
            out.terms.insert(v.clone(), c.clone());
            if !next_permutation(&mut v) {
                break;
            }
        }
    }
    Ok(out)
}

/// Coefficients of `Q_μ Q_ν` on partition monomials `x^α`, `|α| = |μ| + |ν|`.
fn product_coefficients(
    exp: &mut Expansions,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> BTreeMap<Partition, BigInt> {
    let cm = exp.get(mu).clone();
    let cn = exp.get(nu).clone();
    let mut out = BTreeMap::new();
    for alpha in partitions(mu.size() + nu.size()) {
        let parts = alpha.parts();
        let mut beta = vec![0u32; parts.len()];
        let mut total = BigInt::zero();
        split(parts, 0, mu.size() as u32, &mut beta, &cm, &cn, &mut total);
        if !total.is_zero() {
            out.insert(alpha, total);
        }
    }
    out
}

fn split(
    alpha: &[u32],
    at: usize,
    left: u32,
    beta: &mut Vec<u32>,
    cm: &BTreeMap<Partition, BigInt>,
    cn: &BTreeMap<Partition, BigInt>,
    total: &mut BigInt,
) {
    if at == alpha.len() {
        if left == 0 {
            let rest: Vec<u32> = alpha.iter().zip(beta.iter()).map(|(a, b)| a - b).collect();
            let (Some(a), Some(b)) = (
                cm.get(&sorted_partition(beta.clone())),
                cn.get(&sorted_partition(rest)),
            ) else {
                return;
            };
            *total += a * b;
        }
        return;
    }
    for b in 0..=alpha[at].min(left) {
        beta[at] = b;
        split(alpha, at + 1, left - b, beta, cm, cn, total);
    }
    beta[at] = 0;
}

/// Expands `Q_μ Q_ν = Σ 2^(ℓμ+ℓν-ℓλ) f(λ) Q_λ` and returns the nonzero `f(λ)`.
pub fn oracle_structure_constants(
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> Result<BTreeMap<StrictPartition, BigInt>> {
    Oracle::new().structure_constants(mu, nu)
}

/// Reusable oracle that caches monomial expansions across calls.
pub struct Oracle {
    exp: Expansions,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new()
    }
}

impl Oracle {
    pub fn new() -> Self {
        Oracle {
            exp: Expansions::new(),
        }
    }

    pub fn structure_constants(
        &mut self,
        mu: &StrictPartition,
        nu: &StrictPartition,
    ) -> Result<BTreeMap<StrictPartition, BigInt>> {
        if mu.is_empty() || nu.is_empty() {
            return Err(Error::InvalidLabel(
                "oracle factors must be non-empty".into(),
            ));
        }
        let mut residue = product_coefficients(&mut self.exp, mu, nu);
        let lengths = (mu.len() + nu.len()) as u32;
        let mut out = BTreeMap::new();
        while let Some((alpha, coef)) = residue
            .iter()
            .next_back()
            .map(|(a, c)| (a.clone(), c.clone()))
        {
            let lambda = StrictPartition::try_from(alpha.clone()).map_err(|_| {
                Error::ExtractionResidue(format!("leading monomial ({alpha}) is not strict"))
            })?;
            let lead = BigInt::one() << lambda.len();
            let (weight, r) = coef.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::ExtractionResidue(format!(
                    "{coef} not divisible by {lead} at ({lambda})"
                )));
            }
            let f = if lengths >= lambda.len() as u32 {
                let scale = BigInt::one() << (lengths - lambda.len() as u32);
                let (f, r) = weight.div_rem(&scale);
                if !r.is_zero() {
                    return Err(Error::ExtractionResidue(format!(
                        "non-integral coefficient at ({lambda})"
                    )));
                }
                f
            } else {
                &weight << (lambda.len() as u32 - lengths)
            };
            for (beta, c) in self.exp.get(&lambda) {
                let entry = residue.entry(beta.clone()).or_default();
                *entry -= &weight * c;
                if entry.is_zero() {
                    residue.remove(beta);
                }
            }
            if residue.get(&alpha).is_some_and(|c| !c.is_zero()) {
                return Err(Error::ExtractionResidue(format!(
                    "leading term ({alpha}) survived elimination"
                )));
            }
            out.insert(lambda, f);
        }
        if out.values().any(Signed::is_negative) {
            return Err(Error::ExtractionResidue(
                "negative structure constant".into(),
            ));
        }
        Ok(out)
    }
}

/// Number of standard shifted tableaux of shape `λ`, by removing corners.
pub fn standard_shifted_count(shape: &StrictPartition) -> BigUint {
    fn go(parts: &[u32], memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
        if parts.is_empty() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(parts) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..parts.len() {
            let lowered = parts[i] - 1;
            let next = parts.get(i + 1).copied().unwrap_or(0);
            if lowered > next || (lowered == 0 && i + 1 == parts.len()) {
                let mut smaller = parts.to_vec();
                if lowered == 0 {
                    smaller.pop();
                } else {
                    smaller[i] = lowered;
                }
                total += go(&smaller, memo);
            }
        }
        memo.insert(parts.to_vec(), total.clone());
        total
    }
    go(shape.parts(), &mut HashMap::new())
}

/// All strict `λ` with `|λ| = n` paired with `standard_shifted_count(λ)`.
pub fn standard_counts(n: usize) -> Vec<(StrictPartition, BigUint)> {
    strict_partitions(n)
        .into_iter()
        .map(|l| {
            let c = standard_shifted_count(&l);
            (l, c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin_characters::standard_count_formula;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn q_one() {
        let q = q_function(&sp(&[1]), 3).unwrap();
        assert_eq!(q.terms().len(), 3);
        assert!(q.terms().values().all(|c| *c == BigInt::from(2)));
    }

    #[test]
    fn q_two_one() {
        let q = q_function(&sp(&[2, 1]), 3).unwrap();
        assert_eq!(q.coefficient(&[2, 1, 0]), BigInt::from(4));
        assert_eq!(q.coefficient(&[0, 1, 2]), BigInt::from(4));
        assert_eq!(q.coefficient(&[3, 0, 0]), BigInt::zero());
        assert_eq!(
            q_function(&sp(&[2, 1]), 1),
            Err(Error::TooFewVariables { k: 1, needed: 2 })
        );
    }

    #[test]
    fn q_stability() {
        for shape in [sp(&[2, 1]), sp(&[3, 1]), sp(&[4])] {
            for k in shape.len()..4 {
                let small = q_function(&shape, k).unwrap();
                let big = q_function(&shape, k + 1).unwrap();
                assert_eq!(big.truncate(k), small);
            }
        }
    }

    #[test]
    fn monomial_route_matches_full_product() {
        for (mu, nu) in [
            (sp(&[1]), sp(&[1])),
            (sp(&[2]), sp(&[1])),
            (sp(&[2, 1]), sp(&[1])),
            (sp(&[2]), sp(&[2])),
        ] {
            let k = mu.size() + nu.size();
            let full = q_function(&mu, k)
                .unwrap()
                .mul(&q_function(&nu, k).unwrap());
            let mono = product_coefficients(&mut Expansions::new(), &mu, &nu);
            for alpha in partitions(k) {
                let mut e = alpha.parts().to_vec();
                e.resize(k, 0);
                assert_eq!(
                    full.coefficient(&e),
                    mono.get(&alpha).cloned().unwrap_or_default(),
                    "{alpha}"
                );
            }
        }
    }

    #[test]
    fn structure_constants_examples() {
        let m = oracle_structure_constants(&sp(&[1]), &sp(&[1])).unwrap();
        assert_eq!(m, BTreeMap::from([(sp(&[2]), BigInt::from(1))]));
        let m = oracle_structure_constants(&sp(&[2, 1]), &sp(&[3])).unwrap();
        assert_eq!(m.get(&sp(&[5, 1])), Some(&BigInt::from(1)));
        assert_eq!(m.get(&sp(&[4, 2])), Some(&BigInt::from(1)));
        assert_eq!(m.get(&sp(&[3, 2, 1])), Some(&BigInt::from(1)));
        assert_eq!(
            crate::shifted_tableaux::st_count(&sp(&[3, 2, 1]), &sp(&[2, 1]), &sp(&[3])).unwrap(),
            1
        );
        let m = oracle_structure_constants(&sp(&[2, 1]), &sp(&[2, 1])).unwrap();
        assert_eq!(m.get(&sp(&[4, 2])), Some(&BigInt::from(1)));
    }

    #[test]
    fn standard_counts_match_formula() {
        assert_eq!(standard_shifted_count(&sp(&[3, 1])), BigUint::from(2u32));
        assert_eq!(
            standard_shifted_count(&sp(&[6, 2, 1])),
            BigUint::from(30u32)
        );
        assert_eq!(standard_shifted_count(&sp(&[7])), BigUint::one());
        for n in 1..=16 {
            for (l, c) in standard_counts(n) {
                assert_eq!(c, standard_count_formula(&l), "({l})");
            }
        }
    }

    #[test]
    fn permutations_enumerated() {
        let mut v = vec![0, 1, 1];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }
}
