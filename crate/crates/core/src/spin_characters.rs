//! Spin character labels of the double covers `S̃_n` and `Ã_n`, together
//! with degrees, the branching rule and projective outer products.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{strict_partitions, StrictPartition};
use crate::scalar::HalfPowerScalar;
use crate::shifted_tableaux::st_count;

/// Which member of an associate pair a label names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// Even shape: `⟨λ⟩ = ⟨λ⟩^a`.
    #[serde(rename = "self")]
    SelfAssociate,
    #[serde(rename = "plain")]
    Plain,
    /// `⟨λ⟩^a = sgn ⊗ ⟨λ⟩` for an odd shape.
    #[serde(rename = "associate")]
    Associate,
}

/// One irreducible spin character of `S̃_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpinLabel {
    #[serde(rename = "lambda")]
    shape: StrictPartition,
    variant: Variant,
}

impl SpinLabel {
    pub fn new(shape: StrictPartition, variant: Variant) -> Result<Self> {
        let ok = match variant {
            Variant::SelfAssociate => shape.sign().is_even(),
            Variant::Plain | Variant::Associate => shape.sign().is_odd(),
        };
        if !ok {
            return Err(Error::InvalidLabel(format!(
                "variant {variant:?} does not fit shape ({shape})"
            )));
        }
        Ok(SpinLabel { shape, variant })
    }

    /// `⟨λ⟩`: self-associate for even shapes, the plain member otherwise.
    pub fn of(shape: StrictPartition) -> Self {
        let variant = if shape.sign().is_even() {
            Variant::SelfAssociate
        } else {
            Variant::Plain
        };
        SpinLabel { shape, variant }
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn is_self_associate(&self) -> bool {
        self.variant == Variant::SelfAssociate
    }

    pub fn associate(&self) -> SpinLabel {
        let variant = match self.variant {
            Variant::SelfAssociate => Variant::SelfAssociate,
            Variant::Plain => Variant::Associate,
            Variant::Associate => Variant::Plain,
        };
        SpinLabel {
            shape: self.shape.clone(),
            variant,
        }
    }

    pub fn degree(&self) -> BigUint {
        degree(&self.shape)
    }

    /// `<6,2,1>` or `<6,2,1>a`.
    pub fn ascii(&self) -> String {
        match self.variant {
            Variant::Associate => format!("<{}>a", self.shape),
            _ => format!("<{}>", self.shape),
        }
    }
}

impl Ord for SpinLabel {
    /// Shapes in descending lexicographic order, plain before associate.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .shape
            .cmp(&self.shape)
            .then(self.variant.cmp(&other.variant))
    }
}

impl PartialOrd for SpinLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::Associate => write!(f, "⟨{}⟩^a", self.shape),
            _ => write!(f, "⟨{}⟩", self.shape),
        }
    }
}

/// A character written as a nonnegative combination of spin characters.
///
/// `unresolved` holds odd shapes known to contribute exactly one of
/// `⟨λ⟩`, `⟨λ⟩^a` without saying which.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpinCombination {
    terms: BTreeMap<SpinLabel, u64>,
    unresolved: BTreeSet<Reverse<StrictPartition>>,
}

impl SpinCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, label: SpinLabel, mult: u64) {
        if mult > 0 {
            *self.terms.entry(label).or_insert(0) += mult;
        }
    }

    /// Adds `⟨μ⟩^*`: `⟨μ⟩` for even `μ`, `⟨μ⟩ + ⟨μ⟩^a` for odd `μ`.
    pub fn add_star(&mut self, shape: &StrictPartition) {
        let label = SpinLabel::of(shape.clone());
        if !label.is_self_associate() {
            self.add(label.associate(), 1);
        }
        self.add(label, 1);
    }

    pub fn add_unresolved(&mut self, shape: StrictPartition) {
        debug_assert!(shape.sign().is_odd());
        self.unresolved.insert(Reverse(shape));
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SpinLabel, u64)> {
        self.terms.iter().map(|(l, &m)| (l, m))
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &StrictPartition> {
        self.unresolved.iter().map(|r| &r.0)
    }

    pub fn multiplicity(&self, label: &SpinLabel) -> u64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty() && self.unresolved.is_empty()
    }

    /// Number of irreducible constituents counted with multiplicity.
    pub fn norm_count(&self) -> u64 {
        self.terms.values().sum::<u64>() + self.unresolved.len() as u64
    }

    pub fn max_multiplicity(&self) -> u64 {
        let resolved = self.terms.values().copied().max().unwrap_or(0);
        if self.unresolved.is_empty() {
            resolved
        } else {
            resolved.max(1)
        }
    }

    pub fn total_degree(&self) -> BigUint {
        let resolved: BigUint = self.terms.iter().map(|(l, &m)| l.degree() * m).sum();
        let unresolved: BigUint = self.unresolved.iter().map(|r| degree(&r.0)).sum();
        resolved + unresolved
    }

    /// Total multiplicity per shape, merging associates and unresolved markers.
    pub fn collapsed(&self) -> Vec<(StrictPartition, u64)> {
        let mut by_shape: BTreeMap<Reverse<StrictPartition>, u64> = BTreeMap::new();
        for (l, &m) in &self.terms {
            *by_shape.entry(Reverse(l.shape.clone())).or_insert(0) += m;
        }
        for r in &self.unresolved {
            *by_shape.entry(r.clone()).or_insert(0) += 1;
        }
        by_shape.into_iter().map(|(r, m)| (r.0, m)).collect()
    }
}

/// Reduced Clifford product `⟨μ⟩ ⊗_z ⟨ν⟩`, a spin character of the preimage
/// of `S_l × S_{n-l}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordProductLabel {
    left: SpinLabel,
    right: SpinLabel,
}

impl CliffordProductLabel {
    /// When both factors are odd all four variant choices name one character;
    /// that case is stored as `(plain, plain)`.
    pub fn new(left: SpinLabel, right: SpinLabel) -> Self {
        let (left, right) = if !left.is_self_associate() && !right.is_self_associate() {
            (SpinLabel::of(left.shape), SpinLabel::of(right.shape))
        } else {
            (left, right)
        };
        CliffordProductLabel { left, right }
    }

    pub fn of(left: &StrictPartition, right: &StrictPartition) -> Self {
        Self::new(SpinLabel::of(left.clone()), SpinLabel::of(right.clone()))
    }

    pub fn left(&self) -> &SpinLabel {
        &self.left
    }

    pub fn right(&self) -> &SpinLabel {
        &self.right
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.right.clone(), self.left.clone())
    }

    pub fn degree(&self) -> BigUint {
        clifford_degree(&self.left.shape, &self.right.shape)
    }
}

impl fmt::Display for CliffordProductLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗_z {}", self.left, self.right)
    }
}

/// Constituent of a restriction to `Ã_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Half {
    /// Odd shape: `⟨λ⟩` and `⟨λ⟩^a` restrict to the same irreducible.
    Whole,
    Plus,
    Minus,
}

/// A spin character of `Ã_n`, named through `S̃_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AnSpinLabel {
    #[serde(rename = "lambda")]
    shape: StrictPartition,
    half: Half,
}

impl AnSpinLabel {
    pub fn new(shape: StrictPartition, half: Half) -> Result<Self> {
        let ok = match half {
            Half::Whole => shape.sign().is_odd(),
            Half::Plus | Half::Minus => shape.sign().is_even(),
        };
        if !ok {
            return Err(Error::InvalidLabel(format!(
                "half {half:?} does not fit shape ({shape})"
            )));
        }
        Ok(AnSpinLabel { shape, half })
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn half(&self) -> Half {
        self.half
    }

    pub fn degree(&self) -> BigUint {
        match self.half {
            Half::Whole => degree(&self.shape),
            Half::Plus | Half::Minus => degree(&self.shape) >> 1u32,
        }
    }
}

impl fmt::Display for AnSpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.half {
            Half::Whole => write!(f, "⟨{}⟩↓", self.shape),
            Half::Plus => write!(f, "⟨{}⟩↓+", self.shape),
            Half::Minus => write!(f, "⟨{}⟩↓-", self.shape),
        }
    }
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Closed form for the number of standard shifted tableaux of shape `λ`:
/// `n! / ∏ λ_i! · ∏_{i<j} (λ_i - λ_j) / (λ_i + λ_j)`.
pub fn standard_count_formula(shape: &StrictPartition) -> BigUint {
    let parts = shape.parts();
    let mut num = factorial(shape.size() as u64);
    let mut den = BigUint::one();
    for (i, &a) in parts.iter().enumerate() {
        den *= factorial(a as u64);
        for &b in &parts[i + 1..] {
            num *= a - b;
            den *= a + b;
        }
    }
    let (q, r) = num.div_rem(&den);
    assert!(
        r.is_zero(),
        "standard tableau count for ({shape}) is not integral"
    );
    q
}

/// `deg ⟨λ⟩ = 2^⌊(n-ℓ)/2⌋ · g_λ`.
pub fn degree(shape: &StrictPartition) -> BigUint {
    let half = (shape.size() - shape.len()) / 2;
    standard_count_formula(shape) << half
}

/// `deg(⟨μ⟩ ⊗_z ⟨ν⟩) = 2^(σ(μ)σ(ν)) · deg⟨μ⟩ · deg⟨ν⟩`.
pub fn clifford_degree(mu: &StrictPartition, nu: &StrictPartition) -> BigUint {
    let both_odd = mu.sign().bit() * nu.sign().bit();
    (degree(mu) * degree(nu)) << both_odd
}

/// Induction from `S̃_n` to `S̃_{n+1}`.
pub fn branch_up(x: &SpinLabel) -> SpinCombination {
    let mut out = SpinCombination::new();
    if let Ok(plus) = x.shape.plus_one_part() {
        // σ(λ⁺) = σ(λ), so the variant carries over.
        out.add(
            SpinLabel {
                shape: plus,
                variant: x.variant,
            },
            1,
        );
    }
    for mu in x.shape.neighbors() {
        out.add_star(&mu);
    }
    out
}

/// Restriction from `S̃_n` to `S̃_{n-1}`; empty for `n <= 1`.
pub fn branch_down(x: &SpinLabel) -> SpinCombination {
    let mut out = SpinCombination::new();
    let parts = x.shape.parts();
    if x.shape.size() <= 1 {
        return out;
    }
    if parts.last() == Some(&1) {
        let kappa = StrictPartition::new(parts[..parts.len() - 1].to_vec()).expect("strict");
        out.add(
            SpinLabel {
                shape: kappa,
                variant: x.variant,
            },
            1,
        );
    }
    for i in 0..parts.len() {
        let lowered = parts[i] - 1;
        if lowered == 0 || parts.get(i + 1).is_some_and(|&next| next >= lowered) {
            continue;
        }
        let mut kappa = parts.to_vec();
        kappa[i] = lowered;
        let kappa = StrictPartition::new(kappa).expect("strict");
        if x.is_self_associate() {
            // κ is odd and both ⟨κ⟩, ⟨κ⟩^a induce to a multiple of ⟨λ⟩.
            out.add_star(&kappa);
        } else {
            out.add(SpinLabel::of(kappa), 1);
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `⟨μ⟩ ⊗̂ ⟨ν⟩`, the outer product induced to `S̃_n`, `n = |μ| + |ν|`.
///
/// Every constituent is checked for integrality and the total degree against
/// `C(n, |μ|) · deg(⟨μ⟩ ⊗_z ⟨ν⟩)`.
pub fn outer_product_decompose(
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> Result<SpinCombination> {
    if mu.is_empty() || nu.is_empty() {
        return Err(Error::InvalidLabel(
            "outer product factors must be non-empty".into(),
        ));
    }
    let n = mu.size() + nu.size();
    let union = mu.union(nu);
    let exceptional = union.is_strict() && union.sign().is_odd();
    let mut out = SpinCombination::new();

    for lambda in strict_partitions(n) {
        let st = st_count(&lambda, mu, nu)?;
        if st == 0 {
            continue;
        }
        let length_gap = (mu.len() + nu.len()) as i64 - lambda.len() as i64;
        let sign_sum = (lambda.sign().bit() + union.sign().bit()) as i64;
        if (length_gap - sign_sum) % 2 != 0 {
            return Err(Error::Invariant(format!(
                "parity mismatch at λ = ({lambda})"
            )));
        }
        if exceptional && lambda.as_partition() == &union {
            out.add_unresolved(lambda);
            continue;
        }
        let coefficient = HalfPowerScalar::from_integer(st).scale_half(length_gap - sign_sum);
        let mult = coefficient.to_integer().ok_or_else(|| {
            Error::Invariant(format!(
                "non-integral multiplicity {coefficient} at λ = ({lambda})"
            ))
        })?;
        let mult =
            u64::try_from(mult).map_err(|_| Error::Invariant("multiplicity overflow".into()))?;
        let label = SpinLabel::of(lambda);
        if !label.is_self_associate() {
            out.add(label.associate(), mult);
        }
        out.add(label, mult);
    }

    let expected = binomial(n as u64, mu.size() as u64) * clifford_degree(mu, nu);
    let total = out.total_degree();
    if total != expected {
        return Err(Error::Invariant(format!(
            "degree sum {total} != {expected} for ⟨{mu}⟩ ⊗̂ ⟨{nu}⟩"
        )));
    }
    Ok(out)
}

/// Restriction from `S̃_n` to `Ã_n`, `n >= 2`.
pub fn restrict_to_an(x: &SpinLabel) -> Vec<AnSpinLabel> {
    let shape = x.shape.clone();
    if x.is_self_associate() {
        vec![
            AnSpinLabel {
                shape: shape.clone(),
                half: Half::Plus,
            },
            AnSpinLabel {
                shape,
                half: Half::Minus,
            },
        ]
    } else {
        vec![AnSpinLabel {
            shape,
            half: Half::Whole,
        }]
    }
}

/// Induction from `Ã_n` to `S̃_n`.
pub fn induce_from_an(x: &AnSpinLabel) -> SpinCombination {
    let mut out = SpinCombination::new();
    match x.half {
        Half::Plus | Half::Minus => out.add(SpinLabel::of(x.shape.clone()), 1),
        Half::Whole => out.add_star(&x.shape),
    }
    out
}
