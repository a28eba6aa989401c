//! Decision procedures for multiplicity-free and irreducible outer products,
//! splitting classes, the outer automorphism `τ̃`, and wreath products.

mod exceptional;

pub use exceptional::*;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, StrictPartition};
use crate::spin_characters::{
    outer_product_decompose, AnSpinLabel, CliffordProductLabel, Half, SpinLabel,
};

/// Which double cover a question is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    Sn,
    An,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Sn => "Sn",
            GroupKind::An => "An",
        })
    }
}

/// The six multiplicity-free families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MultFreeCase {
    /// Anything times `⟨1⟩`.
    I,
    /// Even hook staircase times `⟨2,1⟩`.
    II,
    /// Staircase times `⟨m⟩`.
    III,
    /// Staircase times `⟨m-1,1⟩`, `m > 3`, opposite signs.
    IV,
    /// Even staircase times `⟨m+1,m⟩`.
    V,
    /// Fat staircase times `⟨m⟩`, `m > 1`, opposite signs.
    VI,
}

impl fmt::Display for MultFreeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MultFreeCase::I => "(i)",
            MultFreeCase::II => "(ii)",
            MultFreeCase::III => "(iii)",
            MultFreeCase::IV => "(iv)",
            MultFreeCase::V => "(v)",
            MultFreeCase::VI => "(vi)",
        })
    }
}

fn one_sided_case(mu: &StrictPartition, nu: &StrictPartition) -> Option<MultFreeCase> {
    let nu_parts = nu.parts();
    let opposite = mu.sign() != nu.sign();
    if nu_parts == [1] {
        return Some(MultFreeCase::I);
    }
    if nu_parts == [2, 1] && mu.is_hook_staircase() && mu.sign().is_even() {
        return Some(MultFreeCase::II);
    }
    if mu.is_staircase() {
        match *nu_parts {
            [_] => return Some(MultFreeCase::III),
            [a, 1] if a + 1 > 3 && opposite => return Some(MultFreeCase::IV),
            [a, b] if a == b + 1 && mu.sign().is_even() => return Some(MultFreeCase::V),
            _ => {}
        }
    }
    if mu.is_fat_staircase() && nu_parts.len() == 1 && nu_parts[0] > 1 && opposite {
        return Some(MultFreeCase::VI);
    }
    None
}

/// Whether `⟨μ⟩ ⊗̂ ⟨ν⟩` is multiplicity-free, and under which family.
pub fn is_mult_free(mu: &StrictPartition, nu: &StrictPartition) -> Option<MultFreeCase> {
    one_sided_case(mu, nu).or_else(|| one_sided_case(nu, mu))
}

/// `Some(λ)` exactly when `⟨μ⟩ ⊗̂ ⟨ν⟩ = ⟨λ⟩` is irreducible.
pub fn irreducible_outer(mu: &StrictPartition, nu: &StrictPartition) -> Option<StrictPartition> {
    let (stair, other) = if nu.parts() == [1] {
        (mu, nu)
    } else {
        (nu, mu)
    };
    if other.parts() != [1] || !stair.is_staircase() {
        return None;
    }
    let m = stair.len() as u32;
    if m % 4 != 2 && m % 4 != 3 {
        return None;
    }
    Some(raised_staircase(m))
}

/// `(m+1, m-1, m-2, …, 1)`.
pub fn raised_staircase(m: u32) -> StrictPartition {
    let mut parts = vec![m + 1];
    parts.extend((1..m).rev());
    StrictPartition::new(parts).expect("strict")
}

/// `m` with `m(m+1)/2 = n`, if any.
pub fn staircase_rank(n: usize) -> Option<u32> {
    let mut m = 0usize;
    while m * (m + 1) / 2 < n {
        m += 1;
    }
    (m * (m + 1) / 2 == n).then_some(m as u32)
}

fn is_strict_with_sign(p: &Partition, even: bool) -> bool {
    p.is_strict() && p.sign().is_even() == even
}

/// Whether the class of `S̃_{m,m}` over `(π, μ)` splits in the double cover.
pub fn splits(pi: &Partition, mu: &Partition) -> bool {
    if pi.has_only_odd_parts() && mu.has_only_odd_parts() {
        return true;
    }
    mixed_strict(pi, mu)
}

fn mixed_strict(pi: &Partition, mu: &Partition) -> bool {
    (is_strict_with_sign(pi, false) && is_strict_with_sign(mu, true))
        || (is_strict_with_sign(pi, true) && is_strict_with_sign(mu, false))
}

/// Which preimage of a split class is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SplitIndex {
    /// The class containing the standard lift.
    One,
    /// The class of `z` times the standard lift.
    Two,
}

impl SplitIndex {
    fn flipped(self) -> Self {
        match self {
            SplitIndex::One => SplitIndex::Two,
            SplitIndex::Two => SplitIndex::One,
        }
    }
}

/// A conjugacy class of `S̃_{m,m}` named by cycle types of both factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassParam {
    pi: Partition,
    mu: Partition,
    split: Option<SplitIndex>,
}

impl ClassParam {
    pub fn new(pi: Partition, mu: Partition, split: Option<SplitIndex>) -> Result<Self> {
        if pi.size() != mu.size() {
            return Err(Error::SizeMismatch {
                expected: pi.size(),
                found: mu.size(),
            });
        }
        if split.is_some() && !splits(&pi, &mu) {
            return Err(Error::InvalidLabel(format!(
                "class (({pi}),({mu})) does not split"
            )));
        }
        Ok(ClassParam { pi, mu, split })
    }

    pub fn pi(&self) -> &Partition {
        &self.pi
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn split(&self) -> Option<SplitIndex> {
        self.split
    }
}

/// Action of `τ̃` on classes of `S̃_{m,m}`.
pub fn tau_on_class(c: &ClassParam, m: usize) -> ClassParam {
    let flip = m % 2 == 1 && mixed_strict(&c.pi, &c.mu);
    let split = c.split.map(|s| if flip { s.flipped() } else { s });
    ClassParam {
        pi: c.mu.clone(),
        mu: c.pi.clone(),
        split,
    }
}

/// Action of `τ̃` on `⟨μ⟩ ⊗_z ⟨ν⟩`; the flag says the image is the associate
/// of the swapped product.
pub fn tau_on_character(x: &CliffordProductLabel, m: usize) -> (CliffordProductLabel, bool) {
    if x.left().shape() == x.right().shape() {
        return (x.clone(), false);
    }
    (x.swapped(), m % 2 == 1)
}

pub fn is_tau_invariant(mu: &StrictPartition, nu: &StrictPartition) -> Result<bool> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch {
            expected: mu.size(),
            found: nu.size(),
        });
    }
    Ok(mu == nu)
}

/// Irreducible inductions from the wreath-type subgroup `S̃_{m:2}` or its
/// intersection with `Ã_n`, read off from `⟨μ⟩ ⊗̂ ⟨μ⟩`.
pub fn wreath_irreducible(mu: &StrictPartition, group: GroupKind) -> Result<Option<Vec<CharRef>>> {
    let dec = outer_product_decompose(mu, mu)?;
    let terms: Vec<(&SpinLabel, u64)> = dec.terms().collect();
    let [(label, 2)] = terms.as_slice() else {
        return Ok(None);
    };
    if !label.is_self_associate() || dec.unresolved().next().is_some() {
        return Ok(None);
    }
    Ok(Some(match group {
        GroupKind::Sn => vec![CharRef::Spin((*label).clone())],
        GroupKind::An => vec![
            CharRef::An(AnSpinLabel::new(label.shape().clone(), Half::Plus)?),
            CharRef::An(AnSpinLabel::new(label.shape().clone(), Half::Minus)?),
        ],
    }))
}

/// `|G:H|² > |G|`, which forces every induced character from `H` to be reducible.
pub fn index_square_reducible(order_g: &BigUint, order_h: &BigUint) -> Result<bool> {
    let non_divisor = || Error::NonDivisor {
        dividend: order_g.to_string(),
        divisor: order_h.to_string(),
    };
    if order_h.is_zero() {
        return Err(non_divisor());
    }
    let (index, r) = order_g.div_rem(order_h);
    if !r.is_zero() {
        return Err(non_divisor());
    }
    Ok(&index * &index > *order_g)
}
