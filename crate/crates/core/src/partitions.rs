//! Partition arithmetic.
//!
//! Parts are always stored in weakly decreasing order. [`StrictPartition`]
//! additionally guarantees distinct parts and is the index set for spin
//! characters of the double covers.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::HalfPowerScalar;

/// Parity of `n - len`, i.e. the sign of a permutation of that cycle type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// 0 for even, 1 for odd.
    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// A partition with parts in weakly decreasing order. The empty partition is allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidLabel(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The size `n`.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The length `ℓ`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn sign(&self) -> Parity {
        if (self.size() - self.len()).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_only_odd_parts(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Part-wise sum, padding the shorter partition with zeros.
    pub fn sum(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// `ε = 1` for even partitions and `√2` for odd ones.
    pub fn epsilon(&self) -> HalfPowerScalar {
        HalfPowerScalar::sqrt2_pow(self.sign().bit() as i64)
    }

    pub fn into_strict(self) -> Result<StrictPartition> {
        StrictPartition::try_from(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated positive integers in either order; the empty string is
    /// the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut column = 1;
        for field in s.split(',') {
            let lead = field.len() - field.trim_start().len();
            let token = field.trim();
            let at = column + lead;
            if token.is_empty() {
                return Err(Error::Parse {
                    column: at,
                    message: "empty part".into(),
                });
            }
            if let Some(bad) = token.find(|c: char| !c.is_ascii_digit()) {
                return Err(Error::Parse {
                    column: at + bad,
                    message: format!(
                        "unexpected character {:?}",
                        token[bad..].chars().next().unwrap()
                    ),
                });
            }
            let value: u32 = token.parse().map_err(|_| Error::Parse {
                column: at,
                message: format!("part {token:?} out of range"),
            })?;
            if value == 0 {
                return Err(Error::Parse {
                    column: at,
                    message: "parts must be positive".into(),
                });
            }
            parts.push(value);
            column += field.len() + 1;
        }
        Partition::new(parts)
    }
}

/// A partition with pairwise distinct parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Partition", into = "Partition")]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)?.into_strict()
    }

    pub fn empty() -> Self {
        StrictPartition(Partition::empty())
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: u32) -> Self {
        StrictPartition(Partition {
            parts: (1..=k).rev().collect(),
        })
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }

    /// `N(λ)`: strict partitions of `n + 1` obtained by adding 1 to one part.
    pub fn neighbors(&self) -> Vec<StrictPartition> {
        let parts = self.0.parts();
        (0..parts.len())
            .filter(|&i| i == 0 || parts[i - 1] > parts[i] + 1)
            .map(|i| {
                let mut next = parts.to_vec();
                next[i] += 1;
                StrictPartition(Partition { parts: next })
            })
            .collect()
    }

    /// `λ⁺ = λ ∪ (1)`.
    pub fn plus_one_part(&self) -> Result<StrictPartition> {
        if self.0.parts().last() == Some(&1) {
            return Err(Error::PartContainsOne(self.0.clone()));
        }
        let mut parts = self.0.parts().to_vec();
        parts.push(1);
        Ok(StrictPartition(Partition { parts }))
    }

    pub fn classify_shape(&self) -> ShapeClass {
        classify_shape(self)
    }

    pub fn is_staircase(&self) -> bool {
        let parts = self.0.parts();
        parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p as usize == parts.len() - i)
    }

    /// Consecutive parts `(k+r, ..., 1+r)` with `r >= 0`; staircases included.
    pub fn is_fat_staircase(&self) -> bool {
        !self.0.is_empty() && is_consecutive(self.0.parts())
    }

    /// A fat staircase followed by a staircase; either piece may be empty.
    pub fn is_hook_staircase(&self) -> bool {
        !matches!(self.classify_shape(), ShapeClass::Other)
    }
}

fn is_consecutive(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] == w[1] + 1)
}

impl Deref for StrictPartition {
    type Target = Partition;

    fn deref(&self) -> &Partition {
        &self.0
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(Error::NotStrict(p))
        }
    }
}

impl From<StrictPartition> for Partition {
    fn from(p: StrictPartition) -> Partition {
        p.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Partition>()?.into_strict()
    }
}

/// The most specific shape tag of a strict partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeClass {
    /// `(k, k-1, ..., 1)`; `k = 0` is the empty partition.
    Staircase {
        k: u32,
    },
    /// `(k+r, ..., 1+r)` with `r >= 1`.
    FatStaircase {
        k: u32,
        r: u32,
    },
    /// Non-empty fat staircase (`r >= 1`) followed by a non-empty staircase.
    HookStaircase {
        fat: StrictPartition,
        staircase: StrictPartition,
    },
    Other,
}

pub fn classify_shape(p: &StrictPartition) -> ShapeClass {
    let parts = p.parts();
    if p.is_staircase() {
        return ShapeClass::Staircase {
            k: parts.len() as u32,
        };
    }
    // Maximal staircase tail; the remaining head must be one consecutive run.
    let mut split = parts.len();
    while split > 0 && parts[split - 1] as usize == parts.len() - split + 1 {
        split -= 1;
    }
    let (head, tail) = parts.split_at(split);
    if !is_consecutive(head) {
        return ShapeClass::Other;
    }
    let r = head[head.len() - 1] - 1;
    if tail.is_empty() {
        ShapeClass::FatStaircase {
            k: head.len() as u32,
            r,
        }
    } else {
        ShapeClass::HookStaircase {
            fat: StrictPartition(Partition {
                parts: head.to_vec(),
            }),
            staircase: StrictPartition(Partition {
                parts: tail.to_vec(),
            }),
        }
    }
}

/// Which family [`enumerate_strict`] produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrictFilter {
    /// `D_n`
    All,
    /// `D_n^+`
    Even,
    /// `D_n^-`
    Odd,
    /// `O_n`, partitions into odd parts (not necessarily distinct).
    OddParts,
}

/// Enumerates `D_n`, `D_n^±` or `O_n` in descending lexicographic order.
pub fn enumerate_strict(n: usize, filter: StrictFilter) -> Vec<Partition> {
    match filter {
        StrictFilter::OddParts => {
            let mut out = Vec::new();
            gen_partitions(n as u32, n as u32, true, false, &mut Vec::new(), &mut out);
            out
        }
        _ => strict_partitions(n)
            .into_iter()
            .filter(|p| match filter {
                StrictFilter::Even => p.sign().is_even(),
                StrictFilter::Odd => p.sign().is_odd(),
                _ => true,
            })
            .map(StrictPartition::into_partition)
            .collect(),
    }
}

/// `D_n` in descending lexicographic order.
pub fn strict_partitions(n: usize) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    gen_partitions(n as u32, n as u32, false, true, &mut Vec::new(), &mut out);
    out.into_iter().map(StrictPartition).collect()
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    gen_partitions(n as u32, n as u32, false, false, &mut Vec::new(), &mut out);
    out
}

fn gen_partitions(
    rest: u32,
    max: u32,
    odd_only: bool,
    strict: bool,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        if odd_only && part % 2 == 0 {
            continue;
        }
        prefix.push(part);
        let next_max = if strict { part - 1 } else { part };
        gen_partitions(rest - part, next_max, odd_only, strict, prefix, out);
        prefix.pop();
    }
}
