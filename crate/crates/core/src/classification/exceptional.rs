//! Minimal triples, block stabilizers, monomial characters and the static
//! data for the exceptional covers of `A_6` and `A_7`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Value};

use super::{raised_staircase, staircase_rank, GroupKind};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_strict, StrictFilter, StrictPartition};
use crate::spin_characters::{degree, AnSpinLabel, Half, SpinLabel};

/// Exceptional subgroups, known only by name and order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedSubgroup {
    /// `3²:8`, minimal stabilizer for `⟨4,2⟩`.
    ThreeSquaredEight,
    /// `3²:Q₈:2 ≅ S̃_{6:2}`, the wreath-type block stabilizer.
    ThreeSquaredQ8Two,
    /// `2×L₂(8):3`.
    TwoL28Three,
}

impl NamedSubgroup {
    pub fn order(self) -> BigUint {
        BigUint::from(match self {
            NamedSubgroup::ThreeSquaredEight => 72u32,
            NamedSubgroup::ThreeSquaredQ8Two => 144,
            NamedSubgroup::TwoL28Three => 3024,
        })
    }

    pub fn ascii(self) -> &'static str {
        match self {
            NamedSubgroup::ThreeSquaredEight => "3^2:8",
            NamedSubgroup::ThreeSquaredQ8Two => "3^2:Q8:2",
            NamedSubgroup::TwoL28Three => "2xL2(8):3",
        }
    }

    pub fn unicode(self) -> &'static str {
        match self {
            NamedSubgroup::ThreeSquaredEight => "3²:8",
            NamedSubgroup::ThreeSquaredQ8Two => "3²:Q₈:2",
            NamedSubgroup::TwoL28Three => "2×L₂(8):3",
        }
    }
}

/// Subgroup descriptor for a block stabilizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stabilizer {
    /// `Ã_n`.
    AltCover(usize),
    /// `S̃_n`.
    SymCover(usize),
    Named(NamedSubgroup),
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `|S̃_n| = 2·n!` and `|Ã_n| = n!`.
pub fn cover_order(group: GroupKind, n: usize) -> BigUint {
    match group {
        GroupKind::Sn => factorial(n) * 2u32,
        GroupKind::An => factorial(n),
    }
}

impl Stabilizer {
    pub fn order(&self) -> BigUint {
        match *self {
            Stabilizer::AltCover(n) => cover_order(GroupKind::An, n),
            Stabilizer::SymCover(n) => cover_order(GroupKind::Sn, n),
            Stabilizer::Named(g) => g.order(),
        }
    }

    pub fn ascii(&self) -> String {
        match *self {
            Stabilizer::AltCover(n) => format!("2.A{n}"),
            Stabilizer::SymCover(n) => format!("2.S{n}"),
            Stabilizer::Named(g) => g.ascii().to_string(),
        }
    }
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Stabilizer::AltCover(n) => write!(f, "Ã_{n}"),
            Stabilizer::SymCover(n) => write!(f, "S̃_{n}"),
            Stabilizer::Named(g) => f.write_str(g.unicode()),
        }
    }
}

/// A character of some group in a triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CharRef {
    Spin(SpinLabel),
    An(AnSpinLabel),
    /// Either constituent of `⟨λ⟩↓Ã_n` for even `λ`.
    AnEitherHalf(StrictPartition),
    /// A character of an exceptional subgroup, described in words.
    Named {
        description: &'static str,
        degree: u32,
    },
}

impl CharRef {
    pub fn degree(&self) -> BigUint {
        match self {
            CharRef::Spin(l) => l.degree(),
            CharRef::An(l) => l.degree(),
            CharRef::AnEitherHalf(shape) => degree(shape) >> 1u32,
            CharRef::Named { degree, .. } => BigUint::from(*degree),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CharRef::Spin(l) => serde_json::to_value(l).expect("label serializes"),
            CharRef::An(l) => serde_json::to_value(l).expect("label serializes"),
            CharRef::AnEitherHalf(shape) => json!({"lambda": shape.parts(), "half": "either"}),
            CharRef::Named { description, .. } => Value::String(description.to_string()),
        }
    }

    pub fn ascii(&self) -> String {
        match self {
            CharRef::Spin(l) => l.ascii(),
            CharRef::An(l) => match l.half() {
                Half::Whole => format!("<{}>|A", l.shape()),
                Half::Plus => format!("<{}>|A+", l.shape()),
                Half::Minus => format!("<{}>|A-", l.shape()),
            },
            CharRef::AnEitherHalf(shape) => format!("<{shape}>|A+-"),
            CharRef::Named { description, .. } => description.to_string(),
        }
    }
}

impl fmt::Display for CharRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharRef::Spin(l) => write!(f, "{l}"),
            CharRef::An(l) => write!(f, "{l}"),
            CharRef::AnEitherHalf(shape) => write!(f, "⟨{shape}⟩↓±"),
            CharRef::Named { description, .. } => f.write_str(description),
        }
    }
}

/// `(H, φ, χ)` with `χ = φ↑G` and `H` minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalTriple {
    pub group: GroupKind,
    pub n: usize,
    pub stabilizer: Stabilizer,
    pub phi: CharRef,
    pub chi: CharRef,
}

impl MinimalTriple {
    pub fn index(&self) -> BigUint {
        cover_order(self.group, self.n) / self.stabilizer.order()
    }

    /// `deg χ = |G:H| · deg φ`.
    pub fn degrees_consistent(&self) -> bool {
        self.chi.degree() == self.index() * self.phi.degree()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.to_string(),
            "n": self.n,
            "stabilizer": self.stabilizer.ascii(),
            "phi": self.phi.to_json(),
            "chi": self.chi.to_json(),
        })
    }
}

const EXT_ORDER_FOUR: CharRef = CharRef::Named {
    description: "extension of a linear character of order four of 3^2:4",
    degree: 1,
};
const LINEAR_ORDER_SIX: CharRef = CharRef::Named {
    description: "linear order 6",
    degree: 1,
};

fn sp(parts: &[u32]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).expect("strict")
}

fn halves(shape: &StrictPartition) -> Vec<CharRef> {
    [Half::Plus, Half::Minus]
        .into_iter()
        .map(|h| CharRef::An(AnSpinLabel::new(shape.clone(), h).expect("even shape")))
        .collect()
}

/// The staircase rank `m` with `n - 1 = m(m+1)/2` and `m mod 4` in `residues`.
fn staircase_step(n: usize, residues: [u32; 2]) -> Option<u32> {
    staircase_rank(n - 1).filter(|m| *m >= 2 && residues.contains(&(m % 4)))
}

/// All minimal triples for `S̃_n` or `Ã_n`, `n >= 4`.
pub fn minimal_triples(group: GroupKind, n: usize) -> Result<Vec<MinimalTriple>> {
    if n < 4 {
        return Err(Error::UnsupportedN(n));
    }
    let mut out = Vec::new();
    let triple = |stabilizer, phi, chi| MinimalTriple {
        group,
        n,
        stabilizer,
        phi,
        chi,
    };
    match group {
        GroupKind::Sn => {
            for lambda in enumerate_strict(n, StrictFilter::Even) {
                let lambda = StrictPartition::try_from(lambda).expect("strict");
                if (n == 6 && lambda == sp(&[4, 2])) || (n == 9 && lambda == sp(&[6, 2, 1])) {
                    continue;
                }
                out.push(triple(
                    Stabilizer::AltCover(n),
                    CharRef::AnEitherHalf(lambda.clone()),
                    CharRef::Spin(SpinLabel::of(lambda)),
                ));
            }
            if let Some(m) = staircase_step(n, [2, 3]) {
                out.push(triple(
                    Stabilizer::SymCover(n - 1),
                    CharRef::Spin(SpinLabel::of(StrictPartition::staircase(m))),
                    CharRef::Spin(SpinLabel::of(raised_staircase(m))),
                ));
            }
            if n == 6 {
                out.push(triple(
                    Stabilizer::Named(NamedSubgroup::ThreeSquaredEight),
                    EXT_ORDER_FOUR,
                    CharRef::Spin(SpinLabel::of(sp(&[4, 2]))),
                ));
            }
            if n == 9 {
                out.push(triple(
                    Stabilizer::Named(NamedSubgroup::TwoL28Three),
                    LINEAR_ORDER_SIX,
                    CharRef::Spin(SpinLabel::of(sp(&[6, 2, 1]))),
                ));
            }
        }
        GroupKind::An => {
            if let Some(m) = staircase_step(n, [0, 1]) {
                let chi = AnSpinLabel::new(raised_staircase(m), Half::Whole).expect("odd shape");
                out.push(triple(
                    Stabilizer::AltCover(n - 1),
                    CharRef::AnEitherHalf(StrictPartition::staircase(m)),
                    CharRef::An(chi),
                ));
            }
            if n == 6 {
                out.push(triple(
                    Stabilizer::Named(NamedSubgroup::ThreeSquaredEight),
                    EXT_ORDER_FOUR,
                    CharRef::AnEitherHalf(sp(&[4, 2])),
                ));
            }
            if n == 9 {
                out.push(triple(
                    Stabilizer::Named(NamedSubgroup::TwoL28Three),
                    LINEAR_ORDER_SIX,
                    CharRef::AnEitherHalf(sp(&[6, 2, 1])),
                ));
            }
        }
    }
    Ok(out)
}

/// Maximal subgroups serving as block stabilizers of an imprimitive character.
pub fn block_stabilizers(label: &CharRef) -> Vec<Stabilizer> {
    match label {
        CharRef::Spin(l) => sn_block_stabilizers(l),
        CharRef::An(l) => an_block_stabilizers(l.shape(), l.half()),
        CharRef::AnEitherHalf(shape) => an_block_stabilizers(shape, Half::Plus),
        CharRef::Named { .. } => Vec::new(),
    }
}

fn sn_block_stabilizers(label: &SpinLabel) -> Vec<Stabilizer> {
    let shape = label.shape();
    let n = shape.size();
    let mut out = Vec::new();
    if shape.is_empty() || shape.sign().is_odd() {
        return out;
    }
    out.push(Stabilizer::AltCover(n));
    if n >= 2 && staircase_step(n, [2, 3]).is_some_and(|m| *shape == raised_staircase(m)) {
        out.push(Stabilizer::SymCover(n - 1));
    }
    if n == 6 && *shape == sp(&[4, 2]) {
        out.push(Stabilizer::Named(NamedSubgroup::ThreeSquaredQ8Two));
    }
    if n == 9 && *shape == sp(&[6, 2, 1]) {
        out.push(Stabilizer::Named(NamedSubgroup::TwoL28Three));
    }
    out
}

fn an_block_stabilizers(shape: &StrictPartition, half: Half) -> Vec<Stabilizer> {
    let n = shape.size();
    let mut out = Vec::new();
    if half == Half::Whole {
        if n >= 4 && staircase_step(n, [0, 1]).is_some_and(|m| *shape == raised_staircase(m)) {
            out.push(Stabilizer::AltCover(n - 1));
        }
        return out;
    }
    if n == 6 && *shape == sp(&[4, 2]) {
        out.push(Stabilizer::Named(NamedSubgroup::ThreeSquaredEight));
    }
    if n == 9 && *shape == sp(&[6, 2, 1]) {
        out.push(Stabilizer::Named(NamedSubgroup::TwoL28Three));
    }
    out
}

/// Imprimitive monomial spin characters with `n <= n_max`.
pub fn monomial_imprimitive(group: GroupKind, n_max: usize) -> Vec<(usize, Vec<CharRef>)> {
    let all: Vec<(usize, StrictPartition)> = match group {
        GroupKind::Sn => vec![(4, sp(&[3, 1])), (6, sp(&[4, 2])), (9, sp(&[6, 2, 1]))],
        GroupKind::An => vec![(6, sp(&[4, 2])), (9, sp(&[6, 2, 1]))],
    };
    all.into_iter()
        .filter(|(n, _)| *n <= n_max)
        .map(|(n, shape)| {
            let chars = match group {
                GroupKind::Sn => vec![CharRef::Spin(SpinLabel::of(shape))],
                GroupKind::An => halves(&shape),
            };
            (n, chars)
        })
        .collect()
}

/// One minimal triple of an exceptional cover, as ATLAS-labelled text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ExceptionalRecord {
    pub group: &'static str,
    pub stabilizer: &'static str,
    pub phi: &'static str,
    pub chi: &'static str,
}

const RECORDS: &[ExceptionalRecord] = &[
    ExceptionalRecord {
        group: "3.A6",
        stabilizer: "3×Ã₅",
        phi: "non-trivial linear character",
        chi: "χ₁₆ or χ̄₁₆",
    },
    ExceptionalRecord {
        group: "3.A6",
        stabilizer: "3×S₄",
        phi: "linear character of order six",
        chi: "χ₁₈ or χ̄₁₈",
    },
    ExceptionalRecord {
        group: "3.A7",
        stabilizer: "3·A₆",
        phi: "φ ∈ {χ₁₄, χ₁₅} (resp. {χ̄₁₄, χ̄₁₅})",
        chi: "χ₂₁ (resp. χ̄₂₁)",
    },
    ExceptionalRecord {
        group: "3.A7",
        stabilizer: "3×S₅",
        phi: "linear character of order six",
        chi: "χ₂₀ or χ̄₂₀",
    },
    ExceptionalRecord {
        group: "3.A7",
        stabilizer: "3×L₂(7)",
        phi: "non-trivial linear character",
        chi: "χ₁₉ or χ̄₁₉",
    },
    ExceptionalRecord {
        group: "6.A6",
        stabilizer: "3×Ã₅",
        phi: "degree two",
        chi: "χ₂₁ or χ₂₂ or one of their complex conjugates",
    },
];

/// Known exceptional covers; `6.A7` has no imprimitive faithful characters.
pub const EXCEPTIONAL_GROUPS: [&str; 4] = ["3.A6", "3.A7", "6.A6", "6.A7"];

pub fn exceptional_records() -> &'static [ExceptionalRecord] {
    RECORDS
}

/// Records for one cover; `None` for an unknown group name.
pub fn exceptional_records_for(group: &str) -> Option<Vec<ExceptionalRecord>> {
    EXCEPTIONAL_GROUPS.contains(&group).then(|| {
        RECORDS
            .iter()
            .filter(|r| r.group == group)
            .copied()
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spin(parts: &[u32]) -> CharRef {
        CharRef::Spin(SpinLabel::of(sp(parts)))
    }

    #[test]
    fn triples_sn4() {
        let t = minimal_triples(GroupKind::Sn, 4).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].stabilizer, Stabilizer::AltCover(4));
        assert_eq!(t[0].phi, CharRef::AnEitherHalf(sp(&[3, 1])));
        assert_eq!(t[0].chi, spin(&[3, 1]));
        assert_eq!(t[1].stabilizer, Stabilizer::SymCover(3));
        assert_eq!(t[1].phi, spin(&[2, 1]));
        assert_eq!(t[1].chi, spin(&[3, 1]));
    }

    #[test]
    fn triples_sn6_and_an() {
        let t = minimal_triples(GroupKind::Sn, 6).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].chi, spin(&[5, 1]));
        assert_eq!(
            t[1].stabilizer,
            Stabilizer::Named(NamedSubgroup::ThreeSquaredEight)
        );
        assert_eq!(t[1].chi, spin(&[4, 2]));

        assert!(minimal_triples(GroupKind::An, 7).unwrap().is_empty());
        let t = minimal_triples(GroupKind::An, 11).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].stabilizer, Stabilizer::AltCover(10));
        assert_eq!(t[0].phi, CharRef::AnEitherHalf(sp(&[4, 3, 2, 1])));
        assert_eq!(
            t[0].chi,
            CharRef::An(AnSpinLabel::new(sp(&[5, 3, 2, 1]), Half::Whole).unwrap())
        );
        assert_eq!(
            minimal_triples(GroupKind::Sn, 3),
            Err(Error::UnsupportedN(3))
        );
    }

    #[test]
    fn triple_degrees_balance() {
        for group in [GroupKind::Sn, GroupKind::An] {
            for n in 4..=16 {
                for t in minimal_triples(group, n).unwrap() {
                    assert!(
                        t.degrees_consistent(),
                        "{group} n={n}: {} from {}",
                        t.chi,
                        t.phi
                    );
                }
            }
        }
    }

    #[test]
    fn triple_json() {
        let t = minimal_triples(GroupKind::Sn, 9).unwrap();
        let last = t.last().unwrap().to_json();
        assert_eq!(
            last,
            json!({"group":"Sn","n":9,"stabilizer":"2xL2(8):3","phi":"linear order 6","chi":{"lambda":[6,2,1],"variant":"self"}})
        );
    }

    #[test]
    fn stabilizers() {
        assert_eq!(
            block_stabilizers(&spin(&[3, 1])),
            vec![Stabilizer::AltCover(4), Stabilizer::SymCover(3)]
        );
        assert_eq!(
            block_stabilizers(&spin(&[4, 2])),
            vec![
                Stabilizer::AltCover(6),
                Stabilizer::Named(NamedSubgroup::ThreeSquaredQ8Two)
            ]
        );
        assert!(block_stabilizers(&spin(&[2, 1])).is_empty());
        assert!(block_stabilizers(&spin(&[5, 4, 3])).is_empty());
        assert_eq!(
            block_stabilizers(&spin(&[4, 3, 2])),
            vec![Stabilizer::AltCover(9)]
        );
        let whole = CharRef::An(AnSpinLabel::new(sp(&[5, 3, 2, 1]), Half::Whole).unwrap());
        assert_eq!(block_stabilizers(&whole), vec![Stabilizer::AltCover(10)]);
        assert_eq!(
            block_stabilizers(&CharRef::AnEitherHalf(sp(&[4, 2]))),
            vec![Stabilizer::Named(NamedSubgroup::ThreeSquaredEight)]
        );
    }

    #[test]
    fn stabilizer_indices_match_degrees() {
        // 3^2:Q8:2 carries a degree-two character inducing to <4,2>
        let idx = cover_order(GroupKind::Sn, 6) / NamedSubgroup::ThreeSquaredQ8Two.order();
        assert_eq!(idx * 2u32, degree(&sp(&[4, 2])));
        assert_eq!(
            cover_order(GroupKind::Sn, 6) / NamedSubgroup::ThreeSquaredEight.order(),
            BigUint::from(20u32)
        );
        assert_eq!(
            cover_order(GroupKind::An, 6) / NamedSubgroup::ThreeSquaredEight.order(),
            BigUint::from(10u32)
        );
        assert_eq!(
            cover_order(GroupKind::Sn, 9) / NamedSubgroup::TwoL28Three.order(),
            BigUint::from(240u32)
        );
        assert_eq!(
            cover_order(GroupKind::An, 9) / NamedSubgroup::TwoL28Three.order(),
            BigUint::from(120u32)
        );
    }

    #[test]
    fn monomial_lists() {
        let sn: Vec<usize> = monomial_imprimitive(GroupKind::Sn, 9)
            .iter()
            .map(|(n, _)| *n)
            .collect();
        assert_eq!(sn, vec![4, 6, 9]);
        assert_eq!(
            monomial_imprimitive(GroupKind::Sn, 5),
            vec![(4, vec![spin(&[3, 1])])]
        );
        let an = monomial_imprimitive(GroupKind::An, 9);
        assert_eq!(an.len(), 2);
        assert!(an.iter().all(|(_, c)| c.len() == 2));
    }

    #[test]
    fn exceptional_data() {
        assert_eq!(exceptional_records_for("6.A7"), Some(vec![]));
        assert!(exceptional_records_for("3.A6")
            .unwrap()
            .iter()
            .any(|r| r.stabilizer == "3×S₄"
                && r.phi.contains("order six")
                && r.chi.contains("χ₁₈")));
        assert!(exceptional_records_for("6.A6")
            .unwrap()
            .iter()
            .any(|r| r.stabilizer == "3×Ã₅" && r.phi == "degree two" && r.chi.contains("χ₂₁")));
        assert_eq!(exceptional_records_for("3.A7").unwrap().len(), 3);
        assert_eq!(exceptional_records_for("2.A5"), None);
        assert_eq!(exceptional_records().len(), 6);
    }
}
