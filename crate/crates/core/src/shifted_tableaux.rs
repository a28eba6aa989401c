//! Shifted diagrams, marked shifted tableaux and the shifted
//! Littlewood-Richardson count `st(λ; μ, ν)`.
//!
//! Cells use 1-based matrix coordinates `(row, col)`. Row `i` of the shifted
//! diagram of `λ` occupies columns `i ..= λ_i + i - 1`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::StrictPartition;

pub type Cell = (usize, usize);

/// A letter of the marked alphabet `1' < 1 < 2' < 2 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub value: u32,
    pub marked: bool,
}

impl Letter {
    pub fn unmarked(value: u32) -> Self {
        Letter {
            value,
            marked: false,
        }
    }

    pub fn marked(value: u32) -> Self {
        Letter {
            value,
            marked: true,
        }
    }

    fn rank(self) -> u32 {
        2 * self.value - u32::from(self.marked)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marked {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedDiagram {
    pub shape: StrictPartition,
    pub cells: BTreeSet<Cell>,
}

pub fn shifted_diagram(shape: &StrictPartition) -> ShiftedDiagram {
    let cells = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &part)| {
            let row = i + 1;
            (row..row + part as usize).map(move |col| (row, col))
        })
        .collect();
    ShiftedDiagram {
        shape: shape.clone(),
        cells,
    }
}

/// `S(λ) ⊇ S(μ)` iff `ℓ(μ) <= ℓ(λ)` and `μ_i <= λ_i` for every row.
pub fn contains(outer: &StrictPartition, inner: &StrictPartition) -> bool {
    inner.len() <= outer.len() && inner.parts().iter().zip(outer.parts()).all(|(m, l)| m <= l)
}

/// `S(λ) \ S(μ)`.
pub fn skew_cells(outer: &StrictPartition, inner: &StrictPartition) -> Result<BTreeSet<Cell>> {
    if !contains(outer, inner) {
        return Err(Error::NotContained {
            outer: outer.as_partition().clone(),
            inner: inner.as_partition().clone(),
        });
    }
    Ok(SkewShape::new(outer, inner).cells().collect())
}

/// Row extents of a skew shifted diagram.
#[derive(Debug, Clone)]
struct SkewShape {
    /// `(first_col, last_col)` per row; empty rows have `first > last`.
    rows: Vec<(usize, usize)>,
}

impl SkewShape {
    fn new(outer: &StrictPartition, inner: &StrictPartition) -> Self {
        let rows = (0..outer.len())
            .map(|i| {
                let row = i + 1;
                let first = row + inner.part(i) as usize;
                let last = outer.part(i) as usize + row - 1;
                (first, last)
            })
            .collect();
        SkewShape { rows }
    }

    fn contains(&self, (row, col): Cell) -> bool {
        row >= 1
            && self
                .rows
                .get(row - 1)
                .is_some_and(|&(first, last)| first <= col && col <= last)
    }

    fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &(first, last))| (first..=last).map(move |col| (i + 1, col)))
    }

    fn num_cells(&self) -> usize {
        self.rows
            .iter()
            .map(|&(f, l)| (l + 1).saturating_sub(f))
            .sum()
    }
}

/// A filling of `S(λ/μ)` by marked letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedSkewTableau {
    outer: StrictPartition,
    inner: StrictPartition,
    entries: BTreeMap<Cell, Letter>,
}

impl ShiftedSkewTableau {
    /// Validates that `entries` covers exactly `S(λ/μ)` and satisfies the
    /// column/row monotonicity and marking rules.
    pub fn new(
        outer: StrictPartition,
        inner: StrictPartition,
        entries: BTreeMap<Cell, Letter>,
    ) -> Result<Self> {
        let cells = skew_cells(&outer, &inner)?;
        if !entries.keys().copied().eq(cells.iter().copied()) {
            return Err(Error::InvalidLabel(
                "entries do not cover the skew diagram".into(),
            ));
        }
        let t = ShiftedSkewTableau {
            outer,
            inner,
            entries,
        };
        if !t.is_semistandard() {
            return Err(Error::InvalidLabel(
                "filling violates the tableau conditions".into(),
            ));
        }
        Ok(t)
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn entries(&self) -> &BTreeMap<Cell, Letter> {
        &self.entries
    }

    fn is_semistandard(&self) -> bool {
        self.entries.iter().all(|(&(r, c), &x)| {
            let below_ok = self
                .entries
                .get(&(r + 1, c))
                .is_none_or(|&y| x < y || (x == y && x.marked));
            let right_ok = self
                .entries
                .get(&(r, c + 1))
                .is_none_or(|&y| x < y || (x == y && !x.marked));
            below_ok && right_ok
        })
    }

    /// `c_k` = number of cells holding `k` or `k'`.
    pub fn content(&self) -> Vec<u32> {
        let mut content = Vec::new();
        for x in self.entries.values() {
            let k = x.value as usize;
            if content.len() < k {
                content.resize(k, 0);
            }
            content[k - 1] += 1;
        }
        content
    }

    /// Rows read left to right, bottom row first.
    pub fn word(&self) -> TableauWord {
        let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); self.outer.len()];
        for (&(r, _), &x) in &self.entries {
            rows[r - 1].push(x);
        }
        TableauWord(rows.into_iter().rev().flatten().collect())
    }
}

impl fmt::Display for ShiftedSkewTableau {
    /// ASCII grid; inner cells are drawn as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &part) in self.outer.parts().iter().enumerate() {
            let row = i + 1;
            let mut line = "   ".repeat(row - 1);
            for col in row..row + part as usize {
                match self.entries.get(&(row, col)) {
                    Some(x) => line.push_str(&format!("{:>3}", x.to_string())),
                    None => line.push_str("  ."),
                }
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TableauWord(pub Vec<Letter>);

impl TableauWord {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Leftmost occurrence of each `{a', a}` is unmarked, and the word has the
    /// lattice property.
    pub fn satisfies_tp(&self) -> bool {
        self.leftmost_unmarked() && self.is_lattice()
    }

    fn leftmost_unmarked(&self) -> bool {
        let mut seen = BTreeSet::new();
        for x in &self.0 {
            if seen.insert(x.value) && x.marked {
                return false;
            }
        }
        true
    }

    /// Lattice property via the counts `m_i(j)`, `0 <= j <= 2N`: the first N
    /// steps scan unmarked letters right to left, the next N scan marked
    /// letters left to right.
    fn is_lattice(&self) -> bool {
        let w = &self.0;
        let n = w.len();
        let top = w.iter().map(|x| x.value).max().unwrap_or(0);
        for i in 1..top {
            let (mut mi, mut mj) = (0usize, 0usize);
            for x in w.iter().rev() {
                if mi == mj && x.value == i + 1 {
                    return false;
                }
                if !x.marked {
                    if x.value == i {
                        mi += 1;
                    } else if x.value == i + 1 {
                        mj += 1;
                    }
                }
            }
            for x in w.iter().take(n) {
                if mi == mj && ((x.value == i && !x.marked) || (x.value == i + 1 && x.marked)) {
                    return false;
                }
                if x.marked {
                    if x.value == i {
                        mi += 1;
                    } else if x.value == i + 1 {
                        mj += 1;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for TableauWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Letter::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `st(λ; μ, ν)`: tableaux of shape `λ/μ` and content `ν` satisfying (TP).
pub fn st_count(
    outer: &StrictPartition,
    inner: &StrictPartition,
    content: &StrictPartition,
) -> Result<u64> {
    let mut count = 0u64;
    visit_fillings(outer, inner, content, true, &mut |_, word| {
        if word.satisfies_tp() {
            count += 1;
        }
    })?;
    Ok(count)
}

/// All tableaux counted by [`st_count`].
pub fn tp_tableaux(
    outer: &StrictPartition,
    inner: &StrictPartition,
    content: &StrictPartition,
) -> Result<Vec<ShiftedSkewTableau>> {
    let mut out = Vec::new();
    visit_fillings(outer, inner, content, true, &mut |t, word| {
        if word.satisfies_tp() {
            out.push(t());
        }
    })?;
    Ok(out)
}

/// Every tableau of shape `λ/μ` with content `ν`, with no word condition.
pub fn fillings(
    outer: &StrictPartition,
    inner: &StrictPartition,
    content: &StrictPartition,
) -> Result<Vec<ShiftedSkewTableau>> {
    let mut out = Vec::new();
    visit_fillings(outer, inner, content, false, &mut |t, _| out.push(t()))?;
    Ok(out)
}

/// Backtracking over fillings. Cells are visited top row first, each row
/// right to left, which is the tableau word read backwards; with
/// `prune_lattice` the first half of the lattice condition is enforced on the
/// prefix. The visitor always sees complete fillings only.
fn visit_fillings(
    outer: &StrictPartition,
    inner: &StrictPartition,
    content: &StrictPartition,
    prune_lattice: bool,
    visit: &mut dyn FnMut(&dyn Fn() -> ShiftedSkewTableau, &TableauWord),
) -> Result<()> {
    let expected = inner.size() + content.size();
    if outer.size() != expected {
        return Err(Error::SizeMismatch {
            expected,
            found: outer.size(),
        });
    }
    if !contains(outer, inner) || (prune_lattice && outer.len() > inner.len() + content.len()) {
        return Ok(());
    }
    let shape = SkewShape::new(outer, inner);
    debug_assert_eq!(shape.num_cells(), content.size());
    let order: Vec<Cell> = shape
        .rows
        .iter()
        .enumerate()
        .flat_map(|(i, &(first, last))| (first..=last).rev().map(move |col| (i + 1, col)))
        .collect();

    let mut search = Search {
        shape: &shape,
        order: &order,
        grid: BTreeMap::new(),
        remaining: content.parts().to_vec(),
        unmarked_seen: vec![0; content.len() + 1],
        prune_lattice,
    };
    search.run(0, &mut |grid: &BTreeMap<Cell, Letter>| {
        let build = || ShiftedSkewTableau {
            outer: outer.clone(),
            inner: inner.clone(),
            entries: grid.clone(),
        };
        let word = build().word();
        visit(&build, &word);
    });
    Ok(())
}

struct Search<'a> {
    shape: &'a SkewShape,
    order: &'a [Cell],
    grid: BTreeMap<Cell, Letter>,
    remaining: Vec<u32>,
    /// Unmarked letters placed so far, indexed by value (index 0 unused).
    unmarked_seen: Vec<usize>,
    prune_lattice: bool,
}

impl Search<'_> {
    fn run(&mut self, step: usize, done: &mut dyn FnMut(&BTreeMap<Cell, Letter>)) {
        let Some(&(row, col)) = self.order.get(step) else {
            done(&self.grid);
            return;
        };
        let right = self
            .shape
            .contains((row, col + 1))
            .then(|| self.grid[&(row, col + 1)]);
        let above = self
            .shape
            .contains((row - 1, col))
            .then(|| self.grid[&(row - 1, col)]);

        for v in 1..=self.remaining.len() as u32 {
            if self.remaining[v as usize - 1] == 0 {
                continue;
            }
            if self.prune_lattice
                && v >= 2
                && self.unmarked_seen[v as usize - 1] == self.unmarked_seen[v as usize]
            {
                continue;
            }
            for marked in [true, false] {
                let x = Letter { value: v, marked };
                if let Some(r) = right {
                    if x > r || (x == r && marked) {
                        continue;
                    }
                }
                if let Some(a) = above {
                    if x < a || (x == a && !marked) {
                        continue;
                    }
                }
                self.remaining[v as usize - 1] -= 1;
                if !marked {
                    self.unmarked_seen[v as usize] += 1;
                }
                self.grid.insert((row, col), x);
                self.run(step + 1, done);
                self.grid.remove(&(row, col));
                if !marked {
                    self.unmarked_seen[v as usize] -= 1;
                }
                self.remaining[v as usize - 1] += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn word(text: &str) -> TableauWord {
        TableauWord(
            text.split_whitespace()
                .map(|t| match t.strip_suffix('\'') {
                    Some(v) => Letter::marked(v.parse().unwrap()),
                    None => Letter::unmarked(t.parse().unwrap()),
                })
                .collect(),
        )
    }

    #[test]
    fn alphabet_order() {
        let mut xs = vec![
            Letter::unmarked(2),
            Letter::marked(1),
            Letter::marked(2),
            Letter::unmarked(1),
        ];
        xs.sort();
        assert_eq!(
            xs,
            vec![
                Letter::marked(1),
                Letter::unmarked(1),
                Letter::marked(2),
                Letter::unmarked(2)
            ]
        );
    }

    #[test]
    fn diagrams() {
        let d = shifted_diagram(&sp(&[3, 1]));
        assert_eq!(d.cells, BTreeSet::from([(1, 1), (1, 2), (1, 3), (2, 2)]));
        let d = shifted_diagram(&sp(&[2, 1]));
        assert_eq!(d.cells, BTreeSet::from([(1, 1), (1, 2), (2, 2)]));
        assert!(shifted_diagram(&StrictPartition::empty()).cells.is_empty());
    }

    #[test]
    fn skew_diagrams() {
        assert_eq!(
            skew_cells(&sp(&[4, 2]), &sp(&[2, 1])).unwrap(),
            BTreeSet::from([(1, 3), (1, 4), (2, 3)])
        );
        assert_eq!(
            skew_cells(&sp(&[5, 1]), &sp(&[2, 1])).unwrap(),
            BTreeSet::from([(1, 3), (1, 4), (1, 5)])
        );
        assert!(matches!(
            skew_cells(&sp(&[3, 1]), &sp(&[3, 2])),
            Err(Error::NotContained { .. })
        ));
        let d = shifted_diagram(&sp(&[5, 3, 1]));
        let inner = shifted_diagram(&sp(&[3, 1]));
        let diff: BTreeSet<_> = d.cells.difference(&inner.cells).copied().collect();
        assert_eq!(skew_cells(&sp(&[5, 3, 1]), &sp(&[3, 1])).unwrap(), diff);
    }

    #[test]
    fn unique_single_letter_words() {
        let ts = tp_tableaux(&sp(&[4, 2]), &sp(&[2, 1]), &sp(&[3])).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].word(), word("1 1' 1"));

        let ts = tp_tableaux(&sp(&[5, 1]), &sp(&[2, 1]), &sp(&[3])).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].word(), word("1 1 1"));

        let ts = tp_tableaux(&sp(&[2, 1]), &sp(&[2, 1]), &StrictPartition::empty()).unwrap();
        assert_eq!(ts.len(), 1);
        assert!(ts[0].word().is_empty());
    }

    #[test]
    fn tp_examples() {
        assert!(word("1 1' 1").satisfies_tp());
        assert!(!word("1' 1 1").satisfies_tp());
        assert!(TableauWord::default().satisfies_tp());
        // a 2 read before any 1 from the right breaks the lattice condition
        assert!(!word("1 2").satisfies_tp());
        assert!(word("2 1 1").satisfies_tp());
        // content (1,1) is never lattice
        assert!(!word("2 1").satisfies_tp());
    }

    #[test]
    fn st_examples() {
        assert_eq!(
            st_count(&sp(&[4, 2]), &sp(&[2, 1]), &sp(&[2, 1])).unwrap(),
            1
        );
        assert_eq!(
            st_count(&sp(&[6, 4, 2]), &sp(&[3, 2, 1]), &sp(&[3, 2, 1])).unwrap(),
            1
        );
        assert_eq!(st_count(&sp(&[5, 1]), &sp(&[3, 1]), &sp(&[2])).unwrap(), 1);
        assert_eq!(st_count(&sp(&[3, 2, 1]), &sp(&[5]), &sp(&[1])).unwrap(), 0);
        assert_eq!(
            st_count(&sp(&[4, 2]), &sp(&[2, 1]), &sp(&[2])),
            Err(Error::SizeMismatch {
                expected: 5,
                found: 6
            })
        );
    }

    #[test]
    fn tableau_validation() {
        let entries = BTreeMap::from([
            ((1, 3), Letter::marked(1)),
            ((1, 4), Letter::unmarked(1)),
            ((2, 3), Letter::unmarked(1)),
        ]);
        let t = ShiftedSkewTableau::new(sp(&[4, 2]), sp(&[2, 1]), entries).unwrap();
        assert_eq!(t.content(), vec![3]);
        assert_eq!(t.to_string(), "  .  . 1'  1\n     .  1\n");

        let bad = BTreeMap::from([
            ((1, 3), Letter::unmarked(1)),
            ((1, 4), Letter::unmarked(1)),
            ((2, 3), Letter::unmarked(1)),
        ]);
        assert!(ShiftedSkewTableau::new(sp(&[4, 2]), sp(&[2, 1]), bad).is_err());
    }

    #[test]
    fn pruning_matches_unpruned_filter() {
        let mut checked = 0;
        for n in 1..=9 {
            for lam in crate::partitions::strict_partitions(n) {
                for l in 0..=n {
                    for mu in crate::partitions::strict_partitions(l) {
                        for nu in crate::partitions::strict_partitions(n - l) {
                            let pruned = st_count(&lam, &mu, &nu).unwrap();
                            let brute = fillings(&lam, &mu, &nu)
                                .unwrap()
                                .iter()
                                .filter(|t| t.word().satisfies_tp())
                                .count() as u64;
                            assert_eq!(pruned, brute, "λ={lam} μ={mu} ν={nu}");
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn every_filling_is_semistandard() {
        for t in fillings(&sp(&[5, 3, 1]), &sp(&[2]), &sp(&[4, 2, 1])).unwrap() {
            assert!(t.is_semistandard());
            assert_eq!(t.content(), vec![4, 2, 1]);
        }
    }
}
