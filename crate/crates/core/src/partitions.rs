//! Integer partitions, Young-diagram geometry and diagonal data.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition stored as its positive parts in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based `(row, column)`.
pub type Position = (usize, usize);

/// Content of the box in `row`, `col`.
pub fn box_content((row, col): Position) -> i64 {
    col as i64 - row as i64
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts, dropping trailing zeros. Fails if the
    /// parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse {
                what: "partition",
                input: format!("{parts:?}"),
            });
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-based), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Rowwise `mu ⊆ self`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.rows() <= self.rows() && mu.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Boxes in row-reading order.
    pub fn boxes(&self) -> impl Iterator<Item = Position> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Comma-separated parts, `"0"` for the empty partition.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            "0".to_string()
        } else {
            join(&self.parts)
        }
    }

    /// Adds a box at the end of `row` (1-based). Returns `None` if the
    /// result is not a partition.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.rows() + 1 {
            return None;
        }
        if row > 1 && self.row(row - 1) <= self.row(row) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// Removes the last box of `row` (1-based) if it is removable.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.rows() || self.row(row + 1) >= self.row(row) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "({})", join(&self.parts))
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(s);
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let bad = || Error::Parse {
            what: "partition",
            input: s.to_string(),
        };
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| bad())
    }
}

/// Diagonal lengths `m(i)` of a Young diagram, on the range `[-h, w]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiagonalDatum {
    mult: BTreeMap<i64, usize>,
}

impl DiagonalDatum {
    pub fn mult(&self, i: i64) -> usize {
        self.mult.get(&i).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<i64, usize> {
        &self.mult
    }

    /// `(-h, w)`, or `None` for the empty diagram.
    pub fn range(&self) -> Option<(i64, i64)> {
        let lo = *self.mult.keys().next()?;
        let hi = *self.mult.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn contains(&self, i: i64) -> bool {
        self.mult.contains_key(&i)
    }

    pub fn total(&self) -> usize {
        self.mult.values().sum()
    }

    /// Rebuilds the partition. Diagonal `d` occupies its first `m(d)` cells
    /// counted from the top-left border.
    pub fn to_partition(&self) -> Partition {
        let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
        for (&d, &m) in &self.mult {
            for k in 1..=m {
                let row = if d >= 0 { k } else { k + (-d) as usize };
                *rows.entry(row).or_default() += 1;
            }
        }
        Partition::from_unsorted(rows.into_values().collect())
    }
}

pub fn diagonal_datum(lambda: &Partition) -> DiagonalDatum {
    let mut mult = BTreeMap::new();
    for b in lambda.boxes() {
        *mult.entry(box_content(b)).or_default() += 1;
    }
    DiagonalDatum { mult }
}

/// Rowwise minimum.
pub fn intersection(lambda: &Partition, mu: &Partition) -> Partition {
    let parts = lambda
        .parts
        .iter()
        .zip(&mu.parts)
        .map(|(a, b)| *a.min(b))
        .collect();
    Partition { parts }
}

/// Diagonal multiplicities of a skew shape `λ/μ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SkewDatum {
    mult: BTreeMap<i64, usize>,
}

impl SkewDatum {
    pub fn mult(&self, i: i64) -> usize {
        self.mult.get(&i).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<i64, usize> {
        &self.mult
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn total(&self) -> usize {
        self.mult.values().sum()
    }
}

pub fn skew_datum(lambda: &Partition, mu: &Partition) -> Result<SkewDatum> {
    if !lambda.contains(mu) {
        return Err(Error::ContainmentError {
            inner: mu.to_string(),
            outer: lambda.to_string(),
        });
    }
    let big = diagonal_datum(lambda);
    let small = diagonal_datum(mu);
    let mult = big
        .mult
        .iter()
        .filter_map(|(&i, &m)| {
            let d = m - small.mult(i);
            (d > 0).then_some((i, d))
        })
        .collect();
    Ok(SkewDatum { mult })
}

/// Removable and addable boxes, each sorted by position.
pub fn boundary_boxes(lambda: &Partition) -> (Vec<Position>, Vec<Position>) {
    let mut removable = Vec::new();
    let mut addable = Vec::new();
    for r in 1..=lambda.rows() + 1 {
        if lambda.remove_box(r).is_some() {
            removable.push((r, lambda.row(r)));
        }
        if lambda.add_box(r).is_some() {
            addable.push((r, lambda.row(r) + 1));
        }
    }
    (removable, addable)
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let width = lambda.row(1);
    let parts = (1..=width)
        .map(|j| lambda.parts.iter().filter(|&&p| p >= j).count())
        .collect();
    Partition { parts }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Equal,
    Dominates,
    Dominated,
    Incomparable,
}

pub fn dominance(lambda: &Partition, mu: &Partition) -> Result<Dominance> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    if lambda == mu {
        return Ok(Dominance::Equal);
    }
    let (mut sa, mut sb) = (0, 0);
    let (mut ge, mut le) = (true, true);
    for i in 1..=lambda.rows().max(mu.rows()) {
        sa += lambda.row(i);
        sb += mu.row(i);
        ge &= sa >= sb;
        le &= sa <= sb;
    }
    Ok(match (ge, le) {
        (true, _) => Dominance::Dominates,
        (_, true) => Dominance::Dominated,
        _ => Dominance::Incomparable,
    })
}
