//! Λ_n, updown tableaux and the branching graph.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{box_content, boundary_boxes, dominance, Dominance, Partition};
use crate::scalars::{content_value, Content, ContentValue, Regime};

/// A pair `(λ, f)` with `|λ| = n - 2f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledPartition {
    pub shape: Partition,
    pub defect: usize,
    pub level: usize,
}

impl LabeledPartition {
    /// The labeled partition `(λ, (n - |λ|)/2)` at level `n`.
    pub fn at_level(shape: Partition, level: usize) -> Result<Self> {
        let defect = defect_of(&shape, level)?;
        Ok(LabeledPartition { shape, defect, level })
    }
}

impl fmt::Display for LabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.shape, self.defect)
    }
}

/// `f = (n - |λ|)/2`, or `ShapeLevelMismatch` if that is not a
/// non-negative integer.
pub fn defect_of(shape: &Partition, level: usize) -> Result<usize> {
    let size = shape.size();
    if size > level || !(level - size).is_multiple_of(2) {
        return Err(Error::ShapeLevelMismatch {
            shape: shape.to_string(),
            level,
        });
    }
    Ok((level - size) / 2)
}

/// Λ_n ordered by defect, then by decreasing lexicographic shape.
pub fn enumerate_lambda(n: usize) -> Vec<LabeledPartition> {
    (0..=n / 2)
        .flat_map(|f| {
            Partition::all_of_size(n - 2 * f)
                .into_iter()
                .map(move |shape| LabeledPartition { shape, defect: f, level: n })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Add,
    Remove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub direction: Direction,
    pub diagonal: i64,
}

impl Step {
    pub fn content(self) -> Content {
        match self.direction {
            Direction::Add => Content::add(self.diagonal),
            Direction::Remove => Content::remove(self.diagonal),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {}", self.direction, self.diagonal)
    }
}

/// A path `∅ = T_0, T_1, …, T_n` adding or removing one box per step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpDownTableau {
    steps: Vec<Partition>,
}

impl UpDownTableau {
    /// Validates a sequence of shapes.
    pub fn new(steps: Vec<Partition>) -> Result<Self> {
        let bad = || Error::Parse {
            what: "updown tableau",
            input: steps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" → "),
        };
        if steps.first().is_none_or(|p| !p.is_empty()) {
            return Err(bad());
        }
        for w in steps.windows(2) {
            if step_between(&w[0], &w[1]).is_none() {
                return Err(bad());
            }
        }
        Ok(UpDownTableau { steps })
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.steps
    }

    pub fn level(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn shape(&self) -> &Partition {
        self.steps.last().expect("tableau always contains ∅")
    }

    pub fn at(&self, k: usize) -> &Partition {
        &self.steps[k]
    }

    pub fn labeled(&self) -> LabeledPartition {
        let shape = self.shape().clone();
        let level = self.level();
        LabeledPartition {
            defect: (level - shape.size()) / 2,
            shape,
            level,
        }
    }

    /// The labeled shape at level `k`.
    pub fn labeled_at(&self, k: usize) -> LabeledPartition {
        let shape = self.steps[k].clone();
        LabeledPartition {
            defect: (k - shape.size()) / 2,
            shape,
            level: k,
        }
    }

    pub fn truncate(&self, k: usize) -> UpDownTableau {
        UpDownTableau {
            steps: self.steps[..=k].to_vec(),
        }
    }

    pub fn contents(&self) -> Vec<Content> {
        step_sequence(self).into_iter().map(Step::content).collect()
    }

    pub fn content_values(&self, r: Regime) -> Vec<ContentValue> {
        self.contents().into_iter().map(|c| content_value(c, r)).collect()
    }
}

impl fmt::Display for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.steps.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(" → "))
    }
}

fn step_between(a: &Partition, b: &Partition) -> Option<Step> {
    let (big, small, direction) = if b.size() == a.size() + 1 {
        (b, a, Direction::Add)
    } else if a.size() == b.size() + 1 {
        (a, b, Direction::Remove)
    } else {
        return None;
    };
    if !big.contains(small) {
        return None;
    }
    let row = (1..=big.rows()).find(|&r| big.row(r) != small.row(r))?;
    Some(Step {
        direction,
        diagonal: box_content((row, big.row(row))),
    })
}

pub fn step_sequence(t: &UpDownTableau) -> Vec<Step> {
    t.steps
        .windows(2)
        .map(|w| step_between(&w[0], &w[1]).expect("validated tableau"))
        .collect()
}

/// Shapes reachable from `mu` in one step, in box-position order.
pub fn neighbours(mu: &Partition) -> Vec<Partition> {
    let (removable, addable) = boundary_boxes(mu);
    let mut moves: Vec<((usize, usize), Partition)> = removable
        .into_iter()
        .map(|(r, c)| ((r, c), mu.remove_box(r).expect("removable")))
        .chain(addable.into_iter().map(|(r, c)| ((r, c), mu.add_box(r).expect("addable"))))
        .collect();
    moves.sort_by_key(|a| a.0);
    moves.into_iter().map(|(_, p)| p).collect()
}

fn distance(a: &Partition, b: &Partition) -> usize {
    let common: usize = crate::partitions::intersection(a, b).size();
    a.size() + b.size() - 2 * common
}

/// All updown tableaux of length `n` ending at `lambda`, depth first.
pub fn enumerate_paths(n: usize, lambda: &Partition) -> Result<Vec<UpDownTableau>> {
    defect_of(lambda, n)?;
    let mut out = Vec::new();
    let mut cur = vec![Partition::empty()];
    fn rec(n: usize, target: &Partition, cur: &mut Vec<Partition>, out: &mut Vec<UpDownTableau>) {
        let k = cur.len() - 1;
        if k == n {
            out.push(UpDownTableau { steps: cur.clone() });
            return;
        }
        let last = cur[k].clone();
        for next in neighbours(&last) {
            if distance(&next, target) < n - k {
                cur.push(next);
                rec(n, target, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, lambda, &mut cur, &mut out);
    Ok(out)
}

/// Number of updown tableaux of length `n` ending at each shape.
pub fn path_counts(n: usize) -> HashMap<Partition, u128> {
    let mut counts: HashMap<Partition, u128> = HashMap::from([(Partition::empty(), 1)]);
    for _ in 0..n {
        let mut next: HashMap<Partition, u128> = HashMap::new();
        for (mu, c) in &counts {
            for nu in neighbours(mu) {
                *next.entry(nu).or_default() += c;
            }
        }
        counts = next;
    }
    counts
}

/// Row-filling standard path to `lambda`.
pub fn canonical_path(lambda: &Partition) -> UpDownTableau {
    let mut steps = vec![Partition::empty()];
    let mut parts: Vec<usize> = Vec::new();
    for (r, &len) in lambda.parts().iter().enumerate() {
        parts.push(0);
        for _ in 0..len {
            parts[r] += 1;
            steps.push(Partition::new(parts.clone()).expect("rows filled top-down"));
        }
    }
    UpDownTableau { steps }
}

/// `f` excursions `∅ → □ → ∅` followed by the canonical path.
pub fn drunk_path(n: usize, lambda: &Partition) -> Result<UpDownTableau> {
    let f = defect_of(lambda, n)?;
    let boxed = Partition::new(vec![1]).expect("valid");
    let mut steps = vec![Partition::empty()];
    for _ in 0..f {
        steps.push(boxed.clone());
        steps.push(Partition::empty());
    }
    steps.extend(canonical_path(lambda).steps.into_iter().skip(1));
    Ok(UpDownTableau { steps })
}

/// Order on labeled partitions of one level: larger defect first, then
/// dominance.
pub fn labeled_cmp(a: &LabeledPartition, b: &LabeledPartition) -> Option<Ordering> {
    match a.defect.cmp(&b.defect) {
        Ordering::Equal => match dominance(&a.shape, &b.shape).ok()? {
            Dominance::Equal => Some(Ordering::Equal),
            Dominance::Dominates => Some(Ordering::Greater),
            Dominance::Dominated => Some(Ordering::Less),
            Dominance::Incomparable => None,
        },
        o => Some(o),
    }
}

/// Compares two paths of the same length at the last level where they differ.
pub fn path_cmp(s: &UpDownTableau, t: &UpDownTableau) -> Option<Ordering> {
    if s.level() != t.level() {
        return None;
    }
    match (0..=s.level()).rev().find(|&k| s.at(k) != t.at(k)) {
        None => Some(Ordering::Equal),
        Some(k) => labeled_cmp(&s.labeled_at(k), &t.labeled_at(k)),
    }
}

/// `Σ_{Λ_n} |T^ud_n(λ)|²`.
pub fn sum_of_squares(n: usize) -> u128 {
    path_counts(n).values().map(|c| c * c).sum()
}

/// Shapes at level `n - 1` reached by truncating paths to `lambda`.
pub fn restriction_shapes(n: usize, lambda: &Partition) -> Result<BTreeSet<Partition>> {
    Ok(enumerate_paths(n, lambda)?
        .into_iter()
        .map(|t| t.at(n - 1).clone())
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub level: usize,
    pub from: Partition,
    pub to: Partition,
    pub value: ContentValue,
}

/// The branching graph up to level `n`; `levels[k]` lists the shapes of Λ_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingGraph {
    pub levels: Vec<Vec<Partition>>,
    pub edges: Vec<GraphEdge>,
}

pub fn branching_graph(n: usize, r: Regime) -> BranchingGraph {
    let levels: Vec<Vec<Partition>> = (0..=n)
        .map(|k| enumerate_lambda(k).into_iter().map(|l| l.shape).collect())
        .collect();
    let mut edges = Vec::new();
    for k in 1..=n {
        for mu in &levels[k - 1] {
            for nu in neighbours(mu) {
                let step = step_between(mu, &nu).expect("neighbour");
                edges.push(GraphEdge {
                    level: k,
                    from: mu.clone(),
                    to: nu,
                    value: content_value(step.content(), r),
                });
            }
        }
    }
    BranchingGraph { levels, edges }
}

impl BranchingGraph {
    pub fn to_dot(&self) -> String {
        let id = |k: usize, p: &Partition| format!("\"L{k}:{}\"", p.to_text());
        let mut out = String::from("digraph branching {\n");
        for (k, shapes) in self.levels.iter().enumerate() {
            out.push_str(&format!("  subgraph level{k} {{\n    rank=same;\n"));
            for p in shapes {
                out.push_str(&format!("    {} [label=\"{}\"];\n", id(k, p), p));
            }
            out.push_str("  }\n");
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                id(e.level - 1, &e.from),
                id(e.level, &e.to),
                e.value.to_text()
            ));
        }
        out.push_str("}\n");
        out
    }
}
