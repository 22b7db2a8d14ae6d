//! Separation of Λ_n by wheel signatures, evaluation matrices and
//! separating families.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::blocks::is_semisimple;
use crate::contentfn::{drunk_values, signature, WheelSignature};
use crate::error::{Error, Result};
use crate::linalg::{bareiss, rank_laurent, RowSpace};
use crate::scalars::{ContentValue, FractionQT, LaurentQT, Regime};
use crate::tableaux::{enumerate_lambda, LabeledPartition};
use crate::wheelpoly::{elementary_wheels, DegreeCap, MultiLaurent};

/// Λ_n split into classes of equal signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub regime: Regime,
    pub n: usize,
    pub classes: Vec<Vec<LabeledPartition>>,
    pub separates: bool,
    pub witnesses: Vec<(LabeledPartition, LabeledPartition)>,
}

/// Signatures of all of Λ_n, in Λ_n order.
pub fn signatures(n: usize, r: Regime, parallel: bool) -> Vec<(LabeledPartition, WheelSignature)> {
    let lambda = enumerate_lambda(n);
    let sig = |l: &LabeledPartition| signature(n, &l.shape, r).expect("shape from Λ_n");
    let sigs: Vec<WheelSignature> = if parallel {
        lambda.par_iter().map(sig).collect()
    } else {
        lambda.iter().map(sig).collect()
    };
    lambda.into_iter().zip(sigs).collect()
}

/// Groups items by key, keeping first-appearance order.
fn group_by_key<K: std::hash::Hash + Eq, T: Clone>(items: &[(T, K)]) -> Vec<Vec<T>> {
    let mut index: HashMap<&K, usize> = HashMap::new();
    let mut classes: Vec<Vec<T>> = Vec::new();
    for (item, key) in items {
        match index.get(key) {
            Some(&c) => classes[c].push(item.clone()),
            None => {
                index.insert(key, classes.len());
                classes.push(vec![item.clone()]);
            }
        }
    }
    classes
}

pub fn separation_classes(n: usize, r: Regime) -> SeparationReport {
    separation_classes_with(n, r, false)
}

pub fn separation_classes_with(n: usize, r: Regime, parallel: bool) -> SeparationReport {
    let classes = group_by_key(&signatures(n, r, parallel));
    let witnesses = classes
        .iter()
        .flat_map(|c| {
            (0..c.len()).flat_map(move |i| (i + 1..c.len()).map(move |j| (c[i].clone(), c[j].clone())))
        })
        .collect();
    SeparationReport {
        regime: r,
        n,
        separates: classes.iter().all(|c| c.len() == 1),
        classes,
        witnesses,
    }
}

/// The classification read literally: `t` not a power of `q`; `t = ±q^{2a}`
/// or `±q^{2a-1}` with `|a| ≥ n`; `t = ±q^{2a}` with `|a| < n` and `B_n`
/// semisimple; or `n = 3` with `t ∈ {q, q⁻¹, -q}`.
pub fn theorem1_predicate(n: usize, r: Regime) -> bool {
    let Some((sign, exp)) = r.as_power() else {
        return true;
    };
    let n = n as i64;
    if exp % 2 == 0 {
        let a = exp / 2;
        a.abs() >= n || is_semisimple(n as usize, r)
    } else {
        let a = (exp + 1) / 2;
        let exception = n == 3 && matches!((sign, exp), (1, 1) | (1, -1) | (-1, 1));
        a.abs() >= n || exception
    }
}

/// Labels of the generator rows `w_0, …, w_K, e_n, e_n⁻¹`.
pub fn row_labels(order: usize) -> Vec<String> {
    let mut out: Vec<String> = (0..=order).map(|k| format!("w{k}")).collect();
    out.push("e_n".into());
    out.push("e_n^-1".into());
    out
}

/// A matrix row: the product of the generator rows with these indices
/// (into [`row_labels`]), sorted. Generator rows are one-element products.
pub type Monomial = Vec<usize>;

/// Label such as `w2*e_n`.
pub fn monomial_label(m: &[usize], order: usize) -> String {
    let labels = row_labels(order);
    m.iter().map(|&g| labels[g].as_str()).collect::<Vec<_>>().join("*")
}

/// How a rank was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Rank at a rational point met the number of distinct columns.
    Specialization,
    /// Fraction-free elimination over the Laurent ring.
    Symbolic,
}

/// Values of the center on Λ_n.
///
/// The first `K + 3` rows are the generators `w_0, …, w_K, e_n, e_n⁻¹`. They
/// are followed by the products needed to span the evaluations of the whole
/// algebra they generate: the linear span of the generators alone can fall
/// short (rank 10 of 11 at `n = 5`, generic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationMatrix {
    pub regime: Regime,
    pub n: usize,
    pub order: usize,
    pub columns: Vec<LabeledPartition>,
    pub rows: Vec<Monomial>,
    pub row_labels: Vec<String>,
    pub entries: Vec<Vec<LaurentQT>>,
    pub rank: usize,
    pub method: RankMethod,
}

/// Product of the drunk content values, i.e. `e_n` evaluated on `L(λ)`.
fn e_n_value(values: &[ContentValue], r: Regime) -> ContentValue {
    let id = match r {
        Regime::Generic => ContentValue::Generic { t: 0, q: 0 },
        Regime::Power { .. } => ContentValue::Power { sign: 1, exp: 0 },
    };
    values.iter().fold(id, |a, b| a.checked_mul(*b).expect("same regime"))
}

/// Per-column data: signature and `e_n` value.
struct Column {
    sig: WheelSignature,
    e_n: ContentValue,
}

fn columns_for(n: usize, r: Regime, cols: &[LabeledPartition]) -> Vec<Column> {
    cols.iter()
        .map(|l| {
            let values = drunk_values(n, &l.shape, r).expect("shape from Λ_n");
            Column {
                sig: WheelSignature::from_values(&values, r),
                e_n: e_n_value(&values, r),
            }
        })
        .collect()
}

fn column_entries_rational(c: &Column, order: usize, q0: &BigRational, t0: &BigRational) -> Vec<BigRational> {
    let mut col = c.sig.series_in(order, |v| v.specialize(q0, t0)).into_coeffs();
    let e = c.e_n.specialize(q0, t0);
    col.push(e.clone());
    col.push(e.recip());
    col
}

fn column_entries(c: &Column, order: usize) -> Vec<LaurentQT> {
    let mut col = c.sig.series_in(order, |v| v.to_laurent()).into_coeffs();
    col.push(c.e_n.to_laurent());
    col.push(c.e_n.inverse().to_laurent());
    col
}

fn transpose<T: Clone>(cols: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let rows = cols.first().map_or(0, |c| c.len());
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

fn specialization_points(r: Regime) -> Vec<(BigRational, BigRational)> {
    let int = |k: i64| BigRational::from_integer(k.into());
    match r {
        Regime::Generic => vec![(int(2), int(3)), (int(3), int(7)), (int(5), int(2))],
        Regime::Power { sign, exp } => [2, 3, 5]
            .into_iter()
            .map(|q| {
                let q0 = int(q);
                let t0 = int(sign as i64) * crate::scalars::laurent::rpow(&q0, exp);
                (q0, t0)
            })
            .collect(),
    }
}

/// Elementwise product of generator rows.
fn monomial_row<T: Clone + One>(gens: &[Vec<T>], m: &[usize]) -> Vec<T>
where
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    let width = gens.first().map_or(0, |g| g.len());
    let mut row = vec![T::one(); width];
    for &g in m {
        row = row.iter().zip(&gens[g]).map(|(a, b)| a * b).collect();
    }
    row
}

/// Generators in the order rows are tried: `w_0`, `e_n^{±1}`, then `w_1, …, w_K`.
fn generator_order(order: usize) -> Vec<usize> {
    let mut out = vec![0, order + 1, order + 2];
    out.extend(1..=order);
    out
}

/// Independent rows of the algebra generated by the generator rows:
/// generators first, then products of independent rows with generators,
/// breadth first, until nothing new appears or `upper` is reached.
fn closure<T: Clone + One>(
    gens: &[Vec<T>],
    upper: usize,
    mut independent_of: impl FnMut(&[Vec<T>], &[T]) -> bool,
) -> Vec<Monomial>
where
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    let order = gens.len() - 3;
    let mut basis: Vec<Monomial> = Vec::new();
    let mut vectors: Vec<Vec<T>> = Vec::new();
    let mut try_add = |m: Monomial, basis: &mut Vec<Monomial>, vectors: &mut Vec<Vec<T>>| {
        let v = monomial_row(gens, &m);
        if independent_of(vectors, &v) {
            basis.push(m);
            vectors.push(v);
        }
    };
    for g in generator_order(order) {
        if basis.len() == upper {
            return basis;
        }
        try_add(vec![g], &mut basis, &mut vectors);
    }
    let mut i = 0;
    while i < basis.len() && basis.len() < upper {
        for g in generator_order(order).into_iter().skip(1) {
            if basis.len() == upper {
                break;
            }
            let mut m = basis[i].clone();
            m.push(g);
            m.sort_unstable();
            if !basis.contains(&m) {
                try_add(m, &mut basis, &mut vectors);
            }
        }
        i += 1;
    }
    basis
}

fn closure_rational(gens: &[Vec<BigRational>], upper: usize) -> Vec<Monomial> {
    let mut space = RowSpace::new();
    closure(gens, upper, |_, v| space.insert(v.to_vec()))
}

fn closure_laurent(gens: &[Vec<LaurentQT>], upper: usize) -> Vec<Monomial> {
    closure(gens, upper, |prev, v| {
        let mut m = prev.to_vec();
        m.push(v.to_vec());
        rank_laurent(m) == prev.len() + 1
    })
}

/// Number of distinct generator columns. Distinct characters of a
/// polynomial algebra are linearly independent, so this is the rank of the
/// evaluation of the algebra generated at order `K`.
fn distinct_columns(gens_by_column: &[Vec<LaurentQT>]) -> usize {
    let mut distinct: Vec<&Vec<LaurentQT>> = Vec::new();
    for c in gens_by_column {
        if !distinct.contains(&c) {
            distinct.push(c);
        }
    }
    distinct.len()
}

/// Independent rows at order `K` and how their count was certified. A rational
/// point gives a lower bound; when it falls short of the number of distinct
/// columns at every point tried, the closure is redone over the Laurent ring.
fn certified_closure(cols: &[Column], order: usize, r: Regime) -> (Vec<Monomial>, RankMethod) {
    let symbolic: Vec<Vec<LaurentQT>> = cols.iter().map(|c| column_entries(c, order)).collect();
    let upper = distinct_columns(&symbolic);
    for (q0, t0) in specialization_points(r) {
        let gens = transpose(cols.iter().map(|c| column_entries_rational(c, order, &q0, &t0)).collect());
        let basis = closure_rational(&gens, upper);
        if basis.len() == upper {
            return (basis, RankMethod::Specialization);
        }
    }
    (closure_laurent(&transpose(symbolic), upper), RankMethod::Symbolic)
}

pub fn evaluation_matrix(n: usize, r: Regime, order: usize, cap: DegreeCap) -> Result<EvaluationMatrix> {
    cap.check(order)?;
    let lambda = enumerate_lambda(n);
    let cols = columns_for(n, r, &lambda);
    let (basis, method) = certified_closure(&cols, order, r);
    let gens = transpose(cols.iter().map(|c| column_entries(c, order)).collect());
    let mut rows: Vec<Monomial> = (0..order + 3).map(|g| vec![g]).collect();
    rows.extend(basis.iter().filter(|m| m.len() > 1).cloned());
    let entries = rows.iter().map(|m| monomial_row(&gens, m)).collect();
    Ok(EvaluationMatrix {
        regime: r,
        n,
        order,
        columns: lambda,
        row_labels: rows.iter().map(|m| monomial_label(m, order)).collect(),
        rows,
        entries,
        rank: basis.len(),
        method,
    })
}

/// Cap on `K` for the adaptive searches: `4·|Λ_n|`.
pub fn adaptive_cap(n: usize) -> DegreeCap {
    DegreeCap(4 * enumerate_lambda(n).len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptiveRank {
    pub order: usize,
    pub rank: usize,
    pub method: RankMethod,
    /// Ranks seen at each tried order.
    pub history: Vec<(usize, usize)>,
    /// Independent rows at the final order.
    pub basis: Vec<Monomial>,
}

fn adaptive_rank_on(n: usize, r: Regime, cols: &[Column], target: usize) -> AdaptiveRank {
    let cap = adaptive_cap(n).0;
    let mut order = n.max(1);
    let mut history: Vec<(usize, usize)> = Vec::new();
    loop {
        let (basis, method) = certified_closure(cols, order, r);
        let rank = basis.len();
        history.push((order, rank));
        let stalled = history.len() >= 3 && history[history.len() - 3..].iter().all(|&(_, k)| k == rank);
        if rank >= target || stalled || order >= cap {
            return AdaptiveRank { order, rank, method, history, basis };
        }
        order = (order * 2).min(cap);
    }
}

/// Adaptive `K`: start at `n` and double until the rank reaches the number
/// of distinct `(W, e_n)` columns, stays put for two further rounds, or hits
/// `4·|Λ_n|`.
pub fn adaptive_rank(n: usize, r: Regime) -> AdaptiveRank {
    let lambda = enumerate_lambda(n);
    let cols = columns_for(n, r, &lambda);
    let keyed: Vec<_> = lambda.iter().cloned().zip(cols.iter().map(|c| (c.sig.clone(), c.e_n))).collect();
    adaptive_rank_on(n, r, &cols, group_by_key(&keyed).len())
}

/// One member of a separating family: `Σ_r (numerators[r] / denominator) · row_r`
/// over the rows of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub numerators: Vec<LaurentQT>,
    pub denominator: LaurentQT,
}

impl FamilyMember {
    pub fn coeff(&self, row: usize) -> FractionQT {
        FractionQT {
            num: self.numerators[row].clone(),
            den: self.denominator.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingFamily {
    pub regime: Regime,
    pub n: usize,
    pub order: usize,
    /// Products of generators the members are combinations of.
    pub rows: Vec<Monomial>,
    pub row_labels: Vec<String>,
    /// Class representatives, in the order the family is triangular on.
    pub columns: Vec<LabeledPartition>,
    pub members: Vec<FamilyMember>,
}

/// A family `p_1, …, p_m` with `p_i(i) = 1` and `p_i(j) = 0` for `j < i` on
/// the class representatives, by fraction-free elimination of `[E | I]`
/// where `E` holds `m` independent rows.
pub fn separating_family(n: usize, r: Regime) -> Result<SeparatingFamily> {
    let report = separation_classes(n, r);
    let reps: Vec<LabeledPartition> = report.classes.iter().map(|c| c[0].clone()).collect();
    let cols = columns_for(n, r, &reps);
    let m = reps.len();
    let adaptive = adaptive_rank_on(n, r, &cols, m);
    if adaptive.rank < m {
        return Err(Error::ResourceLimit(format!(
            "rank {} < {m} at order {} (cap {})",
            adaptive.rank,
            adaptive.order,
            adaptive_cap(n).0
        )));
    }
    let order = adaptive.order;
    let rows = adaptive.basis;
    let gens = transpose(cols.iter().map(|c| column_entries(c, order)).collect());
    let augmented: Vec<Vec<LaurentQT>> = rows
        .iter()
        .enumerate()
        .map(|(i, mono)| {
            let mut line = monomial_row(&gens, mono);
            line.extend((0..m).map(|j| if i == j { LaurentQT::one() } else { LaurentQT::zero() }));
            line
        })
        .collect();
    let reduced = bareiss(augmented);
    if reduced.pivots[..] != (0..m).collect::<Vec<_>>()[..] {
        return Err(Error::ResourceLimit("selected rows are dependent over the Laurent ring".into()));
    }
    let members = reduced
        .echelon
        .iter()
        .enumerate()
        .map(|(i, line)| FamilyMember {
            numerators: line[m..].to_vec(),
            denominator: line[i].clone(),
        })
        .collect();
    Ok(SeparatingFamily {
        regime: r,
        n,
        order,
        row_labels: rows.iter().map(|mono| monomial_label(mono, order)).collect(),
        rows,
        columns: reps,
        members,
    })
}

/// Evaluates every family member on every representative by substituting
/// drunk contents into the wheel polynomials, and checks unitriangularity.
pub fn verify_family(family: &SeparatingFamily) -> Result<bool> {
    let n = family.n;
    let r = family.regime;
    let cap = DegreeCap(family.order.max(DegreeCap::default_for(n).0));
    let mut polys = elementary_wheels(n, family.order, cap)?;
    polys.push(MultiLaurent::e_n(n, 1));
    polys.push(MultiLaurent::e_n(n, -1));
    for (j, col) in family.columns.iter().enumerate() {
        let values = drunk_values(n, &col.shape, r)?;
        let gens = polys.iter().map(|p| p.evaluate(&values, r).map(|v| vec![v])).collect::<Result<Vec<_>>>()?;
        let evals: Vec<LaurentQT> = family.rows.iter().map(|mono| monomial_row(&gens, mono).remove(0)).collect();
        for (i, member) in family.members.iter().enumerate().filter(|(i, _)| *i >= j) {
            let mut num = LaurentQT::zero();
            for (c, e) in member.numerators.iter().zip(&evals) {
                if !c.is_zero() {
                    num += &(c * e);
                }
            }
            let want = if i == j { member.denominator.clone() } else { LaurentQT::zero() };
            if num != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
