//! Content multisets of drunk paths and the reduced signature of `W(λ,t)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Result;
use crate::partitions::{diagonal_datum, skew_datum, Partition};
use crate::scalars::series::{Coeff, Series};
use crate::scalars::{content_value, expand_w_series, sup, Content, ContentValue, Regime};
use crate::tableaux::defect_of;
use crate::wheelpoly::{elementary_wheels, DegreeCap};

/// `W = ∏_v (1 - vT)^{e(v)}` with `e(v) = mult(v⁻¹) - mult(v)`. Zero
/// exponents and self-inverse values are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WheelSignature {
    regime: Regime,
    exps: BTreeMap<ContentValue, i64>,
}

impl WheelSignature {
    pub fn trivial(regime: Regime) -> Self {
        WheelSignature { regime, exps: BTreeMap::new() }
    }

    /// Reduces a multiset of content values.
    pub fn from_values(values: &[ContentValue], regime: Regime) -> Self {
        let mut count: BTreeMap<ContentValue, i64> = BTreeMap::new();
        for v in values {
            *count.entry(*v).or_default() += 1;
        }
        let mut exps = BTreeMap::new();
        for &v in count.keys() {
            if v.is_self_inverse() {
                continue;
            }
            let e = count.get(&v.inverse()).copied().unwrap_or(0) - count[&v];
            if e != 0 {
                exps.insert(v, e);
                exps.insert(v.inverse(), -e);
            }
        }
        WheelSignature { regime, exps }
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn exponents(&self) -> &BTreeMap<ContentValue, i64> {
        &self.exps
    }

    pub fn exponent(&self, v: ContentValue) -> i64 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.is_empty()
    }

    /// Signature of the product `W_a W_b`.
    pub fn merge(&self, other: &WheelSignature) -> Result<WheelSignature> {
        same_regime(self, other)?;
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let entry = exps.entry(v).or_insert(0);
            *entry += e;
            if *entry == 0 {
                exps.remove(&v);
            }
        }
        Ok(WheelSignature { regime: self.regime, exps })
    }

    /// Values `c` with factor `(1 - cT)` in the denominator, with multiplicity.
    pub fn denominator(&self) -> BTreeMap<ContentValue, i64> {
        self.exps.iter().filter(|(_, &e)| e < 0).map(|(&v, &e)| (v, -e)).collect()
    }

    /// Truncated series of `W` with values mapped into a coefficient ring.
    pub fn series_in<C: Coeff>(&self, order: usize, map: impl Fn(ContentValue) -> C) -> Series<C> {
        let mut s = Series::one(order);
        for (&v, &e) in &self.exps {
            let c = map(v);
            for _ in 0..e.abs() {
                if e > 0 {
                    s.mul_linear(&c);
                } else {
                    s.div_linear(&c);
                }
            }
        }
        s
    }

    /// Rational-function text such as `(1−q⁴T)/(1−q⁻⁴T)`.
    pub fn pretty(&self) -> String {
        let mut num: Vec<(ContentValue, i64)> = Vec::new();
        let mut den: Vec<(ContentValue, i64)> = Vec::new();
        for (&v, &e) in &self.exps {
            if e > 0 {
                num.push((v, e));
            } else {
                den.push((v, -e));
            }
        }
        let key = |v: &ContentValue| match *v {
            ContentValue::Power { sign, exp } => (exp.abs(), exp, sign as i64),
            ContentValue::Generic { t, q } => (q.abs(), q, t),
        };
        num.sort_by_key(|(v, _)| key(v));
        den.sort_by_key(|(v, _)| key(v));
        let factor = |(v, e): &(ContentValue, i64)| {
            let body = match *v {
                ContentValue::Power { sign: -1, exp } => format!("1+{}T", ContentValue::Power { sign: 1, exp }.pretty()),
                _ => format!("1−{}T", v.pretty()),
            };
            format!("({body}){}", sup(*e))
        };
        let top: String = num.iter().map(factor).collect();
        let bottom: String = den.iter().map(factor).collect();
        match (top.is_empty(), den.len()) {
            (true, 0) => "1".into(),
            (_, 0) => top,
            (t, k) => {
                let top = if t { "1".to_string() } else { top };
                let single = k == 1 && den[0].1 == 1;
                if single {
                    format!("{top}/{bottom}")
                } else {
                    format!("{top}/({bottom})")
                }
            }
        }
    }
}

impl fmt::Display for WheelSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

fn same_regime(a: &WheelSignature, b: &WheelSignature) -> Result<()> {
    if a.regime != b.regime {
        return Err(a.regime.mismatch(&format!("cannot compare with a signature in regime {}", b.regime)));
    }
    Ok(())
}

/// Closed-form drunk multiset: `t` with multiplicity `f + m_λ(0)`, `t⁻¹`
/// with multiplicity `f`, and `tq^{2i}` with multiplicity `m_λ(i)`.
/// Returned sorted.
pub fn drunk_contents(n: usize, lambda: &Partition) -> Result<Vec<Content>> {
    let f = defect_of(lambda, n)?;
    let mut out = vec![Content::remove(0); f];
    out.extend(std::iter::repeat_n(Content::add(0), f));
    for (&i, &m) in diagonal_datum(lambda).entries() {
        out.extend(std::iter::repeat_n(Content::add(i), m));
    }
    out.sort();
    Ok(out)
}

pub fn drunk_values(n: usize, lambda: &Partition, r: Regime) -> Result<Vec<ContentValue>> {
    Ok(drunk_contents(n, lambda)?.into_iter().map(|c| content_value(c, r)).collect())
}

pub fn signature(n: usize, lambda: &Partition, r: Regime) -> Result<WheelSignature> {
    Ok(WheelSignature::from_values(&drunk_values(n, lambda, r)?, r))
}

pub fn signature_equal(a: &WheelSignature, b: &WheelSignature) -> Result<bool> {
    same_regime(a, b)?;
    Ok(a == b)
}

/// Reduced signature of `{(Add, i) with multiplicity m_{λ/μ}(i)}`.
pub fn skew_signature(lambda: &Partition, mu: &Partition, r: Regime) -> Result<WheelSignature> {
    let skew = skew_datum(lambda, mu)?;
    let values: Vec<ContentValue> = skew
        .entries()
        .iter()
        .flat_map(|(&i, &m)| std::iter::repeat_n(content_value(Content::add(i), r), m))
        .collect();
    Ok(WheelSignature::from_values(&values, r))
}

/// `W(λ) = W(μ) W(λ/μ)`, both sides at defect zero.
pub fn multiplicativity_check(lambda: &Partition, mu: &Partition, r: Regime) -> Result<bool> {
    let skew = skew_signature(lambda, mu, r)?;
    let whole = signature(lambda.size(), lambda, r)?;
    let part = signature(mu.size(), mu, r)?;
    Ok(part.merge(&skew)? == whole)
}

/// Diagonals `i ∈ D(λ)` with a partner `j ∈ D(λ)` such that the values of
/// `(Add, i)` and `(Add, j)` multiply to 1. Only defined for `t = ±q^{2a}`.
pub fn pairing_set(lambda: &Partition, r: Regime) -> Result<BTreeSet<i64>> {
    let exp = match r.as_power() {
        Some((_, exp)) if exp % 2 == 0 => exp,
        _ => return Err(r.mismatch("pairings are defined for t = ±q^(2a)")),
    };
    let d = diagonal_datum(lambda);
    Ok(d.entries()
        .keys()
        .copied()
        .filter(|&i| d.contains(-exp - i))
        .collect())
}

/// Young diagram with each box labelled by its diagonal; paired diagonals
/// share a letter, unpaired ones get `.`.
pub fn pairing_diagram(lambda: &Partition, r: Regime) -> Result<String> {
    let paired = pairing_set(lambda, r)?;
    let exp = r.as_power().map(|(_, e)| e).unwrap_or(0);
    let mut letters: BTreeMap<i64, char> = BTreeMap::new();
    let mut next = b'A';
    for &i in &paired {
        let j = -exp - i;
        let key = i.min(j);
        if let std::collections::btree_map::Entry::Vacant(e) = letters.entry(key) {
            e.insert(next as char);
            next = if next == b'Z' { b'a' } else { next + 1 };
        }
    }
    let mut out = String::new();
    for (row, &len) in lambda.parts().iter().enumerate() {
        for col in 1..=len {
            let i = col as i64 - (row as i64 + 1);
            let code = if paired.contains(&i) { letters[&i.min(-exp - i)] } else { '.' };
            out.push_str(&format!("[{i:>3}{code}]"));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Compares the `T^k` coefficients of the W-series with direct evaluation
/// of `w_k` at the drunk contents, for `k ≤ K`.
pub fn series_consistency(n: usize, lambda: &Partition, r: Regime, order: usize) -> Result<bool> {
    let values = drunk_values(n, lambda, r)?;
    let series = expand_w_series(&values, order);
    let cap = DegreeCap(order.max(DegreeCap::default_for(n).0));
    let wheels = elementary_wheels(n, order, cap)?;
    for (k, w) in wheels.iter().enumerate() {
        if &w.evaluate(&values, r)? != series.coeff(k) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn n4_q2_forms() {
        let r = Regime::power(1, 2);
        let cases = [
            ("0", "1"),
            ("2", "(1−q⁻²T)(1−q⁻⁴T)/((1−q²T)(1−q⁴T))"),
            ("1,1", "(1−q⁻²T)/(1−q²T)"),
            ("1,1,1,1", "(1−q⁴T)/(1−q⁻⁴T)"),
            ("2,1,1", "(1−q⁻⁴T)/(1−q⁴T)"),
            ("2,2", "(1−q⁻²T)²(1−q⁻⁴T)/((1−q²T)²(1−q⁴T))"),
        ];
        for (shape, want) in cases {
            assert_eq!(signature(4, &p(shape), r).unwrap().pretty(), want, "{shape}");
        }
    }

    #[test]
    fn drunk_multiset() {
        assert_eq!(drunk_contents(2, &Partition::empty()).unwrap(), vec![Content::remove(0), Content::add(0)]);
        let c = drunk_contents(4, &p("2")).unwrap();
        assert_eq!(c, vec![Content::remove(0), Content::add(0), Content::add(0), Content::add(1)]);
    }

    #[test]
    fn trivial_cases() {
        let r = Regime::power(-1, -1);
        assert!(signature(2, &p("2"), r).unwrap().is_trivial());
        assert!(skew_signature(&p("4,2,2"), &p("4"), Regime::power(1, 2)).unwrap().is_trivial());
        assert!(skew_signature(&p("4,2,2"), &p("4,1,1"), Regime::power(1, 1)).unwrap().is_trivial());
        let a = signature(4, &p("2,2"), Regime::power(1, 1)).unwrap();
        let b = signature(4, &p("2"), Regime::power(1, 1)).unwrap();
        assert!(signature_equal(&a, &b).unwrap());
        let g = signature(4, &p("2"), Regime::Generic).unwrap();
        assert!(signature_equal(&a, &g).is_err());
    }

    #[test]
    fn pairing_example() {
        let r = Regime::power(1, 8);
        let lam = p("2,1,1,1,1,1,1,1");
        let set: Vec<i64> = pairing_set(&lam, r).unwrap().into_iter().collect();
        assert_eq!(set, vec![-7, -6, -5, -4, -3, -2, -1]);
        assert!(pairing_set(&lam, Regime::power(1, 3)).is_err());
        assert!(pairing_set(&lam, Regime::Generic).is_err());
        assert!(pairing_set(&p("2"), Regime::power(1, 4)).unwrap().is_empty());
        let diagram = pairing_diagram(&p("1,1,1,1"), Regime::power(1, 2)).unwrap();
        assert_eq!(diagram, "[  0A]\n[ -1B]\n[ -2A]\n[ -3.]\n");
    }

    #[test]
    fn multiplicativity_and_series() {
        assert!(multiplicativity_check(&p("3,2"), &p("2,2"), Regime::Generic).unwrap());
        assert!(multiplicativity_check(&p("4,2,2"), &p("4"), Regime::power(1, 2)).unwrap());
        assert!(series_consistency(4, &p("2,1"), Regime::Generic, 4).is_err());
        assert!(series_consistency(5, &p("2,1"), Regime::Generic, 4).unwrap());
        assert!(series_consistency(3, &p("1"), Regime::power(1, 1), 4).unwrap());
    }

    #[test]
    fn generic_pretty() {
        let s = skew_signature(&p("2"), &Partition::empty(), Regime::Generic).unwrap();
        assert_eq!(s.pretty(), "(1−t⁻¹T)(1−t⁻¹q⁻²T)/((1−tT)(1−tq²T))");
        let s = WheelSignature::from_values(&[ContentValue::Power { sign: -1, exp: 2 }], Regime::power(-1, 2));
        assert_eq!(s.pretty(), "(1+q⁻²T)/(1+q²T)");
    }
}
