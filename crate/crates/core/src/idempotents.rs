//! Spectral evaluation of the recursive primitive idempotents (generic `q, t`).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{boundary_boxes, box_content, Partition};
use crate::scalars::{content_value, Content, ContentValue, LaurentQT, Regime};
use crate::tableaux::{defect_of, drunk_path, enumerate_lambda, enumerate_paths, UpDownTableau};

/// Values of `x_n` on the branching edges leaving `mu` at level `n`:
/// `tq^{2i}` for addable boxes and `t⁻¹q^{-2i}` for removable ones, sorted
/// and deduplicated.
pub fn extension_contents(mu: &Partition, n: usize, r: Regime) -> Result<Vec<ContentValue>> {
    if n == 0 {
        return Err(Error::ShapeLevelMismatch { shape: mu.to_string(), level: n });
    }
    defect_of(mu, n - 1)?;
    let (removable, addable) = boundary_boxes(mu);
    let mut out: Vec<ContentValue> = addable
        .into_iter()
        .map(|b| content_value(Content::add(box_content(b)), r))
        .chain(removable.into_iter().map(|b| content_value(Content::remove(box_content(b)), r)))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `e_{λ,n}` evaluated on every path of every shape of Λ_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralDiagonal {
    pub n: usize,
    pub lambda: Partition,
    pub values: Vec<(UpDownTableau, u8)>,
}

impl SpectralDiagonal {
    /// Paths with value 1.
    pub fn selected(&self) -> Vec<&UpDownTableau> {
        self.values.iter().filter(|(_, v)| *v == 1).map(|(t, _)| t).collect()
    }
}

/// All updown tableaux of length `n`, grouped by Λ_n order.
pub fn all_paths(n: usize) -> Vec<UpDownTableau> {
    enumerate_lambda(n)
        .into_iter()
        .flat_map(|l| enumerate_paths(n, &l.shape).expect("shape from Λ_n"))
        .collect()
}

/// Interpolation data for one level: the eigenvalues of `x_k` to kill and
/// the normalizing denominator.
struct Level {
    others: Vec<LaurentQT>,
    others_values: Vec<ContentValue>,
    denominator: LaurentQT,
}

fn levels_for(n: usize, lambda: &Partition, r: Regime) -> Result<Vec<Level>> {
    let drunk = drunk_path(n, lambda)?;
    let targets = drunk.content_values(r);
    let mut levels = Vec::with_capacity(n);
    for k in 1..=n {
        let mu = drunk.at(k - 1);
        let ext = extension_contents(mu, k, r)?;
        let target = targets[k - 1];
        let raw = boundary_boxes(mu);
        if ext.len() != raw.0.len() + raw.1.len() {
            return Err(Error::ZeroDenominator(format!("two extension contents of {mu} coincide")));
        }
        let others_values: Vec<ContentValue> = ext.into_iter().filter(|c| *c != target).collect();
        let t = target.to_laurent();
        let others: Vec<LaurentQT> = others_values.iter().map(|c| c.to_laurent()).collect();
        let mut denominator = LaurentQT::from_int(1);
        for c in &others {
            denominator = &denominator * &(&t - c);
        }
        levels.push(Level { others, others_values, denominator });
    }
    Ok(levels)
}

/// Evaluates the product of interpolation factors on one path. Returns 0 as
/// soon as a factor vanishes; otherwise checks that the product of
/// numerators equals the product of denominators.
fn evaluate_path(path: &UpDownTableau, levels: &[Level], r: Regime) -> Result<u8> {
    let values = path.content_values(r);
    let mut num = LaurentQT::from_int(1);
    let mut den = LaurentQT::from_int(1);
    for (x, level) in values.iter().zip(levels) {
        if level.others_values.contains(x) {
            return Ok(0);
        }
        let xl = x.to_laurent();
        for c in &level.others {
            num = &num * &(&xl - c);
        }
        den = &den * &level.denominator;
    }
    if num == den {
        Ok(1)
    } else {
        Err(Error::NotIdempotent(path.to_string()))
    }
}

pub fn spectral_idempotent(n: usize, lambda: &Partition, r: Regime) -> Result<SpectralDiagonal> {
    spectral_idempotent_on(n, lambda, r, &all_paths(n), false)
}

/// As [`spectral_idempotent`], over a precomputed path list.
pub fn spectral_idempotent_on(
    n: usize,
    lambda: &Partition,
    r: Regime,
    paths: &[UpDownTableau],
    parallel: bool,
) -> Result<SpectralDiagonal> {
    if !r.is_generic() {
        return Err(r.mismatch("spectral idempotents are built for generic q, t"));
    }
    let levels = levels_for(n, lambda, r)?;
    let eval = |p: &UpDownTableau| evaluate_path(p, &levels, r).map(|v| (p.clone(), v));
    let values = if parallel {
        paths.par_iter().map(eval).collect::<Result<Vec<_>>>()?
    } else {
        paths.iter().map(eval).collect::<Result<Vec<_>>>()?
    };
    Ok(SpectralDiagonal { n, lambda: lambda.clone(), values })
}

/// Pairwise products of distinct diagonals vanish and every diagonal is
/// 0/1-valued with exactly one selected path.
pub fn orthogonality_check(n: usize) -> Result<bool> {
    let paths = all_paths(n);
    let diagonals = enumerate_lambda(n)
        .iter()
        .map(|l| spectral_idempotent_on(n, &l.shape, Regime::Generic, &paths, false))
        .collect::<Result<Vec<_>>>()?;
    for (i, a) in diagonals.iter().enumerate() {
        if a.values.iter().any(|(_, v)| *v > 1) || a.selected().len() != 1 {
            return Ok(false);
        }
        for b in &diagonals[i + 1..] {
            if a.values.iter().zip(&b.values).any(|((_, x), (_, y))| x * y != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn extensions() {
        let pretty = |mu: &str, n| -> BTreeSet<String> {
            extension_contents(&p(mu), n, Regime::Generic).unwrap().iter().map(|c| c.pretty()).collect()
        };
        let set = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
        assert_eq!(pretty("0", 1), set(&["t"]));
        assert_eq!(pretty("1", 2), set(&["t⁻¹", "tq²", "tq⁻²"]));
        assert_eq!(pretty("2", 3), set(&["t⁻¹q⁻²", "tq⁴", "tq⁻²"]));
    }

    #[test]
    fn selection_n3() {
        assert_eq!(all_paths(3).len(), 7);
        for l in enumerate_lambda(3) {
            let d = spectral_idempotent(3, &l.shape, Regime::Generic).unwrap();
            let drunk = drunk_path(3, &l.shape).unwrap();
            assert_eq!(d.selected(), vec![&drunk]);
        }
        assert!(spectral_idempotent(2, &p("2"), Regime::power(1, 2)).is_err());
    }

    #[test]
    fn orthogonal_small() {
        for n in 1..=3 {
            assert!(orthogonality_check(n).unwrap());
        }
    }
}
