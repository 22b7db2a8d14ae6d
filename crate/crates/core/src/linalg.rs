//! Exact elimination over `ℚ` and fraction-free elimination over `ℚ[q^±, t^±]`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::scalars::LaurentQT;

/// Rank over `ℚ` by Gaussian elimination.
pub fn rank_rational(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in rank + 1..rows {
            if m[r][c].is_zero() {
                continue;
            }
            let factor = &m[r][c] / &pivot;
            for j in c..cols {
                let delta = &factor * &m[rank][j];
                m[r][j] -= delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Row space over `ℚ` grown one vector at a time.
#[derive(Default)]
pub struct RowSpace {
    /// Reduced rows, each with its pivot column.
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is not already in the span; returns whether it was.
    pub fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let factor = &v[*p] / &row[*p];
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// Result of fraction-free elimination.
pub struct Bareiss {
    /// Row echelon form; every entry is a minor of the input.
    pub echelon: Vec<Vec<LaurentQT>>,
    /// Column of each pivot, in row order.
    pub pivots: Vec<usize>,
    /// Row of the input that ended up at each position.
    pub order: Vec<usize>,
}

/// Bareiss elimination over the Laurent ring. The divisions by the previous
/// pivot are exact because every intermediate entry is a minor; a failed
/// division is a bug and panics.
pub fn bareiss(mut m: Vec<Vec<LaurentQT>>) -> Bareiss {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut order: Vec<usize> = (0..rows).collect();
    let mut pivots = Vec::new();
    let mut prev = LaurentQT::from_int(1);
    let mut k = 0;
    for c in 0..cols {
        if k == rows {
            break;
        }
        let Some(p) = (k..rows)
            .filter(|&r| !m[r][c].is_zero())
            .min_by_key(|&r| m[r][c].len())
        else {
            continue;
        };
        m.swap(k, p);
        order.swap(k, p);
        for r in k + 1..rows {
            for j in c + 1..cols {
                let num = &(&m[k][c] * &m[r][j]) - &(&m[r][c] * &m[k][j]);
                m[r][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[r][c] = LaurentQT::zero();
        }
        prev = m[k][c].clone();
        pivots.push(c);
        k += 1;
    }
    Bareiss { echelon: m, pivots, order }
}

/// Rank over the fraction field of `ℚ[q^±, t^±]`.
pub fn rank_laurent(m: Vec<Vec<LaurentQT>>) -> usize {
    bareiss(m).pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rational_rank() {
        let m = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)], vec![r(0), r(1), r(1)]];
        assert_eq!(rank_rational(m), 2);
        assert_eq!(rank_rational(vec![]), 0);
    }

    #[test]
    fn laurent_rank() {
        let q = LaurentQT::q_pow(1);
        let t = LaurentQT::qt_pow(0, 1);
        let one = LaurentQT::from_int(1);
        let m = vec![
            vec![one.clone(), q.clone(), t.clone()],
            vec![q.clone(), &q * &q, &q * &t],
            vec![t.clone(), one.clone(), q.clone()],
        ];
        assert_eq!(rank_laurent(m), 2);
        let m = vec![vec![one.clone(), q.clone()], vec![t.clone(), one.clone()]];
        let b = bareiss(m);
        assert_eq!(b.pivots, vec![0, 1]);
        assert_eq!(b.echelon[1][1], &one - &(&q * &t));
    }
}
