//! Truncated power series in `T`.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::laurent::LaurentQT;
use super::ContentValue;

/// Coefficient rings the series code works over.
pub trait Coeff: Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {}

impl<C> Coeff for C where C: Clone + PartialEq + Zero + One + Add<Output = C> + Sub<Output = C> + Mul<Output = C> {}

/// `Σ_{k ≤ K} c_k T^k`, with everything past order `K` discarded.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

pub type SeriesT = Series<LaurentQT>;

impl<C: Coeff> Series<C> {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = C::one();
        Series { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Multiplies by `(1 - vT)`.
    pub fn mul_linear(&mut self, v: &C) {
        for k in (1..self.coeffs.len()).rev() {
            let prev = v.clone() * self.coeffs[k - 1].clone();
            self.coeffs[k] = self.coeffs[k].clone() - prev;
        }
    }

    /// Divides by `(1 - vT)`: `c'_k = c_k + v c'_{k-1}`.
    pub fn div_linear(&mut self, v: &C) {
        for k in 1..self.coeffs.len() {
            let prev = v.clone() * self.coeffs[k - 1].clone();
            self.coeffs[k] = self.coeffs[k].clone() + prev;
        }
    }

    /// Truncated product; both operands must share the same order.
    pub fn mul_series(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![C::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                coeffs[i + j] = coeffs[i + j].clone() + self.coeffs[i].clone() * other.coeffs[j].clone();
            }
        }
        Series { coeffs }
    }

    /// Expansion of `∏(1 - c⁻¹T) / ∏(1 - cT)` for `(c, c⁻¹)` pairs given as
    /// values of the coefficient ring.
    pub fn wheel_generating(pairs: &[(C, C)], order: usize) -> Self {
        let mut s = Self::one(order);
        for (c, cinv) in pairs {
            s.mul_linear(cinv);
            s.div_linear(c);
        }
        s
    }
}

/// Truncated expansion of `∏(1 - c⁻¹T) / ∏(1 - cT)` over a multiset of
/// content values.
pub fn expand_w_series(contents: &[ContentValue], order: usize) -> SeriesT {
    let pairs: Vec<_> = contents
        .iter()
        .map(|c| (c.to_laurent(), c.inverse().to_laurent()))
        .collect();
    Series::wheel_generating(&pairs, order)
}
