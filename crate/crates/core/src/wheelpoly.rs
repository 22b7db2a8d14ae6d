//! Symmetric Laurent polynomials in `x_1, …, x_n` and the wheel family.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalars::{ContentValue, LaurentQT, Regime};

/// Default degree cap is `DEFAULT_CAP_PER_VARIABLE * n`.
pub const DEFAULT_CAP_PER_VARIABLE: usize = 4;

/// Sparse `Σ c_e x^e` over exponent vectors `e ∈ ℤⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiLaurent {
    n: usize,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl MultiLaurent {
    pub fn zero(n: usize) -> Self {
        MultiLaurent { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: BigRational) -> Self {
        Self::monomial(n, vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, BigRational::one())
    }

    pub fn monomial(n: usize, exps: Vec<i64>, c: BigRational) -> Self {
        assert_eq!(exps.len(), n, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiLaurent { n, terms }
    }

    /// `x_i^e` with `i` 1-based.
    pub fn var_pow(n: usize, i: usize, e: i64) -> Self {
        let mut exps = vec![0; n];
        exps[i - 1] = e;
        Self::monomial(n, exps, BigRational::one())
    }

    /// `e_n^{±1} = (x_1⋯x_n)^{±1}`.
    pub fn e_n(n: usize, sign: i64) -> Self {
        Self::monomial(n, vec![sign; n], BigRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    fn from_map(n: usize, map: HashMap<Vec<i64>, BigRational>) -> Self {
        let terms = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        MultiLaurent { n, terms }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        MultiLaurent { n: self.n, terms }
    }

    /// Applies `e ↦ f(e)` to every exponent vector and collects terms.
    fn map_exponents(&self, n: usize, f: impl Fn(&[i64]) -> Vec<i64>) -> Self {
        let mut map: HashMap<Vec<i64>, BigRational> = HashMap::new();
        for (e, c) in &self.terms {
            *map.entry(f(e)).or_insert_with(BigRational::zero) += c;
        }
        Self::from_map(n, map)
    }

    /// Swaps `x_i` and `x_{i+1}` (1-based).
    pub fn swap_adjacent(&self, i: usize) -> Self {
        self.map_exponents(self.n, |e| {
            let mut e = e.to_vec();
            e.swap(i - 1, i);
            e
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| &self.swap_adjacent(i) == self)
    }

    /// `p(x_1, x_1⁻¹, x_3, …, x_n)`.
    pub fn substitute_inverse_pair(&self) -> Self {
        self.map_exponents(self.n, |e| {
            let mut e = e.to_vec();
            e[0] -= e[1];
            e[1] = 0;
            e
        })
    }

    /// `p(1, 1, x_3, …, x_n)`.
    pub fn substitute_ones(&self) -> Self {
        self.map_exponents(self.n, |e| {
            let mut e = e.to_vec();
            e[0] = 0;
            e[1] = 0;
            e
        })
    }

    /// Evaluates at content values, giving a Laurent polynomial in `q, t`.
    pub fn evaluate(&self, values: &[ContentValue], r: Regime) -> Result<LaurentQT> {
        if values.len() != self.n {
            return Err(Error::ShapeLevelMismatch {
                shape: format!("{} content values", values.len()),
                level: self.n,
            });
        }
        let mut out = LaurentQT::zero();
        for (e, c) in &self.terms {
            let mut acc = match r {
                Regime::Generic => ContentValue::Generic { t: 0, q: 0 },
                Regime::Power { .. } => ContentValue::Power { sign: 1, exp: 0 },
            };
            for (v, &k) in values.iter().zip(e) {
                let vk = pow_value(*v, k);
                acc = acc.checked_mul(vk).ok_or_else(|| r.mismatch("content value of another regime"))?;
            }
            out += &acc.to_laurent().scale_shift(c, 0, 0);
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            let abs = c.abs();
            match (abs.is_one(), mono.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&mono.join("*")),
                (false, true) => out.push_str(&abs.to_string()),
                (false, false) => out.push_str(&format!("{abs}*{}", mono.join("*"))),
            }
        }
        out
    }
}

fn pow_value(v: ContentValue, k: i64) -> ContentValue {
    match v {
        ContentValue::Power { sign, exp } => ContentValue::Power {
            sign: if sign < 0 && k.rem_euclid(2) == 1 { -1 } else { 1 },
            exp: exp * k,
        },
        ContentValue::Generic { t, q } => ContentValue::Generic { t: t * k, q: q * k },
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        MultiLaurent { n: self.n.max(rhs.n), terms }
    }
}

impl Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        self.scale(&-BigRational::one())
    }
}

impl Sub<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        self + &(-rhs)
    }
}

impl Mul<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut map: HashMap<Vec<i64>, BigRational> = HashMap::with_capacity(self.len() * rhs.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *map.entry(e).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        MultiLaurent::from_map(self.n, map)
    }
}

/// Degree limit for the wheel-polynomial constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeCap(pub usize);

impl DegreeCap {
    pub fn default_for(n: usize) -> Self {
        DegreeCap(DEFAULT_CAP_PER_VARIABLE * n.max(1))
    }

    pub fn check(self, k: usize) -> Result<()> {
        if k > self.0 {
            return Err(Error::ResourceLimit(format!("degree {k} exceeds the cap {}", self.0)));
        }
        Ok(())
    }
}

/// Coefficients `c_0..c_K` of `∏(1 - x_i^{sign·-1}T) / ∏(1 - x_i^{sign}T)`.
fn generating_coeffs(n: usize, order: usize, sign: i64) -> Vec<MultiLaurent> {
    let mut c = vec![MultiLaurent::zero(n); order + 1];
    c[0] = MultiLaurent::one(n);
    for i in 1..=n {
        let num = MultiLaurent::var_pow(n, i, -sign);
        for k in (1..=order).rev() {
            c[k] = &c[k] - &(&num * &c[k - 1]);
        }
        let den = MultiLaurent::var_pow(n, i, sign);
        for k in 1..=order {
            c[k] = &c[k] + &(&den * &c[k - 1]);
        }
    }
    c
}

/// `w_0, …, w_K`: coefficients of `∏(1 - x_i⁻¹T) / ∏(1 - x_iT)`.
pub fn elementary_wheels(n: usize, order: usize, cap: DegreeCap) -> Result<Vec<MultiLaurent>> {
    cap.check(order)?;
    Ok(generating_coeffs(n, order, 1))
}

pub fn elementary_wheel(n: usize, k: usize) -> Result<MultiLaurent> {
    Ok(elementary_wheels(n, k, DegreeCap::default_for(n))?.pop().expect("k+1 coefficients"))
}

/// `p_k⁻ = Σ_i (x_i^k - x_i^{-k})`.
pub fn power_sum(n: usize, k: usize) -> MultiLaurent {
    let mut out = MultiLaurent::zero(n);
    for i in 1..=n {
        out = &out + &(&MultiLaurent::var_pow(n, i, k as i64) - &MultiLaurent::var_pow(n, i, -(k as i64)));
    }
    out
}

/// `v_0, …, v_K` from `Σ_i w_i v_{k-i} = δ_{k,0}`.
pub fn inverse_coeffs(n: usize, order: usize, cap: DegreeCap) -> Result<Vec<MultiLaurent>> {
    let w = elementary_wheels(n, order, cap)?;
    Ok(inverse_from(&w))
}

fn inverse_from(w: &[MultiLaurent]) -> Vec<MultiLaurent> {
    let n = w[0].nvars();
    let mut v = vec![MultiLaurent::one(n)];
    for k in 1..w.len() {
        let mut acc = MultiLaurent::zero(n);
        for i in 1..=k {
            acc = &acc - &(&w[i] * &v[k - i]);
        }
        v.push(acc);
    }
    v
}

/// Coefficients of the reciprocal generating function, computed directly.
pub fn inverse_coeffs_direct(n: usize, order: usize) -> Vec<MultiLaurent> {
    generating_coeffs(n, order, -1)
}

/// Checks `p_k⁻ = Σ_{j=1}^k j w_j v_{k-j}` for `1 ≤ k ≤ K`.
pub fn newton_check(n: usize, order: usize, cap: DegreeCap) -> Result<bool> {
    let w = elementary_wheels(n, order, cap)?;
    let v = inverse_from(&w);
    Ok((1..=order).all(|k| {
        let mut rhs = MultiLaurent::zero(n);
        for j in 1..=k {
            let jj = BigRational::from_integer(BigInt::from(j));
            rhs = &rhs + &(&w[j] * &v[k - j]).scale(&jj);
        }
        rhs == power_sum(n, k)
    }))
}

/// Checks `Σ_i w_i v_{k-i} = δ_{k,0}` for `k ≤ K`.
pub fn convolution_check(w: &[MultiLaurent], v: &[MultiLaurent]) -> bool {
    let n = w[0].nvars();
    (0..w.len().min(v.len())).all(|k| {
        let mut acc = MultiLaurent::zero(n);
        for i in 0..=k {
            acc = &acc + &(&w[i] * &v[k - i]);
        }
        acc == if k == 0 { MultiLaurent::one(n) } else { MultiLaurent::zero(n) }
    })
}

/// Symmetric, and `p(x_1, x_1⁻¹, x_3, …) = p(1, 1, x_3, …)` when `n ≥ 2`.
pub fn is_wheel(p: &MultiLaurent) -> bool {
    p.is_symmetric() && (p.nvars() < 2 || p.substitute_inverse_pair() == p.substitute_ones())
}
