//! Sparse Laurent polynomials in `q` and `t` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `Σ c_{ab} q^a t^b`. Keys are `(a, b)`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentQT {
    terms: BTreeMap<(i64, i64), BigRational>,
}

impl LaurentQT {
    pub fn monomial(coeff: BigRational, q: i64, t: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((q, t), coeff);
        }
        LaurentQT { terms }
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigRational::from_integer(c.into()), 0, 0)
    }

    pub fn q_pow(q: i64) -> Self {
        Self::monomial(BigRational::one(), q, 0)
    }

    pub fn qt_pow(q: i64, t: i64) -> Self {
        Self::monomial(BigRational::one(), q, t)
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q: i64, t: i64) -> BigRational {
        self.terms.get(&(q, t)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// True if the polynomial involves `t`.
    pub fn has_t(&self) -> bool {
        self.terms.keys().any(|&(_, b)| b != 0)
    }

    fn add_term(&mut self, key: (i64, i64), c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies by `c q^a t^b`.
    pub fn scale_shift(&self, c: &BigRational, a: i64, b: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&(x, y), v)| ((x + a, y + b), v * c))
            .collect();
        LaurentQT { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at rational `q = q0`, `t = t0`.
    pub fn specialize(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * rpow(q0, a) * rpow(t0, b))
            .fold(BigRational::zero(), |x, y| x + y)
    }

    /// Multiplies through by the lcm of the coefficient denominators.
    pub fn clear_denominators(&self) -> Self {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = num_integer::Integer::lcm(&l, c.denom());
        }
        self.scale_shift(&BigRational::from_integer(l), 0, 0)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Long division in the lex order on `(q, t)` exponents. If the quotient
    /// exists its lowest term is `low(self) / low(d)`, so any candidate
    /// quotient term below that bound proves non-divisibility.
    pub fn div_exact(&self, d: &LaurentQT) -> Option<LaurentQT> {
        let (&dlead, dlc) = d.terms.iter().next_back()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (&plow, _) = self.terms.iter().next()?;
        let (&dlow, _) = d.terms.iter().next()?;
        let bound = (plow.0 - dlow.0, plow.1 - dlow.1);
        let mut rem = self.clone();
        let mut quot = LaurentQT::zero();
        while let Some((&lead, lc)) = rem.terms.iter().next_back() {
            let m = (lead.0 - dlead.0, lead.1 - dlead.1);
            if m < bound {
                return None;
            }
            let c = lc / dlc;
            rem -= &d.scale_shift(&c, m.0, m.1);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Plain-text rendering, e.g. `t*q^2 - 2 + t^-1*q^-2`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = monomial_text(a, b);
            match (abs.is_one(), mono.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&mono),
                (false, true) => out.push_str(&abs.to_string()),
                (false, false) => out.push_str(&format!("{abs}*{mono}")),
            }
        }
        out
    }
}

fn monomial_text(q: i64, t: i64) -> String {
    let pow = |v: &str, e: i64| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    let parts: Vec<String> = [pow("t", t), pow("q", q)].into_iter().filter(|s| !s.is_empty()).collect();
    parts.join("*")
}

pub(crate) fn rpow(x: &BigRational, e: i64) -> BigRational {
    let r = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        r.recip()
    } else {
        r
    }
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Zero for LaurentQT {
    fn zero() -> Self {
        LaurentQT::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentQT {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl AddAssign<&LaurentQT> for LaurentQT {
    fn add_assign(&mut self, rhs: &LaurentQT) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl SubAssign<&LaurentQT> for LaurentQT {
    fn sub_assign(&mut self, rhs: &LaurentQT) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, -c.clone());
        }
    }
}

impl Add<&LaurentQT> for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentQT> for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentQT> for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl Add for LaurentQT {
    type Output = LaurentQT;
    fn add(mut self, rhs: LaurentQT) -> LaurentQT {
        self += &rhs;
        self
    }
}

impl Sub for LaurentQT {
    type Output = LaurentQT;
    fn sub(mut self, rhs: LaurentQT) -> LaurentQT {
        self -= &rhs;
        self
    }
}

impl Mul for LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: LaurentQT) -> LaurentQT {
        &self * &rhs
    }
}

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        -&self
    }
}

/// A quotient of two Laurent polynomials, kept unreduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionQT {
    pub num: LaurentQT,
    pub den: LaurentQT,
}

impl FractionQT {
    pub fn from_laurent(p: LaurentQT) -> Self {
        FractionQT {
            num: p,
            den: LaurentQT::one(),
        }
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equals(&self, other: &FractionQT) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// The polynomial itself when the denominator divides the numerator.
    pub fn as_laurent(&self) -> Option<LaurentQT> {
        self.num.div_exact(&self.den)
    }
}

impl fmt::Display for FractionQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_laurent() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn arithmetic_cancels() {
        let a = &LaurentQT::q_pow(1) - &LaurentQT::q_pow(-1);
        let b = &LaurentQT::q_pow(1) + &LaurentQT::q_pow(-1);
        let prod = &a * &b;
        assert_eq!(prod, &LaurentQT::q_pow(2) - &LaurentQT::q_pow(-2));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = &LaurentQT::qt_pow(3, 1) - &LaurentQT::qt_pow(-1, -2);
        let b = &(&LaurentQT::q_pow(2) + &LaurentQT::from_int(5)) + &LaurentQT::qt_pow(0, 4);
        let p = &a * &b;
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        let off = &p + &LaurentQT::from_int(1);
        assert_eq!(off.div_exact(&b), None);
        assert_eq!(LaurentQT::q_pow(2).div_exact(&LaurentQT::from_int(1)), Some(LaurentQT::q_pow(2)));
    }

    #[test]
    fn specialization() {
        let p = &LaurentQT::qt_pow(2, 1) - &LaurentQT::qt_pow(-1, 0);
        assert_eq!(p.specialize(&r(2), &r(3)), r(12) - BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn text() {
        let p = &(&LaurentQT::qt_pow(2, 1) - &LaurentQT::from_int(2)) + &LaurentQT::qt_pow(-2, -1);
        assert_eq!(p.to_text(), "t*q^2 - 2 + t^-1*q^-2");
        assert_eq!(LaurentQT::zero().to_text(), "0");
    }
}
