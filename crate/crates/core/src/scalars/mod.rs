//! Parameter regimes, content values and the exact rings they live in.

pub mod laurent;
pub mod series;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
pub use laurent::{FractionQT, LaurentQT};
pub use series::{expand_w_series, Series, SeriesT};

/// How `t` is specialized. `Power { sign, exp }` means `t = sign·q^exp` with
/// `q` transcendental; `q` is never a root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    Generic,
    Power { sign: i8, exp: i64 },
}

impl Regime {
    pub fn power(sign: i8, exp: i64) -> Self {
        Regime::Power {
            sign: if sign < 0 { -1 } else { 1 },
            exp,
        }
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, Regime::Generic)
    }

    /// `(sign, exp)` for power regimes.
    pub fn as_power(&self) -> Option<(i8, i64)> {
        match *self {
            Regime::Power { sign, exp } => Some((sign, exp)),
            Regime::Generic => None,
        }
    }

    /// Rational point `(q0, t0)` at which values of this regime are
    /// specialized. The map from content values to rationals is injective.
    pub fn specialization(&self) -> (BigRational, BigRational) {
        let q0 = BigRational::from_integer(BigInt::from(2));
        let t0 = match *self {
            Regime::Generic => BigRational::from_integer(BigInt::from(3)),
            Regime::Power { sign, exp } => {
                BigRational::from_integer(BigInt::from(sign)) * laurent::rpow(&q0, exp)
            }
        };
        (q0, t0)
    }

    pub(crate) fn mismatch(&self, reason: &str) -> Error {
        Error::RegimeMismatch {
            regime: self.to_string(),
            reason: reason.to_string(),
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Regime::Generic => write!(f, "generic"),
            Regime::Power { sign, exp } => {
                write!(f, "{}q^{exp}", if sign < 0 { "-" } else { "" })
            }
        }
    }
}

impl FromStr for Regime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            what: "regime",
            input: s.to_string(),
        };
        match s {
            "generic" => return Ok(Regime::Generic),
            "1" => return Ok(Regime::power(1, 0)),
            "-1" => return Ok(Regime::power(-1, 0)),
            _ => {}
        }
        let (sign, rest) = match s.strip_prefix('-') {
            Some(r) => (-1, r),
            None => (1, s),
        };
        let exp = match rest {
            "q" => 1,
            _ => rest
                .strip_prefix("q^")
                .ok_or_else(bad)?
                .parse::<i64>()
                .map_err(|_| bad())?,
        };
        Ok(Regime::power(sign, exp))
    }
}

/// A step's content `(t q^{2i})^s`: `s = 1` for an added box, `-1` for a
/// removed one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content {
    pub s: i8,
    pub i: i64,
}

impl Content {
    pub fn add(i: i64) -> Self {
        Content { s: 1, i }
    }

    pub fn remove(i: i64) -> Self {
        Content { s: -1, i }
    }

    pub fn inverse(self) -> Self {
        Content { s: -self.s, i: self.i }
    }

    pub fn value(self, r: Regime) -> ContentValue {
        content_value(self, r)
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = if self.s > 0 { "Add" } else { "Remove" };
        write!(f, "{dir} {}", self.i)
    }
}

/// A content after specialization. `Power` denotes `sign·q^exp`; `Generic`
/// denotes `t^t q^q` in the free abelian group on `t` and `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContentValue {
    Power { sign: i8, exp: i64 },
    Generic { t: i64, q: i64 },
}

impl ContentValue {
    pub fn inverse(self) -> Self {
        match self {
            ContentValue::Power { sign, exp } => ContentValue::Power { sign, exp: -exp },
            ContentValue::Generic { t, q } => ContentValue::Generic { t: -t, q: -q },
        }
    }

    pub fn checked_mul(self, other: Self) -> Option<Self> {
        match (self, other) {
            (ContentValue::Power { sign: a, exp: x }, ContentValue::Power { sign: b, exp: y }) => {
                Some(ContentValue::Power { sign: a * b, exp: x + y })
            }
            (ContentValue::Generic { t: a, q: x }, ContentValue::Generic { t: b, q: y }) => {
                Some(ContentValue::Generic { t: a + b, q: x + y })
            }
            _ => None,
        }
    }

    pub fn is_identity(self) -> bool {
        matches!(
            self,
            ContentValue::Power { sign: 1, exp: 0 } | ContentValue::Generic { t: 0, q: 0 }
        )
    }

    /// `v = v⁻¹`, i.e. `v = ±1`.
    pub fn is_self_inverse(self) -> bool {
        self == self.inverse()
    }

    pub fn to_laurent(self) -> LaurentQT {
        match self {
            ContentValue::Power { sign, exp } => {
                LaurentQT::monomial(BigRational::from_integer(BigInt::from(sign)), exp, 0)
            }
            ContentValue::Generic { t, q } => LaurentQT::qt_pow(q, t),
        }
    }

    pub fn specialize(self, q0: &BigRational, t0: &BigRational) -> BigRational {
        self.to_laurent().specialize(q0, t0)
    }

    /// Machine-readable text: `q^m`, `-q^m` or `t^s*q^b`.
    pub fn to_text(self) -> String {
        match self {
            ContentValue::Power { sign, exp } => {
                format!("{}q^{exp}", if sign < 0 { "-" } else { "" })
            }
            ContentValue::Generic { t, q } => format!("t^{t}*q^{q}"),
        }
    }

    /// Human-readable text with unicode exponents, e.g. `t⁻¹q⁻²` or `−q⁴`.
    pub fn pretty(self) -> String {
        match self {
            ContentValue::Power { sign, exp } => {
                let body = if exp == 0 { "1".to_string() } else { format!("q{}", sup(exp)) };
                if sign < 0 {
                    format!("−{body}")
                } else {
                    body
                }
            }
            ContentValue::Generic { t, q } => {
                let mut s = String::new();
                if t != 0 {
                    s.push('t');
                    s.push_str(&sup(t));
                }
                if q != 0 {
                    s.push('q');
                    s.push_str(&sup(q));
                }
                if s.is_empty() {
                    s.push('1');
                }
                s
            }
        }
    }
}

impl fmt::Display for ContentValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for ContentValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            what: "content value",
            input: s.to_string(),
        };
        if let Some(rest) = s.strip_prefix("t^") {
            let (t, q) = rest.split_once("*q^").ok_or_else(bad)?;
            return Ok(ContentValue::Generic {
                t: t.parse().map_err(|_| bad())?,
                q: q.parse().map_err(|_| bad())?,
            });
        }
        let (sign, rest) = match s.strip_prefix('-') {
            Some(r) => (-1, r),
            None => (1, s),
        };
        let exp = rest.strip_prefix("q^").ok_or_else(bad)?.parse().map_err(|_| bad())?;
        Ok(ContentValue::Power { sign, exp })
    }
}

/// Unicode superscript for an exponent; empty for 1.
pub fn sup(e: i64) -> String {
    if e == 1 {
        return String::new();
    }
    e.to_string()
        .chars()
        .map(|c| match c {
            '-' => '⁻',
            '0' => '⁰',
            '1' => '¹',
            '2' => '²',
            '3' => '³',
            '4' => '⁴',
            '5' => '⁵',
            '6' => '⁶',
            '7' => '⁷',
            '8' => '⁸',
            _ => '⁹',
        })
        .collect()
}

pub fn content_value(c: Content, r: Regime) -> ContentValue {
    let s = c.s as i64;
    match r {
        Regime::Generic => ContentValue::Generic { t: s, q: 2 * c.i * s },
        Regime::Power { sign, exp } => ContentValue::Power {
            sign,
            exp: s * (exp + 2 * c.i),
        },
    }
}

/// `[N]_q = (q^N - q^{-N}) / (q - q^{-1})`.
pub fn quantum_integer(n: i64) -> LaurentQT {
    let mut out = LaurentQT::zero();
    for k in 0..n.abs() {
        out += &LaurentQT::q_pow(n.abs() - 1 - 2 * k);
    }
    if n < 0 {
        -out
    } else {
        out
    }
}

/// `δ = (t - t⁻¹)/(q - q⁻¹) + 1`. For power regimes this is the Laurent
/// polynomial `[±N]_q + 1`; in the generic regime it stays a fraction.
pub fn delta(r: Regime) -> FractionQT {
    match r {
        Regime::Power { sign, exp } => {
            FractionQT::from_laurent(&quantum_integer(sign as i64 * exp) + &LaurentQT::one())
        }
        Regime::Generic => {
            let qq = &LaurentQT::q_pow(1) - &LaurentQT::q_pow(-1);
            let tt = &LaurentQT::qt_pow(0, 1) - &LaurentQT::qt_pow(0, -1);
            FractionQT {
                num: &tt + &qq,
                den: qq,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regime_grammar() {
        assert_eq!("generic".parse::<Regime>().unwrap(), Regime::Generic);
        assert_eq!("1".parse::<Regime>().unwrap(), Regime::power(1, 0));
        assert_eq!("-q^-1".parse::<Regime>().unwrap(), Regime::power(-1, -1));
        assert_eq!("q^2".parse::<Regime>().unwrap(), Regime::power(1, 2));
        assert!("x^2".parse::<Regime>().is_err());
        assert!("q^".parse::<Regime>().is_err());
        for r in ["generic", "q^0", "-q^-3", "q^7"] {
            assert_eq!(r.parse::<Regime>().unwrap().to_string(), r);
        }
    }

    #[test]
    fn content_values() {
        let v = content_value(Content::add(0), Regime::Generic);
        assert_eq!(v, ContentValue::Generic { t: 1, q: 0 });
        let v = content_value(Content::add(1), Regime::power(-1, -1));
        assert_eq!(v, ContentValue::Power { sign: -1, exp: 1 });
        let v = content_value(Content::remove(-3), Regime::power(1, 2));
        assert_eq!(v, ContentValue::Power { sign: 1, exp: 4 });
        for s in ["q^3", "-q^-2", "t^-1*q^-2"] {
            assert_eq!(s.parse::<ContentValue>().unwrap().to_text(), s);
        }
        assert_eq!(ContentValue::Generic { t: -1, q: -2 }.pretty(), "t⁻¹q⁻²");
        assert_eq!(ContentValue::Power { sign: -1, exp: 4 }.pretty(), "−q⁴");
    }

    #[test]
    fn quantum_integers() {
        assert!(quantum_integer(0).is_zero());
        let q3 = &(&LaurentQT::q_pow(2) + &LaurentQT::one()) + &LaurentQT::q_pow(-2);
        assert_eq!(quantum_integer(3), q3);
        assert_eq!(quantum_integer(-2), -(&LaurentQT::q_pow(1) + &LaurentQT::q_pow(-1)));
    }

    #[test]
    fn deltas() {
        assert_eq!(delta(Regime::power(1, 0)).as_laurent(), Some(LaurentQT::one()));
        let want = &(&LaurentQT::q_pow(2) + &LaurentQT::from_int(2)) + &LaurentQT::q_pow(-2);
        assert_eq!(delta(Regime::power(1, 3)).as_laurent(), Some(want));
        assert_eq!(delta(Regime::power(-1, 1)).as_laurent(), Some(LaurentQT::zero()));
        assert_eq!(delta(Regime::Generic).as_laurent(), None);
    }

    #[test]
    fn specialization_matches_definition() {
        for r in [Regime::power(-1, 3), Regime::Generic] {
            let (q0, t0) = r.specialization();
            let c = Content::add(2);
            let v = content_value(c, r).specialize(&q0, &t0);
            let direct = &t0 * laurent::rpow(&q0, 4);
            assert_eq!(v, direct);
            let inv = content_value(c.inverse(), r).specialize(&q0, &t0);
            assert!((v * inv).is_one());
        }
    }
}
