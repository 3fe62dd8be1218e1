//! Integer Laurent polynomials in one variable.
//!
//! `LaurentPoly` is the numeric carrier for every polynomial invariant in the
//! crate. Coefficients are arbitrary-precision integers and the representation
//! is canonical: no stored coefficient is zero, and the zero polynomial is the
//! empty term table.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Laurent polynomial over the integers, stored as exponent -> coefficient.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::term(0, 1)
    }

    /// The monomial c * t^e. Returns zero if `c` is zero.
    pub fn term(exponent: i64, coefficient: impl Into<BigInt>) -> Self {
        let c: BigInt = coefficient.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPoly { terms }
    }

    /// The variable t.
    pub fn t() -> Self {
        LaurentPoly::term(1, 1)
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents accumulate.
    pub fn from_pairs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    /// Ordinary polynomial from coefficients in ascending degree order.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: Vec<C>) -> Self {
        LaurentPoly::from_pairs(coeffs.into_iter().enumerate().map(|(e, c)| (e as i64, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// Iterate terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exponent: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    /// Multiply by the unit c * t^e (c must be +-1 for a true unit, but any
    /// scalar is accepted).
    pub fn mul_term(&self, exponent: i64, c: impl Into<BigInt>) -> Self {
        let c: BigInt = c.into();
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e + exponent, k * &c))
                .collect(),
        }
    }

    /// Exponent reflection t -> 1/t.
    pub fn reversed(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Evaluate at an integer point. Negative exponents require `x` = +-1.
    pub fn eval_int(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for (e, c) in self.terms.iter() {
            if *e >= 0 {
                acc += c * x.pow(*e as u32);
            } else {
                assert!(
                    x.magnitude().is_one(),
                    "negative exponent needs an invertible point"
                );
                // x = +-1, so x^e = x^|e|.
                acc += c * x.pow(e.unsigned_abs() as u32);
            }
        }
        acc
    }

    /// Unit normalization: +-t^k * p with lowest exponent 0 and positive
    /// constant term. Errors on the zero polynomial. Idempotent.
    pub fn normalize(&self) -> Result<LaurentPoly> {
        let low = self.min_exponent().ok_or(Error::ZeroPolynomial)?;
        let shifted = self.mul_term(-low, 1);
        if shifted.coeff(0).is_negative() {
            Ok(-&shifted)
        } else {
            Ok(shifted)
        }
    }

    /// (max exponent - min exponent, whether the leading coefficient is a unit).
    pub fn span_monic(&self) -> Result<(u64, bool)> {
        let low = self.min_exponent().ok_or(Error::ZeroPolynomial)?;
        let high = self.max_exponent().unwrap();
        let monic = self.coeff(high).magnitude().is_one();
        Ok(((high - low) as u64, monic))
    }

    /// True when `self` and `other` agree up to a unit +-t^k.
    pub fn eq_up_to_unit(&self, other: &LaurentPoly) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (true, false) | (false, true) => false,
            _ => self.normalize().unwrap() == other.normalize().unwrap(),
        }
    }

    /// Exact division. Errors when the divisor is zero or does not divide.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both operands to ordinary polynomials; the exponent offset is
        // restored at the end.
        let sl = self.min_exponent().unwrap();
        let dl = divisor.min_exponent().unwrap();
        let mut rem = self.mul_term(-sl, 1);
        let div = divisor.mul_term(-dl, 1);
        let ddeg = div.max_exponent().unwrap();
        let dlead = div.coeff(ddeg);
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let rdeg = rem.max_exponent().unwrap();
            if rdeg < ddeg {
                return Err(Error::InexactDivision(format!(
                    "remainder {rem} after dividing {self} by {divisor}"
                )));
            }
            let rlead = rem.coeff(rdeg);
            let (q, r) = num_integer::Integer::div_rem(&rlead, &dlead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {dlead} does not divide {rlead}"
                )));
            }
            let qterm = LaurentPoly::term(rdeg - ddeg, q);
            rem = &rem - &(&qterm * &div);
            quot = &quot + &qterm;
        }
        Ok(quot.mul_term(sl - dl, 1))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// ---- Textual form ----
//
// "c0 + c1*t + c2*t^2 ..." with negative exponents written t^-k.

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter() {
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<LaurentPoly> {
        let bad = |reason: &str| Error::PolynomialParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        if compact == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut out = LaurentPoly::zero();
        let mut rest = compact.as_str();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        while !rest.is_empty() {
            // Term boundary: the next top-level + or - (a minus directly after
            // '^' belongs to the exponent).
            let mut end = rest.len();
            let bytes = rest.as_bytes();
            let mut i = 0;
            while i < bytes.len() {
                let b = bytes[i];
                if b == b'+' || b == b'-' {
                    if i > 0 && bytes[i - 1] == b'^' {
                        i += 1;
                        continue;
                    }
                    end = i;
                    break;
                }
                i += 1;
            }
            let term = &rest[..end];
            let (coeff_str, exp) = match term.find('t') {
                None => (term, 0i64),
                Some(tpos) => {
                    let coeff_part = term[..tpos].trim_end_matches('*');
                    let after = &term[tpos + 1..];
                    let exp = if after.is_empty() {
                        1
                    } else {
                        let digits = after
                            .strip_prefix('^')
                            .ok_or_else(|| bad("expected '^' after t"))?;
                        digits.parse::<i64>().map_err(|_| bad("bad exponent"))?
                    };
                    (coeff_part, exp)
                }
            };
            let coeff: BigInt = if coeff_str.is_empty() {
                BigInt::one()
            } else {
                coeff_str.parse().map_err(|_| bad("bad coefficient"))?
            };
            out.add_term(exp, coeff * sign);
            if end == rest.len() {
                break;
            }
            sign = if bytes[end] == b'-' { -1 } else { 1 };
            rest = &rest[end + 1..];
        }
        Ok(out)
    }
}

// ---- JSON form ----
//
// An array of [exponent, coefficient] pairs in ascending exponent order.
// Coefficients serialize as JSON numbers when they fit in i64 and as decimal
// strings otherwise; both forms are accepted on input.

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, serde_json::Value)> = self
            .terms
            .iter()
            .map(|(e, c)| (*e, bigint_to_json(c)))
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, serde_json::Value)> = Vec::deserialize(deserializer)?;
        let mut out = LaurentPoly::zero();
        for (e, v) in pairs {
            out.add_term(e, bigint_from_json(&v).map_err(D::Error::custom)?);
        }
        Ok(out)
    }
}

pub(crate) fn bigint_to_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(n) => serde_json::Value::from(n),
        Err(_) => serde_json::Value::from(c.to_string()),
    }
}

pub(crate) fn bigint_from_json(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("coefficient {n} is not an integer")),
        serde_json::Value::String(s) => s
            .parse()
            .map_err(|_| format!("coefficient {s:?} is not an integer")),
        other => Err(format!("expected integer coefficient, got {other}")),
    }
}
