//! Integer Laurent polynomials in `q`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// `q^low * poly(q)` with `poly(0) != 0`; the zero polynomial has `low = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    low: i64,
    poly: ZPoly,
}

impl LaurentInt {
    pub fn zero() -> Self {
        LaurentInt {
            low: 0,
            poly: ZPoly::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: BigInt, e: i64) -> Self {
        Self::from_parts(e, ZPoly::constant(c))
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    /// `q^low * p(q)`, normalized.
    pub fn from_parts(low: i64, p: ZPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let k = p.low_order();
        LaurentInt {
            low: low + k as i64,
            poly: p.unshift(k),
        }
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        terms.into_iter().fold(Self::zero(), |acc, (e, c)| {
            acc.add(&Self::monomial(BigInt::from(c), e))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Lowest exponent with nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        self.poly.degree().map(|d| self.low + d as i64)
    }

    /// Polynomial part after factoring out `q^low`.
    pub fn body(&self) -> &ZPoly {
        &self.poly
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        self.poly.coeff((e - self.low) as usize)
    }

    /// Nonzero terms in descending exponent order.
    pub fn terms_desc(&self) -> Vec<(i64, BigInt)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.low + k as i64, c.clone()))
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let a = self.poly.shift((self.low - low) as usize);
        let b = o.poly.shift((o.low - low) as usize);
        Self::from_parts(low, a.add(&b))
    }

    pub fn neg(&self) -> Self {
        LaurentInt {
            low: self.low,
            poly: self.poly.neg(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let low = self
            .low
            .checked_add(o.low)
            .expect("exponent overflow in Laurent product");
        Self::from_parts(low, self.poly.mul(&o.poly))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_parts(self.low, self.poly.scale(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Substitute `q -> q^{-1}`.
    pub fn mirror(&self) -> Self {
        match self.high() {
            None => Self::zero(),
            Some(h) => {
                let mut c: Vec<BigInt> = self.poly.coeffs().to_vec();
                c.reverse();
                Self::from_parts(-h, ZPoly::from_coeffs(c))
            }
        }
    }

    /// Substitute `q -> q^k` for `k != 0`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution q -> q^0 is not a ring automorphism");
        self.terms_desc()
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| {
                acc.add(&Self::monomial(c, e * k))
            })
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.poly.coeffs().iter().sum()
    }

    /// Exponent shift and polynomial body if the value is a unit monomial `±q^e`.
    pub fn as_unit_monomial(&self) -> Option<(i64, bool)> {
        if self.poly.degree() == Some(0) {
            let c = &self.poly.coeffs()[0];
            if c.is_one() {
                return Some((self.low, false));
            }
            if (-c).is_one() {
                return Some((self.low, true));
            }
        }
        None
    }
}

impl fmt::Display for LaurentInt {
    /// Descending exponents with explicit coefficients, e.g. `2*q^2+4*q+3-1*q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms_desc();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in terms.iter().enumerate() {
            if idx > 0 && !c.is_negative() {
                write!(f, "+")?;
            }
            match *e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentInt {
    type Err = Error;

    /// Accepts the rendered grammar; implicit unit coefficients (`q^2`, `-q`) are also accepted.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            let c = bytes[i];
            if (c == b'+' || c == b'-') && bytes[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut acc = LaurentInt::zero();
        for t in terms {
            acc = acc.add(&parse_term(t)?);
        }
        Ok(acc)
    }
}

fn parse_term(t: &str) -> Result<LaurentInt> {
    let bad = || Error::Parse(format!("malformed term `{t}`"));
    let (sign, body) = match t.as_bytes().first() {
        Some(b'+') => (1, &t[1..]),
        Some(b'-') => (-1, &t[1..]),
        _ => (1, t),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let (coef_str, var_str) = match body.find('q') {
        None => (body, None),
        Some(pos) => {
            let c = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
            (c, Some(&body[pos + 1..]))
        }
    };
    let coef: BigInt = if coef_str.is_empty() {
        BigInt::one()
    } else {
        coef_str.parse().map_err(|_| bad())?
    };
    let exp: i64 = match var_str {
        None => 0,
        Some("") => 1,
        Some(rest) => rest
            .strip_prefix('^')
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?,
    };
    Ok(LaurentInt::monomial(coef * sign, exp))
}

impl serde::Serialize for LaurentInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for LaurentInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse() {
        let p = LaurentInt::from_terms([(2, 2), (1, 4), (0, 3), (-1, -1)]);
        assert_eq!(p.to_string(), "2*q^2+4*q+3-1*q^-1");
        assert_eq!("2*q^2+4*q+3-1*q^-1".parse::<LaurentInt>().unwrap(), p);
        assert_eq!(
            "-q^-2 + q".parse::<LaurentInt>().unwrap().to_string(),
            "1*q-1*q^-2"
        );
        assert_eq!(LaurentInt::zero().to_string(), "0");
        assert!("2*x".parse::<LaurentInt>().is_err());
    }

    #[test]
    fn mirror_involution() {
        let p = LaurentInt::from_terms([(3, 1), (-2, 5), (0, -7)]);
        assert_eq!(p.mirror().mirror(), p);
        assert_eq!(p.mirror().coeff(-3), BigInt::from(1));
    }
}
