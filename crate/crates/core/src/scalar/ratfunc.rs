//! Rational functions in `q` with integer coefficients, kept in a canonical reduced form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::laurent::LaurentInt;
use super::zpoly::ZPoly;

/// `num / den` with `gcd(num, den) = 1` in `Z[q]` and `lc(den) > 0`.
///
/// Equal values have identical fields, so derived equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFuncQ {
    num: ZPoly,
    den: ZPoly,
}

impl Default for RatFuncQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFuncQ {
    pub fn zero() -> Self {
        RatFuncQ {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        RatFuncQ {
            num: ZPoly::constant(BigInt::from(c)),
            den: ZPoly::one(),
        }
    }

    /// Reduce `num / den`; panics on a zero denominator.
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut n = num.div_exact(&g).expect("gcd divides numerator");
        let mut d = den.div_exact(&g).expect("gcd divides denominator");
        if d.lc().is_negative() {
            n = n.neg();
            d = d.neg();
        }
        RatFuncQ { num: n, den: d }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(&LaurentInt::q_pow(e))
    }

    pub fn from_laurent(p: &LaurentInt) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let low = p.low();
        if low >= 0 {
            Self::new(p.body().shift(low as usize), ZPoly::one())
        } else {
            Self::new(
                p.body().clone(),
                ZPoly::monomial(BigInt::one(), (-low) as usize),
            )
        }
    }

    /// The Laurent polynomial equal to `self`, if the denominator is a power of `q`.
    pub fn to_laurent(&self) -> Option<LaurentInt> {
        let d = self.den.degree()?;
        if self.den.low_order() == d && self.den.lc().is_one() {
            Some(LaurentInt::from_parts(-(d as i64), self.num.clone()))
        } else {
            None
        }
    }

    pub fn numer(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFuncQ {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    /// Substitute `q -> q^{-1}`.
    pub fn mirror(&self) -> Self {
        let flip = |p: &ZPoly| {
            let d = p.degree().unwrap_or(0);
            let mut c = p.coeffs().to_vec();
            c.reverse();
            (ZPoly::from_coeffs(c), d)
        };
        let (n, dn) = flip(&self.num);
        let (d, dd) = flip(&self.den);
        // num(1/q)/den(1/q) = q^dd n'(q) / (q^dn d'(q))
        if dd >= dn {
            Self::new(n.shift(dd - dn), d)
        } else {
            Self::new(n, d.shift(dn - dd))
        }
    }
}

impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return write!(f, "{l}");
        }
        let n = LaurentInt::from_parts(0, self.num.clone());
        let d = LaurentInt::from_parts(0, self.den.clone());
        write!(f, "({n})/({d})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        // (2 - 2q) / (4 - 4q^2) = 1 / (2 + 2q)
        let a = RatFuncQ::new(ZPoly::from_i64s(&[2, -2]), ZPoly::from_i64s(&[4, 0, -4]));
        let b = RatFuncQ::new(ZPoly::from_i64s(&[-1]), ZPoly::from_i64s(&[-2, -2]));
        assert_eq!(a, b);
        assert_eq!(a.denom(), &ZPoly::from_i64s(&[2, 2]));
    }

    #[test]
    fn laurent_round_trip() {
        let p = LaurentInt::from_terms([(2, 2), (1, 4), (0, 3), (-3, -1)]);
        let r = RatFuncQ::from_laurent(&p);
        assert_eq!(r.to_laurent(), Some(p.clone()));
        assert_eq!(r.mirror().to_laurent(), Some(p.mirror()));
    }
}
