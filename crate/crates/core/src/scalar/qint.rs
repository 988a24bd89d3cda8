//! Gaussian integers, factorials and binomials as Laurent polynomials.

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::LaurentInt;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

fn gauss_poly(k: u32) -> ZPoly {
    ZPoly::from_coeffs(vec![BigInt::one(); k as usize])
}

fn factorial_poly(k: u32) -> ZPoly {
    (1..=k).fold(ZPoly::one(), |acc, j| acc.mul(&gauss_poly(j)))
}

/// `[k]_q = 1 + q + ... + q^(k-1)`.
pub fn gauss_int(k: u32) -> LaurentInt {
    LaurentInt::from_parts(0, gauss_poly(k))
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q`.
pub fn q_factorial(k: u32) -> LaurentInt {
    LaurentInt::from_parts(0, factorial_poly(k))
}

/// Gaussian binomial coefficient `binom(k, i)_q`.
pub fn gauss_binom(k: u32, i: u32) -> Result<LaurentInt> {
    if i > k {
        return Err(Error::Domain(format!("binomial index {i} exceeds {k}")));
    }
    let den = factorial_poly(i).mul(&factorial_poly(k - i));
    let p = factorial_poly(k)
        .div_exact(&den)
        .expect("Gaussian binomials are polynomials");
    Ok(LaurentInt::from_parts(0, p))
}
