//! Exact scalars: Laurent polynomials, rational functions and cyclotomic numbers.
//!
//! Linear algebra and module code is generic over the [`Ring`] and [`Field`]
//! context traits. Two backends exist: the symbolic one (`q` generic, with
//! `q^n = -1` for an even symbolic `n`) and the root-of-unity one (`q` a
//! primitive `N`-th root of unity).

pub mod cyclo;
pub mod laurent;
pub mod qint;
pub mod ratfunc;
pub mod sym;
pub mod zpoly;

use std::fmt::Debug;
use std::hash::Hash;

pub use cyclo::{CycloField, CycloScalar};
pub use laurent::LaurentInt;
pub use qint::{gauss_binom, gauss_int, q_factorial};
pub use ratfunc::RatFuncQ;
pub use sym::SymExp;

use crate::error::Result;

/// A commutative ring containing `Z[q, q^{-1}]`, used through a context value.
pub trait Ring: Clone + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem {
        self.from_int(1)
    }
    fn from_int(&self, c: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `q^e`.
    fn q_pow(&self, e: i64) -> Self::Elem;
    /// `q` raised to an exponent that is a polynomial in `n = N/2`.
    fn q_sym(&self, e: &SymExp) -> Self::Elem;
    /// Canonical representative of a weight coordinate.
    fn canon(&self, e: &SymExp) -> SymExp;
    /// Concrete order of `q`, or `None` in the symbolic backend.
    fn order(&self) -> Option<u32>;
    fn from_laurent(&self, p: &LaurentInt) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;

    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// Symbolic sign rule: `q^(c0 + c1 n + c2 n^2 + c3 n^3) = (-1)^c1 q^c0` for even `n`.
fn symbolic_split(e: &SymExp) -> (i64, bool) {
    (e.coeff(0), e.coeff(1).rem_euclid(2) == 1)
}

fn symbolic_canon(e: &SymExp) -> SymExp {
    SymExp::new([e.coeff(0), e.coeff(1).rem_euclid(2), 0, 0])
}

/// Integer Laurent polynomials, symbolic backend without division.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LaurentRing;

impl Ring for LaurentRing {
    type Elem = LaurentInt;

    fn zero(&self) -> LaurentInt {
        LaurentInt::zero()
    }
    fn from_int(&self, c: i64) -> LaurentInt {
        LaurentInt::from_int(c)
    }
    fn add(&self, a: &LaurentInt, b: &LaurentInt) -> LaurentInt {
        a.add(b)
    }
    fn neg(&self, a: &LaurentInt) -> LaurentInt {
        a.neg()
    }
    fn sub(&self, a: &LaurentInt, b: &LaurentInt) -> LaurentInt {
        a.sub(b)
    }
    fn mul(&self, a: &LaurentInt, b: &LaurentInt) -> LaurentInt {
        a.mul(b)
    }
    fn is_zero(&self, a: &LaurentInt) -> bool {
        a.is_zero()
    }
    fn q_pow(&self, e: i64) -> LaurentInt {
        LaurentInt::q_pow(e)
    }
    fn q_sym(&self, e: &SymExp) -> LaurentInt {
        let (c, neg) = symbolic_split(e);
        let v = LaurentInt::q_pow(c);
        if neg {
            v.neg()
        } else {
            v
        }
    }
    fn canon(&self, e: &SymExp) -> SymExp {
        symbolic_canon(e)
    }
    fn order(&self) -> Option<u32> {
        None
    }
    fn from_laurent(&self, p: &LaurentInt) -> LaurentInt {
        p.clone()
    }
    fn render(&self, a: &LaurentInt) -> String {
        a.to_string()
    }
}

/// Rational functions in `q`, symbolic backend.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RatFuncField;

impl Ring for RatFuncField {
    type Elem = RatFuncQ;

    fn zero(&self) -> RatFuncQ {
        RatFuncQ::zero()
    }
    fn from_int(&self, c: i64) -> RatFuncQ {
        RatFuncQ::from_int(c)
    }
    fn add(&self, a: &RatFuncQ, b: &RatFuncQ) -> RatFuncQ {
        a.add(b)
    }
    fn neg(&self, a: &RatFuncQ) -> RatFuncQ {
        a.neg()
    }
    fn sub(&self, a: &RatFuncQ, b: &RatFuncQ) -> RatFuncQ {
        a.sub(b)
    }
    fn mul(&self, a: &RatFuncQ, b: &RatFuncQ) -> RatFuncQ {
        a.mul(b)
    }
    fn is_zero(&self, a: &RatFuncQ) -> bool {
        a.is_zero()
    }
    fn q_pow(&self, e: i64) -> RatFuncQ {
        RatFuncQ::q_pow(e)
    }
    fn q_sym(&self, e: &SymExp) -> RatFuncQ {
        let (c, neg) = symbolic_split(e);
        let v = RatFuncQ::q_pow(c);
        if neg {
            v.neg()
        } else {
            v
        }
    }
    fn canon(&self, e: &SymExp) -> SymExp {
        symbolic_canon(e)
    }
    fn order(&self) -> Option<u32> {
        None
    }
    fn from_laurent(&self, p: &LaurentInt) -> RatFuncQ {
        RatFuncQ::from_laurent(p)
    }
    fn render(&self, a: &RatFuncQ) -> String {
        a.to_string()
    }
}

impl Field for RatFuncField {
    fn inv(&self, a: &RatFuncQ) -> Option<RatFuncQ> {
        a.inv()
    }
}

impl Ring for CycloField {
    type Elem = CycloScalar;

    fn zero(&self) -> CycloScalar {
        CycloField::zero(self)
    }
    fn from_int(&self, c: i64) -> CycloScalar {
        CycloField::from_int(self, c)
    }
    fn add(&self, a: &CycloScalar, b: &CycloScalar) -> CycloScalar {
        CycloField::add(self, a, b)
    }
    fn neg(&self, a: &CycloScalar) -> CycloScalar {
        CycloField::neg(self, a)
    }
    fn mul(&self, a: &CycloScalar, b: &CycloScalar) -> CycloScalar {
        CycloField::mul(self, a, b)
    }
    fn is_zero(&self, a: &CycloScalar) -> bool {
        a.is_zero()
    }
    fn q_pow(&self, e: i64) -> CycloScalar {
        CycloField::q_pow(self, e)
    }
    fn q_sym(&self, e: &SymExp) -> CycloScalar {
        CycloField::q_pow(self, e.eval_mod(self.half(), self.order() as i64))
    }
    fn canon(&self, e: &SymExp) -> SymExp {
        SymExp::constant(e.eval_mod(self.half(), self.order() as i64))
    }
    fn order(&self) -> Option<u32> {
        Some(CycloField::order(self))
    }
    fn from_laurent(&self, p: &LaurentInt) -> CycloScalar {
        CycloField::from_laurent(self, p)
    }
    fn render(&self, a: &CycloScalar) -> String {
        CycloField::render(self, a)
    }
}

impl Field for CycloField {
    fn inv(&self, a: &CycloScalar) -> Option<CycloScalar> {
        CycloField::inv(self, a)
    }
}

/// Exact image of a rational function at a primitive `N`-th root of unity.
pub fn specialize(p: &RatFuncQ, order: u32) -> Result<CycloScalar> {
    CycloField::new(order)?.specialize(p)
}
