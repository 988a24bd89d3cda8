//! Exponents of `q` that are polynomials in the half-order `n = N/2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// `c0 + c1 n + c2 n^2 + c3 n^3`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct SymExp {
    c: [i64; 4],
}

impl SymExp {
    pub const ZERO: SymExp = SymExp { c: [0; 4] };

    pub fn new(c: [i64; 4]) -> Self {
        SymExp { c }
    }

    pub fn constant(k: i64) -> Self {
        SymExp { c: [k, 0, 0, 0] }
    }

    /// `a + b n`.
    pub fn linear(a: i64, b: i64) -> Self {
        SymExp { c: [a, b, 0, 0] }
    }

    /// The symbol `n` itself.
    pub fn half() -> Self {
        Self::linear(0, 1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.c[k]
    }

    pub fn is_constant(&self) -> bool {
        self.c[1..].iter().all(|&x| x == 0)
    }

    /// Evaluate at a concrete `n`, reduced modulo `m`.
    pub fn eval_mod(&self, n: i64, m: i64) -> i64 {
        let n = n as i128;
        let m = m as i128;
        let mut acc: i128 = 0;
        let mut p: i128 = 1;
        for &c in &self.c {
            acc = (acc + (c as i128).rem_euclid(m) * p).rem_euclid(m);
            p = (p * n).rem_euclid(m);
        }
        acc as i64
    }

    /// Evaluate at a concrete `n` without reduction.
    pub fn eval(&self, n: i64) -> i64 {
        self.c.iter().rev().fold(0i64, |acc, &c| {
            acc.checked_mul(n)
                .and_then(|x| x.checked_add(c))
                .expect("exponent overflow")
        })
    }
}

impl Add for SymExp {
    type Output = SymExp;
    fn add(self, o: SymExp) -> SymExp {
        let mut c = [0; 4];
        for (k, v) in c.iter_mut().enumerate() {
            *v = self.c[k].checked_add(o.c[k]).expect("exponent overflow");
        }
        SymExp { c }
    }
}

impl Neg for SymExp {
    type Output = SymExp;
    fn neg(self) -> SymExp {
        SymExp {
            c: self.c.map(|x| -x),
        }
    }
}

impl Sub for SymExp {
    type Output = SymExp;
    fn sub(self, o: SymExp) -> SymExp {
        self + (-o)
    }
}

impl Mul for SymExp {
    type Output = SymExp;
    fn mul(self, o: SymExp) -> SymExp {
        let mut c = [0i64; 4];
        for i in 0..4 {
            for j in 0..4 {
                let p = self.c[i].checked_mul(o.c[j]).expect("exponent overflow");
                if p == 0 {
                    continue;
                }
                assert!(i + j < 4, "exponent degree in n exceeds 3");
                c[i + j] = c[i + j].checked_add(p).expect("exponent overflow");
            }
        }
        SymExp { c }
    }
}

impl Mul<i64> for SymExp {
    type Output = SymExp;
    fn mul(self, k: i64) -> SymExp {
        self * SymExp::constant(k)
    }
}

impl fmt::Display for SymExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match k {
                0 => format!("{c}"),
                1 => format!("{c}n"),
                _ => format!("{c}n^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+").replace("+-", "-"))
        }
    }
}
