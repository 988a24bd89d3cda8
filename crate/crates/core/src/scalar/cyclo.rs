//! The cyclotomic field `Q(q)` with `q` a primitive `N`-th root of unity.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentInt;
use super::ratfunc::RatFuncQ;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Element of `Q[q]/(Phi_N)` stored by its coordinates on `1, q, ..., q^(phi(N)-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    pub order: u32,
    pub coords: Vec<BigRational>,
}

impl CycloScalar {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

#[derive(Debug)]
struct Inner {
    order: u32,
    phi: usize,
    modulus: ZPoly,
    /// `powers[k]` = coordinates of `q^k` for `0 <= k < order`.
    powers: Vec<Vec<BigRational>>,
}

/// Arithmetic context for a fixed even order `N > 2`.
#[derive(Clone, Debug)]
pub struct CycloField {
    inner: Arc<Inner>,
}

impl PartialEq for CycloField {
    fn eq(&self, o: &Self) -> bool {
        self.inner.order == o.inner.order
    }
}

/// The `N`-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u32) -> ZPoly {
    let mut p = ZPoly::monomial(BigInt::one(), n as usize).sub(&ZPoly::one());
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p
                .div_exact(&cyclotomic_poly(d))
                .expect("cyclotomic factor divides x^n - 1");
        }
    }
    p
}

impl CycloField {
    pub fn new(order: u32) -> Result<Self> {
        if !order.is_multiple_of(2) || order <= 2 {
            return Err(Error::InvalidOrder(order as i64));
        }
        let modulus = cyclotomic_poly(order);
        let phi = modulus.degree().unwrap();
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur: Vec<BigRational> = vec![BigRational::zero(); phi];
        cur[0] = BigRational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by q and reduce using the monic modulus
            let top = cur[phi - 1].clone();
            let mut next = vec![BigRational::zero(); phi];
            for k in (1..phi).rev() {
                next[k] = cur[k - 1].clone();
            }
            if !top.is_zero() {
                for (k, m) in modulus.coeffs().iter().take(phi).enumerate() {
                    next[k] -= &top * BigRational::from_integer(m.clone());
                }
            }
            cur = next;
        }
        Ok(CycloField {
            inner: Arc::new(Inner {
                order,
                phi,
                modulus,
                powers,
            }),
        })
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    /// `n = N/2`.
    pub fn half(&self) -> i64 {
        (self.inner.order / 2) as i64
    }

    pub fn phi(&self) -> usize {
        self.inner.phi
    }

    pub fn modulus(&self) -> &ZPoly {
        &self.inner.modulus
    }

    fn wrap(&self, coords: Vec<BigRational>) -> CycloScalar {
        CycloScalar {
            order: self.inner.order,
            coords,
        }
    }

    pub fn zero(&self) -> CycloScalar {
        self.wrap(vec![BigRational::zero(); self.inner.phi])
    }

    pub fn from_rational(&self, c: BigRational) -> CycloScalar {
        let mut v = vec![BigRational::zero(); self.inner.phi];
        v[0] = c;
        self.wrap(v)
    }

    pub fn from_int(&self, c: i64) -> CycloScalar {
        self.from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn q_pow(&self, e: i64) -> CycloScalar {
        let k = e.rem_euclid(self.inner.order as i64) as usize;
        self.wrap(self.inner.powers[k].clone())
    }

    pub fn add(&self, a: &CycloScalar, b: &CycloScalar) -> CycloScalar {
        self.wrap(a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self, a: &CycloScalar) -> CycloScalar {
        self.wrap(a.coords.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, a: &CycloScalar, b: &CycloScalar) -> CycloScalar {
        let phi = self.inner.phi;
        let mut raw = vec![BigRational::zero(); 2 * phi - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<BigRational> = raw[..phi].to_vec();
        for (k, c) in raw.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.inner.powers[k]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        self.wrap(out)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn inv(&self, a: &CycloScalar) -> Option<CycloScalar> {
        if a.is_zero() {
            return None;
        }
        let m: Vec<BigRational> = self
            .inner
            .modulus
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // invariant: r_i = s_i * a mod m
        let (mut r0, mut r1) = (trim(m), trim(a.coords.clone()));
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = qdivrem(&r0, &r1);
            let s2 = qsub(&s0, &qmul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Phi_N is irreducible
        let c = r1[0].clone();
        let s: Vec<BigRational> = s1.iter().map(|x| x / &c).collect();
        Some(self.reduce(&s))
    }

    /// Reduce an arbitrary-length coefficient vector modulo `Phi_N`.
    fn reduce(&self, raw: &[BigRational]) -> CycloScalar {
        let phi = self.inner.phi;
        let n = self.inner.order as usize;
        let mut out = vec![BigRational::zero(); phi];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.inner.powers[k % n]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        self.wrap(out)
    }

    pub fn from_laurent(&self, p: &LaurentInt) -> CycloScalar {
        let n = self.inner.order as i64;
        let mut raw = vec![BigRational::zero(); n as usize];
        for (e, c) in p.terms_desc() {
            raw[e.rem_euclid(n) as usize] += BigRational::from_integer(c);
        }
        self.reduce(&raw)
    }

    fn from_zpoly(&self, p: &ZPoly) -> CycloScalar {
        self.from_laurent(&LaurentInt::from_parts(0, p.clone()))
    }

    /// Image of a rational function at the primitive root.
    pub fn specialize(&self, p: &RatFuncQ) -> Result<CycloScalar> {
        let num = self.from_zpoly(p.numer());
        let den = self.from_zpoly(p.denom());
        let inv = self.inv(&den).ok_or_else(|| {
            Error::Specialization(format!(
                "denominator of {p} vanishes at a primitive {}-th root of unity",
                self.order()
            ))
        })?;
        Ok(self.mul(&num, &inv))
    }

    pub fn render(&self, a: &CycloScalar) -> String {
        a.to_string()
    }
}

impl fmt::Display for CycloScalar {
    /// Coordinates in the power basis `1, q, ..., q^{phi(N)-1}`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coords.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let c = if c.is_integer() {
                c.to_integer().to_string()
            } else {
                format!("({c})")
            };
            parts.push(match k {
                0 => c,
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+").replace("+-", "-"))
        }
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn qsub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    trim(
        (0..n)
            .map(|k| a.get(k).unwrap_or(&z) - b.get(k).unwrap_or(&z))
            .collect(),
    )
}

fn qmul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    trim(v)
}

fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    let lc = b[db].clone();
    for k in (0..q.len()).rev() {
        let t = &r[k + db] / &lc;
        if t.is_zero() {
            continue;
        }
        for (j, c) in b.iter().enumerate() {
            r[k + j] -= &t * c;
        }
        q[k] = t;
    }
    (trim(q), trim(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_power_is_minus_one() {
        for n in [4u32, 6, 8, 10, 12] {
            let f = CycloField::new(n).unwrap();
            assert_eq!(f.q_pow(n as i64 / 2), f.from_int(-1));
            assert_eq!(f.q_pow(n as i64), f.from_int(1));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = CycloField::new(12).unwrap();
        let a = f.add(&f.q_pow(3), &f.from_int(2));
        let b = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &b), f.from_int(1));
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(CycloField::new(5).is_err());
        assert!(CycloField::new(2).is_err());
    }
}
