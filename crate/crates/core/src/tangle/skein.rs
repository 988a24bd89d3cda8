//! Skein theory of the braiding on `W (x) W` and two-strand torus links.

use serde::Serialize;

use super::coloring::symbolic_coloring;
use super::eval::braid_endomorphism;
use super::BraidSpec;
use crate::error::{Error, Result};
use crate::linalg::{LinAlg, Mat, MatOps};
use crate::repmod::w_module;
use crate::rtcat::{endomorphism_basis, is_module_map};
use crate::scalar::{Field, LaurentInt, LaurentRing, RatFuncField, RatFuncQ, Ring};
use crate::uq_rank2::r_matrix_braiding;

/// Closed form of the invariant of the torus link `T(2, b)`.
pub fn torus2_formula(b: i64) -> LaurentInt {
    if b == 0 {
        return LaurentInt::zero();
    }
    let m = b.abs();
    let mut terms = vec![(0, m)];
    terms.extend((1..m).map(|i| (i, 2 * (m - i))));
    let p = LaurentInt::from_terms(terms);
    let p = if m % 2 == 0 { p.neg() } else { p };
    if b > 0 {
        p
    } else {
        p.mirror()
    }
}

/// Invariant of `T(2, b)` from the minimal polynomial of the crossing,
/// seeded by direct evaluation of the closures of `sigma_1^k`, `k < 3`.
pub fn skein_recursion(b: i64) -> Result<LaurentInt> {
    let c = symbolic_coloring()?;
    let r = LaurentRing;
    let gen = if b >= 0 { 1 } else { -1 };
    let m = b.unsigned_abs() as usize;
    let crossing = {
        let braid = BraidSpec::new(2, vec![gen])?;
        dense_crossing(&braid)?
    };
    let poly = RatFuncField.minimal_polynomial(&crossing);
    let poly: Vec<LaurentInt> = poly
        .iter()
        .map(|x| {
            x.to_laurent()
                .ok_or_else(|| Error::NonIntegral(format!("minimal polynomial coefficient {x}")))
        })
        .collect::<Result<_>>()?;
    let deg = poly.len() - 1;
    let mut lambdas: Vec<LaurentInt> = Vec::with_capacity(m + 1);
    for k in 0..=m.min(deg - 1) {
        let braid = BraidSpec::new(2, vec![gen; k])?;
        let endo = braid_endomorphism(&*c, &braid)?;
        lambdas.push(r.as_scalar(&endo).ok_or_else(|| {
            Error::BrokenFunctoriality("two-strand closure is not scalar".into())
        })?);
    }
    for k in lambdas.len()..=m {
        let mut acc = LaurentInt::zero();
        for (j, coeff) in poly.iter().take(deg).enumerate() {
            acc = acc.sub(&coeff.mul(&lambdas[k - deg + j]));
        }
        lambdas.push(acc);
    }
    let lambda = &lambdas[m];
    Ok(lambda.mul(&c.theta_pow(-b)))
}

/// Dense matrix of the single crossing of a two-strand braid, over `Q(q)`.
fn dense_crossing(braid: &BraidSpec) -> Result<Mat<RatFuncQ>> {
    let w = w_module(&RatFuncField)?;
    let psi = r_matrix_braiding(&w, &w)?;
    if braid.word == [1] {
        RatFuncField
            .inverse(&psi)
            .ok_or_else(|| Error::Consistency("braiding is not invertible".into()))
    } else {
        Ok(psi)
    }
}

/// Eigenvalue of the braiding with its multiplicities.
#[derive(Clone, Debug, Serialize)]
pub struct Eigen {
    pub value: String,
    pub geometric: usize,
    pub algebraic: usize,
}

/// Skein data of the braiding `Psi` on `W (x) W` and of its negative
/// `Psi_s = -Psi`, the braiding under which `W` has trivial twist.
#[derive(Clone, Debug, Serialize)]
pub struct SkeinReport {
    /// Monic minimal polynomial of `Psi`, coefficients from degree 0 up.
    pub min_poly: Vec<String>,
    /// Monic minimal polynomial of `Psi_s`.
    pub signed_min_poly: Vec<String>,
    pub spectrum: Vec<Eigen>,
    pub end_dim: usize,
    /// Rank of `e = -(Psi_s + Psi_s^{-1} + 2) / (q + q^{-1} - 2)`.
    pub e_rank: usize,
    /// `e` is an idempotent module map fixing the highest weight vector `w0 (x) w1 + q w1 (x) w0`.
    pub e_is_projection: bool,
    /// `Id, Psi, e` is a basis of the endomorphism algebra.
    pub spans_endomorphisms: bool,
    /// Scalar twist of `W` for `Psi`.
    pub twist: String,
}

pub fn skein_verify() -> Result<SkeinReport> {
    let f = RatFuncField;
    let w = w_module(&f)?;
    let ww = w.tensor(&w);
    let psi = r_matrix_braiding(&w, &w)?;
    let n = psi.rows();
    let id = Mat::identity(&f, n);
    let minus = f.from_int(-1);
    let signed = f.mat_scale(&psi, &minus);
    let signed_inv = f
        .inverse(&signed)
        .ok_or_else(|| Error::Consistency("braiding is not invertible".into()))?;
    let poly = f.minimal_polynomial(&psi);
    let render = |p: &[RatFuncQ]| p.iter().map(|x| f.render(x)).collect::<Vec<_>>();

    let mut spectrum = Vec::new();
    for e in -2..=2 {
        for s in [1, -1] {
            let lam = f.mul(&f.from_int(s), &f.q_pow(e));
            let at = poly
                .iter()
                .rev()
                .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, &lam), c));
            if !f.is_zero(&at) {
                continue;
            }
            let shifted = f.mat_sub(&psi, &f.mat_scale(&id, &lam));
            spectrum.push(Eigen {
                value: f.render(&lam),
                geometric: n - f.rank(&shifted),
                algebraic: n - f.rank(&f.mat_pow(&shifted, n as u32)),
            });
        }
    }

    let two = f.from_int(2);
    let denom = f.sub(&f.add(&f.q_pow(1), &f.q_pow(-1)), &two);
    let scale = f.neg(&f.inv(&denom).expect("q + q^-1 - 2 is nonzero"));
    let e = f.mat_scale(
        &f.mat_add(&f.mat_add(&signed, &signed_inv), &f.mat_scale(&id, &two)),
        &scale,
    );
    let mut hw = vec![f.zero(); n];
    hw[1] = f.one();
    hw[4] = f.q_pow(1);
    let e_is_projection =
        f.mat_mul(&e, &e) == e && is_module_map(&e, &ww, &ww) && f.mat_vec(&e, &hw) == hw;

    let basis = endomorphism_basis(&ww);
    let flat = |m: &Mat<RatFuncQ>| m.entries().to_vec();
    let spanned = f
        .span_basis(&[flat(&id), flat(&psi), flat(&e)], n * n)
        .pivots
        .len();
    let all = {
        let mut v: Vec<Vec<RatFuncQ>> = basis.iter().map(flat).collect();
        v.extend([flat(&id), flat(&psi), flat(&e)]);
        f.span_basis(&v, n * n).pivots.len()
    };

    let c = symbolic_coloring()?;
    Ok(SkeinReport {
        min_poly: render(&poly),
        signed_min_poly: render(&f.minimal_polynomial(&signed)),
        spectrum,
        end_dim: basis.len(),
        e_rank: f.rank(&e),
        e_is_projection,
        spans_endomorphisms: spanned == 3 && basis.len() == 3 && all == 3,
        twist: c.theta().to_string(),
    })
}
