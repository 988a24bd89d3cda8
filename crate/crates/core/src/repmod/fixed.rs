//! Two small modules with explicit bases, usable over any field.

use super::WeightModule;
use crate::error::{Error, Result};
use crate::linalg::{Mat, MatOps};
use crate::scalar::{Field, SymExp};
use crate::uq_rank2::Gen;

fn build<F: Field>(
    f: &F,
    labels: &[&str],
    weights: Vec<[SymExp; 2]>,
    degrees: Vec<i64>,
    entries: Vec<(Gen, usize, usize, F::Elem)>,
) -> Result<WeightModule<F>> {
    let dim = labels.len();
    let mut gens: [Mat<F::Elem>; 4] = std::array::from_fn(|_| Mat::zeros(f, dim, dim));
    for (g, from, to, c) in entries {
        gens[g.index()].set(to, from, c);
    }
    WeightModule::new(
        f.clone(),
        labels.iter().map(|s| s.to_string()).collect(),
        weights,
        degrees,
        gens,
    )
}

/// `L(1, 0)` on the basis `v0`, `v1 = y2 v0`, `v2 = y1 v1`.
pub fn fundamental_module<F: Field>(f: &F) -> Result<WeightModule<F>> {
    let c = SymExp::constant;
    let one_minus = |e: i64| f.sub(&f.one(), &f.q_pow(e));
    build(
        f,
        &["v0", "v1", "v2"],
        vec![[c(1), c(0)], [c(1), c(-1)], [c(0), c(-1)]],
        vec![0, -1, -2],
        vec![
            (Gen::Y2, 0, 1, f.one()),
            (Gen::Y1, 1, 2, f.one()),
            (Gen::X2, 1, 0, one_minus(1)),
            (Gen::X1, 2, 1, one_minus(-1)),
        ],
    )
}

/// The four-dimensional module `W = L(n, n + 1)` on the basis `w0, w1, w1', w2`.
/// Over a root of unity this requires `n` even.
pub fn w_module<F: Field>(f: &F) -> Result<WeightModule<F>> {
    if let Some(order) = f.order() {
        if order % 4 != 0 {
            return Err(Error::Domain(format!(
                "W needs N divisible by 4, got {order}"
            )));
        }
    }
    let n = SymExp::half();
    let k = SymExp::constant;
    let one_plus = |e: i64| f.add(&f.one(), &f.q_pow(e));
    let y1_on_w1p = f
        .div(&f.from_int(2), &one_plus(-1))
        .ok_or_else(|| Error::Domain("1 + q^-1 vanishes".into()))?;
    build(
        f,
        &["w0", "w1", "w1'", "w2"],
        vec![[n, n + k(1)], [n - k(1), n + k(1)], [n, n], [n - k(1), n]],
        vec![0, -1, -1, -2],
        vec![
            (Gen::Y1, 0, 1, f.one()),
            (Gen::Y1, 2, 3, y1_on_w1p),
            (Gen::Y2, 0, 2, f.one()),
            (Gen::Y2, 1, 3, f.one()),
            (Gen::X1, 1, 0, one_plus(1)),
            (Gen::X1, 3, 2, one_plus(-1)),
            (Gen::X2, 2, 0, f.from_int(2)),
            (Gen::X2, 3, 1, one_plus(-1)),
        ],
    )
}

/// `L(1, 0)^* = L(0, 1)` on the basis `u0 = f2`, `u1 = y1 u0`, `u2 = y2 u1`,
/// where `f0, f1, f2` is dual to the basis of [`fundamental_module`].
pub fn fundamental_dual_module<F: Field>(f: &F) -> Result<WeightModule<F>> {
    let dual = fundamental_module(f)?.dual();
    let u0 = vec![f.zero(), f.zero(), f.one()];
    let u1 = f.mat_vec(dual.action(Gen::Y1), &u0);
    let u2 = f.mat_vec(dual.action(Gen::Y2), &u1);
    dual.rebased(&[u0, u1, u2], vec!["u0".into(), "u1".into(), "u2".into()])
}
