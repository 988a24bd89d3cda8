//! Standard modules `M(i, j)`, their maximal submodules and the simple quotients `L(i, j)`.

use std::collections::HashMap;
use std::sync::Arc;

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use super::WeightModule;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, LinAlg, Mat, MatOps};
use crate::scalar::{gauss_int, CycloField, CycloScalar, Field, Ring};
use crate::uq_rank2::{weight_const, Gen};

type ModuleCache = RwLock<HashMap<(u8, i64, i64, u32), Arc<WeightModule<CycloField>>>>;

static CACHE: Lazy<ModuleCache> = Lazy::new(|| RwLock::new(HashMap::new()));

const STANDARD: u8 = 0;
const SIMPLE: u8 = 1;

fn cached(
    kind: u8,
    i: i64,
    j: i64,
    order: u32,
    build: impl FnOnce() -> Result<WeightModule<CycloField>>,
) -> Result<Arc<WeightModule<CycloField>>> {
    let key = (kind, i, j, order);
    if let Some(m) = CACHE.read().get(&key) {
        return Ok(m.clone());
    }
    let m = Arc::new(build()?);
    Ok(CACHE.write().entry(key).or_insert(m).clone())
}

fn check_label(i: i64, j: i64, order: u32) -> Result<()> {
    let n = i64::from(order);
    if !(0..n).contains(&i) || !(0..n).contains(&j) {
        return Err(Error::Domain(format!(
            "label ({i},{j}) out of range for N = {order}"
        )));
    }
    Ok(())
}

/// Index of `v^{(b2, b12, b1)}` in the standard basis of `M(i, j)`.
pub fn standard_index(order: u32, b2: usize, b12: usize, b1: usize) -> usize {
    (b2 * order as usize + b12) * 2 + b1
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The standard module `M(i, j)` of dimension `4N` at a primitive `N`-th root of unity.
pub fn standard_module(i: i64, j: i64, order: u32) -> Result<Arc<WeightModule<CycloField>>> {
    let field = CycloField::new(order)?;
    check_label(i, j, order)?;
    cached(STANDARD, i, j, order, || build_standard(&field, i, j))
}

fn build_standard(f: &CycloField, i: i64, j: i64) -> Result<WeightModule<CycloField>> {
    let order = f.order();
    let n = order as usize;
    let dim = 4 * n;
    let idx = |b2: usize, k: usize, b1: usize| standard_index(order, b2, k, b1);
    let mut labels = vec![String::new(); dim];
    let mut weights = vec![weight_const(0, 0); dim];
    let mut degrees = vec![0; dim];
    for b2 in 0..2 {
        for k in 0..n {
            for b1 in 0..2 {
                let p = idx(b2, k, b1);
                let (kk, b1i, b2i) = (k as i64, b1 as i64, b2 as i64);
                labels[p] = format!("v({b2},{k},{b1})");
                weights[p] = weight_const(i - kk - b1i, j - kk - b2i);
                degrees[p] = -(b1i + b2i + 2 * kk);
            }
        }
    }
    let mut gens: [Mat<_>; 4] = std::array::from_fn(|_| Mat::zeros(f, dim, dim));
    let one_minus_q = |e: i64| f.sub(&f.one(), &f.q_pow(e));
    let qint = |k: usize| f.from_laurent(&gauss_int(k as u32));
    let c = |v: i64| f.from_int(v);
    let mut put = |g: Gen, from: usize, to: usize, val: CycloScalar| {
        if !f.is_zero(&val) {
            gens[g.index()].set(to, from, val);
        }
    };
    for k in 0..n {
        let kk = k as i64;
        // y1
        put(
            Gen::Y1,
            idx(0, k, 0),
            idx(0, k, 1),
            f.mul(&c(sign(kk)), &f.q_pow(kk)),
        );
        if k + 1 < n {
            let coef = f.mul(&one_minus_q(1), &qint(k + 1));
            put(Gen::Y1, idx(1, k, 0), idx(0, k + 1, 0), coef.clone());
            put(Gen::Y1, idx(1, k, 1), idx(0, k + 1, 1), coef);
        }
        put(
            Gen::Y1,
            idx(1, k, 0),
            idx(1, k, 1),
            f.mul(&c(sign(kk)), &f.q_pow(kk + 1)),
        );
        // y2
        put(Gen::Y2, idx(0, k, 0), idx(1, k, 0), f.one());
        put(Gen::Y2, idx(0, k, 1), idx(1, k, 1), f.one());
        // x1
        if k > 0 {
            put(
                Gen::X1,
                idx(0, k, 0),
                idx(1, k - 1, 0),
                f.neg(&f.q_pow(j - kk)),
            );
            put(
                Gen::X1,
                idx(0, k, 1),
                idx(1, k - 1, 1),
                f.neg(&f.q_pow(j - kk)),
            );
        }
        put(
            Gen::X1,
            idx(0, k, 1),
            idx(0, k, 0),
            f.mul(&f.mul(&c(sign(kk)), &f.q_pow(-kk)), &one_minus_q(j)),
        );
        put(
            Gen::X1,
            idx(1, k, 1),
            idx(1, k, 0),
            f.mul(&f.mul(&c(sign(kk)), &f.q_pow(-kk - 1)), &one_minus_q(j)),
        );
        // x2
        if k > 0 {
            put(Gen::X2, idx(0, k, 0), idx(0, k - 1, 1), c(sign(kk - 1)));
            put(Gen::X2, idx(1, k, 0), idx(1, k - 1, 1), c(sign(kk)));
        }
        put(Gen::X2, idx(1, k, 0), idx(0, k, 0), one_minus_q(i - kk));
        put(Gen::X2, idx(1, k, 1), idx(0, k, 1), one_minus_q(i - kk - 1));
    }
    WeightModule::new(f.clone(), labels, weights, degrees, gens)
}

/// Generators of the maximal submodule of `M(i, j)`; empty when `M(i, j)` is simple.
pub fn maximal_submodule_generators(i: i64, j: i64, order: u32) -> Result<Vec<Vec<CycloScalar>>> {
    let f = CycloField::new(order)?;
    check_label(i, j, order)?;
    let n = i64::from(order);
    let dim = 4 * order as usize;
    let unit = |p: usize| {
        let mut v = vec![f.zero(); dim];
        v[p] = f.one();
        v
    };
    let idx = |b2: usize, k: i64, b1: usize| standard_index(order, b2, k as usize, b1);
    Ok(match (i, j) {
        (0, 0) => vec![unit(idx(1, 0, 0)), unit(idx(0, 0, 1))],
        (_, 0) => vec![unit(idx(0, 0, 1)), unit(idx(1, i, 0))],
        (0, _) => vec![unit(idx(1, 0, 0)), unit(idx(0, j, 1))],
        _ if i + j == n => Vec::new(),
        _ => {
            let k = (i + j) % n;
            let mut v = unit(idx(1, k - 1, 1));
            v[idx(0, k, 0)] = f.mul(&f.from_int(sign(k)), &f.sub(&f.one(), &f.q_pow(-j)));
            vec![v]
        }
    })
}

/// Submodule with a reduced row echelon basis.
pub struct Submodule<E> {
    pub basis: Echelon<E>,
}

impl<E> Submodule<E> {
    pub fn dim(&self) -> usize {
        self.basis.pivots.len()
    }
}

fn reduce<F: Field>(f: &F, rows: &[(usize, Vec<F::Elem>)], v: &mut [F::Elem]) {
    for (p, row) in rows {
        if f.is_zero(&v[*p]) {
            continue;
        }
        let c = v[*p].clone();
        for (x, r) in v.iter_mut().zip(row) {
            if !f.is_zero(r) {
                *x = f.sub(x, &f.mul(&c, r));
            }
        }
    }
}

/// Smallest submodule containing the given vectors.
pub fn submodule_generated<F: Field>(
    m: &WeightModule<F>,
    gens: &[Vec<F::Elem>],
) -> Submodule<F::Elem> {
    let f = m.ring();
    let dim = m.dim();
    let mut rows: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    let mut queue: Vec<Vec<F::Elem>> = gens.to_vec();
    while let Some(mut v) = queue.pop() {
        reduce(f, &rows, &mut v);
        let Some(p) = (0..dim).find(|&k| !f.is_zero(&v[k])) else {
            continue;
        };
        let inv = f.inv(&v[p]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for g in Gen::ALL {
            queue.push(f.mat_vec(m.action(g), &v));
        }
        rows.push((p, v));
    }
    let vecs: Vec<Vec<F::Elem>> = rows.into_iter().map(|(_, v)| v).collect();
    Submodule {
        basis: f.span_basis(&vecs, dim),
    }
}

/// Quotient by a submodule; the basis is the set of non-pivot standard basis vectors.
pub fn quotient<F: Field>(
    m: &WeightModule<F>,
    sub: &Submodule<F::Elem>,
) -> Result<WeightModule<F>> {
    let f = m.ring();
    let pivots = &sub.basis.pivots;
    let rref = &sub.basis.rref;
    let keep: Vec<usize> = (0..m.dim()).filter(|c| !pivots.contains(c)).collect();
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(a, &b)| (b, a)).collect();
    let gens = Gen::ALL.map(|g| {
        let mut out = Mat::zeros(f, keep.len(), keep.len());
        let a = m.action(g);
        for (col, &c) in keep.iter().enumerate() {
            let mut v = a.column(c);
            for (r, &p) in pivots.iter().enumerate() {
                if f.is_zero(&v[p]) {
                    continue;
                }
                let coef = v[p].clone();
                for (k, x) in v.iter_mut().enumerate() {
                    let e = rref.get(r, k);
                    if !f.is_zero(e) {
                        *x = f.sub(x, &f.mul(&coef, e));
                    }
                }
            }
            for (k, x) in v.into_iter().enumerate() {
                if !f.is_zero(&x) {
                    out.set(pos[&k], col, x);
                }
            }
        }
        out
    });
    WeightModule::new(
        f.clone(),
        keep.iter().map(|&k| m.labels()[k].clone()).collect(),
        keep.iter().map(|&k| *m.weight(k)).collect(),
        keep.iter().map(|&k| m.degrees()[k]).collect(),
        gens,
    )
}

/// The simple module `L(i, j)` as the quotient of `M(i, j)` by its maximal submodule.
pub fn simple_module(i: i64, j: i64, order: u32) -> Result<Arc<WeightModule<CycloField>>> {
    let m = standard_module(i, j, order)?;
    cached(SIMPLE, i, j, order, || {
        let gens = maximal_submodule_generators(i, j, order)?;
        let sub = submodule_generated(&m, &gens);
        quotient(&m, &sub)
    })
}

/// Dimension of `L(i, j)` from the closed formula.
pub fn simple_dimension(i: i64, j: i64, order: u32) -> usize {
    let n = i64::from(order);
    let d = match (i, j) {
        (_, 0) => 2 * i + 1,
        (0, _) => 2 * j + 1,
        _ if i + j <= n => 4 * (i + j),
        _ => 4 * (i + j - n),
    };
    d as usize
}

/// Quantum dimension of `L(i, j)` from the closed formula.
pub fn simple_qdim(i: i64, j: i64) -> i64 {
    match (i, j) {
        (_, 0) => sign(i),
        (0, _) => sign(j),
        _ => 0,
    }
}

/// Basis of the highest weight vectors, one weight space at a time.
pub fn highest_weight_vectors<F: Field>(m: &WeightModule<F>) -> Vec<Vec<F::Elem>> {
    let f = m.ring();
    let dim = m.dim();
    let mut groups: Vec<((crate::uq_rank2::Weight, i64), Vec<usize>)> = Vec::new();
    for k in 0..dim {
        let key = (*m.weight(k), m.degrees()[k]);
        match groups.iter_mut().find(|(g, _)| *g == key) {
            Some((_, v)) => v.push(k),
            None => groups.push((key, vec![k])),
        }
    }
    let x1 = m.action(Gen::X1);
    let x2 = m.action(Gen::X2);
    let mut out = Vec::new();
    for (_, cols) in groups {
        let stacked = Mat::from_fn(2 * dim, cols.len(), |r, c| {
            if r < dim {
                x1.get(r, cols[c]).clone()
            } else {
                x2.get(r - dim, cols[c]).clone()
            }
        });
        for kv in f.kernel(&stacked) {
            let mut v = vec![f.zero(); dim];
            for (c, x) in cols.iter().zip(kv) {
                v[*c] = x;
            }
            out.push(v);
        }
    }
    out
}
