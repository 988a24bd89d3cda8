//! Evaluation of coloured tangles and of the cut-open link invariant.

use std::collections::HashMap;

use rayon::prelude::*;

use super::coloring::{cyclotomic_coloring, symbolic_coloring, Coloring};
use super::{BraidSpec, CrossSign, MorseTangle, Orient};
use crate::error::{Error, Result};
use crate::linalg::{sparse_axpy, Mat, MatOps, SparseVec};
use crate::scalar::{CycloField, CycloScalar, LaurentInt, Ring};

fn pack(digits: &[u8], base: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d as usize)
}

fn unpack(mut idx: usize, len: usize, base: usize) -> Vec<u8> {
    let mut out = vec![0u8; len];
    for slot in out.iter_mut().rev() {
        *slot = (idx % base) as u8;
        idx /= base;
    }
    out
}

/// Endomorphism of `W` assigned to a (1,1)-tangle.
pub fn tangle_endomorphism<R: Ring>(c: &Coloring<R>, t: &MorseTangle) -> Result<Mat<R::Elem>> {
    t.levels()?;
    let r = c.ring();
    let d = c.dim();
    let columns: Vec<Vec<(usize, R::Elem)>> = (0..d)
        .into_par_iter()
        .map(|a| {
            let mut state: HashMap<Vec<u8>, R::Elem> = HashMap::new();
            state.insert(vec![a as u8], r.one());
            for slice in &t.slices {
                let mut next: HashMap<Vec<u8>, R::Elem> = HashMap::new();
                for (digits, coeff) in &state {
                    let mut partial: Vec<(Vec<u8>, R::Elem)> = vec![(Vec::new(), coeff.clone())];
                    let mut pos = 0;
                    for piece in slice {
                        let nin = piece.inputs().len();
                        let nout = piece.outputs().len();
                        match c.piece(piece) {
                            None => {
                                for (out, _) in partial.iter_mut() {
                                    out.push(digits[pos]);
                                }
                            }
                            Some(m) => {
                                let col = &m.cols[pack(&digits[pos..pos + nin], d)];
                                let mut grown = Vec::with_capacity(partial.len() * col.len());
                                for (out, x) in &partial {
                                    for (row, y) in col {
                                        let mut o = out.clone();
                                        o.extend(unpack(*row, nout, d));
                                        grown.push((o, r.mul(x, y)));
                                    }
                                }
                                partial = grown;
                            }
                        }
                        pos += nin;
                    }
                    for (out, x) in partial {
                        let e = next.entry(out).or_insert_with(|| r.zero());
                        *e = r.add(e, &x);
                    }
                }
                next.retain(|_, x| !r.is_zero(x));
                state = next;
            }
            state.into_iter().map(|(k, x)| (k[0] as usize, x)).collect()
        })
        .collect();
    let mut out = Mat::zeros(r, d, d);
    for (a, col) in columns.into_iter().enumerate() {
        for (row, x) in col {
            out.set(row, a, x);
        }
    }
    Ok(out)
}

/// Endomorphism of `W` from the braid closure cut open at `b.cut`: strands left
/// of the cut are traced with `nu^{-1}`, strands right of it with `nu`.
pub fn braid_endomorphism<R: Ring>(c: &Coloring<R>, b: &BraidSpec) -> Result<Mat<R::Elem>> {
    b.validate()?;
    let r = c.ring();
    let d = c.dim();
    let k = b.strands;
    let total = d.pow(k as u32);
    let stride = |i: usize| d.pow((k - 2 - i) as u32);
    let cut_stride = d.pow((k - 1 - b.cut) as u32);
    let crossings: Vec<(usize, &crate::linalg::SparseCols<R::Elem>)> = b
        .word
        .iter()
        .map(|&g| {
            let i = g.unsigned_abs() as usize - 1;
            let sign = if g > 0 {
                CrossSign::Pos
            } else {
                CrossSign::Neg
            };
            (i, c.crossing(sign, [Orient::Up, Orient::Up]))
        })
        .collect();
    let nu = c.nu(Orient::Up);
    let nu_inv = c.nu_inv(Orient::Up);
    let zero = || Mat::zeros(r, d, d);
    let result = (0..total)
        .into_par_iter()
        .map(|start| {
            let digits = unpack(start, k, d);
            let mut weight = r.one();
            for (p, &dg) in digits.iter().enumerate() {
                if p < b.cut {
                    weight = r.mul(&weight, &nu_inv[dg as usize]);
                } else if p > b.cut {
                    weight = r.mul(&weight, &nu[dg as usize]);
                }
            }
            let mut acc = zero();
            if r.is_zero(&weight) {
                return acc;
            }
            let mut vec: SparseVec<R::Elem> = SparseVec::new();
            vec.insert(start, weight);
            for &(i, m) in &crossings {
                let s = stride(i);
                let block = s * d * d;
                let mut next = SparseVec::new();
                for (idx, x) in &vec {
                    let (hi, local, lo) = (idx / block, (idx / s) % (d * d), idx % s);
                    for (row, y) in &m.cols[local] {
                        sparse_axpy(r, &mut next, hi * block + row * s + lo, r.mul(x, y));
                    }
                }
                vec = next;
            }
            let b_in = digits[b.cut] as usize;
            let base = start - b_in * cut_stride;
            for a in 0..d {
                if let Some(x) = vec.get(&(base + a * cut_stride)) {
                    acc.set(a, b_in, r.add(acc.get(a, b_in), x));
                }
            }
            acc
        })
        .reduce(zero, |x, y| r.mat_add(&x, &y));
    Ok(result)
}

/// Scalar of a cut-open diagram, framing corrected by `theta^{-writhe}`.
fn normalize<R: Ring>(c: &Coloring<R>, endo: &Mat<R::Elem>, writhe: i64) -> Result<R::Elem> {
    let r = c.ring();
    let lambda = r.as_scalar(endo).ok_or_else(|| {
        Error::BrokenFunctoriality("cut-open diagram is not a scalar endomorphism".into())
    })?;
    Ok(r.mul(&lambda, &c.theta_pow(-writhe)))
}

pub fn invariant_tangle_in<R: Ring>(c: &Coloring<R>, t: &MorseTangle) -> Result<R::Elem> {
    let endo = tangle_endomorphism(c, t)?;
    normalize(c, &endo, t.writhe())
}

pub fn invariant_braid_in<R: Ring>(c: &Coloring<R>, b: &BraidSpec) -> Result<R::Elem> {
    let endo = braid_endomorphism(c, b)?;
    normalize(c, &endo, b.writhe())
}

/// Symbolic invariant of a Morse tangle.
pub fn invariant_tangle(t: &MorseTangle) -> Result<LaurentInt> {
    invariant_tangle_in(&*symbolic_coloring()?, t)
}

/// Symbolic invariant of a braid closure.
pub fn invariant_braid(b: &BraidSpec) -> Result<LaurentInt> {
    invariant_braid_in(&*symbolic_coloring()?, b)
}

/// Compares the specialized symbolic invariant with a direct computation over
/// `Q(zeta_N)` coloured by `simple_module(n, n + 1)`. Returns both values.
pub fn cross_check_cyclotomic(b: &BraidSpec, order: u32) -> Result<(CycloScalar, CycloScalar)> {
    let f = CycloField::new(order)?;
    let symbolic = invariant_braid(b)?;
    let c = cyclotomic_coloring(order)?;
    let direct = invariant_braid_in(&c, b)?;
    Ok((f.from_laurent(&symbolic), direct))
}
