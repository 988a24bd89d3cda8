//! Ribbon structure on weight modules: Drinfeld element, twist, pivotal
//! action, duality maps and partial quantum traces.

use crate::error::{Error, Result};
use crate::linalg::{LinAlg, Mat, MatOps};
use crate::repmod::WeightModule;
use crate::scalar::{Field, Ring};
use crate::uq_rank2::{u_form, Gen, GroupLike, Rank2Ops, XMono, YMono};

/// Eigenvalue of the pivotal element `nu` on each basis vector.
pub fn pivotal_diagonal<R: Ring>(v: &WeightModule<R>) -> Vec<R::Elem> {
    let nu = GroupLike::nu();
    (0..v.dim()).map(|i| v.group_scalar(&nu, i)).collect()
}

pub fn pivotal<R: Ring>(v: &WeightModule<R>) -> Mat<R::Elem> {
    Mat::diagonal(v.ring(), &pivotal_diagonal(v))
}

/// Drinfeld element `u = S(R2) R1`, acting by
/// `v -> sum_alpha gamma_{wt(y_alpha v)}^{-1} S(x_alpha) y_alpha v`.
pub fn drinfeld_u<F: Field>(v: &WeightModule<F>) -> Result<Mat<F::Elem>> {
    let f = v.ring();
    let dim = v.dim();
    let ops = Rank2Ops::new(v);
    let divided = ops.y12_divided_powers()?;
    let mut out = Mat::zeros(f, dim, dim);
    for b12 in 0..divided.len() as u32 {
        for b2 in 0..2u8 {
            for b1 in 0..2u8 {
                let ym = YMono::new(b2, b12, b1);
                let ymat = ops.y_mono(&ym, &divided);
                if f.mat_is_zero(&ymat) {
                    continue;
                }
                let smat = ops.antipode_x_mono(&XMono::dual_of(&ym));
                if f.mat_is_zero(&smat) {
                    continue;
                }
                for c in 0..dim {
                    for d in 0..dim {
                        let yc = ymat.get(d, c);
                        if f.is_zero(yc) {
                            continue;
                        }
                        let s = f.mul(yc, &f.q_sym(&-u_form(v.weight(d), v.weight(c))));
                        for r in 0..dim {
                            let x = smat.get(r, d);
                            if f.is_zero(x) {
                                continue;
                            }
                            let cur = out.get(r, c).clone();
                            out.set(r, c, f.add(&cur, &f.mul(x, &s)));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Twist `theta_V = nu u^{-1}`.
pub fn twist<F: Field>(v: &WeightModule<F>) -> Result<Mat<F::Elem>> {
    let f = v.ring();
    let u = drinfeld_u(v)?;
    let uinv = f
        .inverse(&u)
        .ok_or_else(|| Error::Consistency("Drinfeld element is singular".into()))?;
    Ok(f.mat_mul(&pivotal(v), &uinv))
}

/// Quantum dimension as the trace of the pivotal action.
pub fn qdim<R: Ring>(v: &WeightModule<R>) -> R::Elem {
    let f = v.ring();
    pivotal_diagonal(v)
        .iter()
        .fold(f.zero(), |a, x| f.add(&a, x))
}

/// The four duality maps of `V`, with `V^*` carrying the dual basis.
pub struct DualityMaps<E> {
    /// `V^* (x) V -> 1`, `f (x) v -> f(v)`.
    pub ev: Mat<E>,
    /// `1 -> V (x) V^*`, `1 -> sum v_i (x) f_i`.
    pub coev: Mat<E>,
    /// `V (x) V^* -> 1`, `v (x) f -> f(nu v)`.
    pub ev_right: Mat<E>,
    /// `1 -> V^* (x) V`, `1 -> sum f_i (x) nu^{-1} v_i`.
    pub coev_right: Mat<E>,
}

pub fn duality_maps<R: Ring>(v: &WeightModule<R>) -> DualityMaps<R::Elem> {
    let f = v.ring();
    let d = v.dim();
    let nu = pivotal_diagonal(v);
    let nu_inv: Vec<R::Elem> = (0..d)
        .map(|i| v.group_scalar(&GroupLike::nu().inverse(), i))
        .collect();
    let diag = |vals: &[R::Elem], row: bool| {
        let mut m = if row {
            Mat::zeros(f, 1, d * d)
        } else {
            Mat::zeros(f, d * d, 1)
        };
        for (i, x) in vals.iter().enumerate() {
            if row {
                m.set(0, i * d + i, x.clone());
            } else {
                m.set(i * d + i, 0, x.clone());
            }
        }
        m
    };
    let ones = vec![f.one(); d];
    DualityMaps {
        ev: diag(&ones, true),
        coev: diag(&ones, false),
        ev_right: diag(&nu, true),
        coev_right: diag(&nu_inv, false),
    }
}

/// Right partial quantum trace of an endomorphism of `V (x) W` over `W`.
pub fn partial_qtrace<R: Ring>(
    f: &Mat<R::Elem>,
    dim_v: usize,
    w: &WeightModule<R>,
) -> Result<Mat<R::Elem>> {
    let r = w.ring();
    let dw = w.dim();
    if f.rows() != dim_v * dw || f.cols() != dim_v * dw {
        return Err(Error::Arity(format!(
            "endomorphism of size {}x{} is not on a {}x{} tensor product",
            f.rows(),
            f.cols(),
            dim_v,
            dw
        )));
    }
    let nu = pivotal_diagonal(w);
    Ok(Mat::from_fn(dim_v, dim_v, |a, b| {
        (0..dw).fold(r.zero(), |acc, i| {
            let x = f.get(a * dw + i, b * dw + i);
            if r.is_zero(x) {
                acc
            } else {
                r.add(&acc, &r.mul(&nu[i], x))
            }
        })
    }))
}

/// Left partial quantum trace of an endomorphism of `V (x) W` over `V`.
pub fn partial_qtrace_left<R: Ring>(
    f: &Mat<R::Elem>,
    v: &WeightModule<R>,
    dim_w: usize,
) -> Result<Mat<R::Elem>> {
    let r = v.ring();
    let dv = v.dim();
    if f.rows() != dv * dim_w || f.cols() != dv * dim_w {
        return Err(Error::Arity(
            "endomorphism size does not match the tensor product".into(),
        ));
    }
    let nu_inv: Vec<R::Elem> = (0..dv)
        .map(|i| v.group_scalar(&GroupLike::nu().inverse(), i))
        .collect();
    Ok(Mat::from_fn(dim_w, dim_w, |a, b| {
        (0..dv).fold(r.zero(), |acc, i| {
            let x = f.get(i * dim_w + a, i * dim_w + b);
            if r.is_zero(x) {
                acc
            } else {
                r.add(&acc, &r.mul(&nu_inv[i], x))
            }
        })
    }))
}

/// True if the matrix commutes with the action of every generator and group-like.
pub fn is_module_map<R: Ring>(
    m: &Mat<R::Elem>,
    src: &WeightModule<R>,
    dst: &WeightModule<R>,
) -> bool {
    let r = src.ring();
    let gens_ok = Gen::ALL
        .iter()
        .all(|&g| r.mat_mul(m, src.action(g)) == r.mat_mul(dst.action(g), m));
    let kappa_ok = (1..=2).all(|a| r.mat_mul(m, &src.kappa(a)) == r.mat_mul(&dst.kappa(a), m));
    gens_ok && kappa_ok
}

/// Basis of the space of module endomorphisms of `v`.
pub fn endomorphism_basis<F: Field>(v: &WeightModule<F>) -> Vec<Mat<F::Elem>> {
    let f = v.ring();
    let d = v.dim();
    let unknowns: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|&(i, j)| v.weight(i) == v.weight(j))
        .collect();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for g in Gen::ALL {
        let a = v.action(g);
        for r in 0..d {
            for c in 0..d {
                let row: Vec<F::Elem> = unknowns
                    .iter()
                    .map(|&(i, j)| {
                        let mut x = f.zero();
                        if i == r {
                            x = f.add(&x, a.get(j, c));
                        }
                        if j == c {
                            x = f.sub(&x, a.get(r, i));
                        }
                        x
                    })
                    .collect();
                if row.iter().any(|x| !f.is_zero(x)) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Mat::from_fn(rows.len(), unknowns.len(), |i, j| rows[i][j].clone());
    f.kernel(&system)
        .into_iter()
        .map(|sol| {
            let mut m = Mat::zeros(f, d, d);
            for (k, &(i, j)) in unknowns.iter().enumerate() {
                m.set(i, j, sol[k].clone());
            }
            m
        })
        .collect()
}
