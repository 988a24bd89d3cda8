//! Dense and sparse exact linear algebra over a [`Ring`] or [`Field`] context.

use std::collections::BTreeMap;

use crate::scalar::{Field, Ring};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Mat { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut E {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<F2>(&self, f: impl Fn(&E) -> F2) -> Mat<F2> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<F2, Er>(&self, f: impl Fn(&E) -> Result<F2, Er>) -> Result<Mat<F2>, Er> {
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Submatrix with the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Mat::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }
}

impl<E: Clone> Mat<E> {
    pub fn zeros<R: Ring<Elem = E>>(r: &R, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![r.zero(); rows * cols],
        }
    }

    pub fn identity<R: Ring<Elem = E>>(r: &R, n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { r.one() } else { r.zero() })
    }

    pub fn diagonal<R: Ring<Elem = E>>(r: &R, d: &[E]) -> Self {
        let n = d.len();
        Mat::from_fn(n, n, |i, j| if i == j { d[i].clone() } else { r.zero() })
    }
}

/// Ring-parameterized matrix arithmetic.
pub trait MatOps: Ring {
    fn mat_mul(&self, a: &Mat<Self::Elem>, b: &Mat<Self::Elem>) -> Mat<Self::Elem> {
        assert_eq!(a.cols, b.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self, a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if self.is_zero(x) {
                    continue;
                }
                for j in 0..b.cols {
                    let y = b.get(k, j);
                    if self.is_zero(y) {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, self.add(&cur, &self.mul(x, y)));
                }
            }
        }
        out
    }

    fn mat_add(&self, a: &Mat<Self::Elem>, b: &Mat<Self::Elem>) -> Mat<Self::Elem> {
        assert_eq!(
            (a.rows, a.cols),
            (b.rows, b.cols),
            "matrix sum shape mismatch"
        );
        Mat {
            rows: a.rows,
            cols: a.cols,
            data: a
                .data
                .iter()
                .zip(&b.data)
                .map(|(x, y)| self.add(x, y))
                .collect(),
        }
    }

    fn mat_sub(&self, a: &Mat<Self::Elem>, b: &Mat<Self::Elem>) -> Mat<Self::Elem> {
        self.mat_add(a, &self.mat_scale(b, &self.from_int(-1)))
    }

    fn mat_scale(&self, a: &Mat<Self::Elem>, c: &Self::Elem) -> Mat<Self::Elem> {
        a.map(|x| self.mul(c, x))
    }

    fn mat_is_zero(&self, a: &Mat<Self::Elem>) -> bool {
        a.data.iter().all(|x| self.is_zero(x))
    }

    fn mat_pow(&self, a: &Mat<Self::Elem>, k: u32) -> Mat<Self::Elem> {
        (0..k).fold(Mat::identity(self, a.rows), |acc, _| self.mat_mul(&acc, a))
    }

    /// Kronecker product `a (x) b`, with index `(i, k) -> i * b.rows + k`.
    fn kron(&self, a: &Mat<Self::Elem>, b: &Mat<Self::Elem>) -> Mat<Self::Elem> {
        Mat::from_fn(a.rows * b.rows, a.cols * b.cols, |i, j| {
            let x = a.get(i / b.rows, j / b.cols);
            if self.is_zero(x) {
                return self.zero();
            }
            self.mul(x, b.get(i % b.rows, j % b.cols))
        })
    }

    fn mat_vec(&self, a: &Mat<Self::Elem>, v: &[Self::Elem]) -> Vec<Self::Elem> {
        assert_eq!(a.cols, v.len());
        (0..a.rows)
            .map(|i| {
                let mut acc = self.zero();
                for (j, x) in v.iter().enumerate() {
                    let m = a.get(i, j);
                    if !self.is_zero(m) && !self.is_zero(x) {
                        acc = self.add(&acc, &self.mul(m, x));
                    }
                }
                acc
            })
            .collect()
    }

    fn trace(&self, a: &Mat<Self::Elem>) -> Self::Elem {
        (0..a.rows.min(a.cols)).fold(self.zero(), |acc, i| self.add(&acc, a.get(i, i)))
    }

    /// The scalar `c` if `a = c * Id`.
    fn as_scalar(&self, a: &Mat<Self::Elem>) -> Option<Self::Elem> {
        if a.rows != a.cols || a.rows == 0 {
            return None;
        }
        let c = a.get(0, 0).clone();
        for i in 0..a.rows {
            for j in 0..a.cols {
                let x = a.get(i, j);
                let ok = if i == j { *x == c } else { self.is_zero(x) };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }
}

impl<R: Ring> MatOps for R {}

/// Reduced row echelon form and its pivot columns.
pub struct Echelon<E> {
    pub rref: Mat<E>,
    pub pivots: Vec<usize>,
}

/// Field-only linear algebra.
pub trait LinAlg: Field {
    fn echelon(&self, a: &Mat<Self::Elem>) -> Echelon<Self::Elem> {
        let mut m = a.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !self.is_zero(m.get(i, col))) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let t = m.get(p, j).clone();
                    let u = m.get(row, j).clone();
                    m.set(p, j, u);
                    m.set(row, j, t);
                }
            }
            let inv = self.inv(m.get(row, col)).expect("nonzero pivot");
            for j in col..m.cols {
                let v = self.mul(m.get(row, j), &inv);
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row || self.is_zero(m.get(i, col)) {
                    continue;
                }
                let f = m.get(i, col).clone();
                for j in col..m.cols {
                    let sub = self.mul(&f, m.get(row, j));
                    if self.is_zero(&sub) {
                        continue;
                    }
                    let v = self.sub(m.get(i, j), &sub);
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { rref: m, pivots }
    }

    fn rank(&self, a: &Mat<Self::Elem>) -> usize {
        self.echelon(a).pivots.len()
    }

    /// Basis of the right kernel, as column vectors.
    fn kernel(&self, a: &Mat<Self::Elem>) -> Vec<Vec<Self::Elem>> {
        let Echelon { rref, pivots } = self.echelon(a);
        let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.zero(); a.cols];
                v[f] = self.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = self.neg(rref.get(r, f));
                }
                v
            })
            .collect()
    }

    fn inverse(&self, a: &Mat<Self::Elem>) -> Option<Mat<Self::Elem>> {
        let n = a.rows;
        if n != a.cols {
            return None;
        }
        let aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                a.get(i, j).clone()
            } else if j - n == i {
                self.one()
            } else {
                self.zero()
            }
        });
        let e = self.echelon(&aug);
        if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| e.rref.get(i, n + j).clone()))
    }

    /// Row-reduced basis of the span of the given vectors.
    fn span_basis(&self, vecs: &[Vec<Self::Elem>], dim: usize) -> Echelon<Self::Elem> {
        let m = Mat::from_fn(vecs.len(), dim, |i, j| vecs[i][j].clone());
        let mut e = self.echelon(&m);
        let r = e.pivots.len();
        e.rref = Mat::from_fn(r, dim, |i, j| e.rref.get(i, j).clone());
        e
    }

    /// Monic minimal polynomial of a square matrix, coefficients from degree 0 up.
    fn minimal_polynomial(&self, a: &Mat<Self::Elem>) -> Vec<Self::Elem> {
        let n = a.rows;
        let mut powers = vec![Mat::identity(self, n)];
        loop {
            let next = self.mat_mul(powers.last().expect("nonempty"), a);
            powers.push(next);
            let k = powers.len();
            let system = Mat::from_fn(n * n, k, |i, j| powers[j].entries()[i].clone());
            if let Some(v) = self.kernel(&system).into_iter().next() {
                let lead = v[k - 1].clone();
                let inv = self
                    .inv(&lead)
                    .expect("kernel vector of minimal length has a nonzero top entry");
                return v.iter().map(|x| self.mul(x, &inv)).collect();
            }
        }
    }
}

impl<F: Field> LinAlg for F {}

/// Sparse vector keyed by basis index.
pub type SparseVec<E> = BTreeMap<usize, E>;

/// Column-compressed sparse matrix: `cols[j]` lists the nonzero `(row, value)` pairs.
#[derive(Clone, Debug)]
pub struct SparseCols<E> {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, E)>>,
}

impl<E: Clone> SparseCols<E> {
    pub fn from_dense<R: Ring<Elem = E>>(r: &R, m: &Mat<E>) -> Self {
        SparseCols {
            rows: m.rows(),
            cols: (0..m.cols())
                .map(|j| {
                    (0..m.rows())
                        .filter(|&i| !r.is_zero(m.get(i, j)))
                        .map(|i| (i, m.get(i, j).clone()))
                        .collect()
                })
                .collect(),
        }
    }
}

/// Accumulate `c * v` into a sparse vector, dropping cancelled entries.
pub fn sparse_axpy<R: Ring>(r: &R, acc: &mut SparseVec<R::Elem>, idx: usize, c: R::Elem) {
    if r.is_zero(&c) {
        return;
    }
    match acc.get_mut(&idx) {
        Some(x) => {
            let s = r.add(x, &c);
            if r.is_zero(&s) {
                acc.remove(&idx);
            } else {
                *x = s;
            }
        }
        None => {
            acc.insert(idx, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{RatFuncField, RatFuncQ};

    #[test]
    fn inverse_and_kernel() {
        let f = RatFuncField;
        let q = RatFuncQ::q_pow(1);
        let a = Mat::from_vec(
            2,
            2,
            vec![
                q.clone(),
                RatFuncQ::one(),
                RatFuncQ::one(),
                RatFuncQ::zero(),
            ],
        );
        let ai = f.inverse(&a).unwrap();
        assert_eq!(f.mat_mul(&a, &ai), Mat::identity(&f, 2));
        let s = Mat::from_vec(1, 2, vec![q.clone(), RatFuncQ::one()]);
        let k = f.kernel(&s);
        assert_eq!(k.len(), 1);
        assert!(f.mat_is_zero(&f.mat_mul(&s, &Mat::from_vec(2, 1, k[0].clone()))));
    }
}
