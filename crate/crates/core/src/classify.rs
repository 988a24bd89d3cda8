//! Non-degeneracy, unimodularity, spherical and ribbon structures for `A(r, q, J)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::superdata::SuperAData;

/// Largest rank for which ribbon pairs are found by scanning all of `((Z/N)^r)^2`.
pub const EXHAUSTIVE_RANK_LIMIT: usize = 4;

/// One ribbon structure `(a, j)` with its sign data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonPair {
    pub a: Vec<i64>,
    pub j: Vec<i64>,
    /// `a = kappa^{n eps}`, entries in `{0, 1}`; present when `a` is a multiple of `n`.
    pub eps: Option<Vec<i64>>,
    /// `j = -n eta`, entries in `{0, 1}`; present when `j` is a multiple of `n`.
    pub eta: Option<Vec<i64>>,
    /// True for the pair compatible with the spherical pivot (`j = 0`).
    pub spherical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub det_t: i64,
    pub nondegenerate: bool,
    pub top_degree: Vec<i64>,
    pub unimodular: bool,
    pub spherical_pivot: Option<Vec<i64>>,
    pub ribbon_pairs: Vec<RibbonPair>,
    pub modular: bool,
}

impl ClassificationReport {
    pub fn ribbon_count(&self) -> usize {
        self.ribbon_pairs.len()
    }

    /// JSON with the fixed field names used by the command-line tool.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "det_t": self.det_t,
            "nondegenerate": self.nondegenerate,
            "top_degree": self.top_degree,
            "unimodular": self.unimodular,
            "spherical_pivot": self.spherical_pivot,
            "ribbon_count": self.ribbon_count(),
            "modular": self.modular,
        })
    }
}

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
pub fn bareiss_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .expect("determinant overflow");
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).expect("determinant overflow")
}

/// Sign matrix `E` with row `j` equal to `eps_j` on and right of the diagonal.
pub fn sign_matrix(data: &SuperAData) -> Vec<Vec<i64>> {
    let r = data.r;
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| if j >= i { data.eps[i] } else { 0 })
                .collect()
        })
        .collect()
}

/// Companion matrix of `x^r + eps_r x^{r-1} + ... + eps_1`.
pub fn companion_matrix(data: &SuperAData) -> Vec<Vec<i64>> {
    let r = data.r;
    let mut c = vec![vec![0i64; r]; r];
    for i in 1..r {
        c[i][i - 1] = 1;
    }
    for (k, row) in c.iter_mut().enumerate() {
        row[r - 1] = -data.eps[k];
    }
    c
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `det t`, computed directly and through `E t = Id - Comp`; the two must agree.
pub fn det_symmetrized(data: &SuperAData) -> Result<i64> {
    let direct = bareiss_det(&data.t);
    let r = data.r;
    let e = sign_matrix(data);
    let comp = companion_matrix(data);
    let lhs = mat_mul(&e, &data.t);
    for i in 0..r {
        for j in 0..r {
            let rhs = i64::from(i == j) - comp[i][j];
            if lhs[i][j] != rhs {
                return Err(Error::Consistency(format!(
                    "E t differs from Id - Comp at ({i}, {j}) for {data}"
                )));
            }
        }
    }
    // det(Id - Comp) = alpha(1) and det E = prod eps = +-1
    let alpha_at_one = 1 + data.eps.iter().sum::<i64>();
    let det_e: i64 = data.eps.iter().product();
    let factored = alpha_at_one * det_e;
    if factored != direct {
        return Err(Error::Consistency(format!(
            "determinant mismatch: direct {direct}, factored {factored} for {data}"
        )));
    }
    Ok(direct)
}

pub fn is_nondegenerate(data: &SuperAData) -> Result<bool> {
    let d = det_symmetrized(data)?;
    Ok(num_integer::gcd(d, data.order as i64) == 1)
}

/// Exponent vector of the group degree of the top PBW monomial, reduced mod `N`.
pub fn top_degree(data: &SuperAData) -> Vec<i64> {
    let m = data.order as i64;
    let mut acc = vec![0i64; data.r];
    for beta in data.positive_roots() {
        let mult = data.root_order(&beta) as i64 - 1;
        for (a, b) in acc.iter_mut().zip(&beta.0) {
            *a += mult * b;
        }
    }
    acc.iter().map(|x| x.rem_euclid(m)).collect()
}

/// Closed-form predicate for unimodularity, modularity and existence of ribbon structures.
pub fn closed_form_unimodular(data: &SuperAData) -> bool {
    data.all_odd() && data.r.is_multiple_of(2)
}

/// Search strategy used for ribbon pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RibbonSearch {
    /// Scan every `(a, j)` in `((Z/N)^r)^2`.
    Exhaustive,
    /// Solve `2j = -i_top` coordinatewise, then derive and check `a`.
    Congruence,
}

struct RibbonEquations<'a> {
    data: &'a SuperAData,
    modulus: i64,
    top: Vec<i64>,
}

impl RibbonEquations<'_> {
    fn j_ok(&self, j: &[i64]) -> bool {
        j.iter()
            .zip(&self.top)
            .all(|(x, t)| (2 * x + t).rem_euclid(self.modulus) == 0)
    }

    fn a_ok(&self, a: &[i64]) -> bool {
        a.iter()
            .zip(&self.top)
            .all(|(x, t)| (2 * x - t).rem_euclid(self.modulus) == 0)
    }

    /// `-u_diag + u j` mod `N`.
    fn a_from_j(&self, j: &[i64]) -> Vec<i64> {
        let u = &self.data.u;
        (0..self.data.r)
            .map(|i| {
                let uj: i64 = (0..self.data.r).map(|k| u[i][k] * j[k]).sum();
                (uj - u[i][i]).rem_euclid(self.modulus)
            })
            .collect()
    }
}

fn decode(mut idx: u64, r: usize, base: u64) -> Vec<i64> {
    let mut v = vec![0i64; r];
    for x in v.iter_mut() {
        *x = (idx % base) as i64;
        idx /= base;
    }
    v
}

/// All ribbon pairs, sorted.
pub fn ribbon_pairs(data: &SuperAData, search: RibbonSearch) -> Vec<RibbonPair> {
    let eqs = RibbonEquations {
        data,
        modulus: data.order as i64,
        top: top_degree(data),
    };
    let r = data.r;
    let base = data.order as u64;
    let space = base.pow(r as u32);
    let mut found: Vec<(Vec<i64>, Vec<i64>)> = match search {
        RibbonSearch::Exhaustive => (0..space)
            .into_par_iter()
            .flat_map_iter(|ji| {
                let j = decode(ji, r, base);
                let j_ok = eqs.j_ok(&j);
                let target = eqs.a_from_j(&j);
                let eqs = &eqs;
                (0..space).filter_map(move |ai| {
                    if !j_ok {
                        return None;
                    }
                    let a = decode(ai, r, base);
                    (eqs.a_ok(&a) && a == target).then(|| (a, j.clone()))
                })
            })
            .collect(),
        RibbonSearch::Congruence => {
            let m = eqs.modulus;
            let mut choices: Vec<Vec<i64>> = vec![vec![]];
            for t in &eqs.top {
                let b = (-t).rem_euclid(m);
                let sols: Vec<i64> = if b % 2 == 0 {
                    vec![b / 2, b / 2 + m / 2]
                } else {
                    vec![]
                };
                choices = choices
                    .into_iter()
                    .flat_map(|pre| {
                        sols.iter().map(move |&s| {
                            let mut p = pre.clone();
                            p.push(s);
                            p
                        })
                    })
                    .collect();
            }
            choices
                .into_iter()
                .filter_map(|j| {
                    let a = eqs.a_from_j(&j);
                    eqs.a_ok(&a).then_some((a, j))
                })
                .collect()
        }
    };
    found.sort();
    let n = data.half();
    let as_bits = |v: &[i64]| -> Option<Vec<i64>> {
        v.iter()
            .all(|x| x % n == 0)
            .then(|| v.iter().map(|x| (x / n) % 2).collect())
    };
    found
        .into_iter()
        .map(|(a, j)| RibbonPair {
            eps: as_bits(&a),
            eta: as_bits(&j),
            spherical: j.iter().all(|&x| x == 0),
            a,
            j,
        })
        .collect()
}

/// Check `eps_i = 1 + n eta_i + eta_{i+1}` and `eps_r = 1 + n eta_r` mod 2.
pub fn check_sign_relation(pair: &RibbonPair, n: i64) -> bool {
    let (Some(eps), Some(eta)) = (&pair.eps, &pair.eta) else {
        return false;
    };
    let r = eps.len();
    (0..r).all(|i| {
        let next = if i + 1 < r { eta[i + 1] } else { 0 };
        (1 + n * eta[i] + next - eps[i]).rem_euclid(2) == 0
    })
}

pub fn default_search(data: &SuperAData) -> RibbonSearch {
    if data.r <= EXHAUSTIVE_RANK_LIMIT {
        RibbonSearch::Exhaustive
    } else {
        RibbonSearch::Congruence
    }
}

pub fn classify_all(data: &SuperAData) -> Result<ClassificationReport> {
    classify_with(data, default_search(data))
}

pub fn classify_with(data: &SuperAData, search: RibbonSearch) -> Result<ClassificationReport> {
    let det_t = det_symmetrized(data)?;
    let nondegenerate = num_integer::gcd(det_t, data.order as i64) == 1;
    let top = top_degree(data);
    let unimodular = top.iter().all(|&x| x == 0);
    let closed = closed_form_unimodular(data);
    if unimodular != closed {
        return Err(Error::Consistency(format!(
            "top degree {top:?} disagrees with the unimodularity criterion for {data}"
        )));
    }
    let pairs = ribbon_pairs(data, search);
    let expected = if closed { 1usize << data.r } else { 0 };
    if pairs.len() != expected {
        return Err(Error::Consistency(format!(
            "found {} ribbon pairs, expected {expected} for {data}",
            pairs.len()
        )));
    }
    let n = data.half();
    if closed {
        if let Some(bad) = pairs.iter().find(|p| !check_sign_relation(p, n)) {
            return Err(Error::Consistency(format!(
                "ribbon pair {bad:?} violates the sign relation"
            )));
        }
        if pairs.iter().filter(|p| p.spherical).count() != 1 {
            return Err(Error::Consistency(
                "expected one spherical ribbon pair".into(),
            ));
        }
    }
    Ok(ClassificationReport {
        det_t,
        nondegenerate,
        top_degree: top,
        unimodular,
        spherical_pivot: unimodular.then(|| vec![n; data.r]),
        ribbon_pairs: pairs,
        modular: closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_small() {
        assert_eq!(bareiss_det(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(
            bareiss_det(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]]),
            24
        );
    }

    #[test]
    fn rank_two_all_odd() {
        let d = SuperAData::build(2, &[1, 2], 4).unwrap();
        let rep = classify_all(&d).unwrap();
        assert_eq!(rep.det_t, -1);
        assert_eq!(rep.ribbon_count(), 4);
        assert_eq!(rep.spherical_pivot, Some(vec![2, 2]));
    }
}
