//! Dynkin data of type Super A: exponent matrices, parity, roots, Cartan matrix and reflections.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Braiding data `A(r, q, J)` with `q` of even order `N`.
///
/// `u[i][j]` is the exponent of `q` in `q_ij` (upper triangular); the diagonal
/// entry of an odd vertex is `n = N/2`. `t = u + u^T` is stored with the
/// diagonal of odd vertices reduced to `0 = N mod N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperAData {
    pub r: usize,
    /// Odd vertices, 1-based and sorted.
    pub odd: Vec<usize>,
    pub order: u32,
    pub u: Vec<Vec<i64>>,
    pub t: Vec<Vec<i64>>,
    /// `eps[j] = parity(alpha_{j+1} + ... + alpha_r)`.
    pub eps: Vec<i64>,
    /// Weyl-class invariant.
    pub s_j: i64,
}

/// Vertex label of a generalized Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexLabel {
    MinusOne,
    Q,
    QInv,
}

impl SuperAData {
    /// Construct `A(r, q, J)` from the rank, the odd set (1-based) and the order of `q`.
    pub fn build(r: usize, odd: &[usize], order: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidRank(r));
        }
        if !order.is_multiple_of(2) || order <= 2 {
            return Err(Error::InvalidOrder(order as i64));
        }
        let set: BTreeSet<usize> = odd.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::InvalidOddSet("the odd set must be nonempty".into()));
        }
        if set.len() != odd.len() {
            return Err(Error::InvalidOddSet(format!("repeated vertex in {odd:?}")));
        }
        if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > r) {
            return Err(Error::InvalidOddSet(format!(
                "vertex {bad} is outside 1..={r}"
            )));
        }
        let n = (order / 2) as i64;
        let is_odd = |i: usize| set.contains(&(i + 1));
        // edge[i] = exponent of q~_{i,i+1}; diag[i] = exponent of q_ii (0-based)
        let mut diag = vec![0i64; r];
        let mut edge = vec![0i64; r - 1];
        let last = r - 1;
        if is_odd(last) {
            diag[last] = n;
            edge[last - 1] = 1;
        } else {
            diag[last] = 1;
            edge[last - 1] = -1;
        }
        for i in (0..last).rev() {
            let right = edge[i];
            if is_odd(i) {
                diag[i] = n;
                if i > 0 {
                    edge[i - 1] = -right;
                }
            } else {
                diag[i] = -right;
                if i > 0 {
                    edge[i - 1] = right;
                }
            }
        }
        let mut u = vec![vec![0i64; r]; r];
        for i in 0..r {
            u[i][i] = diag[i];
            if i + 1 < r {
                u[i][i + 1] = edge[i];
            }
        }
        let mut t = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                t[i][j] = u[i][j] + u[j][i];
            }
            if is_odd(i) {
                t[i][i] = 0;
            }
        }
        let odd_sorted: Vec<usize> = set.iter().copied().collect();
        let eps = (0..r)
            .map(|j| {
                let cnt = (j..r).filter(|&k| is_odd(k)).count();
                if cnt % 2 == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let s_j = odd_sorted
            .iter()
            .enumerate()
            .map(|(k, &i)| {
                if (k + 1) % 2 == 0 {
                    i as i64
                } else {
                    -(i as i64)
                }
            })
            .sum::<i64>()
            .abs();
        let data = SuperAData {
            r,
            odd: odd_sorted,
            order,
            u,
            t,
            eps,
            s_j,
        };
        data.check_dynkin_conditions()?;
        Ok(data)
    }

    pub fn half(&self) -> i64 {
        (self.order / 2) as i64
    }

    pub fn is_odd_vertex(&self, i: usize) -> bool {
        self.odd.contains(&(i + 1))
    }

    /// True when every vertex is odd.
    pub fn all_odd(&self) -> bool {
        self.odd.len() == self.r
    }

    /// Full braiding exponent matrix `q_ij = q^{m[i][j]}`, reduced mod `N`.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.order as i64;
        self.u
            .iter()
            .map(|row| row.iter().map(|x| x.rem_euclid(m)).collect())
            .collect()
    }

    pub fn vertex_label(&self, i: usize) -> VertexLabel {
        let m = self.order as i64;
        match self.u[i][i].rem_euclid(m) {
            x if x == self.half() => VertexLabel::MinusOne,
            1 => VertexLabel::Q,
            _ => VertexLabel::QInv,
        }
    }

    /// Exponent of `q~_{i,i+1}` (0-based `i`).
    pub fn edge_exponent(&self, i: usize) -> i64 {
        self.u[i][i + 1]
    }

    fn check_dynkin_conditions(&self) -> Result<()> {
        let m = self.order as i64;
        let n = self.half();
        for i in 0..self.r {
            let d = self.u[i][i].rem_euclid(m);
            let left = (i > 0).then(|| self.u[i - 1][i]);
            let right = (i + 1 < self.r).then(|| self.u[i][i + 1]);
            if self.is_odd_vertex(i) {
                if d != n {
                    return Err(Error::Consistency(format!(
                        "odd vertex {} is not -1",
                        i + 1
                    )));
                }
                if let (Some(a), Some(b)) = (left, right) {
                    if (a + b).rem_euclid(m) != 0 {
                        return Err(Error::Consistency(format!(
                            "odd vertex {} violates q~ q~ = 1",
                            i + 1
                        )));
                    }
                }
            } else {
                for e in [left, right].into_iter().flatten() {
                    if (d + e).rem_euclid(m) != 0 {
                        return Err(Error::Consistency(format!(
                            "even vertex {} violates q_ii q~ = 1",
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Text rendering such as `(-1) --q-- (-1)`.
    pub fn diagram(&self) -> String {
        let v = |i: usize| match self.vertex_label(i) {
            VertexLabel::MinusOne => "(-1)",
            VertexLabel::Q => "(q)",
            VertexLabel::QInv => "(q^-1)",
        };
        let mut s = v(0).to_string();
        for i in 0..self.r - 1 {
            let e = if self.edge_exponent(i) == 1 {
                "q"
            } else {
                "q^-1"
            };
            s.push_str(&format!(" --{e}-- {}", v(i + 1)));
        }
        s
    }

    /// JSON form `{r, J, N, u, t, diagram}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.r,
            "J": self.odd,
            "N": self.order,
            "u": self.u,
            "t": self.t,
            "diagram": self.diagram(),
        })
    }

    /// Positive roots `alpha_{ij}`, `i <= j`, as coefficient vectors.
    pub fn positive_roots(&self) -> Vec<RootVec> {
        let mut out = Vec::new();
        for i in 0..self.r {
            for j in i..self.r {
                out.push(RootVec::interval(self.r, i, j));
            }
        }
        out
    }

    /// Parity `+1` or `-1` of a root.
    pub fn parity(&self, beta: &RootVec) -> i64 {
        let s: i64 = self.odd.iter().map(|&i| beta.0[i - 1]).sum();
        if s.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// Order of the root vector of `beta`: 2 for odd roots, `N` for even ones.
    pub fn root_order(&self, beta: &RootVec) -> u32 {
        if self.parity(beta) == -1 {
            2
        } else {
            self.order
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_from_exponents(&self.exponent_matrix(), self.order)
    }

    /// Reflect at vertex `i` (1-based).
    pub fn reflect(&self, i: usize) -> Result<Reflected> {
        reflect_exponents(&self.exponent_matrix(), self.order, i)
    }

    pub fn weyl_class_invariant(&self) -> i64 {
        self.s_j
    }

    /// Diagram key: vertex exponents and symmetrized edge exponents mod `N`.
    pub fn diagram_key(&self) -> DiagramKey {
        DiagramKey::from_exponents(&self.exponent_matrix(), self.order)
    }

    /// All diagrams reachable by reflections.
    pub fn weyl_orbit(&self) -> Result<Vec<DiagramKey>> {
        let mut seen = vec![self.diagram_key()];
        let mut queue = VecDeque::from([self.exponent_matrix()]);
        while let Some(m) = queue.pop_front() {
            for i in 1..=self.r {
                let refl = reflect_exponents(&m, self.order, i)?;
                let key = DiagramKey::from_exponents(&refl.exponents, self.order);
                if !seen.contains(&key) {
                    seen.push(key);
                    queue.push_back(refl.exponents);
                }
            }
        }
        Ok(seen)
    }
}

impl fmt::Display for SuperAData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A({}, q, {:?}) N={}: {}",
            self.r,
            self.odd,
            self.order,
            self.diagram()
        )
    }
}

/// Element of the root lattice `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    /// `alpha_i + ... + alpha_j` (0-based, inclusive).
    pub fn interval(r: usize, i: usize, j: usize) -> Self {
        RootVec((0..r).map(|k| i64::from(k >= i && k <= j)).collect())
    }

    pub fn simple(r: usize, i: usize) -> Self {
        Self::interval(r, i, i)
    }

    pub fn add(&self, o: &Self) -> Self {
        RootVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

/// Generalized Dynkin diagram up to the choice of braiding with the same diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramKey {
    pub vertices: Vec<i64>,
    pub edges: Vec<Vec<i64>>,
}

impl DiagramKey {
    pub fn from_exponents(m: &[Vec<i64>], order: u32) -> Self {
        let md = order as i64;
        let r = m.len();
        DiagramKey {
            vertices: (0..r).map(|i| m[i][i].rem_euclid(md)).collect(),
            edges: (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| {
                            if i == j {
                                0
                            } else {
                                (m[i][j] + m[j][i]).rem_euclid(md)
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Result of a reflection: the new exponent matrix and its recognition as Super A data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflected {
    pub exponents: Vec<Vec<i64>>,
    /// `(odd set, inverted)` where `inverted` means the diagram is `A(r, q^{-1}, J)`.
    pub recognized: Option<(Vec<usize>, bool)>,
}

fn ord_of(e: i64, order: u32) -> i64 {
    let m = order as i64;
    let e = e.rem_euclid(m);
    m / num_integer::gcd(e, m)
}

/// Generalized Cartan matrix from a braiding exponent matrix.
pub fn cartan_from_exponents(m: &[Vec<i64>], order: u32) -> Vec<Vec<i64>> {
    let md = order as i64;
    let r = m.len();
    let mut c = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            if i == j {
                c[i][j] = 2;
                continue;
            }
            let qii = m[i][i].rem_euclid(md);
            let qt = (m[i][j] + m[j][i]).rem_euclid(md);
            let oi = ord_of(qii, order);
            let mut k = 0i64;
            loop {
                // (k+1)_{q_ii} = 0 iff q_ii != 1 and ord(q_ii) | k+1
                let qint_zero = qii != 0 && (k + 1) % oi == 0;
                let factor_zero = (k * qii + qt).rem_euclid(md) == 0;
                if qint_zero || factor_zero {
                    break;
                }
                k += 1;
                assert!(k <= md, "Cartan entry does not terminate");
            }
            c[i][j] = -k;
        }
    }
    c
}

/// Reflection `rho_i` of a braiding exponent matrix (1-based `i`).
pub fn reflect_exponents(m: &[Vec<i64>], order: u32, i: usize) -> Result<Reflected> {
    let r = m.len();
    if i == 0 || i > r {
        return Err(Error::Domain(format!(
            "reflection index {i} outside 1..={r}"
        )));
    }
    let ii = i - 1;
    let c = cartan_from_exponents(m, order);
    // columns of s: s_i(alpha_j) = alpha_j - c_ij alpha_i
    let s: Vec<Vec<i64>> = (0..r)
        .map(|j| {
            let mut v = vec![0i64; r];
            v[j] += 1;
            v[ii] -= c[ii][j];
            v
        })
        .collect();
    let md = order as i64;
    let bil = |a: &[i64], b: &[i64]| -> i64 {
        let mut acc = 0i64;
        for x in 0..r {
            for y in 0..r {
                acc += a[x] * m[x][y] * b[y];
            }
        }
        acc.rem_euclid(md)
    };
    let exps: Vec<Vec<i64>> = (0..r)
        .map(|k| (0..r).map(|j| bil(&s[k], &s[j])).collect())
        .collect();
    let recognized = recognize(&exps, order);
    Ok(Reflected {
        exponents: exps,
        recognized,
    })
}

/// Identify the diagram of an exponent matrix with some `A(r, q^{+-1}, J)`.
pub fn recognize(m: &[Vec<i64>], order: u32) -> Option<(Vec<usize>, bool)> {
    let r = m.len();
    let md = order as i64;
    let n = md / 2;
    let key = DiagramKey::from_exponents(m, order);
    let odd: Vec<usize> = (0..r)
        .filter(|&i| key.vertices[i] == n)
        .map(|i| i + 1)
        .collect();
    let data = SuperAData::build(r, &odd, order).ok()?;
    let base = data.diagram_key();
    if base == key {
        return Some((odd, false));
    }
    let inv = DiagramKey {
        vertices: base.vertices.iter().map(|x| (-x).rem_euclid(md)).collect(),
        edges: base
            .edges
            .iter()
            .map(|row| row.iter().map(|x| (-x).rem_euclid(md)).collect())
            .collect(),
    };
    (inv == key).then_some((odd, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_diagrams() {
        assert_eq!(
            SuperAData::build(2, &[1, 2], 4).unwrap().diagram(),
            "(-1) --q-- (-1)"
        );
        assert_eq!(
            SuperAData::build(2, &[1], 6).unwrap().diagram(),
            "(-1) --q^-1-- (q)"
        );
        assert_eq!(
            SuperAData::build(3, &[2], 4).unwrap().diagram(),
            "(q^-1) --q-- (-1) --q^-1-- (q)"
        );
    }

    #[test]
    fn validation_errors_are_distinct() {
        assert_eq!(SuperAData::build(1, &[1], 4), Err(Error::InvalidRank(1)));
        assert!(matches!(
            SuperAData::build(2, &[], 4),
            Err(Error::InvalidOddSet(_))
        ));
        assert_eq!(SuperAData::build(2, &[1], 5), Err(Error::InvalidOrder(5)));
        assert_eq!(SuperAData::build(2, &[1], 2), Err(Error::InvalidOrder(2)));
    }
}
