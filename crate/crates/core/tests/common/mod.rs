//! Reference data and checks shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use superqa::linalg::{Mat, MatOps};
use superqa::repmod::{GrothendieckElem, WeightModule};
use superqa::rtcat::{duality_maps, is_module_map, twist};
use superqa::scalar::{Field, LaurentInt, RatFuncField, RatFuncQ};
use superqa::uq_rank2::{
    coproduct_neg, pairing, pairing_functional, r_matrix_braiding, x_word_expansion,
    y_word_expansion, XMono, YMono,
};

pub fn rf(s: &str) -> RatFuncQ {
    RatFuncQ::from_laurent(&s.parse::<LaurentInt>().unwrap())
}

/// Dense matrix from its nonzero entries `(row, col, value)`.
pub fn sparse_golden(n: usize, entries: &[(usize, usize, &str)]) -> Mat<RatFuncQ> {
    let mut m = Mat::zeros(&RatFuncField, n, n);
    for &(i, j, v) in entries {
        m.set(i, j, rf(v));
    }
    m
}

/// Braiding of the fundamental module with itself.
pub const FUNDAMENTAL_BRAIDING: [(usize, usize, &str); 12] = [
    (0, 0, "-1"),
    (1, 1, "q^-1-1"),
    (1, 3, "-1"),
    (2, 2, "q^-1-1"),
    (2, 6, "1"),
    (3, 1, "-q^-1"),
    (4, 4, "q^-1"),
    (5, 5, "q^-1-1"),
    (5, 7, "-1"),
    (6, 2, "q^-1"),
    (7, 5, "-q^-1"),
    (8, 8, "-1"),
];

/// Braiding of the fundamental module with its dual.
pub const FUNDAMENTAL_DUAL_BRAIDING: [(usize, usize, &str); 12] = [
    (0, 0, "q"),
    (1, 3, "-q"),
    (2, 2, "q^-1-1"),
    (2, 4, "-1+q"),
    (2, 6, "-1"),
    (3, 1, "-q"),
    (4, 2, "q^-1-1"),
    (4, 4, "q"),
    (5, 7, "-1"),
    (6, 2, "-1"),
    (7, 5, "-1"),
    (8, 8, "1"),
];

/// Braiding of `W` with itself, with `(-1)^n = 1` for the symbolic even `n`.
pub const W_BRAIDING: [(usize, usize, &str); 25] = [
    (0, 0, "1"),
    (1, 1, "1+q^-1"),
    (1, 4, "-q^-1"),
    (2, 2, "2"),
    (2, 8, "-1"),
    (3, 3, "3+q^-1"),
    (3, 6, "-2"),
    (3, 9, "-2"),
    (3, 12, "q^-1"),
    (4, 1, "1"),
    (5, 5, "q^-1"),
    (6, 3, "1+q^-1"),
    (6, 9, "-1"),
    (7, 7, "1+q^-1"),
    (7, 13, "-q^-1"),
    (8, 2, "1"),
    (9, 3, "1+q^-1"),
    (9, 6, "-1"),
    (10, 10, "1"),
    (11, 11, "2"),
    (11, 14, "-1"),
    (12, 3, "1"),
    (13, 7, "1"),
    (14, 11, "1"),
    (15, 15, "1"),
];

/// `det t` for the symmetrized Cartan matrix, as `(r, odd vertices, det)`.
pub const DETERMINANTS: [(usize, &[usize], i64); 16] = [
    (2, &[1], -1),
    (2, &[1, 2], -1),
    (3, &[1], -2),
    (3, &[2], 0),
    (3, &[1, 2], -2),
    (3, &[1, 3], 0),
    (3, &[1, 2, 3], 0),
    (4, &[1], -3),
    (4, &[2], 1),
    (4, &[1, 2], -3),
    (4, &[1, 3], 1),
    (4, &[2, 3], -3),
    (4, &[1, 4], 1),
    (4, &[1, 2, 3], 1),
    (4, &[1, 3, 4], 1),
    (4, &[1, 2, 3, 4], 1),
];

/// Every nonempty set of odd vertices (1-based) of rank `r`.
pub fn all_odd_sets(r: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << r))
        .map(|mask| {
            (0..r)
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| k + 1)
                .collect()
        })
        .collect()
}

/// Reference value of the knot `10_132`.
pub const KNOT_10_132: &str = "4q^2+4q-3+10q^-2+8q^-3+2q^-4";

/// Dimension table of the simple modules, written out independently of the engine.
pub fn expected_simple_dim(i: i64, j: i64, n: i64) -> usize {
    let d = match (i, j) {
        (_, 0) => 2 * i + 1,
        (0, _) => 2 * j + 1,
        _ if i + j <= n => 4 * (i + j),
        _ => 4 * (i + j - n),
    };
    d as usize
}

/// Dimensions of `L(i, j)` at `N = 4`, row-major in `(i, j)`.
pub const N4_SIMPLE_DIMS: [usize; 16] = [1, 3, 5, 7, 3, 8, 12, 16, 5, 12, 16, 4, 7, 16, 4, 8];

/// Composition factors of `M(i, j)` by case.
pub fn expected_standard_factors(i: i64, j: i64, n: i64) -> Vec<(i64, i64)> {
    match (i, j) {
        (0, 0) => vec![(0, 0), (n - 1, 0), (0, n - 1), (0, 0)],
        (_, 0) => vec![(0, n - i), (i - 1, 0), (0, n - i - 1), (i, 0)],
        (0, _) => vec![(n - j, 0), (0, j - 1), (n - j - 1, 0), (0, j)],
        _ if i + j == n => vec![(i, j)],
        _ => vec![(n - j, n - i), (i, j)],
    }
}

pub fn label_counts(v: &[(i64, i64)]) -> BTreeMap<(i64, i64), i64> {
    let mut out = BTreeMap::new();
    for &l in v {
        *out.entry(l).or_insert(0) += 1;
    }
    out
}

pub fn g(s: &str) -> GrothendieckElem {
    s.parse().unwrap()
}

/// Graded products of simple classes at `N = 4`, checked against the
/// characters of the tensor product modules.
pub const N4_PRODUCTS: [(&str, &str, &str); 12] = [
    ("l10", "l10", "l20 + l23t"),
    ("l10", "l20", "l30 + l33t"),
    ("l10", "l30", "l00 + 2l03t + l02t^2 + l00t^8"),
    ("l20", "l20", "l00 + 2l03t + l02t^2 + l32t^3 + l00t^8"),
    ("l20", "l30", "l10 + l13t + 2l02t^3 + l01t^4 + l10t^8"),
    (
        "l30",
        "l30",
        "l20 + l23t + 2l12t^3 + 2l01t^5 + l00t^6 + l20t^8 + l23t^9",
    ),
    ("l10", "l01", "l11 + l00t^2"),
    ("l10", "l02", "l12 + l01t^2"),
    ("l10", "l03", "l13 + l02t^2"),
    ("l20", "l02", "l22 + l11t^2 + l00t^4"),
    ("l20", "l03", "l23 + 2l12t^2 + l01t^4 + l23t^8"),
    ("l30", "l03", "l33 + l22t^2 + 2l11t^4 + l00t^6 + l33t^8"),
];

/// Generation of the ungraded `N = 4` ring by the `l_{i0}` and `l_{0j}`:
/// `(symbol, left, right, correction)` with `symbol = left * right - correction` at `t = 1`.
pub const N4_GENERATORS: [(&str, &str, &str, &str); 8] = [
    ("l11", "l10", "l01", "l00"),
    ("l12", "l10", "l02", "l01"),
    ("l13", "l10", "l03", "l02"),
    ("l22", "l20", "l02", "l11 + l00"),
    ("l23", "l10", "l10", "l20"),
    ("l31", "l02", "l03", "2l01 + 2l20 + l10"),
    ("l32", "l20", "l20", "2l00 + 2l03 + l02"),
    ("l33", "l10", "l20", "l30"),
];

/// `(Psi_bc (x) 1)(1 (x) Psi_ac)(Psi_ab (x) 1) = (1 (x) Psi_ab)(Psi_ac (x) 1)(1 (x) Psi_bc)`.
pub fn yang_baxter_holds<F: Field>(
    a: &WeightModule<F>,
    b: &WeightModule<F>,
    c: &WeightModule<F>,
) -> bool {
    let r = a.ring();
    let ia = Mat::identity(r, a.dim());
    let ib = Mat::identity(r, b.dim());
    let ic = Mat::identity(r, c.dim());
    let psi_ab = r_matrix_braiding(a, b).unwrap();
    let psi_ac = r_matrix_braiding(a, c).unwrap();
    let psi_bc = r_matrix_braiding(b, c).unwrap();
    let lhs = r.mat_mul(
        &r.kron(&psi_bc, &ia),
        &r.mat_mul(&r.kron(&ib, &psi_ac), &r.kron(&psi_ab, &ic)),
    );
    let rhs = r.mat_mul(
        &r.kron(&ic, &psi_ab),
        &r.mat_mul(&r.kron(&psi_ac, &ib), &r.kron(&ia, &psi_bc)),
    );
    lhs == rhs
}

/// `theta_{a (x) b} = Psi_{b,a} Psi_{a,b} (theta_a (x) theta_b)`.
pub fn ribbon_axiom_holds<F: Field>(a: &WeightModule<F>, b: &WeightModule<F>) -> bool {
    let r = a.ring();
    let lhs = twist(&a.tensor(b)).unwrap();
    let double = r.mat_mul(
        &r_matrix_braiding(b, a).unwrap(),
        &r_matrix_braiding(a, b).unwrap(),
    );
    let rhs = r.mat_mul(&double, &r.kron(&twist(a).unwrap(), &twist(b).unwrap()));
    lhs == rhs
}

/// The four zig-zag identities, and that all evaluations and coevaluations are module maps.
pub fn zig_zags_hold<F: Field>(m: &WeightModule<F>) -> bool {
    let f = m.ring();
    let dual = m.dual();
    let maps = duality_maps(m);
    let id = Mat::identity(f, m.dim());
    let unit = WeightModule::trivial(f.clone());
    f.mat_mul(&f.kron(&id, &maps.ev), &f.kron(&maps.coev, &id)) == id
        && f.mat_mul(&f.kron(&maps.ev, &id), &f.kron(&id, &maps.coev)) == id
        && f.mat_mul(&f.kron(&maps.ev_right, &id), &f.kron(&id, &maps.coev_right)) == id
        && f.mat_mul(&f.kron(&id, &maps.ev_right), &f.kron(&maps.coev_right, &id)) == id
        && is_module_map(&maps.ev, &dual.tensor(m), &unit)
        && is_module_map(&maps.coev, &unit, &m.tensor(&dual))
        && is_module_map(&maps.ev_right, &m.tensor(&dual), &unit)
        && is_module_map(&maps.coev_right, &unit, &dual.tensor(m))
}

fn one_if(b: i64) -> RatFuncQ {
    RatFuncQ::from_laurent(&LaurentInt::from_int(b))
}

/// Checks `<y, x' x''> = sum c <y_(1), x''> <y_(2), x'>` over the closed-form
/// coproduct of every `y` with `b12 < order`; returns the failing triples.
pub fn pairing_duality_failures(order: u32) -> Vec<String> {
    let mut failures = Vec::new();
    for y in YMono::all(order) {
        let functional = pairing_functional(&y_word_expansion(&y));
        let delta = coproduct_neg(y).unwrap().terms;
        let deg = y.degree();
        for x1 in XMono::all(order) {
            for x2 in XMono::all(order) {
                let (a, b) = (x1.degree(), x2.degree());
                if a[0] + b[0] != deg[0] || a[1] + b[1] != deg[1] {
                    continue;
                }
                let mut lhs = RatFuncQ::zero();
                for (c1, w1) in x_word_expansion(&x1) {
                    for (c2, w2) in x_word_expansion(&x2) {
                        let mut w = w1.clone();
                        w.extend(w2);
                        if let Some(p) = functional.get(&w) {
                            lhs = lhs.add(&p.mul(&RatFuncQ::from_laurent(&c1.mul(&c2))));
                        }
                    }
                }
                let rhs: i64 = delta
                    .iter()
                    .map(|(c, y1, y2)| c * pairing(y1, &x2) * pairing(y2, &x1))
                    .sum();
                if lhs != one_if(rhs) {
                    failures.push(format!("{y:?} on {x1:?} {x2:?}"));
                }
            }
        }
    }
    failures
}
