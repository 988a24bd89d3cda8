//! The rank-2 quantum group with all vertices odd, as operators on weight modules.
//!
//! Conventions: `u = [[n, 1], [0, n]]`, `q_ij = q^{u_ij}`,
//! `x21 = x2 x1 - x1 x2`, `y12 = y1 y2 - q y2 y1` and
//! `y12^(k) = y12^k / ((1 - q)^k [k]_q!)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{LinAlg, Mat, MatOps};
use crate::repmod::WeightModule;
use crate::scalar::{gauss_binom, Field, LaurentInt, RatFuncQ, SymExp};

/// A `Lambda`-weight `(w1, w2)`; coordinates may involve `n = N/2`.
pub type Weight = [SymExp; 2];

/// Generators of the rank-2 algebra besides the group-likes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    X1,
    X2,
    Y1,
    Y2,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::X1, Gen::X2, Gen::Y1, Gen::Y2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn weight_shift(self) -> [i64; 2] {
        match self {
            Gen::X1 => [1, 0],
            Gen::X2 => [0, 1],
            Gen::Y1 => [-1, 0],
            Gen::Y2 => [0, -1],
        }
    }

    pub fn degree_shift(self) -> i64 {
        match self {
            Gen::X1 | Gen::X2 => 1,
            Gen::Y1 | Gen::Y2 => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::X1 => "x1",
            Gen::X2 => "x2",
            Gen::Y1 => "y1",
            Gen::Y2 => "y2",
        }
    }
}

pub fn half() -> SymExp {
    SymExp::half()
}

/// Exponent matrix `u` of the braiding.
pub fn u_matrix() -> [[SymExp; 2]; 2] {
    [[half(), SymExp::constant(1)], [SymExp::ZERO, half()]]
}

/// `a^T u b`.
pub fn u_form(a: &Weight, b: &Weight) -> SymExp {
    let u = u_matrix();
    let mut acc = SymExp::ZERO;
    for i in 0..2 {
        for j in 0..2 {
            acc = acc + a[i] * u[i][j] * b[j];
        }
    }
    acc
}

pub fn weight_add(a: &Weight, b: &Weight) -> Weight {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn weight_neg(a: &Weight) -> Weight {
    [-a[0], -a[1]]
}

pub fn weight_const(a: i64, b: i64) -> Weight {
    [SymExp::constant(a), SymExp::constant(b)]
}

/// Group-like element `kappa_1^{e1} kappa_2^{e2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupLike {
    pub exps: [SymExp; 2],
}

impl GroupLike {
    pub fn identity() -> Self {
        GroupLike {
            exps: [SymExp::ZERO; 2],
        }
    }

    /// `kappa_a` (1-based).
    pub fn kappa(a: usize) -> Self {
        let mut exps = [SymExp::ZERO; 2];
        exps[a - 1] = SymExp::constant(1);
        GroupLike { exps }
    }

    /// `gamma_1 = kappa_1^n kappa_2`, `gamma_2 = kappa_2^n`.
    pub fn gamma(i: usize) -> Self {
        match i {
            1 => GroupLike {
                exps: [half(), SymExp::constant(1)],
            },
            2 => GroupLike {
                exps: [SymExp::ZERO, half()],
            },
            _ => panic!("gamma index {i} out of range"),
        }
    }

    /// `gamma_bar_1 = kappa_1^n`, `gamma_bar_2 = kappa_1 kappa_2^n`.
    pub fn gamma_bar(i: usize) -> Self {
        match i {
            1 => GroupLike {
                exps: [half(), SymExp::ZERO],
            },
            2 => GroupLike {
                exps: [SymExp::constant(1), half()],
            },
            _ => panic!("gamma_bar index {i} out of range"),
        }
    }

    /// Pivotal element `nu = kappa_1^n kappa_2^n`.
    pub fn nu() -> Self {
        GroupLike {
            exps: [half(), half()],
        }
    }

    /// `gamma_1^{w1} gamma_2^{w2}`, acting on weight `b` by `q^{w^T u b}`.
    pub fn of_weight(w: &Weight) -> Self {
        GroupLike {
            exps: [half() * w[0], w[0] + half() * w[1]],
        }
    }

    pub fn inverse(&self) -> Self {
        GroupLike {
            exps: [-self.exps[0], -self.exps[1]],
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        GroupLike {
            exps: [self.exps[0] + o.exps[0], self.exps[1] + o.exps[1]],
        }
    }

    /// Exponent of `q` by which this element acts on weight `w`.
    pub fn exponent_on(&self, w: &Weight) -> SymExp {
        self.exps[0] * w[0] + self.exps[1] * w[1]
    }
}

/// `y2^{b2} y12^{(b12)} y1^{b1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YMono {
    pub b2: u8,
    pub b12: u32,
    pub b1: u8,
}

impl YMono {
    pub fn new(b2: u8, b12: u32, b1: u8) -> Self {
        YMono { b2, b12, b1 }
    }

    pub fn one() -> Self {
        Self::new(0, 0, 0)
    }

    /// All monomials with `b12 < order`.
    pub fn all(order: u32) -> Vec<Self> {
        let mut v = Vec::new();
        for b2 in 0..2 {
            for b12 in 0..order {
                for b1 in 0..2 {
                    v.push(Self::new(b2, b12, b1));
                }
            }
        }
        v
    }

    /// `Z^2`-degree `(b1 + b12, b2 + b12)`.
    pub fn degree(&self) -> [u32; 2] {
        [self.b1 as u32 + self.b12, self.b2 as u32 + self.b12]
    }

    fn check(&self) -> Result<()> {
        if self.b1 > 1 || self.b2 > 1 {
            return Err(Error::UnsupportedMonomial(format!("{self:?}")));
        }
        Ok(())
    }
}

/// `x1^{a1} x21^{a21} x2^{a2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct XMono {
    pub a1: u8,
    pub a21: u32,
    pub a2: u8,
}

impl XMono {
    pub fn new(a1: u8, a21: u32, a2: u8) -> Self {
        XMono { a1, a21, a2 }
    }

    pub fn one() -> Self {
        Self::new(0, 0, 0)
    }

    pub fn all(order: u32) -> Vec<Self> {
        let mut v = Vec::new();
        for a1 in 0..2 {
            for a21 in 0..order {
                for a2 in 0..2 {
                    v.push(Self::new(a1, a21, a2));
                }
            }
        }
        v
    }

    pub fn degree(&self) -> [u32; 2] {
        [self.a1 as u32 + self.a21, self.a2 as u32 + self.a21]
    }

    /// The monomial paired to `y` by the dual-basis property.
    pub fn dual_of(y: &YMono) -> Self {
        XMono::new(y.b1, y.b12, y.b2)
    }

    fn check(&self) -> Result<()> {
        if self.a1 > 1 || self.a2 > 1 {
            return Err(Error::UnsupportedMonomial(format!("{self:?}")));
        }
        Ok(())
    }
}

/// PBW basis element `x1^{a1} x21^{a21} x2^{a2} kappa^k y2^{b2} y12^{(b12)} y1^{b1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PbwMonomial {
    pub x: XMono,
    pub kappa: GroupLike,
    pub y: YMono,
}

impl PbwMonomial {
    pub fn from_y(y: YMono) -> Self {
        PbwMonomial {
            x: XMono::one(),
            kappa: GroupLike::identity(),
            y,
        }
    }

    pub fn from_x(x: XMono) -> Self {
        PbwMonomial {
            x,
            kappa: GroupLike::identity(),
            y: YMono::one(),
        }
    }

    pub fn from_kappa(k: GroupLike) -> Self {
        PbwMonomial {
            x: XMono::one(),
            kappa: k,
            y: YMono::one(),
        }
    }
}

/// Formal sum of `coefficient * left (x) right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidedTensorSum<C, M> {
    pub terms: Vec<(C, M, M)>,
}

impl<C: Clone + PartialEq, M: Ord + Clone> BraidedTensorSum<C, M> {
    pub fn sorted(mut self) -> Self
    where
        C: Ord,
    {
        self.terms.sort();
        self
    }
}

/// Braided coproduct of a `y`-monomial, from the four closed formulas.
pub fn coproduct_neg(y: YMono) -> Result<BraidedTensorSum<i64, YMono>> {
    y.check()?;
    let k = y.b12;
    let sign = |e: u32| if e.is_multiple_of(2) { 1 } else { -1 };
    let m = YMono::new;
    let mut t = Vec::new();
    match (y.b2, y.b1) {
        (0, 0) => {
            for i in 0..=k {
                t.push((1, m(0, i, 0), m(0, k - i, 0)));
            }
            for i in 0..k {
                t.push((1, m(0, i, 1), m(1, k - i - 1, 0)));
            }
        }
        (0, 1) => {
            for i in 0..=k {
                t.push((1, m(0, i, 0), m(0, k - i, 1)));
                t.push((sign(k - i), m(0, i, 1), m(0, k - i, 0)));
            }
            for i in 0..k {
                t.push((1, m(0, i, 1), m(1, k - i - 1, 1)));
            }
        }
        (1, 0) => {
            for i in 0..=k {
                t.push((1, m(1, i, 0), m(0, k - i, 0)));
                t.push((sign(i), m(0, i, 0), m(1, k - i, 0)));
            }
            for i in 0..k {
                t.push((1, m(1, i, 1), m(1, k - i - 1, 0)));
            }
        }
        _ => {
            for i in 0..=k {
                t.push((sign(k - i), m(1, i, 1), m(0, k - i, 0)));
                t.push((1, m(1, i, 0), m(0, k - i, 1)));
                t.push((sign(k), m(0, i, 1), m(1, k - i, 0)));
                t.push((sign(i), m(0, i, 0), m(1, k - i, 1)));
            }
            for i in 0..k {
                t.push((1, m(1, i, 1), m(1, k - i - 1, 1)));
            }
        }
    }
    Ok(BraidedTensorSum { terms: t })
}

/// Evaluation pairing of PBW monomials: the two bases are dual.
pub fn pairing(y: &YMono, x: &XMono) -> i64 {
    i64::from(x.a1 == y.b1 && x.a21 == y.b12 && x.a2 == y.b2)
}

/// Word in the letters `1` and `2`.
pub type Word = Vec<u8>;

fn q_letter(a: u8, b: u8) -> LaurentInt {
    // q_11 = q_22 = -1, q_12 = q, q_21 = 1
    match (a, b) {
        (1, 1) | (2, 2) => LaurentInt::from_int(-1),
        (1, 2) => LaurentInt::q_pow(1),
        _ => LaurentInt::one(),
    }
}

fn push_words<C: Clone>(
    acc: Vec<(C, Word)>,
    factor: &[(LaurentInt, Word)],
    mul: impl Fn(&C, &LaurentInt) -> C,
) -> Vec<(C, Word)> {
    let mut out = Vec::new();
    for (c, w) in &acc {
        for (d, f) in factor {
            let mut nw = w.clone();
            nw.extend_from_slice(f);
            out.push((mul(c, d), nw));
        }
    }
    out
}

fn collect_words<C>(
    terms: Vec<(C, Word)>,
    add: impl Fn(&C, &C) -> C,
    is_zero: impl Fn(&C) -> bool,
) -> Vec<(C, Word)> {
    let mut map: HashMap<Word, C> = HashMap::new();
    let mut order = Vec::new();
    for (c, w) in terms {
        match map.get_mut(&w) {
            Some(e) => *e = add(e, &c),
            None => {
                order.push(w.clone());
                map.insert(w, c);
            }
        }
    }
    order
        .into_iter()
        .filter_map(|w| {
            let c = map.remove(&w)?;
            (!is_zero(&c)).then_some((c, w))
        })
        .collect()
}

/// Expansion of a `y`-monomial into letter words with rational coefficients.
pub fn y_word_expansion(y: &YMono) -> Vec<(RatFuncQ, Word)> {
    let y12 = [
        (LaurentInt::one(), vec![1u8, 2]),
        (LaurentInt::q_pow(1).neg(), vec![2u8, 1]),
    ];
    let mut acc: Vec<(LaurentInt, Word)> = vec![(LaurentInt::one(), Vec::new())];
    if y.b2 == 1 {
        acc = push_words(acc, &[(LaurentInt::one(), vec![2])], |a, b| a.mul(b));
    }
    for _ in 0..y.b12 {
        acc = push_words(acc, &y12, |a, b| a.mul(b));
        acc = collect_words(acc, |a, b| a.add(b), |c| c.is_zero());
    }
    if y.b1 == 1 {
        acc = push_words(acc, &[(LaurentInt::one(), vec![1])], |a, b| a.mul(b));
    }
    let one_minus_q = LaurentInt::from_terms([(0, 1), (1, -1)]);
    let mut denom = LaurentInt::one();
    for k in 1..=y.b12 {
        denom = denom.mul(&one_minus_q).mul(&crate::scalar::gauss_int(k));
    }
    let dinv = RatFuncQ::from_laurent(&denom)
        .inv()
        .expect("nonzero divided-power denominator");
    acc.into_iter()
        .map(|(c, w)| (RatFuncQ::from_laurent(&c).mul(&dinv), w))
        .collect()
}

/// Expansion of an `x`-monomial into letter words.
pub fn x_word_expansion(x: &XMono) -> Vec<(LaurentInt, Word)> {
    let x21 = [
        (LaurentInt::one(), vec![2u8, 1]),
        (LaurentInt::from_int(-1), vec![1u8, 2]),
    ];
    let mut acc: Vec<(LaurentInt, Word)> = vec![(LaurentInt::one(), Vec::new())];
    if x.a1 == 1 {
        acc = push_words(acc, &[(LaurentInt::one(), vec![1])], |a, b| a.mul(b));
    }
    for _ in 0..x.a21 {
        acc = push_words(acc, &x21, |a, b| a.mul(b));
        acc = collect_words(acc, |a, b| a.add(b), |c| c.is_zero());
    }
    if x.a2 == 1 {
        acc = push_words(acc, &[(LaurentInt::one(), vec![2])], |a, b| a.mul(b));
    }
    acc
}

/// Pairing of a `y`-word with an `x`-word by the recursion
/// `<Y, x_i X'> = <d_i Y, X'>`, where `d_i` removes one letter `i` of `Y`
/// and picks up the braiding with every later letter.
pub fn word_pairing(y: &[u8], x: &[u8]) -> LaurentInt {
    if y.len() != x.len() {
        return LaurentInt::zero();
    }
    let m = y.len();
    if m == 0 {
        return LaurentInt::one();
    }
    assert!(m < 31, "word too long for the subset recursion");
    // dp over subsets of remaining positions of y
    let full: u32 = (1u32 << m) - 1;
    let mut memo: HashMap<u32, LaurentInt> = HashMap::new();
    fn go(mask: u32, y: &[u8], x: &[u8], memo: &mut HashMap<u32, LaurentInt>) -> LaurentInt {
        if mask == 0 {
            return LaurentInt::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let used = y.len() - mask.count_ones() as usize;
        let letter = x[used];
        let mut acc = LaurentInt::zero();
        for p in 0..y.len() {
            if mask & (1 << p) == 0 || y[p] != letter {
                continue;
            }
            let mut scal = LaurentInt::one();
            for k in p + 1..y.len() {
                if mask & (1 << k) != 0 {
                    scal = scal.mul(&q_letter(letter, y[k]));
                }
            }
            let rest = go(mask & !(1 << p), y, x, memo);
            if !rest.is_zero() {
                acc = acc.add(&scal.mul(&rest));
            }
        }
        memo.insert(mask, acc.clone());
        acc
    }
    go(full, y, x, &mut memo)
}

/// All nonzero pairings `<y, X>` of a fixed `y`-word with `x`-words, by the
/// same recursion as [`word_pairing`] run once over every subset of `y`.
pub fn word_pairing_row(y: &[u8]) -> HashMap<Word, LaurentInt> {
    let m = y.len();
    assert!(m < 31, "word too long for the subset recursion");
    let mut rows: HashMap<u32, HashMap<Word, LaurentInt>> = HashMap::new();
    rows.insert(0, HashMap::from([(Vec::new(), LaurentInt::one())]));
    let mut masks: Vec<u32> = (1..(1u32 << m)).collect();
    masks.sort_by_key(|k| k.count_ones());
    for mask in masks {
        let mut row: HashMap<Word, LaurentInt> = HashMap::new();
        for p in 0..m {
            if mask & (1 << p) == 0 {
                continue;
            }
            let letter = y[p];
            let mut scal = LaurentInt::one();
            for k in p + 1..m {
                if mask & (1 << k) != 0 {
                    scal = scal.mul(&q_letter(letter, y[k]));
                }
            }
            for (rest, v) in &rows[&(mask & !(1 << p))] {
                let mut w = Vec::with_capacity(rest.len() + 1);
                w.push(letter);
                w.extend_from_slice(rest);
                let e = row.entry(w).or_insert_with(LaurentInt::zero);
                *e = e.add(&scal.mul(v));
            }
        }
        row.retain(|_, v| !v.is_zero());
        rows.insert(mask, row);
    }
    rows.remove(&((1u32 << m) - 1))
        .expect("row of the full subset")
}

/// The functional `X -> <ys, X>` on `x`-words, for a combination of `y`-words.
pub fn pairing_functional(ys: &[(RatFuncQ, Word)]) -> HashMap<Word, RatFuncQ> {
    let mut out: HashMap<Word, RatFuncQ> = HashMap::new();
    for (c, w) in ys {
        for (x, v) in word_pairing_row(w) {
            let e = out.entry(x).or_insert_with(RatFuncQ::zero);
            *e = e.add(&c.mul(&RatFuncQ::from_laurent(&v)));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Pairing of linear combinations of words.
pub fn pairing_of_expansions(ys: &[(RatFuncQ, Word)], xs: &[(LaurentInt, Word)]) -> RatFuncQ {
    let mut acc = RatFuncQ::zero();
    for (cy, wy) in ys {
        for (cx, wx) in xs {
            let p = word_pairing(wy, wx);
            if p.is_zero() {
                continue;
            }
            acc = acc.add(&cy.mul(&RatFuncQ::from_laurent(&cx.mul(&p))));
        }
    }
    acc
}

/// Pairing computed from the letter recursion; must agree with [`pairing`].
pub fn pairing_by_words(y: &YMono, x: &XMono) -> RatFuncQ {
    pairing_of_expansions(&y_word_expansion(y), &x_word_expansion(x))
}

fn concat<C: Clone>(a: &[(C, Word)], b: &[(C, Word)], mul: impl Fn(&C, &C) -> C) -> Vec<(C, Word)> {
    let mut out = Vec::new();
    for (ca, wa) in a {
        for (cb, wb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            out.push((mul(ca, cb), w));
        }
    }
    out
}

/// Braided coproduct of an `x`-monomial in the PBW basis, obtained from the
/// pairing: the coefficient of `X_a (x) X_b` is `<Y_a Y_b, x>`.
pub fn coproduct_pos(x: XMono) -> Result<BraidedTensorSum<RatFuncQ, XMono>> {
    x.check()?;
    let xs = x_word_expansion(&x);
    let deg = x.degree();
    let bound = x.a21 + 1;
    let mut terms = Vec::new();
    for ya in YMono::all(bound) {
        let da = ya.degree();
        if da[0] > deg[0] || da[1] > deg[1] {
            continue;
        }
        for yb in YMono::all(bound) {
            let db = yb.degree();
            if da[0] + db[0] != deg[0] || da[1] + db[1] != deg[1] {
                continue;
            }
            let prod = concat(&y_word_expansion(&ya), &y_word_expansion(&yb), |a, b| {
                a.mul(b)
            });
            let c = pairing_of_expansions(&prod, &xs);
            if !c.is_zero() {
                terms.push((c, XMono::dual_of(&ya), XMono::dual_of(&yb)));
            }
        }
    }
    Ok(BraidedTensorSum { terms })
}

/// The closed formula for the coproduct of `x21^k`.
pub fn coproduct_x21_power_formula(k: u32) -> Result<Vec<(LaurentInt, Word, Word)>> {
    let mut out = Vec::new();
    let x21 = |e: u32| -> Vec<(LaurentInt, Word)> { x_word_expansion(&XMono::new(0, e, 0)) };
    for i in 0..=k {
        let c = gauss_binom(k, i)?;
        for (a, wa) in x21(i) {
            for (b, wb) in x21(k - i) {
                out.push((c.mul(&a).mul(&b), wa.clone(), wb));
            }
        }
    }
    for i in 0..k {
        let c = gauss_binom(k, i)?.mul(&LaurentInt::from_terms([(0, 1), (i64::from(k - i), -1)]));
        for (a, mut wa) in x21(i) {
            wa.push(1);
            for (b, wb) in x21(k - i - 1) {
                let mut w = vec![2u8];
                w.extend_from_slice(&wb);
                out.push((c.mul(&a).mul(&b), wa.clone(), w));
            }
        }
    }
    Ok(out)
}

/// Operator matrices of algebra elements on a fixed module.
pub struct Rank2Ops<'a, F: Field> {
    module: &'a WeightModule<F>,
}

impl<'a, F: Field> Rank2Ops<'a, F> {
    pub fn new(module: &'a WeightModule<F>) -> Self {
        Rank2Ops { module }
    }

    fn ring(&self) -> &F {
        self.module.ring()
    }

    pub fn gen(&self, g: Gen) -> &Mat<F::Elem> {
        self.module.action(g)
    }

    /// `x21 = x2 x1 - x1 x2`.
    pub fn x21(&self) -> Mat<F::Elem> {
        let r = self.ring();
        let (x1, x2) = (self.gen(Gen::X1), self.gen(Gen::X2));
        r.mat_sub(&r.mat_mul(x2, x1), &r.mat_mul(x1, x2))
    }

    /// `y12 = y1 y2 - q y2 y1`.
    pub fn y12(&self) -> Mat<F::Elem> {
        let r = self.ring();
        let (y1, y2) = (self.gen(Gen::Y1), self.gen(Gen::Y2));
        r.mat_sub(
            &r.mat_mul(y1, y2),
            &r.mat_scale(&r.mat_mul(y2, y1), &r.q_pow(1)),
        )
    }

    /// Normalizing factor `(1 - q)^k [k]_q!`.
    pub fn divided_denominator(&self, k: u32) -> Result<F::Elem> {
        let r = self.ring();
        let mut d = LaurentInt::one();
        let one_minus_q = LaurentInt::from_terms([(0, 1), (1, -1)]);
        for j in 1..=k {
            d = d.mul(&one_minus_q).mul(&crate::scalar::gauss_int(j));
        }
        let e = r.from_laurent(&d);
        if r.is_zero(&e) {
            return Err(Error::Domain(format!(
                "divided power y12^({k}) is undefined at this root"
            )));
        }
        Ok(e)
    }

    /// Divided powers `y12^(k)` for `k = 0, 1, ...` until they vanish on the module
    /// or `k` reaches the order of `q`.
    pub fn y12_divided_powers(&self) -> Result<Vec<Mat<F::Elem>>> {
        let r = self.ring();
        let y12 = self.y12();
        let dim = self.module.dim();
        let limit = r.order().unwrap_or(u32::MAX);
        let mut plain = Mat::identity(r, dim);
        let mut out = vec![plain.clone()];
        let mut k = 1u32;
        while k < limit {
            plain = r.mat_mul(&y12, &plain);
            if r.mat_is_zero(&plain) {
                break;
            }
            let d = self.divided_denominator(k)?;
            let dinv = r.inv(&d).expect("nonzero denominator");
            out.push(r.mat_scale(&plain, &dinv));
            k += 1;
        }
        Ok(out)
    }

    pub fn group(&self, g: &GroupLike) -> Mat<F::Elem> {
        self.module.group_action(g)
    }

    pub fn y_mono(&self, y: &YMono, divided: &[Mat<F::Elem>]) -> Mat<F::Elem> {
        let r = self.ring();
        let dim = self.module.dim();
        let Some(mid) = divided.get(y.b12 as usize) else {
            return Mat::zeros(r, dim, dim);
        };
        let mut m = mid.clone();
        if y.b1 == 1 {
            m = r.mat_mul(&m, self.gen(Gen::Y1));
        }
        if y.b2 == 1 {
            m = r.mat_mul(self.gen(Gen::Y2), &m);
        }
        m
    }

    pub fn x_mono(&self, x: &XMono, x21: &Mat<F::Elem>) -> Mat<F::Elem> {
        let r = self.ring();
        let mut m = r.mat_pow(x21, x.a21);
        if x.a2 == 1 {
            m = r.mat_mul(&m, self.gen(Gen::X2));
        }
        if x.a1 == 1 {
            m = r.mat_mul(self.gen(Gen::X1), &m);
        }
        m
    }

    /// Matrix of a PBW monomial.
    pub fn act(&self, mono: &PbwMonomial) -> Result<Mat<F::Elem>> {
        mono.x.check()?;
        mono.y.check()?;
        let r = self.ring();
        let divided = self.y12_divided_powers()?;
        let y = self.y_mono(&mono.y, &divided);
        let k = self.group(&mono.kappa);
        let x = self.x_mono(&mono.x, &self.x21());
        Ok(r.mat_mul(&x, &r.mat_mul(&k, &y)))
    }

    /// Apply a PBW monomial to a vector; the vector must be weight-homogeneous
    /// when the monomial involves a group-like factor.
    pub fn act_on(&self, mono: &PbwMonomial, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let r = self.ring();
        if mono.kappa != GroupLike::identity() {
            let support: Vec<usize> = (0..v.len()).filter(|&i| !r.is_zero(&v[i])).collect();
            if let Some(&first) = support.first() {
                let w0 = self.module.weight(first);
                if support.iter().any(|&i| self.module.weight(i) != w0) {
                    return Err(Error::ModuleIntegrity(
                        "vector is not weight-homogeneous".into(),
                    ));
                }
            }
        }
        Ok(r.mat_vec(&self.act(mono)?, v))
    }

    /// `S(x_i) = -gamma_i^{-1} x_i`.
    pub fn antipode_x(&self, i: usize) -> Mat<F::Elem> {
        let r = self.ring();
        let g = self.group(&GroupLike::gamma(i).inverse());
        let x = self.gen(if i == 1 { Gen::X1 } else { Gen::X2 });
        r.mat_scale(&r.mat_mul(&g, x), &r.from_int(-1))
    }

    /// `S(y_i) = -gamma_bar_i^{-1} y_i`.
    pub fn antipode_y(&self, i: usize) -> Mat<F::Elem> {
        let r = self.ring();
        let g = self.group(&GroupLike::gamma_bar(i).inverse());
        let y = self.gen(if i == 1 { Gen::Y1 } else { Gen::Y2 });
        r.mat_scale(&r.mat_mul(&g, y), &r.from_int(-1))
    }

    /// `S(x_alpha)` for `x_alpha = x1^{a1} x21^{a21} x2^{a2}`.
    pub fn antipode_x_mono(&self, x: &XMono) -> Mat<F::Elem> {
        let r = self.ring();
        let s1 = self.antipode_x(1);
        let s2 = self.antipode_x(2);
        let s21 = r.mat_sub(&r.mat_mul(&s1, &s2), &r.mat_mul(&s2, &s1));
        let mut m = r.mat_pow(&s21, x.a21);
        if x.a1 == 1 {
            m = r.mat_mul(&m, &s1);
        }
        if x.a2 == 1 {
            m = r.mat_mul(&s2, &m);
        }
        m
    }
}

/// Nonzero terms `(y_alpha, x_alpha)` of the universal R-matrix on the given modules.
pub(crate) struct RTerms<E> {
    /// Matrix of `y_alpha` on the first module.
    pub y: Vec<Mat<E>>,
    /// Matrix of `x_alpha` on the second module.
    pub x: Vec<Mat<E>>,
}

pub(crate) fn r_terms<F: Field>(
    v: &WeightModule<F>,
    w: &WeightModule<F>,
) -> Result<RTerms<F::Elem>> {
    let r = v.ring();
    let ov = Rank2Ops::new(v);
    let ow = Rank2Ops::new(w);
    let divided = ov.y12_divided_powers()?;
    let x21 = ow.x21();
    let mut ys = Vec::new();
    let mut xs = Vec::new();
    for b12 in 0..divided.len() as u32 {
        for b2 in 0..2u8 {
            for b1 in 0..2u8 {
                let ym = YMono::new(b2, b12, b1);
                let ymat = ov.y_mono(&ym, &divided);
                if r.mat_is_zero(&ymat) {
                    continue;
                }
                let xmat = ow.x_mono(&XMono::dual_of(&ym), &x21);
                if r.mat_is_zero(&xmat) {
                    continue;
                }
                ys.push(ymat);
                xs.push(xmat);
            }
        }
    }
    Ok(RTerms { y: ys, x: xs })
}

/// Braiding `Psi_{V,W}: V (x) W -> W (x) V`,
/// `v (x) w -> sum_alpha x_alpha gamma_{wt(y_alpha v)} w (x) y_alpha v`.
///
/// Column `a * dim W + b` is the input `v_a (x) w_b`; row `c * dim V + d` is `w_c (x) v_d`.
pub fn r_matrix_braiding<F: Field>(
    v: &WeightModule<F>,
    w: &WeightModule<F>,
) -> Result<Mat<F::Elem>> {
    let r = v.ring().clone();
    let (dv, dw) = (v.dim(), w.dim());
    let terms = r_terms(v, w)?;
    let mut out = Mat::zeros(&r, dw * dv, dv * dw);
    for (ymat, xmat) in terms.y.iter().zip(&terms.x) {
        for a in 0..dv {
            for d in 0..dv {
                let yc = ymat.get(d, a);
                if r.is_zero(yc) {
                    continue;
                }
                for b in 0..dw {
                    let s = r.q_sym(&u_form(v.weight(d), w.weight(b)));
                    let ys = r.mul(yc, &s);
                    for c in 0..dw {
                        let xc = xmat.get(c, b);
                        if r.is_zero(xc) {
                            continue;
                        }
                        let (row, col) = (c * dv + d, a * dw + b);
                        let cur = out.get(row, col).clone();
                        out.set(row, col, r.add(&cur, &r.mul(xc, &ys)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Inverse braiding `W (x) V -> V (x) W` by exact inversion.
pub fn r_matrix_braiding_inverse<F: Field>(
    v: &WeightModule<F>,
    w: &WeightModule<F>,
) -> Result<Mat<F::Elem>> {
    let psi = r_matrix_braiding(v, w)?;
    v.ring()
        .inverse(&psi)
        .ok_or_else(|| Error::Consistency("braiding is not invertible".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_pairings() {
        assert_eq!(
            pairing_by_words(&YMono::new(0, 0, 1), &XMono::new(1, 0, 0)),
            RatFuncQ::one()
        );
        assert_eq!(
            pairing_by_words(&YMono::new(0, 1, 0), &XMono::new(0, 1, 0)),
            RatFuncQ::one()
        );
        assert!(pairing_by_words(&YMono::new(0, 1, 0), &XMono::new(1, 0, 1)).is_zero());
    }

    #[test]
    fn row_matches_pairwise() {
        let y = [1u8, 2, 2, 1, 2, 1];
        let row = word_pairing_row(&y);
        let mut xs: Vec<Word> = vec![Vec::new()];
        for _ in 0..y.len() {
            xs = xs
                .into_iter()
                .flat_map(|w| [1u8, 2].map(|l| [w.clone(), vec![l]].concat()))
                .collect();
        }
        for x in xs {
            let direct = word_pairing(&y, &x);
            assert_eq!(
                row.get(&x).cloned().unwrap_or_else(LaurentInt::zero),
                direct,
                "{x:?}"
            );
        }
    }

    #[test]
    fn x21_coproduct() {
        let d = coproduct_pos(XMono::new(0, 1, 0)).unwrap().terms;
        let one_minus_q = RatFuncQ::from_laurent(&LaurentInt::from_terms([(0, 1), (1, -1)]));
        assert!(d.contains(&(one_minus_q, XMono::new(1, 0, 0), XMono::new(0, 0, 1))));
        assert_eq!(d.len(), 3);
    }
}
