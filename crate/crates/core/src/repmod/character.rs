//! Graded characters, composition factors and the graded Grothendieck ring.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::json;

use super::{simple_module, WeightModule};
use crate::error::{Error, Result};
use crate::scalar::{CycloField, Ring, SymExp};
use crate::uq_rank2::{weight_add, weight_const, Weight};

/// How weight coordinates are reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightCanon {
    /// Symbolic `c0 + c1 n` with `c1` taken mod 2.
    Symbolic,
    /// Integers mod `N`.
    Modular(u32),
}

impl WeightCanon {
    pub fn of_ring<R: Ring>(r: &R) -> Self {
        match r.order() {
            Some(n) => WeightCanon::Modular(n),
            None => WeightCanon::Symbolic,
        }
    }

    pub fn exp(&self, e: &SymExp) -> SymExp {
        match *self {
            WeightCanon::Symbolic => SymExp::new([e.coeff(0), e.coeff(1).rem_euclid(2), 0, 0]),
            WeightCanon::Modular(n) => SymExp::constant(e.eval_mod(i64::from(n / 2), i64::from(n))),
        }
    }

    pub fn weight(&self, w: &Weight) -> Weight {
        [self.exp(&w[0]), self.exp(&w[1])]
    }
}

/// Census of `(weight, depth) -> multiplicity`, where depth is minus the `Z`-degree,
/// i.e. the exponent of the grading variable `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    canon: WeightCanon,
    terms: BTreeMap<(Weight, i64), i64>,
}

impl GradedCharacter {
    pub fn new(canon: WeightCanon) -> Self {
        GradedCharacter {
            canon,
            terms: BTreeMap::new(),
        }
    }

    /// The unit character `1`.
    pub fn unit(canon: WeightCanon) -> Self {
        let mut c = Self::new(canon);
        c.add_term(weight_const(0, 0), 0, 1);
        c
    }

    pub fn canon(&self) -> WeightCanon {
        self.canon
    }

    pub fn add_term(&mut self, w: Weight, depth: i64, mult: i64) {
        let key = (self.canon.weight(&w), depth);
        let e = self.terms.entry(key).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64, i64)> {
        self.terms.iter().map(|((w, d), m)| (w, *d, *m))
    }

    pub fn mult(&self, w: &Weight, depth: i64) -> i64 {
        self.terms
            .get(&(self.canon.weight(w), depth))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total multiplicity, the dimension of the module.
    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn min_depth(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.1).min()
    }

    pub fn shifted(&self, depth: i64) -> Self {
        let mut c = Self::new(self.canon);
        for (w, d, m) in self.terms() {
            c.add_term(*w, d + depth, m);
        }
        c
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, 1)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, -1)
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut c = Self::new(self.canon);
        for (w, d, m) in self.terms() {
            c.add_term(*w, d, m * k);
        }
        c
    }

    fn combine(&self, o: &Self, sign: i64) -> Self {
        assert_eq!(
            self.canon, o.canon,
            "characters over different weight lattices"
        );
        let mut c = self.clone();
        for (w, d, m) in o.terms() {
            c.add_term(*w, d, sign * m);
        }
        c
    }

    /// Product in `Z Lambda [t, t^{-1}]`.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(
            self.canon, o.canon,
            "characters over different weight lattices"
        );
        let mut c = Self::new(self.canon);
        for (wa, da, ma) in self.terms() {
            for (wb, db, mb) in o.terms() {
                c.add_term(weight_add(wa, wb), da + db, ma * mb);
            }
        }
        c
    }

    /// Multiplicities summed per depth.
    pub fn depth_census(&self) -> BTreeMap<i64, i64> {
        let mut out = BTreeMap::new();
        for (_, d, m) in self.terms() {
            *out.entry(d).or_insert(0) += m;
        }
        out
    }

    /// True if the depth census reads the same from both ends.
    pub fn is_palindromic(&self) -> bool {
        let census = self.depth_census();
        let (Some(lo), Some(hi)) = (census.keys().next(), census.keys().last()) else {
            return true;
        };
        census
            .iter()
            .all(|(d, m)| census.get(&(lo + hi - d)) == Some(m))
    }

    /// Records `{w1, w2, zdeg, mult}` with the true `Z`-degree.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<_> = self
            .terms()
            .map(|(w, d, m)| json!({"w1": w[0].to_string(), "w2": w[1].to_string(), "zdeg": -d, "mult": m}))
            .collect();
        serde_json::Value::Array(items)
    }
}

fn balanced(e: &SymExp, canon: WeightCanon) -> String {
    match canon {
        WeightCanon::Modular(n) => {
            let n = i64::from(n);
            let v = e.coeff(0);
            let v = if v > n / 2 { v - n } else { v };
            v.to_string()
        }
        WeightCanon::Symbolic => e.to_string(),
    }
}

fn power(base: &str, e: &str) -> Option<String> {
    match e {
        "0" => None,
        "1" => Some(base.to_string()),
        _ if e.chars().all(|c| c.is_ascii_digit() || c == '-') => Some(format!("{base}^{e}")),
        _ => Some(format!("{base}^({e})")),
    }
}

impl fmt::Display for GradedCharacter {
    /// Rendered as a polynomial in `g1, g2, t`, lowest depth first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut items: Vec<_> = self.terms().collect();
        items.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(a.0)));
        let mut first = true;
        for (w, d, m) in items {
            let mut factors: Vec<String> = Vec::new();
            factors.extend(power("g1", &balanced(&w[0], self.canon)));
            factors.extend(power("g2", &balanced(&w[1], self.canon)));
            factors.extend(power("t", &d.to_string()));
            let mono = factors.join(" ");
            let (sign, abs) = if m < 0 { ("-", -m) } else { ("+", m) };
            if first {
                if m < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (abs, mono.is_empty()) {
                (1, true) => write!(f, "1")?,
                (1, false) => write!(f, "{mono}")?,
                (k, true) => write!(f, "{k}")?,
                (k, false) => write!(f, "{k} {mono}")?,
            }
        }
        Ok(())
    }
}

/// Closed-form graded character of `L(i, j)`.
///
/// For `i, j != 0` the sum over odd depths runs up to `2k - 1`, which makes the
/// total mass equal the dimension `4k`.
pub fn closed_form_character(i: i64, j: i64, order: u32) -> GradedCharacter {
    let canon = WeightCanon::Modular(order);
    let n = i64::from(order);
    let mut c = GradedCharacter::new(canon);
    let w = |a: i64, b: i64| weight_const(a, b);
    match (i, j) {
        (_, 0) => {
            for a in 0..=i {
                c.add_term(w(i - a, -a), 2 * a, 1);
            }
            for a in 0..i {
                c.add_term(w(i - a, -a - 1), 2 * a + 1, 1);
            }
        }
        (0, _) => {
            for a in 0..=j {
                c.add_term(w(-a, j - a), 2 * a, 1);
            }
            for a in 0..j {
                c.add_term(w(-a - 1, j - a), 2 * a + 1, 1);
            }
        }
        _ => {
            let k = (i + j - 1).rem_euclid(n) + 1;
            c.add_term(w(i, j), 0, 1);
            for a in 1..k {
                c.add_term(w(i - a, j - a), 2 * a, 2);
            }
            for a in 1..=k {
                c.add_term(w(i - a + 1, j - a), 2 * a - 1, 1);
                c.add_term(w(i - a, j - a + 1), 2 * a - 1, 1);
            }
            c.add_term(w(-j, -i), 2 * k, 1);
        }
    }
    c
}

/// Multiset of simple labels `(i, j)` with depth shifts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompositionList {
    factors: BTreeMap<(i64, i64, i64), i64>,
}

impl CompositionList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, i: i64, j: i64, depth: i64, mult: i64) {
        let e = self.factors.entry((i, j, depth)).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.factors.remove(&(i, j, depth));
        }
    }

    /// Entries `((i, j, depth), multiplicity)`.
    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64, i64), i64)> + '_ {
        self.factors.iter().map(|(k, v)| (*k, *v))
    }

    /// Total number of factors with multiplicity.
    pub fn len(&self) -> i64 {
        self.factors.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Labels with multiplicity, shifts forgotten.
    pub fn labels(&self) -> BTreeMap<(i64, i64), i64> {
        let mut out = BTreeMap::new();
        for ((i, j, _), m) in self.entries() {
            *out.entry((i, j)).or_insert(0) += m;
        }
        out
    }

    /// `sum ch L(i, j) t^depth`.
    pub fn character(&self, order: u32) -> Result<GradedCharacter> {
        let mut c = GradedCharacter::new(WeightCanon::Modular(order));
        for ((i, j, d), m) in self.entries() {
            let s = simple_module(i, j, order)?.character();
            c = c.add(&s.shifted(d).scaled(m));
        }
        Ok(c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<_> = self
            .entries()
            .map(|((i, j, d), m)| json!({"label": [i, j], "zdeg": -d, "mult": m}))
            .collect();
        serde_json::Value::Array(items)
    }
}

fn label_of(w: &Weight) -> (i64, i64) {
    (w[0].coeff(0), w[1].coeff(0))
}

/// Composition factors by peeling simple characters off the top: smallest
/// depth first, then the lexicographically largest weight.
pub fn composition_factors(ch: &GradedCharacter) -> Result<CompositionList> {
    let WeightCanon::Modular(order) = ch.canon() else {
        return Err(Error::Domain(
            "composition factors need a root of unity".into(),
        ));
    };
    let mut rest = ch.clone();
    let mut out = CompositionList::new();
    while let Some(depth) = rest.min_depth() {
        let (w, m) = rest
            .terms()
            .filter(|t| t.1 == depth)
            .max_by(|a, b| a.0.cmp(b.0))
            .map(|(w, _, m)| (*w, m))
            .expect("a term at the minimal depth");
        if m < 0 {
            return Err(Error::Consistency(format!(
                "character has no nonnegative decomposition (coefficient {m} at depth {depth})"
            )));
        }
        let (i, j) = label_of(&w);
        let simple = simple_module(i, j, order)?.character();
        rest = rest.sub(&simple.shifted(depth).scaled(m));
        out.push(i, j, depth, m);
    }
    Ok(out)
}

pub fn composition_factors_of(m: &WeightModule<CycloField>) -> Result<CompositionList> {
    composition_factors(&m.character())
}

/// Standard modules occurring in `M(a, b) (x) M(c, d)`, as `(i, j, depth)`.
pub fn standard_tensor_decomposition(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    order: u32,
) -> Vec<(i64, i64, i64)> {
    let n = i64::from(order);
    let m = |x: i64| x.rem_euclid(n);
    let (s, t) = (a + c, b + d);
    let mut out = vec![(m(s), m(t), 0)];
    for l in 1..=n {
        out.push((m(s - l), m(t - l + 1), 2 * l - 1));
        out.push((m(s - l + 1), m(t - l), 2 * l - 1));
    }
    for l in 1..n {
        out.push((m(s - l), m(t - l), 2 * l));
        out.push((m(s - l), m(t - l), 2 * l));
    }
    out.push((m(s - n), m(t - n), 2 * n));
    out.sort();
    out
}

/// Element of the graded Grothendieck ring: `sum c * l_{ij} t^d`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrothendieckElem {
    terms: BTreeMap<(i64, i64, i64), i64>,
}

impl GrothendieckElem {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `l_{ij}`.
    pub fn symbol(i: i64, j: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(i, j, 0, 1);
        e
    }

    pub fn add_term(&mut self, i: i64, j: i64, depth: i64, c: i64) {
        let e = self.terms.entry((i, j, depth)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(i, j, depth));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64, i64), i64)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, *v))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut e = self.clone();
        for ((i, j, d), c) in o.terms() {
            e.add_term(i, j, d, c);
        }
        e
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut e = self.clone();
        for ((i, j, d), c) in o.terms() {
            e.add_term(i, j, d, -c);
        }
        e
    }

    /// Specialization `t -> 1`.
    pub fn at_t_one(&self) -> Self {
        let mut e = Self::zero();
        for ((i, j, _), c) in self.terms() {
            e.add_term(i, j, 0, c);
        }
        e
    }

    pub fn from_composition(list: &CompositionList) -> Self {
        let mut e = Self::zero();
        for ((i, j, d), m) in list.entries() {
            e.add_term(i, j, d, m);
        }
        e
    }

    pub fn character(&self, order: u32) -> Result<GradedCharacter> {
        let mut c = GradedCharacter::new(WeightCanon::Modular(order));
        for ((i, j, d), k) in self.terms() {
            let s = simple_module(i, j, order)?.character();
            c = c.add(&s.shifted(d).scaled(k));
        }
        Ok(c)
    }
}

impl fmt::Display for GrothendieckElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut items: Vec<_> = self.terms().collect();
        items.sort_by_key(|((i, j, d), _)| (*d, *i, *j));
        for (k, ((i, j, d), c)) in items.into_iter().enumerate() {
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            if i < 10 && j < 10 {
                write!(f, "l{i}{j}")?;
            } else {
                write!(f, "l({i},{j})")?;
            }
            match d {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for GrothendieckElem {
    type Err = Error;

    /// Parses sums such as `l00 + 2l03t - l(1,12)t^8`; `0` is the empty sum.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut e = Self::zero();
        if s == "0" {
            return Ok(e);
        }
        if s.is_empty() {
            return Err(Error::Parse("empty Grothendieck expression".into()));
        }
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^')
            {
                let ((a, b, d), c) = parse_symbol_term(&s[start..i])?;
                e.add_term(a, b, d, c);
                start = i;
            }
        }
        Ok(e)
    }
}

fn parse_symbol_term(t: &str) -> Result<((i64, i64, i64), i64)> {
    let bad = || Error::Parse(format!("malformed Grothendieck term `{t}`"));
    let (sign, body) = match t.as_bytes().first() {
        Some(b'+') => (1, &t[1..]),
        Some(b'-') => (-1, &t[1..]),
        _ => (1, t),
    };
    let pos = body.find('l').ok_or_else(bad)?;
    let coef: i64 = match body[..pos].trim_end_matches('*') {
        "" => 1,
        c => c.parse().map_err(|_| bad())?,
    };
    let rest = &body[pos + 1..];
    let (label, tail) = if let Some(inner) = rest.strip_prefix('(') {
        let close = inner.find(')').ok_or_else(bad)?;
        let (i, j) = inner[..close].split_once(',').ok_or_else(bad)?;
        (
            (i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?),
            &inner[close + 1..],
        )
    } else {
        let digits = rest
            .get(..2)
            .filter(|d| d.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(bad)?;
        let i = (digits.as_bytes()[0] - b'0') as i64;
        let j = (digits.as_bytes()[1] - b'0') as i64;
        ((i, j), &rest[2..])
    };
    let depth = match tail.trim_start_matches('*') {
        "" => 0,
        "t" => 1,
        d => d
            .strip_prefix("t^")
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?,
    };
    Ok(((label.0, label.1, depth), sign * coef))
}

/// Product of two Grothendieck elements with nonnegative coefficients,
/// re-expressed in the basis of simple symbols.
pub fn grothendieck_product(
    a: &GrothendieckElem,
    b: &GrothendieckElem,
    order: u32,
) -> Result<GrothendieckElem> {
    let ch = a.character(order)?.mul(&b.character(order)?);
    Ok(GrothendieckElem::from_composition(&composition_factors(
        &ch,
    )?))
}
