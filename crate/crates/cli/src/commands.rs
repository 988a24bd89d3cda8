//! Subcommand implementations. Each returns machine-readable JSON together
//! with a short text rendering.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};
use superqa::classify::{classify_with, default_search, ribbon_pairs, RibbonSearch};
use superqa::linalg::{Mat, MatOps};
use superqa::repmod::{
    closed_form_character, composition_factors_of, fundamental_dual_module, fundamental_module,
    grothendieck_product, highest_weight_vectors, simple_module, standard_module, w_module,
    GrothendieckElem, WeightModule,
};
use superqa::rtcat::twist;
use superqa::scalar::{CycloField, Field, LaurentInt, RatFuncField};
use superqa::superdata::SuperAData;
use superqa::tangle::{
    cyclotomic_coloring, invariant_braid, invariant_braid_in, invariant_tangle,
    invariant_tangle_in, knot_db, knot_lookup, parse_knot_table, skein_recursion, skein_verify,
    torus2_formula, BraidSpec, KnotEntry, MorseTangle,
};
use superqa::uq_rank2::r_matrix_braiding;

use crate::render::latex_poly;
use crate::{Backend, ModuleSpec};

/// Exit status classes.
#[derive(Debug)]
pub enum Failure {
    Validation(String),
    Consistency(String),
    Io(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Consistency(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Validation(m) | Failure::Consistency(m) | Failure::Io(m) => write!(f, "{m}"),
        }
    }
}

impl From<superqa::Error> for Failure {
    fn from(e: superqa::Error) -> Self {
        if e.is_validation() {
            Failure::Validation(e.to_string())
        } else {
            Failure::Consistency(e.to_string())
        }
    }
}

/// Result of a subcommand.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub latex: Option<String>,
    /// Exit code; nonzero when a comparison with reference data failed.
    pub code: u8,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            latex: None,
            code: 0,
        }
    }
}

type CmdResult = Result<Output, Failure>;

fn parse_pair(s: &str) -> Result<(i64, i64), Failure> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let bad = || Failure::Validation(format!("expected a label `i,j`, got `{s}`"));
    let (i, j) = inner.split_once(',').ok_or_else(bad)?;
    Ok((
        i.trim().parse().map_err(|_| bad())?,
        j.trim().parse().map_err(|_| bad())?,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Simple,
    Standard,
}

/// Parses `L(i,j)`, `M(i,j)` or a bare `i,j` (simple).
fn parse_module_label(s: &str) -> Result<(Kind, i64, i64), Failure> {
    let t = s.trim();
    let (kind, rest) = match t.chars().next() {
        Some('L') | Some('l') => (Kind::Simple, &t[1..]),
        Some('M') | Some('m') => (Kind::Standard, &t[1..]),
        _ => (Kind::Simple, t),
    };
    let (i, j) = parse_pair(rest)?;
    Ok((kind, i, j))
}

fn build_module(
    kind: Kind,
    i: i64,
    j: i64,
    n: u32,
) -> Result<Arc<WeightModule<CycloField>>, Failure> {
    Ok(match kind {
        Kind::Simple => simple_module(i, j, n)?,
        Kind::Standard => standard_module(i, j, n)?,
    })
}

fn module_from_spec(spec: &ModuleSpec) -> Result<(Kind, i64, i64), Failure> {
    match (&spec.simple, &spec.standard) {
        (Some(s), None) => {
            let (i, j) = parse_pair(s)?;
            Ok((Kind::Simple, i, j))
        }
        (None, Some(s)) => {
            let (i, j) = parse_pair(s)?;
            Ok((Kind::Standard, i, j))
        }
        _ => Err(Failure::Validation(
            "give exactly one of --simple, --standard".into(),
        )),
    }
}

fn label(kind: Kind, i: i64, j: i64) -> String {
    match kind {
        Kind::Simple => format!("L({i},{j})"),
        Kind::Standard => format!("M({i},{j})"),
    }
}

pub fn classify(r: usize, odd: &str, n: u32, exhaustive: bool) -> CmdResult {
    let odd: Vec<usize> = odd
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::Validation(format!("bad vertex `{s}`")))
        })
        .collect::<Result<_, _>>()?;
    let data = SuperAData::build(r, &odd, n)?;
    let search = if exhaustive {
        RibbonSearch::Exhaustive
    } else {
        default_search(&data)
    };
    let report = classify_with(&data, search)?;
    let pairs = ribbon_pairs(&data, search);
    let json = json!({
        "datum": data.to_json(),
        "report": report.to_json(),
        "ribbon_pairs": serde_json::to_value(&pairs).expect("ribbon pairs serialize"),
    });
    let text = format!(
        "{}\ndet t = {}\nnondegenerate: {}\ntop degree: {:?}\nunimodular: {}\nribbon_count: {}\nmodular: {}",
        data.diagram(),
        report.det_t,
        report.nondegenerate,
        report.top_degree,
        report.unimodular,
        report.ribbon_count(),
        report.modular,
    );
    Ok(Output::new(json, text))
}

pub fn module(spec: &ModuleSpec, n: u32) -> CmdResult {
    let (kind, i, j) = module_from_spec(spec)?;
    let m = build_module(kind, i, j, n)?;
    let f = m.ring();
    let ch = m.character();
    let factors = composition_factors_of(&m)?;
    let qdim = f.render(&m.qdim());
    let json = json!({
        "module": label(kind, i, j),
        "N": n,
        "dim": m.dim(),
        "qdim": qdim,
        "highest_weight_vectors": highest_weight_vectors(&*m).len(),
        "character": ch.to_json(),
        "composition_factors": factors.to_json(),
    });
    let text = format!(
        "{} at N = {n}\ndim {}\nqdim {qdim}\ncharacter {ch}\ncomposition factors {}",
        label(kind, i, j),
        m.dim(),
        GrothendieckElem::from_composition(&factors),
    );
    Ok(Output::new(json, text))
}

pub fn tensor(left: &str, right: &str, n: u32) -> CmdResult {
    let (ka, a, b) = parse_module_label(left)?;
    let (kb, c, d) = parse_module_label(right)?;
    let x = build_module(ka, a, b, n)?;
    let y = build_module(kb, c, d, n)?;
    let t = x.tensor(&y);
    let factors = composition_factors_of(&t)?;
    let symbol = GrothendieckElem::from_composition(&factors);
    let json = json!({
        "left": label(ka, a, b),
        "right": label(kb, c, d),
        "N": n,
        "dim": t.dim(),
        "composition_factors": factors.to_json(),
        "symbol": symbol.to_string(),
    });
    let text = format!("{} (x) {} = {symbol}", label(ka, a, b), label(kb, c, d));
    Ok(Output::new(json, text))
}

pub fn character(spec: &ModuleSpec, n: u32, closed_form: bool) -> CmdResult {
    let (kind, i, j) = module_from_spec(spec)?;
    let ch = if closed_form {
        if kind != Kind::Simple {
            return Err(Failure::Validation(
                "the closed formula covers simple modules only".into(),
            ));
        }
        simple_module(i, j, n)?;
        closed_form_character(i, j, n)
    } else {
        build_module(kind, i, j, n)?.character()
    };
    let json =
        json!({"module": label(kind, i, j), "N": n, "dim": ch.dim(), "character": ch.to_json()});
    Ok(Output::new(json, ch.to_string()))
}

pub fn grothendieck(left: &str, right: &str, n: u32) -> CmdResult {
    let a: GrothendieckElem = left.parse()?;
    let b: GrothendieckElem = right.parse()?;
    let p = grothendieck_product(&a, &b, n)?;
    let json = json!({
        "left": a.to_string(),
        "right": b.to_string(),
        "N": n,
        "product": p.to_string(),
        "at_t_one": p.at_t_one().to_string(),
    });
    let text = format!("({a}) * ({b}) = {p}\nat t = 1: {}", p.at_t_one());
    Ok(Output::new(json, text))
}

fn fixed_module<F: Field>(f: &F, name: &str, n: u32) -> Result<WeightModule<F>, Failure> {
    match name.to_ascii_lowercase().as_str() {
        "fundamental" | "v" | "l(1,0)" => Ok(fundamental_module(f)?),
        "fundamental-dual" | "v*" => Ok(fundamental_dual_module(f)?),
        "w" => Ok(w_module(f)?),
        _ => Err(Failure::Validation(format!(
            "unknown module `{name}` for this backend (N = {n})"
        ))),
    }
}

fn matrix_json<F: Field>(f: &F, m: &Mat<F::Elem>) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| f.render(x)).collect())
        .collect();
    json!(rows)
}

fn braiding_output<F: Field>(
    f: &F,
    a: &WeightModule<F>,
    b: &WeightModule<F>,
    names: (&str, &str),
) -> CmdResult {
    let psi = r_matrix_braiding(a, b)?;
    let twist_of = |m: &WeightModule<F>| -> Result<Option<String>, Failure> {
        Ok(f.as_scalar(&twist(m)?).map(|s| f.render(&s)))
    };
    let json = json!({
        "first": names.0,
        "second": names.1,
        "dims": [a.dim(), b.dim()],
        "braiding": matrix_json(f, &psi),
        "twist_first": twist_of(a)?,
        "twist_second": twist_of(b)?,
    });
    let rows: Vec<String> = (0..psi.rows())
        .map(|i| {
            psi.row(i)
                .iter()
                .map(|x| f.render(x))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect();
    let text = format!(
        "braiding {} (x) {} -> {} (x) {}\n{}",
        names.0,
        names.1,
        names.1,
        names.0,
        rows.join("\n")
    );
    Ok(Output::new(json, text))
}

pub fn rmatrix(first: &str, second: &str, backend: Backend, n: u32) -> CmdResult {
    match backend {
        Backend::Symbolic => {
            let f = RatFuncField;
            let a = fixed_module(&f, first, n)?;
            let b = fixed_module(&f, second, n)?;
            braiding_output(&f, &a, &b, (first, second))
        }
        Backend::RootOfUnity => {
            let f = CycloField::new(n)?;
            let load = |name: &str| -> Result<WeightModule<CycloField>, Failure> {
                match parse_module_label(name) {
                    Ok((kind, i, j)) if name.contains(',') => {
                        Ok((*build_module(kind, i, j, n)?).clone())
                    }
                    _ => fixed_module(&f, name, n),
                }
            };
            let a = load(first)?;
            let b = load(second)?;
            braiding_output(&f, &a, &b, (first, second))
        }
    }
}

pub fn skein(max_b: i64, direct_b: i64) -> CmdResult {
    if max_b < 1 || direct_b < 0 {
        return Err(Failure::Validation(
            "torus parameters must be positive".into(),
        ));
    }
    let report = skein_verify()?;
    let mut rows = Vec::new();
    let mut all_agree = true;
    for b in 1..=max_b {
        let formula = torus2_formula(b);
        let recursion = skein_recursion(b)?;
        let direct = if b <= direct_b {
            Some(invariant_braid(&BraidSpec::new(2, vec![1; b as usize])?)?)
        } else {
            None
        };
        let agree = recursion == formula && direct.as_ref().is_none_or(|d| *d == formula);
        all_agree &= agree;
        rows.push(json!({
            "b": b,
            "formula": formula.to_string(),
            "recursion": recursion.to_string(),
            "direct": direct.map(|d| d.to_string()),
            "agree": agree,
        }));
    }
    let consistent = all_agree && report.e_is_projection && report.spans_endomorphisms;
    let text = format!(
        "minimal polynomial of Psi (low to high): [{}]\nminimal polynomial of -Psi: [{}]\ndim End(W (x) W) = {}\nidempotent rank {}, projection: {}\ntwist of W: {}\ntorus links 1..={max_b}: {}",
        report.min_poly.join(", "),
        report.signed_min_poly.join(", "),
        report.end_dim,
        report.e_rank,
        report.e_is_projection,
        report.twist,
        if all_agree { "formula, recursion and direct evaluation agree" } else { "MISMATCH" },
    );
    let json = json!({
        "report": serde_json::to_value(&report).expect("skein report serializes"),
        "torus": rows,
        "consistent": consistent,
    });
    let mut out = Output::new(json, text);
    out.code = if consistent { 0 } else { 2 };
    Ok(out)
}

pub enum LinkSource {
    Knot(String),
    Braid {
        word: String,
        strands: usize,
        cut: usize,
    },
    Tangle(PathBuf),
}

enum Diagram {
    Braid(BraidSpec),
    Tangle(MorseTangle),
}

fn read_file(p: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
}

fn evaluate(
    d: &Diagram,
    backend: Backend,
    n: u32,
) -> Result<(String, Option<LaurentInt>), Failure> {
    match backend {
        Backend::Symbolic => {
            let v = match d {
                Diagram::Braid(b) => invariant_braid(b)?,
                Diagram::Tangle(t) => invariant_tangle(t)?,
            };
            Ok((v.to_string(), Some(v)))
        }
        Backend::RootOfUnity => {
            let c = cyclotomic_coloring(n)?;
            let v = match d {
                Diagram::Braid(b) => invariant_braid_in(&c, b)?,
                Diagram::Tangle(t) => invariant_tangle_in(&c, t)?,
            };
            Ok((v.to_string(), None))
        }
    }
}

fn expected_in_backend(e: &LaurentInt, backend: Backend, n: u32) -> Result<String, Failure> {
    Ok(match backend {
        Backend::Symbolic => e.to_string(),
        Backend::RootOfUnity => CycloField::new(n)?.from_laurent(e).to_string(),
    })
}

pub fn invariant(source: LinkSource, backend: Backend, n: u32) -> CmdResult {
    let (diagram, entry): (Diagram, Option<&KnotEntry>) = match source {
        LinkSource::Knot(name) => {
            let e = knot_lookup(&name)?;
            let b = e.braid.clone().ok_or_else(|| {
                Failure::Validation(format!("no diagram stored for `{}`", e.name))
            })?;
            (Diagram::Braid(b), Some(e))
        }
        LinkSource::Braid { word, strands, cut } => (
            Diagram::Braid(BraidSpec::with_cut(
                strands,
                BraidSpec::parse_word(&word)?,
                cut,
            )?),
            None,
        ),
        LinkSource::Tangle(path) => (
            Diagram::Tangle(MorseTangle::from_json(&read_file(&path)?)?),
            None,
        ),
    };
    let (writhe, components) = match &diagram {
        Diagram::Braid(b) => (b.writhe(), b.components()),
        Diagram::Tangle(t) => (t.writhe(), t.components()?),
    };
    let (value, symbolic) = evaluate(&diagram, backend, n)?;
    let mut json = json!({
        "invariant": value,
        "backend": match backend { Backend::Symbolic => "symbolic", Backend::RootOfUnity => "root-of-unity" },
        "writhe": writhe,
        "components": components,
    });
    if backend == Backend::RootOfUnity {
        json["N"] = json!(n);
    }
    let mut code = 0;
    if let Some(e) = entry {
        let expected = expected_in_backend(&e.expected, backend, n)?;
        let matches = expected == value;
        json["knot"] = json!(e.name);
        json["expected"] = json!(expected);
        json["matches"] = json!(matches);
        if !matches {
            code = 2;
        }
    }
    let mut out = Output::new(json, value);
    out.latex = symbolic.map(|p| latex_poly(&p));
    out.code = code;
    Ok(out)
}

pub fn knot_table(golden: Option<&Path>, backend: Backend, n: u32) -> CmdResult {
    let owned;
    let entries: &[KnotEntry] = match golden {
        Some(p) => {
            owned = parse_knot_table(&read_file(p)?)?;
            &owned
        }
        None => knot_db(),
    };
    let mut rows: Vec<(String, Value, bool)> = entries
        .par_iter()
        .map(|e| -> Result<(String, Value, bool), Failure> {
            let expected = expected_in_backend(&e.expected, backend, n)?;
            let Some(b) = &e.braid else {
                let row = json!({"name": e.name, "status": e.status, "expected": expected, "result": "skipped"});
                return Ok((e.name.clone(), row, true));
            };
            let (value, _) = evaluate(&Diagram::Braid(b.clone()), backend, n)?;
            let ok = value == expected;
            let row = json!({
                "name": e.name,
                "status": e.status,
                "expected": expected,
                "computed": value,
                "result": if ok { "match" } else { "mismatch" },
            });
            Ok((e.name.clone(), row, ok))
        })
        .collect::<Result<_, _>>()?;
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    let evaluated = rows.iter().filter(|r| r.1["result"] != "skipped").count();
    let matched = rows.iter().filter(|r| r.1["result"] == "match").count();
    let all_ok = rows.iter().all(|r| r.2);
    let mut text: Vec<String> = rows
        .iter()
        .map(|(name, row, _)| {
            let value = row.get("computed").and_then(Value::as_str).unwrap_or("-");
            format!(
                "{name:<10} {:<9} {value}",
                row["result"].as_str().unwrap_or("")
            )
        })
        .collect();
    text.push(format!("{matched}/{evaluated} evaluated entries match"));
    let json = json!({"entries": rows.into_iter().map(|r| r.1).collect::<Vec<_>>(), "evaluated": evaluated, "matched": matched});
    let mut out = Output::new(json, text.join("\n"));
    out.code = if all_ok { 0 } else { 2 };
    Ok(out)
}
