//! Output rendering.

use superqa::scalar::LaurentInt;

use crate::commands::Output;
use crate::Format;

pub fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Text => out.text.clone(),
        Format::Json => serde_json::to_string_pretty(&out.json).expect("JSON value serializes"),
        Format::Latex => out.latex.clone().unwrap_or_else(|| out.text.clone()),
    }
}

/// LaTeX form of a Laurent polynomial, e.g. `2q^{2}+4q+3-q^{-1}`.
pub fn latex_poly(p: &LaurentInt) -> String {
    let terms = p.terms_desc();
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (idx, (e, c)) in terms.iter().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        let abs = c.magnitude().to_string();
        if neg {
            s.push('-');
        } else if idx > 0 {
            s.push('+');
        }
        let coeff = if abs == "1" && *e != 0 {
            String::new()
        } else {
            abs
        };
        s.push_str(&coeff);
        match *e {
            0 => {}
            1 => s.push('q'),
            _ => s.push_str(&format!("q^{{{e}}}")),
        }
    }
    s
}
