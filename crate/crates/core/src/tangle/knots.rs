//! Built-in knot and link table with braid words and reference values.

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use super::BraidSpec;
use crate::error::{Error, Result};
use crate::scalar::LaurentInt;

/// Provenance of a reference value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KnotStatus {
    /// Value from the published table, with a verified braid word.
    Table,
    /// Value quoted for a single knot outside the table.
    Reference,
    /// Value without a braid word in this table; not evaluated.
    Unconfirmed,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawEntry {
    name: String,
    #[serde(default)]
    aliases: Vec<String>,
    #[serde(default)]
    torus: Option<String>,
    #[serde(default)]
    strands: Option<usize>,
    #[serde(default)]
    word: Option<Vec<i32>>,
    expected: String,
    status: KnotStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct KnotEntry {
    pub name: String,
    pub aliases: Vec<String>,
    pub torus: Option<String>,
    pub braid: Option<BraidSpec>,
    pub expected: LaurentInt,
    pub status: KnotStatus,
}

/// Parses a knot table in the bundled JSON format.
pub fn parse_knot_table(json: &str) -> Result<Vec<KnotEntry>> {
    let raw: Vec<RawEntry> =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("knot table: {e}")))?;
    raw.into_iter()
        .map(|e| {
            let braid = match (e.strands, e.word) {
                (Some(s), Some(w)) if !w.is_empty() => Some(BraidSpec::new(s, w)?),
                _ => None,
            };
            Ok(KnotEntry {
                expected: e.expected.parse()?,
                name: e.name,
                aliases: e.aliases,
                torus: e.torus,
                braid,
                status: e.status,
            })
        })
        .collect()
}

static DB: Lazy<Vec<KnotEntry>> = Lazy::new(|| {
    parse_knot_table(include_str!("../../data/knots.json")).expect("bundled knot table parses")
});

pub fn knot_db() -> &'static [KnotEntry] {
    &DB
}

/// Look up an entry by name or alias, ignoring case.
pub fn knot_lookup(name: &str) -> Result<&'static KnotEntry> {
    let key = name.to_ascii_lowercase();
    knot_db()
        .iter()
        .find(|e| {
            e.name.to_ascii_lowercase() == key
                || e.aliases.iter().any(|a| a.to_ascii_lowercase() == key)
        })
        .ok_or_else(|| Error::UnknownKnot(name.to_string()))
}
