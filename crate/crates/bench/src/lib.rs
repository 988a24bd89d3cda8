//! Fixtures for the engine benchmarks.

use superqa::tangle::{knot_lookup, BraidSpec};

/// Knots of increasing braid length used by the invariant benchmarks.
pub const BENCH_KNOTS: [&str; 4] = ["3_1", "6_3", "7_7", "10_132"];

/// Braid word of a named table entry.
pub fn knot_braid(name: &str) -> BraidSpec {
    knot_lookup(name)
        .ok()
        .and_then(|e| e.braid.clone())
        .unwrap_or_else(|| panic!("no braid stored for {name}"))
}
