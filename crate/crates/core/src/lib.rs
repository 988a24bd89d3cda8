//! Exact computer algebra for the small quantum supergroups of type Super A.
pub mod classify;
pub mod error;
pub mod linalg;
pub mod repmod;
pub mod rtcat;
pub mod scalar;
pub mod superdata;
pub mod tangle;
pub mod uq_rank2;
pub use error::{Error, Result};
