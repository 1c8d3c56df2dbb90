//! Exact computational engine for finite p-groups and their modules over the
//! prime field: power-commutator presentations with collection arithmetic,
//! subgroup and central-series machinery, maximal-class analytics, offender
//! analytics on GF(p) modules, and conjecture checkers with a batch harness.

pub mod conjecture;
pub mod error;
pub mod gfp;
pub mod maxclass;
pub mod modrep;
pub mod offender;
pub mod pcgroup;

pub use error::{Error, Result};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
