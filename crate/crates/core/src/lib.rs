//! Exact truncated q-series arithmetic, the third-order mock theta family and
//! its generalizations, a catalog of verifiable identities between them, and
//! brute-force enumerators for the associated restricted partition functions.

pub mod error;
pub mod instance;
pub mod mock;
pub mod partitions;
pub mod qkit;
pub mod registry;
pub mod ring;

pub use error::{Error, Result};
