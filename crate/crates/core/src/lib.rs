//! Idempotent semiring algebra: max-plus and friends, Maslov dequantization,
//! Bellman equations, idempotent analysis on grids, interval extensions and
//! planar tropical geometry.
//!
//! Semirings are zero-sized marker types implementing [`semiring::Semiring`];
//! everything else is generic over them.

pub mod analysis;
pub mod dequant;
pub mod error;
pub mod interval;
pub mod linalg;
pub mod semiring;
pub mod tropical;

pub use error::{Capability, Error, Result};
