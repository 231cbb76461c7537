//! Root monoids on affine toric varieties, in exact arithmetic.

pub mod actions;
pub mod arith;
pub mod center;
pub mod demazure;
pub mod error;
pub mod idempotents;
pub mod io;
pub mod lattice_core;
pub mod monoid;
pub mod presets;
pub mod sampling;

pub use error::{Error, Result};
