//! Exact-arithmetic circle rotations and their symbolic codings.
//!
//! Angles and points are quadratic irrationals `(p + q√d)/r`, so every
//! arc-membership decision reduces to integer sign tests; no floating-point
//! comparison sits anywhere on the coding path. Floats appear only in
//! display helpers and test oracles.

mod circle;
mod error;
pub mod input;
mod quadratic;
mod system;

pub use circle::{Arc, CirclePoint};
pub use error::RotationError;
pub use quadratic::QuadraticReal;
pub use system::{
    canonical_system, factor_interval, grouped_system, sturmian_word, verify_minimal_growth,
    CodingSystem, MinimalGrowthReport,
};
