//! Shared arithmetic: exact big rationals, arbitrary-precision complex floats,
//! and the Scalar type that every dynamical module evolves.
//!
//! Exact mode works over Q and never rounds. Numeric mode works over C at a
//! configurable binary precision (default 256 bits) with to-even rounding.
//! The two modes never mix inside one computation; mixing is a caller bug and
//! reported as an error.

pub mod cplx;
pub mod rat;
pub mod real;
pub mod scalar;

pub use cplx::Cplx;
pub use rat::{parse_rat, rat_from_i64, rat_pow_i64, rat_root, rat_to_string, Rat};
pub use real::{Ctx, Real};
pub use scalar::{Scalar, ScalarRepr};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixing exact and numeric scalars")]
    ModeMix,
    #[error("no exact rational branch: {0}")]
    Branch(String),
    #[error("invalid rational literal: {0}")]
    BadLiteral(String),
}

pub const DEFAULT_PREC: usize = 256;
