//! Cluster variables on the twisted cylinder: pointwise seeds, strip
//! assignments, the recurrence that grows the value lattice row by row,
//! and the coefficient bookkeeping that deautonomizes the dynamics.
//!
//! Everything runs over [`arith::Scalar`], so the same code path serves
//! exact rational certification and high-precision numeric checks.

mod bracket;
mod hamil;
mod lattice;
mod seed;
mod strip;
mod trop;

pub use arith::{Ctx, Rat, Scalar, ScalarRepr};
pub use bracket::{log_gradient, poisson_bracket_fd};
pub use hamil::n3_hamiltonians;
pub use lattice::{assign_strip_x, x_field_from_tau, y_system_extend, Extend, XLattice};
pub use seed::{
    mutate_tau_with_coeff, mutate_x, strip_coefficients, x_from_tau, CoeffParams, TauSeed, XSeed,
};
pub use strip::{MoveDir, StripShape};
pub use trop::TropicalMonomial;

use thiserror::Error;

/// Errors surfaced by seed mutations, lattice growth, and evaluation.
#[derive(Debug, Error)]
pub enum ClusterError {
    /// A mutation divided by a vanishing variable or exchange factor.
    #[error("mutation at vertex {vertex} hits a vanishing factor")]
    SingularMutation { vertex: usize },
    /// A lattice relation at the given site divided by zero.
    #[error("lattice relation at site ({n},{m}) divides by zero")]
    SingularStep { n: i64, m: i64 },
    /// A lattice value needed by a relation has not been filled in.
    #[error("site ({n},{m}) is missing from the lattice")]
    MissingSite { n: i64, m: i64 },
    /// Tropical addition of incomparable monomials: the result would not
    /// be a monomial, so the degeneration is reported instead of guessed.
    #[error("tropical sum of {a} and {b} is not a monomial")]
    TropicalSum { a: String, b: String },
    /// Structural problem in a seed or strip description.
    #[error("{0}")]
    BadInput(String),
    #[error(transparent)]
    Arith(#[from] arith::ArithError),
    #[error(transparent)]
    Quiver(#[from] quiver::QuiverError),
    #[error("seed document is malformed: {0}")]
    Document(String),
}
