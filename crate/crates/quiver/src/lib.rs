//! Toric quivers on a twisted cylinder, with mutation and the flows that
//! preserve the strip shape.
//!
//! A quiver here is a vertex set on the torus `(n, m) ~ (n + N, m + k)`
//! together with an antisymmetric integer exchange matrix.  Vertices come in
//! column pairs, one marked `x` below one marked `+`, and the matrix is
//! assembled from a sequence of column-to-column blocks.  Mutation acts on
//! the matrix by the standard exchange rule and on the labels by moving the
//! mutated vertex across its partner on the same vertical line.

mod block;
mod casimir;
mod flows;
mod iso;
mod mutate;
mod quiv;

pub use block::{Block, BlockSequence};
pub use casimir::casimirs;
pub use flows::{uniform_flow, uniform_sequence, ynn_flow, FlowPlan};
pub use iso::is_isomorphic;
pub use quiv::{build_quiver, Marker, Quiver, VertexLabel};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuiverError {
    /// Block sequence whose net rise falls outside the supported band.
    #[error("block sequence of length {n} has net rise {k}, outside [-{n}, {n}]")]
    InvalidSequence { n: usize, k: i64 },
    /// A Casimir exponent is negative at a vertex whose value is zero.
    #[error("vertex {vertex} carries value 0 with negative exponent {exponent}")]
    ZeroValue { vertex: usize, exponent: i64 },
    /// Flow parameters outside the range the construction covers.
    #[error("flow is defined for {what}, got N={n}, k={k}")]
    UnsupportedFlow {
        what: &'static str,
        n: usize,
        k: i64,
    },
    #[error(transparent)]
    Arith(#[from] arith::ArithError),
}
