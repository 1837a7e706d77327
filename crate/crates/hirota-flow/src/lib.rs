//! Bilinear evolution of tau functions on the twisted cylinder.
//!
//! The lattice lives on sites `(n, m)` identified under `(n, m) ~ (n + N,
//! m + k)`; each site carries one tau value and the recursion couples a
//! site to its four neighbours through the coefficient `zeta * rho^l`,
//! where `l = k n - N m` grades the deautonomization.  [`TauLattice`]
//! holds a three-row sliding window of such values and advances it one
//! row at a time in either direction.  [`Orbit`] accumulates the rows an
//! evolution visits, and [`as_q_difference`] regroups an orbit into
//! samples of N scalar sequences on a q-spaced grid, checking the
//! regrouped recursion on the way.
//!
//! Two flows that do not fit the window engine get their own entry
//! points: [`ynn_step`] advances the unit-twist family, where the new row
//! appears only as the solution of a cyclic linear system, and [`LOrbit`]
//! runs the 2N-term ladder recursion of the length-four boundary family.

mod lflow;
mod params;
mod samples;
mod window;
mod ynn;

pub use lflow::{map_to_y21, LOrbit};
pub use params::{HirotaParams, Mode};
pub use samples::{as_q_difference, write_orbit_csv, Orbit, QSamples};
pub use window::TauLattice;
pub use ynn::{solve_cyclic, y33_residuals, ynn_step, ynn_step_down};

use thiserror::Error;

/// Failure modes of the bilinear steps.
#[derive(Debug, Error)]
pub enum HirotaError {
    /// A step divided by the tau value at the reported site and it was zero.
    #[error("step divides by a vanishing tau at site ({n}, {m})")]
    SingularStep { n: i64, m: i64 },
    /// A computed or seeded tau value vanished; orbits through zeros are not
    /// continued.
    #[error("tau vanishes at site ({n}, {m})")]
    ZeroTau { n: i64, m: i64 },
    /// A stencil reached outside the populated window.
    #[error("site ({n}, {m}) is missing from the window")]
    MissingSite { n: i64, m: i64 },
    /// The cyclic linear system of a unit-twist step has no unique solution.
    #[error("cyclic step system is singular")]
    SingularSystem,
    /// The regrouped q-difference recursion failed on recorded data.
    #[error("sampled recursion has a nonzero residual at (j = {j}, l = {l})")]
    ResidualNonzero { j: i64, l: i64 },
    #[error("{0}")]
    BadInput(String),
    #[error(transparent)]
    Arith(#[from] arith::ArithError),
}
