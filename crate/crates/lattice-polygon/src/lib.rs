//! Convex lattice polygons up to unimodular affine equivalence.
//!
//! The objects here are Newton polygons: convex hulls of finite sets of
//! points in Z^2, considered modulo the action of SL(2,Z) composed with
//! integer translations.  The crate computes hulls, boundary and interior
//! lattice points, Pick data, and decides membership in the one-parameter
//! families of polygons whose interior points lie on a single line and
//! whose boundary carries exactly four lattice points.  Those families are
//! the `Y {n,k}` quadrilaterals (and degenerate triangles at `k = n`) and
//! the `L {n}` triangles; `classify` recognises a polygon as one of them
//! and returns the witnessing equivalence.

pub mod classify;
pub mod enumerate;
pub mod point;
pub mod polygon;

pub use classify::{canonical_form, classify_toda, equivalence, is_toda_family, TodaClass};
pub use enumerate::{
    enumerate_toda_classes, EnumerationReport, LatticeBox, DEFAULT_ENUMERATION_BUDGET,
};
pub use point::{LatticePoint, UnimodularAffineMap};
pub use polygon::{make_polygon, pick_data, NewtonPolygon, PickData};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolygonError {
    /// Fewer than three distinct points, or all points collinear.
    #[error("degenerate polygon: points span no area")]
    Degenerate,
    /// An enumeration exceeded its candidate budget.
    #[error("enumeration budget of {budget} candidates exhausted")]
    ResourceLimit { budget: u64 },
    /// A matrix that is supposed to be unimodular is not.
    #[error("matrix has determinant {det}, expected +1")]
    NotUnimodular { det: i64 },
}
