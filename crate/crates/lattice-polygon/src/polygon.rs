//! Convex hulls and lattice point counts.

use crate::point::{primitive, LatticePoint, UnimodularAffineMap};
use crate::PolygonError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A convex lattice polygon with positive area.
///
/// Invariants: `vertices` are the hull corners in counterclockwise order
/// starting from the lexicographically smallest; `boundary` is the full set
/// of lattice points on the hull edges (also counterclockwise, starting at
/// `vertices[0]`); `interior` is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolygon {
    vertices: Vec<LatticePoint>,
    boundary: Vec<LatticePoint>,
    interior: Vec<LatticePoint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PickData {
    /// Twice the Euclidean area; always an integer by the shoelace formula.
    pub double_area: i64,
    pub interior_points: usize,
    pub boundary_points: usize,
}

/// Convex hull of a point set, hull corners only, counterclockwise.
/// Returns None when the hull is a point or segment.
fn convex_hull(points: &[LatticePoint]) -> Option<Vec<LatticePoint>> {
    let mut pts: Vec<LatticePoint> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return None;
    }
    // Andrew's monotone chain; strict turns drop collinear mid-edge points.
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2
            && LatticePoint::cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && LatticePoint::cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return None;
    }
    Some(lower)
}

/// Builds the Newton polygon of a point set: its convex hull together with
/// all boundary and interior lattice points.  Errors on degenerate input.
pub fn make_polygon(points: &[LatticePoint]) -> Result<NewtonPolygon, PolygonError> {
    let mut vertices = convex_hull(points).ok_or(PolygonError::Degenerate)?;
    // Rotate so the lexicographically smallest corner comes first; the hull
    // above already starts there, but do not rely on that detail.
    let start = vertices
        .iter()
        .enumerate()
        .min_by_key(|(_, p)| **p)
        .map(|(i, _)| i)
        .unwrap();
    vertices.rotate_left(start);

    let m = vertices.len();
    let mut boundary = Vec::new();
    for i in 0..m {
        let u = vertices[i];
        let v = vertices[(i + 1) % m];
        let ((sx, sy), g) = primitive(v.x - u.x, v.y - u.y);
        for j in 0..g {
            boundary.push(LatticePoint::new(u.x + j * sx, u.y + j * sy));
        }
    }

    let xmin = vertices.iter().map(|p| p.x).min().unwrap();
    let xmax = vertices.iter().map(|p| p.x).max().unwrap();
    let ymin = vertices.iter().map(|p| p.y).min().unwrap();
    let ymax = vertices.iter().map(|p| p.y).max().unwrap();
    let on_boundary: BTreeSet<LatticePoint> = boundary.iter().copied().collect();
    let mut interior = Vec::new();
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            let p = LatticePoint::new(x, y);
            if on_boundary.contains(&p) {
                continue;
            }
            if vertices
                .iter()
                .enumerate()
                .all(|(i, &u)| LatticePoint::cross(u, vertices[(i + 1) % m], p) > 0)
            {
                interior.push(p);
            }
        }
    }
    interior.sort();

    let poly = NewtonPolygon {
        vertices,
        boundary,
        interior,
    };
    // Pick's identity is a structural invariant of the three point lists.
    let pd = pick_data(&poly);
    debug_assert_eq!(
        pd.double_area,
        2 * pd.interior_points as i64 + pd.boundary_points as i64 - 2
    );
    Ok(poly)
}

impl NewtonPolygon {
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn boundary_points(&self) -> &[LatticePoint] {
        &self.boundary
    }

    pub fn interior_points(&self) -> &[LatticePoint] {
        &self.interior
    }

    /// All lattice points of the polygon, sorted.
    pub fn all_points(&self) -> Vec<LatticePoint> {
        let mut pts: Vec<LatticePoint> = self
            .boundary
            .iter()
            .chain(self.interior.iter())
            .copied()
            .collect();
        pts.sort();
        pts
    }

    /// Image under a unimodular affine map.  Convexity and lattice point
    /// counts are preserved, so the result is rebuilt from mapped points.
    pub fn transform(&self, map: &UnimodularAffineMap) -> NewtonPolygon {
        let pts: Vec<LatticePoint> = self.boundary.iter().map(|&p| map.apply(p)).collect();
        make_polygon(&pts).expect("unimodular image of a polygon is a polygon")
    }

    /// Sorted point set after translating the minimum point to the origin.
    /// This is the translation-invariant signature used for canonical forms.
    pub fn normalized_points(&self) -> Vec<LatticePoint> {
        let pts = self.all_points();
        let base = pts[0];
        pts.iter()
            .map(|p| LatticePoint::new(p.x - base.x, p.y - base.y))
            .collect()
    }
}

/// Shoelace area and lattice point counts.
pub fn pick_data(poly: &NewtonPolygon) -> PickData {
    let v = poly.vertices();
    let m = v.len();
    let mut double_area = 0;
    for i in 0..m {
        let u = v[i];
        let w = v[(i + 1) % m];
        double_area += u.x * w.y - w.x * u.y;
    }
    PickData {
        double_area,
        interior_points: poly.interior_points().len(),
        boundary_points: poly.boundary_points().len(),
    }
}
