//! Exhaustive search for Toda-family polygons inside a lattice box.

use crate::classify::{classify_toda, is_toda_family, TodaClass};
use crate::point::LatticePoint;
use crate::polygon::make_polygon;
use crate::PolygonError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBox {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl Default for LatticeBox {
    /// Nine columns by three rows.  Wide enough for every family member
    /// with up to eight interior points: a ninth collinear interior point
    /// would need a horizontal run of nine, and the extreme ends of such a
    /// run cannot stay strictly inside a hull confined to the box.
    fn default() -> Self {
        LatticeBox {
            x_min: 0,
            x_max: 8,
            y_min: -1,
            y_max: 1,
        }
    }
}

impl LatticeBox {
    pub fn points(&self) -> Vec<LatticePoint> {
        let mut pts = Vec::new();
        for x in self.x_min..=self.x_max {
            for y in self.y_min..=self.y_max {
                pts.push(LatticePoint::new(x, y));
            }
        }
        pts
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerationReport {
    /// Distinct equivalence classes, sorted.
    pub classes: Vec<TodaClass>,
    /// Four-point subsets examined.
    pub candidates_examined: u64,
    /// Family polygons seen before deduplication.
    pub polygons_found: u64,
}

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// Enumerates every Toda-family class with at most `max_interior` interior
/// points realisable inside `bbox`.
///
/// A family polygon has exactly four boundary lattice points, so each one
/// inside the box arises from exactly one 4-subset of box points: its own
/// boundary.  Iterating over 4-subsets therefore visits every candidate
/// once.  `budget` caps the number of subsets examined.
pub fn enumerate_toda_classes(
    max_interior: usize,
    bbox: &LatticeBox,
    budget: u64,
) -> Result<EnumerationReport, PolygonError> {
    let pts = bbox.points();
    let n = pts.len();
    let mut examined: u64 = 0;
    let mut polygons_found: u64 = 0;
    let mut classes: BTreeSet<TodaClass> = BTreeSet::new();

    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    examined += 1;
                    if examined > budget {
                        return Err(PolygonError::ResourceLimit { budget });
                    }
                    let subset = [pts[a], pts[b], pts[c], pts[d]];
                    let Ok(poly) = make_polygon(&subset) else {
                        continue;
                    };
                    // The subset must be the full boundary, nothing more.
                    if poly.boundary_points().len() != 4 {
                        continue;
                    }
                    let boundary: BTreeSet<LatticePoint> =
                        poly.boundary_points().iter().copied().collect();
                    if !subset.iter().all(|p| boundary.contains(p)) {
                        continue;
                    }
                    if poly.interior_points().len() > max_interior || !is_toda_family(&poly) {
                        continue;
                    }
                    polygons_found += 1;
                    if let Some((class, _)) = classify_toda(&poly) {
                        classes.insert(class);
                    }
                }
            }
        }
    }

    Ok(EnumerationReport {
        classes: classes.into_iter().collect(),
        candidates_examined: examined,
        polygons_found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_box_finds_the_area_one_classes() {
        let bbox = LatticeBox {
            x_min: 0,
            x_max: 1,
            y_min: -1,
            y_max: 1,
        };
        let report = enumerate_toda_classes(8, &bbox, DEFAULT_ENUMERATION_BUDGET).unwrap();
        assert_eq!(
            report.classes,
            vec![TodaClass::Y { n: 1, k: 0 }, TodaClass::Y { n: 1, k: 1 }]
        );
    }

    #[test]
    fn budget_is_enforced() {
        let bbox = LatticeBox::default();
        match enumerate_toda_classes(8, &bbox, 100) {
            Err(PolygonError::ResourceLimit { budget: 100 }) => {}
            other => panic!("expected resource limit, got {other:?}"),
        }
    }
}
