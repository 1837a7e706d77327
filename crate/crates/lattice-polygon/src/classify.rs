//! Recognition of the two Toda-type polygon families.
//!
//! A polygon belongs to the family when its boundary carries exactly four
//! lattice points and all its interior points lie on one line.  Every such
//! polygon is equivalent to exactly one of:
//!
//!   Y {n, k}:  boundary points (0,0), (0,-1), (n-k,1), (n,0),  0 <= k <= n,
//!   L {n}:     boundary points (-1,-1), (0,-1), (0,1), (n-1,0),  n >= 3.
//!
//! Both have area n and n - 1 interior points.  For n <= 2 the L shape
//! collapses onto a Y class, so the L label starts at n = 3.  The two
//! families differ in how the interior line meets the boundary: extended,
//! it passes through two boundary points on a Y polygon but only one on an
//! L polygon.

use crate::point::{primitive, LatticePoint, UnimodularAffineMap};
use crate::polygon::{make_polygon, pick_data, NewtonPolygon};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum TodaClass {
    Y {
        #[serde(rename = "N")]
        n: i64,
        k: i64,
    },
    L {
        #[serde(rename = "N")]
        n: i64,
    },
}

impl TodaClass {
    /// Number of interior points of any representative.
    pub fn interior_count(&self) -> usize {
        match self {
            TodaClass::Y { n, .. } | TodaClass::L { n } => (*n - 1) as usize,
        }
    }

    /// Boundary points of the canonical representative.
    pub fn canonical_points(&self) -> Vec<LatticePoint> {
        match *self {
            TodaClass::Y { n, k } => vec![
                LatticePoint::new(0, 0),
                LatticePoint::new(0, -1),
                LatticePoint::new(n - k, 1),
                LatticePoint::new(n, 0),
            ],
            TodaClass::L { n } => vec![
                LatticePoint::new(-1, -1),
                LatticePoint::new(0, -1),
                LatticePoint::new(0, 1),
                LatticePoint::new(n - 1, 0),
            ],
        }
    }

    pub fn canonical_polygon(&self) -> NewtonPolygon {
        make_polygon(&self.canonical_points()).expect("canonical representatives are non-degenerate")
    }
}

impl std::fmt::Display for TodaClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TodaClass::Y { n, k } => write!(f, "Y({n},{k})"),
            TodaClass::L { n } => write!(f, "L({n})"),
        }
    }
}

/// Four boundary lattice points and collinear interior.
pub fn is_toda_family(poly: &NewtonPolygon) -> bool {
    if poly.boundary_points().len() != 4 {
        return false;
    }
    let int = poly.interior_points();
    if int.len() <= 2 {
        return true;
    }
    let (a, b) = (int[0], int[1]);
    int[2..]
        .iter()
        .all(|&c| LatticePoint::cross(a, b, c) == 0)
}

/// Searches for a unimodular affine map sending `p` onto `q`.
///
/// Any such map takes hull corners to hull corners preserving the cyclic
/// order, so it is determined by which corner of `q` receives corner 0 of
/// `p`: the two primitive edge directions at the corner fix the matrix.
/// Each candidate is checked against the full point sets.
pub fn equivalence(p: &NewtonPolygon, q: &NewtonPolygon) -> Option<UnimodularAffineMap> {
    if pick_data(p) != pick_data(q) || p.vertices().len() != q.vertices().len() {
        return None;
    }
    let pv = p.vertices();
    let qv = q.vertices();
    let m = pv.len();

    let corner_dirs = |v: &[LatticePoint], i: usize| {
        let w = v[i];
        let next = v[(i + 1) % m];
        let prev = v[(i + m - 1) % m];
        let (d1, _) = primitive(next.x - w.x, next.y - w.y);
        let (d2, _) = primitive(prev.x - w.x, prev.y - w.y);
        (d1, d2)
    };

    let (d1, d2) = corner_dirs(pv, 0);
    // Columns d1, d2 of the source frame; det is nonzero at a hull corner.
    let det_d = d1.0 * d2.1 - d2.0 * d1.1;
    let p_points = p.all_points();
    let q_set: BTreeSet<LatticePoint> = q.all_points().into_iter().collect();

    for j in 0..m {
        let (f1, f2) = corner_dirs(qv, j);
        // Solve A * [d1 d2] = [f1 f2] over the integers.
        let num = [
            [f1.0 * d2.1 - f2.0 * d1.1, f2.0 * d1.0 - f1.0 * d2.0],
            [f1.1 * d2.1 - f2.1 * d1.1, f2.1 * d1.0 - f1.1 * d2.0],
        ];
        if num.iter().flatten().any(|&e| e % det_d != 0) {
            continue;
        }
        let a = [
            [num[0][0] / det_d, num[0][1] / det_d],
            [num[1][0] / det_d, num[1][1] / det_d],
        ];
        if a[0][0] * a[1][1] - a[0][1] * a[1][0] != 1 {
            continue;
        }
        let v0 = pv[0];
        let w = qv[j];
        let t = [
            w.x - a[0][0] * v0.x - a[0][1] * v0.y,
            w.y - a[1][0] * v0.x - a[1][1] * v0.y,
        ];
        let map = UnimodularAffineMap { a, t };
        if p_points.iter().all(|&pt| q_set.contains(&map.apply(pt))) {
            return Some(map);
        }
    }
    None
}

/// Identifies a Toda-family polygon, returning its class label and the map
/// onto the canonical representative.  `None` when the polygon is not in
/// the family.
pub fn classify_toda(poly: &NewtonPolygon) -> Option<(TodaClass, UnimodularAffineMap)> {
    if !is_toda_family(poly) {
        return None;
    }
    let pd = pick_data(poly);
    debug_assert_eq!(pd.double_area % 2, 0);
    let n = pd.double_area / 2;
    // Y labels are preferred, so the small L shapes resolve to Y(1,1) and
    // Y(2,1) rather than getting a redundant second name.
    for k in 0..=n {
        let class = TodaClass::Y { n, k };
        if let Some(map) = equivalence(poly, &class.canonical_polygon()) {
            return Some((class, map));
        }
    }
    if n >= 3 {
        let class = TodaClass::L { n };
        if let Some(map) = equivalence(poly, &class.canonical_polygon()) {
            return Some((class, map));
        }
    }
    None
}

const CANONICAL_SEARCH_DEPTH: usize = 12;

/// Translation-normalised point set minimised over SL(2,Z), computed by
/// breadth-first search over words in the rotation and shear generators.
///
/// Signatures are compared by total coordinate mass first and only then
/// lexicographically: a pure lexicographic objective is unbounded under
/// repeated shears and would never stabilise, while the mass has a global
/// minimum that the search reaches well inside the default depth for the
/// polygon sizes handled here.  Equality of canonical forms certifies
/// equivalence; `equivalence` remains the decision procedure when a
/// witness map is needed.
pub fn canonical_form(poly: &NewtonPolygon) -> Vec<LatticePoint> {
    canonical_form_depth(poly, CANONICAL_SEARCH_DEPTH)
}

pub fn canonical_form_depth(poly: &NewtonPolygon, depth: usize) -> Vec<LatticePoint> {
    // S, T, T^{-1}: these generate SL(2,Z).
    const GENS: [[[i64; 2]; 2]; 3] = [[[0, -1], [1, 0]], [[1, 1], [0, 1]], [[1, -1], [0, 1]]];

    fn normalize(mut pts: Vec<LatticePoint>) -> Vec<LatticePoint> {
        pts.sort();
        let base = pts[0];
        for p in &mut pts {
            p.x -= base.x;
            p.y -= base.y;
        }
        pts
    }

    fn mass(pts: &[LatticePoint]) -> i64 {
        pts.iter().map(|p| p.x.abs() + p.y.abs()).sum()
    }

    let better = |a: &[LatticePoint], b: &[LatticePoint]| -> bool {
        (mass(a), a) < (mass(b), b)
    };

    let start = normalize(poly.all_points());
    let mut best = start.clone();
    let mut seen: BTreeSet<Vec<LatticePoint>> = BTreeSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    for _ in 0..depth {
        let mut next = Vec::new();
        for sig in &frontier {
            for g in GENS {
                let img = normalize(
                    sig.iter()
                        .map(|p| {
                            LatticePoint::new(
                                g[0][0] * p.x + g[0][1] * p.y,
                                g[1][0] * p.x + g[1][1] * p.y,
                            )
                        })
                        .collect(),
                );
                if seen.insert(img.clone()) {
                    if better(&img, &best) {
                        best = img.clone();
                    }
                    next.push(img);
                }
            }
        }
        frontier = next;
    }
    best
}
