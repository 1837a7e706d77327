//! Lattice points and the affine unimodular group SL(2,Z) x Z^2.

use crate::PolygonError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// Cross product of (b - a) and (c - a).  Positive iff a,b,c turn left.
    pub fn cross(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i64 {
        (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Primitive vector in the direction of (dx, dy), with the number of
/// lattice steps it was shortened by.
pub fn primitive(dx: i64, dy: i64) -> ((i64, i64), i64) {
    let g = gcd(dx, dy);
    debug_assert!(g > 0, "primitive direction of zero vector");
    ((dx / g, dy / g), g)
}

/// An element of SL(2,Z) x Z^2 acting as p -> A p + t.
///
/// Determinant is pinned to +1: orientation-reversing identifications are
/// not part of the equivalence used here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodularAffineMap {
    /// Row-major 2x2 matrix.
    pub a: [[i64; 2]; 2],
    pub t: [i64; 2],
}

impl UnimodularAffineMap {
    pub fn new(a: [[i64; 2]; 2], t: [i64; 2]) -> Result<Self, PolygonError> {
        let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if det != 1 {
            return Err(PolygonError::NotUnimodular { det });
        }
        Ok(UnimodularAffineMap { a, t })
    }

    pub fn identity() -> Self {
        UnimodularAffineMap {
            a: [[1, 0], [0, 1]],
            t: [0, 0],
        }
    }

    /// Quarter turn, the S generator of SL(2,Z).
    pub fn rotation() -> Self {
        UnimodularAffineMap {
            a: [[0, -1], [1, 0]],
            t: [0, 0],
        }
    }

    /// Shear (x, y) -> (x + s y, y), a power of the T generator.
    pub fn shear(s: i64) -> Self {
        UnimodularAffineMap {
            a: [[1, s], [0, 1]],
            t: [0, 0],
        }
    }

    pub fn translation(tx: i64, ty: i64) -> Self {
        UnimodularAffineMap {
            a: [[1, 0], [0, 1]],
            t: [tx, ty],
        }
    }

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        LatticePoint {
            x: self.a[0][0] * p.x + self.a[0][1] * p.y + self.t[0],
            y: self.a[1][0] * p.x + self.a[1][1] * p.y + self.t[1],
        }
    }

    /// self after other: (self * other)(p) = self(other(p)).
    pub fn compose(&self, other: &UnimodularAffineMap) -> UnimodularAffineMap {
        let a = [
            [
                self.a[0][0] * other.a[0][0] + self.a[0][1] * other.a[1][0],
                self.a[0][0] * other.a[0][1] + self.a[0][1] * other.a[1][1],
            ],
            [
                self.a[1][0] * other.a[0][0] + self.a[1][1] * other.a[1][0],
                self.a[1][0] * other.a[0][1] + self.a[1][1] * other.a[1][1],
            ],
        ];
        let t = [
            self.a[0][0] * other.t[0] + self.a[0][1] * other.t[1] + self.t[0],
            self.a[1][0] * other.t[0] + self.a[1][1] * other.t[1] + self.t[1],
        ];
        UnimodularAffineMap { a, t }
    }

    pub fn inverse(&self) -> UnimodularAffineMap {
        // det = +1, so the inverse matrix is the adjugate.
        let a = [
            [self.a[1][1], -self.a[0][1]],
            [-self.a[1][0], self.a[0][0]],
        ];
        let t = [
            -(a[0][0] * self.t[0] + a[0][1] * self.t[1]),
            -(a[1][0] * self.t[0] + a[1][1] * self.t[1]),
        ];
        UnimodularAffineMap { a, t }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse_cancel() {
        let m = UnimodularAffineMap::rotation()
            .compose(&UnimodularAffineMap::shear(3))
            .compose(&UnimodularAffineMap::translation(-2, 5));
        let id = m.compose(&m.inverse());
        assert_eq!(id, UnimodularAffineMap::identity());
        let p = LatticePoint::new(7, -4);
        assert_eq!(m.inverse().apply(m.apply(p)), p);
    }

    #[test]
    fn determinant_is_enforced() {
        assert!(UnimodularAffineMap::new([[1, 0], [0, -1]], [0, 0]).is_err());
        assert!(UnimodularAffineMap::new([[2, 0], [0, 1]], [0, 0]).is_err());
        assert!(UnimodularAffineMap::new([[2, 1], [1, 1]], [3, 3]).is_ok());
    }
}
