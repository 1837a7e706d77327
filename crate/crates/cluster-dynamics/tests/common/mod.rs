//! Shared helpers: random rational fields on strips and the covariance
//! check used both by the directed cases and the fuzzed ones.
//!
//! Each integration target pulls in the subset it needs.
#![allow(dead_code)]

use arith::{rat_from_i64, Ctx, Scalar};
use cluster_dynamics::{
    assign_strip_x, mutate_x, y_system_extend, Extend, MoveDir, StripShape, XLattice, XSeed,
};
use quiver::build_quiver;
use rand::Rng;

pub fn random_positive_rat<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::from_rat(rat_from_i64(rng.gen_range(1..=9), rng.gen_range(1..=9)))
}

/// Random positive values on the two rows of the strip.
pub fn random_strip_field<R: Rng>(rng: &mut R, strip: &StripShape) -> XLattice {
    let mut lat = XLattice::new(strip.period(), strip.twist());
    for c in 0..strip.period() as i64 {
        let h = strip.height(c);
        lat.set(c, h, random_positive_rat(rng));
        lat.set(c, h + 1, random_positive_rat(rng));
    }
    lat
}

/// Mutating the assigned seed must equal assigning the moved strip, on
/// the same ambient field, vertex for vertex.
pub fn check_covariance(lat: &XLattice, strip: &StripShape, c: usize, dir: MoveDir) {
    let ctx = Ctx::default();
    let lat = y_system_extend(lat, strip, Extend::Above, ctx).expect("extend start strip");
    let moved = strip.moved(c, dir).expect("legal junction move");
    let lat = y_system_extend(&lat, &moved, Extend::Above, ctx).expect("extend moved strip");

    let quiver = build_quiver(&strip.blocks()).expect("strip word builds");
    let x = assign_strip_x(&lat, strip, ctx).expect("assign start strip");
    let seed = XSeed { quiver, x };
    let j = match dir {
        MoveDir::Lower => 2 * c + 1,
        MoveDir::Raise => 2 * c,
    };
    let mutated = mutate_x(&seed, j, ctx).expect("mutation is regular on positive data");

    let assigned = assign_strip_x(&lat, &moved, ctx).expect("assign moved strip");
    for col in 0..strip.period() {
        let (cross, plus) = mutated.quiver.column_pair(col);
        assert_eq!(
            mutated.x[cross],
            assigned[2 * col],
            "bottom variable of column {col} after moving column {c} {dir:?}"
        );
        assert_eq!(
            mutated.x[plus],
            assigned[2 * col + 1],
            "top variable of column {col} after moving column {c} {dir:?}"
        );
    }
}
