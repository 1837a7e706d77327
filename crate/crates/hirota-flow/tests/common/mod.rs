//! Shared helpers for the integration tests.

use arith::{parse_rat, rat_from_i64, Ctx, Scalar};
use rand::Rng;

pub const CTX: Ctx = Ctx { prec: 256 };

pub fn rat(s: &str) -> Scalar {
    Scalar::from_rat(parse_rat(s).unwrap())
}

/// Small positive rational, bounded away from zero.
pub fn random_positive_rat<R: Rng>(rng: &mut R) -> Scalar {
    let num = rng.gen_range(1..=24i64);
    let den = rng.gen_range(1..=9i64);
    Scalar::from_rat(rat_from_i64(num, den))
}
