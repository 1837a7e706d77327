//! The mode-tagged scalar evolved by all lattice dynamics.

use crate::cplx::Cplx;
use crate::rat::{parse_rat, rat_pow_i64, rat_pow_rat, rat_to_string, Rat};
use crate::real::Ctx;
use crate::ArithError;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rat),
    Num(Cplx),
}

/// Serialization mirror: exact "num/den" string or [re, im] decimal strings.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ScalarRepr {
    Exact(String),
    Num([String; 2]),
}

impl Scalar {
    pub fn zero_like(&self, ctx: Ctx) -> Scalar {
        match self {
            Scalar::Exact(_) => Scalar::Exact(Rat::zero()),
            Scalar::Num(_) => Scalar::Num(Cplx::zero(ctx)),
        }
    }

    pub fn one_exact() -> Scalar {
        Scalar::Exact(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Scalar {
        Scalar::Exact(r)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Num(c) => c.is_zero(),
        }
    }

    pub fn add(&self, o: &Scalar, ctx: Ctx) -> Result<Scalar, ArithError> {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a + b)),
            (Scalar::Num(a), Scalar::Num(b)) => Ok(Scalar::Num(a.add(b, ctx))),
            _ => Err(ArithError::ModeMix),
        }
    }

    pub fn sub(&self, o: &Scalar, ctx: Ctx) -> Result<Scalar, ArithError> {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a - b)),
            (Scalar::Num(a), Scalar::Num(b)) => Ok(Scalar::Num(a.sub(b, ctx))),
            _ => Err(ArithError::ModeMix),
        }
    }

    pub fn mul(&self, o: &Scalar, ctx: Ctx) -> Result<Scalar, ArithError> {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a * b)),
            (Scalar::Num(a), Scalar::Num(b)) => Ok(Scalar::Num(a.mul(b, ctx))),
            _ => Err(ArithError::ModeMix),
        }
    }

    pub fn div(&self, o: &Scalar, ctx: Ctx) -> Result<Scalar, ArithError> {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                if b.is_zero() {
                    Err(ArithError::DivisionByZero)
                } else {
                    Ok(Scalar::Exact(a / b))
                }
            }
            (Scalar::Num(a), Scalar::Num(b)) => {
                a.div(b, ctx).map(Scalar::Num).ok_or(ArithError::DivisionByZero)
            }
            _ => Err(ArithError::ModeMix),
        }
    }

    pub fn neg(&self, ctx: Ctx) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(-a),
            Scalar::Num(a) => Scalar::Num(a.neg(ctx)),
        }
    }

    pub fn pow_i64(&self, e: i64, ctx: Ctx) -> Result<Scalar, ArithError> {
        match self {
            Scalar::Exact(a) => rat_pow_i64(a, e).map(Scalar::Exact),
            Scalar::Num(a) => a.pow_i64(e, ctx).map(Scalar::Num).ok_or(ArithError::DivisionByZero),
        }
    }

    /// Fractional power: exact mode needs an exact rational branch,
    /// numeric mode takes the principal branch.
    pub fn pow_rat(&self, e: &Rat, ctx: Ctx) -> Result<Scalar, ArithError> {
        match self {
            Scalar::Exact(a) => rat_pow_rat(a, e).map(Scalar::Exact),
            Scalar::Num(a) => a.pow_rat(e, ctx).map(Scalar::Num).ok_or(ArithError::DivisionByZero),
        }
    }

    /// Exact equality in exact mode; |difference| < 2^tol_exp2 in numeric mode.
    pub fn close_to(&self, o: &Scalar, tol_exp2: i64, ctx: Ctx) -> bool {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            (Scalar::Num(a), Scalar::Num(b)) => ctx.abs_below_pow2(&a.dist(b, ctx), tol_exp2),
            _ => false,
        }
    }

    pub fn repr(&self, ctx: Ctx) -> ScalarRepr {
        match self {
            Scalar::Exact(r) => ScalarRepr::Exact(rat_to_string(r)),
            Scalar::Num(c) => ScalarRepr::Num([ctx.to_decimal(&c.re), ctx.to_decimal(&c.im)]),
        }
    }

    pub fn from_repr(repr: &ScalarRepr, ctx: Ctx) -> Result<Scalar, ArithError> {
        match repr {
            ScalarRepr::Exact(s) => parse_rat(s).map(Scalar::Exact),
            ScalarRepr::Num([re, im]) => Ok(Scalar::Num(Cplx::new(
                ctx.parse_decimal(re),
                ctx.parse_decimal(im),
            ))),
        }
    }
}
