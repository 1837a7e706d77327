//! Period data and the coefficient primitives shared by all flows.

use arith::{ArithError, Ctx, Scalar};

use crate::HirotaError;

/// Arithmetic regime of an orbit.  A lattice keeps all of its values on
/// one side; mixing is rejected when parameters are built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
}

/// Cylinder period `(N, k)` together with the coefficient primitives.
///
/// `zeta` stands in for the N-th root of the base coefficient and `rho`
/// for the N^2-th root of the grading multiplier: every coefficient the
/// flows need is an integer power of these two, so no root is ever
/// extracted at runtime and the caller fixes the branch once, by choosing
/// the primitives themselves.
#[derive(Debug, Clone)]
pub struct HirotaParams {
    period: i64,
    twist: i64,
    zeta: Scalar,
    rho: Scalar,
    mode: Mode,
}

impl HirotaParams {
    /// `zeta` may vanish (the cross term drops and the flow degenerates
    /// to a two-term product recursion); `rho` must not, since sites of
    /// negative weight invert it.
    pub fn new(period: i64, twist: i64, zeta: Scalar, rho: Scalar) -> Result<Self, HirotaError> {
        if period < 1 {
            return Err(HirotaError::BadInput(format!(
                "period must be positive, got {period}"
            )));
        }
        if twist < 0 || twist > period {
            return Err(HirotaError::BadInput(format!(
                "twist must lie in 0..={period}, got {twist}"
            )));
        }
        if rho.is_zero() {
            return Err(HirotaError::BadInput("rho must be nonzero".into()));
        }
        let mode = match (zeta.is_exact(), rho.is_exact()) {
            (true, true) => Mode::Exact,
            (false, false) => Mode::Numeric,
            _ => {
                return Err(HirotaError::BadInput(
                    "zeta and rho must live in the same arithmetic".into(),
                ))
            }
        };
        Ok(HirotaParams {
            period,
            twist,
            zeta,
            rho,
            mode,
        })
    }

    pub fn period(&self) -> i64 {
        self.period
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn zeta(&self) -> &Scalar {
        &self.zeta
    }

    pub fn rho(&self) -> &Scalar {
        &self.rho
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Weight `l = k n - N m` of a site; invariant under the cylinder
    /// identification, it grades the coefficient of the cross term.
    pub fn weight(&self, n: i64, m: i64) -> i64 {
        self.twist * n - self.period * m
    }

    /// Coefficient `zeta * rho^l` multiplying the cross term at weight `l`.
    pub fn coeff(&self, l: i64, ctx: Ctx) -> Result<Scalar, ArithError> {
        self.zeta.mul(&self.rho.pow_i64(l, ctx)?, ctx)
    }

    /// Canonical representative of `(n, m)` under `(n, m) ~ (n + N, m + k)`,
    /// with column reduced into `0..N`.
    pub fn canon(&self, n: i64, m: i64) -> (i64, i64) {
        let s = n.div_euclid(self.period);
        (n - s * self.period, m - s * self.twist)
    }

    /// Bottom row of the uniform transversal at column `c`: the staircase
    /// `floor(k c / N)`, which climbs by exactly `k` over one period.
    pub fn strip_height(&self, c: i64) -> i64 {
        (self.twist * c).div_euclid(self.period)
    }

    /// One in the same arithmetic as the parameters.
    pub fn one(&self, ctx: Ctx) -> Scalar {
        match self.mode {
            Mode::Exact => Scalar::one_exact(),
            Mode::Numeric => Scalar::Num(arith::Cplx::one(ctx)),
        }
    }
}
