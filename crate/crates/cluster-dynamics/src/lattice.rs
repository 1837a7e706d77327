//! Scalar fields on the twisted cylinder lattice.
//!
//! Sites (n, m) are identified with (n + N, m + k); values are stored by
//! canonical representative so periodicity is exact by construction.  The
//! quadratic exchange relation grows a field one row at a time, sweeping
//! the period until every column has been filled: a column is ready as
//! soon as both horizontal neighbors of its pivot site are known, and
//! each filled column unlocks its neighbors, so any valid strip with
//! twist 0 <= k < N is consumed in finitely many sweeps.

use crate::strip::StripShape;
use crate::ClusterError;
use arith::{Ctx, Scalar};
use std::collections::BTreeMap;

/// Which new row to derive from the current strip of values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extend {
    /// Fill (c, h_c - 1) for every column c.
    Below,
    /// Fill (c, h_c + 2) for every column c.
    Above,
}

/// A partial scalar field on the (n, m) lattice with period (N, k).
#[derive(Debug, Clone)]
pub struct XLattice {
    n: i64,
    k: i64,
    values: BTreeMap<(i64, i64), Scalar>,
}

impl XLattice {
    pub fn new(n: usize, k: i64) -> Self {
        assert!(n > 0, "period must be positive");
        XLattice { n: n as i64, k, values: BTreeMap::new() }
    }

    pub fn period(&self) -> usize {
        self.n as usize
    }

    pub fn twist(&self) -> i64 {
        self.k
    }

    fn canon(&self, n: i64, m: i64) -> (i64, i64) {
        let d = n.div_euclid(self.n);
        (n - d * self.n, m - d * self.k)
    }

    pub fn set(&mut self, n: i64, m: i64, v: Scalar) {
        let key = self.canon(n, m);
        self.values.insert(key, v);
    }

    pub fn get(&self, n: i64, m: i64) -> Option<&Scalar> {
        self.values.get(&self.canon(n, m))
    }

    pub fn contains(&self, n: i64, m: i64) -> bool {
        self.values.contains_key(&self.canon(n, m))
    }

    fn require(&self, n: i64, m: i64) -> Result<&Scalar, ClusterError> {
        self.get(n, m).ok_or(ClusterError::MissingSite { n, m })
    }

    /// Canonical sites currently holding a value.
    pub fn sites(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.values.keys().copied()
    }
}

fn one_like(v: &Scalar, ctx: Ctx) -> Scalar {
    match v {
        Scalar::Num(_) => Scalar::Num(arith::Cplx::one(ctx)),
        Scalar::Exact(_) => Scalar::one_exact(),
    }
}

fn one_plus(v: &Scalar, ctx: Ctx) -> Result<Scalar, ClusterError> {
    Ok(one_like(v, ctx).add(v, ctx)?)
}

/// The exchange relation solved for the row beyond the pivot: with pivot
/// (n, m), the product of the values straight above and below equals
/// value^2 (1 + left)(1 + right) / (1 + value)^2.
fn solve_across(
    lat: &XLattice,
    n: i64,
    m: i64,
    known: i64,
    target: i64,
    ctx: Ctx,
) -> Result<Scalar, ClusterError> {
    let pivot = lat.require(n, m)?.clone();
    let opposite = lat.require(n, known)?.clone();
    let left = lat.require(n - 1, m)?.clone();
    let right = lat.require(n + 1, m)?.clone();
    let num = pivot
        .mul(&pivot, ctx)?
        .mul(&one_plus(&left, ctx)?, ctx)?
        .mul(&one_plus(&right, ctx)?, ctx)?;
    let den = opposite.mul(&one_plus(&pivot, ctx)?.pow_i64(2, ctx)?, ctx)?;
    if den.is_zero() {
        return Err(ClusterError::SingularStep { n, m: target });
    }
    Ok(num.div(&den, ctx)?)
}

/// Grows the field by one full row on the chosen side of the strip.
///
/// Columns are processed as their stencils complete, so the order adapts
/// to the strip shape.  If a sweep stalls the first blocked site is
/// reported; this happens when the twist leaves no flat or falling
/// junction to start from.
pub fn y_system_extend(
    lat: &XLattice,
    strip: &StripShape,
    dir: Extend,
    ctx: Ctx,
) -> Result<XLattice, ClusterError> {
    let mut out = lat.clone();
    let n = strip.period() as i64;
    let mut todo: Vec<i64> = (0..n).filter(|&c| !done(&out, strip, dir, c)).collect();
    while !todo.is_empty() {
        let mut progressed = false;
        todo.retain(|&c| {
            let h = strip.height(c);
            let (pivot_m, known_m, target_m) = match dir {
                Extend::Below => (h, h + 1, h - 1),
                Extend::Above => (h + 1, h, h + 2),
            };
            let ready = out.contains(c, pivot_m)
                && out.contains(c, known_m)
                && out.contains(c - 1, pivot_m)
                && out.contains(c + 1, pivot_m);
            if !ready {
                return true;
            }
            match solve_across(&out, c, pivot_m, known_m, target_m, ctx) {
                Ok(v) => {
                    out.set(c, target_m, v);
                    progressed = true;
                    false
                }
                Err(_) => true,
            }
        });
        if !progressed {
            if let Some(&c) = todo.first() {
                let h = strip.height(c);
                let pivot_m = match dir {
                    Extend::Below => h,
                    Extend::Above => h + 1,
                };
                // Re-run the blocked column to surface its exact error.
                return Err(solve_across(
                    &out,
                    c,
                    pivot_m,
                    match dir {
                        Extend::Below => h + 1,
                        Extend::Above => h,
                    },
                    match dir {
                        Extend::Below => h - 1,
                        Extend::Above => h + 2,
                    },
                    ctx,
                )
                .unwrap_err());
            }
            break;
        }
    }
    Ok(out)
}

fn done(lat: &XLattice, strip: &StripShape, dir: Extend, c: i64) -> bool {
    let h = strip.height(c);
    match dir {
        Extend::Below => lat.contains(c, h - 1),
        Extend::Above => lat.contains(c, h + 2),
    }
}

/// Reads off the per-vertex cluster variables of a strip from the ambient
/// field.  Index 2c is the bottom vertex of column c, index 2c + 1 the
/// top one, matching the quiver built from the same block word.
///
/// The top variable divides its site value by the exchange factor of each
/// strictly higher neighbor column; the bottom variable multiplies the
/// factors of each strictly lower neighbor and divides by the value two
/// rows above its site.
pub fn assign_strip_x(
    lat: &XLattice,
    strip: &StripShape,
    ctx: Ctx,
) -> Result<Vec<Scalar>, ClusterError> {
    let n = strip.period() as i64;
    let mut out = Vec::with_capacity(2 * n as usize);
    for c in 0..n {
        let h = strip.height(c);
        let (lo, hi) = (strip.height(c - 1), strip.height(c + 1));

        let divisor = lat.require(c, h + 2)?.clone();
        if divisor.is_zero() {
            return Err(ClusterError::SingularStep { n: c, m: h + 2 });
        }
        let mut cross = one_like(&divisor, ctx);
        if lo < h {
            cross = cross.mul(&one_plus(lat.require(c - 1, h + 1)?, ctx)?, ctx)?;
        }
        if hi < h {
            cross = cross.mul(&one_plus(lat.require(c + 1, h + 1)?, ctx)?, ctx)?;
        }
        cross = cross.div(&divisor, ctx)?;

        let mut plus = lat.require(c, h + 1)?.clone();
        if lo > h {
            let f = one_plus(lat.require(c - 1, h + 2)?, ctx)?;
            if f.is_zero() {
                return Err(ClusterError::SingularStep { n: c - 1, m: h + 2 });
            }
            plus = plus.div(&f, ctx)?;
        }
        if hi > h {
            let f = one_plus(lat.require(c + 1, h + 2)?, ctx)?;
            if f.is_zero() {
                return Err(ClusterError::SingularStep { n: c + 1, m: h + 2 });
            }
            plus = plus.div(&f, ctx)?;
        }
        out.push(cross);
        out.push(plus);
    }
    Ok(out)
}

/// Builds the value field from a bilinear tau field: at every site whose
/// stencil is present,
/// x_(n,m) = zeta rho^(l + N) tau_(n-1,m-1) tau_(n+1,m-1) / tau_(n,m-1)^2
/// with l = k n - N m.
pub fn x_field_from_tau(
    tau: &XLattice,
    zeta: &Scalar,
    rho: &Scalar,
    ctx: Ctx,
) -> Result<XLattice, ClusterError> {
    let n = tau.period() as i64;
    let k = tau.twist();
    let mut out = XLattice::new(tau.period(), k);
    let sites: Vec<(i64, i64)> = tau.sites().collect();
    for (c, m) in sites {
        let m = m + 1;
        if !(tau.contains(c - 1, m - 1) && tau.contains(c + 1, m - 1) && tau.contains(c, m - 1)) {
            continue;
        }
        let center = tau.require(c, m - 1)?;
        if center.is_zero() {
            return Err(ClusterError::SingularStep { n: c, m });
        }
        let l = k * c - n * m;
        let coeff = zeta.mul(&rho.pow_i64(l + n, ctx)?, ctx)?;
        let v = coeff
            .mul(tau.require(c - 1, m - 1)?, ctx)?
            .mul(tau.require(c + 1, m - 1)?, ctx)?
            .div(&center.mul(center, ctx)?, ctx)?;
        out.set(c, m, v);
    }
    Ok(out)
}
