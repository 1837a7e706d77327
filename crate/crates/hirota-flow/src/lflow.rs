//! Ladder recursion with a sliding window of 2N values.
//!
//! One step appends a single value: the new slot is bilinear in the two
//! windows it straddles and the coefficient picks up one power of the
//! fractional multiplier per step.  In centered form, slot `c` ties
//! together slots `c +- N`, `c +- (N - 1)` and `c +- (N - 2)`:
//!
//! ```text
//! t[c+N] t[c-N] = t[c+N-1] t[c-N+1] + z0 * q^(anchor + c - N) * t[c+N-2] t[c-N+2]
//! ```
//!
//! with `q` the fractional multiplier.  For half period 2 and anchor 3
//! the exponent equals the one-based center index, and the orbit maps
//! onto the twist-one two-column lattice by a quadratic-cubic rescale;
//! [`map_to_y21`] performs that change of variables.

use std::collections::BTreeMap;

use arith::{Ctx, Scalar};

use crate::params::HirotaParams;
use crate::HirotaError;

/// Orbit of the ladder recursion.  Slots are indexed from zero; the seed
/// fills slots `0..2N` and each step appends one more.
#[derive(Debug, Clone)]
pub struct LOrbit {
    half_period: i64,
    z0: Scalar,
    q_frac: Scalar,
    anchor: i64,
    taus: Vec<Scalar>,
}

impl LOrbit {
    /// `q_frac` is the fractional-power primitive of the multiplier (its
    /// (2N-1)-th root); `anchor` offsets the exponent of the first
    /// appended coefficient.  `z0` may vanish, degenerating the step to
    /// a three-term ladder.  The seed window must be free of zeros.
    pub fn new(
        half_period: i64,
        z0: Scalar,
        q_frac: Scalar,
        anchor: i64,
        window: Vec<Scalar>,
    ) -> Result<Self, HirotaError> {
        if half_period < 2 {
            return Err(HirotaError::BadInput(
                "the ladder needs half period at least 2".into(),
            ));
        }
        if q_frac.is_zero() {
            return Err(HirotaError::BadInput(
                "the fractional multiplier must be nonzero".into(),
            ));
        }
        if window.len() != 2 * half_period as usize {
            return Err(HirotaError::BadInput(format!(
                "the seed window must have length {}",
                2 * half_period
            )));
        }
        if let Some(i) = window.iter().position(Scalar::is_zero) {
            return Err(HirotaError::ZeroTau { n: i as i64, m: 0 });
        }
        Ok(LOrbit {
            half_period,
            z0,
            q_frac,
            anchor,
            taus: window,
        })
    }

    pub fn half_period(&self) -> i64 {
        self.half_period
    }

    pub fn anchor(&self) -> i64 {
        self.anchor
    }

    pub fn z0(&self) -> &Scalar {
        &self.z0
    }

    pub fn q_frac(&self) -> &Scalar {
        &self.q_frac
    }

    pub fn len(&self) -> usize {
        self.taus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taus.is_empty()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.taus
    }

    /// Append `steps` new slots.
    pub fn extend(&mut self, steps: usize, ctx: Ctx) -> Result<(), HirotaError> {
        for _ in 0..steps {
            self.step(ctx)?;
        }
        Ok(())
    }

    fn step(&mut self, ctx: Ctx) -> Result<(), HirotaError> {
        let m = self.taus.len();
        let w = 2 * self.half_period as usize;
        let divisor = &self.taus[m - w];
        if divisor.is_zero() {
            return Err(HirotaError::SingularStep {
                n: (m - w) as i64,
                m: 0,
            });
        }
        let e = self.anchor + m as i64 - 2 * self.half_period;
        let coeff = self.z0.mul(&self.q_frac.pow_i64(e, ctx)?, ctx)?;
        let head = self.taus[m - 1].mul(&self.taus[m - w + 1], ctx)?;
        let tail = self.taus[m - 2].mul(&self.taus[m - w + 2], ctx)?;
        let v = head
            .add(&coeff.mul(&tail, ctx)?, ctx)?
            .div(divisor, ctx)?;
        if v.is_zero() {
            return Err(HirotaError::ZeroTau { n: m as i64, m: 0 });
        }
        self.taus.push(v);
        Ok(())
    }

    /// Residual of the centered relation at slot `center` (zero-based).
    /// Defined for `half_period <= center <= len - 1 - half_period`.
    pub fn centered_residual(&self, center: usize, ctx: Ctx) -> Result<Scalar, HirotaError> {
        let n = self.half_period as usize;
        if center < n || center + n >= self.taus.len() {
            return Err(HirotaError::MissingSite {
                n: center as i64,
                m: 0,
            });
        }
        let t = |i: usize| &self.taus[i];
        let e = self.anchor + center as i64 - self.half_period;
        let coeff = self.z0.mul(&self.q_frac.pow_i64(e, ctx)?, ctx)?;
        let lhs = t(center + n).mul(t(center - n), ctx)?;
        let mid = t(center + n - 1).mul(t(center - n + 1), ctx)?;
        let far = t(center + n - 2).mul(t(center - n + 2), ctx)?;
        Ok(lhs
            .sub(&mid, ctx)?
            .sub(&coeff.mul(&far, ctx)?, ctx)?)
    }
}

fn agree(a: &Scalar, b: &Scalar, ctx: Ctx) -> bool {
    if a.is_exact() && b.is_exact() {
        a == b
    } else {
        a.close_to(b, -120, ctx)
    }
}

/// Change of variables carrying a half-period-2, anchor-3 ladder orbit
/// onto the twist-one two-column lattice.
///
/// The slot values are rescaled by `z0^(u^2/8) * q^(u^3/72)` (u the
/// one-based slot index) and reindexed by `j = -u`; the images satisfy
/// the weight-graded recursion of the `(N, k) = (2, 1)` lattice with
/// coefficient primitives `zeta = z0^(-3/4)` and `rho = q^(1/4)`.  The
/// fractional powers force the caller to fix branches up front:
/// `z0_8` must be an 8th root of `z0` and `q_72` a 72nd root of the
/// multiplier, so `q_72^24 = q_frac`.  Returns the lattice parameters
/// and the map `j -> tau_hat(j)`; every `j` satisfies `j = l`, the
/// weight on the target lattice.
pub fn map_to_y21(
    orbit: &LOrbit,
    z0_8: &Scalar,
    q_72: &Scalar,
    ctx: Ctx,
) -> Result<(HirotaParams, BTreeMap<i64, Scalar>), HirotaError> {
    if orbit.half_period() != 2 {
        return Err(HirotaError::BadInput(
            "the change of variables needs half period 2".into(),
        ));
    }
    if orbit.anchor() != 3 {
        return Err(HirotaError::BadInput(
            "the change of variables needs the coefficient anchored at 3".into(),
        ));
    }
    if !agree(&z0_8.pow_i64(8, ctx)?, orbit.z0(), ctx) {
        return Err(HirotaError::BadInput(
            "z0_8 is not an 8th root of the base coefficient".into(),
        ));
    }
    if !agree(&q_72.pow_i64(24, ctx)?, orbit.q_frac(), ctx) {
        return Err(HirotaError::BadInput(
            "q_72^24 does not reproduce the fractional multiplier".into(),
        ));
    }
    let mut out = BTreeMap::new();
    for (i, v) in orbit.values().iter().enumerate() {
        let u = i as i64 + 1;
        let scale = z0_8
            .pow_i64(-u * u, ctx)?
            .mul(&q_72.pow_i64(-u * u * u, ctx)?, ctx)?;
        out.insert(-u, v.mul(&scale, ctx)?);
    }
    let zeta_hat = z0_8.pow_i64(-6, ctx)?;
    let rho_hat = q_72.pow_i64(18, ctx)?;
    let params = HirotaParams::new(2, 1, zeta_hat, rho_hat)?;
    Ok((params, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use arith::parse_rat;

    const CTX: Ctx = Ctx { prec: 192 };

    fn r(s: &str) -> Scalar {
        Scalar::from_rat(parse_rat(s).unwrap())
    }

    #[test]
    fn every_appended_slot_satisfies_the_centered_relation() {
        for half in [2i64, 3] {
            let window: Vec<Scalar> = (1..=2 * half)
                .map(|i| r(&format!("{}/{}", i + 1, i)))
                .collect();
            let mut orbit = LOrbit::new(half, r("2/3"), r("1/2"), 4, window).unwrap();
            orbit.extend(6, CTX).unwrap();
            for c in (half as usize)..(orbit.len() - half as usize) {
                assert!(orbit.centered_residual(c, CTX).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn a_vanishing_base_coefficient_gives_the_three_term_ladder() {
        let window = vec![r("1"), r("2"), r("3"), r("4")];
        let mut orbit = LOrbit::new(2, r("0"), r("1/2"), 3, window).unwrap();
        orbit.extend(3, CTX).unwrap();
        assert_eq!(orbit.values()[4], r("8"));
        assert_eq!(orbit.values()[5], r("12"));
        assert_eq!(orbit.values()[6], r("16"));
    }

    #[test]
    fn the_rescale_rejects_wrong_roots_and_wrong_anchors() {
        let window = vec![r("1"), r("2"), r("3"), r("4")];
        let w = r("1/2");
        let q72 = r("2/3");
        let z0 = w.pow_i64(8, CTX).unwrap();
        let qf = q72.pow_i64(24, CTX).unwrap();
        let good = LOrbit::new(2, z0.clone(), qf.clone(), 3, window.clone()).unwrap();
        assert!(map_to_y21(&good, &w, &q72, CTX).is_ok());
        assert!(map_to_y21(&good, &r("1/3"), &q72, CTX).is_err());
        assert!(map_to_y21(&good, &w, &r("1/3"), CTX).is_err());
        let anchored = LOrbit::new(2, z0, qf, 4, window).unwrap();
        assert!(map_to_y21(&anchored, &w, &q72, CTX).is_err());
    }

    #[test]
    fn seed_zeros_are_rejected_by_slot() {
        let window = vec![r("1"), r("0"), r("3"), r("4")];
        assert!(matches!(
            LOrbit::new(2, r("1"), r("1/2"), 3, window),
            Err(HirotaError::ZeroTau { n: 1, m: 0 })
        ));
    }
}
