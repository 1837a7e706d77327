//! Tropical monomials z0^alpha q^beta with rational exponents.
//!
//! Multiplication adds exponent vectors; tropical addition takes the
//! componentwise minimum, but is only accepted when one operand dominates
//! the other, so that the sum is again one of the operands.  Incomparable
//! operands signal that a coefficient stopped being a pure monomial, which
//! callers must see rather than have resolved silently.

use crate::ClusterError;
use arith::{rat_from_i64, rat_to_string, Rat};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalMonomial {
    pub alpha: Rat,
    pub beta: Rat,
}

impl TropicalMonomial {
    pub fn new(alpha: Rat, beta: Rat) -> Self {
        TropicalMonomial { alpha, beta }
    }

    /// The multiplicative unit z0^0 q^0.
    pub fn one() -> Self {
        TropicalMonomial { alpha: Rat::zero(), beta: Rat::zero() }
    }

    pub fn is_one(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    pub fn mul(&self, o: &Self) -> Self {
        TropicalMonomial { alpha: &self.alpha + &o.alpha, beta: &self.beta + &o.beta }
    }

    pub fn inv(&self) -> Self {
        TropicalMonomial { alpha: -self.alpha.clone(), beta: -self.beta.clone() }
    }

    pub fn pow_i64(&self, e: i64) -> Self {
        let f = rat_from_i64(e, 1);
        TropicalMonomial { alpha: &self.alpha * &f, beta: &self.beta * &f }
    }

    /// Tropical sum.  Defined only when the exponent vectors are ordered
    /// componentwise; the smaller operand is the value of the sum.
    pub fn oplus(&self, o: &Self) -> Result<Self, ClusterError> {
        let le = self.alpha <= o.alpha && self.beta <= o.beta;
        let ge = self.alpha >= o.alpha && self.beta >= o.beta;
        if le {
            Ok(self.clone())
        } else if ge {
            Ok(o.clone())
        } else {
            Err(ClusterError::TropicalSum { a: self.to_string(), b: o.to_string() })
        }
    }

    /// Tropical (1 + self), the factor appearing in every exchange.
    pub fn one_plus(&self) -> Result<Self, ClusterError> {
        TropicalMonomial::one().oplus(self)
    }
}

impl std::fmt::Display for TropicalMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "z0^({}) q^({})", rat_to_string(&self.alpha), rat_to_string(&self.beta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use arith::parse_rat;

    fn mono(a: &str, b: &str) -> TropicalMonomial {
        TropicalMonomial::new(parse_rat(a).unwrap(), parse_rat(b).unwrap())
    }

    #[test]
    fn multiplication_adds_exponents() {
        let m = mono("1/3", "-2/9").mul(&mono("2/3", "2/9"));
        assert_eq!(m, mono("1", "0"));
        assert!(m.mul(&mono("-1", "0")).is_one());
    }

    #[test]
    fn powers_scale_exponents() {
        assert_eq!(mono("1/2", "1/4").pow_i64(-2), mono("-1", "-1/2"));
        assert_eq!(mono("1/2", "1/4").inv(), mono("-1/2", "-1/4"));
    }

    #[test]
    fn comparable_sums_pick_the_smaller_operand() {
        let lo = mono("0", "1/4");
        let hi = mono("1/2", "1/4");
        assert_eq!(lo.oplus(&hi).unwrap(), lo);
        assert_eq!(hi.oplus(&lo).unwrap(), lo);
        assert_eq!(hi.one_plus().unwrap(), TropicalMonomial::one());
        assert_eq!(hi.inv().one_plus().unwrap(), hi.inv());
    }

    #[test]
    fn incomparable_sums_are_reported() {
        let a = mono("1/2", "-1/4");
        let err = a.one_plus().unwrap_err();
        assert!(matches!(err, ClusterError::TropicalSum { .. }));
    }
}
