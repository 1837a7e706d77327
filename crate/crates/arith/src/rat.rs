//! BigRational helpers: "num/den" literals, integer powers, exact roots.

use crate::ArithError;
use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

pub fn rat_from_i64(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p/q", "p", or a decimal like "-3.25" into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, ArithError> {
    let bad = || ArithError::BadLiteral(s.to_string());
    let t = s.trim();
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let i: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mag = i.abs() * &scale + f;
        let signed = if neg { -mag } else { mag };
        return Ok(Rat::new(signed, scale));
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n))
}

pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rat_pow_i64(base: &Rat, e: i64) -> Result<Rat, ArithError> {
    if e == 0 {
        return Ok(Rat::one());
    }
    if base.is_zero() {
        if e < 0 {
            return Err(ArithError::DivisionByZero);
        }
        return Ok(Rat::zero());
    }
    let mag = e.unsigned_abs();
    let p = pow_big(base, mag);
    Ok(if e < 0 { p.recip() } else { p })
}

fn pow_big(base: &Rat, mut e: u64) -> Rat {
    let mut acc = Rat::one();
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Exact n-th root; Err(Branch) when none exists in Q.
pub fn rat_root(x: &Rat, n: u32) -> Result<Rat, ArithError> {
    assert!(n > 0);
    if n == 1 {
        return Ok(x.clone());
    }
    if x.is_zero() {
        return Ok(Rat::zero());
    }
    if x.is_negative() && n.is_multiple_of(2) {
        return Err(ArithError::Branch(format!(
            "even root of negative rational {}",
            rat_to_string(x)
        )));
    }
    let num = int_root_exact(x.numer(), n)?;
    let den = int_root_exact(x.denom(), n)?;
    Ok(Rat::new(num, den))
}

fn int_root_exact(x: &BigInt, n: u32) -> Result<BigInt, ArithError> {
    let mag = x.magnitude().nth_root(n);
    let mag = BigInt::from_biguint(Sign::Plus, mag);
    let back = num_traits::Pow::pow(&mag, n);
    let target = x.abs();
    if back != target {
        return Err(ArithError::Branch(format!("{} has no exact {}-th root", x, n)));
    }
    Ok(if x.is_negative() { -mag } else { mag })
}

/// x^(p/q) when the exact branch exists.
pub fn rat_pow_rat(base: &Rat, e: &Rat) -> Result<Rat, ArithError> {
    let q = e.denom();
    let q32: u32 = q
        .try_into()
        .map_err(|_| ArithError::Branch("root index overflow".into()))?;
    let root = rat_root(base, q32)?;
    let p: i64 = e
        .numer()
        .try_into()
        .map_err(|_| ArithError::Branch("exponent overflow".into()))?;
    rat_pow_i64(&root, p)
}
