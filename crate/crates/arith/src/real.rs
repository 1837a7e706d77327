//! Real arbitrary-precision layer over astro-float.
//!
//! All operations go through a Ctx carrying the working precision; the
//! constants cache is thread-local so contexts stay Send + Sync.

use crate::rat::Rat;
use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_traits::Zero;
use std::cell::RefCell;

pub type Real = BigFloat;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ctx {
    pub prec: usize,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx { prec: crate::DEFAULT_PREC }
    }
}

impl Ctx {
    pub fn new(prec: usize) -> Self {
        assert!(prec >= 64, "numeric mode requires at least 64 bits");
        Ctx { prec }
    }

    pub fn zero(&self) -> Real {
        BigFloat::from_word(0, self.prec)
    }

    pub fn from_i64(&self, v: i64) -> Real {
        BigFloat::from_i64(v, self.prec)
    }

    pub fn from_f64(&self, v: f64) -> Real {
        BigFloat::from_f64(v, self.prec)
    }

    pub fn from_bigint(&self, v: &BigInt) -> Real {
        let (sign, mag) = v.clone().into_parts();
        let words = mag.to_u64_digits();
        if words.is_empty() {
            return self.zero();
        }
        let s = if sign == num_bigint::Sign::Minus { Sign::Neg } else { Sign::Pos };
        let bits = (words.len() * 64) as astro_float::Exponent;
        let mut f = BigFloat::from_words(&words, s, bits);
        f.set_precision(self.prec, RM).expect("precision");
        f
    }

    pub fn from_rat(&self, v: &Rat) -> Real {
        if v.is_zero() {
            return self.zero();
        }
        // extra guard bits so the quotient rounds correctly at prec
        let wide = Ctx { prec: self.prec + 64 };
        let n = wide.from_bigint(v.numer());
        let d = wide.from_bigint(v.denom());
        let mut q = n.div(&d, self.prec + 64, RM);
        q.set_precision(self.prec, RM).expect("precision");
        q
    }

    pub fn add(&self, a: &Real, b: &Real) -> Real {
        a.add(b, self.prec, RM)
    }

    pub fn sub(&self, a: &Real, b: &Real) -> Real {
        a.sub(b, self.prec, RM)
    }

    pub fn mul(&self, a: &Real, b: &Real) -> Real {
        a.mul(b, self.prec, RM)
    }

    pub fn div(&self, a: &Real, b: &Real) -> Real {
        a.div(b, self.prec, RM)
    }

    pub fn neg(&self, a: &Real) -> Real {
        a.neg()
    }

    pub fn abs(&self, a: &Real) -> Real {
        let mut x = a.clone();
        x.set_sign(Sign::Pos);
        x
    }

    pub fn sqrt(&self, a: &Real) -> Real {
        a.sqrt(self.prec, RM)
    }

    pub fn exp(&self, a: &Real) -> Real {
        with_cc(|cc| a.exp(self.prec, RM, cc))
    }

    pub fn ln(&self, a: &Real) -> Real {
        with_cc(|cc| a.ln(self.prec, RM, cc))
    }

    pub fn sin(&self, a: &Real) -> Real {
        with_cc(|cc| a.sin(self.prec, RM, cc))
    }

    pub fn cos(&self, a: &Real) -> Real {
        with_cc(|cc| a.cos(self.prec, RM, cc))
    }

    pub fn atan2(&self, y: &Real, x: &Real) -> Real {
        // principal argument in (-pi, pi]
        let pi = self.pi();
        if x.is_zero() && y.is_zero() {
            return self.zero();
        }
        if x.is_positive() || x.is_zero() {
            if x.is_zero() {
                let half = self.div(&pi, &self.from_i64(2));
                return if y.is_negative() { half.neg() } else { half };
            }
            return with_cc(|cc| self.div(y, x).atan(self.prec, RM, cc));
        }
        let base = with_cc(|cc| self.div(y, x).atan(self.prec, RM, cc));
        if y.is_negative() {
            self.sub(&base, &pi)
        } else {
            self.add(&base, &pi)
        }
    }

    pub fn pi(&self) -> Real {
        with_cc(|cc| cc.pi(self.prec, RM))
    }

    pub fn pow_i64(&self, a: &Real, e: i64) -> Real {
        if e == 0 {
            return self.from_i64(1);
        }
        let p = a.powi(e.unsigned_abs() as usize, self.prec, RM);
        if e < 0 {
            p.reciprocal(self.prec, RM)
        } else {
            p
        }
    }

    /// a^x for a > 0 via exp(x ln a).
    pub fn pow(&self, a: &Real, x: &Real) -> Real {
        with_cc(|cc| a.pow(x, self.prec, RM, cc))
    }

    pub fn lt(&self, a: &Real, b: &Real) -> bool {
        matches!(a.cmp(b), Some(c) if c < 0)
    }

    /// |a| < 2^e2
    pub fn abs_below_pow2(&self, a: &Real, e2: i64) -> bool {
        if a.is_zero() {
            return true;
        }
        match a.exponent() {
            Some(e) => (e as i64) <= e2,
            None => false,
        }
    }

    pub fn to_decimal(&self, a: &Real) -> String {
        with_cc(|cc| a.format(Radix::Dec, RM, cc).expect("format"))
    }

    pub fn parse_decimal(&self, s: &str) -> Real {
        with_cc(|cc| BigFloat::parse(s, Radix::Dec, self.prec, RM, cc))
    }

    pub fn to_f64(&self, a: &Real) -> f64 {
        let s = self.to_decimal(a);
        s.parse::<f64>().unwrap_or(f64::NAN)
    }
}
