//! Complex numbers over the arbitrary-precision reals.

use crate::rat::Rat;
use crate::real::{Ctx, Real};

#[derive(Debug, Clone, PartialEq)]
pub struct Cplx {
    pub re: Real,
    pub im: Real,
}

impl Cplx {
    pub fn new(re: Real, im: Real) -> Self {
        Cplx { re, im }
    }

    pub fn zero(ctx: Ctx) -> Self {
        Cplx::new(ctx.zero(), ctx.zero())
    }

    pub fn one(ctx: Ctx) -> Self {
        Cplx::new(ctx.from_i64(1), ctx.zero())
    }

    pub fn from_i64(ctx: Ctx, v: i64) -> Self {
        Cplx::new(ctx.from_i64(v), ctx.zero())
    }

    pub fn from_rat(ctx: Ctx, v: &Rat) -> Self {
        Cplx::new(ctx.from_rat(v), ctx.zero())
    }

    pub fn from_f64_pair(ctx: Ctx, re: f64, im: f64) -> Self {
        Cplx::new(ctx.from_f64(re), ctx.from_f64(im))
    }

    pub fn i(ctx: Ctx) -> Self {
        Cplx::new(ctx.zero(), ctx.from_i64(1))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self, ctx: Ctx) -> Self {
        Cplx::new(ctx.add(&self.re, &o.re), ctx.add(&self.im, &o.im))
    }

    pub fn sub(&self, o: &Self, ctx: Ctx) -> Self {
        Cplx::new(ctx.sub(&self.re, &o.re), ctx.sub(&self.im, &o.im))
    }

    pub fn neg(&self, ctx: Ctx) -> Self {
        Cplx::new(ctx.neg(&self.re), ctx.neg(&self.im))
    }

    pub fn mul(&self, o: &Self, ctx: Ctx) -> Self {
        let re = ctx.sub(&ctx.mul(&self.re, &o.re), &ctx.mul(&self.im, &o.im));
        let im = ctx.add(&ctx.mul(&self.re, &o.im), &ctx.mul(&self.im, &o.re));
        Cplx::new(re, im)
    }

    pub fn div(&self, o: &Self, ctx: Ctx) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        let d = ctx.add(&ctx.mul(&o.re, &o.re), &ctx.mul(&o.im, &o.im));
        let re = ctx.div(&ctx.add(&ctx.mul(&self.re, &o.re), &ctx.mul(&self.im, &o.im)), &d);
        let im = ctx.div(&ctx.sub(&ctx.mul(&self.im, &o.re), &ctx.mul(&self.re, &o.im)), &d);
        Some(Cplx::new(re, im))
    }

    pub fn conj(&self, ctx: Ctx) -> Self {
        Cplx::new(self.re.clone(), ctx.neg(&self.im))
    }

    pub fn abs2(&self, ctx: Ctx) -> Real {
        ctx.add(&ctx.mul(&self.re, &self.re), &ctx.mul(&self.im, &self.im))
    }

    pub fn abs(&self, ctx: Ctx) -> Real {
        ctx.sqrt(&self.abs2(ctx))
    }

    pub fn exp(&self, ctx: Ctx) -> Self {
        let r = ctx.exp(&self.re);
        Cplx::new(ctx.mul(&r, &ctx.cos(&self.im)), ctx.mul(&r, &ctx.sin(&self.im)))
    }

    /// Principal logarithm; None at zero.
    pub fn ln(&self, ctx: Ctx) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mag = self.abs2(ctx);
        let re = ctx.div(&ctx.ln(&mag), &ctx.from_i64(2));
        let im = ctx.atan2(&self.im, &self.re);
        Some(Cplx::new(re, im))
    }

    pub fn pow_i64(&self, e: i64, ctx: Ctx) -> Option<Self> {
        if e == 0 {
            return Some(Cplx::one(ctx));
        }
        if self.is_zero() {
            return if e > 0 { Some(Cplx::zero(ctx)) } else { None };
        }
        let mut acc = Cplx::one(ctx);
        let mut sq = self.clone();
        let mut m = e.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&sq, ctx);
            }
            m >>= 1;
            if m > 0 {
                sq = sq.mul(&sq, ctx);
            }
        }
        if e < 0 {
            Cplx::one(ctx).div(&acc, ctx)
        } else {
            Some(acc)
        }
    }

    /// Principal branch power with rational exponent.
    pub fn pow_rat(&self, e: &Rat, ctx: Ctx) -> Option<Self> {
        use num_traits::{One, Zero};
        if e.is_zero() {
            return Some(Cplx::one(ctx));
        }
        if e.denom().is_one() {
            let n: i64 = e.numer().try_into().ok()?;
            return self.pow_i64(n, ctx);
        }
        let l = self.ln(ctx)?;
        let s = Cplx::new(ctx.mul(&l.re, &ctx.from_rat(e)), ctx.mul(&l.im, &ctx.from_rat(e)));
        Some(s.exp(ctx))
    }

    pub fn dist(&self, o: &Self, ctx: Ctx) -> Real {
        self.sub(o, ctx).abs(ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_from_i64;

    #[test]
    fn field_ops() {
        let ctx = Ctx::new(192);
        let a = Cplx::from_f64_pair(ctx, 1.5, -2.25);
        let b = Cplx::from_f64_pair(ctx, -0.5, 3.0);
        let q = a.div(&b, ctx).unwrap();
        let back = q.mul(&b, ctx);
        assert!(ctx.abs_below_pow2(&back.dist(&a, ctx), -180));
    }

    #[test]
    fn exp_ln_principal() {
        let ctx = Ctx::new(256);
        let z = Cplx::from_f64_pair(ctx, 0.3, 1.1);
        let w = z.ln(ctx).unwrap().exp(ctx);
        assert!(ctx.abs_below_pow2(&w.dist(&z, ctx), -246));
    }

    #[test]
    fn rational_power_on_positive_axis_matches_exact() {
        let ctx = Ctx::new(256);
        let z = Cplx::from_rat(ctx, &rat_from_i64(8, 27));
        let w = z.pow_rat(&rat_from_i64(1, 3), ctx).unwrap();
        let expect = Cplx::from_rat(ctx, &rat_from_i64(2, 3));
        assert!(ctx.abs_below_pow2(&w.dist(&expect, ctx), -246));
        assert!(ctx.abs_below_pow2(&w.im, -246));
    }

    #[test]
    fn i_squared() {
        let ctx = Ctx::new(128);
        let m = Cplx::i(ctx).mul(&Cplx::i(ctx), ctx);
        let expect = Cplx::from_i64(ctx, -1);
        assert!(ctx.abs_below_pow2(&m.dist(&expect, ctx), -125));
    }
}
