//! Conserved quantities of the three-site chain in log-canonical
//! variables (x1, y1, x2, y2) with spectral parameter z.
//!
//! Both twists share the same five ladder terms; they differ in the
//! z-dependent term and its monomial dressing.  The fractional powers
//! are honest 1/3 powers: in exact mode they demand perfect cubes and
//! otherwise report a branch problem rather than approximate.

use crate::ClusterError;
use arith::{rat_from_i64, Ctx, Rat, Scalar};

fn powr(base: &Scalar, num: i64, den: i64, ctx: Ctx) -> Result<Scalar, ClusterError> {
    let e: Rat = rat_from_i64(num, den);
    if e.is_integer() {
        Ok(base.pow_i64(num / den, ctx)?)
    } else {
        Ok(base.pow_rat(&e, ctx)?)
    }
}

/// The two commuting Hamiltonians of the N = 3 chain at twist k in
/// {0, 1}, evaluated at (x1, y1, x2, y2) and spectral parameter z.
pub fn n3_hamiltonians(
    k: u8,
    point: &[Scalar; 4],
    z: &Scalar,
    ctx: Ctx,
) -> Result<(Scalar, Scalar), ClusterError> {
    if k > 1 {
        return Err(ClusterError::BadInput(format!("twist {k} has no closed-form pair here")));
    }
    let [x1, y1, x2, y2] = point;
    let one = match x1 {
        Scalar::Num(_) => Scalar::Num(arith::Cplx::one(ctx)),
        Scalar::Exact(_) => Scalar::one_exact(),
    };

    let ladder = |a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar| -> Result<Scalar, ClusterError> {
        // 1 + a + ab + abc + abcd
        let t1 = a.clone();
        let t2 = t1.mul(b, ctx)?;
        let t3 = t2.mul(c, ctx)?;
        let t4 = t3.mul(d, ctx)?;
        Ok(one.add(&t1, ctx)?.add(&t2, ctx)?.add(&t3, ctx)?.add(&t4, ctx)?)
    };

    let ladder1 = ladder(y1, x1, y2, x2)?;
    let ladder2 = ladder(y2, x2, y1, x1)?;

    let (affine1, affine2) = match k {
        1 => {
            let common = powr(z, -2, 3, ctx)?
                .mul(&powr(y1, 1, 3, ctx)?, ctx)?
                .mul(&powr(x1, 4, 3, ctx)?, ctx)?
                .mul(&powr(y2, 2, 3, ctx)?, ctx)?;
            let a1 = common
                .mul(&powr(x2, 2, 3, ctx)?, ctx)?
                .mul(&one.add(x2, ctx)?, ctx)?;
            let a2 = common.mul(&powr(x2, 5, 3, ctx)?, ctx)?;
            (a1, a2)
        }
        _ => {
            let a = powr(z, -1, 1, ctx)?.mul(x1, ctx)?.mul(x2, ctx)?;
            (a.clone(), a)
        }
    };

    let p1 = x1.mul(y1, ctx)?;
    let p2 = x2.mul(y2, ctx)?;
    let den1 = powr(&p1, 2, 3, ctx)?.mul(&powr(&p2, 1, 3, ctx)?, ctx)?;
    let den2 = powr(&p1, 1, 3, ctx)?.mul(&powr(&p2, 2, 3, ctx)?, ctx)?;

    let h1 = ladder1.add(&affine1, ctx)?.div(&den1, ctx)?;
    let h2 = ladder2.add(&affine2, ctx)?.div(&den2, ctx)?;
    Ok((h1, h2))
}
