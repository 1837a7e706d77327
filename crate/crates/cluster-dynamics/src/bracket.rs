//! Finite-difference Poisson bracket oracle.
//!
//! Log-constant brackets {v_i, v_j} = c_ij v_i v_j become constant in
//! logarithmic coordinates, so {F, G} = sum c_ij dF/du_i dG/du_j with
//! u_i = log v_i.  Gradients are central differences with multiplicative
//! steps.  This is deliberately numeric-only: it is an independent check
//! against symbolic claims, not part of the exact tower.

use crate::ClusterError;
use arith::{Cplx, Ctx, Scalar};

fn require_numeric(point: &[Scalar]) -> Result<(), ClusterError> {
    if point.iter().any(|p| p.is_exact()) {
        return Err(ClusterError::BadInput(
            "finite differences run on numeric scalars only".into(),
        ));
    }
    Ok(())
}

/// Central-difference gradient of f in logarithmic coordinates:
/// component i is d f / d log v_i at the given point.
pub fn log_gradient<F>(
    f: &F,
    point: &[Scalar],
    step: f64,
    ctx: Ctx,
) -> Result<Vec<Scalar>, ClusterError>
where
    F: Fn(&[Scalar], Ctx) -> Result<Scalar, ClusterError>,
{
    require_numeric(point)?;
    let up = Scalar::Num(Cplx::from_f64_pair(ctx, step, 0.0).exp(ctx));
    let down = Scalar::Num(Cplx::from_f64_pair(ctx, -step, 0.0).exp(ctx));
    let half = Scalar::Num(Cplx::from_f64_pair(ctx, 2.0 * step, 0.0));
    let mut grad = Vec::with_capacity(point.len());
    for i in 0..point.len() {
        let mut hi = point.to_vec();
        hi[i] = hi[i].mul(&up, ctx)?;
        let mut lo = point.to_vec();
        lo[i] = lo[i].mul(&down, ctx)?;
        let diff = f(&hi, ctx)?.sub(&f(&lo, ctx)?, ctx)?;
        grad.push(diff.div(&half, ctx)?);
    }
    Ok(grad)
}

/// Finite-difference bracket of f and g under the log-constant coupling
/// matrix.  Returns the bracket value together with the sum of the
/// absolute values of its terms, the natural scale for a relative
/// tolerance.
pub fn poisson_bracket_fd<F, G>(
    coupling: &[Vec<i64>],
    f: &F,
    g: &G,
    point: &[Scalar],
    step: f64,
    ctx: Ctx,
) -> Result<(Scalar, Scalar), ClusterError>
where
    F: Fn(&[Scalar], Ctx) -> Result<Scalar, ClusterError>,
    G: Fn(&[Scalar], Ctx) -> Result<Scalar, ClusterError>,
{
    let df = log_gradient(f, point, step, ctx)?;
    let dg = log_gradient(g, point, step, ctx)?;
    let mut acc = Scalar::Num(Cplx::zero(ctx));
    let mut scale = ctx.zero();
    for (i, row) in coupling.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let cs = Scalar::Num(Cplx::from_i64(ctx, c));
            let term = cs.mul(&df[i], ctx)?.mul(&dg[j], ctx)?;
            if let Scalar::Num(t) = &term {
                scale = ctx.add(&scale, &t.abs(ctx));
            }
            acc = acc.add(&term, ctx)?;
        }
    }
    Ok((acc, Scalar::Num(Cplx::new(scale, ctx.zero()))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(ctx: Ctx, v: f64) -> Scalar {
        Scalar::Num(Cplx::from_f64_pair(ctx, v, 0.0))
    }

    #[test]
    fn coordinate_brackets_recover_the_coupling() {
        let ctx = Ctx::default();
        let coupling = vec![vec![0, 1], vec![-1, 0]];
        let point = [num(ctx, 2.0), num(ctx, 3.0)];
        let f = |p: &[Scalar], _| Ok(p[0].clone());
        let g = |p: &[Scalar], _| Ok(p[1].clone());
        let (b, scale) = poisson_bracket_fd(&coupling, &f, &g, &point, 1e-6, ctx).unwrap();
        // {v_0, v_1} = v_0 v_1 = 6; only the (0,1) term contributes, so
        // the scale matches the value.
        assert!(b.close_to(&num(ctx, 6.0), -30, ctx));
        assert!(scale.close_to(&num(ctx, 6.0), -20, ctx));
    }

    #[test]
    fn exact_points_are_rejected() {
        let ctx = Ctx::default();
        let point = [Scalar::one_exact()];
        let f = |p: &[Scalar], _ctx: Ctx| Ok(p[0].clone());
        assert!(log_gradient(&f, &point, 1e-6, ctx).is_err());
    }
}
