//! The cyclic linear advance of the unit-twist family.
//!
//! When the twist equals the period, a bilinear step no longer determines
//! each new tau value from known neighbours: the new row appears on both
//! sides of the recursion, once per column, cyclically.  The step is
//! still linear in the new row, so it reduces to the cyclic system solved
//! here.  [`ynn_step`] packages the variant whose right-hand side carries
//! the extra factor `1 - z`; the plain variant is what
//! [`TauLattice`](crate::TauLattice) uses internally at full twist.

use arith::{Ctx, Scalar};

use crate::params::HirotaParams;
use crate::HirotaError;

/// Solve `d[c] * x[c] - g[c] * x[c+1 mod n] = r[c]` for `x`.
///
/// The elimination is exact in the scalars' own arithmetic.  A vanishing
/// coupling `g[c]` breaks the cycle into a chain, which is solved by
/// back-substitution; otherwise the cycle is closed through an affine
/// sweep in `x[0]`.  Every equation is re-checked on the way out, so a
/// degenerate system is reported rather than silently mis-solved.
pub fn solve_cyclic(
    d: &[Scalar],
    g: &[Scalar],
    r: &[Scalar],
    ctx: Ctx,
) -> Result<Vec<Scalar>, HirotaError> {
    let n = d.len();
    if n == 0 || g.len() != n || r.len() != n {
        return Err(HirotaError::BadInput(
            "cyclic system arrays must share a positive length".into(),
        ));
    }
    let xs: Vec<Scalar> = if let Some(start) = (0..n).find(|&c| g[c].is_zero()) {
        let mut xs: Vec<Option<Scalar>> = vec![None; n];
        if d[start].is_zero() {
            return Err(HirotaError::SingularSystem);
        }
        xs[start] = Some(r[start].div(&d[start], ctx)?);
        for off in 1..n {
            let c = (start + n - off) % n;
            if d[c].is_zero() {
                return Err(HirotaError::SingularSystem);
            }
            let next = xs[(c + 1) % n].as_ref().expect("filled in cyclic order");
            let v = r[c].add(&g[c].mul(next, ctx)?, ctx)?.div(&d[c], ctx)?;
            xs[c] = Some(v);
        }
        xs.into_iter().map(|v| v.expect("all slots filled")).collect()
    } else {
        // walk x[c] = p + q * x[0] around the cycle and close it
        let one = if d[0].is_exact() {
            Scalar::one_exact()
        } else {
            Scalar::Num(arith::Cplx::one(ctx))
        };
        let mut p = d[0].zero_like(ctx);
        let mut q = one.clone();
        for c in 0..n {
            p = d[c].mul(&p, ctx)?.sub(&r[c], ctx)?.div(&g[c], ctx)?;
            q = d[c].mul(&q, ctx)?.div(&g[c], ctx)?;
        }
        let denom = one.sub(&q, ctx)?;
        if denom.is_zero() {
            return Err(HirotaError::SingularSystem);
        }
        let mut xs = Vec::with_capacity(n);
        xs.push(p.div(&denom, ctx)?);
        for c in 0..n - 1 {
            let v = d[c].mul(&xs[c], ctx)?.sub(&r[c], ctx)?.div(&g[c], ctx)?;
            xs.push(v);
        }
        xs
    };
    for c in 0..n {
        let lhs = d[c]
            .mul(&xs[c], ctx)?
            .sub(&g[c].mul(&xs[(c + 1) % n], ctx)?, ctx)?;
        let res = lhs.sub(&r[c], ctx)?;
        if res.is_exact() && !res.is_zero() {
            return Err(HirotaError::SingularSystem);
        }
    }
    Ok(xs)
}

fn check_full_twist(params: &HirotaParams, len_a: usize, len_b: usize) -> Result<usize, HirotaError> {
    if params.twist() != params.period() {
        return Err(HirotaError::BadInput(
            "the cyclic flow needs twist equal to period".into(),
        ));
    }
    let n = params.period() as usize;
    if len_a != n || len_b != n {
        return Err(HirotaError::BadInput(format!(
            "rows must have length {n}"
        )));
    }
    Ok(n)
}

/// Advance the unit-twist family one grid point forward.
///
/// `prev[j]` and `cur[j]` sample the j-th tau sequence one multiplier
/// step below and at the grid point; `l_mid` fixes the grid point through
/// the coefficient primitives, so the N-th root of the argument is
/// `zeta * rho^l_mid` and never extracted.  The step solves
///
/// ```text
/// next[j] * prev[j] - s * next[j+1] * prev[j-1] = (1 - s^N) * cur[j]^2
/// ```
///
/// cyclically for `next`, with `s` the root above.  The system is
/// singular exactly when the grid point hits 1.
pub fn ynn_step(
    prev: &[Scalar],
    cur: &[Scalar],
    l_mid: i64,
    params: &HirotaParams,
    ctx: Ctx,
) -> Result<Vec<Scalar>, HirotaError> {
    let n = check_full_twist(params, prev.len(), cur.len())?;
    let s = params.coeff(l_mid, ctx)?;
    let z = s.pow_i64(params.period(), ctx)?;
    let om = params.one(ctx).sub(&z, ctx)?;
    let mut g = Vec::with_capacity(n);
    let mut r = Vec::with_capacity(n);
    for j in 0..n {
        g.push(s.mul(&prev[(j + n - 1) % n], ctx)?);
        r.push(om.mul(&cur[j].mul(&cur[j], ctx)?, ctx)?);
    }
    solve_cyclic(prev, &g, &r, ctx)
}

/// Mirror of [`ynn_step`]: recover the row one multiplier step below from
/// the row at the grid point and the row above.
pub fn ynn_step_down(
    next: &[Scalar],
    cur: &[Scalar],
    l_mid: i64,
    params: &HirotaParams,
    ctx: Ctx,
) -> Result<Vec<Scalar>, HirotaError> {
    let n = check_full_twist(params, next.len(), cur.len())?;
    let s = params.coeff(l_mid, ctx)?;
    let z = s.pow_i64(params.period(), ctx)?;
    let om = params.one(ctx).sub(&z, ctx)?;
    // unknown y[j] couples to y[j-1]; reverse the index to reuse the solver
    let rev = |i: usize| (n - i) % n;
    let mut d = Vec::with_capacity(n);
    let mut g = Vec::with_capacity(n);
    let mut r = Vec::with_capacity(n);
    for i in 0..n {
        let j = rev(i);
        d.push(next[j].clone());
        g.push(s.mul(&next[(j + 1) % n], ctx)?);
        r.push(om.mul(&cur[j].mul(&cur[j], ctx)?, ctx)?);
    }
    let ys = solve_cyclic(&d, &g, &r, ctx)?;
    Ok((0..n).map(|j| ys[rev(j)].clone()).collect())
}

/// Residuals of the three trilinear relations an advanced period-three
/// row satisfies together with its two source rows.
///
/// Eliminating the cyclic solve from a period-three step leaves, for each
/// j, one relation trilinear in the rows:
///
/// ```text
/// next[j] prev[j] prev[j+1] = prev[j+1] cur[j]^2
///                           + s   prev[j+2] cur[j+1]^2
///                           + s^2 prev[j]   cur[j+2]^2
/// ```
///
/// All three vanish identically on [`ynn_step`] outputs.
pub fn y33_residuals(
    prev: &[Scalar],
    cur: &[Scalar],
    next: &[Scalar],
    l_mid: i64,
    params: &HirotaParams,
    ctx: Ctx,
) -> Result<Vec<Scalar>, HirotaError> {
    let n = check_full_twist(params, prev.len(), cur.len())?;
    if n != 3 || next.len() != 3 {
        return Err(HirotaError::BadInput(
            "the trilinear relations are specific to period three".into(),
        ));
    }
    let s = params.coeff(l_mid, ctx)?;
    let s2 = s.mul(&s, ctx)?;
    let sq = |j: usize| cur[j].mul(&cur[j], ctx);
    let mut out = Vec::with_capacity(3);
    for j in 0..3 {
        let lhs = next[j]
            .mul(&prev[j], ctx)?
            .mul(&prev[(j + 1) % 3], ctx)?;
        let t0 = prev[(j + 1) % 3].mul(&sq(j)?, ctx)?;
        let t1 = s.mul(&prev[(j + 2) % 3].mul(&sq((j + 1) % 3)?, ctx)?, ctx)?;
        let t2 = s2.mul(&prev[j].mul(&sq((j + 2) % 3)?, ctx)?, ctx)?;
        out.push(lhs.sub(&t0, ctx)?.sub(&t1, ctx)?.sub(&t2, ctx)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use arith::parse_rat;

    const CTX: Ctx = Ctx { prec: 192 };

    fn r(s: &str) -> Scalar {
        Scalar::from_rat(parse_rat(s).unwrap())
    }

    fn params(n: i64, zeta: &str, rho: &str) -> HirotaParams {
        HirotaParams::new(n, n, r(zeta), r(rho)).unwrap()
    }

    #[test]
    fn cyclic_solver_matches_a_hand_solved_pair() {
        let d = [r("2"), r("3")];
        let g = [r("1"), r("1")];
        let rhs = [r("1"), r("5")];
        let xs = solve_cyclic(&d, &g, &rhs, CTX).unwrap();
        assert_eq!(xs[0], r("8/5"));
        assert_eq!(xs[1], r("11/5"));
    }

    #[test]
    fn a_broken_cycle_is_solved_as_a_chain() {
        let d = [r("2"), r("3")];
        let g = [r("0"), r("1")];
        let rhs = [r("4"), r("5")];
        let xs = solve_cyclic(&d, &g, &rhs, CTX).unwrap();
        assert_eq!(xs[0], r("2"));
        assert_eq!(xs[1], r("7/3"));
    }

    #[test]
    fn a_unit_product_of_ratios_is_singular() {
        let d = [r("1"), r("1")];
        let g = [r("1"), r("1")];
        let rhs = [r("1"), r("2")];
        assert!(matches!(
            solve_cyclic(&d, &g, &rhs, CTX),
            Err(HirotaError::SingularSystem)
        ));
    }

    #[test]
    fn the_step_satisfies_its_defining_relation_row_by_row() {
        let p = params(3, "1/2", "2/3");
        let prev = [r("1"), r("3/2"), r("2/5")];
        let cur = [r("7/3"), r("1/4"), r("5")];
        for l_mid in [-2i64, 0, 3] {
            let next = ynn_step(&prev, &cur, l_mid, &p, CTX).unwrap();
            let s = p.coeff(l_mid, CTX).unwrap();
            let z = s.pow_i64(3, CTX).unwrap();
            let om = Scalar::one_exact().sub(&z, CTX).unwrap();
            for j in 0..3 {
                let lhs = next[j]
                    .mul(&prev[j], CTX)
                    .unwrap()
                    .sub(
                        &s.mul(&next[(j + 1) % 3], CTX)
                            .unwrap()
                            .mul(&prev[(j + 2) % 3], CTX)
                            .unwrap(),
                        CTX,
                    )
                    .unwrap();
                let rhs = om
                    .mul(&cur[j], CTX)
                    .unwrap()
                    .mul(&cur[j], CTX)
                    .unwrap();
                assert!(lhs.sub(&rhs, CTX).unwrap().is_zero());
            }
            let res = y33_residuals(&prev, &cur, &next, l_mid, &p, CTX).unwrap();
            assert!(res.iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn stepping_down_recovers_the_lower_row() {
        let p = params(3, "3/7", "5/6");
        let prev = [r("2"), r("5/3"), r("1/2")];
        let cur = [r("1"), r("4/3"), r("3")];
        let next = ynn_step(&prev, &cur, 1, &p, CTX).unwrap();
        let back = ynn_step_down(&next, &cur, 1, &p, CTX).unwrap();
        assert_eq!(back.as_slice(), prev.as_slice());
    }

    #[test]
    fn the_grid_point_one_makes_the_system_singular() {
        let p = params(2, "1", "1");
        let prev = [r("2"), r("3")];
        let cur = [r("1"), r("5")];
        assert!(matches!(
            ynn_step(&prev, &cur, 0, &p, CTX),
            Err(HirotaError::SingularSystem)
        ));
    }
}
