//! Casimirs of the strip quivers: the two multiplicative invariants fixed by
//! every mutation that preserves the strip.

use crate::quiv::Quiver;
use crate::QuiverError;
use arith::{Cplx, Ctx, Scalar};

/// Evaluate the two Casimirs on per-vertex values.
///
/// The first is the plain product of all values.  The second weights vertex
/// `(n, m)` by `l = k n - N m`, the label that is constant along the lines
/// the twist identifies.  A zero value is only an error when it would be
/// inverted.
pub fn casimirs(
    quiver: &Quiver,
    values: &[Scalar],
    ctx: Ctx,
) -> Result<(Scalar, Scalar), QuiverError> {
    assert_eq!(
        values.len(),
        quiver.vertex_count(),
        "one value per vertex expected"
    );
    let n = quiver.period() as i64;
    let k = quiver.twist();

    // Start from a one of the same mode as the inputs.
    let one = match values.first() {
        Some(Scalar::Num(_)) => Scalar::Num(Cplx::one(ctx)),
        _ => Scalar::one_exact(),
    };
    let mut q_cas = one.clone();
    let mut z_cas = one;
    for (i, v) in values.iter().enumerate() {
        let label = quiver.vertices()[i];
        let l = k * label.n - n * label.m;
        if v.is_zero() && l < 0 {
            return Err(QuiverError::ZeroValue {
                vertex: i,
                exponent: l,
            });
        }
        q_cas = q_cas.mul(v, ctx)?;
        z_cas = z_cas.mul(&v.pow_i64(l, ctx)?, ctx)?;
    }
    Ok((q_cas, z_cas))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::{Block, BlockSequence};
    use crate::quiv::build_quiver;
    use arith::{rat_from_i64, Ctx};

    fn quiver(blocks: &[Block]) -> Quiver {
        build_quiver(&BlockSequence::new(blocks.to_vec()).unwrap()).unwrap()
    }

    fn exact(n: i64, d: i64) -> Scalar {
        Scalar::Exact(rat_from_i64(n, d))
    }

    #[test]
    fn unit_values_give_unit_casimirs() {
        let ctx = Ctx::default();
        let q = quiver(&[Block::Zero, Block::PlusI]);
        let values = vec![exact(1, 1); 4];
        let (qc, zc) = casimirs(&q, &values, ctx).unwrap();
        assert!(qc.close_to(&exact(1, 1), 0, ctx));
        assert!(zc.close_to(&exact(1, 1), 0, ctx));
    }

    #[test]
    fn weights_follow_the_line_label() {
        let ctx = Ctx::default();
        // N = 2, k = 1: vertices (0,0), (0,1), (1,0), (1,1) carry
        // l = n - 2m = 0, -2, 1, -1.
        let q = quiver(&[Block::Zero, Block::PlusI]);
        let values = vec![exact(2, 1), exact(3, 1), exact(5, 1), exact(7, 1)];
        let (qc, zc) = casimirs(&q, &values, ctx).unwrap();
        assert!(qc.close_to(&exact(2 * 3 * 5 * 7, 1), 0, ctx));
        assert!(zc.close_to(&exact(5, 9 * 7), 0, ctx));
    }

    #[test]
    fn zero_with_negative_weight_is_rejected() {
        let ctx = Ctx::default();
        let q = quiver(&[Block::Zero, Block::PlusI]);
        let values = vec![exact(2, 1), exact(0, 1), exact(5, 1), exact(7, 1)];
        let err = casimirs(&q, &values, ctx).unwrap_err();
        assert!(matches!(
            err,
            QuiverError::ZeroValue {
                vertex: 1,
                exponent: -2
            }
        ));
    }

    #[test]
    fn zero_with_positive_weight_is_fine() {
        let ctx = Ctx::default();
        let q = quiver(&[Block::Zero, Block::PlusI]);
        let values = vec![exact(2, 1), exact(3, 1), exact(0, 1), exact(7, 1)];
        let (qc, zc) = casimirs(&q, &values, ctx).unwrap();
        assert!(qc.is_zero());
        assert!(zc.is_zero());
    }
}
