//! Tropical coefficients along the shift flow.
//!
//! The strip pattern fixes one monomial per vertex; exchanges must carry
//! that pattern onto the pattern of the mutated strip, the two Casimirs
//! must be constant step by step, and one full shift step must move the
//! weighted Casimir by exactly one power of the multiplier per mutation.

mod common;

use arith::{parse_rat, rat_from_i64, Ctx, Scalar};
use cluster_dynamics::{
    mutate_tau_with_coeff, strip_coefficients, x_from_tau, CoeffParams, TauSeed, TropicalMonomial,
};
use quiver::{build_quiver, casimirs, uniform_flow, Block, BlockSequence};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mono(a: &str, b: &str) -> TropicalMonomial {
    TropicalMonomial::new(parse_rat(a).unwrap(), parse_rat(b).unwrap())
}

fn rat(s: &str) -> Scalar {
    Scalar::from_rat(parse_rat(s).unwrap())
}

fn flat_two_column() -> quiver::Quiver {
    build_quiver(&BlockSequence::new(vec![Block::Zero, Block::Zero]).unwrap()).unwrap()
}

#[test]
fn the_flat_two_column_strip_carries_the_textbook_coefficients() {
    let y = strip_coefficients(&flat_two_column());
    assert_eq!(y[0], mono("-1/2", "1/2"));
    assert_eq!(y[1], mono("1/2", "0"));
    assert_eq!(y[2], mono("-1/2", "1/2"));
    assert_eq!(y[3], mono("1/2", "0"));
}

fn plus_mono(n: i64, l: i64) -> TropicalMonomial {
    TropicalMonomial::new(rat_from_i64(1, n), rat_from_i64(l + n, n * n))
}

fn cross_mono(n: i64, l: i64) -> TropicalMonomial {
    TropicalMonomial::new(rat_from_i64(-1, n), rat_from_i64(n - l, n * n))
}

#[test]
fn exchange_factors_of_coefficients_depend_on_the_weight_side() {
    for n in [2i64, 3, 4] {
        // Top coefficients absorb into 1 while the weight stays at or
        // above -N and stop being monomial sums below that line.
        assert!(plus_mono(n, 0).one_plus().unwrap().is_one());
        assert!(plus_mono(n, -n).one_plus().unwrap().is_one());
        assert!(plus_mono(n, -n - 1).one_plus().is_err());
        // Bottom coefficients dominate from weight N upward and stop
        // below it.
        assert_eq!(cross_mono(n, n).one_plus().unwrap(), cross_mono(n, n));
        assert_eq!(cross_mono(n, n + 3).one_plus().unwrap(), cross_mono(n, n + 3));
        assert!(cross_mono(n, n - 1).one_plus().is_err());
        assert!(cross_mono(n, 0).one_plus().is_err());
    }
}

#[test]
fn a_single_exchange_reproduces_the_two_term_recursion() {
    let ctx = Ctx::default();
    let q = flat_two_column();
    let params = CoeffParams { zeta: rat("2/3"), rho: rat("5/7") };
    let seed = TauSeed {
        quiver: q.clone(),
        tau: vec![rat("2"), rat("3"), rat("5"), rat("7")],
        y: strip_coefficients(&q),
    };
    let out = mutate_tau_with_coeff(&seed, 3, &params, ctx).unwrap();
    // The top vertex of column 1 carries the recursion coefficient of the
    // site one row below it, whose weight vanishes here, so the exchange
    // is (zeta tau_0^2 + tau_2^2) / tau_3 with no multiplier attached.
    assert_eq!(out.tau[3], rat("83/21"));
    for i in 0..3 {
        assert_eq!(out.tau[i], seed.tau[i]);
    }
    // The exchanged coefficients are exactly the mutated strip's own
    // pattern, with the mutated vertex inverted.
    assert_eq!(out.y, strip_coefficients(&out.quiver));
    assert_eq!(out.y[3], seed.y[3].inv());
}

#[test]
fn the_shift_flow_carries_coefficients_onto_the_shifted_strip() {
    let ctx = Ctx::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for &(n, k) in &[(2usize, 0usize), (3, 1), (4, 2)] {
        let plan = uniform_flow(n, k).unwrap();
        let params = CoeffParams {
            zeta: common::random_positive_rat(&mut rng),
            rho: common::random_positive_rat(&mut rng),
        };
        let mut seed = TauSeed {
            quiver: plan.quiver.clone(),
            tau: (0..2 * n).map(|_| common::random_positive_rat(&mut rng)).collect(),
            y: strip_coefficients(&plan.quiver),
        };
        for &j in &plan.mutations {
            seed = mutate_tau_with_coeff(&seed, j, &params, ctx).unwrap();
        }
        assert_eq!(seed.y, strip_coefficients(&seed.quiver), "N={n} k={k}");
    }
}

#[test]
fn both_casimirs_ride_the_shift_flow() {
    let ctx = Ctx::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for &(n, k) in &[(2usize, 0usize), (3, 1), (4, 2)] {
        let plan = uniform_flow(n, k).unwrap();
        for autonomous in [false, true] {
            let params = CoeffParams {
                zeta: common::random_positive_rat(&mut rng),
                rho: if autonomous {
                    Scalar::one_exact()
                } else {
                    common::random_positive_rat(&mut rng)
                },
            };
            let seed0 = TauSeed {
                quiver: plan.quiver.clone(),
                tau: (0..2 * n).map(|_| common::random_positive_rat(&mut rng)).collect(),
                y: strip_coefficients(&plan.quiver),
            };
            let x0 = x_from_tau(&seed0, &params, ctx).unwrap();
            let (q0, z0) = casimirs(&seed0.quiver, &x0, ctx).unwrap();

            // Step by step, against each quiver's own vertex labels.
            let mut seed = seed0.clone();
            for &j in &plan.mutations {
                seed = mutate_tau_with_coeff(&seed, j, &params, ctx).unwrap();
                let x = x_from_tau(&seed, &params, ctx).unwrap();
                let (q, z) = casimirs(&seed.quiver, &x, ctx).unwrap();
                assert_eq!(q, q0, "plain Casimir, N={n} k={k}");
                assert_eq!(z, z0, "weighted Casimir, N={n} k={k}");
            }

            // Relabeled through the closure permutation, one full step
            // shifts the weighted Casimir by the inverse multiplier once
            // per mutation and fixes the plain one.
            let x1 = x_from_tau(&seed, &params, ctx).unwrap();
            let mut relabeled = vec![Scalar::one_exact(); 2 * n];
            for (i, v) in x1.iter().enumerate() {
                relabeled[plan.permutation[i]] = v.clone();
            }
            let (qp, zp) = casimirs(&seed0.quiver, &relabeled, ctx).unwrap();
            assert_eq!(qp, q0, "plain Casimir after relabeling, N={n} k={k}");
            let d = plan.mutations.len() as i64;
            let expect = z0.mul(&q0.pow_i64(-d, ctx).unwrap(), ctx).unwrap();
            assert_eq!(zp, expect, "weighted Casimir after relabeling, N={n} k={k}");
            if autonomous {
                assert_eq!(zp, z0, "no drift without a multiplier, N={n} k={k}");
            }
        }
    }
}
