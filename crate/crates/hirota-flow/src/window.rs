//! Sliding window of tau values on the twisted cylinder.
//!
//! One fundamental domain is stored per row: sites live at columns
//! `0..N`, and lookups across the seam reduce through `(n, m) ~ (n + N,
//! m + k)`.  A window holds at most three rows per column, arranged
//! along the uniform staircase transversal `floor(k c / N)`: on the
//! quotient this is the shape from which the recursion is causal, since
//! every dependency of a new site then has strictly smaller weight
//! `l = k n - N m`.  Two flat rows are such a transversal only for
//! `k <= 1`; for larger twists a flat pair leaves gaps the recursion
//! cannot fill one site at a time.

use std::collections::BTreeMap;

use arith::{Ctx, Scalar};

use crate::params::HirotaParams;
use crate::ynn::solve_cyclic;
use crate::HirotaError;

#[derive(Clone, Copy)]
enum Dir {
    Down,
    Up,
}

/// Tau values on a three-row sliding window, advanced one row at a time.
///
/// Steps return a fresh window; values are never mutated in place, so a
/// caller can keep earlier windows (or [`record`](crate::Orbit::record)
/// them) while stepping.
#[derive(Debug, Clone)]
pub struct TauLattice {
    params: HirotaParams,
    /// Bottom row of the two-row frontier at each column.
    heights: Vec<i64>,
    values: BTreeMap<(i64, i64), Scalar>,
}

impl TauLattice {
    /// Seed the two frontier rows: `lower[c]` sits at `(c, H(c) + base)`
    /// and `upper[c]` one row above, with `H` the staircase height.  For
    /// `k <= 1` the staircase is flat, so this is exactly a pair of
    /// adjacent rows `base` and `base + 1`.  Zero values are rejected.
    pub fn seed(
        params: HirotaParams,
        lower: &[Scalar],
        upper: &[Scalar],
        base: i64,
    ) -> Result<Self, HirotaError> {
        let n = params.period() as usize;
        if lower.len() != n || upper.len() != n {
            return Err(HirotaError::BadInput(format!(
                "seed rows must have length {n}"
            )));
        }
        let mut values = BTreeMap::new();
        let mut heights = Vec::with_capacity(n);
        for c in 0..n {
            let h = params.strip_height(c as i64) + base;
            for (dm, v) in [(0, &lower[c]), (1, &upper[c])] {
                if v.is_zero() {
                    return Err(HirotaError::ZeroTau {
                        n: c as i64,
                        m: h + dm,
                    });
                }
                values.insert((c as i64, h + dm), v.clone());
            }
            heights.push(h);
        }
        Ok(TauLattice {
            params,
            heights,
            values,
        })
    }

    pub fn params(&self) -> &HirotaParams {
        &self.params
    }

    /// Bottom row of the frontier pair at each column.
    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    /// Value at any site, reduced through the cylinder identification.
    pub fn get(&self, n: i64, m: i64) -> Option<&Scalar> {
        let site = self.params.canon(n, m);
        self.values.get(&site)
    }

    /// All stored sites, in canonical coordinates.
    pub fn sites(&self) -> impl Iterator<Item = (i64, i64, &Scalar)> + '_ {
        self.values.iter().map(|(&(n, m), v)| (n, m, v))
    }

    fn require(&self, n: i64, m: i64) -> Result<&Scalar, HirotaError> {
        let (cn, cm) = self.params.canon(n, m);
        self.values
            .get(&(cn, cm))
            .ok_or(HirotaError::MissingSite { n: cn, m: cm })
    }

    /// Advance the window one row towards smaller `m` (larger weight).
    pub fn step_down(&self, ctx: Ctx) -> Result<Self, HirotaError> {
        self.step(Dir::Down, ctx)
    }

    /// Advance the window one row towards larger `m` (smaller weight).
    pub fn step_up(&self, ctx: Ctx) -> Result<Self, HirotaError> {
        self.step(Dir::Up, ctx)
    }

    fn step(&self, dir: Dir, ctx: Ctx) -> Result<Self, HirotaError> {
        if self.params.twist() == self.params.period() {
            self.step_cyclic(dir, ctx)
        } else {
            self.step_sweep(dir, ctx)
        }
    }

    /// One bilinear advance per column, below full twist.  New sites are
    /// visited in the order of their weight (ascending going down,
    /// descending going up): a stencil dependency either sits in the
    /// stored window or is an earlier new site of the same sweep, so the
    /// sweep is sequential, not column-parallel.
    fn step_sweep(&self, dir: Dir, ctx: Ctx) -> Result<Self, HirotaError> {
        let n = self.params.period() as usize;
        let mut next = self.clone();
        let mut order: Vec<usize> = (0..n).collect();
        match dir {
            Dir::Down => {
                order.sort_by_key(|&c| self.params.weight(c as i64, self.heights[c] - 1))
            }
            Dir::Up => {
                order.sort_by_key(|&c| -self.params.weight(c as i64, self.heights[c] + 2))
            }
        }
        for &c in &order {
            let ci = c as i64;
            let (center_row, new_row, div_row) = match dir {
                Dir::Down => (next.heights[c], next.heights[c] - 1, next.heights[c] + 1),
                Dir::Up => (next.heights[c] + 1, next.heights[c] + 2, next.heights[c]),
            };
            let center = next.require(ci, center_row)?.clone();
            let left = next.require(ci - 1, center_row)?.clone();
            let right = next.require(ci + 1, center_row)?.clone();
            let divisor = next.require(ci, div_row)?.clone();
            if divisor.is_zero() {
                let (dn, dm) = self.params.canon(ci, div_row);
                return Err(HirotaError::SingularStep { n: dn, m: dm });
            }
            let cross = next
                .params
                .coeff(next.params.weight(ci, center_row), ctx)?
                .mul(&left.mul(&right, ctx)?, ctx)?;
            let val = center
                .mul(&center, ctx)?
                .add(&cross, ctx)?
                .div(&divisor, ctx)?;
            next.store(c, new_row, val, dir)?;
        }
        Ok(next)
    }

    /// One advance at full twist.  Each new site appears in its
    /// neighbour's stencil as well as its own, so the whole new row is
    /// obtained from one cyclic linear solve.
    fn step_cyclic(&self, dir: Dir, ctx: Ctx) -> Result<Self, HirotaError> {
        let n = self.params.period() as usize;
        let mut d = Vec::with_capacity(n);
        let mut g = Vec::with_capacity(n);
        let mut r = Vec::with_capacity(n);
        for c in 0..n {
            let ci = c as i64;
            let center_row = match dir {
                Dir::Down => self.heights[c],
                Dir::Up => self.heights[c] + 1,
            };
            let center = self.require(ci, center_row)?;
            let coeff = self
                .params
                .coeff(self.params.weight(ci, center_row), ctx)?;
            match dir {
                Dir::Down => {
                    d.push(self.require(ci, center_row + 1)?.clone());
                    g.push(coeff.mul(self.require(ci - 1, center_row)?, ctx)?);
                }
                Dir::Up => {
                    d.push(self.require(ci, center_row - 1)?.clone());
                    g.push(coeff.mul(self.require(ci + 1, center_row)?, ctx)?);
                }
            }
            r.push(center.mul(center, ctx)?);
        }
        let xs = match dir {
            Dir::Down => solve_cyclic(&d, &g, &r, ctx)?,
            Dir::Up => {
                // the upward advance couples each new site to the one on
                // its left; reverse the column index to reuse the solver
                let rev = |i: usize| (n - i) % n;
                let dp: Vec<_> = (0..n).map(|i| d[rev(i)].clone()).collect();
                let gp: Vec<_> = (0..n).map(|i| g[rev(i)].clone()).collect();
                let rp: Vec<_> = (0..n).map(|i| r[rev(i)].clone()).collect();
                let ys = solve_cyclic(&dp, &gp, &rp, ctx)?;
                (0..n).map(|c| ys[rev(c)].clone()).collect()
            }
        };
        let mut next = self.clone();
        for (c, x) in xs.into_iter().enumerate() {
            let row = match dir {
                Dir::Down => next.heights[c] - 1,
                Dir::Up => next.heights[c] + 2,
            };
            next.store(c, row, x, dir)?;
        }
        Ok(next)
    }

    fn store(&mut self, c: usize, row: i64, val: Scalar, dir: Dir) -> Result<(), HirotaError> {
        if val.is_zero() {
            return Err(HirotaError::ZeroTau {
                n: c as i64,
                m: row,
            });
        }
        self.values.insert((c as i64, row), val);
        match dir {
            Dir::Down => self.heights[c] -= 1,
            Dir::Up => self.heights[c] += 1,
        }
        let h = self.heights[c];
        // keep the frontier pair plus one row on the side just left
        let (lo, hi) = match dir {
            Dir::Down => (h, h + 2),
            Dir::Up => (h - 1, h + 1),
        };
        let ci = c as i64;
        self.values
            .retain(|&(vc, vm), _| vc != ci || (lo..=hi).contains(&vm));
        Ok(())
    }
}
