//! Orbit recording and the q-difference view of an orbit.
//!
//! On the quotient of the cylinder, a site is pinned by its column
//! `j = n mod N` together with its weight `l = k n - N m`, and the
//! bilinear recursion becomes a coupled q-difference system relating the
//! N scalar sequences `l -> tau(j, l)` on a grid of spacing one in `l`.
//! [`as_q_difference`] performs the regrouping and re-checks the
//! recursion in the new coordinates at every site where the full stencil
//! is populated, so a successful regroup doubles as a residual check.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use arith::{rat_to_string, Ctx, Scalar};

use crate::params::{HirotaParams, Mode};
use crate::window::TauLattice;
use crate::HirotaError;

/// Absolute tolerance (as a power of two) for residuals of numeric
/// orbits; exact orbits must have residuals that are identically zero.
const NUMERIC_RESIDUAL_TOL_EXP2: i64 = -120;

/// Accumulated tau values over many windows of one evolution.
#[derive(Debug, Clone)]
pub struct Orbit {
    params: HirotaParams,
    values: BTreeMap<(i64, i64), Scalar>,
}

impl Orbit {
    pub fn new(params: HirotaParams) -> Self {
        Orbit {
            params,
            values: BTreeMap::new(),
        }
    }

    pub fn params(&self) -> &HirotaParams {
        &self.params
    }

    /// Record every site of a window.  Revisiting a site with the same
    /// exact value is a no-op; a conflicting exact value is an error.  In
    /// numeric mode the first recorded value wins, since recomputing a
    /// row through the opposite step rounds differently.
    pub fn record(&mut self, lat: &TauLattice) -> Result<(), HirotaError> {
        for (n, m, v) in lat.sites() {
            self.insert(n, m, v.clone())?;
        }
        Ok(())
    }

    /// Record one value at a site (reduced to canonical coordinates).
    pub fn insert(&mut self, n: i64, m: i64, v: Scalar) -> Result<(), HirotaError> {
        let site = self.params.canon(n, m);
        match self.values.entry(site) {
            Entry::Occupied(slot) => {
                if self.params.mode() == Mode::Exact && slot.get() != &v {
                    return Err(HirotaError::BadInput(format!(
                        "conflicting values recorded at site ({}, {})",
                        site.0, site.1
                    )));
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(v);
            }
        }
        Ok(())
    }

    pub fn get(&self, n: i64, m: i64) -> Option<&Scalar> {
        self.values.get(&self.params.canon(n, m))
    }

    pub fn sites(&self) -> impl Iterator<Item = (i64, i64, &Scalar)> + '_ {
        self.values.iter().map(|(&(n, m), v)| (n, m, v))
    }

    /// Regroup the orbit by `(j, l)` and check the regrouped recursion.
    pub fn as_q_difference(&self, ctx: Ctx) -> Result<QSamples, HirotaError> {
        regroup(&self.params, &self.values, ctx)
    }
}

/// Samples of the N tau sequences on the weight grid.
#[derive(Debug, Clone)]
pub struct QSamples {
    period: i64,
    values: BTreeMap<(i64, i64), Scalar>,
    /// How many full stencils the regrouped recursion was checked on.
    pub checked: usize,
}

impl QSamples {
    /// Value of sequence `j` (taken mod N) at weight `l`.
    pub fn get(&self, j: i64, l: i64) -> Option<&Scalar> {
        self.values.get(&(j.rem_euclid(self.period), l))
    }

    pub fn sites(&self) -> impl Iterator<Item = (i64, i64, &Scalar)> + '_ {
        self.values.iter().map(|(&(j, l), v)| (j, l, v))
    }
}

/// Regroup a window's sites by `(j, l)` and check the regrouped
/// recursion wherever its stencil is fully populated.
pub fn as_q_difference(lat: &TauLattice, ctx: Ctx) -> Result<QSamples, HirotaError> {
    let mut orbit = Orbit::new(lat.params().clone());
    orbit.record(lat)?;
    orbit.as_q_difference(ctx)
}

fn regroup(
    params: &HirotaParams,
    values: &BTreeMap<(i64, i64), Scalar>,
    ctx: Ctx,
) -> Result<QSamples, HirotaError> {
    let period = params.period();
    let twist = params.twist();
    let mut out = BTreeMap::new();
    for (&(n, m), v) in values {
        // n is canonical, so (j, l) determines the site uniquely
        out.insert((n, params.weight(n, m)), v.clone());
    }
    let mut checked = 0;
    for (&(j, l), center) in &out {
        let stencil = (
            out.get(&(j, l + period)),
            out.get(&(j, l - period)),
            out.get(&((j + 1).rem_euclid(period), l + twist)),
            out.get(&((j - 1).rem_euclid(period), l - twist)),
        );
        let (Some(above), Some(below), Some(plus), Some(minus)) = stencil else {
            continue;
        };
        let res = above
            .mul(below, ctx)?
            .sub(&center.mul(center, ctx)?, ctx)?
            .sub(
                &params.coeff(l, ctx)?.mul(&plus.mul(minus, ctx)?, ctx)?,
                ctx,
            )?;
        let ok = match params.mode() {
            Mode::Exact => res.is_zero(),
            Mode::Numeric => res.close_to(&res.zero_like(ctx), NUMERIC_RESIDUAL_TOL_EXP2, ctx),
        };
        if !ok {
            return Err(HirotaError::ResidualNonzero { j, l });
        }
        checked += 1;
    }
    Ok(QSamples {
        period,
        values: out,
        checked,
    })
}

/// Dump an orbit as CSV with columns `n,m,j,l,value`, sites in canonical
/// coordinates and rows sorted by site.
pub fn write_orbit_csv<W: std::io::Write>(
    orbit: &Orbit,
    ctx: Ctx,
    w: &mut W,
) -> std::io::Result<()> {
    writeln!(w, "n,m,j,l,value")?;
    for (n, m, v) in orbit.sites() {
        let l = orbit.params().weight(n, m);
        writeln!(w, "{},{},{},{},{}", n, m, n, l, scalar_cell(v, ctx))?;
    }
    Ok(())
}

fn scalar_cell(v: &Scalar, ctx: Ctx) -> String {
    match v {
        Scalar::Exact(q) => rat_to_string(q),
        Scalar::Num(c) => {
            let re = ctx.to_decimal(&c.re);
            if c.im == ctx.zero() {
                re
            } else {
                format!("{}{}{}i", re, if ctx.lt(&c.im, &ctx.zero()) { "" } else { "+" }, ctx.to_decimal(&c.im))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use arith::parse_rat;

    const CTX: Ctx = Ctx { prec: 192 };

    fn r(s: &str) -> Scalar {
        Scalar::from_rat(parse_rat(s).unwrap())
    }

    fn params(period: i64, twist: i64) -> HirotaParams {
        HirotaParams::new(period, twist, r("2/3"), r("5/7")).unwrap()
    }

    fn run_orbit(p: &HirotaParams, down: usize, up: usize) -> Orbit {
        let lower = [r("1"), r("2"), r("3")];
        let upper = [r("5/2"), r("7/3"), r("11/5")];
        let mut orbit = Orbit::new(p.clone());
        let seed = TauLattice::seed(p.clone(), &lower, &upper, 0).unwrap();
        orbit.record(&seed).unwrap();
        let mut lat = seed.clone();
        for _ in 0..down {
            lat = lat.step_down(CTX).unwrap();
            orbit.record(&lat).unwrap();
        }
        lat = seed;
        for _ in 0..up {
            lat = lat.step_up(CTX).unwrap();
            orbit.record(&lat).unwrap();
        }
        orbit
    }

    #[test]
    fn the_regrouped_recursion_vanishes_on_evolved_orbits() {
        for twist in 0..=3 {
            let p = params(3, twist);
            let orbit = run_orbit(&p, 4, 4);
            let samples = orbit.as_q_difference(CTX).unwrap();
            assert!(samples.checked > 0, "twist {twist}");
        }
    }

    #[test]
    fn a_coprime_twist_fills_a_single_weight_progression() {
        let p = params(3, 1);
        let orbit = run_orbit(&p, 4, 4);
        let samples = orbit.as_q_difference(CTX).unwrap();
        // every weight determines its column: l = j mod 3 at twist 1
        for (j, l, _) in samples.sites() {
            assert_eq!(j.rem_euclid(3), l.rem_euclid(3));
        }
    }

    #[test]
    fn zero_twist_splits_into_period_many_sequences() {
        let p = params(3, 0);
        let orbit = run_orbit(&p, 3, 3);
        let samples = orbit.as_q_difference(CTX).unwrap();
        for (_, l, _) in samples.sites() {
            assert_eq!(l.rem_euclid(3), 0);
        }
    }

    #[test]
    fn tampered_values_are_reported_by_site() {
        let p = params(3, 1);
        let mut orbit = run_orbit(&p, 3, 3);
        let (n, m, v) = {
            let (n, m, v) = orbit.sites().nth(4).unwrap();
            (n, m, v.clone())
        };
        orbit.values.insert((n, m), v.add(&r("1"), CTX).unwrap());
        assert!(matches!(
            orbit.as_q_difference(CTX),
            Err(HirotaError::ResidualNonzero { .. })
        ));
    }

    #[test]
    fn csv_rows_carry_both_coordinate_systems() {
        let p = params(3, 1);
        let orbit = run_orbit(&p, 1, 0);
        let mut buf = Vec::new();
        write_orbit_csv(&orbit, CTX, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,m,j,l,value"));
        for line in lines {
            let cols: Vec<&str> = line.split(',').collect();
            assert_eq!(cols.len(), 5);
            let n: i64 = cols[0].parse().unwrap();
            let m: i64 = cols[1].parse().unwrap();
            let j: i64 = cols[2].parse().unwrap();
            let l: i64 = cols[3].parse().unwrap();
            assert_eq!(j, n);
            assert_eq!(l, p.weight(n, m));
            assert_eq!(orbit.get(n, m).unwrap(), &r(cols[4]));
        }
    }
}
