//! Seeds: a quiver together with per-vertex data, and the exchange maps
//! acting on them.
//!
//! Value seeds mutate by the quadratic exchange; bilinear seeds carry a
//! tropical coefficient per vertex and mutate by the two-term exchange
//! with the coefficient attached to the incoming product.  Coefficients
//! are evaluated through the primitive parameters zeta and rho, the N-th
//! and N^2-th roots of the spectral parameter and its multiplier, so
//! every exponent appearing on a strip is integral and stays exact.

use crate::trop::TropicalMonomial;
use crate::ClusterError;
use arith::{parse_rat, rat_from_i64, rat_to_string, Ctx, Rat, Scalar, ScalarRepr};
use quiver::{Marker, Quiver};
use serde_json::{json, Value};

/// Primitive evaluation parameters: zeta^N is the spectral parameter,
/// rho^(N^2) its multiplier.
#[derive(Debug, Clone)]
pub struct CoeffParams {
    pub zeta: Scalar,
    pub rho: Scalar,
}

impl CoeffParams {
    /// Evaluates z0^alpha q^beta as zeta^(N alpha) rho^(N^2 beta).
    pub fn eval(
        &self,
        mono: &TropicalMonomial,
        n: usize,
        ctx: Ctx,
    ) -> Result<Scalar, ClusterError> {
        let n = rat_from_i64(n as i64, 1);
        let e1 = &mono.alpha * &n;
        let e2 = &mono.beta * &n * &n;
        Ok(pow_mixed(&self.zeta, &e1, ctx)?.mul(&pow_mixed(&self.rho, &e2, ctx)?, ctx)?)
    }
}

fn pow_mixed(base: &Scalar, e: &Rat, ctx: Ctx) -> Result<Scalar, ClusterError> {
    if e.is_integer() {
        let e = i64::try_from(e.to_integer()).expect("exponent fits in machine range");
        Ok(base.pow_i64(e, ctx)?)
    } else {
        Ok(base.pow_rat(e, ctx)?)
    }
}

fn one_like(v: &Scalar, ctx: Ctx) -> Scalar {
    match v {
        Scalar::Num(_) => Scalar::Num(arith::Cplx::one(ctx)),
        Scalar::Exact(_) => Scalar::one_exact(),
    }
}

/// A quiver with one value per vertex.
#[derive(Debug, Clone)]
pub struct XSeed {
    pub quiver: Quiver,
    pub x: Vec<Scalar>,
}

/// A quiver with one bilinear variable and one tropical coefficient per
/// vertex.
#[derive(Debug, Clone)]
pub struct TauSeed {
    pub quiver: Quiver,
    pub tau: Vec<Scalar>,
    pub y: Vec<TropicalMonomial>,
}

/// Mutation of a value seed at vertex j: the vertex inverts, every other
/// value picks up (1 + x_j^(sign e))^e where e counts arrows into j.
pub fn mutate_x(seed: &XSeed, j: usize, ctx: Ctx) -> Result<XSeed, ClusterError> {
    let xj = &seed.x[j];
    if xj.is_zero() {
        return Err(ClusterError::SingularMutation { vertex: j });
    }
    let one = one_like(xj, ctx);
    let mut x = Vec::with_capacity(seed.x.len());
    for (i, xi) in seed.x.iter().enumerate() {
        if i == j {
            x.push(one.div(xj, ctx)?);
            continue;
        }
        let e = seed.quiver.entry_i64(i, j);
        if e == 0 {
            x.push(xi.clone());
            continue;
        }
        let base = if e > 0 { xj.clone() } else { one.div(xj, ctx)? };
        let factor = one.add(&base, ctx)?;
        if factor.is_zero() && e < 0 {
            return Err(ClusterError::SingularMutation { vertex: j });
        }
        x.push(xi.mul(&factor.pow_i64(e, ctx)?, ctx)?);
    }
    Ok(XSeed { quiver: seed.quiver.mutate_matrix(j), x })
}

/// Mutation of a bilinear seed at vertex j.  The new variable is
///   (y_j prod_in tau_i^e + prod_out tau_i^e) / ((1 (+) y_j) tau_j)
/// with products over arrows into and out of j; coefficients mutate
/// tropically alongside.
pub fn mutate_tau_with_coeff(
    seed: &TauSeed,
    j: usize,
    params: &CoeffParams,
    ctx: Ctx,
) -> Result<TauSeed, ClusterError> {
    let q = &seed.quiver;
    let n = q.period();
    let mode = one_like(&seed.tau[j], ctx);
    let mut incoming = mode.clone();
    let mut outgoing = mode.clone();
    for i in 0..seed.tau.len() {
        let e = q.entry_i64(i, j);
        if e > 0 {
            incoming = incoming.mul(&seed.tau[i].pow_i64(e, ctx)?, ctx)?;
        } else if e < 0 {
            outgoing = outgoing.mul(&seed.tau[i].pow_i64(-e, ctx)?, ctx)?;
        }
    }
    let yj = &seed.y[j];
    let num = params.eval(yj, n, ctx)?.mul(&incoming, ctx)?.add(&outgoing, ctx)?;
    let den = params.eval(&yj.one_plus()?, n, ctx)?.mul(&seed.tau[j], ctx)?;
    if den.is_zero() {
        return Err(ClusterError::SingularMutation { vertex: j });
    }

    let mut tau = seed.tau.clone();
    tau[j] = num.div(&den, ctx)?;

    let mut y = Vec::with_capacity(seed.y.len());
    for (i, yi) in seed.y.iter().enumerate() {
        if i == j {
            y.push(yj.inv());
            continue;
        }
        let e = q.entry_i64(i, j);
        if e == 0 {
            y.push(yi.clone());
            continue;
        }
        let base = if e > 0 { yj.clone() } else { yj.inv() };
        y.push(yi.mul(&base.one_plus()?.pow_i64(e)));
    }
    Ok(TauSeed { quiver: q.mutate_matrix(j), tau, y })
}

/// The coefficient pattern a strip quiver carries in the deautonomized
/// dynamics: with l = k n - N m at the vertex,
///   top vertices:    z0^(1/N) q^((l + N)/N^2),
///   bottom vertices: z0^(-1/N) q^((-l + N)/N^2).
pub fn strip_coefficients(quiver: &Quiver) -> Vec<TropicalMonomial> {
    let n = quiver.period() as i64;
    let k = quiver.twist();
    quiver
        .vertices()
        .iter()
        .map(|v| {
            let l = k * v.n - n * v.m;
            match v.marker {
                Marker::Plus => TropicalMonomial::new(
                    rat_from_i64(1, n),
                    rat_from_i64(l + n, n * n),
                ),
                Marker::Cross => TropicalMonomial::new(
                    rat_from_i64(-1, n),
                    rat_from_i64(-l + n, n * n),
                ),
            }
        })
        .collect()
}

/// Reconstructs the value seed of a bilinear seed:
/// x_i = y_i prod_j tau_j^(e_ji).
pub fn x_from_tau(seed: &TauSeed, params: &CoeffParams, ctx: Ctx) -> Result<Vec<Scalar>, ClusterError> {
    let q = &seed.quiver;
    let n = q.period();
    let mut out = Vec::with_capacity(seed.tau.len());
    for i in 0..seed.tau.len() {
        let mut v = params.eval(&seed.y[i], n, ctx)?;
        for (j, tj) in seed.tau.iter().enumerate() {
            let e = q.entry_i64(j, i);
            if e != 0 {
                v = v.mul(&tj.pow_i64(e, ctx)?, ctx)?;
            }
        }
        out.push(v);
    }
    Ok(out)
}

impl XSeed {
    pub fn to_json(&self, ctx: Ctx) -> Value {
        let mut doc = serde_json::to_value(&self.quiver).expect("quiver serializes");
        doc["x"] = scalars_to_json(&self.x, ctx);
        doc
    }

    pub fn from_json(doc: &Value, ctx: Ctx) -> Result<Self, ClusterError> {
        let quiver: Quiver = serde_json::from_value(doc.clone())
            .map_err(|e| ClusterError::Document(e.to_string()))?;
        let x = scalars_from_json(doc, "x", quiver.vertex_count(), ctx)?;
        Ok(XSeed { quiver, x })
    }
}

impl TauSeed {
    pub fn to_json(&self, ctx: Ctx) -> Value {
        let mut doc = serde_json::to_value(&self.quiver).expect("quiver serializes");
        doc["tau"] = scalars_to_json(&self.tau, ctx);
        doc["y"] = Value::Array(
            self.y
                .iter()
                .map(|m| json!([rat_to_string(&m.alpha), rat_to_string(&m.beta)]))
                .collect(),
        );
        doc
    }

    pub fn from_json(doc: &Value, ctx: Ctx) -> Result<Self, ClusterError> {
        let quiver: Quiver = serde_json::from_value(doc.clone())
            .map_err(|e| ClusterError::Document(e.to_string()))?;
        let tau = scalars_from_json(doc, "tau", quiver.vertex_count(), ctx)?;
        let raw = doc
            .get("y")
            .and_then(Value::as_array)
            .ok_or_else(|| ClusterError::Document("missing \"y\" array".into()))?;
        if raw.len() != quiver.vertex_count() {
            return Err(ClusterError::Document("\"y\" length does not match vertices".into()));
        }
        let mut y = Vec::with_capacity(raw.len());
        for pair in raw {
            let parts = pair
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| ClusterError::Document("each \"y\" entry is a pair".into()))?;
            let get = |v: &Value| -> Result<Rat, ClusterError> {
                let s = v
                    .as_str()
                    .ok_or_else(|| ClusterError::Document("exponents are strings".into()))?;
                parse_rat(s).map_err(ClusterError::Arith)
            };
            y.push(TropicalMonomial::new(get(&parts[0])?, get(&parts[1])?));
        }
        Ok(TauSeed { quiver, tau, y })
    }
}

fn scalars_to_json(vals: &[Scalar], ctx: Ctx) -> Value {
    Value::Array(
        vals.iter()
            .map(|v| serde_json::to_value(v.repr(ctx)).expect("scalar repr serializes"))
            .collect(),
    )
}

fn scalars_from_json(
    doc: &Value,
    key: &str,
    expected: usize,
    ctx: Ctx,
) -> Result<Vec<Scalar>, ClusterError> {
    let raw = doc
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| ClusterError::Document(format!("missing \"{key}\" array")))?;
    if raw.len() != expected {
        return Err(ClusterError::Document(format!(
            "\"{key}\" length {} does not match {expected} vertices",
            raw.len()
        )));
    }
    raw.iter()
        .map(|v| {
            let repr: ScalarRepr = serde_json::from_value(v.clone())
                .map_err(|e| ClusterError::Document(e.to_string()))?;
            Scalar::from_repr(&repr, ctx).map_err(ClusterError::Arith)
        })
        .collect()
}
