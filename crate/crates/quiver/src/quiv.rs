//! Quiver assembly from a block sequence.

use crate::block::{Block, BlockSequence};
use crate::QuiverError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Vertex mark.  Each column carries an `x` with a `+` one step above it;
/// mutation swaps the marks inside the column it fires in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Marker {
    #[serde(rename = "x")]
    Cross,
    #[serde(rename = "+")]
    Plus,
}

/// Position of a vertex on the universal cover of the twisted cylinder.
/// `n` is the column, always reduced to `0..N`; `m` is the height of the
/// representative in that fundamental strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    pub n: i64,
    pub m: i64,
    pub marker: Marker,
}

/// Entries are arbitrary-precision: mutation words compound entries roughly
/// quadratically, so fixed-width storage would overflow on words as short as
/// twenty letters.  JSON carries them as plain integers through `i128`;
/// matrices produced by the supported constructions and flows stay far below
/// that bridge.
mod eps_serde {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<i128>> = m
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| i128::try_from(e).expect("exchange entry exceeds the JSON bridge"))
                    .collect()
            })
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let rows: Vec<Vec<serde_json::Value>> = Vec::deserialize(d)?;
        rows.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| {
                        if let Some(i) = v.as_i64() {
                            Ok(BigInt::from(i))
                        } else if let Some(u) = v.as_u64() {
                            Ok(BigInt::from(u))
                        } else {
                            Err(D::Error::custom(format!("bad matrix entry {v}")))
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Exchange matrix plus vertex labels on the torus `(n, m) ~ (n + N, m + k)`.
///
/// Invariants: `epsilon` is antisymmetric with integer entries, its corank is
/// exactly 2 for every strip-built quiver, and each column `c` owns vertices
/// `2c` and `2c + 1` at adjacent heights with the `+` above the `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    #[serde(rename = "N")]
    n: usize,
    k: i64,
    vertices: Vec<VertexLabel>,
    #[serde(with = "eps_serde")]
    epsilon: Vec<Vec<BigInt>>,
}

impl Quiver {
    /// Horizontal period.
    pub fn period(&self) -> usize {
        self.n
    }

    /// Vertical twist.
    pub fn twist(&self) -> i64 {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn epsilon(&self) -> &[Vec<BigInt>] {
        &self.epsilon
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.epsilon[i][j]
    }

    /// Entry narrowed to machine width; the dynamical quivers all fit.
    pub fn entry_i64(&self, i: usize, j: usize) -> i64 {
        i64::try_from(&self.epsilon[i][j]).expect("exchange entry exceeds i64")
    }

    /// The matrix as machine integers, for pinning small cases in tests.
    pub fn epsilon_i64(&self) -> Vec<Vec<i64>> {
        (0..self.epsilon.len())
            .map(|i| (0..self.epsilon.len()).map(|j| self.entry_i64(i, j)).collect())
            .collect()
    }

    pub(crate) fn from_parts(
        n: usize,
        k: i64,
        vertices: Vec<VertexLabel>,
        epsilon: Vec<Vec<BigInt>>,
    ) -> Self {
        let q = Quiver {
            n,
            k,
            vertices,
            epsilon,
        };
        debug_assert!(q.is_antisymmetric());
        q
    }

    pub(crate) fn is_antisymmetric(&self) -> bool {
        let d = self.epsilon.len();
        self.epsilon.iter().all(|row| row.len() == d)
            && (0..d).all(|i| (0..d).all(|j| self.epsilon[i][j] == -&self.epsilon[j][i]))
    }

    /// Dimension of the kernel of `epsilon`, computed exactly.
    pub fn corank(&self) -> usize {
        let d = self.epsilon.len();
        let mut rows: Vec<Vec<BigRational>> = self
            .epsilon
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| BigRational::from_integer(e.clone()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..d {
            let Some(pivot) = (rank..d).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = rows[rank][col].clone();
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            for row in tail.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let f = &row[col] / &inv;
                for (e, p) in row.iter_mut().zip(pivot_row).skip(col) {
                    let sub = &f * p;
                    *e -= sub;
                }
            }
            rank += 1;
        }
        d - rank
    }

    /// Index of the other vertex in the same column.
    pub fn partner(&self, j: usize) -> usize {
        j ^ 1
    }

    /// Indices of the column's `(x, +)` pair, by current marker.
    pub fn column_pair(&self, c: usize) -> (usize, usize) {
        let (a, b) = (2 * c, 2 * c + 1);
        match self.vertices[a].marker {
            Marker::Cross => (a, b),
            Marker::Plus => (b, a),
        }
    }

    pub(crate) fn vertices_mut(&mut self) -> &mut Vec<VertexLabel> {
        &mut self.vertices
    }

    pub(crate) fn epsilon_mut(&mut self) -> &mut Vec<Vec<BigInt>> {
        &mut self.epsilon
    }
}

/// `(source, target, multiplicity)` in strip coordinates.
type ArrowSpec = ((i64, i64), (i64, i64), i64);

/// Arrows contributed by one block placed with its lower-left corner at
/// `(n, m)`.
fn block_arrows(block: Block, n: i64, m: i64) -> Vec<ArrowSpec> {
    match block {
        Block::Zero => vec![
            ((n, m + 1), (n, m), 1),
            ((n + 1, m + 1), (n + 1, m), 1),
            ((n, m), (n + 1, m + 1), 1),
            ((n + 1, m), (n, m + 1), 1),
        ],
        Block::PlusI => vec![
            ((n, m + 1), (n, m), 1),
            ((n + 1, m + 2), (n + 1, m + 1), 1),
            ((n, m), (n + 1, m + 1), 1),
            ((n + 1, m + 1), (n, m + 1), 2),
            ((n, m + 1), (n + 1, m + 2), 1),
        ],
        Block::MinusI => vec![
            ((n, m + 2), (n, m + 1), 1),
            ((n + 1, m + 1), (n + 1, m), 1),
            ((n + 1, m), (n, m + 1), 1),
            ((n, m + 1), (n + 1, m + 1), 2),
            ((n + 1, m + 1), (n, m + 2), 1),
        ],
    }
}

/// Assemble the exchange matrix of a block sequence.
///
/// Column `c` holds vertex `2c` (an `x` at height `h_c`) and vertex `2c + 1`
/// (a `+` at height `h_c + 1`).  Block `c` spans columns `c` and `c + 1`;
/// the final block wraps through the torus identification, which for a
/// period-one sequence turns cross-column arrows into self-loops that are
/// dropped.
pub fn build_quiver(seq: &BlockSequence) -> Result<Quiver, QuiverError> {
    let n = seq.period();
    let k = seq.net_rise();
    let heights = seq.heights();

    let vertices: Vec<VertexLabel> = (0..n)
        .flat_map(|c| {
            [
                VertexLabel {
                    n: c as i64,
                    m: heights[c],
                    marker: Marker::Cross,
                },
                VertexLabel {
                    n: c as i64,
                    m: heights[c] + 1,
                    marker: Marker::Plus,
                },
            ]
        })
        .collect();

    // Reduce a cover point to the vertex index it lands on.
    let resolve = |(mut pn, mut pm): (i64, i64)| -> usize {
        while pn >= n as i64 {
            pn -= n as i64;
            pm -= k;
        }
        let c = pn as usize;
        if pm == heights[c] {
            2 * c
        } else if pm == heights[c] + 1 {
            2 * c + 1
        } else {
            unreachable!("block arrow endpoint ({pn}, {pm}) misses column {c}")
        }
    };

    let mut epsilon = vec![vec![BigInt::ZERO; 2 * n]; 2 * n];
    for (c, &block) in seq.blocks().iter().enumerate() {
        let base = match block {
            Block::Zero | Block::PlusI => heights[c],
            Block::MinusI => heights[c] - 1,
        };
        for (src, dst, mult) in block_arrows(block, c as i64, base) {
            let i = resolve(src);
            let j = resolve(dst);
            if i == j {
                continue;
            }
            epsilon[i][j] += mult;
            epsilon[j][i] -= mult;
        }
    }

    Ok(Quiver::from_parts(n, k, vertices, epsilon))
}
