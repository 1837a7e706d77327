//! Shift flows: mutation words plus relabelings that return a strip quiver
//! to itself.

use crate::block::{Block, BlockSequence};
use crate::quiv::{build_quiver, Quiver};
use crate::QuiverError;

/// A flow step on a quiver: mutate at `mutations` in order, then relabel
/// vertex `i` as `permutation[i]`.  The relabeled matrix agrees with the
/// starting one.
#[derive(Debug, Clone)]
pub struct FlowPlan {
    pub quiver: Quiver,
    pub mutations: Vec<usize>,
    pub permutation: Vec<usize>,
}

impl FlowPlan {
    /// Apply the mutations and check the permutation carries the result back
    /// onto the starting matrix.  Returns the mutated, unrelabeled quiver.
    pub fn verify_closure(&self) -> Result<Quiver, String> {
        let mutated = self.quiver.mutate_word(&self.mutations);
        let d = self.quiver.vertex_count();
        for i in 0..d {
            for j in 0..d {
                let got = mutated.entry(i, j);
                let want = self
                    .quiver
                    .entry(self.permutation[i], self.permutation[j]);
                if got != want {
                    return Err(format!(
                        "entry ({i}, {j}): mutated {got} vs relabeled {want}"
                    ));
                }
            }
        }
        Ok(mutated)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The evenly sloped strip for twist `k` over period `n`: column `c` sits at
/// height `floor(k c / n)`.
pub fn uniform_sequence(n: usize, k: usize) -> Result<BlockSequence, QuiverError> {
    if n == 0 || k >= n {
        return Err(QuiverError::UnsupportedFlow {
            what: "0 <= k < N",
            n,
            k: k as i64,
        });
    }
    let blocks = (0..n)
        .map(|c| {
            let here = (k * c) / n;
            let next = (k * (c + 1)) / n;
            if next > here {
                Block::PlusI
            } else {
                Block::Zero
            }
        })
        .collect();
    BlockSequence::new(blocks)
}

/// One shift step of the evenly sloped strip.
///
/// Exactly `gcd(n, k)` columns sit at integer slope positions (`k c = 0 mod
/// n`); mutating their `+` vertices slides the whole polyline down one notch,
/// and the slid polyline is the original translated by `(c0, t0)` where `c0`
/// is minimal positive with `k c0 = gcd(n, k) mod n`.  The permutation
/// relabels mutated-quiver column `c` as original column `c - c0`.
pub fn uniform_flow(n: usize, k: usize) -> Result<FlowPlan, QuiverError> {
    let quiver = build_quiver(&uniform_sequence(n, k)?)?;
    let d = gcd(n as u64, k as u64) as usize;

    let special: Vec<usize> = (0..n).filter(|&c| (k * c).is_multiple_of(n)).collect();
    debug_assert_eq!(special.len(), d);
    let mutations: Vec<usize> = special.iter().map(|&c| 2 * c + 1).collect();

    let c0 = (0..n)
        .find(|&c| (k * c) % n == d % n)
        .expect("gcd is always hit");
    let mutated = quiver.mutate_word(&mutations);
    let mut permutation = vec![0usize; 2 * n];
    for c in 0..n {
        let target = (c + n - c0) % n;
        let (cross, plus) = mutated.column_pair(c);
        permutation[cross] = 2 * target;
        permutation[plus] = 2 * target + 1;
    }

    Ok(FlowPlan {
        quiver,
        mutations,
        permutation,
    })
}

/// Vertex ids for the fully rising strip: column `j - 1` in 1-based column
/// numbering, upper (`+`) and lower (`x`) slots.
fn upper(j: usize) -> usize {
    2 * (j - 1) + 1
}

fn lower(j: usize) -> usize {
    2 * (j - 1)
}

/// One shift step of the fully rising strip (twist equal to the period).
///
/// The word mutates the upper vertices in the order `N, ..., 2, 1` and then
/// `3, 4, ..., N`; the relabeling is the long cycle through
/// `1, 3', 3, 4', 4, ..., N', N, 1'` together with the swap `2 <-> 2'`, where
/// unprimed and primed are the upper and lower slots of a column.
pub fn ynn_flow(n: usize) -> Result<FlowPlan, QuiverError> {
    if n < 2 {
        return Err(QuiverError::UnsupportedFlow {
            what: "N >= 2",
            n,
            k: n as i64,
        });
    }
    let quiver = build_quiver(&BlockSequence::new(vec![Block::PlusI; n])?)?;

    let mut mutations: Vec<usize> = (1..=n).rev().map(upper).collect();
    mutations.extend((3..=n).map(upper));

    let mut cycle = vec![upper(1)];
    for j in 3..=n {
        cycle.push(lower(j));
        cycle.push(upper(j));
    }
    cycle.push(lower(1));

    let mut permutation: Vec<usize> = (0..2 * n).collect();
    for (pos, &v) in cycle.iter().enumerate() {
        permutation[v] = cycle[(pos + 1) % cycle.len()];
    }
    permutation[lower(2)] = upper(2);
    permutation[upper(2)] = lower(2);

    Ok(FlowPlan {
        quiver,
        mutations,
        permutation,
    })
}
