//! Column-to-column blocks and the strips they concatenate into.

use crate::QuiverError;
use serde::{Deserialize, Serialize};

/// One cell of a strip: how the marked pair moves from column `c` to `c + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Block {
    /// Flat step, the pair stays at the same height.
    Zero,
    /// Rising step, the pair moves up by one.
    PlusI,
    /// Falling step, the pair moves down by one.
    MinusI,
}

impl Block {
    /// Height change across the block.
    pub fn rise(self) -> i64 {
        match self {
            Block::Zero => 0,
            Block::PlusI => 1,
            Block::MinusI => -1,
        }
    }
}

/// A cyclic word of blocks.  Column `c` sits at height `h_c`, the partial sum
/// of rises, and the word closes up on the torus `(n, m) ~ (n + N, m + k)`
/// where `k = h_N` is the net rise.
///
/// Requires `|k| <= N` trivially; both signs of `k` are accepted since the
/// strip construction is symmetric under flipping the cylinder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSequence {
    blocks: Vec<Block>,
}

impl BlockSequence {
    pub fn new(blocks: Vec<Block>) -> Result<Self, QuiverError> {
        let n = blocks.len();
        if n == 0 {
            return Err(QuiverError::InvalidSequence { n: 0, k: 0 });
        }
        Ok(BlockSequence { blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of columns, the horizontal period.
    pub fn period(&self) -> usize {
        self.blocks.len()
    }

    /// Net rise over one period, the vertical twist of the torus.
    pub fn net_rise(&self) -> i64 {
        self.blocks.iter().map(|b| b.rise()).sum()
    }

    /// Heights `h_0 = 0, h_1, ..., h_{N-1}` of the column base points.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.blocks.len());
        let mut acc = 0;
        for b in &self.blocks {
            h.push(acc);
            acc += b.rise();
        }
        h
    }
}
