//! Polyline strip shapes: one height per column, steps of at most one,
//! closing onto itself after a full period up to the vertical twist.

use crate::ClusterError;
use quiver::{Block, BlockSequence};

/// Direction of the local move that drags one column of the strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveDir {
    Lower,
    Raise,
}

/// Heights of the polyline over one period, plus the twist picked up on
/// wrapping around.  Column c occupies rows h_c and h_c + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripShape {
    heights: Vec<i64>,
    twist: i64,
}

impl StripShape {
    pub fn new(heights: Vec<i64>, twist: i64) -> Result<Self, ClusterError> {
        if heights.is_empty() {
            return Err(ClusterError::BadInput("a strip needs at least one column".into()));
        }
        let shape = StripShape { heights, twist };
        for c in 0..shape.period() as i64 {
            let step = shape.height(c + 1) - shape.height(c);
            if step.abs() > 1 {
                return Err(ClusterError::BadInput(format!(
                    "strip step {step} after column {c} is not in {{-1,0,1}}"
                )));
            }
        }
        Ok(shape)
    }

    /// The strip drawn by a block word, based at height zero.
    pub fn from_blocks(seq: &BlockSequence) -> Self {
        StripShape { heights: seq.heights(), twist: seq.net_rise() }
    }

    pub fn period(&self) -> usize {
        self.heights.len()
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    /// Height of an arbitrary column, unwrapped through the twist.
    pub fn height(&self, c: i64) -> i64 {
        let n = self.period() as i64;
        let d = c.div_euclid(n);
        self.heights[c.rem_euclid(n) as usize] + d * self.twist
    }

    /// The block word tracing this strip, for building its quiver.
    pub fn blocks(&self) -> BlockSequence {
        let word: Vec<Block> = (0..self.period() as i64)
            .map(|c| match self.height(c + 1) - self.height(c) {
                0 => Block::Zero,
                1 => Block::PlusI,
                -1 => Block::MinusI,
                _ => unreachable!("validated on construction"),
            })
            .collect();
        BlockSequence::new(word).expect("nonempty word")
    }

    /// Whether the column can be dragged one row in the given direction
    /// with the neighbors staying within one step.
    pub fn move_allowed(&self, c: usize, dir: MoveDir) -> bool {
        let c = c as i64;
        let (lo, hi) = (self.height(c - 1), self.height(c + 1));
        let h = self.height(c);
        match dir {
            MoveDir::Lower => lo <= h && hi <= h,
            MoveDir::Raise => lo >= h && hi >= h,
        }
    }

    /// The strip with column c dragged one row, as produced by mutating
    /// that column's top (Lower) or bottom (Raise) vertex.
    pub fn moved(&self, c: usize, dir: MoveDir) -> Result<Self, ClusterError> {
        if !self.move_allowed(c, dir) {
            return Err(ClusterError::BadInput(format!(
                "column {c} cannot move {dir:?}: a neighbor is already across"
            )));
        }
        let mut heights = self.heights.clone();
        heights[c] += match dir {
            MoveDir::Lower => -1,
            MoveDir::Raise => 1,
        };
        Ok(StripShape { heights, twist: self.twist })
    }

    /// The strip translated vertically as a whole.
    pub fn shifted(&self, dm: i64) -> Self {
        StripShape { heights: self.heights.iter().map(|h| h + dm).collect(), twist: self.twist }
    }
}
