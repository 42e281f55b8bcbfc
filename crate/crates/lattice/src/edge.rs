use std::fmt;

use serde::{Deserialize, Serialize};

/// Occupancy of one edge: bit `i` is set when a path of color `i + 1` uses it.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeState(pub u32);

impl EdgeState {
    pub const EMPTY: EdgeState = EdgeState(0);

    pub fn full(k: usize) -> EdgeState {
        EdgeState((1u32 << k) - 1)
    }

    /// Builds a state from a 0/1 vector, color 1 first.
    pub fn from_bits(bits: &[i32]) -> EdgeState {
        EdgeState(bits.iter().enumerate().filter(|(_, b)| **b != 0).map(|(i, _)| 1 << i).sum())
    }

    pub fn bits(self, k: usize) -> Vec<i32> {
        (0..k).map(|i| ((self.0 >> i) & 1) as i32).collect()
    }

    /// Whether color `c` (1-based) is present.
    pub fn has(self, c: usize) -> bool {
        (self.0 >> (c - 1)) & 1 == 1
    }

    pub fn with(self, c: usize) -> EdgeState {
        EdgeState(self.0 | (1 << (c - 1)))
    }

    pub fn count(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// All states for `k` colors.
    pub fn all(k: usize) -> impl Iterator<Item = EdgeState> {
        (0..1u32 << k).map(EdgeState)
    }
}

impl fmt::Debug for EdgeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for EdgeState {
    /// Colors present, e.g. `{1,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> =
            (0..32).filter(|i| (self.0 >> i) & 1 == 1).map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", cols.join(","))
    }
}
