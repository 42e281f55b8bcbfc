use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::TableauError;

/// An entry `v` or `v'`. Ordered `1 < 2 < ... < 1' < 2' < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperLabel {
    pub value: u32,
    pub primed: bool,
}

impl SuperLabel {
    pub fn plain(value: u32) -> SuperLabel {
        SuperLabel { value, primed: false }
    }

    pub fn primed(value: u32) -> SuperLabel {
        SuperLabel { value, primed: true }
    }

    /// 1-based position in the alphabet `1..n, 1'..m'`.
    pub fn rank(&self, n: usize) -> usize {
        if self.primed {
            n + self.value as usize
        } else {
            self.value as usize
        }
    }
}

impl Ord for SuperLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.primed, self.value).cmp(&(other.primed, other.value))
    }
}

impl PartialOrd for SuperLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SuperLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for SuperLabel {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<SuperLabel, TableauError> {
        let s = s.trim();
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        match body.parse::<u32>() {
            Ok(v) if v > 0 => Ok(SuperLabel { value: v, primed }),
            _ => Err(TableauError::BadLabel(s.to_string())),
        }
    }
}

/// The alphabet `1 < ... < n < 1' < ... < m'`.
pub fn alphabet(n: usize, m: usize) -> Vec<SuperLabel> {
    (1..=n as u32)
        .map(SuperLabel::plain)
        .chain((1..=m as u32).map(SuperLabel::primed))
        .collect()
}
