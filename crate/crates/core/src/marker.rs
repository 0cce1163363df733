//! Markers and intervals: positions in one of the two input strings.
//!
//! Positions are 1-based. Positions 0 and n+1 are sentinels that only occur
//! as endpoints of phantom frames at the string ends; every other operation
//! rejects them.

use crate::error::Error;
use serde::{Deserialize, Serialize};

/// Which of the two input strings a marker lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StrId {
    X,
    Y,
}

impl StrId {
    pub fn other(self) -> StrId {
        match self {
            StrId::X => StrId::Y,
            StrId::Y => StrId::X,
        }
    }
}

impl std::fmt::Display for StrId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StrId::X => write!(f, "X"),
            StrId::Y => write!(f, "Y"),
        }
    }
}

/// An occurrence of a letter at a specific position of one string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Marker {
    pub string: StrId,
    /// 1-based position; 0 and n+1 are phantom-frame sentinels.
    pub pos: i64,
}

impl Marker {
    pub fn new(string: StrId, pos: i64) -> Self {
        Marker { string, pos }
    }

    /// Unchecked positional shift. Range checks are the caller's business;
    /// frame formulas routinely step outside the string and intersect later.
    pub fn shifted(self, d: i64) -> Marker {
        Marker { string: self.string, pos: self.pos + d }
    }
}

/// Signed distance from `a` to `b`: number of steps, negative if `b` precedes `a`.
pub fn signed_distance(a: Marker, b: Marker) -> Result<i64, Error> {
    if a.string != b.string {
        return Err(Error::DifferentStrings);
    }
    Ok(b.pos - a.pos)
}

/// A set of consecutive markers of one string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub string: StrId,
    pub first: i64,
    pub last: i64,
}

impl Interval {
    pub fn new(string: StrId, first: i64, last: i64) -> Self {
        debug_assert!(first <= last, "interval [{first},{last}] is empty");
        Interval { string, first, last }
    }

    pub fn len(&self) -> i64 {
        self.last - self.first + 1
    }

    pub fn is_empty(&self) -> bool {
        false // intervals are non-empty by construction
    }

    pub fn first_marker(&self) -> Marker {
        Marker::new(self.string, self.first)
    }

    pub fn last_marker(&self) -> Marker {
        Marker::new(self.string, self.last)
    }

    pub fn contains_pos(&self, pos: i64) -> bool {
        self.first <= pos && pos <= self.last
    }

    /// An interval contains an adjacency iff it contains both of its markers.
    pub fn contains_adjacency(&self, left_pos: i64) -> bool {
        self.first <= left_pos && left_pos + 1 <= self.last
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.string == other.string && self.first <= other.first && other.last <= self.last
    }

    pub fn intersect(&self, ofirst: i64, olast: i64) -> Option<Interval> {
        let first = self.first.max(ofirst);
        let last = self.last.min(olast);
        if first <= last {
            Some(Interval::new(self.string, first, last))
        } else {
            None
        }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} [{},{}]", self.string, self.first, self.last)
    }
}
