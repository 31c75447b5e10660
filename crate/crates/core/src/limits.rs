//! Size caps shared by the enumerating and eliminating routines.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Maximum number of candidate vectors visited while enumerating a toric set.
    pub enumeration: u64,
    /// Maximum number of matrix entries (rows times columns) in one elimination.
    pub matrix: u64,
    /// Maximum number of messages visited by the minimum-distance search.
    pub search: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { enumeration: 100_000_000, matrix: 100_000_000, search: 10_000_000 }
    }
}
