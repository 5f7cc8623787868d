//! Shortest unique palindromic substring (SUPS) queries on run-length
//! encoded strings.
//!
//! The index is built from the run sequence alone and its size depends only
//! on the number of runs `m`, never on the decompressed length `n`:
//!
//! 1. [`MaxPalTable`] runs Manacher's algorithm over the runs and extends
//!    every run-centered palindrome to its maximal length.
//! 2. [`RleEertree`] is a palindromic tree over the run alphabet, counting
//!    run-bounded and maximal occurrences.
//! 3. [`MupsList`] extracts the minimal unique palindromic substrings from
//!    the tree, sorted by position.
//! 4. [`SupsIndex`] answers interval queries with predecessor/successor
//!    search and range-minimum queries over the MUPS arrays.
//!
//! Positions are 1-based and inclusive, as in `S[i..j]`. Run indices are
//! 0-based slice indices.
//!
//! ```
//! use sups_core::{Interval, RleString, SupsIndex};
//!
//! let rle = RleString::encode(b"bbbaabbabbaaabbaaabbb");
//! let index = SupsIndex::build(rle).unwrap();
//! let answer = index.query(6, 7).unwrap();
//! assert_eq!(answer.intervals(), &[Interval::new(6, 10)]);
//! ```

mod error;
pub mod interval;
pub mod manacher;
pub mod mups;
pub mod oracle;
pub mod query;
pub mod rle;
pub mod tree;

use std::fmt;

pub use error::{Error, Result};
pub use interval::{RmqIndex, SortedPositionIndex};
pub use manacher::MaxPalTable;
pub use mups::{Mups, MupsList, MupsRule};
pub use query::{BuildStats, SupsAnswer, SupsIndex};
pub use rle::{RleString, Run};
pub use tree::{NodeId, PalNode, RleEertree};

/// Symbols only need equality and a total order.
pub trait Symbol: Copy + Ord + fmt::Debug {}

impl<T: Copy + Ord + fmt::Debug> Symbol for T {}

/// A 1-based inclusive interval `[beg, end]` of decompressed positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub beg: u64,
    pub end: u64,
}

impl Interval {
    pub const fn new(beg: u64, end: u64) -> Self {
        Interval { beg, end }
    }

    #[allow(clippy::len_without_is_empty)]
    pub const fn len(&self) -> u64 {
        self.end - self.beg + 1
    }

    /// `beg + end`, i.e. twice the center.
    pub const fn doubled_center(&self) -> u64 {
        self.beg + self.end
    }

    pub const fn contains(&self, other: &Interval) -> bool {
        self.beg <= other.beg && other.end <= self.end
    }

    /// Builds the interval of length `len` whose doubled center is `doubled_center`.
    pub(crate) const fn around(doubled_center: u64, len: u64) -> Self {
        let beg = (doubled_center + 1 - len) / 2;
        Interval::new(beg, beg + len - 1)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.beg, self.end)
    }
}
