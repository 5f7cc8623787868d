use thiserror::Error;

use crate::Interval;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("run {index} has exponent 0")]
    ZeroExponent { index: usize },

    #[error("runs {index} and {} share a symbol; adjacent runs must differ", index + 1)]
    AdjacentEqualSymbols { index: usize },

    #[error("decompressed length overflows 64 bits at run {index}")]
    LengthOverflow { index: usize },

    #[error("run index {index} out of range (string has {runs} runs)")]
    RunOutOfRange { index: usize, runs: usize },

    #[error("position {position} out of range [1,{len}]")]
    PositionOutOfRange { position: u64, len: u64 },

    #[error("interval out of range [1,{len}]")]
    IntervalOutOfRange { s: u64, t: u64, len: u64 },

    #[error("interval start {s} exceeds end {t}")]
    EmptyInterval { s: u64, t: u64 },

    #[error("interval {interval} is not centered on run {run}")]
    NotRunCentered { run: usize, interval: Interval },

    #[error("root node {node} has no palindrome")]
    RootNode { node: usize },

    #[error("RLE-maximal palindrome centered at run {run} is missing from the suffix-link chain")]
    MissingCoreNode { run: usize },

    #[error("MUPS candidates {first} and {second} share center run {run}")]
    CenterCollision {
        run: usize,
        first: Interval,
        second: Interval,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
