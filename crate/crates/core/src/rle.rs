//! Run-length representation of the text and position arithmetic.

use std::collections::BTreeSet;

use crate::{Error, Result, Symbol};

/// A maximal block `symbol^exponent`.
///
/// The derived order compares the symbol first, then the exponent, which is
/// the order used for edge labels of the [`RleEertree`](crate::RleEertree).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Run<S = u8> {
    pub symbol: S,
    pub exponent: u64,
}

impl<S> Run<S> {
    pub const fn new(symbol: S, exponent: u64) -> Self {
        Run { symbol, exponent }
    }
}

/// A string held only as its run sequence, with cumulative end positions.
///
/// Adjacent runs always carry distinct symbols; the decompressed text is
/// never materialized except through [`RleString::decode`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RleString<S = u8> {
    runs: Vec<Run<S>>,
    run_ends: Vec<u64>,
}

impl<S: Symbol> RleString<S> {
    /// Run-length encodes a plain symbol sequence.
    pub fn encode(text: &[S]) -> Self {
        let mut runs: Vec<Run<S>> = Vec::new();
        for &symbol in text {
            match runs.last_mut() {
                Some(last) if last.symbol == symbol => last.exponent += 1,
                _ => runs.push(Run::new(symbol, 1)),
            }
        }
        let mut run_ends = Vec::with_capacity(runs.len());
        let mut end = 0;
        for run in &runs {
            end += run.exponent;
            run_ends.push(end);
        }
        RleString { runs, run_ends }
    }

    /// Builds a string from explicit `(symbol, exponent)` tokens.
    ///
    /// Tokens must already be canonical: exponents are positive and adjacent
    /// symbols differ. Nothing is merged.
    pub fn from_runs<I>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, u64)>,
    {
        let mut runs: Vec<Run<S>> = Vec::new();
        let mut run_ends = Vec::new();
        let mut end: u64 = 0;
        for (index, (symbol, exponent)) in tokens.into_iter().enumerate() {
            if exponent == 0 {
                return Err(Error::ZeroExponent { index });
            }
            if let Some(prev) = runs.last() {
                if prev.symbol == symbol {
                    return Err(Error::AdjacentEqualSymbols { index: index - 1 });
                }
            }
            end = end
                .checked_add(exponent)
                .ok_or(Error::LengthOverflow { index })?;
            runs.push(Run::new(symbol, exponent));
            run_ends.push(end);
        }
        Ok(RleString { runs, run_ends })
    }

    pub fn runs(&self) -> &[Run<S>] {
        &self.runs
    }

    pub fn run(&self, j: usize) -> Result<Run<S>> {
        self.check_run(j)?;
        Ok(self.runs[j])
    }

    /// Number of runs `m`.
    pub fn num_runs(&self) -> usize {
        self.runs.len()
    }

    /// Decompressed length `n`.
    pub fn len(&self) -> u64 {
        self.run_ends.last().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of distinct `(symbol, exponent)` pairs.
    pub fn distinct_runs(&self) -> usize {
        self.runs.iter().collect::<BTreeSet<_>>().len()
    }

    /// First position covered by run `j`.
    pub fn run_begin(&self, j: usize) -> Result<u64> {
        self.check_run(j)?;
        Ok(self.begin_unchecked(j))
    }

    /// Last position covered by run `j`.
    pub fn run_end(&self, j: usize) -> Result<u64> {
        self.check_run(j)?;
        Ok(self.run_ends[j])
    }

    /// `run_begin(j) + run_end(j)`: the run's center, doubled so that
    /// half-integer centers stay integral.
    pub fn run_center_doubled(&self, j: usize) -> Result<u64> {
        self.check_run(j)?;
        Ok(self.center_doubled_unchecked(j))
    }

    /// Index of the run covering position `p`.
    pub fn run_of_position(&self, p: u64) -> Result<usize> {
        if p == 0 || p > self.len() {
            return Err(Error::PositionOutOfRange {
                position: p,
                len: self.len(),
            });
        }
        Ok(self.run_ends.partition_point(|&end| end < p))
    }

    /// Expands the runs back into a plain sequence. Only sensible for small
    /// strings; the index itself never calls this.
    pub fn decode(&self) -> Vec<S> {
        let mut out = Vec::new();
        for run in &self.runs {
            out.extend(std::iter::repeat_n(run.symbol, run.exponent as usize));
        }
        out
    }

    /// Heap bytes owned by this string.
    pub fn heap_bytes(&self) -> usize {
        self.runs.len() * std::mem::size_of::<Run<S>>()
            + self.run_ends.len() * std::mem::size_of::<u64>()
    }

    pub(crate) fn begin_unchecked(&self, j: usize) -> u64 {
        if j == 0 {
            1
        } else {
            self.run_ends[j - 1] + 1
        }
    }

    pub(crate) fn end_unchecked(&self, j: usize) -> u64 {
        self.run_ends[j]
    }

    pub(crate) fn center_doubled_unchecked(&self, j: usize) -> u64 {
        self.begin_unchecked(j) + self.run_ends[j]
    }

    fn check_run(&self, j: usize) -> Result<()> {
        if j < self.runs.len() {
            Ok(())
        } else {
            Err(Error::RunOutOfRange {
                index: j,
                runs: self.runs.len(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample_runs() -> RleString {
        RleString::from_runs([(b'a', 2), (b'c', 7), (b'b', 2), (b'a', 1), (b'b', 4)]).unwrap()
    }

    #[test]
    fn encode_sample() {
        let rle = RleString::encode(b"aacccccccbbabbbb");
        assert_eq!(rle, sample_runs());
        assert_eq!(rle.num_runs(), 5);
        assert_eq!(rle.len(), 16);
    }

    #[test]
    fn encode_empty_and_single_run() {
        let empty = RleString::<u8>::encode(b"");
        assert_eq!(empty.num_runs(), 0);
        assert_eq!(empty.len(), 0);
        assert!(empty.is_empty());

        let single = RleString::encode(b"aaaaa");
        assert_eq!(single.runs(), &[Run::new(b'a', 5)]);
        assert_eq!(single.len(), 5);
        assert_eq!(single.run_end(0), Ok(5));
        assert_eq!(single.run_center_doubled(0), Ok(6));
    }

    #[test]
    fn from_runs_validates() {
        let rle = RleString::from_runs([(b'b', 3), (b'a', 2), (b'b', 2)]).unwrap();
        assert_eq!(rle.len(), 7);
        assert_eq!(
            RleString::from_runs([(b'a', 2), (b'a', 3)]),
            Err(Error::AdjacentEqualSymbols { index: 0 })
        );
        assert_eq!(
            RleString::from_runs([(b'a', 0)]),
            Err(Error::ZeroExponent { index: 0 })
        );
        assert_eq!(
            RleString::from_runs([(b'a', u64::MAX), (b'b', 1)]),
            Err(Error::LengthOverflow { index: 1 })
        );
    }

    #[test]
    fn run_positions() {
        let rle = sample_runs();
        assert_eq!(rle.run_begin(0), Ok(1));
        assert_eq!(rle.run_begin(1), Ok(3));
        assert_eq!(rle.run_end(1), Ok(9));
        assert_eq!(rle.run_center_doubled(1), Ok(12));
        assert_eq!(
            rle.run_begin(5),
            Err(Error::RunOutOfRange { index: 5, runs: 5 })
        );
        assert_eq!(
            RleString::from_runs([(b'a', 2)])
                .unwrap()
                .run_center_doubled(0),
            Ok(3)
        );
    }

    #[test]
    fn position_lookup() {
        let rle = sample_runs();
        assert_eq!(rle.run_of_position(9), Ok(1));
        assert_eq!(rle.run_of_position(1), Ok(0));
        assert_eq!(rle.run_of_position(16), Ok(4));
        assert!(rle.run_of_position(0).is_err());
        assert!(rle.run_of_position(17).is_err());
    }

    #[test]
    fn huge_exponents_stay_in_range() {
        let rle =
            RleString::from_runs((0..100_000u64).map(|i| ((i % 2) as u8, 1_000_000_000))).unwrap();
        assert_eq!(rle.len(), 100_000 * 1_000_000_000);
        assert_eq!(rle.run_of_position(rle.len()), Ok(99_999));
    }

    proptest! {
        #[test]
        fn encode_round_trips(text in proptest::collection::vec(0u8..3, 0..60)) {
            let rle = RleString::encode(&text);
            prop_assert_eq!(rle.decode(), text);
            prop_assert!(rle.runs().windows(2).all(|w| w[0].symbol != w[1].symbol));
            prop_assert!(rle.distinct_runs() <= rle.num_runs());
            for j in 0..rle.num_runs() {
                let (b, e) = (rle.run_begin(j).unwrap(), rle.run_end(j).unwrap());
                prop_assert_eq!(e - b + 1, rle.runs()[j].exponent);
                prop_assert_eq!(rle.run_of_position(b), Ok(j));
                prop_assert_eq!(rle.run_of_position(e), Ok(j));
            }
        }
    }
}
