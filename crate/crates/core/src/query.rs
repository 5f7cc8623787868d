//! SUPS queries over the assembled index.

use crate::{
    Error, Interval, MaxPalTable, MupsList, MupsRule, Result, RleEertree, RleString, RmqIndex,
    SortedPositionIndex, Symbol,
};

/// Sizes observed while building, kept for verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildStats {
    pub runs: usize,
    pub distinct_runs: usize,
    /// Including both roots.
    pub tree_nodes: usize,
    pub mups: usize,
}

/// Immutable index answering SUPS queries in time independent of `n`.
#[derive(Debug, Clone)]
pub struct SupsIndex<S = u8> {
    rle: RleString<S>,
    max_pal: MaxPalTable,
    mups: MupsList,
    beg_index: SortedPositionIndex,
    end_index: SortedPositionIndex,
    len_rmq: RmqIndex,
    stats: BuildStats,
}

/// All SUPSs for one query interval, sorted by start; possibly empty.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SupsAnswer {
    intervals: Vec<Interval>,
}

impl SupsAnswer {
    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }
}

impl<S: Symbol> SupsIndex<S> {
    pub fn build(rle: RleString<S>) -> Result<Self> {
        Self::build_with(rle, MupsRule::Corrected)
    }

    pub fn build_with(rle: RleString<S>, rule: MupsRule) -> Result<Self> {
        let max_pal = MaxPalTable::new(&rle);
        let tree = RleEertree::build(&rle, &max_pal)?;
        let mups = MupsList::extract(&tree, &rle, rule)?;
        let stats = BuildStats {
            runs: rle.num_runs(),
            distinct_runs: rle.distinct_runs(),
            tree_nodes: tree.num_nodes(),
            mups: mups.len(),
        };
        drop(tree);
        Ok(SupsIndex {
            beg_index: SortedPositionIndex::new(mups.begins().to_vec()),
            end_index: SortedPositionIndex::new(mups.ends().to_vec()),
            len_rmq: RmqIndex::new(mups.lengths().to_vec()),
            rle,
            max_pal,
            mups,
            stats,
        })
    }

    pub fn rle(&self) -> &RleString<S> {
        &self.rle
    }

    pub fn max_pal(&self) -> &MaxPalTable {
        &self.max_pal
    }

    pub fn mups(&self) -> &MupsList {
        &self.mups
    }

    pub fn stats(&self) -> BuildStats {
        self.stats
    }

    /// Heap bytes held by the index. Depends only on the run structure.
    pub fn heap_bytes(&self) -> usize {
        self.rle.heap_bytes()
            + self.max_pal.heap_bytes()
            + self.mups.heap_bytes()
            + self.beg_index.heap_bytes()
            + self.end_index.heap_bytes()
            + self.len_rmq.heap_bytes()
    }

    /// Whether `[beg, end]`, centered on run `center_run`, is a palindrome.
    pub fn is_run_centered_palindrome(
        &self,
        center_run: usize,
        beg: u64,
        end: u64,
    ) -> Result<bool> {
        let center = self.rle.run_center_doubled(center_run)?;
        if beg > end || beg + end != center {
            return Err(Error::NotRunCentered {
                run: center_run,
                interval: Interval::new(beg, end),
            });
        }
        Ok(end - beg < self.max_pal.max_len(center_run))
    }

    /// All shortest unique palindromic substrings covering `[s, t]`.
    pub fn query(&self, s: u64, t: u64) -> Result<SupsAnswer> {
        let n = self.rle.len();
        if s == 0 || t == 0 || s > n || t > n {
            return Err(Error::IntervalOutOfRange { s, t, len: n });
        }
        if s > t {
            return Err(Error::EmptyInterval { s, t });
        }
        let q = self.beg_index.succ(s);
        let p = self.end_index.pred(t);
        // MUPSs at ranks q..=p lie inside [s, t].
        let contained = (p + 1).saturating_sub(q);
        let intervals = match contained {
            0 => self.cover_without_mups(s, t, p, q),
            1 => self.extend_single(s, t, q).into_iter().collect(),
            _ => Vec::new(),
        };
        Ok(SupsAnswer { intervals })
    }

    /// The only possible answer when one MUPS (rank `r`) lies in `[s, t]`:
    /// that MUPS stretched symmetrically to cover the query.
    fn extend_single(&self, s: u64, t: u64, r: usize) -> Option<Interval> {
        let mups = self.mups.interval(r - 1);
        let z = (mups.beg - s).max(t - mups.end);
        self.palindrome_around(r, mups.len() + 2 * z)
    }

    fn cover_without_mups(&self, s: u64, t: u64, p: usize, q: usize) -> Vec<Interval> {
        let d = self.mups.len();
        let mut candidates: Vec<Interval> = Vec::new();
        // Rank p ends at or before t: mirror it out to t.
        if p >= 1 {
            let left = self.mups.interval(p - 1);
            if let Some(c) = self.palindrome_around(p, left.len() + 2 * (t - left.end)) {
                candidates.push(c);
            }
        }
        // Rank q starts at or after s: mirror it out to s.
        if q <= d {
            let right = self.mups.interval(q - 1);
            if let Some(c) = self.palindrome_around(q, right.len() + 2 * (right.beg - s)) {
                candidates.push(c);
            }
        }
        // Ranks strictly between p and q already cover [s, t].
        if let Some((_, ranks)) = self.len_rmq.range_min_all(p + 1, q - 1) {
            candidates.extend(ranks.into_iter().map(|r| self.mups.interval(r - 1)));
        }
        let Some(shortest) = candidates.iter().map(Interval::len).min() else {
            return candidates;
        };
        candidates.retain(|c| c.len() == shortest);
        candidates.sort_unstable();
        debug_assert!(candidates.windows(2).all(|w| w[0] != w[1]));
        candidates
    }

    /// The interval of length `len` around the center of MUPS rank `r`, if
    /// it is a palindrome.
    fn palindrome_around(&self, r: usize, len: u64) -> Option<Interval> {
        let run = self.mups.center_runs()[r - 1];
        (len <= self.max_pal.max_len(run))
            .then(|| Interval::around(self.rle.center_doubled_unchecked(run), len))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn index(text: &[u8]) -> SupsIndex {
        SupsIndex::build(RleString::encode(text)).unwrap()
    }

    fn answer(index: &SupsIndex, s: u64, t: u64) -> Vec<(u64, u64)> {
        index
            .query(s, t)
            .unwrap()
            .intervals()
            .iter()
            .map(|i| (i.beg, i.end))
            .collect()
    }

    const SAMPLE: &[u8] = b"bbbaabbabbaaabbaaabbb";

    #[test]
    fn sample_queries() {
        let idx = index(SAMPLE);
        assert_eq!(answer(&idx, 6, 7), vec![(6, 10)]);
        assert_eq!(answer(&idx, 6, 9), vec![(6, 10)]);
        assert_eq!(answer(&idx, 9, 11), vec![(5, 11)]);
        assert_eq!(answer(&idx, 3, 9), vec![]);
        assert_eq!(answer(&idx, 1, 2), vec![]);
    }

    #[test]
    fn trivial_queries() {
        assert_eq!(answer(&index(b"ab"), 1, 2), vec![]);
        assert_eq!(answer(&index(b"aaaaa"), 2, 3), vec![(1, 5)]);
    }

    #[test]
    fn palindrome_check() {
        let idx = index(SAMPLE);
        assert_eq!(idx.is_run_centered_palindrome(3, 6, 10), Ok(true));
        assert_eq!(idx.is_run_centered_palindrome(1, 1, 8), Ok(false));
        assert_eq!(idx.is_run_centered_palindrome(3, 8, 8), Ok(true));
        assert!(matches!(
            idx.is_run_centered_palindrome(3, 6, 9),
            Err(Error::NotRunCentered { run: 3, .. })
        ));
    }

    #[test]
    fn domain_errors() {
        let idx = index(SAMPLE);
        assert_eq!(
            idx.query(0, 5),
            Err(Error::IntervalOutOfRange {
                s: 0,
                t: 5,
                len: 21
            })
        );
        assert_eq!(
            idx.query(3, 22),
            Err(Error::IntervalOutOfRange {
                s: 3,
                t: 22,
                len: 21
            })
        );
        assert_eq!(idx.query(5, 4), Err(Error::EmptyInterval { s: 5, t: 4 }));
        assert_eq!(
            idx.query(0, 5).unwrap_err().to_string(),
            "interval out of range [1,21]"
        );
        let empty = SupsIndex::build(RleString::<u8>::encode(b"")).unwrap();
        assert!(empty.query(1, 1).is_err());
    }

    #[test]
    fn huge_exponents() {
        let rle =
            RleString::from_runs([(b'a', 1_000_000_000), (b'b', 3), (b'a', 999_999_999)]).unwrap();
        let idx = SupsIndex::build(rle).unwrap();
        // a^{1e9} is unique; b^3 is unique.
        assert_eq!(
            idx.query(1_000_000_001, 1_000_000_003).unwrap().intervals(),
            &[Interval::new(1_000_000_001, 1_000_000_003)]
        );
        assert_eq!(
            idx.query(5, 6).unwrap().intervals(),
            &[Interval::new(1, 1_000_000_000)]
        );
    }
}
