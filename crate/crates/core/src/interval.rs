//! Predecessor/successor search and range-minimum queries over the MUPS
//! arrays.
//!
//! Ranks here are 1-based so that `0` and `d + 1` can serve as the "none"
//! sentinels of `pred` and `succ`.

/// Strictly increasing positions with rank queries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SortedPositionIndex {
    values: Vec<u64>,
}

impl SortedPositionIndex {
    pub fn new(values: Vec<u64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
        SortedPositionIndex { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest rank `i` with `values[i] <= k`, or 0.
    pub fn pred(&self, k: u64) -> usize {
        self.values.partition_point(|&v| v <= k)
    }

    /// Smallest rank `i` with `values[i] >= k`, or `len() + 1`.
    pub fn succ(&self, k: u64) -> usize {
        self.values.partition_point(|&v| v < k) + 1
    }

    pub fn heap_bytes(&self) -> usize {
        self.values.len() * std::mem::size_of::<u64>()
    }
}

/// Sparse table over an array, returning the leftmost minimum.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RmqIndex {
    base: Vec<u64>,
    /// `levels[k][i]` is the 0-based argmin of `base[i..i + 2^(k+1)]`;
    /// level 0 (single elements) is implicit.
    levels: Vec<Vec<u32>>,
}

impl RmqIndex {
    pub fn new(base: Vec<u64>) -> Self {
        let d = base.len();
        let mut levels: Vec<Vec<u32>> = Vec::new();
        let mut width = 2;
        while width <= d {
            let half = width / 2;
            let level: Vec<u32> = (0..=d - width)
                .map(|i| {
                    let (a, b) = match levels.last() {
                        Some(prev) => (prev[i], prev[i + half]),
                        None => (i as u32, (i + 1) as u32),
                    };
                    if base[b as usize] < base[a as usize] {
                        b
                    } else {
                        a
                    }
                })
                .collect();
            levels.push(level);
            width *= 2;
        }
        RmqIndex { base, levels }
    }

    pub fn base(&self) -> &[u64] {
        &self.base
    }

    /// Leftmost rank in `[lo, hi]` attaining the minimum, or `None` when
    /// the range is empty.
    pub fn argmin(&self, lo: usize, hi: usize) -> Option<usize> {
        if lo == 0 || lo > hi || hi > self.base.len() {
            return None;
        }
        let (i, j) = (lo - 1, hi - 1);
        let span = j - i + 1;
        if span == 1 {
            return Some(lo);
        }
        let k = span.ilog2() as usize;
        let level = &self.levels[k - 1];
        let (a, b) = (level[i] as usize, level[j + 1 - (1 << k)] as usize);
        Some(if self.base[b] < self.base[a] { b } else { a } + 1)
    }

    /// The minimum over `[lo, hi]` and every rank attaining it, ascending.
    ///
    /// Splits recursively around each argmin, stopping in any part whose
    /// minimum exceeds the global one, so the cost is proportional to the
    /// number of ranks reported.
    pub fn range_min_all(&self, lo: usize, hi: usize) -> Option<(u64, Vec<usize>)> {
        let first = self.argmin(lo, hi)?;
        let min = self.base[first - 1];
        let mut ranks = Vec::new();
        let mut stack = vec![(lo, hi)];
        while let Some((lo, hi)) = stack.pop() {
            let Some(r) = self.argmin(lo, hi) else {
                continue;
            };
            if self.base[r - 1] != min {
                continue;
            }
            ranks.push(r);
            stack.push((lo, r - 1));
            stack.push((r + 1, hi));
        }
        ranks.sort_unstable();
        Some((min, ranks))
    }

    pub fn heap_bytes(&self) -> usize {
        self.base.len() * std::mem::size_of::<u64>()
            + self
                .levels
                .iter()
                .map(|l| l.len() * std::mem::size_of::<u32>())
                .sum::<usize>()
    }
}
