//! Manacher's algorithm over the run sequence.
//!
//! Treating each run `(symbol, exponent)` as one letter, the odd-center
//! radii give every RLE-maximal palindrome. Even centers are skipped: two
//! adjacent runs never share a symbol, so no palindrome has an even number
//! of runs. A single flank check then extends each one to the maximal
//! palindrome of the decompressed string centered on that run.

use crate::{RleString, Symbol};

/// Per-run radii (in runs) and maximal palindrome lengths (in characters).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxPalTable {
    rle_radius: Vec<usize>,
    max_len: Vec<u64>,
}

impl MaxPalTable {
    pub fn new<S: Symbol>(rle: &RleString<S>) -> Self {
        let rle_radius = rle_maximal_palindromes(rle);
        let max_len = extend_to_maximal(rle, &rle_radius);
        MaxPalTable {
            rle_radius,
            max_len,
        }
    }

    /// `r` such that runs `j-r..=j+r` form the RLE-maximal palindrome at run `j`.
    pub fn rle_radius(&self, j: usize) -> usize {
        self.rle_radius[j]
    }

    /// Length of the maximal palindrome centered at the center of run `j`.
    pub fn max_len(&self, j: usize) -> u64 {
        self.max_len[j]
    }

    pub fn radii(&self) -> &[usize] {
        &self.rle_radius
    }

    pub fn max_lens(&self) -> &[u64] {
        &self.max_len
    }

    pub fn heap_bytes(&self) -> usize {
        self.rle_radius.len() * std::mem::size_of::<usize>()
            + self.max_len.len() * std::mem::size_of::<u64>()
    }
}

/// Odd-center Manacher over runs, compared as `(symbol, exponent)` pairs.
pub fn rle_maximal_palindromes<S: Symbol>(rle: &RleString<S>) -> Vec<usize> {
    let runs = rle.runs();
    let m = runs.len();
    let mut radius = vec![0usize; m];
    // Rightmost palindrome found so far covers runs [left, right).
    let (mut left, mut right) = (0usize, 0usize);
    for i in 0..m {
        let mut k = if i < right {
            radius[left + right - 1 - i].min(right - 1 - i)
        } else {
            0
        };
        while i > k && i + k + 1 < m && runs[i - k - 1] == runs[i + k + 1] {
            k += 1;
        }
        radius[i] = k;
        if i + k + 1 > right {
            left = i - k;
            right = i + k + 1;
        }
    }
    radius
}

/// Extends each RLE-maximal palindrome by the shorter of two same-symbol
/// flanking runs.
pub fn extend_to_maximal<S: Symbol>(rle: &RleString<S>, rle_radius: &[usize]) -> Vec<u64> {
    let runs = rle.runs();
    let m = runs.len();
    rle_radius
        .iter()
        .enumerate()
        .map(|(j, &r)| {
            let (first, last) = (j - r, j + r);
            let core = rle.end_unchecked(last) - rle.begin_unchecked(first) + 1;
            let ext =
                if first > 0 && last + 1 < m && runs[first - 1].symbol == runs[last + 1].symbol {
                    runs[first - 1].exponent.min(runs[last + 1].exponent)
                } else {
                    0
                };
            core + 2 * ext
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caabbcccbbaaaac() {
        let rle = RleString::encode(b"caabbcccbbaaaac");
        let table = MaxPalTable::new(&rle);
        // b^2 c^3 b^2 is RLE-maximal; a^2 b^2 c^3 b^2 a^2 is maximal.
        assert_eq!(table.rle_radius(3), 1);
        assert_eq!(table.max_len(3), 11);
        // leftmost a^2 is both.
        assert_eq!(table.rle_radius(1), 0);
        assert_eq!(table.max_len(1), 2);
    }

    #[test]
    fn single_run() {
        let table = MaxPalTable::new(&RleString::encode(b"aaaaa"));
        assert_eq!(table.radii(), &[0]);
        assert_eq!(table.max_lens(), &[5]);
    }

    #[test]
    fn empty() {
        let table = MaxPalTable::new(&RleString::<u8>::encode(b""));
        assert!(table.radii().is_empty());
    }

    #[test]
    fn radii_are_rle_maximal() {
        let rle = RleString::encode(b"bbbaabbabbaaabbaaabbbabababaab");
        let runs = rle.runs();
        let radius = rle_maximal_palindromes(&rle);
        for (j, &r) in radius.iter().enumerate() {
            for k in 1..=r {
                assert_eq!(runs[j - k], runs[j + k]);
            }
            assert!(j == r || j + r + 1 == runs.len() || runs[j - r - 1] != runs[j + r + 1]);
        }
    }
}
