//! Brute-force reference answers on small plain strings.
//!
//! Everything here works on the decompressed text directly and shares no
//! code with the index beyond the [`Interval`] type. It is cubic or worse
//! and meant for strings of a few hundred symbols at most.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use crate::{Error, Interval, Result};

fn slice<S>(text: &[S], interval: Interval) -> &[S] {
    &text[interval.beg as usize - 1..interval.end as usize]
}

pub fn is_palindrome<S: PartialEq>(text: &[S]) -> bool {
    text.iter().eq(text.iter().rev())
}

/// Number of (possibly overlapping) occurrences of `pattern` in `text`.
pub fn occurrences<S: PartialEq>(text: &[S], pattern: &[S]) -> usize {
    if pattern.is_empty() || pattern.len() > text.len() {
        return 0;
    }
    text.windows(pattern.len())
        .filter(|w| *w == pattern)
        .count()
}

/// Every palindromic substring occurrence that occurs exactly once.
pub fn unique_palindromes<S: Eq + Hash>(text: &[S]) -> Vec<Interval> {
    let n = text.len();
    let mut counts: HashMap<&[S], usize> = HashMap::new();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let sub = &text[i..=j];
            if !is_palindrome(sub) {
                continue;
            }
            let occ = *counts.entry(sub).or_insert_with(|| occurrences(text, sub));
            if occ == 1 {
                out.push(Interval::new(i as u64 + 1, j as u64 + 1));
            }
        }
    }
    out
}

/// Minimal unique palindromic substrings, sorted by start.
pub fn mups<S: Eq + Hash>(text: &[S]) -> Vec<Interval> {
    mups_among(text, &unique_palindromes(text))
}

/// MUPSs selected from a precomputed [`unique_palindromes`] list.
pub fn mups_among<S: Eq>(text: &[S], unique: &[Interval]) -> Vec<Interval> {
    let mut out: Vec<Interval> = unique
        .iter()
        .copied()
        .filter(|p| {
            p.len() <= 2 || occurrences(text, slice(text, Interval::new(p.beg + 1, p.end - 1))) >= 2
        })
        .collect();
    out.sort_unstable();
    out
}

/// All shortest unique palindromic substrings containing `[s, t]`.
pub fn sups<S: Eq + Hash>(text: &[S], s: u64, t: u64) -> Result<Vec<Interval>> {
    let n = text.len() as u64;
    if s == 0 || t == 0 || s > n || t > n {
        return Err(Error::IntervalOutOfRange { s, t, len: n });
    }
    if s > t {
        return Err(Error::EmptyInterval { s, t });
    }
    Ok(sups_among(&unique_palindromes(text), s, t))
}

/// SUPSs selected from a precomputed [`unique_palindromes`] list.
pub fn sups_among(unique: &[Interval], s: u64, t: u64) -> Vec<Interval> {
    let query = Interval::new(s, t);
    let covering: Vec<Interval> = unique
        .iter()
        .copied()
        .filter(|p| p.contains(&query))
        .collect();
    let Some(shortest) = covering.iter().map(Interval::len).min() else {
        return Vec::new();
    };
    let mut out: Vec<Interval> = covering
        .into_iter()
        .filter(|p| p.len() == shortest)
        .collect();
    out.sort_unstable();
    out
}

/// Maximal runs of the plain text as `(start, end)` 1-based intervals.
pub fn runs<S: PartialEq>(text: &[S]) -> Vec<Interval> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=text.len() {
        if i == text.len() || text[i] != text[start] {
            out.push(Interval::new(start as u64 + 1, i as u64));
            start = i;
        }
    }
    out
}

/// The maximal palindrome around a doubled center, by direct expansion.
pub fn expand_around<S: PartialEq>(text: &[S], doubled_center: u64) -> Option<Interval> {
    let n = text.len() as i64;
    let c = doubled_center as i64;
    // Start from the innermost pair: a single symbol for odd, a pair for even.
    let (mut i, mut j) = (c / 2, c - c / 2);
    if i < 1 || j > n || text[i as usize - 1] != text[j as usize - 1] {
        return None;
    }
    while i > 1 && j < n && text[i as usize - 2] == text[j as usize] {
        i -= 1;
        j += 1;
    }
    Some(Interval::new(i as u64, j as u64))
}

/// Length of the maximal palindrome centered on each run.
pub fn run_centered_maximal<S: PartialEq>(text: &[S]) -> Vec<u64> {
    runs(text)
        .into_iter()
        .map(|run| expand_around(text, run.doubled_center()).map_or(0, |p| p.len()))
        .collect()
}

/// Every maximal palindrome of the text, one per center with a non-empty
/// palindrome.
pub fn maximal_palindromes<S: PartialEq>(text: &[S]) -> Vec<Interval> {
    let n = text.len() as u64;
    (2..=2 * n).filter_map(|c| expand_around(text, c)).collect()
}

/// Number of distinct palindromic substrings, counting the empty string.
pub fn distinct_palindromes<S: Eq + Hash>(text: &[S]) -> usize {
    let mut seen: HashSet<&[S]> = HashSet::new();
    for i in 0..text.len() {
        for j in i..text.len() {
            if is_palindrome(&text[i..=j]) {
                seen.insert(&text[i..=j]);
            }
        }
    }
    seen.len() + 1
}
