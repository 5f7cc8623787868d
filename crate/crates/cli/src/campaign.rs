//! Oracle-vs-index verification campaign.
//!
//! Three suites: the worked example strings, every binary string up to a
//! length bound, and seeded random run sequences. Each case compares the
//! MUPS list, the run-centered maximal palindrome lengths and the SUPS
//! answer for every interval against the brute-force oracle, and checks
//! the structural size bounds.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sups_core::{oracle, Interval, MupsRule, RleString, SupsIndex};

pub const DEFAULT_SEED: u64 = 0x5eed_2019;

/// Strings worked through by hand while designing the index.
pub const WORKED_EXAMPLES: &[&[u8]] = &[
    b"bbbaabbabbaaabbaaabbb",
    b"caabbcccbbaaaac",
    b"aacccccccbbabbbb",
];

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub seed: u64,
    pub random_cases: usize,
    pub exhaustive_max_len: u32,
    pub max_runs: usize,
    pub max_exponent: u64,
    pub rule: MupsRule,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            seed: DEFAULT_SEED,
            random_cases: 1000,
            exhaustive_max_len: 12,
            max_runs: 30,
            max_exponent: 5,
            rule: MupsRule::Corrected,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    Build(String),
    Bound(String),
    MaxLen {
        run: usize,
        expected: u64,
        got: u64,
    },
    Mups {
        expected: Vec<Interval>,
        got: Vec<Interval>,
    },
    Sups {
        query: Interval,
        expected: Vec<Interval>,
        got: Vec<Interval>,
    },
}

fn list(v: &[Interval]) -> String {
    let items: Vec<String> = v.iter().map(Interval::to_string).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Build(e) => write!(f, "build failed: {e}"),
            Mismatch::Bound(e) => write!(f, "bound violated: {e}"),
            Mismatch::MaxLen { run, expected, got } => {
                write!(f, "max_len of run {run}: expected {expected}, got {got}")
            }
            Mismatch::Mups { expected, got } => {
                write!(f, "MUPS: expected {}, got {}", list(expected), list(got))
            }
            Mismatch::Sups {
                query,
                expected,
                got,
            } => write!(
                f,
                "interval {query}: expected {}, got {}",
                list(expected),
                list(got)
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub input: Vec<u8>,
    pub mismatch: Mismatch,
    /// Greedily shrunk input that still fails, with its own mismatch.
    pub shrunk: Vec<u8>,
    pub shrunk_mismatch: Mismatch,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    /// Failing inputs in case order; only the first is shrunk.
    pub failing_inputs: Vec<Vec<u8>>,
    pub first: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{}: {verdict} ({} passed, {} failed)",
            self.name,
            self.checked - self.failed,
            self.failed
        )?;
        if let Some(cx) = &self.first {
            write!(
                f,
                "\n  counterexample: {:?}\n    {}\n  minimized: {:?}\n    {}",
                String::from_utf8_lossy(&cx.input),
                cx.mismatch,
                String::from_utf8_lossy(&cx.shrunk),
                cx.shrunk_mismatch
            )?;
        }
        Ok(())
    }
}

/// Checks one plain string against the oracle. Returns the first mismatch;
/// among SUPS mismatches, the one with the shortest query interval.
pub fn check_case(text: &[u8], rule: MupsRule) -> Result<(), Mismatch> {
    let rle = RleString::encode(text);
    let m = rle.num_runs();
    let index = SupsIndex::build_with(rle, rule).map_err(|e| Mismatch::Build(e.to_string()))?;

    let stats = index.stats();
    if stats.tree_nodes > 2 * m + 1 {
        return Err(Mismatch::Bound(format!(
            "{} tree nodes for {m} runs",
            stats.tree_nodes
        )));
    }
    let distinct = oracle::distinct_palindromes(text);
    if distinct > text.len() + 1 {
        return Err(Mismatch::Bound(format!(
            "{distinct} distinct palindromes in length {}",
            text.len()
        )));
    }

    let expected_lens = oracle::run_centered_maximal(text);
    for (run, (&expected, &got)) in expected_lens
        .iter()
        .zip(index.max_pal().max_lens())
        .enumerate()
    {
        if expected != got {
            return Err(Mismatch::MaxLen { run, expected, got });
        }
    }

    let unique = oracle::unique_palindromes(text);
    let expected_mups = oracle::mups_among(text, &unique);
    let got_mups: Vec<Interval> = index.mups().intervals().collect();
    if expected_mups != got_mups {
        return Err(Mismatch::Mups {
            expected: expected_mups,
            got: got_mups,
        });
    }
    if got_mups.len() > m
        || got_mups
            .windows(2)
            .any(|w| w[0].contains(&w[1]) || w[1].contains(&w[0]))
    {
        return Err(Mismatch::Bound(format!(
            "MUPS set {} is too large or nested",
            list(&got_mups)
        )));
    }

    let n = text.len() as u64;
    for width in 0..n {
        for s in 1..=n - width {
            let t = s + width;
            let expected = oracle::sups_among(&unique, s, t);
            let got = match index.query(s, t) {
                Ok(answer) => answer.intervals().to_vec(),
                Err(e) => return Err(Mismatch::Build(format!("query [{s},{t}] failed: {e}"))),
            };
            if expected != got {
                return Err(Mismatch::Sups {
                    query: Interval::new(s, t),
                    expected,
                    got,
                });
            }
        }
    }
    Ok(())
}

/// Greedy shrinking over the run sequence: drop a run (merging neighbors
/// that become equal) or lower an exponent, while the case still fails.
pub fn shrink(text: &[u8], rule: MupsRule) -> (Vec<u8>, Mismatch) {
    let mut current = text.to_vec();
    let mut mismatch = match check_case(&current, rule) {
        Err(m) => m,
        Ok(()) => panic!("shrink called on a passing case"),
    };
    'outer: loop {
        let runs = oracle::runs(&current);
        for run in &runs {
            let mut candidates = Vec::new();
            let (b, e) = (run.beg as usize - 1, run.end as usize);
            let mut dropped = current[..b].to_vec();
            dropped.extend_from_slice(&current[e..]);
            candidates.push(dropped);
            if run.len() > 1 {
                let mut lowered = current[..b].to_vec();
                lowered.extend_from_slice(&current[b + 1..]);
                candidates.push(lowered);
            }
            for candidate in candidates {
                if candidate.is_empty() {
                    continue;
                }
                if let Err(m) = check_case(&candidate, rule) {
                    current = candidate;
                    mismatch = m;
                    continue 'outer;
                }
            }
        }
        return (current, mismatch);
    }
}

fn run_suite(name: String, cases: Vec<Vec<u8>>, rule: MupsRule) -> SuiteReport {
    let results: Vec<Result<(), Mismatch>> = cases
        .par_iter()
        .map(|text| check_case(text, rule))
        .collect();
    let mut failing_inputs = Vec::new();
    let mut first = None;
    for (text, result) in cases.iter().zip(results) {
        if let Err(mismatch) = result {
            if first.is_none() {
                let (shrunk, shrunk_mismatch) = shrink(text, rule);
                first = Some(Counterexample {
                    input: text.clone(),
                    mismatch,
                    shrunk,
                    shrunk_mismatch,
                });
            }
            failing_inputs.push(text.clone());
        }
    }
    SuiteReport {
        name,
        checked: cases.len(),
        failed: failing_inputs.len(),
        failing_inputs,
        first,
    }
}

/// All binary strings over `{a, b}` of length `1..=max_len`.
pub fn binary_strings(max_len: u32) -> Vec<Vec<u8>> {
    (1..=max_len)
        .flat_map(|n| {
            (0u32..1 << n).map(move |bits| (0..n).map(|i| b'a' + ((bits >> i) & 1) as u8).collect())
        })
        .collect()
}

/// Random run sequences over 2 to 4 symbols, decompressed.
pub fn random_strings(seed: u64, cases: usize, max_runs: usize, max_exponent: u64) -> Vec<Vec<u8>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..cases)
        .map(|_| {
            let sigma = rng.gen_range(2..=4u8);
            let m = rng.gen_range(1..=max_runs);
            let mut text = Vec::new();
            let mut prev = None;
            for _ in 0..m {
                let symbol = loop {
                    let s = b'a' + rng.gen_range(0..sigma);
                    if Some(s) != prev {
                        break s;
                    }
                };
                prev = Some(symbol);
                let exp = rng.gen_range(1..=max_exponent) as usize;
                text.extend(std::iter::repeat_n(symbol, exp));
            }
            text
        })
        .collect()
}

pub fn run_campaign(config: &CampaignConfig) -> Vec<SuiteReport> {
    let worked: Vec<Vec<u8>> = WORKED_EXAMPLES.iter().map(|s| s.to_vec()).collect();
    vec![
        run_suite(
            format!("worked-examples({} strings)", worked.len()),
            worked,
            config.rule,
        ),
        run_suite(
            format!("exhaustive(binary,n≤{})", config.exhaustive_max_len),
            binary_strings(config.exhaustive_max_len),
            config.rule,
        ),
        run_suite(
            format!("random({} cases)", config.random_cases),
            random_strings(
                config.seed,
                config.random_cases,
                config.max_runs,
                config.max_exponent,
            ),
            config.rule,
        ),
    ]
}
