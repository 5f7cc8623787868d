//! Build time, index size and query throughput as `m` grows, and their
//! (in)sensitivity to the decompressed length `n`.
//!
//! For each `m` one random run structure is drawn with exponents in
//! `[1, 10]`. The large-scale variant multiplies every exponent by `10^8`,
//! which keeps the order and equalities among exponents (so the MUPS
//! structure is identical) while pushing `n` from about `5.5 m` to about
//! `5.5 * 10^8 m`.

use std::fmt;
use std::hint::black_box;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sups_core::{RleString, SupsIndex};

pub const CSV_HEADER: &str = "m,exp_scale,n,build_ms,index_bytes,queries_per_sec";
pub const SMALL_SCALE: u64 = 10;
pub const LARGE_SCALE: u64 = 1_000_000_000;
pub const ALPHABET: u8 = 4;

#[derive(Debug, Clone)]
pub struct ScalingConfig {
    pub seed: u64,
    pub sizes: Vec<usize>,
    pub queries: usize,
    /// Builds per configuration; the fastest is reported.
    pub build_repeats: usize,
}

impl Default for ScalingConfig {
    fn default() -> Self {
        ScalingConfig {
            seed: crate::campaign::DEFAULT_SEED,
            sizes: vec![1_000, 10_000, 100_000],
            queries: 1_000_000,
            build_repeats: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingRow {
    pub m: usize,
    pub exp_scale: u64,
    pub n: u64,
    pub build: Duration,
    pub index_bytes: usize,
    pub queries_per_sec: f64,
}

impl fmt::Display for ScalingRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{:.3},{},{:.0}",
            self.m,
            self.exp_scale,
            self.n,
            self.build.as_secs_f64() * 1e3,
            self.index_bytes,
            self.queries_per_sec
        )
    }
}

/// `m` runs over a small alphabet, adjacent symbols distinct, exponents
/// uniform in `[1, SMALL_SCALE]`.
pub fn random_runs(rng: &mut impl Rng, m: usize) -> Vec<(u8, u64)> {
    let mut runs = Vec::with_capacity(m);
    let mut prev = None;
    for _ in 0..m {
        let symbol = loop {
            let s = b'a' + rng.gen_range(0..ALPHABET);
            if Some(s) != prev {
                break s;
            }
        };
        prev = Some(symbol);
        runs.push((symbol, rng.gen_range(1..=SMALL_SCALE)));
    }
    runs
}

/// Rescales exponents drawn for `SMALL_SCALE` to `exp_scale`, preserving
/// their order.
pub fn rescale(runs: &[(u8, u64)], exp_scale: u64) -> Vec<(u8, u64)> {
    let factor = exp_scale / SMALL_SCALE;
    runs.iter().map(|&(s, e)| (s, e * factor)).collect()
}

/// Uniform random intervals `1 <= s <= t <= n`.
pub fn random_queries(rng: &mut impl Rng, n: u64, count: usize) -> Vec<(u64, u64)> {
    (0..count)
        .map(|_| {
            let a = rng.gen_range(1..=n);
            let b = rng.gen_range(1..=n);
            (a.min(b), a.max(b))
        })
        .collect()
}

pub fn measure(runs: &[(u8, u64)], exp_scale: u64, config: &ScalingConfig) -> ScalingRow {
    let rle = RleString::from_runs(runs.iter().copied()).expect("generated runs are canonical");
    let n = rle.len();

    let mut best = Duration::MAX;
    let mut index = None;
    for _ in 0..config.build_repeats.max(1) {
        let input = rle.clone();
        let start = Instant::now();
        let built = SupsIndex::build(input).expect("index builds");
        best = best.min(start.elapsed());
        index = Some(built);
    }
    let index = index.unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ runs.len() as u64);
    let queries = random_queries(&mut rng, n, config.queries);
    let start = Instant::now();
    let mut reported = 0usize;
    for &(s, t) in &queries {
        reported += black_box(index.query(s, t).expect("in range")).len();
    }
    let elapsed = start.elapsed().as_secs_f64();
    black_box(reported);

    ScalingRow {
        m: runs.len(),
        exp_scale,
        n,
        build: best,
        index_bytes: index.heap_bytes(),
        queries_per_sec: queries.len() as f64 / elapsed.max(f64::MIN_POSITIVE),
    }
}

/// One row per `(m, exp_scale)`, both scales sharing the run structure.
pub fn run_scaling(config: &ScalingConfig) -> Vec<ScalingRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rows = Vec::new();
    for &m in &config.sizes {
        let base = random_runs(&mut rng, m);
        for scale in [SMALL_SCALE, LARGE_SCALE] {
            rows.push(measure(&rescale(&base, scale), scale, config));
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rescaling_keeps_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let base = random_runs(&mut rng, 500);
        let big = rescale(&base, LARGE_SCALE);
        assert!(big.iter().all(|&(_, e)| (1..=LARGE_SCALE).contains(&e)));
        let small_idx = SupsIndex::build(RleString::from_runs(base).unwrap()).unwrap();
        let big_idx = SupsIndex::build(RleString::from_runs(big).unwrap()).unwrap();
        assert_eq!(small_idx.mups().center_runs(), big_idx.mups().center_runs());
        assert_eq!(small_idx.heap_bytes(), big_idx.heap_bytes());
    }

    #[test]
    fn row_format() {
        let config = ScalingConfig {
            sizes: vec![1_000],
            queries: 1_000,
            build_repeats: 1,
            ..ScalingConfig::default()
        };
        let rows = run_scaling(&config);
        assert_eq!(rows.len(), 2);
        for row in &rows {
            let line = row.to_string();
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(fields.len(), CSV_HEADER.split(',').count());
            assert!(fields.iter().all(|f| !f.is_empty()));
            assert_eq!(fields[0], "1000");
        }
        assert_eq!(rows[0].index_bytes, rows[1].index_bytes);
        assert!(rows[1].n > rows[0].n * 10_000_000);
    }
}
