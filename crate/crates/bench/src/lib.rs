//! Criterion benchmarks for the SUPS index live under `benches/`.
