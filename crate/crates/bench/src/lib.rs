//! Criterion benchmarks for the oracles, builders and harness; see `benches/`.
