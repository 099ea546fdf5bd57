//! Criterion benchmarks for `splitkit`; see `benches/`.
