//! Criterion benchmarks for `hurwitz-core` live under `benches/`.
