//! Criterion benchmarks for `rck-core`; see `benches/`.
