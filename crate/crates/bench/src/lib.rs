//! Criterion benchmarks for negq-core live in `benches/`.
