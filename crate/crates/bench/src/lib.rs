//! Criterion benchmarks for tvarih live in `benches/`.
