//! Criterion benchmarks for the ginwb kernels; see `benches/kernels.rs`.
