//! Criterion benchmarks for the comexp kernels; see `benches/`.
