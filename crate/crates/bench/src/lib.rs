//! Criterion benchmarks for the frobgrann kernels live in `benches/`.
