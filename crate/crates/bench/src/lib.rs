//! Benchmarks for the brute-force oracle live under `benches/`.
