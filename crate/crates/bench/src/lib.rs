//! Benchmark harness for the repstab oracles; see `benches/`.
