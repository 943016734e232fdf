//! Benchmarks for wturan-core live under benches/.
