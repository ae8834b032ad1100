//! Benchmark-only crate; the measurements live in `benches/sweeps.rs`.
