//! Benchmarks for urvkit live in `benches/urvkit.rs`; run them with
//! `cargo bench -p urvkit-bench`.
