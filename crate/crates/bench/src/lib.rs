//! Empty library crate; the interesting code lives in `benches/`.
//! Run the suite with `cargo bench -p rankdep-bench`.
