//! Benchmark harness: test signals, error grids, the ten tables, figure data
//! and their CSV/JSON emission.

pub mod emit;
pub mod grid;
pub mod reference;
pub mod signal;
pub mod tables;

pub use emit::{emit, format_sci, Format};
pub use tables::{figure_data, run_table, Table, TableSpec};
