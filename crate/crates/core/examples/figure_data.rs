//! Writes the log-error curves (bound and measured error against `n`) as CSV.
//!
//! ```text
//! cargo run --release --example figure_data -- out_dir
//! ```

use std::path::PathBuf;

use gaussreg::harness::{emit, figure_data, Format};

fn main() -> gaussreg::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    for fig in 1..=3 {
        let table = figure_data(fig)?;
        let path = dir.join(format!("figure{fig}.csv"));
        emit(&table, Format::Csv, &path)?;
        println!("{} ({} rows) -> {}", table.title, table.rows.len(), path.display());
    }
    Ok(())
}
