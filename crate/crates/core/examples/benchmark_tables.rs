//! Reproduces the benchmark tables and prints them next to the published
//! values.
//!
//! ```text
//! cargo run --release --example benchmark_tables -- 1 10
//! ```

use std::time::Instant;

use gaussreg::harness::format_sci;
use gaussreg::harness::reference::published;
use gaussreg::harness::run_table;

fn main() -> gaussreg::Result<()> {
    let ids: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids = if ids.is_empty() { (1..=10).collect() } else { ids };
    for id in ids {
        let start = Instant::now();
        let table = run_table(id)?;
        let elapsed = start.elapsed();
        println!("== table {id}: {} ({elapsed:.2?})", table.title);
        println!("{}", table.columns.join(" | "));
        let printed = published(id)?;
        for (row, reference) in table.rows.iter().zip(&printed) {
            let cells: Vec<String> = row
                .values
                .iter()
                .enumerate()
                .map(|(i, &v)| match reference.values.get(i) {
                    Some(p) => format!("{} ({})", format_sci(v), p.as_str()),
                    None => format_sci(v),
                })
                .collect();
            println!("n={:<3} {}", row.n, cells.join("  "));
        }
        if let Some(conv) = table.metadata.get("r_convention") {
            println!("r^2 convention: {conv}");
        }
    }
    Ok(())
}
