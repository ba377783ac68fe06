//! Pearson correlation of consonant occurrence frequencies between every
//! pair of families in the fixture.
//!
//! ```text
//! cargo run --example family_correlations
//! ```

use planet::analysis::{consonant_frequencies, correlation_matrix};
use planet::ingest::fixture::FIXTURE_TSV;
use planet::ingest::parse_inventories_str;

fn main() -> planet::Result<()> {
    let (registry, datasets) = parse_inventories_str(FIXTURE_TSV)?;
    let matrix = correlation_matrix(&datasets)?;

    print!("      ");
    for ds in &datasets {
        print!("{:>6}", ds.name());
    }
    println!();
    for (i, ds) in datasets.iter().enumerate() {
        print!("{:<6}", ds.name());
        for value in &matrix[i] {
            print!("{value:>6.2}");
        }
        println!();
    }

    let mut off_diagonal = Vec::new();
    for (i, row) in matrix.iter().enumerate() {
        off_diagonal.extend_from_slice(&row[(i + 1)..]);
    }
    let mean = off_diagonal.iter().sum::<f64>() / off_diagonal.len() as f64;
    println!("\nmean off-diagonal correlation: {mean:.3}");

    // which consonants drive the shared structure: high frequency everywhere
    let freq: Vec<_> = datasets
        .iter()
        .map(|ds| consonant_frequencies(ds).unwrap())
        .collect();
    let mut shared: Vec<(usize, u32)> = (0..registry.len())
        .map(|c| (c, freq.iter().map(|f| f.counts()[c]).sum()))
        .collect();
    shared.sort_by_key(|&(c, total)| (std::cmp::Reverse(total), c));
    let top: Vec<&str> = shared
        .iter()
        .take(10)
        .map(|&(c, _)| registry.symbol(c).unwrap())
        .collect();
    println!("most widespread consonants overall: {}", top.join(" "));
    Ok(())
}
