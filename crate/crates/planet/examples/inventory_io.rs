//! The inventory file format end to end: parse text, merge families,
//! write the canonical form back out.
//!
//! ```text
//! cargo run --example inventory_io
//! ```

use planet::ingest::{merge_families, parse_inventories_str, write_inventories};

const SAMPLE: &str = "\
# three tiny inventories
arta\tdemo-a\tp t k m n
bilu\tdemo-a\tp t s m
cori\tdemo-b\tp k b N
";

fn main() -> planet::Result<()> {
    let (registry, datasets) = parse_inventories_str(SAMPLE)?;
    println!(
        "parsed {} languages in {} families over {} consonants",
        datasets.iter().map(|ds| ds.len()).sum::<usize>(),
        datasets.len(),
        registry.len()
    );
    for ds in &datasets {
        for inv in ds.inventories() {
            let labels: Vec<&str> = inv
                .consonants()
                .iter()
                .map(|&c| registry.symbol(c).unwrap())
                .collect();
            println!(
                "  {} ({}): {}",
                inv.language_id(),
                inv.family(),
                labels.join(" ")
            );
        }
    }

    let merged = merge_families(&datasets, "demo-all")?;
    println!(
        "\nmerged '{}': {} languages, {} edges, mu {:.2}",
        merged.name(),
        merged.len(),
        merged.edge_count(),
        merged.mean_inventory_size()
    );

    println!(
        "\ncanonical serialization:\n{}",
        write_inventories(&datasets)
    );
    Ok(())
}
