//! Parse the bundled fixture and inspect the five family networks:
//! node counts, edge counts, and the most widely shared consonants.
//!
//! ```text
//! cargo run --example build_network
//! ```

use planet::ingest::fixture::FIXTURE_TSV;
use planet::ingest::parse_inventories_str;
use planet::network::BipartiteNetwork;

fn main() -> planet::Result<()> {
    let (registry, datasets) = parse_inventories_str(FIXTURE_TSV)?;
    println!(
        "registry: {} distinct consonants across {} families\n",
        registry.len(),
        datasets.len()
    );

    println!("family  languages  consonants  edges     mu");
    for dataset in &datasets {
        let net = BipartiteNetwork::from_dataset(dataset);
        println!(
            "{:<7} {:>9} {:>11} {:>6} {:>6.2}",
            dataset.name(),
            dataset.len(),
            net.attested_count(),
            net.edge_count(),
            dataset.mean_inventory_size()
        );
    }

    // the consonants shared by the most languages, per family
    for dataset in &datasets {
        let net = BipartiteNetwork::from_dataset(dataset);
        let mut degrees: Vec<(usize, u32)> = net.consonant_degrees().into_iter().collect();
        degrees.sort_by_key(|&(c, k)| (std::cmp::Reverse(k), c));
        let top: Vec<String> = degrees
            .iter()
            .take(8)
            .map(|&(c, k)| format!("{}({k})", registry.symbol(c).unwrap()))
            .collect();
        println!("\n{} most shared: {}", dataset.name(), top.join(" "));
    }
    Ok(())
}
