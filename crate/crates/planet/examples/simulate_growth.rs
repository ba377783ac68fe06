//! Run the growth model once with an IE-shaped degree sequence and print
//! the resulting consonant degree distribution next to a second seed, to
//! see what changes (the draw) and what does not (the language degrees).
//!
//! ```text
//! cargo run --example simulate_growth
//! ```

use planet::dist::DegreeDistribution;
use planet::growth::{simulate, GrowthConfig};
use planet::ingest::fixture::FIXTURE_TSV;
use planet::ingest::parse_inventories_str;

fn main() -> planet::Result<()> {
    let (_, datasets) = parse_inventories_str(FIXTURE_TSV)?;
    let ie = &datasets[0];
    let degrees: Vec<usize> = ie.inventories().iter().map(|inv| inv.degree()).collect();

    for seed in [7u64, 8] {
        let config = GrowthConfig::new(0.055, degrees.clone(), 541, seed)?;
        let net = simulate(&config)?;
        let dist = DegreeDistribution::from_degree_counts(&net.consonant_degrees())?;

        println!(
            "seed {seed}: {} edges over {} attested consonants",
            net.edge_count(),
            net.attested_count()
        );
        println!("  k   p_k      P_k");
        let tail = dist.cumulative();
        for ((k, p), (_, big_p)) in dist.iter().zip(tail.iter()).take(12) {
            println!("  {k:<3} {p:<8.4} {big_p:.4}");
        }
        if dist.len() > 12 {
            println!("  ... {} more support degrees", dist.len() - 12);
        }
        println!();
    }
    Ok(())
}
