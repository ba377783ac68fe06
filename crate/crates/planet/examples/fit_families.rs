//! Fit epsilon to every family in the bundled fixture and print the
//! summary table: the library-level equivalent of
//! `planet fit --input fixture.tsv --family all`.
//!
//! ```text
//! cargo run --release --example fit_families
//! ```

use planet::analysis::fit_dataset;
use planet::fit::GridSpec;
use planet::ingest::fixture::FIXTURE_TSV;
use planet::ingest::parse_inventories_str;
use planet::network::BipartiteNetwork;

fn main() -> planet::Result<()> {
    let (_, datasets) = parse_inventories_str(FIXTURE_TSV)?;
    let grid = GridSpec::default();

    println!("family  langs  cons  edges     mu  eps*     LSE*");
    for dataset in &datasets {
        let fit = fit_dataset(dataset, 541, &grid)?;
        let net = BipartiteNetwork::from_dataset(dataset);
        println!(
            "{:<7} {:>5} {:>5} {:>6} {:>6.2}  {:<7.3} {:.3}",
            dataset.name(),
            dataset.len(),
            net.attested_count(),
            net.edge_count(),
            dataset.mean_inventory_size(),
            fit.epsilon_star(),
            fit.lse_star()
        );
    }

    // the trace behind one fit: LSE as a function of epsilon
    let ie_fit = fit_dataset(&datasets[0], 541, &grid)?;
    println!("\nIE objective near its minimum:");
    for &(eps, lse) in ie_fit
        .trace()
        .iter()
        .filter(|(eps, _)| (ie_fit.epsilon_star() - eps).abs() < 0.026)
    {
        let marker = if eps == ie_fit.epsilon_star() {
            "  <- eps*"
        } else {
            ""
        };
        println!("  {eps:.3}  {lse:>8.4}{marker}");
    }
    Ok(())
}
