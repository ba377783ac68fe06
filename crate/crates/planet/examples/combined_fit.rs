//! Merge families and fit the mixture: pooled inventories are less
//! internally preferential than any single family, so the combined
//! epsilon comes out larger.
//!
//! ```text
//! cargo run --release --example combined_fit
//! ```

use planet::analysis::{combined_fit, fit_dataset};
use planet::fit::GridSpec;
use planet::ingest::fixture::FIXTURE_TSV;
use planet::ingest::parse_inventories_str;
use planet::network::FamilyDataset;

fn main() -> planet::Result<()> {
    let (_, datasets) = parse_inventories_str(FIXTURE_TSV)?;
    let grid = GridSpec::default();
    let by_name = |name: &str| -> FamilyDataset {
        datasets
            .iter()
            .find(|ds| ds.name() == name)
            .expect("fixture family")
            .clone()
    };

    println!("selection  langs  eps*    LSE*");
    for dataset in &datasets {
        let fit = fit_dataset(dataset, 541, &grid)?;
        println!(
            "{:<10} {:>5}  {:<7.3} {:.3}",
            dataset.name(),
            dataset.len(),
            fit.epsilon_star(),
            fit.lse_star()
        );
    }

    for pair in [["AA", "NC"], ["IE", "ST"], ["AA", "IE"]] {
        let merged = [by_name(pair[0]), by_name(pair[1])];
        let fit = combined_fit(&merged, 541, &grid)?;
        let label = pair.join("+");
        let langs = merged[0].len() + merged[1].len();
        println!(
            "{label:<10} {langs:>5}  {:<7.3} {:.3}",
            fit.epsilon_star(),
            fit.lse_star()
        );
    }

    let all = combined_fit(&datasets, 541, &grid)?;
    let total: usize = datasets.iter().map(FamilyDataset::len).sum();
    println!(
        "{:<10} {total:>5}  {:<7.3} {:.3}",
        "all",
        all.epsilon_star(),
        all.lse_star()
    );
    Ok(())
}
