//! Sample pseudo-families of the real families' sizes from the pooled
//! languages and fit each: if family membership carries signal, the real
//! families should fit with smaller epsilon than random groupings.
//!
//! ```text
//! cargo run --release --example control_experiment
//! ```

use planet::analysis::{control_experiment, fit_dataset};
use planet::fit::GridSpec;
use planet::ingest::fixture::FIXTURE_TSV;
use planet::ingest::{merge_families, parse_inventories_str};
use planet::network::FamilyDataset;

fn main() -> planet::Result<()> {
    let (_, datasets) = parse_inventories_str(FIXTURE_TSV)?;
    let grid = GridSpec::default();

    let real_fits: Vec<f64> = datasets
        .iter()
        .map(|ds| Ok(fit_dataset(ds, 541, &grid)?.epsilon_star()))
        .collect::<planet::Result<_>>()?;
    let real_mean = real_fits.iter().sum::<f64>() / real_fits.len() as f64;

    let sizes: Vec<usize> = datasets.iter().map(FamilyDataset::len).collect();
    let pool = merge_families(&datasets, "pool")?;
    let report = control_experiment(&pool, &sizes, 20, 541, &grid, 11)?;

    println!("real family fits: mean eps* = {real_mean:.3} {real_fits:?}");
    println!(
        "random pseudo-families ({} fits): mean eps* = {:.3}",
        report.fits.len(),
        report.mean_epsilon
    );

    println!("\ntrial  size  eps*    LSE*");
    for fit in report.fits.iter().take(10) {
        println!(
            "{:>5} {:>5}  {:<7.3} {:.3}",
            fit.trial, fit.size, fit.epsilon_star, fit.lse_star
        );
    }
    if report.fits.len() > 10 {
        println!("  ... {} more", report.fits.len() - 10);
    }
    Ok(())
}
