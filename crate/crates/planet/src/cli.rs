//! Implementations behind the `planet` binary. The binary itself only
//! parses arguments and forwards here; everything is callable as a library
//! function too.
//!
//! Every command writes its outputs plus a `manifest.json` into `--out`.
//! Files are written atomically and contain nothing time-dependent, so
//! rerunning a command with identical flags reproduces them byte for byte
//! (the manifest's timestamp is the one exception).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::analysis::{control_experiment, correlation_matrix};
use crate::dist::DegreeDistribution;
use crate::error::{Error, Result};
use crate::fit::{fit_epsilon_pdf, FitResult, FitTarget, GridSpec};
use crate::growth::{ensemble_distribution, simulate, GrowthConfig};
use crate::ingest::{fixture, merge_families, parse_inventories};
use crate::manifest::{write_atomic, GridRecord, RunManifest};
use crate::network::{BipartiteNetwork, FamilyDataset};

#[derive(Debug, Parser)]
#[command(
    name = "planet",
    version,
    about = "Bipartite consonant-inventory networks: simulate growth, fit epsilon, run controls"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit epsilon per family; writes a summary table and per-family curves
    Fit(FitArgs),
    /// Run the growth model; writes an edge list or an ensemble distribution
    Simulate(SimulateArgs),
    /// Pairwise Pearson correlation of consonant frequencies across families
    Correlate(CorrelateArgs),
    /// Fit randomly sampled pseudo-families from the whole language pool
    Control(ControlArgs),
    /// Write the bundled synthetic fixture file
    Fixture(FixtureArgs),
}

fn parse_grid(s: &str) -> std::result::Result<GridSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err("expected MIN:MAX:STEP".into());
    }
    let eps_min: f64 = parts[0].parse().map_err(|e| format!("bad MIN: {e}"))?;
    let eps_max: f64 = parts[1].parse().map_err(|e| format!("bad MAX: {e}"))?;
    let step: f64 = parts[2].parse().map_err(|e| format!("bad STEP: {e}"))?;
    GridSpec::new(eps_min, eps_max, step).map_err(|e| e.to_string())
}

fn parse_target(s: &str) -> std::result::Result<FitTarget, String> {
    FitTarget::parse(s).ok_or_else(|| format!("expected 'cdf' or 'pdf', got '{s}'"))
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// Inventory file to read
    #[arg(long)]
    pub input: PathBuf,
    /// Family to fit, or `all` for every family in file order
    #[arg(long, default_value = "all", conflicts_with = "combined")]
    pub family: String,
    /// Merge these comma-separated families (or `all`) and fit the result
    /// as one network
    #[arg(long, value_name = "NAME,NAME,...|all")]
    pub combined: Option<String>,
    /// Epsilon grid
    #[arg(long, value_parser = parse_grid, default_value = "0.005:1.0:0.005", value_name = "MIN:MAX:STEP")]
    pub grid: GridSpec,
    /// Model registry size N
    #[arg(long, default_value_t = 541)]
    pub registry_size: usize,
    /// Fit the tail curve (cdf) or the raw mass function (pdf)
    #[arg(long, value_parser = parse_target, default_value = "cdf")]
    pub target: FitTarget,
    /// Output directory
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Attachment randomness (must be positive)
    #[arg(long, allow_negative_numbers = true)]
    pub epsilon: f64,
    /// Take the degree sequence from a family in an inventory file
    /// (`all` merges every family)
    #[arg(long, value_name = "PATH:FAMILY")]
    pub degrees_from: Option<String>,
    /// Explicit comma-separated inventory sizes
    #[arg(long, value_delimiter = ',', conflicts_with = "degrees_from")]
    pub degrees: Option<Vec<usize>>,
    /// Registry size N
    #[arg(long, default_value_t = 541)]
    pub registry_size: usize,
    /// RNG seed; run i of an ensemble uses seed + i
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of runs: 1 writes the edge list, more write the averaged
    /// degree distribution
    #[arg(long, default_value_t = 1)]
    pub runs: usize,
    /// Output directory
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CorrelateArgs {
    /// Inventory file to read
    #[arg(long)]
    pub input: PathBuf,
    /// Output directory
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ControlArgs {
    /// Inventory file providing the language pool
    #[arg(long)]
    pub input: PathBuf,
    /// Pseudo-family sizes; defaults to the real family sizes in the file
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    /// Trials per size set
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    /// RNG seed; trial i uses seed + i
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Epsilon grid
    #[arg(long, value_parser = parse_grid, default_value = "0.005:1.0:0.005", value_name = "MIN:MAX:STEP")]
    pub grid: GridSpec,
    /// Model registry size N
    #[arg(long, default_value_t = 541)]
    pub registry_size: usize,
    /// Output directory
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    /// Output directory
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Fit(args) => cmd_fit(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Correlate(args) => cmd_correlate(args),
        Command::Control(args) => cmd_control(args),
        Command::Fixture(args) => cmd_fixture(args),
    }
}

/// Prints a real with six significant digits; the CSV convention for every
/// non-integer column.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let a = x.abs();
    if !(1e-4..1e6).contains(&a) {
        return format!("{x:.5e}");
    }
    let leading = a.log10().floor() as i32;
    let decimals = (5 - leading).max(0) as usize;
    format!("{x:.decimals$}")
}

fn ensure_out_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })
}

fn find_dataset<'a>(datasets: &'a [FamilyDataset], name: &str) -> Result<&'a FamilyDataset> {
    datasets
        .iter()
        .find(|ds| ds.name() == name)
        .ok_or_else(|| Error::UnknownFamily {
            name: name.to_string(),
        })
}

struct FitRow {
    name: String,
    languages: usize,
    consonants: usize,
    edges: usize,
    mu: f64,
    epsilon: f64,
    lse: f64,
}

fn fit_one(dataset: &FamilyDataset, args: &FitArgs) -> Result<(FitRow, FitResult)> {
    let net = BipartiteNetwork::from_dataset(dataset);
    let degrees = net.consonant_degrees();
    let empirical = DegreeDistribution::from_degree_counts(&degrees)?;
    let (t, mu) = (dataset.len(), dataset.mean_inventory_size());
    let fit = match args.target {
        FitTarget::Cdf => crate::fit::fit_epsilon(
            &empirical.cumulative(),
            t,
            args.registry_size,
            mu,
            &args.grid,
        )?,
        FitTarget::Pdf => fit_epsilon_pdf(&empirical, t, args.registry_size, mu, &args.grid)?,
    };
    if fit.clamped_top_degree() {
        eprintln!(
            "warning: '{}' has a consonant present in every language; \
             its degree t was matched against the model's top degree t-1",
            dataset.name()
        );
    }
    let row = FitRow {
        name: dataset.name().to_string(),
        languages: t,
        consonants: degrees.len(),
        edges: dataset.edge_count(),
        mu,
        epsilon: fit.epsilon_star(),
        lse: fit.lse_star(),
    };
    Ok((row, fit))
}

fn write_curve_csv(
    dir: &Path,
    name: &str,
    empirical: &DegreeDistribution,
    fit: &FitResult,
) -> Result<PathBuf> {
    let emp_tail = empirical.cumulative();
    let model = fit.curve();
    let top = *model.support().last().expect("model support is non-empty");
    let mut ks: Vec<u32> = model
        .support()
        .iter()
        .chain(emp_tail.support())
        .copied()
        .collect();
    ks.sort_unstable();
    ks.dedup();

    let mut csv = String::from("k,empirical,model\n");
    for k in ks {
        let emp = emp_tail.tail_at(k).map(fmt_sig).unwrap_or_default();
        let mdl = model
            .tail_at(k.min(top))
            .map(fmt_sig)
            .expect("model covers 1..t-1");
        csv.push_str(&format!("{k},{emp},{mdl}\n"));
    }
    let path = dir.join(format!("curve_{name}.csv"));
    write_atomic(&path, csv.as_bytes())?;
    Ok(path)
}

pub fn cmd_fit(args: &FitArgs) -> Result<()> {
    ensure_out_dir(&args.out)?;
    let (_, datasets) = parse_inventories(&args.input)?;

    let selected: Vec<FamilyDataset> = if let Some(spec) = &args.combined {
        let chosen: Vec<FamilyDataset> = if spec == "all" {
            datasets.clone()
        } else {
            spec.split(',')
                .map(|name| find_dataset(&datasets, name).cloned())
                .collect::<Result<_>>()?
        };
        if chosen.is_empty() {
            return Err(Error::InvalidArgument {
                message: "--combined needs at least one family".into(),
            });
        }
        let name: Vec<&str> = chosen.iter().map(FamilyDataset::name).collect();
        vec![merge_families(&chosen, name.join("+"))?]
    } else if args.family == "all" {
        datasets
    } else {
        vec![find_dataset(&datasets, &args.family)?.clone()]
    };

    let mut summary = String::from("family,languages,consonants,edges,mu,epsilon,lse\n");
    println!("family     langs  cons  edges      mu  epsilon      lse");
    for dataset in &selected {
        let (row, fit) = fit_one(dataset, args)?;
        summary.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.name,
            row.languages,
            row.consonants,
            row.edges,
            fmt_sig(row.mu),
            fmt_sig(row.epsilon),
            fmt_sig(row.lse),
        ));
        println!(
            "{:<10} {:>5} {:>5} {:>6} {:>7.2} {:>8.3} {:>8.3}",
            row.name, row.languages, row.consonants, row.edges, row.mu, row.epsilon, row.lse
        );
        let net = BipartiteNetwork::from_dataset(dataset);
        let empirical = DegreeDistribution::from_degree_counts(&net.consonant_degrees())?;
        write_curve_csv(&args.out, &row.name, &empirical, &fit)?;
    }
    write_atomic(&args.out.join("fit_summary.csv"), summary.as_bytes())?;

    let manifest = RunManifest {
        input: Some(args.input.clone()),
        registry_size: Some(args.registry_size),
        grid: Some(GridRecord::from(&args.grid)),
        ..RunManifest::new("fit")
    }
    .flag("family", &args.family)
    .flag("combined", args.combined.as_deref().unwrap_or("-"))
    .flag("target", format!("{:?}", args.target).to_lowercase())
    .flag("out", args.out.display());
    manifest.write(&args.out)?;
    Ok(())
}

fn degrees_from_spec(spec: &str) -> Result<Vec<usize>> {
    let (path, family) = spec
        .rsplit_once(':')
        .ok_or_else(|| Error::InvalidArgument {
            message: format!("--degrees-from expects PATH:FAMILY, got '{spec}'"),
        })?;
    let (_, datasets) = parse_inventories(path)?;
    let dataset = if family == "all" {
        merge_families(&datasets, "all")?
    } else {
        find_dataset(&datasets, family)?.clone()
    };
    Ok(dataset
        .inventories()
        .iter()
        .map(|inv| inv.degree())
        .collect())
}

pub fn cmd_simulate(args: &SimulateArgs) -> Result<()> {
    ensure_out_dir(&args.out)?;
    if args.runs == 0 {
        return Err(Error::InvalidArgument {
            message: "--runs must be >= 1".into(),
        });
    }
    let degrees = match (&args.degrees_from, &args.degrees) {
        (Some(spec), None) => degrees_from_spec(spec)?,
        (None, Some(list)) => list.clone(),
        _ => {
            return Err(Error::InvalidArgument {
                message: "exactly one of --degrees-from and --degrees is required".into(),
            })
        }
    };
    let config = GrowthConfig::new(args.epsilon, degrees, args.registry_size, args.seed)?;

    if args.runs == 1 {
        let net = simulate(&config)?;
        let mut edges = String::from("language,consonant\n");
        for (id, set) in net.languages() {
            for &c in set {
                edges.push_str(&format!("{id},{c}\n"));
            }
        }
        write_atomic(&args.out.join("edges.csv"), edges.as_bytes())?;
        let dist = DegreeDistribution::from_degree_counts(&net.consonant_degrees())?;
        write_distribution_csv(&args.out, &dist)?;
        println!(
            "simulated {} languages, {} edges, {} attested consonants",
            net.language_count(),
            net.edge_count(),
            net.attested_count()
        );
    } else {
        let dist = ensemble_distribution(&config, args.runs)?;
        write_distribution_csv(&args.out, &dist)?;
        println!(
            "averaged {} runs over {} support degrees",
            args.runs,
            dist.len()
        );
    }

    let manifest = RunManifest {
        registry_size: Some(args.registry_size),
        seed: Some(args.seed),
        ..RunManifest::new("simulate")
    }
    .flag("epsilon", fmt_sig(args.epsilon))
    .flag(
        "degrees",
        args.degrees_from.clone().unwrap_or_else(|| {
            args.degrees
                .as_ref()
                .map(|d| {
                    d.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .unwrap_or_default()
        }),
    )
    .flag("runs", args.runs)
    .flag("out", args.out.display());
    manifest.write(&args.out)?;
    Ok(())
}

fn write_distribution_csv(dir: &Path, dist: &DegreeDistribution) -> Result<()> {
    let tail = dist.cumulative();
    let mut csv = String::from("k,p_k,P_k\n");
    for ((k, p), (_, big_p)) in dist.iter().zip(tail.iter()) {
        csv.push_str(&format!("{k},{},{}\n", fmt_sig(p), fmt_sig(big_p)));
    }
    write_atomic(&dir.join("distribution.csv"), csv.as_bytes())
}

pub fn cmd_correlate(args: &CorrelateArgs) -> Result<()> {
    ensure_out_dir(&args.out)?;
    let (_, datasets) = parse_inventories(&args.input)?;
    let matrix = correlation_matrix(&datasets)?;

    let names: Vec<&str> = datasets.iter().map(FamilyDataset::name).collect();
    let mut csv = String::new();
    csv.push_str(&format!("family,{}\n", names.join(",")));
    for (name, row) in names.iter().zip(&matrix) {
        let cells: Vec<String> = row.iter().map(|&r| fmt_sig(r)).collect();
        csv.push_str(&format!("{name},{}\n", cells.join(",")));
    }
    write_atomic(&args.out.join("correlation.csv"), csv.as_bytes())?;
    print!("{csv}");

    let manifest = RunManifest {
        input: Some(args.input.clone()),
        ..RunManifest::new("correlate")
    }
    .flag("out", args.out.display());
    manifest.write(&args.out)?;
    Ok(())
}

pub fn cmd_control(args: &ControlArgs) -> Result<()> {
    ensure_out_dir(&args.out)?;
    let (_, datasets) = parse_inventories(&args.input)?;
    let sizes: Vec<usize> = match &args.sizes {
        Some(sizes) => sizes.clone(),
        None => datasets.iter().map(FamilyDataset::len).collect(),
    };
    let pool = merge_families(&datasets, "pool")?;
    let report = control_experiment(
        &pool,
        &sizes,
        args.trials,
        args.registry_size,
        &args.grid,
        args.seed,
    )?;

    let mut trials_csv = String::from("trial,size,epsilon,lse\n");
    for fit in &report.fits {
        trials_csv.push_str(&format!(
            "{},{},{},{}\n",
            fit.trial,
            fit.size,
            fmt_sig(fit.epsilon_star),
            fmt_sig(fit.lse_star)
        ));
    }
    write_atomic(&args.out.join("control_trials.csv"), trials_csv.as_bytes())?;

    let sizes_label = sizes
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("+");
    let summary = format!(
        "trials,sizes,mean_epsilon\n{},{},{}\n",
        args.trials,
        sizes_label,
        fmt_sig(report.mean_epsilon)
    );
    write_atomic(&args.out.join("control_summary.csv"), summary.as_bytes())?;
    println!(
        "mean epsilon over {} pseudo-family fits: {}",
        report.fits.len(),
        fmt_sig(report.mean_epsilon)
    );

    let manifest = RunManifest {
        input: Some(args.input.clone()),
        registry_size: Some(args.registry_size),
        grid: Some(GridRecord::from(&args.grid)),
        seed: Some(args.seed),
        ..RunManifest::new("control")
    }
    .flag("trials", args.trials)
    .flag("sizes", &sizes_label)
    .flag("out", args.out.display());
    manifest.write(&args.out)?;
    Ok(())
}

pub fn cmd_fixture(args: &FixtureArgs) -> Result<()> {
    ensure_out_dir(&args.out)?;
    let path = args.out.join("fixture.tsv");
    write_atomic(&path, fixture::fixture_tsv().as_bytes())?;
    println!("wrote {}", path.display());
    let manifest = RunManifest::new("fixture").flag("out", args.out.display());
    manifest.write(&args.out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(0.055), "0.0550000");
        assert_eq!(fmt_sig(1.47), "1.47000");
        assert_eq!(fmt_sig(534.0), "534.000");
        assert_eq!(fmt_sig(-0.25), "-0.250000");
        assert_eq!(fmt_sig(2.5e-7), "2.50000e-7");
    }

    #[test]
    fn grid_flag_parses() {
        let grid = parse_grid("0.01:0.5:0.01").unwrap();
        assert_eq!(grid.points().len(), 50);
        assert!(parse_grid("0.5").is_err());
        assert!(parse_grid("0:1:0.1").is_err());
    }
}
