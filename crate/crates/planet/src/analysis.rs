//! Cross-family experiments: occurrence-frequency correlations, combined
//! fits, and the pseudo-family control experiment.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dist::DegreeDistribution;
use crate::error::{Error, Result};
use crate::fit::{fit_epsilon, FitResult, GridSpec};
use crate::ingest::merge_families;
use crate::network::{BipartiteNetwork, FamilyDataset};

/// Occurrence counts over the full registry: entry c is the number of
/// languages in the family containing consonant c, zero where unattested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyVector {
    family: String,
    counts: Vec<u32>,
}

impl FrequencyVector {
    pub fn new(family: impl Into<String>, counts: Vec<u32>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidArgument {
                message: "frequency vector must span a non-empty registry".into(),
            });
        }
        Ok(Self {
            family: family.into(),
            counts,
        })
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }
}

/// Counts how many languages of the dataset contain each registry
/// consonant. The total equals the dataset's edge count.
pub fn consonant_frequencies(dataset: &FamilyDataset) -> Result<FrequencyVector> {
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let mut counts = vec![0u32; dataset.registry().len()];
    for inv in dataset.inventories() {
        for &c in inv.consonants() {
            counts[c] += 1;
        }
    }
    Ok(FrequencyVector {
        family: dataset.name().to_string(),
        counts,
    })
}

/// Pearson product-moment correlation over all registry entries.
pub fn pearson(a: &FrequencyVector, b: &FrequencyVector) -> Result<f64> {
    if a.counts.len() != b.counts.len() {
        return Err(Error::RegistryMismatch);
    }
    let n = a.counts.len() as f64;
    let mean_a = a.counts.iter().map(|&x| f64::from(x)).sum::<f64>() / n;
    let mean_b = b.counts.iter().map(|&x| f64::from(x)).sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var_a = 0.0;
    let mut var_b = 0.0;
    for (&x, &y) in a.counts.iter().zip(&b.counts) {
        let dx = f64::from(x) - mean_a;
        let dy = f64::from(y) - mean_b;
        cov += dx * dy;
        var_a += dx * dx;
        var_b += dy * dy;
    }
    if var_a == 0.0 {
        return Err(Error::DegenerateFrequencyVector {
            family: a.family.clone(),
        });
    }
    if var_b == 0.0 {
        return Err(Error::DegenerateFrequencyVector {
            family: b.family.clone(),
        });
    }
    Ok(cov / (var_a.sqrt() * var_b.sqrt()))
}

/// Symmetric matrix of pairwise correlations; the diagonal is reported
/// as 1.
pub fn correlation_matrix(datasets: &[FamilyDataset]) -> Result<Vec<Vec<f64>>> {
    if datasets.len() < 2 {
        return Err(Error::InvalidArgument {
            message: "correlation needs at least two datasets".into(),
        });
    }
    let vectors: Vec<FrequencyVector> = datasets
        .iter()
        .map(consonant_frequencies)
        .collect::<Result<_>>()?;
    let n = vectors.len();
    let mut matrix = vec![vec![0.0; n]; n];
    for i in 0..n {
        matrix[i][i] = 1.0;
        for j in (i + 1)..n {
            let r = pearson(&vectors[i], &vectors[j])?;
            matrix[i][j] = r;
            matrix[j][i] = r;
        }
    }
    Ok(matrix)
}

/// The full fit pipeline for one dataset: network, empirical tail curve,
/// then grid search with t and mu taken from the dataset and N from the
/// caller.
pub fn fit_dataset(
    dataset: &FamilyDataset,
    registry_n: usize,
    grid: &GridSpec,
) -> Result<FitResult> {
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let net = BipartiteNetwork::from_dataset(dataset);
    let empirical = DegreeDistribution::from_degree_counts(&net.consonant_degrees())?;
    fit_epsilon(
        &empirical.cumulative(),
        dataset.len(),
        registry_n,
        dataset.mean_inventory_size(),
        grid,
    )
}

/// Merges the datasets and fits the result as one network.
pub fn combined_fit(
    datasets: &[FamilyDataset],
    registry_n: usize,
    grid: &GridSpec,
) -> Result<FitResult> {
    let merged = merge_families(datasets, combined_name(datasets))?;
    fit_dataset(&merged, registry_n, grid)
}

fn combined_name(datasets: &[FamilyDataset]) -> String {
    let names: Vec<&str> = datasets.iter().map(FamilyDataset::name).collect();
    names.join("+")
}

/// One pseudo-family fit from the control experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlFit {
    pub trial: usize,
    pub size: usize,
    pub epsilon_star: f64,
    pub lse_star: f64,
}

/// Outcome of [`control_experiment`].
#[derive(Debug, Clone, PartialEq)]
pub struct ControlReport {
    pub mean_epsilon: f64,
    pub fits: Vec<ControlFit>,
}

/// Samples pseudo-families of the given sizes uniformly without
/// replacement from `pool`, fits each, and reports every fit plus the
/// grand mean of the fitted epsilons. Trial i uses seed `seed + i`, so the
/// report is reproducible.
pub fn control_experiment(
    pool: &FamilyDataset,
    family_sizes: &[usize],
    trials: usize,
    registry_n: usize,
    grid: &GridSpec,
    seed: u64,
) -> Result<ControlReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument {
            message: "trials must be >= 1".into(),
        });
    }
    if family_sizes.is_empty() {
        return Err(Error::InvalidArgument {
            message: "at least one pseudo-family size is required".into(),
        });
    }
    for &size in family_sizes {
        if size == 0 {
            return Err(Error::InvalidArgument {
                message: "pseudo-family sizes must be >= 1".into(),
            });
        }
        if size > pool.len() {
            return Err(Error::SampleTooLarge {
                size,
                pool: pool.len(),
            });
        }
    }

    let mut fits = Vec::with_capacity(trials * family_sizes.len());
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64));
        for &size in family_sizes {
            let chosen = sample_without_replacement(&mut rng, pool.len(), size);
            let inventories = chosen
                .iter()
                .map(|&i| pool.inventories()[i].clone())
                .collect();
            let pseudo = FamilyDataset::new(
                format!("trial{trial}-size{size}"),
                inventories,
                std::sync::Arc::clone(pool.registry()),
            )?;
            let fit = fit_dataset(&pseudo, registry_n, grid)?;
            fits.push(ControlFit {
                trial,
                size,
                epsilon_star: fit.epsilon_star(),
                lse_star: fit.lse_star(),
            });
        }
    }
    let mean_epsilon = fits.iter().map(|f| f.epsilon_star).sum::<f64>() / fits.len() as f64;
    Ok(ControlReport { mean_epsilon, fits })
}

/// Partial Fisher-Yates: the first `k` entries of a shuffled 0..n, in draw
/// order.
fn sample_without_replacement(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    use rand::Rng;
    let mut indices: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        indices.swap(i, j);
    }
    indices.truncate(k);
    indices
}
