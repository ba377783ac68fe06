//! Growth simulation: languages attach to consonants preferentially.
//!
//! Language nodes arrive in ascending order of their prescribed degree d_i
//! (inventory size, known a priori). Each language connects to d_i distinct
//! consonants; a consonant with current degree k is chosen with probability
//!
//! ```text
//! Pr(C) = (k + epsilon) / sum over eligible C' of (k' + epsilon)
//! ```
//!
//! where the eligible set excludes the consonants this language has already
//! drawn. Small `epsilon` makes the process strongly preferential; large
//! `epsilon` approaches uniform random attachment.
//!
//! Randomness comes from ChaCha8 seeded with a caller-provided 64-bit seed,
//! so a [`GrowthConfig`] fully determines the resulting network on every
//! platform.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dist::DegreeDistribution;
use crate::error::{Error, Result};
use crate::network::BipartiteNetwork;

/// When consonant degrees become visible to subsequent draws.
///
/// The two modes provably generate identical networks: an eligible
/// consonant's weight can only change when it is drawn, and a drawn
/// consonant is excluded for the rest of its language's turn, so the
/// per-edge updates are never observed within the turn that made them.
/// The switch exists so that equivalence stays checkable
/// (`update_timing_does_not_matter` below) rather than assumed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeUpdate {
    /// Degrees update immediately after every edge (one edge per time step).
    #[default]
    PerEdge,
    /// Degrees within one language's turn are frozen at the values seen
    /// when the turn started.
    PerLanguage,
}

/// Everything that determines one simulation run.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthConfig {
    epsilon: f64,
    degree_sequence: Vec<usize>,
    registry_size: usize,
    seed: u64,
    update: DegreeUpdate,
}

impl GrowthConfig {
    /// Requires epsilon > 0 and 1 <= d_i <= N for every entry.
    pub fn new(
        epsilon: f64,
        degree_sequence: Vec<usize>,
        registry_size: usize,
        seed: u64,
    ) -> Result<Self> {
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(Error::InvalidEpsilon { value: epsilon });
        }
        if registry_size == 0 {
            return Err(Error::InvalidParams {
                message: "registry size must be >= 1".into(),
            });
        }
        if degree_sequence.is_empty() {
            return Err(Error::InvalidDegreeSequence {
                message: "degree sequence is empty".into(),
            });
        }
        for (i, &d) in degree_sequence.iter().enumerate() {
            if d == 0 {
                return Err(Error::InvalidDegreeSequence {
                    message: format!("d_{i} = 0; every language needs at least one consonant"),
                });
            }
            if d > registry_size {
                return Err(Error::InvalidDegreeSequence {
                    message: format!("d_{i} = {d} exceeds registry size {registry_size}"),
                });
            }
        }
        Ok(Self {
            epsilon,
            degree_sequence,
            registry_size,
            seed,
            update: DegreeUpdate::default(),
        })
    }

    pub fn with_update(mut self, update: DegreeUpdate) -> Self {
        self.update = update;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn degree_sequence(&self) -> &[usize] {
        &self.degree_sequence
    }

    pub fn registry_size(&self) -> usize {
        self.registry_size
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn update(&self) -> DegreeUpdate {
        self.update
    }
}

/// Attachment probabilities over the eligible consonants.
///
/// `current_degrees` maps consonant index to its degree; absent consonants
/// have degree 0. `excluded` are the consonants already connected to the
/// language drawing now. The result lists `(index, probability)` in
/// ascending index order and sums to 1.
pub fn attachment_probabilities(
    current_degrees: &BTreeMap<usize, u32>,
    excluded: &BTreeSet<usize>,
    epsilon: f64,
    registry_size: usize,
) -> Result<Vec<(usize, f64)>> {
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(Error::InvalidEpsilon { value: epsilon });
    }
    for &c in current_degrees.keys().chain(excluded.iter()) {
        if c >= registry_size {
            return Err(Error::IndexOutOfRange {
                index: c,
                size: registry_size,
            });
        }
    }
    if excluded.len() >= registry_size {
        return Err(Error::DegreeExceedsRegistry);
    }

    let mut entries = Vec::with_capacity(registry_size - excluded.len());
    let mut total = 0.0;
    for c in 0..registry_size {
        if excluded.contains(&c) {
            continue;
        }
        let k = current_degrees.get(&c).copied().unwrap_or(0);
        let w = f64::from(k) + epsilon;
        total += w;
        entries.push((c, w));
    }
    for (_, w) in &mut entries {
        *w /= total;
    }
    Ok(entries)
}

/// Runs the growth process. Deterministic: identical configs produce
/// identical networks. Language ids are `L0..L{t-1}` keyed to the position
/// of their degree in the input sequence.
pub fn simulate(config: &GrowthConfig) -> Result<BipartiteNetwork> {
    let n = config.registry_size;
    let t = config.degree_sequence.len();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    // ascending by degree, ties broken by input position (stable sort)
    let mut order: Vec<usize> = (0..t).collect();
    order.sort_by_key(|&i| config.degree_sequence[i]);

    let mut degrees = vec![0u32; n];
    let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); t];
    let mut in_turn = vec![false; n];

    for &lang in &order {
        let d = config.degree_sequence[lang];
        let snapshot = match config.update {
            DegreeUpdate::PerEdge => None,
            DegreeUpdate::PerLanguage => Some(degrees.clone()),
        };
        let mut picked: Vec<usize> = Vec::with_capacity(d);

        for _ in 0..d {
            let weight_source: &[u32] = match &snapshot {
                Some(s) => s,
                None => &degrees,
            };
            let mut total = 0.0;
            for c in 0..n {
                if !in_turn[c] {
                    total += f64::from(weight_source[c]) + config.epsilon;
                }
            }
            debug_assert!(total > 0.0);
            let target = rng.gen::<f64>() * total;
            let mut acc = 0.0;
            let mut chosen = None;
            let mut last_eligible = None;
            for c in 0..n {
                if in_turn[c] {
                    continue;
                }
                last_eligible = Some(c);
                acc += f64::from(weight_source[c]) + config.epsilon;
                if target < acc {
                    chosen = Some(c);
                    break;
                }
            }
            // rounding can leave target just past the final accumulator
            let c = chosen
                .or(last_eligible)
                .ok_or(Error::DegreeExceedsRegistry)?;
            in_turn[c] = true;
            picked.push(c);
            degrees[c] += 1;
        }

        for &c in &picked {
            in_turn[c] = false;
        }
        adjacency[lang] = picked.into_iter().collect();
    }

    let languages = adjacency
        .into_iter()
        .enumerate()
        .map(|(i, set)| (format!("L{i}"), set))
        .collect();
    BipartiteNetwork::new(languages, n)
}

/// Averages the empirical degree distribution over `runs` simulations
/// seeded `seed, seed+1, ...`. The merge sums masses per degree and then
/// normalizes, so it does not depend on run order.
pub fn ensemble_distribution(config: &GrowthConfig, runs: usize) -> Result<DegreeDistribution> {
    if runs == 0 {
        return Err(Error::InvalidArgument {
            message: "runs must be >= 1".into(),
        });
    }
    let mut sums: BTreeMap<u32, f64> = BTreeMap::new();
    for i in 0..runs {
        let run_config = config.clone().with_seed(config.seed.wrapping_add(i as u64));
        let net = simulate(&run_config)?;
        let dist = DegreeDistribution::from_degree_counts(&net.consonant_degrees())?;
        for (k, p) in dist.iter() {
            *sums.entry(k).or_insert(0.0) += p;
        }
    }
    let support: Vec<u32> = sums.keys().copied().collect();
    let mass: Vec<f64> = sums.values().map(|&s| s / runs as f64).collect();
    DegreeDistribution::new(support, mass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(pairs: &[(usize, u32)]) -> BTreeMap<usize, u32> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn uniform_at_zero_degree() {
        let probs = attachment_probabilities(&BTreeMap::new(), &BTreeSet::new(), 0.1, 3).unwrap();
        assert_eq!(probs.len(), 3);
        for (_, p) in probs {
            assert!((p - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn hand_evaluated_two_consonants() {
        // degrees {a:1, b:0}, eps 0.1: (1.1/1.2, 0.1/1.2)
        let probs = attachment_probabilities(&map(&[(0, 1)]), &BTreeSet::new(), 0.1, 2).unwrap();
        assert!((probs[0].1 - 11.0 / 12.0).abs() < 1e-12);
        assert!((probs[1].1 - 1.0 / 12.0).abs() < 1e-12);
    }

    #[test]
    fn equal_degrees_are_symmetric() {
        for eps in [0.01, 0.5, 3.0] {
            let probs = attachment_probabilities(&map(&[(0, 5), (1, 5)]), &BTreeSet::new(), eps, 2)
                .unwrap();
            assert!((probs[0].1 - 0.5).abs() < 1e-15);
            assert!((probs[1].1 - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn fully_excluded_registry_is_an_error() {
        let excluded: BTreeSet<usize> = [0, 1].into_iter().collect();
        let err = attachment_probabilities(&BTreeMap::new(), &excluded, 0.1, 2).unwrap_err();
        assert!(matches!(err, Error::DegreeExceedsRegistry));
    }

    #[test]
    fn probabilities_sum_to_one() {
        let degrees = map(&[(0, 3), (2, 7), (5, 1)]);
        let excluded: BTreeSet<usize> = [2].into_iter().collect();
        let probs = attachment_probabilities(&degrees, &excluded, 0.05, 8).unwrap();
        let total: f64 = probs.iter().map(|(_, p)| p).sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert!(probs.iter().all(|&(c, p)| c != 2 && p > 0.0));
    }

    #[test]
    fn single_language_connects_to_everything() {
        let config = GrowthConfig::new(0.7, vec![4], 4, 9).unwrap();
        let net = simulate(&config).unwrap();
        assert_eq!(net.edge_count(), 4);
        assert_eq!(net.consonant_degrees().len(), 4);
    }

    #[test]
    fn same_seed_same_network() {
        let config = GrowthConfig::new(0.05, vec![3, 5, 2, 5], 40, 123).unwrap();
        let a = simulate(&config).unwrap();
        let b = simulate(&config).unwrap();
        assert_eq!(a, b);
        let c = simulate(&config.clone().with_seed(124)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn edge_totals_conserved() {
        let config = GrowthConfig::new(0.05, vec![3, 5, 2, 5], 40, 7).unwrap();
        let net = simulate(&config).unwrap();
        assert_eq!(net.edge_count(), 15);
        let total: u32 = net.consonant_degrees().values().sum();
        assert_eq!(total, 15);
        // per-language degrees follow the input sequence
        let degrees: Vec<usize> = net.language_degrees().map(|(_, d)| d).collect();
        assert_eq!(degrees, vec![3, 5, 2, 5]);
    }

    #[test]
    fn update_timing_does_not_matter() {
        for seed in 0..20 {
            let config = GrowthConfig::new(0.2, vec![4, 2, 6, 9, 3], 30, seed).unwrap();
            let per_edge = simulate(&config).unwrap();
            let per_language =
                simulate(&config.clone().with_update(DegreeUpdate::PerLanguage)).unwrap();
            assert_eq!(per_edge, per_language);
        }
    }

    #[test]
    fn ensemble_single_run_equals_one_simulation() {
        let config = GrowthConfig::new(0.1, vec![2, 3], 10, 77).unwrap();
        let single =
            DegreeDistribution::from_degree_counts(&simulate(&config).unwrap().consonant_degrees())
                .unwrap();
        let ensemble = ensemble_distribution(&config, 1).unwrap();
        assert_eq!(single, ensemble);
    }

    #[test]
    fn ensemble_zero_runs_rejected() {
        let config = GrowthConfig::new(0.1, vec![1], 2, 0).unwrap();
        assert!(ensemble_distribution(&config, 0).is_err());
    }

    #[test]
    fn large_epsilon_limit_matches_binomial_oracle() {
        // two languages, one consonant each, N=2. With eps -> inf the second
        // language picks uniformly, so P(shared consonant) -> 1/2 and the
        // ensemble mass at degree 2 approaches 1/2.
        let runs = 10_000;
        let config = GrowthConfig::new(1e6, vec![1, 1], 2, 2024).unwrap();
        let dist = ensemble_distribution(&config, runs).unwrap();
        let p2 = dist.mass_at(2).unwrap_or(0.0);
        let se = (0.25_f64 / runs as f64).sqrt();
        assert!(
            (p2 - 0.5).abs() < 3.0 * se,
            "degree-2 fraction {p2} outside 3 standard errors of 1/2"
        );
    }

    #[test]
    fn invalid_configs_rejected() {
        assert!(GrowthConfig::new(0.0, vec![1], 2, 0).is_err());
        assert!(GrowthConfig::new(-1.0, vec![1], 2, 0).is_err());
        assert!(GrowthConfig::new(0.1, vec![], 2, 0).is_err());
        assert!(GrowthConfig::new(0.1, vec![0], 2, 0).is_err());
        assert!(GrowthConfig::new(0.1, vec![3], 2, 0).is_err());
        assert!(GrowthConfig::new(0.1, vec![1], 0, 0).is_err());
    }
}
