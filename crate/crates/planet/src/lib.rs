//! Bipartite phoneme-language networks.
//!
//! A consonant inventory dataset becomes a bipartite graph: language nodes
//! on one side, consonant nodes on the other, an edge wherever a consonant
//! occurs in a language. This crate builds those networks from inventory
//! files, simulates their growth under epsilon-tempered preferential
//! attachment, evaluates the closed-form beta-shaped degree distribution of
//! that process, fits epsilon to empirical data by logarithmic standard
//! error, and runs the pseudo-family control and cross-family correlation
//! experiments.
//!
//! Start with the runnable examples (`cargo run --example fit_families`)
//! or the `planet` binary; the modules underneath are:
//!
//! - [`network`]: registries, inventories, datasets, bipartite networks
//! - [`dist`]: sparse degree distributions and their tail form
//! - [`ingest`]: the inventory file format and the bundled fixture
//! - [`growth`]: the seeded growth simulation
//! - [`analytic`]: the closed-form solution of the growth process
//! - [`fit`]: grid-search fitting of epsilon
//! - [`analysis`]: correlations, combined fits, the control experiment
//! - [`cli`], [`manifest`]: the command-line surface and run manifests

pub mod analysis;
pub mod analytic;
pub mod cli;
pub mod dist;
pub mod error;
pub mod fit;
pub mod growth;
pub mod ingest;
pub mod manifest;
pub mod network;

pub use analysis::{
    combined_fit, consonant_frequencies, control_experiment, correlation_matrix, fit_dataset,
    pearson, ControlFit, ControlReport, FrequencyVector,
};
pub use analytic::{beta_mass, model_cumulative, ModelParams};
pub use dist::{CumulativeDistribution, DegreeDistribution};
pub use error::{Error, Result};
pub use fit::{fit_epsilon, fit_epsilon_pdf, lse, FitResult, FitTarget, GridSpec};
pub use growth::{
    attachment_probabilities, ensemble_distribution, simulate, DegreeUpdate, GrowthConfig,
};
pub use ingest::{merge_families, parse_inventories, parse_inventories_str, write_inventories};
pub use network::{BipartiteNetwork, ConsonantRegistry, FamilyDataset, LanguageInventory};
