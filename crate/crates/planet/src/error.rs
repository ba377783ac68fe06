//! Crate-wide error type.
//!
//! Every variant carries a stable short code (see [`Error::code`]) that the
//! CLI prepends to diagnostics, so scripts can match on `error[<code>]:`
//! without parsing prose.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read '{path}': {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("duplicate language id '{id}'")]
    DuplicateLanguage { id: String },

    #[error("language '{id}' has an empty consonant list")]
    EmptyInventory { id: String },

    #[error("consonant index {index} out of range for registry of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("datasets use different consonant registries")]
    RegistryMismatch,

    #[error("no attested consonants")]
    NoAttestedConsonants,

    #[error("empty dataset")]
    EmptyDataset,

    #[error("unknown family '{name}'")]
    UnknownFamily { name: String },

    #[error("epsilon must be positive, got {value}")]
    InvalidEpsilon { value: f64 },

    #[error("invalid degree sequence: {message}")]
    InvalidDegreeSequence { message: String },

    #[error("degree exceeds registry")]
    DegreeExceedsRegistry,

    #[error("invalid model parameters: {message}")]
    InvalidParams { message: String },

    #[error("non-finite mass at degree {k}")]
    NonFiniteMass { k: u32 },

    #[error("invalid distribution: {message}")]
    InvalidDistribution { message: String },

    #[error("incomparable curves: no shared abscissa")]
    IncomparableCurves,

    #[error("degenerate frequency vector for '{family}'")]
    DegenerateFrequencyVector { family: String },

    #[error("sample size {size} exceeds pool of {pool} inventories")]
    SampleTooLarge { size: usize, pool: usize },

    #[error("{message}")]
    InvalidArgument { message: String },
}

impl Error {
    /// Stable machine-readable code used in CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Io { .. } => "io",
            Error::Format { .. } => "format",
            Error::DuplicateLanguage { .. } => "dup-language",
            Error::EmptyInventory { .. } => "empty-inventory",
            Error::IndexOutOfRange { .. } => "index-range",
            Error::RegistryMismatch => "registry-mismatch",
            Error::NoAttestedConsonants => "no-attested",
            Error::EmptyDataset => "empty-dataset",
            Error::UnknownFamily { .. } => "unknown-family",
            Error::InvalidEpsilon { .. } => "invalid-epsilon",
            Error::InvalidDegreeSequence { .. } => "invalid-degrees",
            Error::DegreeExceedsRegistry => "degree-exceeds-registry",
            Error::InvalidParams { .. } => "invalid-params",
            Error::NonFiniteMass { .. } => "non-finite-mass",
            Error::InvalidDistribution { .. } => "invalid-distribution",
            Error::IncomparableCurves => "incomparable-curves",
            Error::DegenerateFrequencyVector { .. } => "degenerate-vector",
            Error::SampleTooLarge { .. } => "sample-too-large",
            Error::InvalidArgument { .. } => "invalid-argument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
