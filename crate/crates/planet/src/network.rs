//! Bipartite occurrence networks over languages and consonants.
//!
//! A network has language nodes on one side and consonant nodes on the
//! other; an edge means the consonant occurs in that language's inventory.
//! Consonants are identified by their index into a [`ConsonantRegistry`];
//! the labels themselves are opaque strings and carry no feature structure.
//!
//! All types here are immutable after construction and safe to share
//! across threads.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of distinct consonant labels. The index of a label is
/// stable for the lifetime of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsonantRegistry {
    symbols: Vec<String>,
    index: HashMap<String, usize>,
}

impl ConsonantRegistry {
    /// Builds a registry from labels in first-appearance order.
    ///
    /// Duplicate labels are rejected; an empty label list is rejected.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut symbols = Vec::new();
        let mut index = HashMap::new();
        for label in labels {
            let label = label.into();
            if index.contains_key(&label) {
                return Err(Error::InvalidArgument {
                    message: format!("duplicate consonant label '{label}' in registry"),
                });
            }
            index.insert(label.clone(), symbols.len());
            symbols.push(label);
        }
        if symbols.is_empty() {
            return Err(Error::InvalidArgument {
                message: "registry must contain at least one consonant".into(),
            });
        }
        Ok(Self { symbols, index })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, index: usize) -> Option<&str> {
        self.symbols.get(index).map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }
}

/// One language's consonant inventory, as indices into a registry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageInventory {
    language_id: String,
    family: String,
    consonants: BTreeSet<usize>,
}

impl LanguageInventory {
    /// The consonant set must be non-empty and every index must be in range
    /// for `registry`. Duplicates collapse silently (the set is a set).
    pub fn new<I>(
        language_id: impl Into<String>,
        family: impl Into<String>,
        consonants: I,
        registry: &ConsonantRegistry,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let language_id = language_id.into();
        let consonants: BTreeSet<usize> = consonants.into_iter().collect();
        if consonants.is_empty() {
            return Err(Error::EmptyInventory { id: language_id });
        }
        if let Some(&max) = consonants.iter().next_back() {
            if max >= registry.len() {
                return Err(Error::IndexOutOfRange {
                    index: max,
                    size: registry.len(),
                });
            }
        }
        Ok(Self {
            language_id,
            family: family.into(),
            consonants,
        })
    }

    pub fn language_id(&self) -> &str {
        &self.language_id
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn consonants(&self) -> &BTreeSet<usize> {
        &self.consonants
    }

    /// Inventory size: the degree of this language's node.
    pub fn degree(&self) -> usize {
        self.consonants.len()
    }

    /// Same inventory under a different language id.
    pub fn relabeled(&self, language_id: impl Into<String>) -> Self {
        Self {
            language_id: language_id.into(),
            family: self.family.clone(),
            consonants: self.consonants.clone(),
        }
    }
}

/// A named group of language inventories sharing one registry.
#[derive(Debug, Clone)]
pub struct FamilyDataset {
    name: String,
    inventories: Vec<LanguageInventory>,
    registry: Arc<ConsonantRegistry>,
}

impl FamilyDataset {
    /// Language ids must be unique within the dataset.
    pub fn new(
        name: impl Into<String>,
        inventories: Vec<LanguageInventory>,
        registry: Arc<ConsonantRegistry>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for inv in &inventories {
            if !seen.insert(inv.language_id()) {
                return Err(Error::DuplicateLanguage {
                    id: inv.language_id().to_string(),
                });
            }
            if let Some(&max) = inv.consonants().iter().next_back() {
                if max >= registry.len() {
                    return Err(Error::IndexOutOfRange {
                        index: max,
                        size: registry.len(),
                    });
                }
            }
        }
        Ok(Self {
            name: name.into(),
            inventories,
            registry,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn inventories(&self) -> &[LanguageInventory] {
        &self.inventories
    }

    pub fn registry(&self) -> &Arc<ConsonantRegistry> {
        &self.registry
    }

    /// Number of languages (the model's `t`).
    pub fn len(&self) -> usize {
        self.inventories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inventories.is_empty()
    }

    /// Total edge count across all inventories.
    pub fn edge_count(&self) -> usize {
        self.inventories.iter().map(LanguageInventory::degree).sum()
    }

    /// Mean inventory size: edges / languages.
    pub fn mean_inventory_size(&self) -> f64 {
        self.edge_count() as f64 / self.len() as f64
    }

    /// Whether two datasets can be combined: same registry by identity or
    /// by content.
    pub fn shares_registry(&self, other: &FamilyDataset) -> bool {
        Arc::ptr_eq(&self.registry, &other.registry) || *self.registry == *other.registry
    }
}

/// The bipartite network itself: one adjacency set per language node.
///
/// Invariants, checked at construction:
/// - every consonant index is `< registry_size`
/// - every language has at least one consonant
/// - edges are sets, so duplicates are impossible by representation
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteNetwork {
    languages: Vec<(String, BTreeSet<usize>)>,
    registry_size: usize,
}

impl BipartiteNetwork {
    pub fn new(languages: Vec<(String, BTreeSet<usize>)>, registry_size: usize) -> Result<Self> {
        for (id, set) in &languages {
            if set.is_empty() {
                return Err(Error::EmptyInventory { id: id.clone() });
            }
            if let Some(&max) = set.iter().next_back() {
                if max >= registry_size {
                    return Err(Error::IndexOutOfRange {
                        index: max,
                        size: registry_size,
                    });
                }
            }
        }
        Ok(Self {
            languages,
            registry_size,
        })
    }

    pub fn from_dataset(dataset: &FamilyDataset) -> Self {
        let languages = dataset
            .inventories()
            .iter()
            .map(|inv| (inv.language_id().to_string(), inv.consonants().clone()))
            .collect();
        Self {
            languages,
            registry_size: dataset.registry().len(),
        }
    }

    pub fn registry_size(&self) -> usize {
        self.registry_size
    }

    /// Language side of the graph: (id, adjacency set) in input order.
    pub fn languages(&self) -> &[(String, BTreeSet<usize>)] {
        &self.languages
    }

    /// (language id, degree d_i) in input order.
    pub fn language_degrees(&self) -> impl Iterator<Item = (&str, usize)> {
        self.languages
            .iter()
            .map(|(id, set)| (id.as_str(), set.len()))
    }

    pub fn language_count(&self) -> usize {
        self.languages.len()
    }

    pub fn edge_count(&self) -> usize {
        self.languages.iter().map(|(_, set)| set.len()).sum()
    }

    /// Degree of each consonant node: how many languages contain it.
    /// Consonants with degree zero are omitted.
    pub fn consonant_degrees(&self) -> BTreeMap<usize, u32> {
        let mut degrees = BTreeMap::new();
        for (_, set) in &self.languages {
            for &c in set {
                *degrees.entry(c).or_insert(0u32) += 1;
            }
        }
        degrees
    }

    /// Number of attested consonant nodes (degree >= 1).
    pub fn attested_count(&self) -> usize {
        let mut seen = BTreeSet::new();
        for (_, set) in &self.languages {
            seen.extend(set.iter().copied());
        }
        seen.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn registry(labels: &[&str]) -> Arc<ConsonantRegistry> {
        Arc::new(ConsonantRegistry::new(labels.iter().copied()).unwrap())
    }

    #[test]
    fn single_language_all_degree_one() {
        let reg = registry(&["a", "b", "c"]);
        let inv = LanguageInventory::new("x", "f", [0, 1, 2], &reg).unwrap();
        let ds = FamilyDataset::new("f", vec![inv], reg).unwrap();
        let net = BipartiteNetwork::from_dataset(&ds);
        let deg = net.consonant_degrees();
        assert_eq!(deg.len(), 3);
        assert!(deg.values().all(|&k| k == 1));
    }

    #[test]
    fn full_overlap_counts_both_languages() {
        let reg = registry(&["a"]);
        let invs = vec![
            LanguageInventory::new("x", "f", [0], &reg).unwrap(),
            LanguageInventory::new("y", "f", [0], &reg).unwrap(),
        ];
        let ds = FamilyDataset::new("f", invs, reg).unwrap();
        let net = BipartiteNetwork::from_dataset(&ds);
        assert_eq!(net.consonant_degrees(), BTreeMap::from([(0, 2)]));
    }

    #[test]
    fn edge_conservation() {
        let reg = registry(&["a", "b", "c", "d"]);
        let invs = vec![
            LanguageInventory::new("x", "f", [0, 1], &reg).unwrap(),
            LanguageInventory::new("y", "f", [1, 2, 3], &reg).unwrap(),
            LanguageInventory::new("z", "f", [0], &reg).unwrap(),
        ];
        let ds = FamilyDataset::new("f", invs, reg).unwrap();
        let net = BipartiteNetwork::from_dataset(&ds);
        let lang_total: usize = net.language_degrees().map(|(_, d)| d).sum();
        let cons_total: u64 = net
            .consonant_degrees()
            .values()
            .map(|&k| u64::from(k))
            .sum();
        assert_eq!(lang_total as u64, cons_total);
        assert_eq!(net.edge_count(), 6);
    }

    #[test]
    fn duplicate_language_id_rejected() {
        let reg = registry(&["a"]);
        let invs = vec![
            LanguageInventory::new("x", "f", [0], &reg).unwrap(),
            LanguageInventory::new("x", "f", [0], &reg).unwrap(),
        ];
        let err = FamilyDataset::new("f", invs, reg).unwrap_err();
        assert!(matches!(err, Error::DuplicateLanguage { id } if id == "x"));
    }

    #[test]
    fn empty_inventory_rejected() {
        let reg = registry(&["a"]);
        let err = LanguageInventory::new("x", "f", [], &reg).unwrap_err();
        assert!(matches!(err, Error::EmptyInventory { .. }));
    }

    #[test]
    fn out_of_range_index_rejected() {
        let reg = registry(&["a"]);
        let err = LanguageInventory::new("x", "f", [1], &reg).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 1, size: 1 }));
    }
}
