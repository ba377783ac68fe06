//! Reading and writing inventory files.
//!
//! The on-disk format is plain UTF-8 text, one language per line:
//!
//! ```text
//! language_id<TAB>family<TAB>label( label)*
//! ```
//!
//! Labels are separated by single spaces, lines starting with `#` are
//! comments, and blank lines are ignored. [`write_inventories`] emits the
//! same format with `\n` line endings and families grouped contiguously,
//! so a parse/write cycle is lossless.

pub mod fixture;

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::network::{ConsonantRegistry, FamilyDataset, LanguageInventory};

/// Parses a file into the global registry (labels in first-appearance
/// order) and one dataset per distinct family value, in first-appearance
/// order.
pub fn parse_inventories(
    path: impl AsRef<Path>,
) -> Result<(Arc<ConsonantRegistry>, Vec<FamilyDataset>)> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_inventories_str(&text)
}

/// Same as [`parse_inventories`], from an in-memory string.
pub fn parse_inventories_str(text: &str) -> Result<(Arc<ConsonantRegistry>, Vec<FamilyDataset>)> {
    struct RawRow {
        id: String,
        family: String,
        consonants: Vec<usize>,
    }

    let mut labels: Vec<String> = Vec::new();
    let mut label_index: std::collections::HashMap<String, usize> =
        std::collections::HashMap::new();
    let mut seen_ids: std::collections::HashSet<String> = std::collections::HashSet::new();
    let mut rows: Vec<RawRow> = Vec::new();

    for (lineno, raw_line) in text.lines().enumerate() {
        let line = raw_line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split('\t');
        let id = fields.next().unwrap_or("");
        let family = fields.next().ok_or_else(|| Error::Format {
            line: lineno + 1,
            message: "expected language_id<TAB>family<TAB>labels".into(),
        })?;
        let label_field = fields.next().ok_or_else(|| Error::Format {
            line: lineno + 1,
            message: "missing consonant labels field".into(),
        })?;
        if fields.next().is_some() {
            return Err(Error::Format {
                line: lineno + 1,
                message: "too many tab-separated fields".into(),
            });
        }
        if id.is_empty() || family.is_empty() {
            return Err(Error::Format {
                line: lineno + 1,
                message: "language id and family must be non-empty".into(),
            });
        }
        if !seen_ids.insert(id.to_string()) {
            return Err(Error::DuplicateLanguage { id: id.to_string() });
        }

        let mut consonants = Vec::new();
        let mut row_seen = std::collections::HashSet::new();
        for label in label_field.split(' ') {
            if label.is_empty() {
                return Err(Error::Format {
                    line: lineno + 1,
                    message: format!("empty consonant label in row for '{id}'"),
                });
            }
            if !row_seen.insert(label) {
                return Err(Error::Format {
                    line: lineno + 1,
                    message: format!("duplicate consonant '{label}' in row for '{id}'"),
                });
            }
            let index = *label_index.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                labels.len() - 1
            });
            consonants.push(index);
        }
        if consonants.is_empty() {
            return Err(Error::EmptyInventory { id: id.to_string() });
        }
        rows.push(RawRow {
            id: id.to_string(),
            family: family.to_string(),
            consonants,
        });
    }

    if rows.is_empty() {
        return Err(Error::EmptyDataset);
    }

    let registry = Arc::new(ConsonantRegistry::new(labels)?);

    let mut family_order: Vec<String> = Vec::new();
    let mut grouped: std::collections::HashMap<String, Vec<LanguageInventory>> =
        std::collections::HashMap::new();
    for row in rows {
        let inventory =
            LanguageInventory::new(row.id, row.family.clone(), row.consonants, &registry)?;
        grouped
            .entry(row.family.clone())
            .or_insert_with(|| {
                family_order.push(row.family.clone());
                Vec::new()
            })
            .push(inventory);
    }

    let mut datasets = Vec::with_capacity(family_order.len());
    for family in family_order {
        let inventories = grouped.remove(&family).expect("family recorded when seen");
        datasets.push(FamilyDataset::new(
            family,
            inventories,
            Arc::clone(&registry),
        )?);
    }
    Ok((registry, datasets))
}

/// Serializes datasets back to the file format, one family block per
/// dataset, in the given order. Labels within a row are emitted in
/// registry-index order.
pub fn write_inventories(datasets: &[FamilyDataset]) -> String {
    let mut out = String::new();
    for ds in datasets {
        let registry = ds.registry();
        for inv in ds.inventories() {
            out.push_str(inv.language_id());
            out.push('\t');
            out.push_str(inv.family());
            out.push('\t');
            let mut first = true;
            for &c in inv.consonants() {
                if !first {
                    out.push(' ');
                }
                out.push_str(registry.symbol(c).expect("index validated at construction"));
                first = false;
            }
            out.push('\n');
        }
    }
    out
}

/// Concatenates datasets under a new name. All inputs must share one
/// registry and language ids must stay globally unique.
pub fn merge_families(
    datasets: &[FamilyDataset],
    name: impl Into<String>,
) -> Result<FamilyDataset> {
    let first = datasets.first().ok_or(Error::EmptyDataset)?;
    for other in &datasets[1..] {
        if !first.shares_registry(other) {
            return Err(Error::RegistryMismatch);
        }
    }
    let inventories: Vec<LanguageInventory> = datasets
        .iter()
        .flat_map(|ds| ds.inventories().iter().cloned())
        .collect();
    // FamilyDataset::new re-checks id uniqueness across the concatenation
    FamilyDataset::new(name, inventories, Arc::clone(first.registry()))
}
