//! Bundled synthetic fixture.
//!
//! Five families with the canonical UPSID shape — 19/17/30/12/9 languages,
//! 148/123/135/82/71 attested consonants, 534/453/692/221/201 edges — over
//! a shared pool of labels. The inventories themselves are synthetic: every
//! family draws from a common 45-consonant core plus its own rarer labels,
//! with draws biased toward already-popular consonants so the degree
//! distributions look like real occurrence data.
//!
//! Generation is fully deterministic; the committed `data/fixture.tsv` is
//! exactly [`fixture_tsv`]'s output, and a test keeps them in sync.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Committed copy of the fixture, byte-identical to [`fixture_tsv`].
pub const FIXTURE_TSV: &str = include_str!("../../data/fixture.tsv");

/// Per-family node and edge counts the fixture is built to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyShape {
    pub code: &'static str,
    pub languages: usize,
    pub consonants: usize,
    pub edges: usize,
}

pub const FAMILY_SHAPES: [FamilyShape; 5] = [
    FamilyShape {
        code: "IE",
        languages: 19,
        consonants: 148,
        edges: 534,
    },
    FamilyShape {
        code: "AA",
        languages: 17,
        consonants: 123,
        edges: 453,
    },
    FamilyShape {
        code: "NC",
        languages: 30,
        consonants: 135,
        edges: 692,
    },
    FamilyShape {
        code: "AN",
        languages: 12,
        consonants: 82,
        edges: 221,
    },
    FamilyShape {
        code: "ST",
        languages: 9,
        consonants: 71,
        edges: 201,
    },
];

const LANGUAGES: [&[&str]; 5] = [
    &[
        "Albanian",
        "Lithuanian",
        "Breton",
        "Irish",
        "German",
        "Norwegian",
        "Greek",
        "Bengali",
        "Hindi-Urdu",
        "Kashmiri",
        "Sinhalese",
        "Farsi",
        "Kurdish",
        "Pashto",
        "French",
        "Romanian",
        "Spanish",
        "Russian",
        "Bulgarian",
    ],
    &[
        "Shilha", "Margi", "Angas", "Dera", "Hausa", "Kanakuru", "Ngizim", "Awiya", "Somali",
        "Iraqw", "Dizi", "Kefa", "Kullo", "Hamer", "Arabic", "Amharic", "Socotri",
    ],
    &[
        "Diola", "Temne", "Wolof", "Akan", "Amo", "Bariba", "Beembe", "Birom", "Cham", "Dagbani",
        "Doayo", "Efik", "Ga", "Gbeya", "Igbo", "Ik", "Koma", "Lelemi", "Senadi", "Tampulma",
        "Tarok", "Teke", "Zande", "Zulu", "Kadugli", "Moro", "Bisa", "Dan", "Bambara", "Kpelle",
    ],
    &[
        "Rukai", "Tsou", "Hawaiian", "Iai", "Adzera", "Kaliai", "Roro", "Malagasy", "Chamorro",
        "Tagalog", "Batak", "Javanese",
    ],
    &[
        "Hakka", "Mandarin", "Taishan", "Jingpho", "Ao", "Karen", "Burmese", "Lahu", "Dafla",
    ],
];

/// Shared core every family attests in full.
const CORE_LABELS: [&str; 45] = [
    "p", "b", "t", "d", "k", "g", "q", "G", "m", "n", "J", "N", "f", "v", "T", "D", "s", "z", "S",
    "Z", "x", "h", "l", "r", "j", "w", "tS", "dZ", "ts", "dz", "c", "F", "B", "R", "L", "X", "4",
    "5", "M", "W", "H", "K", "P", "V", "Y",
];

const FIXTURE_SEED: u64 = 0x1b90_55d3_6f2c_a841;

/// Renders the whole fixture file.
pub fn fixture_tsv() -> String {
    let mut out = String::new();
    out.push_str("# synthetic consonant inventory fixture: five families over a shared pool\n");
    out.push_str("# language_id<TAB>family<TAB>consonant labels (space-separated)\n");

    let mut extra_offset = 0usize;
    for (fi, shape) in FAMILY_SHAPES.iter().enumerate() {
        let names = LANGUAGES[fi];
        debug_assert_eq!(names.len(), shape.languages);
        let extras = shape.consonants - CORE_LABELS.len();
        let labels: Vec<String> = CORE_LABELS
            .iter()
            .map(|s| s.to_string())
            .chain((0..extras).map(|i| format!("x{:03}", extra_offset + i)))
            .collect();
        extra_offset += extras;

        let mut rng = ChaCha8Rng::seed_from_u64(FIXTURE_SEED.wrapping_add(fi as u64));
        let sizes = inventory_sizes(&mut rng, shape);
        let adjacency = draw_inventories(&mut rng, shape, &sizes);

        for (name, consonants) in names.iter().zip(&adjacency) {
            out.push_str(name);
            out.push('\t');
            out.push_str(shape.code);
            out.push('\t');
            let mut sorted: Vec<usize> = consonants.clone();
            sorted.sort_unstable();
            for (i, &c) in sorted.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&labels[c]);
            }
            out.push('\n');
        }
    }
    out
}

/// Inventory sizes around the family mean, repaired to sum to the exact
/// edge count.
fn inventory_sizes(rng: &mut ChaCha8Rng, shape: &FamilyShape) -> Vec<usize> {
    let t = shape.languages;
    let mu = shape.edges as f64 / t as f64;
    let lo = ((mu * 0.6).floor() as usize).max(2);
    let hi = ((mu * 1.4).ceil() as usize).min(shape.consonants);
    assert!(t * lo <= shape.edges && shape.edges <= t * hi);

    let mut sizes: Vec<usize> = (0..t).map(|_| rng.gen_range(lo..=hi)).collect();
    let mut sum: usize = sizes.iter().sum();
    let mut i = 0;
    while sum != shape.edges {
        if sum < shape.edges && sizes[i] < hi {
            sizes[i] += 1;
            sum += 1;
        } else if sum > shape.edges && sizes[i] > lo {
            sizes[i] -= 1;
            sum -= 1;
        }
        i = (i + 1) % t;
    }
    sizes
}

/// Draws each language's consonants with weight (base rank bias + current
/// popularity), then swaps edges around until every one of the family's
/// consonants is attested at least once.
fn draw_inventories(rng: &mut ChaCha8Rng, shape: &FamilyShape, sizes: &[usize]) -> Vec<Vec<usize>> {
    let m = shape.consonants;
    let base: Vec<f64> = (0..m).map(|c| 2.0 / (1.0 + c as f64).powf(0.7)).collect();
    let mut degree = vec![0u32; m];
    let mut adjacency: Vec<Vec<usize>> = Vec::with_capacity(sizes.len());
    let mut in_turn = vec![false; m];

    for &d in sizes {
        let mut picked = Vec::with_capacity(d);
        for _ in 0..d {
            let mut total = 0.0;
            for c in 0..m {
                if !in_turn[c] {
                    total += base[c] + f64::from(degree[c]);
                }
            }
            let target = rng.gen::<f64>() * total;
            let mut acc = 0.0;
            let mut chosen = m - 1;
            for c in 0..m {
                if in_turn[c] {
                    continue;
                }
                acc += base[c] + f64::from(degree[c]);
                if target < acc {
                    chosen = c;
                    break;
                }
            }
            in_turn[chosen] = true;
            picked.push(chosen);
            degree[chosen] += 1;
        }
        for &c in &picked {
            in_turn[c] = false;
        }
        adjacency.push(picked);
    }

    // coverage repair: move one edge onto each missing consonant, taking it
    // from the least-shared donatable consonant so the popular core keeps
    // its reach; per-language sizes and the edge total stay intact
    let missing: Vec<usize> = (0..m).filter(|&c| degree[c] == 0).collect();
    let mut cursor = 0usize;
    for c in missing {
        let mut donated = false;
        for step in 0..adjacency.len() {
            let li = (cursor + step) % adjacency.len();
            let donor = adjacency[li]
                .iter()
                .copied()
                .filter(|&cc| degree[cc] >= 2)
                .min_by_key(|&cc| (degree[cc], cc));
            if let Some(donor) = donor {
                adjacency[li].retain(|&cc| cc != donor);
                adjacency[li].push(c);
                degree[donor] -= 1;
                degree[c] += 1;
                cursor = (li + 1) % adjacency.len();
                donated = true;
                break;
            }
        }
        assert!(
            donated,
            "edge total exceeds consonant count, a donor must exist"
        );
    }
    adjacency
}
