//! Degree distributions over consonant nodes.
//!
//! Both the mass function `p_k` and the tail form `P_k` (fraction of nodes
//! with degree >= k) are stored sparsely on their observed support, since
//! real supports are gappy. Degree-zero consonants never enter a
//! distribution; only attested nodes are counted.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

const NORM_TOL: f64 = 1e-9;

/// Sparse probability mass over integer degrees k >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    support: Vec<u32>,
    mass: Vec<f64>,
}

impl DegreeDistribution {
    /// `support` must be strictly ascending with k >= 1, every mass must be
    /// positive and finite, and the masses must sum to 1 within 1e-9.
    pub fn new(support: Vec<u32>, mass: Vec<f64>) -> Result<Self> {
        if support.is_empty() || support.len() != mass.len() {
            return Err(Error::InvalidDistribution {
                message: format!(
                    "support has {} points, mass has {}",
                    support.len(),
                    mass.len()
                ),
            });
        }
        if support[0] == 0 {
            return Err(Error::InvalidDistribution {
                message: "degree 0 is not part of a distribution".into(),
            });
        }
        if !support.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidDistribution {
                message: "support must be strictly ascending".into(),
            });
        }
        for (&k, &p) in support.iter().zip(&mass) {
            if !p.is_finite() || p <= 0.0 {
                return Err(Error::NonFiniteMass { k });
            }
        }
        let total: f64 = mass.iter().sum();
        if (total - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidDistribution {
                message: format!("masses sum to {total}, expected 1"),
            });
        }
        Ok(Self { support, mass })
    }

    /// Empirical distribution of a degree map: p_k is the fraction of
    /// attested consonants (degree >= 1) that have degree exactly k.
    /// Degree-zero entries are ignored; an all-zero or empty map is an error.
    pub fn from_degree_counts(degrees: &BTreeMap<usize, u32>) -> Result<Self> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &k in degrees.values() {
            if k >= 1 {
                *counts.entry(k).or_insert(0) += 1;
            }
        }
        let attested: usize = counts.values().sum();
        if attested == 0 {
            return Err(Error::NoAttestedConsonants);
        }
        let support: Vec<u32> = counts.keys().copied().collect();
        let mass: Vec<f64> = counts
            .values()
            .map(|&n| n as f64 / attested as f64)
            .collect();
        Self::new(support, mass)
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn mass_at(&self, k: u32) -> Option<f64> {
        self.support.binary_search(&k).ok().map(|i| self.mass[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.support.iter().copied().zip(self.mass.iter().copied())
    }

    /// Tail form: P_k = sum of p_k' over k' >= k, evaluated on this support.
    pub fn cumulative(&self) -> CumulativeDistribution {
        let mut tail = vec![0.0; self.mass.len()];
        let mut acc = 0.0;
        for i in (0..self.mass.len()).rev() {
            acc += self.mass[i];
            tail[i] = acc;
        }
        CumulativeDistribution {
            support: self.support.clone(),
            tail,
        }
    }
}

/// Tail distribution P_k on an ascending support; P at the smallest degree
/// is 1 and values are non-increasing in k.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulativeDistribution {
    support: Vec<u32>,
    tail: Vec<f64>,
}

impl CumulativeDistribution {
    pub fn new(support: Vec<u32>, tail: Vec<f64>) -> Result<Self> {
        if support.is_empty() || support.len() != tail.len() {
            return Err(Error::InvalidDistribution {
                message: format!(
                    "support has {} points, tail has {}",
                    support.len(),
                    tail.len()
                ),
            });
        }
        if !support.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidDistribution {
                message: "support must be strictly ascending".into(),
            });
        }
        if (tail[0] - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidDistribution {
                message: format!("tail at smallest degree is {}, expected 1", tail[0]),
            });
        }
        for w in tail.windows(2) {
            if w[1] > w[0] + NORM_TOL {
                return Err(Error::InvalidDistribution {
                    message: "tail must be non-increasing".into(),
                });
            }
        }
        for (&k, &p) in support.iter().zip(&tail) {
            if !p.is_finite() || p <= 0.0 || p > 1.0 + NORM_TOL {
                return Err(Error::NonFiniteMass { k });
            }
        }
        Ok(Self { support, tail })
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    pub fn tail(&self) -> &[f64] {
        &self.tail
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn tail_at(&self, k: u32) -> Option<f64> {
        self.support.binary_search(&k).ok().map(|i| self.tail[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.support.iter().copied().zip(self.tail.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_map(pairs: &[(usize, u32)]) -> BTreeMap<usize, u32> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn empirical_hand_count() {
        let d =
            DegreeDistribution::from_degree_counts(&degree_map(&[(0, 1), (1, 1), (2, 2)])).unwrap();
        assert_eq!(d.support(), &[1, 2]);
        assert!((d.mass()[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((d.mass()[1] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn empirical_singleton() {
        let d = DegreeDistribution::from_degree_counts(&degree_map(&[(7, 5)])).unwrap();
        assert_eq!(d.support(), &[5]);
        assert_eq!(d.mass(), &[1.0]);
    }

    #[test]
    fn empirical_empty_is_error() {
        let err = DegreeDistribution::from_degree_counts(&BTreeMap::new()).unwrap_err();
        assert!(matches!(err, Error::NoAttestedConsonants));
        // all-zero map behaves like an empty one
        let err = DegreeDistribution::from_degree_counts(&degree_map(&[(1, 0)])).unwrap_err();
        assert!(matches!(err, Error::NoAttestedConsonants));
    }

    #[test]
    fn cumulate_two_point() {
        let d = DegreeDistribution::new(vec![1, 2], vec![0.5, 0.5]).unwrap();
        let c = d.cumulative();
        assert_eq!(c.support(), &[1, 2]);
        assert_eq!(c.tail(), &[1.0, 0.5]);
    }

    #[test]
    fn cumulate_singleton() {
        let d = DegreeDistribution::new(vec![3], vec![1.0]).unwrap();
        let c = d.cumulative();
        assert_eq!(c.tail(), &[1.0]);
    }

    #[test]
    fn cumulate_matches_double_loop_reference() {
        let support = vec![1, 2, 4, 9, 10];
        let mass = vec![0.1, 0.3, 0.25, 0.2, 0.15];
        let d = DegreeDistribution::new(support.clone(), mass.clone()).unwrap();
        let c = d.cumulative();
        for (i, &k) in support.iter().enumerate() {
            // independent O(n^2) summation
            let reference: f64 = support
                .iter()
                .zip(&mass)
                .filter(|(&kp, _)| kp >= k)
                .map(|(_, &p)| p)
                .sum();
            assert!((c.tail()[i] - reference).abs() < 1e-12);
        }
    }

    #[test]
    fn invalid_distributions_rejected() {
        assert!(DegreeDistribution::new(vec![2, 1], vec![0.5, 0.5]).is_err());
        assert!(DegreeDistribution::new(vec![0, 1], vec![0.5, 0.5]).is_err());
        assert!(DegreeDistribution::new(vec![1, 2], vec![0.5, 0.4]).is_err());
        assert!(DegreeDistribution::new(vec![1, 2], vec![1.1, -0.1]).is_err());
        assert!(CumulativeDistribution::new(vec![1, 2], vec![0.5, 0.5]).is_err());
        assert!(CumulativeDistribution::new(vec![1, 2], vec![1.0, 1.1]).is_err());
    }
}
