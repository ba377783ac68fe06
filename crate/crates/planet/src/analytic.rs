//! Closed-form degree distribution of the growth model.
//!
//! For `t` languages attaching to `N` consonants with mean inventory size
//! `mu` and randomness `epsilon`, the consonant degree distribution tends to
//! a beta-shaped curve in k/t:
//!
//! ```text
//! p_k ~ A * (k/t)^(epsilon - 1) * (1 - k/t)^(N*epsilon/mu - epsilon - 1)
//! ```
//!
//! The constant `A` is fixed by discrete normalization over k = 1..t-1;
//! k = 0 and k = t are excluded because the expression is singular or zero
//! there for the exponent signs that matter in practice. Evaluation happens
//! in log space so small `epsilon` does not underflow.

use crate::dist::{CumulativeDistribution, DegreeDistribution};
use crate::error::{Error, Result};

/// Parameters of the closed-form solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    t: usize,
    n: usize,
    mu: f64,
    epsilon: f64,
}

impl ModelParams {
    /// Requires t >= 2, N >= 1, 0 < mu <= N, epsilon > 0, and finite
    /// exponents.
    pub fn new(t: usize, n: usize, mu: f64, epsilon: f64) -> Result<Self> {
        if t < 2 {
            return Err(Error::InvalidParams {
                message: format!("t must be >= 2, got {t}"),
            });
        }
        if n < 1 {
            return Err(Error::InvalidParams {
                message: "N must be >= 1".into(),
            });
        }
        if !mu.is_finite() || mu <= 0.0 || mu > n as f64 {
            return Err(Error::InvalidParams {
                message: format!("mu must be in (0, N], got {mu}"),
            });
        }
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(Error::InvalidEpsilon { value: epsilon });
        }
        let params = Self { t, n, mu, epsilon };
        if !params.low_exponent().is_finite() || !params.high_exponent().is_finite() {
            return Err(Error::InvalidParams {
                message: "beta exponents are not finite".into(),
            });
        }
        Ok(params)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Exponent on k/t.
    fn low_exponent(&self) -> f64 {
        self.epsilon - 1.0
    }

    /// Exponent on 1 - k/t.
    fn high_exponent(&self) -> f64 {
        self.n as f64 * self.epsilon / self.mu - self.epsilon - 1.0
    }
}

/// Normalized model mass on k = 1..t-1.
pub fn beta_mass(params: &ModelParams) -> Result<DegreeDistribution> {
    let t = params.t as f64;
    let a = params.low_exponent();
    let b = params.high_exponent();

    let ks: Vec<u32> = (1..params.t as u32).collect();
    let mut log_mass = Vec::with_capacity(ks.len());
    for &k in &ks {
        let frac = f64::from(k) / t;
        // 1 - k/t computed as (t-k)/t to keep the tail end accurate
        let co_frac = (t - f64::from(k)) / t;
        let lm = a * frac.ln() + b * co_frac.ln();
        if !lm.is_finite() {
            return Err(Error::NonFiniteMass { k });
        }
        log_mass.push(lm);
    }

    let max = log_mass.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let unnormalized: Vec<f64> = log_mass.iter().map(|&lm| (lm - max).exp()).collect();
    let total: f64 = unnormalized.iter().sum();
    if !total.is_finite() || total <= 0.0 {
        return Err(Error::NonFiniteMass { k: 1 });
    }
    let mass: Vec<f64> = unnormalized.iter().map(|&m| m / total).collect();
    for (&k, &p) in ks.iter().zip(&mass) {
        if !p.is_finite() || p <= 0.0 {
            return Err(Error::NonFiniteMass { k });
        }
    }
    DegreeDistribution::new(ks, mass)
}

/// Tail form of [`beta_mass`]: P_k on k = 1..t-1, with P_1 = 1.
pub fn model_cumulative(params: &ModelParams) -> Result<CumulativeDistribution> {
    Ok(beta_mass(params)?.cumulative())
}
