//! Fitting `epsilon` to an empirical degree distribution.
//!
//! The objective is the logarithmic standard error: the sum over shared
//! abscissas of the squared difference of log ordinates,
//! `LSE = sum (ln y - ln y')^2`. The natural logarithm is fixed; the argmin
//! is the same for any log base because changing base scales every LSE by
//! the same constant.
//!
//! The model curve is evaluated on degrees 1..t-1, so every empirical
//! degree up to t-1 has a model partner. An empirical degree of exactly t
//! (a consonant present in every language) is clamped to the model's top
//! degree t-1 and flagged, since the closed form has no mass at k = t.

use crate::analytic::{beta_mass, model_cumulative, ModelParams};
use crate::dist::{CumulativeDistribution, DegreeDistribution};
use crate::error::{Error, Result};

/// Epsilon grid: eps_min, eps_min + step, ..., up to eps_max.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    eps_min: f64,
    eps_max: f64,
    step: f64,
}

impl GridSpec {
    pub fn new(eps_min: f64, eps_max: f64, step: f64) -> Result<Self> {
        if !(eps_min.is_finite() && eps_max.is_finite() && step.is_finite()) {
            return Err(Error::InvalidParams {
                message: "grid bounds and step must be finite".into(),
            });
        }
        if eps_min <= 0.0 {
            return Err(Error::InvalidParams {
                message: format!("grid minimum must be positive, got {eps_min}"),
            });
        }
        if eps_min > eps_max {
            return Err(Error::InvalidParams {
                message: format!("grid minimum {eps_min} exceeds maximum {eps_max}"),
            });
        }
        if step <= 0.0 {
            return Err(Error::InvalidParams {
                message: format!("grid step must be positive, got {step}"),
            });
        }
        Ok(Self {
            eps_min,
            eps_max,
            step,
        })
    }

    pub fn eps_min(&self) -> f64 {
        self.eps_min
    }

    pub fn eps_max(&self) -> f64 {
        self.eps_max
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Grid points in ascending order. Always contains at least eps_min.
    pub fn points(&self) -> Vec<f64> {
        let slack = self.step * 1e-9;
        let mut points = Vec::new();
        let mut i = 0u64;
        loop {
            let eps = self.eps_min + i as f64 * self.step;
            if eps > self.eps_max + slack {
                break;
            }
            points.push(eps);
            i += 1;
        }
        points
    }
}

impl Default for GridSpec {
    /// 0.005 to 1.0 in steps of 0.005.
    fn default() -> Self {
        Self {
            eps_min: 0.005,
            eps_max: 1.0,
            step: 0.005,
        }
    }
}

/// Which curve the objective compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FitTarget {
    /// Tail distribution P_k (the default; log ordinates are always finite).
    #[default]
    Cdf,
    /// Raw mass function p_k, for sensitivity checks.
    Pdf,
}

impl FitTarget {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "cdf" => Some(FitTarget::Cdf),
            "pdf" => Some(FitTarget::Pdf),
            _ => None,
        }
    }
}

/// Outcome of one grid search.
#[derive(Debug, Clone)]
pub struct FitResult {
    epsilon_star: f64,
    lse_star: f64,
    curve: CumulativeDistribution,
    trace: Vec<(f64, f64)>,
    clamped_top_degree: bool,
}

impl FitResult {
    pub fn epsilon_star(&self) -> f64 {
        self.epsilon_star
    }

    pub fn lse_star(&self) -> f64 {
        self.lse_star
    }

    /// Model tail curve at the fitted epsilon, on degrees 1..t-1.
    pub fn curve(&self) -> &CumulativeDistribution {
        &self.curve
    }

    /// (epsilon, LSE) over the whole grid, ascending in epsilon.
    pub fn trace(&self) -> &[(f64, f64)] {
        &self.trace
    }

    /// True when an empirical degree of t was matched against model degree
    /// t-1.
    pub fn clamped_top_degree(&self) -> bool {
        self.clamped_top_degree
    }
}

/// Sum of squared log differences over abscissas present in both supports.
/// Abscissas present in only one curve are skipped; sharing none is an
/// error.
pub fn lse(a: &CumulativeDistribution, b: &CumulativeDistribution) -> Result<f64> {
    let mut sum = 0.0;
    let mut shared = 0usize;
    let (mut i, mut j) = (0, 0);
    let (sa, sb) = (a.support(), b.support());
    while i < sa.len() && j < sb.len() {
        match sa[i].cmp(&sb[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let d = a.tail()[i].ln() - b.tail()[j].ln();
                sum += d * d;
                shared += 1;
                i += 1;
                j += 1;
            }
        }
    }
    if shared == 0 {
        return Err(Error::IncomparableCurves);
    }
    Ok(sum)
}

/// Squared-log-error of empirical ordinates against model values indexed by
/// degree 1..=top. Degrees above top+1 are skipped; degree top+1 (= t) is
/// clamped onto top.
fn aligned_error(
    emp_support: &[u32],
    emp_values: &[f64],
    model_values: &[f64],
    top: u32,
) -> Option<(f64, bool)> {
    let mut sum = 0.0;
    let mut shared = 0usize;
    let mut clamped = false;
    for (&k, &y) in emp_support.iter().zip(emp_values) {
        let aligned = if k <= top {
            k
        } else if k == top + 1 {
            clamped = true;
            top
        } else {
            continue;
        };
        let y_model = model_values[(aligned - 1) as usize];
        let d = y.ln() - y_model.ln();
        sum += d * d;
        shared += 1;
    }
    (shared > 0).then_some((sum, clamped))
}

fn fit_on_grid(
    emp_support: &[u32],
    emp_values: &[f64],
    t: usize,
    n: usize,
    mu: f64,
    grid: &GridSpec,
    target: FitTarget,
) -> Result<FitResult> {
    let top = (t - 1) as u32;
    let mut trace = Vec::new();
    let mut best: Option<(f64, f64)> = None;
    let mut clamped_any = false;

    for eps in grid.points() {
        let params = ModelParams::new(t, n, mu, eps)?;
        let model = beta_mass(&params)?;
        let model_values: Vec<f64> = match target {
            FitTarget::Cdf => model.cumulative().tail().to_vec(),
            FitTarget::Pdf => model.mass().to_vec(),
        };
        let (err, clamped) = aligned_error(emp_support, emp_values, &model_values, top)
            .ok_or(Error::IncomparableCurves)?;
        clamped_any |= clamped;
        trace.push((eps, err));
        let improves = match best {
            None => true,
            Some((_, best_err)) => err < best_err,
        };
        if improves {
            best = Some((eps, err));
        }
    }

    let (epsilon_star, lse_star) = best.ok_or(Error::IncomparableCurves)?;
    let curve = model_cumulative(&ModelParams::new(t, n, mu, epsilon_star)?)?;
    Ok(FitResult {
        epsilon_star,
        lse_star,
        curve,
        trace,
        clamped_top_degree: clamped_any,
    })
}

/// Grid search over epsilon against an empirical tail curve. Returns the
/// grid point with least LSE (smallest epsilon on ties) and the full trace.
pub fn fit_epsilon(
    empirical: &CumulativeDistribution,
    t: usize,
    n: usize,
    mu: f64,
    grid: &GridSpec,
) -> Result<FitResult> {
    fit_on_grid(
        empirical.support(),
        empirical.tail(),
        t,
        n,
        mu,
        grid,
        FitTarget::Cdf,
    )
}

/// Like [`fit_epsilon`] but compares raw mass functions.
pub fn fit_epsilon_pdf(
    empirical: &DegreeDistribution,
    t: usize,
    n: usize,
    mu: f64,
    grid: &GridSpec,
) -> Result<FitResult> {
    fit_on_grid(
        empirical.support(),
        empirical.mass(),
        t,
        n,
        mu,
        grid,
        FitTarget::Pdf,
    )
}
