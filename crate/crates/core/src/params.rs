//! Bandwidths and Gaussian regularization parameters.

use std::f64::consts::PI;

use serde::Serialize;

use crate::{Error, Result};

/// Per-dimension band limits `δ_k ∈ (0, π]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bandwidth {
    per_dim: Vec<f64>,
}

impl Bandwidth {
    pub fn new(per_dim: Vec<f64>) -> Result<Self> {
        if per_dim.is_empty() {
            return Err(Error::domain("bandwidth needs at least one dimension"));
        }
        if let Some(bad) = per_dim.iter().find(|&&d| !(d > 0.0 && d <= PI)) {
            return Err(Error::domain(format!("band limit {bad} outside (0, π]")));
        }
        Ok(Self { per_dim })
    }

    pub fn univariate(delta: f64) -> Result<Self> {
        Self::new(vec![delta])
    }

    pub fn dim(&self) -> usize {
        self.per_dim.len()
    }

    pub fn per_dim(&self) -> &[f64] {
        &self.per_dim
    }

    /// Largest band limit, `Δ = max_k δ_k`.
    pub fn max(&self) -> f64 {
        self.per_dim.iter().copied().fold(f64::MIN, f64::max)
    }
}

/// Which selection rule produced the variance parameter `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    /// `r² = (n-1)/(π-δ)`, the optimal choice for function values.
    Theorem1,
    /// `r² = (n-2)/(π-δ)`, the choice for derivative reconstruction.
    Theorem2,
    /// `r = n^{9/8}` for full-band signals (`δ = π`).
    DegeneratePi,
    /// `r = n^{5/6}` for reconstruction from local averages.
    AverageSampling,
    Manual,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Exponent {
    /// `x² / (2r²)`
    Variance { two_r_sq: f64 },
    /// `x² (π-δ) / (2m)`, with `r² = m / (π-δ)` never formed explicitly.
    Combined { band_gap: f64, dof: f64 },
}

/// The Gaussian variance parameter `r` together with the rule that chose it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularizationParams {
    r: f64,
    rule: Rule,
    exponent: Exponent,
}

fn check_open_band(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < PI {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "band limit {delta} outside (0, π); use the degenerate rule for δ = π"
        )))
    }
}

impl RegularizationParams {
    pub fn theorem1(n: u32, delta: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("window half-size n = {n} < 2")));
        }
        check_open_band(delta)?;
        Ok(Self::combined(f64::from(n - 1), delta, Rule::Theorem1))
    }

    pub fn theorem2(n: u32, delta: f64) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain(format!("window half-size n = {n} < 3")));
        }
        check_open_band(delta)?;
        Ok(Self::combined(f64::from(n - 2), delta, Rule::Theorem2))
    }

    pub fn degenerate_pi(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("window half-size n = {n} < 2")));
        }
        let r = f64::from(n).powf(9.0 / 8.0);
        Ok(Self {
            r,
            rule: Rule::DegeneratePi,
            exponent: Exponent::Variance { two_r_sq: 2.0 * r * r },
        })
    }

    /// `r = n^{5/6}`; the window is evaluated as `exp(-x² / 2n^{5/3})`.
    pub fn average_sampling(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("window half-size n = {n} < 2")));
        }
        let nf = f64::from(n);
        Ok(Self {
            r: nf.powf(5.0 / 6.0),
            rule: Rule::AverageSampling,
            exponent: Exponent::Variance {
                two_r_sq: 2.0 * nf.powf(5.0 / 3.0),
            },
        })
    }

    pub fn manual(r: f64) -> Result<Self> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::domain(format!("variance parameter r = {r} must be positive")));
        }
        Ok(Self {
            r,
            rule: Rule::Manual,
            exponent: Exponent::Variance { two_r_sq: 2.0 * r * r },
        })
    }

    fn combined(dof: f64, delta: f64, rule: Rule) -> Self {
        let band_gap = PI - delta;
        Self {
            r: (dof / band_gap).sqrt(),
            rule,
            exponent: Exponent::Combined { band_gap, dof },
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    /// Gaussian window evaluated at squared distance `dist_sq`.
    #[inline]
    pub fn window(&self, dist_sq: f64) -> f64 {
        match self.exponent {
            Exponent::Variance { two_r_sq } => (-dist_sq / two_r_sq).exp(),
            Exponent::Combined { band_gap, dof } => (-dist_sq * band_gap / (2.0 * dof)).exp(),
        }
    }
}
