//! The two-sinc test signal `f_δ` and its tensor product.

use std::f64::consts::PI;

use crate::numerics::CompensatedSum;
use crate::{Error, Result};

/// Below this distance from a removable singularity the value is taken from
/// its Taylor series.
const VALUE_SERIES_RADIUS: f64 = 1e-4;
/// Enough for full precision when `|δx| < 1`.
const SLOPE_SERIES_TERMS: u32 = 12;

/// `f_δ(t) = (2 sin δt / t + sin δ(t-1) / (t-1)) / √(π(5δ + 4 sin δ))`.
///
/// `f_δ` is band-limited to `[-δ, δ]` and has unit `L²` norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestSignal {
    delta: f64,
    scale: f64,
}

/// `sin(δx)/x`.
fn sin_ratio(delta: f64, x: f64) -> f64 {
    if x.abs() < VALUE_SERIES_RADIUS {
        let y = (delta * x) * (delta * x);
        delta * (1.0 - y / 6.0 * (1.0 - y / 20.0))
    } else {
        (delta * x).sin() / x
    }
}

/// `d/dx sin(δx)/x = (δx cos δx - sin δx) / x²`.
///
/// The closed form cancels badly for small `δx`, so `|δx| < 1` uses the
/// power series `δ² Σ_{k≥1} (-1)^k 2k u^{2k-1} / (2k+1)!` with `u = δx`.
fn sin_ratio_slope(delta: f64, x: f64) -> f64 {
    let u = delta * x;
    if u.abs() < 1.0 {
        let u2 = u * u;
        // term_k = (-1)^k u^{2k-1} / (2k+1)!, weighted by 2k
        let mut term = -u / 6.0;
        let mut acc = 2.0 * term;
        for k in 2..=SLOPE_SERIES_TERMS {
            let kf = f64::from(k);
            term *= -u2 / ((2.0 * kf) * (2.0 * kf + 1.0));
            acc += 2.0 * kf * term;
        }
        delta * delta * acc
    } else {
        (u * u.cos() - u.sin()) / (x * x)
    }
}

impl TestSignal {
    pub fn univariate(delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < PI) {
            return Err(Error::domain(format!("band limit {delta} outside (0, π)")));
        }
        Ok(Self {
            delta,
            scale: 1.0 / (PI * (5.0 * delta + 4.0 * delta.sin())).sqrt(),
        })
    }

    pub fn bivariate(delta1: f64, delta2: f64) -> Result<ProductSignal> {
        if delta1 > delta2 {
            return Err(Error::domain(format!(
                "band limits must be ordered, got ({delta1}, {delta2})"
            )));
        }
        Ok(ProductSignal([Self::univariate(delta1)?, Self::univariate(delta2)?]))
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.scale * (2.0 * sin_ratio(self.delta, t) + sin_ratio(self.delta, t - 1.0))
    }

    /// `f_δ'(t)`.
    pub fn derivative(&self, t: f64) -> f64 {
        self.scale * (2.0 * sin_ratio_slope(self.delta, t) + sin_ratio_slope(self.delta, t - 1.0))
    }

    /// `Σ_{|j| ≤ n} f_δ(j)²`, which tends to `‖f_δ‖² = 1` for `δ ≤ π`.
    pub fn norm_partial_sum(&self, n: u32) -> f64 {
        let n = i64::from(n);
        (-n..=n)
            .map(|j| {
                let v = self.eval(j as f64);
                v * v
            })
            .collect::<CompensatedSum>()
            .value()
    }
}

/// `f(t₁, t₂) = f_{δ₁}(t₁) f_{δ₂}(t₂)` with `δ₁ ≤ δ₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductSignal([TestSignal; 2]);

impl ProductSignal {
    pub fn factors(&self) -> &[TestSignal; 2] {
        &self.0
    }

    pub fn deltas(&self) -> [f64; 2] {
        [self.0[0].delta, self.0[1].delta]
    }

    pub fn eval(&self, t1: f64, t2: f64) -> f64 {
        self.0[0].eval(t1) * self.0[1].eval(t2)
    }

    pub fn eval_point(&self, t: [f64; 2]) -> f64 {
        self.eval(t[0], t[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_at_singularities() {
        let delta = PI / 2.0;
        let f = TestSignal::univariate(delta).unwrap();
        let expected = (PI + 1.0) / (PI * (5.0 * PI / 2.0 + 4.0)).sqrt();
        assert!((f.eval(0.0) - expected).abs() < 1e-15);
        assert!((f.eval(1e-9) - expected).abs() < 1e-8);
        assert!((f.eval(1e-9) - 0.67867).abs() < 5e-6);
        // series branches agree with the closed forms just inside their radius
        for x in [0.9 * VALUE_SERIES_RADIUS, -0.3 * VALUE_SERIES_RADIUS] {
            let direct = (delta * x).sin() / x;
            assert!((sin_ratio(delta, x) - direct).abs() < 1e-15);
        }
        // slope series against the closed form where the latter is still accurate
        for x in [0.6, -0.63, 0.3] {
            let direct = (delta * x * (delta * x).cos() - (delta * x).sin()) / (x * x);
            assert!((sin_ratio_slope(delta, x) - direct).abs() < 1e-15);
        }
        assert_eq!(sin_ratio_slope(delta, 0.0), 0.0);
        let below = sin_ratio_slope(delta, (1.0 - 1e-12) / delta);
        let above = sin_ratio_slope(delta, (1.0 + 1e-12) / delta);
        assert!((below - above).abs() < 1e-11);
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let f = TestSignal::univariate(PI / 3.0).unwrap();
        for t in [-3.2, 0.0005, 0.37, 0.9999, 2.5] {
            let h = 1e-5;
            let fd = (f.eval(t + h) - f.eval(t - h)) / (2.0 * h);
            assert!((fd - f.derivative(t)).abs() < 1e-9, "t = {t}");
        }
    }

    #[test]
    fn unit_norm() {
        for delta in [PI / 3.0, PI / 2.0, 2.0 * PI / 3.0] {
            let f = TestSignal::univariate(delta).unwrap();
            assert!((f.norm_partial_sum(100_000) - 1.0).abs() < 1e-4);
        }
    }

    #[test]
    fn product() {
        let g = TestSignal::bivariate(PI / 3.0, PI / 3.0).unwrap();
        let f = TestSignal::univariate(PI / 3.0).unwrap();
        assert_eq!(g.eval(0.2, 0.7), f.eval(0.2) * f.eval(0.7));
        assert!(TestSignal::bivariate(2.0, 1.0).is_err());
        assert!(TestSignal::univariate(PI).is_err());
    }
}
