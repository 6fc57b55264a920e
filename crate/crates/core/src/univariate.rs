//! Regularized and truncated Shannon reconstruction on `(0, 1)`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::numerics::{sinc, CompensatedSum};
use crate::params::RegularizationParams;
use crate::samples::SampleWindow1D;
use crate::{Error, Result};

/// Reconstruction method an [`ErrorReport`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    GaussRegularized,
    Truncated,
}

/// Pointwise errors on an evaluation grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorReport<P = f64> {
    /// `(point, |error|)` pairs in grid order.
    pub grid: Vec<(P, f64)>,
    /// Maximum of the pointwise errors.
    pub max_error: f64,
    /// A-priori bound the errors are compared against, if one applies.
    pub bound: Option<f64>,
    pub method: Option<Method>,
}

impl<P> ErrorReport<P> {
    pub fn from_errors(grid: Vec<(P, f64)>) -> Self {
        let max_error = grid.iter().map(|&(_, e)| e).fold(0.0, f64::max);
        Self {
            grid,
            max_error,
            bound: None,
            method: None,
        }
    }

    pub fn with_bound(mut self, bound: f64) -> Self {
        self.bound = Some(bound);
        self
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = Some(method);
        self
    }

    /// `true` when no bound is attached or the maximum error respects it.
    pub fn within_bound(&self) -> bool {
        self.bound.is_none_or(|b| self.max_error <= b)
    }
}

/// `r = √((n-1)/(π-δ))`, the variance minimizing the value-reconstruction
/// bound.
pub fn optimal_variance(n: u32, delta: f64) -> Result<RegularizationParams> {
    RegularizationParams::theorem1(n, delta)
}

pub(crate) fn check_unit_interval(t: f64) -> Result<()> {
    if t > 0.0 && t < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("evaluation point t = {t} outside (0, 1)")))
    }
}

/// Indices `j ∈ (-n, n]` ordered by increasing `|t - j|` for `t ∈ (0, 1)`.
///
/// Ties (only at `t = 1/2`) put the smaller index first.
pub fn nearest_first(n: u32, t: f64) -> impl Iterator<Item = i64> {
    let left_first = t <= 0.5;
    (0..i64::from(n)).flat_map(move |k| {
        let (a, b) = (-k, 1 + k);
        if left_first {
            [a, b]
        } else {
            [b, a]
        }
    })
}

/// Gaussian-regularized series `Σ_{j=-n+1}^{n} f(j) sinc(t-j) e^{-(t-j)²/2r²}`.
///
/// Terms are accumulated nearest-first with compensated summation.
pub fn reconstruct_gauss(window: &SampleWindow1D, t: f64, params: &RegularizationParams) -> Result<f64> {
    check_unit_interval(t)?;
    let mut acc = CompensatedSum::new();
    for j in nearest_first(window.n(), t) {
        let x = t - j as f64;
        let v = window.get(j).expect("index inside window");
        acc.add(v * sinc(x) * params.window(x * x));
    }
    Ok(acc.value())
}

/// Plain truncated Shannon series `Σ_{j=-n+1}^{n} f(j) sinc(t-j)`.
pub fn reconstruct_truncated(window: &SampleWindow1D, t: f64) -> Result<f64> {
    check_unit_interval(t)?;
    let mut acc = CompensatedSum::new();
    for j in nearest_first(window.n(), t) {
        let v = window.get(j).expect("index inside window");
        acc.add(v * sinc(t - j as f64));
    }
    Ok(acc.value())
}

/// Worst-case error bound over the unit ball of the band-`δ` Paley–Wiener
/// space when `r` is chosen by [`optimal_variance`]:
///
/// `(√(2δ) + 1/√n) · e^{-(π-δ)(n-1)/2} / (π √((π-δ)(n-1)))`.
pub fn bound_theorem1(n: u32, delta: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!("window half-size n = {n} < 2")));
    }
    if !(delta > 0.0 && delta < PI) {
        return Err(Error::domain(format!("band limit {delta} outside (0, π)")));
    }
    let m = f64::from(n - 1);
    let gap = PI - delta;
    Ok(((2.0 * delta).sqrt() + 1.0 / f64::from(n).sqrt()) * (-gap * m / 2.0).exp() / (PI * (gap * m).sqrt()))
}

/// Full-band case `δ = π`: returns `(r, bound)` with `r = n^{9/8}` and the
/// algebraic rate `3 n^{-3/8}`.
pub fn degenerate_pi_bound(n: u32) -> Result<(f64, f64)> {
    let params = RegularizationParams::degenerate_pi(n)?;
    Ok((params.r(), 3.0 / f64::from(n).powf(3.0 / 8.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn optimal_variance_examples() {
        let r = optimal_variance(2, PI / 2.0).unwrap().r();
        assert!((r - (2.0 / PI).sqrt()).abs() < 1e-15);
        assert!((r - 0.7979).abs() < 1e-4);
        let r = optimal_variance(10, PI - 1.0).unwrap().r();
        assert!((r - 3.0).abs() < 1e-14);
        let r = optimal_variance(4, PI / 3.0).unwrap().r();
        assert!((r - (9.0 / (2.0 * PI)).sqrt()).abs() < 1e-15);
        assert!(optimal_variance(1, 1.0).is_err());
        assert!(optimal_variance(5, PI).is_err());
        assert!(optimal_variance(5, 0.0).is_err());
    }

    #[test]
    fn nearest_first_is_sorted_permutation() {
        for &t in &[0.01, 0.3, 0.5, 0.51, 0.99] {
            let order: Vec<i64> = nearest_first(5, t).collect();
            let mut sorted = order.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (-4..=5).collect::<Vec<_>>());
            let d: Vec<f64> = order.iter().map(|&j| (t - j as f64).abs()).collect();
            assert!(d.windows(2).all(|w| w[0] <= w[1]), "t = {t}: {order:?}");
        }
    }

    #[test]
    fn single_spike() {
        let w = SampleWindow1D::from_fn(3, |j| if j == 0 { 1.0 } else { 0.0 }).unwrap();
        let p = RegularizationParams::manual(1.0).unwrap();
        let v = reconstruct_gauss(&w, 0.5, &p).unwrap();
        let expected = 2.0 / PI * (-0.125f64).exp();
        assert!((v - expected).abs() < 1e-15);
        assert!((v - 0.561_815).abs() < 1e-6);
        let zeros = SampleWindow1D::new(3, vec![0.0; 6]).unwrap();
        assert_eq!(reconstruct_gauss(&zeros, 0.2, &p).unwrap(), 0.0);
        assert_eq!(reconstruct_truncated(&zeros, 0.2).unwrap(), 0.0);
    }

    #[test]
    fn endpoints_rejected() {
        let w = SampleWindow1D::new(2, vec![1.0; 4]).unwrap();
        let p = RegularizationParams::manual(1.0).unwrap();
        for t in [0.0, 1.0, -0.2, 1.5, f64::NAN] {
            assert!(reconstruct_gauss(&w, t, &p).is_err());
            assert!(reconstruct_truncated(&w, t).is_err());
        }
    }

    #[test]
    fn bound_examples() {
        let close = |a: f64, b: f64, rel: f64| ((a - b) / b).abs() <= rel;
        assert!(close(bound_theorem1(4, PI / 3.0).unwrap(), 0.0107, 5e-3));
        assert!(close(bound_theorem1(10, PI / 2.0).unwrap(), 1.5055e-4, 5e-4));
        assert!(close(bound_theorem1(30, 2.0 * PI / 3.0).unwrap(), 3.2757e-8, 5e-4));
        assert!(bound_theorem1(1, 1.0).is_err());
        assert!(bound_theorem1(4, PI).is_err());
    }

    #[test]
    fn degenerate_rate() {
        let (r, b) = degenerate_pi_bound(256).unwrap();
        assert_eq!(b, 0.375);
        assert_eq!(r, 512.0);
        let (_, b) = degenerate_pi_bound(2).unwrap();
        assert!((b - 3.0 * 2f64.powf(-0.375)).abs() < 1e-15);
        assert!((b - 2.313_316).abs() < 1e-6);
        let (_, b) = degenerate_pi_bound(1_000_000).unwrap();
        assert!((b - 0.016_870_24).abs() < 1e-8);
    }

    #[test]
    fn report_max_and_bound() {
        let rep = ErrorReport::from_errors(vec![(0.1, 1e-3), (0.2, 4e-3), (0.3, 2e-3)])
            .with_bound(5e-3)
            .with_method(Method::GaussRegularized);
        assert_eq!(rep.max_error, 4e-3);
        assert!(rep.within_bound());
        assert!(!rep.clone().with_bound(1e-3).within_bound());
    }
}
