//! Reconstruction of derivatives `f^(s)` by differentiating the regularized
//! series term by term.
//!
//! The kernel `sinc(x) e^{-x²/2r²}` is differentiated in closed form: the
//! Leibniz rule splits it into derivatives of `sinc`, each a finite sum of
//! `sin(π(x + m/2)) / x^{l+1}` terms, and derivatives of the Gaussian, which
//! are Hermite polynomials times the Gaussian itself.

use std::f64::consts::{PI, SQRT_2};

use crate::numerics::{hermite, CompensatedSum};
use crate::params::RegularizationParams;
use crate::samples::SampleWindow1D;
use crate::univariate::{check_unit_interval, nearest_first};
use crate::{Error, Result};

/// Highest supported derivative order.
pub const MAX_ORDER: u32 = 20;

/// Derivative order `s ∈ [1, 20]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DerivativeOrder(u32);

impl DerivativeOrder {
    pub fn new(s: u32) -> Result<Self> {
        if (1..=MAX_ORDER).contains(&s) {
            Ok(Self(s))
        } else {
            Err(Error::domain(format!("derivative order {s} outside 1..={MAX_ORDER}")))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Whether `n ≥ max{3, s²/(2(π-δ))}`, the range in which the derivative
    /// bound holds.
    pub fn admissible(self, n: u32, delta: f64) -> bool {
        let s = f64::from(self.0);
        n >= 3 && f64::from(n) >= s * s / (2.0 * (PI - delta))
    }
}

/// `sin(πx + kπ/2)` without rounding `kπ/2`.
fn sin_shifted(x: f64, k: u32) -> f64 {
    let a = PI * x;
    match k % 4 {
        0 => a.sin(),
        1 => a.cos(),
        2 => -a.sin(),
        _ => -a.cos(),
    }
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

fn binomial(s: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(s - i) / f64::from(i + 1))
}

/// `m`-th derivative of `sinc` at `x ≠ 0`:
///
/// `m! Σ_{l=0}^{m} π^{m-l-1} sin(π(x + (m-l)/2)) / (m-l)! · (-1)^l / x^{l+1}`.
pub fn sinc_derivative(m: u32, x: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::domain(format!("sinc derivative evaluated at x = {x}")));
    }
    let mut acc = CompensatedSum::new();
    let mut inv_pow = 1.0 / x;
    for l in 0..=m {
        let k = m - l;
        let sign = if l.is_multiple_of(2) { 1.0 } else { -1.0 };
        acc.add(sign * PI.powi(k as i32 - 1) * sin_shifted(x, k) / factorial(k) * inv_pow);
        inv_pow /= x;
    }
    Ok(factorial(m) * acc.value())
}

/// `k`-th derivative of `e^{-x²/2r²}`:
/// `(-1)^k H_k(x/(√2 r)) / (√2 r)^k · e^{-x²/2r²}`.
pub fn gaussian_derivative(k: u32, x: f64, r: f64) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("variance parameter r = {r} must be positive")));
    }
    let scale = SQRT_2 * r;
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let h = hermite(k, x / scale)?;
    Ok(sign * h / scale.powi(k as i32) * (-(x * x) / (2.0 * r * r)).exp())
}

/// `s`-th derivative of the regularized kernel `sinc(x) e^{-x²/2r²}` at
/// `x ≠ 0`, combined by the Leibniz rule.
pub fn kernel_derivative(s: DerivativeOrder, x: f64, r: f64) -> Result<f64> {
    let s = s.get();
    let mut acc = CompensatedSum::new();
    for k in 0..=s {
        acc.add(binomial(s, k) * sinc_derivative(s - k, x)? * gaussian_derivative(k, x, r)?);
    }
    Ok(acc.value())
}

/// `Σ_{j=-n+1}^{n} f(j) · ∂^s[sinc(t-j) e^{-(t-j)²/2r²}]`.
pub fn reconstruct_derivative(
    window: &SampleWindow1D,
    s: DerivativeOrder,
    t: f64,
    params: &RegularizationParams,
) -> Result<f64> {
    check_unit_interval(t)?;
    let r = params.r();
    let mut acc = CompensatedSum::new();
    for j in nearest_first(window.n(), t) {
        let v = window.get(j).expect("index inside window");
        acc.add(v * kernel_derivative(s, t - j as f64, r)?);
    }
    Ok(acc.value())
}

/// Derivative of the plainly truncated series, `Σ f(j) sinc^(s)(t-j)`.
pub fn reconstruct_truncated_derivative(window: &SampleWindow1D, s: DerivativeOrder, t: f64) -> Result<f64> {
    check_unit_interval(t)?;
    let mut acc = CompensatedSum::new();
    for j in nearest_first(window.n(), t) {
        let v = window.get(j).expect("index inside window");
        acc.add(v * sinc_derivative(s.get(), t - j as f64)?);
    }
    Ok(acc.value())
}

/// Bound on the `s`-th derivative error with `r² = (n-2)/(π-δ)`:
///
/// `(√2 δ^{s+1/2}/√(2s+1) + 24(s+2)!/√n) · e^{-(π-δ)(n-2)/2} / (π √((π-δ)(n-2)))`.
pub fn bound_theorem2(s: DerivativeOrder, n: u32, delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < PI) {
        return Err(Error::domain(format!("band limit {delta} outside (0, π)")));
    }
    if !s.admissible(n, delta) {
        return Err(Error::domain(format!(
            "n = {n} below max{{3, s²/(2(π-δ))}} for s = {}, δ = {delta}",
            s.get()
        )));
    }
    let sf = f64::from(s.get());
    let m = f64::from(n - 2);
    let gap = PI - delta;
    let lead =
        SQRT_2 * delta.powf(sf + 0.5) / (2.0 * sf + 1.0).sqrt() + 24.0 * factorial(s.get() + 2) / f64::from(n).sqrt();
    Ok(lead * (-gap * m / 2.0).exp() / (PI * (gap * m).sqrt()))
}
