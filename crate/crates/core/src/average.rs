//! Reconstruction from local averages.
//!
//! Instead of point samples `f(j)` the reconstruction sees
//! `f̃(j) = ∫ f(j + x) dν(x)` for a symmetric probability measure `ν` on
//! `[-σ/2, σ/2]`. With `W = ν̂` (real and even for symmetric `ν`), any
//! generator whose spectrum satisfies `φ̂ W = 1` on the band reproduces `f`
//! from the shifts `φ(· - j)`. [`DualGenerator`] uses the explicit choice
//!
//! ```text
//! φ̂(ξ) = 1 / W(ξ)                                   |ξ| ≤ δ
//!        ((|ξ| - (2π-δ)) / (2π-2δ))² P(|ξ|)           δ ≤ |ξ| ≤ 2π-δ
//!        0                                           otherwise
//! ```
//!
//! where `P` is the affine function that makes `φ̂` continuously
//! differentiable at `|ξ| = δ`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::path::Path;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::numerics::{CompensatedSum, Quadrature};
use crate::params::RegularizationParams;
use crate::samples::SampleWindow1D;
use crate::univariate::{check_unit_interval, nearest_first};
use crate::{Error, Result};

/// Tolerance for the probability and symmetry checks on a measure.
const MEASURE_TOL: f64 = 1e-12;

/// Default absolute tolerance for the quadrature behind `φ`.
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;

/// Memoization grid for `φ` arguments.
const PHI_KEY_SCALE: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    /// Offset of the point mass.
    pub t: f64,
    /// Its weight.
    pub w: f64,
}

/// A finite symmetric probability measure on `[-σ/2, σ/2]`.
///
/// JSON form: `{"sigma": 0.25, "atoms": [{"t": 0.0, "w": 1.0}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMeasure")]
pub struct AveragingMeasure {
    sigma: f64,
    atoms: Vec<Atom>,
}

#[derive(Deserialize)]
struct RawMeasure {
    sigma: f64,
    atoms: Vec<Atom>,
}

impl TryFrom<RawMeasure> for AveragingMeasure {
    type Error = Error;

    fn try_from(raw: RawMeasure) -> Result<Self> {
        Self::new(raw.sigma, raw.atoms)
    }
}

impl AveragingMeasure {
    pub fn new(sigma: f64, atoms: Vec<Atom>) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::InvalidMeasure(format!(
                "support diameter sigma = {sigma} must be positive"
            )));
        }
        if atoms.is_empty() {
            return Err(Error::InvalidMeasure("no atoms".into()));
        }
        for a in &atoms {
            if !(a.w > 0.0 && a.w.is_finite()) {
                return Err(Error::InvalidMeasure(format!(
                    "weight {} at offset {} is not positive",
                    a.w, a.t
                )));
            }
            if a.t.is_nan() || a.t.abs() > sigma / 2.0 {
                return Err(Error::InvalidMeasure(format!(
                    "offset {} outside the support [-{}, {}]",
                    a.t,
                    sigma / 2.0,
                    sigma / 2.0
                )));
            }
        }
        let total: CompensatedSum = atoms.iter().map(|a| a.w).collect();
        if (total.value() - 1.0).abs() > MEASURE_TOL {
            return Err(Error::InvalidMeasure(format!(
                "weights sum to {}, not 1",
                total.value()
            )));
        }
        for a in &atoms {
            let mirrored: f64 = atoms
                .iter()
                .filter(|b| (b.t + a.t).abs() <= MEASURE_TOL)
                .map(|b| b.w)
                .sum();
            let same: f64 = atoms
                .iter()
                .filter(|b| (b.t - a.t).abs() <= MEASURE_TOL)
                .map(|b| b.w)
                .sum();
            if (mirrored - same).abs() > MEASURE_TOL {
                return Err(Error::InvalidMeasure(format!(
                    "not symmetric: mass {same} at {} but {mirrored} at {}",
                    a.t, -a.t
                )));
            }
        }
        Ok(Self { sigma, atoms })
    }

    /// Dirac mass at the origin, i.e. plain point sampling.
    pub fn point_mass(sigma: f64) -> Result<Self> {
        Self::new(sigma, vec![Atom { t: 0.0, w: 1.0 }])
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        // invariant failures surface as serde errors carrying our message
        serde_json::from_str(text).map_err(|e| Error::InvalidMeasure(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::from_json_str(&text).map_err(|e| match e {
            Error::InvalidMeasure(msg) => Error::InvalidMeasure(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Whether `σδ < π`, which keeps `W` bounded away from zero on the band.
    pub fn admissible(&self, delta: f64) -> bool {
        self.sigma * delta < PI
    }
}

/// `f̃(j) = Σ_k w_k f(j + t_k)`.
pub fn average_sample(signal: impl Fn(f64) -> f64, j: i64, measure: &AveragingMeasure) -> f64 {
    let x = j as f64;
    measure
        .atoms
        .iter()
        .map(|a| a.w * signal(x + a.t))
        .collect::<CompensatedSum>()
        .value()
}

/// Average samples over the whole window `(-n, n]`.
pub fn average_window(signal: impl Fn(f64) -> f64, n: u32, measure: &AveragingMeasure) -> Result<SampleWindow1D> {
    SampleWindow1D::from_fn(n, |j| average_sample(&signal, j, measure))
}

/// `W(ξ) = ∫ e^{itξ} dν(t)` (`order = 0`) and its first two derivatives.
pub fn w_eval(xi: f64, measure: &AveragingMeasure, order: u32) -> Result<f64> {
    let terms = measure.atoms.iter().map(|a| match order {
        0 => a.w * (a.t * xi).cos(),
        1 => -a.w * a.t * (a.t * xi).sin(),
        _ => -a.w * a.t * a.t * (a.t * xi).cos(),
    });
    if order > 2 {
        return Err(Error::domain(format!("W derivative of order {order} not supported")));
    }
    Ok(terms.collect::<CompensatedSum>().value())
}

/// The dual generator `φ` for a measure and band limit, with memoized
/// time-domain values.
#[derive(Debug)]
pub struct DualGenerator {
    measure: AveragingMeasure,
    delta: f64,
    gamma: f64,
    quad_tol: f64,
    /// `W(δ)` and `W'(δ)`, fixed by the measure.
    w_delta: f64,
    dw_delta: f64,
    /// `P(ξ) = slope·ξ + intercept` on `ξ ≥ δ`.
    slope: f64,
    intercept: f64,
    cache: Mutex<HashMap<i64, f64>>,
}

impl DualGenerator {
    pub fn new(measure: AveragingMeasure, delta: f64) -> Result<Self> {
        Self::with_tolerance(measure, delta, DEFAULT_QUAD_TOL)
    }

    pub fn with_tolerance(measure: AveragingMeasure, delta: f64, quad_tol: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < PI) {
            return Err(Error::domain(format!("band limit {delta} outside (0, π)")));
        }
        if !measure.admissible(delta) {
            return Err(Error::InvalidMeasure(format!(
                "sigma·delta = {} is not below π",
                measure.sigma * delta
            )));
        }
        if !(quad_tol > 0.0 && quad_tol.is_finite()) {
            return Err(Error::domain(format!(
                "quadrature tolerance {quad_tol} must be positive"
            )));
        }
        let gamma = (measure.sigma * delta / 2.0).cos();
        let w_delta = w_eval(delta, &measure, 0)?;
        let dw_delta = w_eval(delta, &measure, 1)?;
        let gap = PI - delta;
        let w2 = w_delta * w_delta;
        let slope = 1.0 / (gap * w_delta) - dw_delta / w2;
        let intercept = (PI - 2.0 * delta) / (gap * w_delta) + delta * dw_delta / w2;
        Ok(Self {
            measure,
            delta,
            gamma,
            quad_tol,
            w_delta,
            dw_delta,
            slope,
            intercept,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn measure(&self) -> &AveragingMeasure {
        &self.measure
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// `γ = cos(σδ/2)`, the lower bound of `W` on the band.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn quad_tol(&self) -> f64 {
        self.quad_tol
    }

    pub fn sigma(&self) -> f64 {
        self.measure.sigma
    }

    /// `(W(δ), W'(δ))`.
    pub fn w_at_band_edge(&self) -> (f64, f64) {
        (self.w_delta, self.dw_delta)
    }

    /// Outer edge of the support of `φ̂`, `2π - δ`.
    pub fn support_edge(&self) -> f64 {
        2.0 * PI - self.delta
    }

    fn w(&self, xi: f64) -> f64 {
        self.measure
            .atoms
            .iter()
            .map(|a| a.w * (a.t * xi).cos())
            .collect::<CompensatedSum>()
            .value()
    }

    /// Transition piece on `δ ≤ ξ ≤ 2π - δ`.
    fn transition(&self, xi: f64) -> f64 {
        let edge = self.support_edge();
        let q = (xi - edge) / (edge - self.delta);
        q * q * (self.slope * xi + self.intercept)
    }

    /// `P(|ξ|)`, the affine factor of the transition piece.
    pub fn p(&self, xi: f64) -> f64 {
        self.slope * xi.abs() + self.intercept
    }

    /// Spectrum `φ̂(ξ)`.
    pub fn phi_hat(&self, xi: f64) -> f64 {
        let a = xi.abs();
        if a <= self.delta {
            1.0 / self.w(a)
        } else if a <= self.support_edge() {
            self.transition(a)
        } else {
            0.0
        }
    }

    /// Time-domain generator
    /// `φ(t) = √(2/π) [∫_0^δ cos(tξ)/W(ξ) dξ + ∫_δ^{2π-δ} φ̂(ξ) cos(tξ) dξ]`.
    ///
    /// Values are memoized on `|t|` rounded to `1e-12`.
    pub fn phi(&self, t: f64) -> Result<f64> {
        if !t.is_finite() {
            return Err(Error::domain(format!("phi evaluated at t = {t}")));
        }
        let key = (t.abs() * PHI_KEY_SCALE).round() as i64;
        if let Some(&v) = self.cache.lock().expect("phi cache poisoned").get(&key) {
            return Ok(v);
        }
        let v = self.phi_uncached(t)?;
        self.cache.lock().expect("phi cache poisoned").insert(key, v);
        Ok(v)
    }

    fn phi_uncached(&self, t: f64) -> Result<f64> {
        let quad = Quadrature::with_abs_tol(self.quad_tol);
        let band = quad.integrate(|xi| (t * xi).cos() / self.w(xi), 0.0, self.delta)?;
        let tail = quad.integrate(
            |xi| self.transition(xi) * (t * xi).cos(),
            self.delta,
            self.support_edge(),
        )?;
        Ok((2.0 / PI).sqrt() * (band.value + tail.value))
    }

    pub fn cached_len(&self) -> usize {
        self.cache.lock().expect("phi cache poisoned").len()
    }

    /// Closed-form bound on `sup |φ̂|`: `(3π-δ)/((π-δ)γ) + πσ/γ²`.
    pub fn sup_bound(&self) -> f64 {
        let (d, s, g) = (self.delta, self.sigma(), self.gamma);
        (3.0 * PI - d) / ((PI - d) * g) + PI * s / (g * g)
    }

    /// Closed-form bound on `sup |φ̂''|`: `σ²/γ³ + 8/((π-δ)³γ) + 4σ/((π-δ)²γ²)`.
    pub fn second_derivative_sup_bound(&self) -> f64 {
        let (gap, s, g) = (PI - self.delta, self.sigma(), self.gamma);
        s * s / g.powi(3) + 8.0 / (gap.powi(3) * g) + 4.0 * s / (gap * gap * g * g)
    }

    /// Closed-form bound on `‖φ̂''‖_{L¹}`:
    /// `2δσ²/γ³ + 32/((π-δ)²γ) + 16σ/((π-δ)γ²)`.
    pub fn second_derivative_l1_bound(&self) -> f64 {
        let (d, gap, s, g) = (self.delta, PI - self.delta, self.sigma(), self.gamma);
        2.0 * d * s * s / g.powi(3) + 32.0 / (gap * gap * g) + 16.0 * s / (gap * g * g)
    }

    /// The constant `c` of the `c·n^{-5/3}` error bound.
    pub fn rate_constant(&self) -> f64 {
        let (d, gap, s, g) = (self.delta, PI - self.delta, self.sigma(), self.gamma);
        let rd = d.sqrt();
        (rd + 2.0 * d) * s * s / g.powi(3)
            + (4.0 * s * rd / (gap * gap) + 16.0 * s / gap + PI * s * rd) / (g * g)
            + (8.0 * rd / (gap * gap) + 32.0 / gap + 10.0 * rd) / (gap * g)
    }
}

/// `(1/√(2π)) Σ_{j ∈ (-n, n]} f̃(j) φ(t-j) e^{-(t-j)²/2n^{5/3}}`.
pub fn reconstruct_avg(samples: &SampleWindow1D, t: f64, dual: &DualGenerator) -> Result<f64> {
    check_unit_interval(t)?;
    let params = RegularizationParams::average_sampling(samples.n())?;
    let mut acc = CompensatedSum::new();
    for j in nearest_first(samples.n(), t) {
        let x = t - j as f64;
        let v = samples.get(j).expect("index inside window");
        acc.add(v * dual.phi(x)? * params.window(x * x));
    }
    Ok(acc.value() / (2.0 * PI).sqrt())
}

/// Direct truncation `(1/√(2π)) Σ_{j ∈ (-n, n]} f̃(j) φ(t-j)` without the
/// Gaussian window.
pub fn reconstruct_avg_truncated(samples: &SampleWindow1D, t: f64, dual: &DualGenerator) -> Result<f64> {
    check_unit_interval(t)?;
    let mut acc = CompensatedSum::new();
    for j in nearest_first(samples.n(), t) {
        let v = samples.get(j).expect("index inside window");
        acc.add(v * dual.phi(t - j as f64)?);
    }
    Ok(acc.value() / (2.0 * PI).sqrt())
}

/// `c·n^{-5/3}`, the error bound for [`reconstruct_avg`].
pub fn bound_theorem4(n: u32, dual: &DualGenerator) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!("window half-size n = {n} < 2")));
    }
    Ok(dual.rate_constant() * f64::from(n).powf(-5.0 / 3.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five_atom() -> AveragingMeasure {
        let w = 1.0 / 12.0;
        AveragingMeasure::new(
            0.25,
            vec![
                Atom { t: -0.125, w },
                Atom { t: -0.0625, w },
                Atom { t: 0.0, w: 2.0 / 3.0 },
                Atom { t: 0.0625, w },
                Atom { t: 0.125, w },
            ],
        )
        .unwrap()
    }

    #[test]
    fn measure_invariants() {
        assert!(AveragingMeasure::new(0.0, vec![Atom { t: 0.0, w: 1.0 }]).is_err());
        let err = AveragingMeasure::new(0.2, vec![Atom { t: 0.0, w: 0.9 }]).unwrap_err();
        assert!(err.to_string().contains("sum"));
        let err = AveragingMeasure::new(0.2, vec![Atom { t: 0.05, w: 1.0 }]).unwrap_err();
        assert!(err.to_string().contains("symmetric"));
        let err = AveragingMeasure::new(0.2, vec![Atom { t: 0.2, w: 0.5 }, Atom { t: -0.2, w: 0.5 }]).unwrap_err();
        assert!(err.to_string().contains("support"));
        let err = AveragingMeasure::new(0.2, vec![Atom { t: 0.0, w: 1.5 }, Atom { t: 0.0, w: -0.5 }]).unwrap_err();
        assert!(err.to_string().contains("positive"));
        assert!(five_atom().admissible(PI / 2.0));
        assert!(!AveragingMeasure::point_mass(4.0).unwrap().admissible(PI / 2.0));
    }

    #[test]
    fn measure_json() {
        let m = AveragingMeasure::from_json_str(
            r#"{"sigma": 0.5, "atoms": [{"t": -0.25, "w": 0.5}, {"t": 0.25, "w": 0.5}]}"#,
        )
        .unwrap();
        assert_eq!(m.atoms().len(), 2);
        let back = AveragingMeasure::from_json_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
        let bad = AveragingMeasure::from_json_str(r#"{"sigma": 0.5, "atoms": [{"t": 0.25, "w": 1.0}]}"#);
        assert!(matches!(bad, Err(Error::InvalidMeasure(m)) if m.contains("symmetric")));
        assert!(AveragingMeasure::from_json_str(r#"{"sigma": 0.5}"#).is_err());
    }

    #[test]
    fn averaging() {
        let f = |x: f64| (1.3 * x).sin() + x * x;
        let pm = AveragingMeasure::point_mass(0.1).unwrap();
        assert_eq!(average_sample(f, 3, &pm), f(3.0));
        let m = five_atom();
        assert!((average_sample(|_| 1.0, -4, &m) - 1.0).abs() < 1e-16);
        let j = 2.0;
        let expected = 2.0 / 3.0 * f(j) + (f(j - 0.125) + f(j + 0.125) + f(j - 0.0625) + f(j + 0.0625)) / 12.0;
        assert!((average_sample(f, 2, &m) - expected).abs() < 1e-14);
    }

    #[test]
    fn w_values() {
        let m = five_atom();
        assert!((w_eval(0.0, &m, 0).unwrap() - 1.0).abs() < 1e-16);
        assert_eq!(w_eval(0.0, &m, 1).unwrap(), 0.0);
        let xi = PI / 2.0;
        let expected = 2.0 / 3.0 + (PI / 16.0).cos() / 6.0 + (PI / 32.0).cos() / 6.0;
        assert!((w_eval(xi, &m, 0).unwrap() - expected).abs() < 1e-15);
        assert!(w_eval(xi, &m, 3).is_err());
    }

    #[test]
    fn phi_hat_pieces() {
        let dual = DualGenerator::new(five_atom(), PI / 2.0).unwrap();
        assert!((dual.phi_hat(0.0) - 1.0).abs() < 1e-15);
        assert_eq!(dual.phi_hat(dual.support_edge()), 0.0);
        assert_eq!(dual.phi_hat(7.0), 0.0);
        let (wd, _) = dual.w_at_band_edge();
        assert!((dual.transition(dual.delta()) - 1.0 / wd).abs() < 1e-14);
        assert!((dual.p(dual.delta()) - 1.0 / wd).abs() < 1e-14);
        for xi in [0.3, 1.9, 4.0] {
            assert_eq!(dual.phi_hat(xi), dual.phi_hat(-xi));
        }
    }

    #[test]
    fn dual_rejects_inadmissible() {
        let wide = AveragingMeasure::new(2.5, vec![Atom { t: -1.25, w: 0.5 }, Atom { t: 1.25, w: 0.5 }]).unwrap();
        assert!(matches!(DualGenerator::new(wide, 1.5), Err(Error::InvalidMeasure(_))));
        assert!(DualGenerator::new(five_atom(), PI).is_err());
        assert!(DualGenerator::with_tolerance(five_atom(), 1.0, 0.0).is_err());
    }

    #[test]
    fn phi_point_mass_at_origin() {
        // with W ≡ 1 the transition piece integrates to π - δ, so φ(0) = √(2π)
        for delta in [0.4, PI / 2.0, 2.5] {
            let dual = DualGenerator::new(AveragingMeasure::point_mass(0.1).unwrap(), delta).unwrap();
            assert!((dual.phi(0.0).unwrap() - (2.0 * PI).sqrt()).abs() < 1e-10);
        }
    }

    #[test]
    fn phi_is_memoized_and_even() {
        let dual = DualGenerator::new(five_atom(), PI / 2.0).unwrap();
        let a = dual.phi(3.7).unwrap();
        let b = dual.phi(-3.7).unwrap();
        assert_eq!(a, b);
        assert_eq!(dual.cached_len(), 1);
    }

    #[test]
    fn bound_scaling() {
        let dual = DualGenerator::new(five_atom(), PI / 2.0).unwrap();
        let b2 = bound_theorem4(2, &dual).unwrap();
        assert!(((b2 - 8.9724) / 8.9724).abs() < 5e-4);
        let b8 = bound_theorem4(8, &dual).unwrap();
        assert!(((b8 - 0.8902) / 0.8902).abs() < 5e-4);
        for n in [2u32, 3, 7, 50] {
            let ratio = bound_theorem4(2 * n, &dual).unwrap() / bound_theorem4(n, &dual).unwrap();
            assert!((ratio - 2f64.powf(-5.0 / 3.0)).abs() < 1e-14);
        }
        assert!(bound_theorem4(1, &dual).is_err());
    }

    #[test]
    fn zero_samples() {
        let dual = DualGenerator::new(five_atom(), PI / 2.0).unwrap();
        let zeros = SampleWindow1D::new(3, vec![0.0; 6]).unwrap();
        assert_eq!(reconstruct_avg(&zeros, 0.45, &dual).unwrap(), 0.0);
        assert!(reconstruct_avg(&zeros, 1.0, &dual).is_err());
    }
}
