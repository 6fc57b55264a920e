//! Gaussian-regularized Shannon sampling.
//!
//! Reconstruction of bandlimited functions from finitely many localized
//! samples. The classical Shannon series `Σ f(j) sinc(t - j)` converges
//! slowly once it is truncated; multiplying each kernel by a Gaussian window
//! `exp(-(t - j)² / 2r²)` makes the truncated series converge exponentially
//! in the window half-size `n` when the signal is oversampled (`δ < π`).
//!
//! The crate covers:
//!
//! - [`numerics`]: sinc, Gaussian window, Hermite polynomials, adaptive
//!   Gauss–Kronrod quadrature, compensated summation and the tail-inequality
//!   oracles used by the property tests.
//! - [`univariate`]: regularized and plainly truncated reconstruction of
//!   `f(t)` on `(0, 1)` and the matching a-priori error bound.
//! - [`derivative`]: reconstruction of `f^(s)(t)` through the closed-form
//!   Leibniz/Hermite expansion of the kernel derivative.
//! - [`multivariate`]: tensor-product reconstruction on `(0, 1)^d`.
//! - [`average`]: reconstruction from local averages `f̃(j)` with an explicit
//!   dual generator `φ`.
//! - [`harness`]: test signals, error grids, benchmark tables and emission.
//!
//! ```
//! use gaussreg::univariate::{optimal_variance, reconstruct_gauss};
//! use gaussreg::samples::SampleWindow1D;
//! use gaussreg::harness::signal::TestSignal;
//!
//! let delta = std::f64::consts::FRAC_PI_2;
//! let signal = TestSignal::univariate(delta).unwrap();
//! let window = SampleWindow1D::from_fn(10, |j| signal.eval(j as f64)).unwrap();
//! let params = optimal_variance(10, delta).unwrap();
//! let approx = reconstruct_gauss(&window, 0.37, &params).unwrap();
//! assert!((approx - signal.eval(0.37)).abs() < 1e-5);
//! ```

pub mod average;
pub mod derivative;
pub mod error;
pub mod harness;
pub mod multivariate;
pub mod numerics;
pub mod params;
pub mod samples;
pub mod univariate;

pub use error::{Error, Result};
pub use params::{Bandwidth, RegularizationParams, Rule};
