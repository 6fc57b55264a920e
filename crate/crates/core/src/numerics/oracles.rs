//! Tail inequalities for Gaussians, evaluated numerically.
//!
//! Each oracle returns the pair `(lhs, rhs)` of a strict inequality
//! `lhs < rhs`, with `lhs` computed by brute force and `rhs` in closed form.

use crate::numerics::{CompensatedSum, Quadrature};
use crate::{Error, Result};

/// Terms of a lattice sum below this magnitude are dropped.
pub const LATTICE_CUTOFF: f64 = 1e-300;

/// Gaussian tail `∫_x^∞ e^{-t²} dt` against the Mills-ratio bound
/// `e^{-x²} / 2x`.
///
/// The tail is integrated after the shift `t = x + s`, i.e. as
/// `e^{-x²} ∫_0^∞ e^{-2xs - s²} ds`, so that the absolute tolerance acts on a
/// quantity of order `1 / 2x` rather than on the vanishing tail itself.
pub fn mills_tail_oracle(x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!("mills_tail_oracle needs x > 0, got {x}")));
    }
    // beyond this point e^{-2xs - s²} < e^{-745} underflows
    let upper = -x + (x * x + 745.0).sqrt();
    let scaled = Quadrature::with_abs_tol(1e-14).integrate(|s| (-(2.0 * x + s) * s).exp(), 0.0, upper)?;
    let decay = (-x * x).exp();
    Ok((decay * scaled.value, decay / (2.0 * x)))
}

/// `Σ_{j ∉ (-n, n]} e^{-(t-j)²/r²}` against `r²/(n-1) · e^{-(n-1)²/r²}`.
pub fn discrete_gaussian_tail_oracle(n: u32, r: f64, t: f64) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::domain(format!(
            "discrete_gaussian_tail_oracle needs n >= 2, got {n}"
        )));
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("r must be positive, got {r}")));
    }
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::domain(format!("t must lie in (0, 1), got {t}")));
    }
    let n_i = i64::from(n);
    let term = |j: i64| {
        let d = t - j as f64;
        (-(d * d) / (r * r)).exp()
    };
    let mut acc = CompensatedSum::new();
    // right tail j = n+1, n+2, ...; left tail j = -n, -n-1, ...
    for (start, step) in [(n_i + 1, 1i64), (-n_i, -1)] {
        let mut j = start;
        loop {
            let v = term(j);
            if v < LATTICE_CUTOFF {
                break;
            }
            acc.add(v);
            j += step;
        }
    }
    let m = f64::from(n - 1);
    let rhs = r * r / m * (-(m * m) / (r * r)).exp();
    Ok((acc.value(), rhs))
}
