//! Scalar kernels shared by every reconstruction path.

pub mod oracles;
pub mod quadrature;
pub mod sum;

use std::f64::consts::PI;

use crate::{Error, Result};

pub use oracles::{discrete_gaussian_tail_oracle, mills_tail_oracle};
pub use quadrature::{Estimate, Quadrature};
pub use sum::CompensatedSum;

/// Below this magnitude `sinc` switches to its Taylor polynomial.
const SINC_TAYLOR_RADIUS: f64 = 1e-4;

/// Normalized sinc, `sin(πx) / (πx)`, with the removable singularity at 0
/// resolved.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < SINC_TAYLOR_RADIUS {
        // 1 - y/6 + y²/120 - y³/5040 with y = (πx)²
        let y = (PI * x) * (PI * x);
        1.0 - y / 6.0 * (1.0 - y / 20.0 * (1.0 - y / 42.0))
    } else {
        (PI * x).sin() / (PI * x)
    }
}

/// Gaussian window `exp(-x² / 2r²)`.
#[inline]
pub fn gaussian_window(x: f64, r: f64) -> f64 {
    (-(x * x) / (2.0 * r * r)).exp()
}

/// Physicists' Hermite polynomial `H_k(x)`.
///
/// Evaluated with the three-term recurrence
/// `H_{k+1} = 2x H_k - 2k H_{k-1}`, which agrees with the explicit
/// coefficient sum `k! Σ (-1)^i (2x)^{k-2i} / (i! (k-2i)!)` and avoids its
/// factorials.
pub fn hermite(k: u32, x: f64) -> Result<f64> {
    let mut prev = 1.0;
    if k == 0 {
        return Ok(prev);
    }
    let mut cur = 2.0 * x;
    for m in 1..k {
        let next = 2.0 * x * cur - 2.0 * f64::from(m) * prev;
        prev = cur;
        cur = next;
    }
    if cur.is_finite() {
        Ok(cur)
    } else {
        Err(Error::Overflow("hermite"))
    }
}
