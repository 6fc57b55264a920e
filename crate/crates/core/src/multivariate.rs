//! Tensor-product regularized reconstruction on the open unit cube.

use std::f64::consts::PI;

use crate::numerics::{sinc, CompensatedSum};
use crate::params::{Bandwidth, RegularizationParams};
use crate::samples::SampleWindowND;
use crate::univariate::nearest_first;
use crate::{Error, Result};

/// `Π_k sin(πx_k)/(πx_k)`.
pub fn sinc_multi(x: &[f64], d: usize) -> Result<f64> {
    if x.len() != d {
        return Err(Error::domain(format!(
            "point has {} coordinates, expected {d}",
            x.len()
        )));
    }
    Ok(x.iter().fold(1.0, |acc, &xk| acc * sinc(xk)))
}

struct AxisTerm {
    offset: i64,
    x: f64,
    sinc: f64,
}

/// Per-axis kernel data in nearest-first order.
fn axis_terms(window: &SampleWindowND, t: &[f64]) -> Result<Vec<Vec<AxisTerm>>> {
    if t.len() != window.dim() {
        return Err(Error::domain(format!(
            "point has {} coordinates, window has d = {}",
            t.len(),
            window.dim()
        )));
    }
    if let Some(bad) = t.iter().find(|&&tk| !(tk > 0.0 && tk < 1.0)) {
        return Err(Error::domain(format!("coordinate {bad} outside (0, 1)")));
    }
    let n = window.n();
    Ok(t.iter()
        .map(|&tk| {
            nearest_first(n, tk)
                .map(|j| {
                    let x = tk - j as f64;
                    AxisTerm {
                        offset: j + i64::from(n) - 1,
                        x,
                        sinc: sinc(x),
                    }
                })
                .collect()
        })
        .collect())
}

/// Walks the lattice lexicographically, first axis slowest, each axis in
/// nearest-first order, and sums `f(j) · Π sinc · window(‖t-j‖²)`.
fn lattice_sum(window: &SampleWindowND, axes: &[Vec<AxisTerm>], gauss: Option<&RegularizationParams>) -> f64 {
    let d = axes.len();
    let side = 2 * window.n() as usize;
    let values = window.values();
    let mut pos = vec![0usize; d];
    let mut acc = CompensatedSum::new();
    'outer: loop {
        let mut flat = 0usize;
        let mut prod = 1.0;
        let mut dist_sq = 0.0;
        for (axis, &p) in axes.iter().zip(&pos) {
            let term = &axis[p];
            flat = flat * side + term.offset as usize;
            prod *= term.sinc;
            dist_sq += term.x * term.x;
        }
        let v = values[flat];
        acc.add(match gauss {
            Some(params) => v * prod * params.window(dist_sq),
            None => v * prod,
        });
        for k in (0..d).rev() {
            pos[k] += 1;
            if pos[k] < side {
                continue 'outer;
            }
            pos[k] = 0;
        }
        break;
    }
    acc.value()
}

/// `Σ_{j ∈ J_n} f(j) sinc(t-j) e^{-‖t-j‖²/2r²}` for `t ∈ (0, 1)^d`.
///
/// For `d = 1` the summation order and the arithmetic of each term coincide
/// with [`crate::univariate::reconstruct_gauss`], so both give identical
/// results.
pub fn reconstruct_gauss_multi(window: &SampleWindowND, t: &[f64], params: &RegularizationParams) -> Result<f64> {
    let axes = axis_terms(window, t)?;
    Ok(lattice_sum(window, &axes, Some(params)))
}

/// `Σ_{j ∈ J_n} f(j) sinc(t-j)` for `t ∈ (0, 1)^d`.
pub fn reconstruct_truncated_multi(window: &SampleWindowND, t: &[f64]) -> Result<f64> {
    let axes = axis_terms(window, t)?;
    Ok(lattice_sum(window, &axes, None))
}

/// `(d(2Δ)^{d/2} + √(d/n)) · e^{-(π-Δ)(n-1)/2} / (π √((π-Δ)(n-1)))`, valid for
/// `r² = (n-1)/(π-Δ)` with `Δ = max_k δ_k`.
pub fn bound_theorem3(n: u32, bandwidth: &Bandwidth) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!("window half-size n = {n} < 2")));
    }
    if bandwidth.per_dim().iter().any(|&dk| dk >= PI) {
        return Err(Error::domain("every band limit must be below π"));
    }
    let d = bandwidth.dim() as f64;
    let big = bandwidth.max();
    let m = f64::from(n - 1);
    let gap = PI - big;
    let lead = d * (2.0 * big).powf(d / 2.0) + (d / f64::from(n)).sqrt();
    Ok(lead * (-gap * m / 2.0).exp() / (PI * (gap * m).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::SampleWindow1D;
    use crate::univariate::reconstruct_gauss;

    #[test]
    fn sinc_multi_values() {
        assert_eq!(sinc_multi(&[0.0, 0.0], 2).unwrap(), 1.0);
        assert!((sinc_multi(&[0.5, 0.0], 2).unwrap() - 2.0 / PI).abs() < 1e-16);
        assert!(sinc_multi(&[0.3, 2.0, 0.1], 3).unwrap().abs() < 1e-16);
        assert!(sinc_multi(&[0.3], 2).is_err());
    }

    #[test]
    fn separable_window_factorizes() {
        let g = |j: i64| (0.4 * j as f64).sin() + 0.1;
        let h = |j: i64| 1.0 / (1.0 + (j as f64).powi(2));
        let n = 5;
        let w = SampleWindowND::from_fn(2, n, |j| g(j[0]) * h(j[1])).unwrap();
        let wg = SampleWindow1D::from_fn(n, g).unwrap();
        let wh = SampleWindow1D::from_fn(n, h).unwrap();
        let p = RegularizationParams::manual(1.7).unwrap();
        for t in [[0.2, 0.9], [0.5, 0.5], [0.01, 0.63]] {
            let joint = reconstruct_gauss_multi(&w, &t, &p).unwrap();
            let split = reconstruct_gauss(&wg, t[0], &p).unwrap() * reconstruct_gauss(&wh, t[1], &p).unwrap();
            assert!(((joint - split) / split).abs() < 1e-12);
            let joint = reconstruct_truncated_multi(&w, &t).unwrap();
            let split = crate::univariate::reconstruct_truncated(&wg, t[0]).unwrap()
                * crate::univariate::reconstruct_truncated(&wh, t[1]).unwrap();
            assert!(((joint - split) / split).abs() < 1e-12);
        }
    }

    #[test]
    fn one_dimension_is_bit_identical() {
        let uni = SampleWindow1D::from_fn(7, |j| (j as f64 * 0.7).cos() / (1.0 + j.abs() as f64)).unwrap();
        let multi = SampleWindowND::from_univariate(&uni);
        let p = RegularizationParams::theorem1(7, 1.2).unwrap();
        for k in 1..100 {
            let t = f64::from(k) / 100.0;
            let a = reconstruct_gauss(&uni, t, &p).unwrap();
            let b = reconstruct_gauss_multi(&multi, &[t], &p).unwrap();
            assert_eq!(a.to_bits(), b.to_bits(), "t = {t}");
        }
    }

    #[test]
    fn domain_checks() {
        let w = SampleWindowND::from_fn(2, 2, |_| 1.0).unwrap();
        let p = RegularizationParams::manual(1.0).unwrap();
        assert!(reconstruct_gauss_multi(&w, &[0.5], &p).is_err());
        assert!(reconstruct_gauss_multi(&w, &[0.5, 1.0], &p).is_err());
        assert!(reconstruct_truncated_multi(&w, &[0.0, 0.5]).is_err());
        let zeros = SampleWindowND::new(2, 2, vec![0.0; 16]).unwrap();
        assert_eq!(reconstruct_gauss_multi(&zeros, &[0.3, 0.4], &p).unwrap(), 0.0);
    }

    #[test]
    fn bound_examples() {
        let close = |a: f64, b: f64, rel: f64| ((a - b) / b).abs() <= rel;
        let bw = Bandwidth::new(vec![PI / 4.0, PI / 2.0]).unwrap();
        // printed to two significant figures
        assert!(close(bound_theorem3(8, &bw).unwrap(), 0.0027, 2e-2));
        let bw = Bandwidth::new(vec![PI / 3.0, PI / 3.0]).unwrap();
        assert!(close(bound_theorem3(16, &bw).unwrap(), 3.8875e-8, 5e-4));
        let bw = Bandwidth::new(vec![PI / 2.0, 2.0 * PI / 3.0]).unwrap();
        assert!(close(bound_theorem3(30, &bw).unwrap(), 1.2690e-7, 5e-4));
        assert!(bound_theorem3(4, &Bandwidth::new(vec![PI]).unwrap()).is_err());
    }
}
