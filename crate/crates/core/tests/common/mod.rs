//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

/// Central differences with four levels of Richardson extrapolation, base
/// step `1e-3·max(1, |x|)`.
pub fn richardson_derivative(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    const LEVELS: usize = 4;
    let mut h = 1e-3 * x.abs().max(1.0);
    let mut table = [[0.0; LEVELS]; LEVELS];
    for i in 0..LEVELS {
        table[i][0] = (f(x + h) - f(x - h)) / (2.0 * h);
        let mut factor = 4.0;
        for k in 1..=i {
            table[i][k] = table[i][k - 1] + (table[i][k - 1] - table[i - 1][k - 1]) / (factor - 1.0);
            factor *= 4.0;
        }
        h /= 2.0;
    }
    table[LEVELS - 1][LEVELS - 1]
}

/// `k! Σ_{i ≤ k/2} (-1)^i (2x)^{k-2i} / (i! (k-2i)!)`.
pub fn hermite_factorial_sum(k: u32, x: f64) -> f64 {
    let fact = |m: u32| (1..=m).map(f64::from).product::<f64>();
    let sum: f64 = (0..=k / 2)
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            sign * (2.0 * x).powi((k - 2 * i) as i32) / (fact(i) * fact(k - 2 * i))
        })
        .sum();
    fact(k) * sum
}

/// Composite trapezoid rule with `nodes` equispaced nodes.
pub fn trapezoid(f: impl Fn(f64) -> f64, a: f64, b: f64, nodes: usize) -> f64 {
    let h = (b - a) / (nodes - 1) as f64;
    let inner: f64 = (1..nodes - 1).map(|i| f(a + i as f64 * h)).sum();
    h * (inner + 0.5 * (f(a) + f(b)))
}

/// `sin(πx)/(πx)` evaluated directly, away from zero.
pub fn plain_sinc(x: f64) -> f64 {
    (PI * x).sin() / (PI * x)
}

/// `lo + (hi - lo)·i/(count-1)` for `i < count`.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}
