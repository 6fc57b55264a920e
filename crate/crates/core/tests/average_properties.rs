mod common;

use std::f64::consts::PI;
use std::io::Write;

use common::{linspace, trapezoid};
use gaussreg::average::{average_sample, w_eval, AveragingMeasure, DualGenerator};
use gaussreg::harness::run_table;
use gaussreg::harness::signal::TestSignal;
use gaussreg::harness::tables::benchmark_measure;
use gaussreg::numerics::CompensatedSum;
use gaussreg::Error;

const DELTA: f64 = PI / 2.0;

fn dual() -> DualGenerator {
    DualGenerator::new(benchmark_measure(), DELTA).unwrap()
}

#[test]
fn frame_bound_bracket() {
    let measure = benchmark_measure();
    let f = TestSignal::univariate(DELTA).unwrap();
    let energy: CompensatedSum = (-10_000..=10_000)
        .map(|j| average_sample(|x| f.eval(x), j, &measure).powi(2))
        .collect();
    let lower = (measure.sigma() * DELTA / 2.0).cos();
    assert!(energy.value() >= lower - 1e-3, "{} < {lower}", energy.value());
    assert!(energy.value() <= 1.0 + 1e-9, "{}", energy.value());
}

#[test]
fn w_range_and_derivatives() {
    let measure = benchmark_measure();
    let sigma = measure.sigma();
    let gamma = (sigma * DELTA / 2.0).cos();
    for xi in linspace(-DELTA, DELTA, 1000) {
        let w = w_eval(xi, &measure, 0).unwrap();
        assert!(gamma <= w && w <= 1.0, "W({xi}) = {w}");
        assert!(w_eval(xi, &measure, 1).unwrap().abs() <= sigma / 2.0);
        assert!(w_eval(xi, &measure, 2).unwrap().abs() <= sigma * sigma / 4.0);
    }
    assert!(w_eval(0.0, &measure, 3).is_err());
}

#[test]
fn dual_spectrum_inverts_w_on_band() {
    let dual = dual();
    for xi in linspace(-DELTA, DELTA, 1000) {
        let product = dual.phi_hat(xi) * w_eval(xi, dual.measure(), 0).unwrap();
        assert!((product - 1.0).abs() <= 1e-14, "xi = {xi}: {product}");
    }
}

#[test]
fn spectrum_norms_below_closed_forms() {
    let dual = dual();
    let edge = dual.support_edge();
    let breaks = [-edge, -DELTA, DELTA, edge];
    let h = 1e-4;
    let step = 1e-3;
    let (mut sup, mut sup2) = (0.0f64, 0.0f64);
    let mut l1 = CompensatedSum::new();
    for xi in linspace(-edge - 0.5, edge + 0.5, 20_001) {
        sup = sup.max(dual.phi_hat(xi).abs());
    }
    let cells = ((2.0 * edge) / step).round() as usize;
    for i in 0..cells {
        let xi = -edge + (i as f64 + 0.5) * step;
        if breaks.iter().any(|b| (xi - b).abs() < 1e-3) {
            continue;
        }
        let second = (dual.phi_hat(xi + h) - 2.0 * dual.phi_hat(xi) + dual.phi_hat(xi - h)) / (h * h);
        sup2 = sup2.max(second.abs());
        l1.add(second.abs() * step);
    }
    assert!(sup <= dual.sup_bound(), "{sup} > {}", dual.sup_bound());
    assert!(
        sup2 <= dual.second_derivative_sup_bound(),
        "{sup2} > {}",
        dual.second_derivative_sup_bound()
    );
    assert!(
        l1.value() <= dual.second_derivative_l1_bound(),
        "{} > {}",
        l1.value(),
        dual.second_derivative_l1_bound()
    );
}

#[test]
fn spectrum_is_c1_at_breakpoints() {
    let dual = dual();
    let below = f64::from_bits(DELTA.to_bits() - 1);
    let above = f64::from_bits(DELTA.to_bits() + 1);
    assert!((dual.phi_hat(below) - dual.phi_hat(above)).abs() <= 1e-13);

    let h = 1e-4;
    let f = |x: f64| dual.phi_hat(x);
    for b in [DELTA, dual.support_edge()] {
        let left = (3.0 * f(b) - 4.0 * f(b - h) + f(b - 2.0 * h)) / (2.0 * h);
        let right = (-3.0 * f(b) + 4.0 * f(b + h) - f(b + 2.0 * h)) / (2.0 * h);
        assert!((left - right).abs() <= 1e-6, "at {b}: {left} vs {right}");
    }
    assert_eq!(dual.phi_hat(dual.support_edge() + 1e-9), 0.0);
}

#[test]
fn phi_matches_trapezoid_oracle() {
    let dual = dual();
    let edge = dual.support_edge();
    for t in [0.0, 0.5, 1.3, 3.0, 7.25] {
        let g = |xi: f64| dual.phi_hat(xi) * (t * xi).cos();
        let oracle = (2.0 / PI).sqrt() * (trapezoid(g, 0.0, DELTA, 50_000) + trapezoid(g, DELTA, edge, 50_000));
        let got = dual.phi(t).unwrap();
        assert!((got - oracle).abs() < 1e-7, "t = {t}: {got} vs {oracle}");
        assert_eq!(dual.phi(-t).unwrap(), got);
    }
}

#[test]
fn point_mass_generator_at_origin() {
    let dual = DualGenerator::new(AveragingMeasure::point_mass(0.25).unwrap(), DELTA).unwrap();
    assert!((dual.phi(0.0).unwrap() - (2.0 * PI).sqrt()).abs() < 1e-9);
}

#[test]
fn phi_decays_quadratically() {
    let dual = dual();
    for t in [5.0f64, 10.0, 20.0] {
        let cap = dual.second_derivative_l1_bound() / ((2.0 * PI).sqrt() * t * t);
        assert!(dual.phi(t).unwrap().abs() <= cap, "t = {t}");
    }
}

#[test]
fn measured_error_stays_below_bound() {
    let table = run_table(10).unwrap();
    for row in &table.rows {
        let (bound, error) = (row.values[0], row.values[1]);
        assert!(error <= bound, "n = {}: {error} > {bound}", row.n);
    }
}

fn load_text(text: &str) -> gaussreg::Result<AveragingMeasure> {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(text.as_bytes()).unwrap();
    AveragingMeasure::load(file.path())
}

#[test]
fn measure_files() {
    let good = r#"{"sigma": 0.25, "atoms": [{"t": 0, "w": 0.5}, {"t": -0.1, "w": 0.25}, {"t": 0.1, "w": 0.25}]}"#;
    assert_eq!(load_text(good).unwrap().atoms().len(), 3);

    let cases = [
        (r#"{"sigma": 0.25, "atoms": [{"t": 0, "w": 0.9}]}"#, "sum"),
        (r#"{"sigma": 0.25, "atoms": [{"t": 0.1, "w": 1.0}]}"#, "symmetric"),
        (
            r#"{"sigma": 0.25, "atoms": [{"t": 0.2, "w": 0.5}, {"t": -0.2, "w": 0.5}]}"#,
            "support",
        ),
        (
            r#"{"sigma": 0.25, "atoms": [{"t": 0, "w": 1.5}, {"t": 0.1, "w": -0.25}, {"t": -0.1, "w": -0.25}]}"#,
            "positive",
        ),
        (r#"{"sigma": -1, "atoms": [{"t": 0, "w": 1}]}"#, "positive"),
        (r#"{"sigma": 0.25}"#, "atoms"),
    ];
    for (text, needle) in cases {
        match load_text(text) {
            Err(Error::InvalidMeasure(msg)) => assert!(msg.contains(needle), "{msg} lacks {needle}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    assert!(matches!(
        AveragingMeasure::load("/nonexistent/measure.json"),
        Err(Error::Io { .. })
    ));
    let wide = AveragingMeasure::point_mass(2.5).unwrap();
    assert!(matches!(DualGenerator::new(wide, 3.0), Err(Error::InvalidMeasure(_))));
}

#[test]
fn concurrent_phi_is_consistent() {
    let points: Vec<f64> = (0..40).map(|i| 0.37 * i as f64 - 3.0).collect();
    let fresh = dual();
    let expected: Vec<f64> = points.iter().map(|&t| fresh.phi(t).unwrap()).collect();
    let shared = dual();
    std::thread::scope(|scope| {
        for k in 0..4 {
            let (shared, points, expected) = (&shared, &points, &expected);
            scope.spawn(move || {
                for i in (0..points.len()).map(|i| (i + 7 * k) % points.len()) {
                    assert_eq!(shared.phi(points[i]).unwrap().to_bits(), expected[i].to_bits());
                }
            });
        }
    });
    assert!(shared.cached_len() <= points.len());
}
