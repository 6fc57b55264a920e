//! Reconstruction from local averages `∫ f(j + x) dμ(x)` through the dual
//! generator `φ`.

use std::f64::consts::PI;

use gaussreg::average::{average_window, bound_theorem4, reconstruct_avg, AveragingMeasure, DualGenerator};
use gaussreg::harness::signal::TestSignal;

const MEASURE: &str = r#"{"sigma": 0.25, "atoms": [
    {"t": 0.0, "w": 0.6666666666666666},
    {"t": -0.0625, "w": 0.08333333333333333}, {"t": 0.0625, "w": 0.08333333333333333},
    {"t": -0.125, "w": 0.08333333333333333}, {"t": 0.125, "w": 0.08333333333333333}
]}"#;

fn main() -> gaussreg::Result<()> {
    let delta = PI / 2.0;
    let measure = AveragingMeasure::from_json_str(MEASURE)?;
    let dual = DualGenerator::new(measure, delta)?;
    println!("gamma = {:.6}, sup|phi_hat| <= {:.4}", dual.gamma(), dual.sup_bound());
    for t in [0.0, 0.5, 1.0, 2.0, 5.0] {
        println!("phi({t}) = {:.10}", dual.phi(t)?);
    }

    let f = TestSignal::univariate(delta)?;
    for n in [2, 8, 16] {
        let samples = average_window(|x| f.eval(x), n, dual.measure())?;
        let t = 0.35;
        let value = reconstruct_avg(&samples, t, &dual)?;
        println!(
            "n = {n:>2}: error at t = {t}: {:.3e} (bound {:.3e})",
            (value - f.eval(t)).abs(),
            bound_theorem4(n, &dual)?
        );
    }
    println!("memoized phi values: {}", dual.cached_len());
    Ok(())
}
