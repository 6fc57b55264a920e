//! Recovers `f'` and `f''` from samples of `f` by differentiating the
//! regularized series.

use std::f64::consts::PI;

use gaussreg::derivative::{bound_theorem2, reconstruct_derivative, DerivativeOrder};
use gaussreg::harness::signal::TestSignal;
use gaussreg::samples::SampleWindow1D;
use gaussreg::RegularizationParams;

fn main() -> gaussreg::Result<()> {
    let delta = PI / 3.0;
    let f = TestSignal::univariate(delta)?;
    let first = DerivativeOrder::new(1)?;
    let second = DerivativeOrder::new(2)?;
    for n in [5, 11, 21] {
        let window = SampleWindow1D::from_fn(n, |j| f.eval(j as f64))?;
        let params = RegularizationParams::theorem2(n, delta)?;
        let t = 0.3;
        let d1 = reconstruct_derivative(&window, first, t, &params)?;
        let d2 = reconstruct_derivative(&window, second, t, &params)?;
        println!(
            "n = {n:>2}: f'({t}) ~ {d1:.12} (exact {:.12}, bound {:.2e}), f''({t}) ~ {d2:.10}",
            f.derivative(t),
            bound_theorem2(first, n, delta)?
        );
    }
    Ok(())
}
