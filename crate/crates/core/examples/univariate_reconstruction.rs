//! Reconstructs `f_δ` on a few points from its integer samples, with and
//! without the Gaussian window.

use std::f64::consts::PI;

use gaussreg::harness::signal::TestSignal;
use gaussreg::samples::SampleWindow1D;
use gaussreg::univariate::{bound_theorem1, optimal_variance, reconstruct_gauss, reconstruct_truncated};

fn main() -> gaussreg::Result<()> {
    let delta = PI / 2.0;
    let f = TestSignal::univariate(delta)?;
    for n in [4, 8, 16] {
        let window = SampleWindow1D::from_fn(n, |j| f.eval(j as f64))?;
        let params = optimal_variance(n, delta)?;
        println!(
            "n = {n}, r = {:.4}, bound = {:.3e}",
            params.r(),
            bound_theorem1(n, delta)?
        );
        for t in [0.1, 0.5, 0.9] {
            let exact = f.eval(t);
            let gauss = reconstruct_gauss(&window, t, &params)?;
            let plain = reconstruct_truncated(&window, t)?;
            println!(
                "  t = {t}: f = {exact:.12}  gauss err = {:.2e}  truncated err = {:.2e}",
                (gauss - exact).abs(),
                (plain - exact).abs()
            );
        }
    }
    Ok(())
}
