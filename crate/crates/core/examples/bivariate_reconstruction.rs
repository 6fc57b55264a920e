//! Tensor-product reconstruction of `f_{δ₁}(t₁) f_{δ₂}(t₂)` on the unit square.

use std::f64::consts::PI;

use gaussreg::harness::grid::{error_grid, square_grid};
use gaussreg::harness::signal::TestSignal;
use gaussreg::multivariate::{bound_theorem3, reconstruct_gauss_multi};
use gaussreg::samples::SampleWindowND;
use gaussreg::{Bandwidth, RegularizationParams};

fn main() -> gaussreg::Result<()> {
    let (d1, d2) = (PI / 4.0, PI / 2.0);
    let f = TestSignal::bivariate(d1, d2)?;
    let bandwidth = Bandwidth::new(vec![d1, d2])?;
    let grid = square_grid(20);
    for n in [4, 8, 12] {
        let window = SampleWindowND::from_fn(2, n, |j| f.eval(j[0] as f64, j[1] as f64))?;
        let params = RegularizationParams::theorem1(n, bandwidth.max())?;
        let report = error_grid(
            &grid,
            |p| reconstruct_gauss_multi(&window, p, &params),
            |p| f.eval_point(*p),
        )?;
        println!(
            "n = {n:>2}: max error {:.3e} on {} points, bound {:.3e}",
            report.max_error,
            grid.len(),
            bound_theorem3(n, &bandwidth)?
        );
    }
    Ok(())
}
