//! Prints the a-priori error bounds against `n`.

use std::f64::consts::PI;

use gaussreg::derivative::{bound_theorem2, DerivativeOrder};
use gaussreg::multivariate::bound_theorem3;
use gaussreg::univariate::{bound_theorem1, degenerate_pi_bound};
use gaussreg::Bandwidth;

fn main() -> gaussreg::Result<()> {
    let delta = PI / 2.0;
    let s = DerivativeOrder::new(1)?;
    let pair = Bandwidth::new(vec![PI / 3.0, delta])?;
    println!(
        "{:>4} {:>12} {:>12} {:>12} {:>12}",
        "n", "values", "f'", "2-d", "delta = pi"
    );
    for n in (4..=32).step_by(4) {
        println!(
            "{n:>4} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e}",
            bound_theorem1(n, delta)?,
            bound_theorem2(s, n, delta)?,
            bound_theorem3(n, &pair)?,
            degenerate_pi_bound(n)?.1
        );
    }
    Ok(())
}
