//! The numerical building blocks: sinc, Hermite polynomials, compensated
//! sums, adaptive quadrature and the tail inequalities.

use std::f64::consts::PI;

use gaussreg::numerics::{
    discrete_gaussian_tail_oracle, gaussian_window, hermite, mills_tail_oracle, sinc, CompensatedSum, Quadrature,
};

fn main() -> gaussreg::Result<()> {
    println!(
        "sinc(0) = {}, sinc(0.5) = {:.15}, sinc(1e-6) = {:.17}",
        sinc(0.0),
        sinc(0.5),
        sinc(1e-6)
    );
    println!("window(3, 2) = {:.15}", gaussian_window(3.0, 2.0));
    for k in 0..=5 {
        println!("H_{k}(1.5) = {}", hermite(k, 1.5)?);
    }

    let mut sum = CompensatedSum::new();
    for v in [1e16, 1.0, -1e16, 1.0] {
        sum.add(v);
    }
    println!("compensated 1e16 + 1 - 1e16 + 1 = {}", sum.value());

    let est = Quadrature::default().integrate(|x| (-x * x).exp(), 0.0, 6.0)?;
    println!(
        "int_0^6 e^(-x^2) = {:.15} (+- {:.1e}), sqrt(pi)/2 = {:.15}",
        est.value,
        est.error,
        PI.sqrt() / 2.0
    );

    let (lhs, rhs) = mills_tail_oracle(2.0)?;
    println!("Gaussian tail at 2: {lhs:.6e} < {rhs:.6e}");
    let (lhs, rhs) = discrete_gaussian_tail_oracle(4, 2.0, 0.5)?;
    println!("lattice tail n = 4, r = 2: {lhs:.6e} < {rhs:.6e}");
    Ok(())
}
