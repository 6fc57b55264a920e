//! Writes sample windows to CSV, reads them back and reconstructs from the
//! file contents.

use std::f64::consts::PI;

use gaussreg::harness::signal::TestSignal;
use gaussreg::samples::{SampleWindow1D, SampleWindowND};
use gaussreg::univariate::{optimal_variance, reconstruct_gauss};

fn main() -> gaussreg::Result<()> {
    let delta = PI / 3.0;
    let f = TestSignal::univariate(delta)?;
    let window = SampleWindow1D::from_fn(6, |j| f.eval(j as f64))?;

    let mut text = Vec::new();
    window.write_csv(&mut text)?;
    println!("{}", String::from_utf8_lossy(&text));

    let back = SampleWindow1D::from_csv_reader(text.as_slice())?;
    let params = optimal_variance(back.n(), delta)?;
    println!("S_6 f(0.5) from file: {:.12}", reconstruct_gauss(&back, 0.5, &params)?);

    let g = TestSignal::bivariate(delta, delta)?;
    let lattice = SampleWindowND::from_fn(2, 2, |j| g.eval(j[0] as f64, j[1] as f64))?;
    let mut text = Vec::new();
    lattice.write_csv_2d(&mut text)?;
    print!("{}", String::from_utf8_lossy(&text));
    Ok(())
}
