//! Evaluation grids and grid-wise error reports.

use crate::univariate::ErrorReport;
use crate::{Error, Result};

/// Resolution of the univariate grid `{j/100}`.
pub const UNIVARIATE_RESOLUTION: u32 = 100;
/// Resolution of the bivariate grid `{(j₁/50, j₂/50)}`.
pub const BIVARIATE_RESOLUTION: u32 = 50;
/// Resolution of the average-sampling grid `{j/20}`.
pub const AVERAGE_RESOLUTION: u32 = 20;

/// Interior points `j/m`, `1 ≤ j ≤ m-1`.
pub fn unit_grid(m: u32) -> Vec<f64> {
    (1..m).map(|j| f64::from(j) / f64::from(m)).collect()
}

/// `unit_grid(m)²`, first coordinate slowest.
pub fn square_grid(m: u32) -> Vec<[f64; 2]> {
    let axis = unit_grid(m);
    axis.iter().flat_map(|&a| axis.iter().map(move |&b| [a, b])).collect()
}

/// Absolute differences `|reconstructor(p) - reference(p)|` over `grid`.
pub fn error_grid<P: Clone>(
    grid: &[P],
    mut reconstructor: impl FnMut(&P) -> Result<f64>,
    mut reference: impl FnMut(&P) -> f64,
) -> Result<ErrorReport<P>> {
    if grid.is_empty() {
        return Err(Error::domain("empty evaluation grid"));
    }
    let errors = grid
        .iter()
        .map(|p| Ok((p.clone(), (reconstructor(p)? - reference(p)).abs())))
        .collect::<Result<Vec<_>>>()?;
    Ok(ErrorReport::from_errors(errors))
}
