//! Globally adaptive 7/15-point Gauss–Kronrod quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::{Error, Result};

// Kronrod abscissae on [0, 1]; odd positions are the Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Result of an integration: the value and its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Adaptive integrator settings.
///
/// The interval with the largest error estimate is bisected until the summed
/// error falls below `max(abs_tol, rel_tol·|I|)`. A subinterval is never
/// bisected more than `max_depth` times and the partition never holds more
/// than `max_intervals` pieces; if the target is still missed the
/// integration fails with [`Error::Quadrature`].
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
    pub max_intervals: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self {
            abs_tol: 1e-14,
            rel_tol: 0.0,
            max_depth: 20,
            max_intervals: 5000,
        }
    }
}

struct Segment {
    lower: f64,
    upper: f64,
    depth: u32,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

impl Quadrature {
    pub fn with_abs_tol(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            ..Self::default()
        }
    }

    pub fn integrate<F>(&self, f: F, lower: f64, upper: f64) -> Result<Estimate>
    where
        F: Fn(f64) -> f64,
    {
        if lower == upper {
            return Ok(Estimate { value: 0.0, error: 0.0 });
        }
        let (v, e) = kronrod15(&f, lower, upper);
        let mut active = BinaryHeap::new();
        active.push(Segment {
            lower,
            upper,
            depth: 0,
            value: v,
            error: e,
        });
        // Segments at maximum depth; they still contribute to the totals.
        let mut frozen = Vec::new();
        // Running totals, resynchronized before every return.
        let (mut value, mut error) = (v, e);

        loop {
            let target = self.abs_tol.max(self.rel_tol * value.abs());
            if error <= target || active.is_empty() || active.len() + frozen.len() >= self.max_intervals {
                value = 0.0;
                error = 0.0;
                for s in active.iter().chain(&frozen) {
                    value += s.value;
                    error += s.error;
                }
                let target = self.abs_tol.max(self.rel_tol * value.abs());
                if error <= target {
                    return Ok(Estimate { value, error });
                }
                if active.is_empty() || active.len() + frozen.len() >= self.max_intervals {
                    return Err(Error::Quadrature {
                        lower,
                        upper,
                        estimate: value,
                        error,
                        tolerance: target,
                    });
                }
            }
            let worst = active.pop().expect("checked non-empty");
            if worst.depth >= self.max_depth {
                frozen.push(worst);
                continue;
            }
            let mid = 0.5 * (worst.lower + worst.upper);
            value -= worst.value;
            error -= worst.error;
            for (a, b) in [(worst.lower, mid), (mid, worst.upper)] {
                let (v, e) = kronrod15(&f, a, b);
                value += v;
                error += e;
                active.push(Segment {
                    lower: a,
                    upper: b,
                    depth: worst.depth + 1,
                    value: v,
                    error: e,
                });
            }
        }
    }
}

/// One 15-point Kronrod panel with the embedded 7-point Gauss estimate.
/// The raw `|K15 - G7|` difference is rescaled as in QUADPACK.
fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut gauss = fc * WG[3];
    let mut kronrod = fc * WGK[7];
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let result = kronrod * half;
    res_asc *= half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    (result, err)
}
