//! Published values of the ten benchmark tables, kept verbatim as printed.
//!
//! Columns follow [`super::tables::TableSpec::columns`] without the leading
//! `n` and without extra diagnostic columns.

use crate::{Error, Result};

/// A number exactly as printed, with its printed precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Printed(&'static str);

impl Printed {
    pub fn as_str(&self) -> &'static str {
        self.0
    }

    pub fn value(&self) -> f64 {
        self.0.parse().expect("published values are valid floats")
    }

    /// `|computed - printed| / |printed|`.
    pub fn rel_diff(&self, computed: f64) -> f64 {
        let v = self.value();
        (computed - v).abs() / v.abs()
    }

    /// Whether `computed`, rounded to the printed number of digits, reads as
    /// the printed value.
    pub fn rounds_to(&self, computed: f64) -> bool {
        let lower = self.0.to_ascii_lowercase();
        let rounded = match lower.split_once('e') {
            Some((mantissa, _)) => {
                let digits = mantissa.split_once('.').map_or(0, |(_, frac)| frac.len());
                format!("{computed:.digits$e}")
            }
            None => {
                let digits = lower.split_once('.').map_or(0, |(_, frac)| frac.len());
                format!("{computed:.digits$}")
            }
        };
        rounded.parse::<f64>().is_ok_and(|r| r == self.value())
    }
}

/// One published row: `n` and the printed columns.
#[derive(Debug, Clone, PartialEq)]
pub struct PublishedRow {
    pub n: u32,
    pub values: Vec<Printed>,
}

/// Published rows of table `id` (1 to 10).
pub fn published(id: u32) -> Result<Vec<PublishedRow>> {
    fn rows<const K: usize>(table: &[(u32, [&'static str; K])]) -> Vec<PublishedRow> {
        table
            .iter()
            .map(|(n, vals)| PublishedRow {
                n: *n,
                values: vals.iter().map(|s| Printed(s)).collect(),
            })
            .collect()
    }
    Ok(match id {
        1 => rows(TABLE_1),
        2 => rows(TABLE_2),
        3 => rows(TABLE_3),
        4 => rows(TABLE_4),
        5 => rows(TABLE_5),
        6 => rows(TABLE_6),
        7 => rows(TABLE_7),
        8 => rows(TABLE_8),
        9 => rows(TABLE_9),
        10 => rows(TABLE_10),
        _ => return Err(Error::domain(format!("no table {id}; tables are numbered 1 to 10"))),
    })
}

const TABLE_1: &[(u32, [&str; 3])] = &[
    (2, ["0.0331", "0.1663", "0.0509"]),
    (4, ["0.0098", "0.0107", "0.0017"]),
    (6, ["2.2761e-04", "9.7124e-04", "1.0932e-04"]),
    (8, ["0.0024", "9.8103e-05", "8.5248e-06"]),
    (10, ["0.0016", "1.0433e-05", "7.2866e-07"]),
    (12, ["3.0405e-05", "1.1440e-06", "6.8632e-08"]),
    (14, ["7.9461e-04", "1.2799e-07", "6.6728e-09"]),
    (16, ["6.2247e-04", "1.4525e-08", "6.5985e-10"]),
    (18, ["9.1326e-06", "1.6661e-09", "6.8773e-11"]),
    (20, ["3.9146e-04", "1.9267e-10", "7.2196e-12"]),
    (22, ["3.2878e-04", "2.2428e-11", "7.5895e-13"]),
    (24, ["3.8717e-06", "2.6246e-12", "8.3156e-14"]),
    (26, ["2.3225e-04", "3.0851e-13", "9.2149e-15"]),
    (28, ["2.0277e-04", "3.6399e-14", "1.4433e-15"]),
    (30, ["1.9869e-06", "4.3080e-15", "4.4409e-16"]),
];

const TABLE_2: &[(u32, [&str; 3])] = &[
    (2, ["0.0051", "0.2871", "0.0521"]),
    (4, ["9.6902e-04", "0.0316", "0.0030"]),
    (6, ["3.2453e-04", "0.0049", "3.1393e-04"]),
    (8, ["1.4422e-04", "8.3589e-04", "4.2582e-05"]),
    (10, ["7.5827e-05", "1.5055e-04", "6.1037e-06"]),
    (12, ["4.4556e-05", "2.7936e-05", "9.8330e-07"]),
    (14, ["2.8327e-05", "5.2865e-06", "1.5771e-07"]),
    (16, ["1.9097e-05", "1.0144e-06", "2.7379e-08"]),
    (18, ["1.3472e-05", "1.9668e-07", "4.6564e-09"]),
    (20, ["9.8525e-06", "3.8441e-08", "8.4284e-10"]),
    (22, ["7.4200e-06", "7.5615e-09", "1.4863e-10"]),
    (24, ["5.7257e-06", "1.4951e-09", "2.7629e-11"]),
    (26, ["4.5098e-06", "2.9691e-10", "4.9942e-12"]),
    (28, ["3.6149e-06", "5.9176e-11", "9.4547e-13"]),
    (30, ["2.9418e-06", "1.1831e-11", "1.7397e-13"]),
];

const TABLE_3: &[(u32, [&str; 3])] = &[
    (2, ["0.0275", "0.5074", "0.0490"]),
    (4, ["0.0064", "0.0951", "0.0049"]),
    (6, ["4.6943e-04", "0.0249", "9.2523e-04"]),
    (8, ["0.0020", "0.0072", "1.9165e-04"]),
    (10, ["0.0012", "0.0022", "5.0903e-05"]),
    (12, ["6.8750e-05", "6.9045e-04", "1.3828e-05"]),
    (14, ["6.5098e-04", "2.2083e-04", "3.5771e-06"]),
    (16, ["4.6868e-04", "7.1605e-05", "1.0844e-06"]),
    (18, ["2.1160e-05", "2.3456e-05", "3.2408e-07"]),
    (20, ["3.1800e-04", "7.7448e-06", "9.1110e-08"]),
    (22, ["2.5108e-04", "2.5733e-06", "2.9088e-08"]),
    (24, ["9.0566e-06", "8.5940e-07", "9.0859e-09"]),
    (26, ["1.8765e-04", "2.8824e-07", "2.6710e-09"]),
    (28, ["1.5607e-04", "9.7020e-08", "8.7632e-10"]),
    (30, ["4.6691e-06", "3.2757e-08", "2.8080e-10"]),
];

const TABLE_4: &[(u32, [&str; 3])] = &[
    (3, ["0.0064", "6.4845", "0.0238"]),
    (5, ["0.0192", "0.3582", "0.0012"]),
    (7, ["0.0103", "0.0289", "8.6147e-05"]),
    (9, ["2.8936e-04", "0.0027", "7.2344e-06"]),
    (11, ["0.0041", "2.6206e-04", "6.5240e-07"]),
    (13, ["0.0030", "2.6989e-05", "6.1290e-08"]),
    (15, ["6.3904e-05", "2.8410e-06", "6.1368e-09"]),
    (17, ["0.0017", "3.0639e-07", "6.2431e-10"]),
    (19, ["0.0014", "3.3571e-08", "6.4088e-11"]),
    (21, ["2.3438e-05", "3.7246e-09", "6.8596e-12"]),
    (23, ["9.3372e-04", "4.1740e-10", "7.3584e-13"]),
    (25, ["8.0083e-04", "4.7166e-11", "7.8978e-14"]),
    (27, ["1.1058e-05", "5.3670e-12", "9.9087e-15"]),
    (29, ["5.8806e-04", "6.1433e-13", "3.9690e-15"]),
];

const TABLE_5: &[(u32, [&str; 3])] = &[
    (3, ["0.0520", "9.8133", "0.0321"]),
    (5, ["0.0192", "0.9173", "0.0028"]),
    (7, ["0.0099", "0.1254", "3.5204e-04"]),
    (9, ["0.0060", "0.0195", "4.8058e-05"]),
    (11, ["0.0040", "0.0032", "7.6107e-06"]),
    (13, ["0.0029", "5.6310e-04", "1.1889e-06"]),
    (15, ["0.0022", "1.0053e-04", "2.0547e-07"]),
    (17, ["0.0017", "1.8324e-05", "3.4305e-08"]),
    (19, ["0.0014", "3.3930e-06", "6.2129e-09"]),
    (21, ["0.0011", "6.3613e-07", "1.0797e-09"]),
    (23, ["9.2764e-04", "1.2046e-07", "2.0128e-10"]),
    (25, ["7.8531e-04", "2.3001e-08", "3.5939e-11"]),
    (27, ["6.7338e-04", "4.4222e-09", "6.8315e-12"]),
    (29, ["5.8378e-04", "8.5523e-10", "1.2441e-12"]),
];

const TABLE_6: &[(u32, [&str; 3])] = &[
    (3, ["0.0110", "15.7754", "0.0419"]),
    (5, ["0.0159", "2.4966", "0.0071"]),
    (7, ["0.0075", "0.5774", "0.0014"]),
    (9, ["6.3518e-04", "0.1519", "3.2892e-04"]),
    (11, ["0.0033", "0.0427", "9.3779e-05"]),
    (13, ["0.0022", "0.0125", "2.4603e-05"]),
    (15, ["1.4672e-04", "0.0038", "6.7163e-06"]),
    (17, ["0.0014", "0.0012", "2.1156e-06"]),
    (19, ["0.0011", "3.6495e-04", "6.0578e-07"]),
    (21, ["5.4615e-05", "1.1564e-04", "1.7733e-07"]),
    (23, ["7.5824e-04", "3.7009e-05", "5.8201e-08"]),
    (25, ["6.1786e-04", "1.1941e-05", "1.7429e-08"]),
    (27, ["2.5934e-05", "3.8797e-06", "5.3009e-09"]),
    (29, ["4.7534e-04", "1.2678e-06", "1.7783e-09"]),
];

const TABLE_7: &[(u32, [&str; 3])] = &[
    (2, ["0.0316", "0.8434", "0.0378"]),
    (4, ["4.6243e-04", "0.0971", "0.0016"]),
    (6, ["0.0041", "0.0154", "1.5469e-04"]),
    (8, ["1.2792e-04", "0.0027", "2.1566e-05"]),
    (10, ["0.0014", "4.8514e-04", "3.1876e-06"]),
    (12, ["2.1342e-05", "9.0694e-05", "4.8749e-07"]),
    (14, ["7.5353e-04", "1.7264e-05", "7.7783e-08"]),
    (16, ["1.6774e-05", "3.3288e-06", "1.3819e-08"]),
    (18, ["4.4541e-04", "6.4803e-07", "2.4148e-09"]),
    (20, ["4.7213e-06", "1.2710e-07", "4.1835e-10"]),
    (22, ["3.0412e-04", "2.5075e-08", "7.3353e-11"]),
    (24, ["5.0184e-06", "4.9711e-09", "1.3924e-11"]),
    (26, ["2.1432e-04", "9.8948e-10", "2.5773e-12"]),
    (28, ["1.7325e-06", "1.9762E-10", "4.6990e-13"]),
    (30, ["1.6324e-04", "3.9585e-11", "8.5987e-14"]),
];

const TABLE_8: &[(u32, [&str; 3])] = &[
    (2, ["0.0369", "0.4005", "0.0558"]),
    (4, ["0.0114", "0.0269", "0.0020"]),
    (6, ["2.6001e-04", "0.0025", "1.2529e-04"]),
    (8, ["0.0027", "2.5544e-04", "9.7707e-06"]),
    (10, ["0.0018", "2.7429e-05", "8.3512e-07"]),
    (12, ["3.4742e-05", "3.0296e-06", "7.8652e-08"]),
    (14, ["9.1131e-04", "3.4093e-07", "7.6473e-09"]),
    (16, ["7.1478e-04", "3.8875e-08", "7.5614e-10"]),
    (18, ["1.0435e-05", "4.4769e-09", "7.8805e-11"]),
    (20, ["4.4911e-04", "5.1951e-10", "8.2729e-12"]),
    (22, ["3.7744e-04", "6.0653e-11", "8.6942e-13"]),
    (24, ["4.4241e-06", "7.1166e-12", "9.4758e-14"]),
    (26, ["2.6649e-04", "8.3846e-13", "1.0381e-14"]),
    (28, ["2.3275e-04", "9.9129e-14", "1.3323e-15"]),
    (30, ["2.2703e-06", "1.1755e-14", "5.5511e-16"]),
];

const TABLE_9: &[(u32, [&str; 3])] = &[
    (2, ["0.0232", "1.7279", "0.0497"]),
    (4, ["0.0052", "0.3392", "0.0040"]),
    (6, ["3.0946e-04", "0.0909", "6.4739e-04"]),
    (8, ["0.0014", "0.0267", "1.4029e-04"]),
    (10, ["7.9255e-04", "0.0082", "3.5117e-05"]),
    (12, ["8.1831e-05", "0.0026", "9.9855e-06"]),
    (14, ["4.7669e-04", "8.3560e-04", "2.4699e-06"]),
    (16, ["3.4229e-04", "2.7222e-04", "7.8074e-07"]),
    (18, ["1.3993e-05", "8.9525e-05", "2.2438e-07"]),
    (20, ["2.1941e-04", "2.9658e-05", "6.5528e-08"]),
    (22, ["1.7337e-04", "9.8829e-06", "2.0155e-08"]),
    (24, ["1.0669e-05", "3.3090e-06", "6.5146e-09"]),
    (26, ["1.3496e-04", "1.1123e-06", "1.8527e-09"]),
    (28, ["1.1215e-04", "3.7516e-07", "6.2749e-10"]),
    (30, ["3.0888e-06", "1.2690e-07", "1.9506e-10"]),
];

const TABLE_10: &[(u32, [&str; 2])] = &[
    (2, ["8.9724", "0.0175"]),
    (4, ["2.8261", "0.0108"]),
    (6, ["1.4378", "0.0104"]),
    (8, ["0.8902", "0.0100"]),
    (10, ["0.6137", "0.0099"]),
    (12, ["0.4529", "0.0099"]),
    (14, ["0.3503", "0.0098"]),
    (16, ["0.2804", "0.0098"]),
];
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        for id in 1..=10 {
            let rows = published(id).unwrap();
            let expected = match id {
                4..=6 => 14,
                10 => 8,
                _ => 15,
            };
            assert_eq!(rows.len(), expected, "table {id}");
        }
        assert!(published(0).is_err());
        assert!(published(11).is_err());
    }

    #[test]
    fn printed_rounding() {
        let p = Printed("0.0017");
        assert!(p.rounds_to(0.0017153));
        assert!(!p.rounds_to(0.00176));
        let q = Printed("2.2761e-04");
        assert!(q.rounds_to(2.27614e-4));
        assert!(!q.rounds_to(2.2763e-4));
        assert!(Printed("1.9762E-10").rounds_to(1.97618e-10));
        assert!(Printed("8.9724").rounds_to(8.97236));
        assert!((Printed("0.0100").rel_diff(0.0101) - 0.01).abs() < 1e-12);
    }
}
