//! Finite sample windows over `(-n, n]` and `(-n, n]^d`, and their CSV form.
//!
//! The univariate CSV layout is a `j,value` header followed by one row per
//! integer index; the bivariate layout uses `j1,j2,value`. Parsing is strict:
//! the indices must cover the window exactly once.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

use crate::{Error, Result};

/// Upper limit on the number of materialized lattice values.
pub const MAX_LATTICE_LEN: usize = 1 << 21;

/// Samples `f(j)` for `j = -n+1, ..., n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleWindow1D {
    n: u32,
    values: Vec<f64>,
}

impl SampleWindow1D {
    /// `values[k]` holds `f(k - n + 1)`.
    pub fn new(n: u32, values: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("window half-size n = {n} < 2")));
        }
        if values.len() != 2 * n as usize {
            return Err(Error::Samples(format!(
                "window with n = {n} needs {} values, got {}",
                2 * n,
                values.len()
            )));
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(i64) -> f64) -> Result<Self> {
        let lo = 1 - i64::from(n);
        let values = (lo..=i64::from(n)).map(&mut f).collect();
        Self::new(n, values)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Sample at integer index `j`, if `j ∈ (-n, n]`.
    pub fn get(&self, j: i64) -> Option<f64> {
        let k = j + i64::from(self.n) - 1;
        usize::try_from(k).ok().and_then(|k| self.values.get(k).copied())
    }

    /// `(j, f(j))` in increasing `j`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let lo = 1 - i64::from(self.n);
        self.values.iter().enumerate().map(move |(k, &v)| (lo + k as i64, v))
    }

    /// Same window with every sample mapped through `f`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            n: self.n,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn read_csv(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::from_csv_reader(file).map_err(|e| with_path(e, path))
    }

    pub fn from_csv_reader(reader: impl Read) -> Result<Self> {
        let rows = read_rows(reader, &["j", "value"])?;
        let mut seen = BTreeMap::new();
        for (idx, value) in rows {
            if seen.insert(idx[0], value).is_some() {
                return Err(Error::Samples(format!("duplicate index j = {}", idx[0])));
            }
        }
        let n = infer_half_size(seen.keys().copied(), seen.len())?;
        Self::new(n, seen.into_values().collect())
    }

    pub fn write_csv(&self, writer: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let res = (|| {
            w.write_record(["j", "value"])?;
            for (j, v) in self.iter() {
                w.write_record([j.to_string(), format_full(v)])?;
            }
            w.flush()?;
            Ok::<_, csv::Error>(())
        })();
        res.map_err(|e| Error::Samples(e.to_string()))
    }
}

/// Samples over the lattice `J_n = (-n, n]^d`, stored row-major with the
/// first coordinate varying slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleWindowND {
    d: usize,
    n: u32,
    values: Vec<f64>,
}

impl SampleWindowND {
    pub fn new(d: usize, n: u32, values: Vec<f64>) -> Result<Self> {
        if !(1..=3).contains(&d) {
            return Err(Error::domain(format!("dimension d = {d} outside 1..=3")));
        }
        if n < 2 {
            return Err(Error::domain(format!("window half-size n = {n} < 2")));
        }
        let len = lattice_len(d, n)?;
        if values.len() != len {
            return Err(Error::Samples(format!(
                "lattice (-{n}, {n}]^{d} needs {len} values, got {}",
                values.len()
            )));
        }
        Ok(Self { d, n, values })
    }

    /// Tabulate `f` over the lattice in row-major order.
    pub fn from_fn(d: usize, n: u32, mut f: impl FnMut(&[i64]) -> f64) -> Result<Self> {
        let len = if (1..=3).contains(&d) { lattice_len(d, n)? } else { 0 };
        let side = 2 * i64::from(n);
        let lo = 1 - i64::from(n);
        let mut idx = vec![0i64; d];
        let mut values = Vec::with_capacity(len);
        for flat in 0..len as i64 {
            let mut rem = flat;
            for k in (0..d).rev() {
                idx[k] = lo + rem % side;
                rem /= side;
            }
            values.push(f(&idx));
        }
        Self::new(d, n, values)
    }

    pub fn from_univariate(window: &SampleWindow1D) -> Self {
        Self {
            d: 1,
            n: window.n,
            values: window.values.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, idx: &[i64]) -> Option<f64> {
        if idx.len() != self.d {
            return None;
        }
        let side = 2 * i64::from(self.n);
        let mut flat = 0i64;
        for &j in idx {
            let k = j + i64::from(self.n) - 1;
            if !(0..side).contains(&k) {
                return None;
            }
            flat = flat * side + k;
        }
        self.values.get(flat as usize).copied()
    }

    /// Reads the bivariate `j1,j2,value` layout.
    pub fn read_csv_2d(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::from_csv_reader_2d(file).map_err(|e| with_path(e, path))
    }

    pub fn from_csv_reader_2d(reader: impl Read) -> Result<Self> {
        let rows = read_rows(reader, &["j1", "j2", "value"])?;
        let mut seen = BTreeMap::new();
        for (idx, value) in rows {
            if seen.insert((idx[0], idx[1]), value).is_some() {
                return Err(Error::Samples(format!("duplicate index ({}, {})", idx[0], idx[1])));
            }
        }
        let axis: std::collections::BTreeSet<i64> = seen.keys().map(|k| k.0).collect();
        let n = infer_half_size(axis.iter().copied(), axis.len())?;
        let side = 2 * n as usize;
        if seen.len() != side * side {
            return Err(Error::Samples(format!(
                "lattice (-{n}, {n}]^2 needs {} rows, got {}",
                side * side,
                seen.len()
            )));
        }
        let lo = 1 - i64::from(n);
        let mut values = Vec::with_capacity(side * side);
        for j1 in lo..=i64::from(n) {
            for j2 in lo..=i64::from(n) {
                let v = seen
                    .get(&(j1, j2))
                    .ok_or_else(|| Error::Samples(format!("missing index ({j1}, {j2})")))?;
                values.push(*v);
            }
        }
        Self::new(2, n, values)
    }

    pub fn write_csv_2d(&self, writer: impl Write) -> Result<()> {
        if self.d != 2 {
            return Err(Error::domain(format!(
                "CSV layout is bivariate, window has d = {}",
                self.d
            )));
        }
        let mut w = csv::Writer::from_writer(writer);
        let side = 2 * i64::from(self.n);
        let lo = 1 - i64::from(self.n);
        let res = (|| {
            w.write_record(["j1", "j2", "value"])?;
            for (flat, v) in self.values.iter().enumerate() {
                let (a, b) = (flat as i64 / side, flat as i64 % side);
                w.write_record([(lo + a).to_string(), (lo + b).to_string(), format_full(*v)])?;
            }
            w.flush()?;
            Ok::<_, csv::Error>(())
        })();
        res.map_err(|e| Error::Samples(e.to_string()))
    }
}

fn lattice_len(d: usize, n: u32) -> Result<usize> {
    let side = 2 * n as usize;
    let len = (0..d).try_fold(1usize, |acc, _| acc.checked_mul(side));
    match len {
        Some(len) if len <= MAX_LATTICE_LEN => Ok(len),
        _ => Err(Error::domain(format!(
            "lattice (-{n}, {n}]^{d} exceeds {MAX_LATTICE_LEN} entries"
        ))),
    }
}

fn read_rows(reader: impl Read, header: &[&str]) -> Result<Vec<(Vec<i64>, f64)>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let found = rdr.headers().map_err(|e| Error::Samples(e.to_string()))?.clone();
    if found.iter().ne(header.iter().copied()) {
        return Err(Error::Samples(format!(
            "expected header `{}`, found `{}`",
            header.join(","),
            found.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let k = header.len() - 1;
    let mut rows = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::Samples(e.to_string()))?;
        let row = line + 2;
        let mut idx = Vec::with_capacity(k);
        for field in rec.iter().take(k) {
            let j = field
                .parse::<i64>()
                .map_err(|_| Error::Samples(format!("row {row}: index `{field}` is not an integer")))?;
            idx.push(j);
        }
        let raw = &rec[k];
        let value = raw
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| Error::Samples(format!("row {row}: value `{raw}` is not a finite number")))?;
        rows.push((idx, value));
    }
    Ok(rows)
}

/// Recovers `n` from a sorted, duplicate-free index set that must equal
/// `(-n, n]`.
fn infer_half_size(sorted: impl Iterator<Item = i64>, count: usize) -> Result<u32> {
    let idx: Vec<i64> = sorted.collect();
    let (Some(&lo), Some(&hi)) = (idx.first(), idx.last()) else {
        return Err(Error::Samples("no samples".into()));
    };
    let n = hi;
    if n < 2 || lo != 1 - n {
        return Err(Error::Samples(format!(
            "indices span [{lo}, {hi}], which is not (-n, n] for any n >= 2"
        )));
    }
    if count != 2 * n as usize {
        let missing = (lo..=hi).find(|j| idx.binary_search(j).is_err());
        return Err(Error::Samples(match missing {
            Some(j) => format!("missing index {j} in (-{n}, {n}]"),
            None => format!("expected {} indices, got {count}", 2 * n),
        }));
    }
    u32::try_from(n).map_err(|_| Error::Samples(format!("window half-size {n} too large")))
}

fn with_path(e: Error, path: &Path) -> Error {
    match e {
        Error::Samples(msg) => Error::Samples(format!("{}: {msg}", path.display())),
        other => other,
    }
}

/// Shortest representation that round-trips exactly.
fn format_full(v: f64) -> String {
    format!("{v:?}")
}
