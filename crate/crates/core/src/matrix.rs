//! Dense rational matrices stored as integer numerators over one shared
//! positive denominator. Every entry represents `numerator / denom` exactly.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypercube::check_same_dimension;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledIntMatrix {
    rows: usize,
    cols: usize,
    denom: i64,
    entries: Vec<i64>,
}

impl ScaledIntMatrix {
    /// Builds a matrix from row-major numerators.
    pub fn new(rows: usize, cols: usize, denom: i64, entries: Vec<i64>) -> Result<Self> {
        if denom <= 0 {
            return Err(Error::OutOfRange {
                what: "denom",
                value: denom,
                min: 1,
                max: i64::MAX,
            });
        }
        check_same_dimension(entries.len(), rows * cols)?;
        Ok(Self {
            rows,
            cols,
            denom,
            entries,
        })
    }

    /// Builds a matrix from a function of the 1-based position `(i, j)`.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        denom: i64,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Self {
        assert!(denom > 0, "denominator must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            denom,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, 1, |i, j| i64::from(i == j))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Numerator at the 1-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    /// Numerators of the 1-based row `i`.
    pub fn row(&self, i: usize) -> &[i64] {
        assert!((1..=self.rows).contains(&i));
        &self.entries[(i - 1) * self.cols..i * self.cols]
    }

    pub fn numerators(&self) -> &[i64] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.denom, |i, j| self.entry(j, i))
    }

    /// Exact product; the result carries the product of both denominators.
    pub fn mul(&self, other: &ScaledIntMatrix) -> Result<Self> {
        check_same_dimension(self.cols, other.rows)?;
        let mut entries = vec![0i64; self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut entries[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.entries[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let b_row = &other.entries[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            denom: self.denom * other.denom,
            entries,
        })
    }

    /// Row vector times matrix: numerators of `v · A`, over `denom`.
    ///
    /// This is a plain dense product touching every entry.
    pub fn vec_mul(&self, v: &[i64]) -> Result<Vec<i64>> {
        check_same_dimension(v.len(), self.rows)?;
        let mut out = vec![0i64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            let row = &self.entries[k * self.cols..(k + 1) * self.cols];
            for (o, &b) in out.iter_mut().zip(row) {
                *o += a * b;
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (1..=self.rows).all(|i| (1..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// True when the represented rational matrix is the identity.
    pub fn represents_identity(&self) -> bool {
        self.rows == self.cols
            && (1..=self.rows).all(|i| {
                (1..=self.cols).all(|j| {
                    let want = if i == j { self.denom } else { 0 };
                    self.entry(i, j) == want
                })
            })
    }

    /// Same rational matrix, expressed over a different denominator.
    ///
    /// Fails if some entry is not representable exactly.
    pub fn rescale(&self, denom: i64) -> Option<Self> {
        if denom <= 0 {
            return None;
        }
        let entries = self
            .entries
            .iter()
            .map(|&n| {
                let scaled = n * denom;
                (scaled % self.denom == 0).then_some(scaled / self.denom)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            rows: self.rows,
            cols: self.cols,
            denom,
            entries,
        })
    }
}

/// Integer rows with a `denom: d` header; row-major, space-separated.
impl fmt::Display for ScaledIntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "denom: {}", self.denom)?;
        for i in 1..=self.rows {
            let line = self
                .row(i)
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
