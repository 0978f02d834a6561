use std::fmt;

use super::eps_poly::EpsPoly;
use super::multi_poly::MultiPoly;
use super::scalar::{format_rational, int, Rational, Ring};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Ring`]. Matrix indices are 0-based; only
/// tensor coordinates follow the 1-based convention.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix<S: Ring = Rational> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Ring> ExactMatrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Self { rows: n, cols: m, entries: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose `c`-th column is `columns[c]`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "column length");
        Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of {}×{}", self.rows, self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<S> {
        self.entries[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> ExactMatrix<T> {
        ExactMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * other.cols + c].add_assign(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for (c, x) in v.iter().enumerate() {
                    acc.add_assign(&self.get(r, c).mul(x));
                }
                acc
            })
            .collect())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!("{:?} vs {:?}", self.shape(), other.shape())));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, S::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, S::sub)
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.mul(s))
    }

    /// Kronecker product; entry `((r1,r2),(c1,c2))` sits at `(r1·rows2 + r2, c1·cols2 + c2)`.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            self.get(r / other.rows, c / other.cols).mul(other.get(r % other.rows, c % other.cols))
        })
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        Self::from_fn(self.rows + other.rows, self.cols + other.cols, |r, c| {
            match (r < self.rows, c < self.cols) {
                (true, true) => self.get(r, c).clone(),
                (false, false) => other.get(r - self.rows, c - self.cols).clone(),
                _ => S::zero(),
            }
        })
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Dimension("hstack row counts differ".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols { self.get(r, c).clone() } else { other.get(r, c - self.cols).clone() }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension("vstack column counts differ".into()));
        }
        Ok(Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows { self.get(r, c).clone() } else { other.get(r - self.rows, c).clone() }
        }))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }
}

impl ExactMatrix<Rational> {
    /// Convenience constructor from integer rows.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn diag(values: &[Rational]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |r, c| if r == c { values[r].clone() } else { Ring::zero() })
    }

    pub fn to_eps(&self) -> ExactMatrix<EpsPoly> {
        self.map(|x| EpsPoly::constant(x.clone()))
    }

    pub fn to_multi(&self) -> ExactMatrix<MultiPoly> {
        self.map(|x| MultiPoly::constant(x.clone()))
    }
}

impl ExactMatrix<EpsPoly> {
    /// Coefficient matrix of `ε^k`.
    pub fn coeff(&self, k: u32) -> ExactMatrix<Rational> {
        self.map(|p| p.coeff(k))
    }

    pub fn eval(&self, at: &Rational) -> ExactMatrix<Rational> {
        self.map(|p| p.eval(at))
    }

    /// Maximal ε-degree over all entries; `None` for the zero matrix.
    pub fn degree(&self) -> Option<u32> {
        self.entries.iter().filter_map(EpsPoly::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(EpsPoly::is_constant)
    }

    pub fn truncate(&self, max_degree: u32) -> Self {
        self.map(|p| p.truncate(max_degree))
    }
}

impl ExactMatrix<MultiPoly> {
    pub fn eval(&self, point: &[Rational]) -> ExactMatrix<Rational> {
        self.map(|p| p.eval(point))
    }

    pub fn arity(&self) -> usize {
        self.entries.iter().map(MultiPoly::arity).max().unwrap_or(0)
    }
}

impl fmt::Display for ExactMatrix<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
