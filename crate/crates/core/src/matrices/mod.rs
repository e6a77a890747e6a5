//! Dense matrices over the exact scalar domains.
//!
//! Text format: rows separated by `;`, entries by `,`, e.g.
//! `1,0,0;0,1,0;0,0,1`.

mod exterior;
mod linalg;
mod snf;

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;

pub use exterior::{exterior_power, wedge_basis};
pub use linalg::{column_space, kernel, rank_one_defect, MatrixOrder, Subspace};
pub use snf::{fixed_module_mod_n, smith_normal_form, SnfResult};

use crate::error::{Error, Result};
use crate::scalars::{parse_rational, rational_to_integer, QuadScalar, Rational, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<Rational>;
pub type QuadMatrix = Matrix<QuadScalar>;

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Domain(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Domain("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        assert!(rows > 0 && cols > 0);
        Matrix { rows, cols, entries: vec![value; rows * cols] }
    }

    pub fn zero_like(rows: usize, cols: usize, sample: &T) -> Self {
        Self::filled(rows, cols, sample.zero_like())
    }

    pub fn identity_like(n: usize, sample: &T) -> Self {
        let mut m = Self::zero_like(n, n, sample);
        for i in 0..n {
            m.entries[i * n + i] = sample.one_like();
        }
        m
    }

    /// Identity plus `value` at `(i, j)`, zero-based.
    pub fn elementary_like(n: usize, i: usize, j: usize, value: T) -> Self {
        let mut m = Self::identity_like(n, &value);
        m.entries[i * n + j] = m.entries[i * n + j].clone() + value;
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn sample(&self) -> &T {
        &self.entries[0]
    }

    pub fn identity_of(&self) -> Self {
        Self::identity_like(self.rows, self.sample())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.sample().zero_like();
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero_elem() {
                        continue;
                    }
                    acc = acc + a.clone() * other.get(k, j).clone();
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, entries })
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(v[0].zero_like(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|a| a.clone() * s.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    /// `M - id`.
    pub fn minus_identity(&self) -> Self {
        assert!(self.is_square());
        self.sub(&self.identity_of())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one_elem()
                    } else {
                        e.is_zero_elem()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero_elem)
    }

    pub fn pow(&self, mut k: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = self.identity_of();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Determinant by cofactor expansion; usable over any ring, intended for
    /// the small minors of exterior powers.
    pub fn det_expansion(&self) -> T {
        assert!(self.is_square());
        let idx: Vec<usize> = (0..self.cols).collect();
        det_rec(self, 0, &idx)
    }

    /// `(M - id)^n = 0` with `n` the size of `M`.
    pub fn is_unipotent(&self) -> bool {
        self.is_square() && self.minus_identity().pow(self.rows as u64).is_zero()
    }

    /// Submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Matrix { rows: rows.len(), cols: cols.len(), entries }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Self]) -> Result<Self> {
        let first = blocks.first().ok_or_else(|| Error::Domain("nothing to stack".into()))?;
        if blocks.iter().any(|b| b.cols != first.cols) {
            return Err(Error::Domain("column counts differ".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let entries = blocks.iter().flat_map(|b| b.entries.iter().cloned()).collect();
        Matrix::new(rows, first.cols, entries)
    }

    pub fn from_columns(columns: &[Vec<T>]) -> Result<Self> {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|col| col.len() != r) {
            return Err(Error::Domain("ragged columns".into()));
        }
        let mut entries = Vec::with_capacity(r * c);
        for i in 0..r {
            for col in columns {
                entries.push(col[i].clone());
            }
        }
        Matrix::new(r, c, entries)
    }

    /// Renders using the `;`/`,` text format.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Parses the `;`/`,` text format with a per-entry parser.
    pub fn parse_with(s: &str, entry: impl Fn(&str) -> Result<T>) -> Result<Self> {
        let rows = s
            .trim()
            .split(';')
            .map(|row| row.split(',').map(|e| entry(e.trim())).collect::<Result<Vec<T>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

fn det_rec<T: Ring>(m: &Matrix<T>, row: usize, cols: &[usize]) -> T {
    if cols.len() == 1 {
        return m.get(row, cols[0]).clone();
    }
    let mut acc = m.sample().zero_like();
    for (k, &c) in cols.iter().enumerate() {
        let a = m.get(row, c);
        if a.is_zero_elem() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a.clone() * det_rec(m, row + 1, &rest);
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl<T: Ring> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Matrix<BigInt> {
    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &BigInt::from(0))
    }

    /// Integer matrix from small entries, row-major.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(rows, cols, entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::parse_with(s, |e| {
            e.parse::<BigInt>().map_err(|_| Error::Domain(format!("malformed integer {e:?}")))
        })
    }

    pub fn to_rational(&self) -> Matrix<Rational> {
        self.map(|a| Rational::from_integer(a.clone()))
    }

    pub fn det(&self) -> BigInt {
        rational_to_integer(&self.to_rational().det()).expect("integer determinant")
    }

    /// `E_ij` of size `n` (zero-based indices).
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        Self::elementary_like(n, i, j, BigInt::from(1))
    }
}

impl Matrix<Rational> {
    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &Rational::from_integer(BigInt::from(0)))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::parse_with(s, parse_rational)
    }

    /// `Some` when every entry is an integer.
    pub fn to_integer(&self) -> Option<Matrix<BigInt>> {
        let entries = self.entries.iter().map(rational_to_integer).collect::<Option<Vec<_>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, entries })
    }
}

impl Matrix<QuadScalar> {
    pub fn parse(s: &str, radicand: i64) -> Result<Self> {
        Self::parse_with(s, |e| QuadScalar::parse(e, radicand))
    }
}
