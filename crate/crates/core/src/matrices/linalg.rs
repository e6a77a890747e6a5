use std::fmt;

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalars::Field;

/// Result of [`Matrix::order`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixOrder {
    Finite(u64),
    Unbounded,
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero_elem()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero_elem() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> T {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = m.sample().one_like();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero_elem()) else {
                return m.sample().zero_like();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = det * pivot.clone();
            let inv = pivot.inverse().expect("nonzero pivot");
            for i in c + 1..n {
                if m.get(i, c).is_zero_elem() {
                    continue;
                }
                let f = m.get(i, c).clone() * inv.clone();
                for j in c..n {
                    let v = m.get(i, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Domain("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let id = self.identity_of();
        let mut aug = Matrix::zero_like(n, 2 * n, self.sample());
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
                aug.set(i, n + j, id.get(i, j).clone());
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Domain("singular matrix".into()));
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(r.submatrix(&rows, &cols))
    }

    /// Group commutator `a b a^-1 b^-1`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let ai = self.inverse()?;
        let bi = other.inverse()?;
        Ok(&(&(self * other) * &ai) * &bi)
    }

    /// Least `k <= cap` with `M^k = id`.
    pub fn order(&self, cap: u64) -> Result<MatrixOrder> {
        if !self.is_square() {
            return Err(Error::Domain("order of a non-square matrix".into()));
        }
        if self.det().is_zero_elem() {
            return Err(Error::Domain("singular matrix has no order".into()));
        }
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Ok(MatrixOrder::Finite(k));
            }
            p = &p * self;
        }
        Ok(MatrixOrder::Unbounded)
    }
}

/// True iff `rank(M - id) = 1`.
pub fn rank_one_defect<T: Field>(m: &Matrix<T>) -> bool {
    m.is_square() && m.minus_identity().rank() == 1
}

/// Right null space of `M`.
pub fn kernel<T: Field>(m: &Matrix<T>) -> Subspace<T> {
    let (r, pivots) = m.rref();
    let n = m.cols;
    let zero = m.sample().zero_like();
    let one = m.sample().one_like();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); n];
        v[free] = one.clone();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(row, free).clone();
        }
        basis.push(v);
    }
    Subspace::span(n, &basis, m.sample())
}

/// Subspace of `T^n` stored by its reduced echelon basis, so that equality
/// of subspaces is equality of values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<T> {
    ambient_dim: usize,
    basis: Vec<Vec<T>>,
    // Needed to build zero/one for the empty subspace.
    sample: T,
}

impl<T: Field> Subspace<T> {
    pub fn span(ambient_dim: usize, vectors: &[Vec<T>], sample: &T) -> Self {
        let sample = sample.zero_like();
        let nonzero: Vec<Vec<T>> =
            vectors.iter().filter(|v| v.iter().any(|x| !x.is_zero_elem())).cloned().collect();
        if nonzero.is_empty() {
            return Subspace { ambient_dim, basis: Vec::new(), sample };
        }
        assert!(nonzero.iter().all(|v| v.len() == ambient_dim), "vector length mismatch");
        let m = Matrix::from_rows(nonzero).expect("nonempty rows");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient_dim, basis, sample }
    }

    pub fn zero(ambient_dim: usize, sample: &T) -> Self {
        Self::span(ambient_dim, &[], sample)
    }

    pub fn whole(ambient_dim: usize, sample: &T) -> Self {
        let id = Matrix::identity_like(ambient_dim, sample);
        let rows: Vec<Vec<T>> = (0..ambient_dim).map(|i| id.row(i).to_vec()).collect();
        Self::span(ambient_dim, &rows, sample)
    }

    /// Span of the standard basis vectors with the given zero-based indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize], sample: &T) -> Self {
        let id = Matrix::identity_like(ambient_dim, sample);
        let rows: Vec<Vec<T>> = indices.iter().map(|&i| id.row(i).to_vec()).collect();
        Self::span(ambient_dim, &rows, sample)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn contains(&self, v: &[T]) -> bool {
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        Self::span(self.ambient_dim, &vs, &self.sample).dim() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Linear forms vanishing on the subspace, as rows of a matrix (`None`
    /// for the whole space).
    pub fn annihilator(&self) -> Option<Matrix<T>> {
        let forms = if self.basis.is_empty() {
            Self::whole(self.ambient_dim, &self.sample).basis
        } else {
            let m = Matrix::from_rows(self.basis.clone()).expect("nonempty basis");
            kernel(&m).basis
        };
        if forms.is_empty() {
            None
        } else {
            Some(Matrix::from_rows(forms).expect("nonempty forms"))
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let blocks: Vec<Matrix<T>> = [self.annihilator(), other.annihilator()].into_iter().flatten().collect();
        if blocks.is_empty() {
            return Self::whole(self.ambient_dim, &self.sample);
        }
        kernel(&Matrix::vstack(&blocks).expect("equal widths"))
    }

    /// Image of the subspace under `m`.
    pub fn image_under(&self, m: &Matrix<T>) -> Self {
        let vs: Vec<Vec<T>> = self.basis.iter().map(|v| m.apply(v)).collect();
        Self::span(m.rows(), &vs, &self.sample)
    }
}

/// Column space of `m`.
pub fn column_space<T: Field>(m: &Matrix<T>) -> Subspace<T> {
    let cols: Vec<Vec<T>> = (0..m.cols()).map(|j| m.column(j)).collect();
    Subspace::span(m.rows(), &cols, m.sample())
}

impl<T: Field> fmt::Display for Subspace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .basis
            .iter()
            .map(|v| format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "span{{{}}}", vs.join(", "))
    }
}
