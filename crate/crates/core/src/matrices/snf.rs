use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{IntMatrix, Matrix};

/// `U * M * V = S` with `U`, `V` unimodular and `S` diagonal with
/// nonnegative entries `d_1 | d_2 | ...`, zeros last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal of `S`, length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

impl Work {
    fn swap_rows(&mut self, i: usize, k: usize) {
        self.a.swap(i, k);
        self.u.swap(i, k);
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        for row in &mut self.a {
            row.swap(j, k);
        }
        for row in &mut self.v {
            row.swap(j, k);
        }
    }

    /// row_i += f * row_k
    fn add_row(&mut self, i: usize, k: usize, f: &BigInt) {
        for j in 0..self.cols {
            let t = &self.a[k][j] * f;
            self.a[i][j] += t;
        }
        for j in 0..self.rows {
            let t = &self.u[k][j] * f;
            self.u[i][j] += t;
        }
    }

    /// col_j += f * col_k
    fn add_col(&mut self, j: usize, k: usize, f: &BigInt) {
        for i in 0..self.rows {
            let t = &self.a[i][k] * f;
            self.a[i][j] += t;
        }
        for i in 0..self.cols {
            let t = &self.v[i][k] * f;
            self.v[i][j] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -x.clone();
        }
        for x in &mut self.u[i] {
            *x = -x.clone();
        }
    }

    /// Nonzero entry of least absolute value in the trailing block, ties to
    /// the smallest (row, col).
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.abs() < self.a[bi][bj].abs(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let steps = self.rows.min(self.cols);
        let mut t = 0;
        while t < steps {
            let Some((pi, pj)) = self.min_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..self.rows {
                if self.a[i][t].is_zero() {
                    continue;
                }
                let q = -(&self.a[i][t] / &self.a[t][t]);
                self.add_row(i, t, &q);
                if !self.a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..self.cols {
                if self.a[t][j].is_zero() {
                    continue;
                }
                let q = -(&self.a[t][j] / &self.a[t][t]);
                self.add_col(j, t, &q);
                if !self.a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Divisibility: fold a non-multiple back into the pivot row.
            let p = self.a[t][t].clone();
            let offender = (t + 1..self.rows)
                .find(|&i| (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&p)));
            if let Some(i) = offender {
                self.add_row(t, i, &BigInt::one());
                continue;
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
    }
}

/// Smith normal form of an integer matrix.
///
/// Deterministic: each step takes the nonzero entry of least absolute value
/// in the remaining block, ties broken by the smallest (row, col).
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: (0..rows).map(|i| m.row(i).to_vec()).collect(),
        u: identity_rows(rows),
        v: identity_rows(cols),
        rows,
        cols,
    };
    w.run();
    let to_matrix = |r: Vec<Vec<BigInt>>| Matrix::from_rows(r).expect("rectangular");
    SnfResult { u: to_matrix(w.u), s: to_matrix(w.a), v: to_matrix(w.v) }
}

/// Solutions of `M x = 0` over `Z/n`, as the invariant factors (each `> 1`,
/// each dividing the next) of the solution module.
///
/// With `U M V = S`, substituting `x = V y` decouples the system into
/// `s_i y_i = 0 (mod n)`, whose solution set is `Z/gcd(s_i, n)`; columns
/// without a pivot contribute a full `Z/n`.
pub fn fixed_module_mod_n(m: &IntMatrix, n: u64) -> Vec<u64> {
    assert!(n >= 2, "modulus must be at least 2");
    let snf = smith_normal_form(m);
    let nb = BigInt::from(n);
    (0..m.cols())
        .map(|i| {
            let s = if i < m.rows() { snf.s.get(i, i).clone() } else { BigInt::zero() };
            s.gcd(&nb).to_u64().expect("gcd bounded by n")
        })
        .filter(|&g| g > 1)
        .collect()
}
