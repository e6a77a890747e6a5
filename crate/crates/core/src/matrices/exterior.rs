use super::Matrix;
use crate::error::{Error, Result};
use crate::scalars::Ring;

/// The `r`-element subsets of `{0, .., d-1}` in lexicographic order.
pub fn wedge_basis(d: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(i + 1, d, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, r, &mut Vec::new(), &mut out);
    out
}

/// Matrix of `Λ^r M` on the basis `x_I = x_{i_1} ∧ .. ∧ x_{i_r}` (subsets in
/// lexicographic order); entry `(J, I)` is the minor of `M` on rows `J` and
/// columns `I`.
pub fn exterior_power<T: Ring>(m: &Matrix<T>, r: usize) -> Result<Matrix<T>> {
    if !m.is_square() {
        return Err(Error::Domain("exterior power of a non-square matrix".into()));
    }
    let d = m.rows();
    if r > d {
        return Err(Error::Domain(format!("wedge degree {r} exceeds dimension {d}")));
    }
    if r == 0 {
        return Ok(Matrix::identity_like(1, m.sample()));
    }
    let basis = wedge_basis(d, r);
    let n = basis.len();
    let mut out = Matrix::zero_like(n, n, m.sample());
    for (a, rows) in basis.iter().enumerate() {
        for (b, cols) in basis.iter().enumerate() {
            out.set(a, b, m.submatrix(rows, cols).det_expansion());
        }
    }
    Ok(out)
}
