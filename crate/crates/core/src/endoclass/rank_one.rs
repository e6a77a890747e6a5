//! Rank-one unipotents `u = id + l h^T` with `h^T l = 0`.
//!
//! Such a `u` fixes the hyperplane `H = ker h^T` pointwise and moves every
//! vector along the line `L = span(l)`, with `L ⊂ H`.

use std::fmt;

use crate::error::{domain, Result};
use crate::matrices::{kernel, RatMatrix, Subspace};
use crate::scalars::{Rational, Ring};

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::from_integer(0.into()), |acc, (x, y)| acc + x * y)
}

/// `id + l h^T`, for nonzero `h`, `l` with `h^T l = 0`.
pub fn rank_one_unipotent(h: &[Rational], l: &[Rational]) -> Result<RatMatrix> {
    if h.len() != l.len() || h.is_empty() {
        return domain("form and vector must have the same positive length");
    }
    if h.iter().all(Ring::is_zero_elem) || l.iter().all(Ring::is_zero_elem) {
        return domain("form and vector must be nonzero");
    }
    if !dot(h, l).is_zero_elem() {
        return domain("the line must lie in the hyperplane");
    }
    let n = h.len();
    let mut u = RatMatrix::identity(n);
    for (i, li) in l.iter().enumerate() {
        for (j, hj) in h.iter().enumerate() {
            let v = u.get(i, j).clone() + li * hj;
            u.set(i, j, v);
        }
    }
    Ok(u)
}

/// Coarse type of a matrix relevant to the commutator table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TransvectionClass {
    Identity,
    /// Rank-one unipotent with the given fixed hyperplane and moving line.
    RankOne { hyperplane: Subspace<Rational>, line: Subspace<Rational> },
    NotUnipotent,
    /// Unipotent of defect rank at least 2.
    HigherRank,
}

impl fmt::Display for TransvectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransvectionClass::Identity => f.write_str("identity"),
            TransvectionClass::RankOne { hyperplane, line } => write!(f, "u(H={hyperplane}, L={line})"),
            TransvectionClass::NotUnipotent => f.write_str("not unipotent"),
            TransvectionClass::HigherRank => f.write_str("unipotent of rank > 1"),
        }
    }
}

pub fn classify_transvection(m: &RatMatrix) -> TransvectionClass {
    if m.is_identity() {
        return TransvectionClass::Identity;
    }
    if !m.is_unipotent() {
        return TransvectionClass::NotUnipotent;
    }
    let n = m.minus_identity();
    if n.rank() != 1 {
        return TransvectionClass::HigherRank;
    }
    let cols: Vec<Vec<Rational>> = (0..n.cols()).map(|j| n.column(j)).collect();
    let sample = m.sample().clone();
    TransvectionClass::RankOne { hyperplane: kernel(&n), line: Subspace::span(n.rows(), &cols, &sample) }
}

/// Predicted class of `[u_{H,L}, u_{H',L'}]`:
///
/// | `L ⊂ H'` | `L' ⊂ H` | commutator      |
/// |----------|----------|-----------------|
/// | yes      | no       | `u_{H',L}`      |
/// | no       | yes      | `u_{H,L'}`      |
/// | yes      | yes      | identity        |
/// | no       | no       | not unipotent   |
pub fn predict_commutator(
    (h, l): (&[Rational], &[Rational]),
    (h2, l2): (&[Rational], &[Rational]),
) -> TransvectionClass {
    let n = h.len();
    let sample = h[0].zero_like();
    let hyperplane = |form: &[Rational]| {
        kernel(&RatMatrix::from_rows(vec![form.to_vec()]).expect("nonempty form"))
    };
    let line = |v: &[Rational]| Subspace::span(n, &[v.to_vec()], &sample);
    let l_in_h2 = dot(h2, l).is_zero_elem();
    let l2_in_h = dot(h, l2).is_zero_elem();
    match (l_in_h2, l2_in_h) {
        (true, false) => TransvectionClass::RankOne { hyperplane: hyperplane(h2), line: line(l) },
        (false, true) => TransvectionClass::RankOne { hyperplane: hyperplane(h), line: line(l2) },
        (true, true) => TransvectionClass::Identity,
        (false, false) => TransvectionClass::NotUnipotent,
    }
}
