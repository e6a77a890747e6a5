use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use super::candidate::{CandidateScalar, HomCandidate, ScalarDomain};
use super::word::{GenSymbol, Word};
use crate::error::{domain, Result};
use crate::matrices::{Matrix, QuadMatrix};
use crate::scalars::{rat, QuadScalar, Ring};

/// Radicand of the field carrying [`build_counterexample_rep`].
pub const COUNTEREXAMPLE_RADICAND: i64 = -7;

/// Size of a generated matrix group, or `Exceeded` once it passes the cap.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClosureOrder {
    Finite(u64),
    Exceeded,
}

impl fmt::Display for ClosureOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureOrder::Finite(n) => write!(f, "{n}"),
            ClosureOrder::Exceeded => f.write_str("exceeded"),
        }
    }
}

/// Order of the group generated by `gens`, by breadth-first search over
/// products with generators and their inverses. Matrices hash by their exact
/// entries, so duplicates are detected exactly.
pub fn closure_order_of<T: CandidateScalar>(gens: &[Matrix<T>], cap: u64) -> Result<ClosureOrder> {
    if cap == 0 {
        return domain("closure cap must be at least 1");
    }
    let Some(first) = gens.first() else {
        return domain("closure needs at least one generator");
    };
    let mut steps: Vec<Matrix<T>> = Vec::with_capacity(2 * gens.len());
    for g in gens {
        let inv = g.inverse()?;
        for m in [g.clone(), inv] {
            if !steps.contains(&m) {
                steps.push(m);
            }
        }
    }
    let id = first.identity_of();
    let mut seen: HashSet<Matrix<T>> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in &steps {
            let y = &x * s;
            if !seen.contains(&y) {
                if seen.len() as u64 >= cap {
                    return Ok(ClosureOrder::Exceeded);
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(ClosureOrder::Finite(seen.len() as u64))
}

/// Order of the image of a candidate.
pub fn closure_order<T: CandidateScalar>(h: &HomCandidate<T>, cap: u64) -> Result<ClosureOrder> {
    let gens: Vec<Matrix<T>> = h.images().values().cloned().collect();
    closure_order_of(&gens, cap)
}

fn quad_matrix(text: &str) -> QuadMatrix {
    QuadMatrix::parse(text, COUNTEREXAMPLE_RADICAND).expect("static matrix")
}

/// A nontrivial representation `SL_3(Z) -> SL_3(C)` with finite image,
/// defined over `Q(sqrt(-7))`. The images of `E_12, E_23, E_32, E_21` are
/// explicit; `E_13` and `E_31` are the commutators forced by the relations.
pub fn build_counterexample_rep() -> HomCandidate<QuadScalar> {
    let e12 = quad_matrix("1,0,0;0,-1,0;0,0,-1");
    let e23 = quad_matrix("0,1,0;1,0,0;0,0,-1");
    let e32 = quad_matrix("-1,0,0;0,0,1;0,1,0");
    let e21 = quad_matrix(
        "-1/2,-1/2,-1/4-1/4*sqrt(-7);\
         -1/2,-1/2,1/4+1/4*sqrt(-7);\
         -1/4+1/4*sqrt(-7),1/4-1/4*sqrt(-7),0",
    );
    let e13 = e12.commutator(&e23).expect("invertible");
    let e31 = e32.commutator(&e21).expect("invertible");
    let g = |i, j| GenSymbol { i, j };
    let images = BTreeMap::from([
        (g(1, 2), e12),
        (g(2, 3), e23),
        (g(3, 2), e32),
        (g(2, 1), e21),
        (g(1, 3), e13),
        (g(3, 1), e31),
    ]);
    HomCandidate::new(3, ScalarDomain::Quadratic(COUNTEREXAMPLE_RADICAND), images).expect("valid candidate")
}

/// The two exceptional families of representations of the Heisenberg group
/// `U_3(Z) = <E_12, E_23, E_13>` in which `E_13` goes to a nontrivial scalar.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum U3Case {
    /// Into `GL_2`, with `E_13 -> -id`.
    M2,
    /// Into `GL_3` over `Q(sqrt(-3))`, with `E_13 -> λ id` for a primitive
    /// cube root of unity `λ`.
    M3,
}

/// Relators of `U_3(Z)`: `[E_12, E_13]`, `[E_23, E_13]`, `[E_12, E_23] E_13^-1`.
pub fn u3_relations() -> Vec<Word> {
    let l = |i, j| Word::letter(GenSymbol { i, j });
    vec![
        Word::commutator(&l(1, 2), &l(1, 3)),
        Word::commutator(&l(2, 3), &l(1, 3)),
        Word::commutator(&l(1, 2), &l(2, 3)).concat(&Word::letter_inv(GenSymbol { i: 1, j: 3 })),
    ]
}

/// Representation of `U_3(Z)` with parameters `μ, ν`; only the generators
/// `E_12, E_23, E_13` receive images.
pub fn u3_exceptional_rep(case: U3Case, mu: &QuadScalar, nu: &QuadScalar) -> Result<HomCandidate<QuadScalar>> {
    if mu.is_zero_elem() || nu.is_zero_elem() {
        return domain("u3 parameters must be nonzero");
    }
    if mu.radicand() != nu.radicand() {
        return domain("u3 parameters must lie in the same field");
    }
    let radicand = mu.radicand();
    let zero = mu.zero_like();
    let one = mu.one_like();
    let (e12, e23, e13) = match case {
        U3Case::M2 => {
            let e12 = Matrix::from_rows(vec![vec![mu.clone(), zero.clone()], vec![zero.clone(), -mu.clone()]])?;
            let e23 = Matrix::from_rows(vec![vec![zero.clone(), nu.clone()], vec![one.clone(), zero.clone()]])?;
            (e12, e23, Matrix::identity_like(2, mu).neg())
        }
        U3Case::M3 => {
            if radicand != -3 {
                return domain("the m = 3 family needs the field Q(sqrt(-3))");
            }
            let lambda = QuadScalar::new(-3, rat(-1, 2), rat(1, 2))?;
            let lambda2 = lambda.clone() * lambda.clone();
            let mut e12 = Matrix::zero_like(3, 3, mu);
            e12.set(0, 0, mu.clone());
            e12.set(1, 1, lambda.clone() * mu.clone());
            e12.set(2, 2, lambda2 * mu.clone());
            let e23 = Matrix::from_rows(vec![
                vec![zero.clone(), zero.clone(), nu.clone()],
                vec![one.clone(), zero.clone(), zero.clone()],
                vec![zero.clone(), one.clone(), zero.clone()],
            ])?;
            (e12, e23, Matrix::identity_like(3, mu).scale(&lambda))
        }
    };
    let g = |i, j| GenSymbol { i, j };
    let images = BTreeMap::from([(g(1, 2), e12), (g(2, 3), e23), (g(1, 3), e13)]);
    HomCandidate::partial(3, ScalarDomain::Quadratic(radicand), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{MatrixOrder, RatMatrix};
    use crate::scalars::rat_int;

    fn q(d: i64, a: i64) -> QuadScalar {
        QuadScalar::from_rational(d, rat_int(a)).unwrap()
    }

    #[test]
    fn counterexample_matrices() {
        let h = build_counterexample_rep();
        let e12 = h.image(GenSymbol { i: 1, j: 2 }).unwrap();
        assert_eq!(e12, &quad_matrix("1,0,0;0,-1,0;0,0,-1"));
        let e21 = h.image(GenSymbol { i: 2, j: 1 }).unwrap();
        assert!(e21.det_expansion().is_one_elem());
        for m in h.images().values() {
            assert_eq!(m.order(100).unwrap(), MatrixOrder::Finite(2));
        }
        assert!(h.verify_hom().unwrap().passed());
        assert!(!h.is_trivial());
    }

    #[test]
    fn counterexample_image_is_finite() {
        let h = build_counterexample_rep();
        assert_eq!(closure_order(&h, 1_000_000).unwrap(), ClosureOrder::Finite(168));
    }

    #[test]
    fn closure_basics() {
        let trivial = HomCandidate::trivial_candidate(3).unwrap();
        assert_eq!(closure_order(&trivial, 10).unwrap(), ClosureOrder::Finite(1));
        let minus = RatMatrix::identity(2).neg();
        assert_eq!(closure_order_of(&[minus], 10).unwrap(), ClosureOrder::Finite(2));
        let e12 = HomCandidate::identity_candidate(3).unwrap();
        assert_eq!(closure_order(&e12, 50).unwrap(), ClosureOrder::Exceeded);
        assert!(closure_order_of::<crate::scalars::Rational>(&[], 5).is_err());
    }

    fn check_u3(h: &HomCandidate<QuadScalar>, expected_center: &QuadMatrix) {
        for r in u3_relations() {
            assert!(h.evaluate_word(&r).unwrap().is_identity(), "relator {r}");
        }
        let g = |i, j| GenSymbol { i, j };
        let c = h.image(g(1, 2)).unwrap().commutator(h.image(g(2, 3)).unwrap()).unwrap();
        assert_eq!(&c, expected_center);
        let z = h.image(g(1, 3)).unwrap();
        for k in [g(1, 2), g(2, 3)] {
            let m = h.image(k).unwrap();
            assert_eq!(&(m * z), &(z * m));
        }
        assert!(!z.is_unipotent());
    }

    #[test]
    fn u3_families() {
        let m2 = u3_exceptional_rep(U3Case::M2, &q(-1, 1), &q(-1, 1)).unwrap();
        check_u3(&m2, &Matrix::identity_like(2, &q(-1, 1)).neg());
        let m2b = u3_exceptional_rep(U3Case::M2, &q(2, 3), &q(2, -5)).unwrap();
        check_u3(&m2b, &Matrix::identity_like(2, &q(2, 1)).neg());
        let lambda = QuadScalar::new(-3, rat(-1, 2), rat(1, 2)).unwrap();
        let m3 = u3_exceptional_rep(U3Case::M3, &q(-3, 1), &q(-3, 1)).unwrap();
        check_u3(&m3, &Matrix::identity_like(3, &lambda).scale(&lambda));
        let m3b = u3_exceptional_rep(U3Case::M3, &lambda, &q(-3, 7)).unwrap();
        check_u3(&m3b, &Matrix::identity_like(3, &lambda).scale(&lambda));
        assert!(u3_exceptional_rep(U3Case::M3, &q(-7, 1), &q(-7, 1)).is_err());
        assert!(u3_exceptional_rep(U3Case::M2, &q(-7, 0), &q(-7, 1)).is_err());
    }
}
