use std::collections::BTreeMap;
use std::fmt;

use super::word::{steinberg_relations, GenSymbol, Word};
use crate::error::{domain, Error, Result};
use crate::matrices::{IntMatrix, Matrix, RatMatrix};
use crate::scalars::{Field, QuadScalar, Rational};

/// Where the entries of a candidate's images live.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScalarDomain {
    Integer,
    /// `Q(sqrt(D))`.
    Quadratic(i64),
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarDomain::Integer => f.write_str("Z"),
            ScalarDomain::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// Scalars that can carry candidate images.
pub trait CandidateScalar: Field {
    fn belongs_to(&self, domain: ScalarDomain) -> bool;
}

impl CandidateScalar for Rational {
    fn belongs_to(&self, domain: ScalarDomain) -> bool {
        domain == ScalarDomain::Integer && self.is_integer()
    }
}

impl CandidateScalar for QuadScalar {
    fn belongs_to(&self, domain: ScalarDomain) -> bool {
        domain == ScalarDomain::Quadratic(self.radicand())
    }
}

/// Images of the generators `E_ij` under a would-be homomorphism out of
/// `SL_d(Z)`. Integer candidates are stored over `Q` so that inverses can
/// be formed; their entries are checked to be integers.
#[derive(Clone, Debug, PartialEq)]
pub struct HomCandidate<T> {
    d: usize,
    domain: ScalarDomain,
    images: BTreeMap<GenSymbol, Matrix<T>>,
    inverses: BTreeMap<GenSymbol, Matrix<T>>,
}

/// A relator that does not evaluate to the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct RelatorFailure {
    pub relator: Word,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub relators_checked: usize,
    pub failures: Vec<RelatorFailure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass ({} relators)", self.relators_checked);
        }
        write!(f, "fail ({} of {} relators violated)", self.failures.len(), self.relators_checked)?;
        for fail in &self.failures {
            write!(f, "\n  {}: {}", fail.relator, fail.reason)?;
        }
        Ok(())
    }
}

impl<T: CandidateScalar> HomCandidate<T> {
    /// A candidate with an image for every `E_ij`, each of determinant 1.
    pub fn new(d: usize, dom: ScalarDomain, images: BTreeMap<GenSymbol, Matrix<T>>) -> Result<Self> {
        if d < 2 {
            return domain(format!("candidates need d >= 2, got {d}"));
        }
        if let Some(g) = GenSymbol::all(d).into_iter().find(|g| !images.contains_key(g)) {
            return domain(format!("no image for {g}"));
        }
        let c = Self::partial(d, dom, images)?;
        for (g, m) in &c.images {
            if !m.det().is_one_elem() {
                return domain(format!("image of {g} has determinant {}", m.det()));
            }
        }
        Ok(c)
    }

    /// A candidate defined on some of the generators only; images need to be
    /// invertible but not of determinant 1.
    pub fn partial(d: usize, dom: ScalarDomain, images: BTreeMap<GenSymbol, Matrix<T>>) -> Result<Self> {
        let mut size = None;
        let mut inverses = BTreeMap::new();
        for (&g, m) in &images {
            GenSymbol::new(g.i, g.j, d)?;
            if !m.is_square() {
                return domain(format!("image of {g} is not square"));
            }
            if *size.get_or_insert(m.rows()) != m.rows() {
                return domain(format!("image of {g} has size {}, expected {}", m.rows(), size.unwrap()));
            }
            if let Some(bad) = m.entries().iter().find(|x| !x.belongs_to(dom)) {
                return domain(format!("entry {bad} of the image of {g} is not in {dom}"));
            }
            let inv = m.inverse().map_err(|_| Error::Domain(format!("image of {g} is singular")))?;
            if let Some(bad) = inv.entries().iter().find(|x| !x.belongs_to(dom)) {
                return domain(format!("image of {g} is not invertible over {dom} (inverse has entry {bad})"));
            }
            inverses.insert(g, inv);
        }
        if images.is_empty() {
            return domain("a candidate needs at least one image");
        }
        Ok(HomCandidate { d, domain: dom, images, inverses })
    }

    /// Candidate with images `f(E_ij)`.
    pub fn from_fn(d: usize, dom: ScalarDomain, f: impl Fn(GenSymbol) -> Matrix<T>) -> Result<Self> {
        Self::new(d, dom, GenSymbol::all(d).into_iter().map(|g| (g, f(g))).collect())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    /// Size `m` of the image matrices.
    pub fn image_size(&self) -> usize {
        self.images.values().next().expect("nonempty").rows()
    }

    pub fn images(&self) -> &BTreeMap<GenSymbol, Matrix<T>> {
        &self.images
    }

    pub fn image(&self, g: GenSymbol) -> Result<&Matrix<T>> {
        self.images.get(&g).ok_or_else(|| Error::Domain(format!("no image for {g}")))
    }

    pub fn image_inverse(&self, g: GenSymbol) -> Result<&Matrix<T>> {
        self.inverses.get(&g).ok_or_else(|| Error::Domain(format!("no image for {g}")))
    }

    pub fn is_complete(&self) -> bool {
        GenSymbol::all(self.d).iter().all(|g| self.images.contains_key(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.images.values().all(Matrix::is_identity)
    }

    /// Ordered product of images (`+1`) and inverse images (`-1`).
    pub fn evaluate_word(&self, w: &Word) -> Result<Matrix<T>> {
        let mut acc = self.images.values().next().expect("nonempty").identity_of();
        for &(g, e) in w.letters() {
            let m = if e > 0 { self.image(g)? } else { self.image_inverse(g)? };
            acc = &acc * m;
        }
        Ok(acc)
    }

    /// Checks every Steinberg relator.
    pub fn verify_hom(&self) -> Result<VerificationReport> {
        let relators = steinberg_relations(self.d)?;
        let mut failures = Vec::new();
        for r in &relators {
            match self.evaluate_word(r) {
                Ok(m) if m.is_identity() => {}
                Ok(m) => failures.push(RelatorFailure { relator: r.clone(), reason: format!("evaluates to {m}") }),
                Err(e) => failures.push(RelatorFailure { relator: r.clone(), reason: e.to_string() }),
            }
        }
        Ok(VerificationReport { relators_checked: relators.len(), failures })
    }

    /// `E_ij -> image(E_ji)^-1`, i.e. the candidate composed with `A -> (A^-1)^T`.
    pub fn precompose_inverse_transpose(&self) -> Result<Self> {
        let images = self
            .images
            .keys()
            .map(|&g| Ok((g, self.image_inverse(g.transposed())?.clone())))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Self::partial(self.d, self.domain, images).map(|mut c| {
            if self.is_complete() {
                c = Self::new(c.d, c.domain, c.images).expect("determinants preserved");
            }
            c
        })
    }

    /// The same generators with images `C image(E_ij) C^-1`.
    pub fn conjugate_by(&self, c: &Matrix<T>) -> Result<Self> {
        let ci = c.inverse()?;
        let images = self.images.iter().map(|(&g, m)| (g, &(c * m) * &ci)).collect();
        Self::partial(self.d, self.domain, images)
    }
}

impl HomCandidate<Rational> {
    /// Integer candidate from integer images.
    pub fn integral(d: usize, images: BTreeMap<GenSymbol, IntMatrix>) -> Result<Self> {
        Self::new(d, ScalarDomain::Integer, images.into_iter().map(|(g, m)| (g, m.to_rational())).collect())
    }

    /// `E_ij -> E_ij`.
    pub fn identity_candidate(d: usize) -> Result<Self> {
        Self::from_fn(d, ScalarDomain::Integer, |g| IntMatrix::elementary(d, g.i - 1, g.j - 1).to_rational())
    }

    /// `E_ij -> id`.
    pub fn trivial_candidate(d: usize) -> Result<Self> {
        Self::from_fn(d, ScalarDomain::Integer, |_| RatMatrix::identity(d))
    }

    /// `E_ij -> (E_ij^-1)^T = E_ji^-1`.
    pub fn inverse_transpose_candidate(d: usize) -> Result<Self> {
        Self::identity_candidate(d)?.precompose_inverse_transpose()
    }

    /// `E_ij -> C E_ij C^-1` for `C` in `GL_d(Z)`.
    pub fn conjugated_candidate(c: &IntMatrix) -> Result<Self> {
        if !c.is_square() || c.det().magnitude() != &num_bigint::BigUint::from(1u8) {
            return domain("conjugator must lie in GL_d(Z)");
        }
        let c = Self::identity_candidate(c.rows())?.conjugate_by(&c.to_rational())?;
        Self::new(c.d, c.domain, c.images)
    }

    /// Integer images, when every entry is integral.
    pub fn integer_image(&self, g: GenSymbol) -> Result<IntMatrix> {
        self.image(g)?.to_integer().ok_or_else(|| Error::Domain(format!("image of {g} is not integral")))
    }
}

/// A candidate read from text, over whichever domain the text declares.
#[derive(Clone, Debug, PartialEq)]
pub enum LoadedCandidate {
    Integer(HomCandidate<Rational>),
    Quadratic(HomCandidate<QuadScalar>),
}

impl LoadedCandidate {
    pub fn d(&self) -> usize {
        match self {
            LoadedCandidate::Integer(c) => c.d(),
            LoadedCandidate::Quadratic(c) => c.d(),
        }
    }

    pub fn domain(&self) -> ScalarDomain {
        match self {
            LoadedCandidate::Integer(c) => c.domain(),
            LoadedCandidate::Quadratic(c) => c.domain(),
        }
    }

    pub fn verify_hom(&self) -> Result<VerificationReport> {
        match self {
            LoadedCandidate::Integer(c) => c.verify_hom(),
            LoadedCandidate::Quadratic(c) => c.verify_hom(),
        }
    }
}

impl<T: CandidateScalar> fmt::Display for HomCandidate<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d = {}", self.d)?;
        write!(f, "domain = {}", self.domain)?;
        for (g, m) in &self.images {
            write!(f, "\nE {} {} = {}", g.i, g.j, m)?;
        }
        Ok(())
    }
}
