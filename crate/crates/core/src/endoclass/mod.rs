//! Classification of endomorphisms of `SL_d(Z)`, `d >= 3`.
//!
//! A nontrivial endomorphism sends each `E_ij` to a rank-one unipotent
//! (possibly after composing with the inverse-transpose automorphism). The
//! fixed hyperplanes of these unipotents determine lines `L_1, .., L_d`, and
//! walking down the superdiagonal from a primitive vector on `L_d` yields a
//! basis `v_1, .., v_d` whose matrix `C` conjugates the standard inclusion
//! into the given one.

mod rank_one;
mod sample;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrices::{kernel, smith_normal_form, IntMatrix, Subspace};
use crate::scalars::{rational_to_integer, Rational};
use crate::steinberg::{GenSymbol, HomCandidate, LoadedCandidate};

pub use rank_one::{classify_transvection, predict_commutator, rank_one_unipotent, TransvectionClass};
pub use sample::{random_gl_matrix, random_word, seeded_rng};

/// Seed of the random words used to spot-check a recovered conjugator.
pub const SPOT_CHECK_SEED: u64 = 0x5eed;
const SPOT_CHECK_WORDS: usize = 10;
const SPOT_CHECK_LENGTH: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorProfile {
    pub unipotent: bool,
    pub defect_rank: usize,
    /// Present iff unipotent with defect rank 1.
    pub fixed_hyperplane: Option<Subspace<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RankOneProfile {
    pub d: usize,
    pub generators: BTreeMap<GenSymbol, GeneratorProfile>,
}

impl RankOneProfile {
    pub fn all_rank_one(&self) -> bool {
        self.generators.values().all(|p| p.fixed_hyperplane.is_some())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum HyperplaneOutcome {
    Coherent(Vec<Subspace<Rational>>),
    /// The hyperplanes of column `column` (one-based) disagree.
    NotCoherent { column: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub enum LineOutcome {
    Lines(Vec<Subspace<Rational>>),
    Degenerate(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifierVerdict {
    Trivial,
    Automorphism { conjugator: IntMatrix, used_inverse_transpose: bool },
    Rejected { reason: String },
}

impl fmt::Display for ClassifierVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifierVerdict::Trivial => f.write_str("trivial"),
            ClassifierVerdict::Automorphism { conjugator, used_inverse_transpose } => {
                write!(f, "automorphism conjugator={conjugator} inverse_transpose={used_inverse_transpose}")
            }
            ClassifierVerdict::Rejected { reason } => write!(f, "rejected: {reason}"),
        }
    }
}

/// Verdict together with one line per pipeline stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifierReport {
    pub verdict: ClassifierVerdict,
    pub stages: Vec<String>,
}

/// Unipotency, defect rank and fixed hyperplane of every generator image.
pub fn profile_generators(h: &HomCandidate<Rational>) -> Result<RankOneProfile> {
    let d = h.d();
    if d < 3 {
        return Err(Error::Precondition(format!("profiling needs d >= 3, got {d}")));
    }
    if h.image_size() != d {
        return Err(Error::Precondition(format!("images have size {}, expected {d}", h.image_size())));
    }
    let report = h.verify_hom()?;
    if let Some(f) = report.failures.first() {
        return Err(Error::Precondition(format!("relator {} fails: {}", f.relator, f.reason)));
    }
    let generators = h
        .images()
        .iter()
        .map(|(&g, m)| {
            let n = m.minus_identity();
            let defect_rank = n.rank();
            let unipotent = m.is_unipotent();
            let fixed_hyperplane = (unipotent && defect_rank == 1).then(|| kernel(&n));
            (g, GeneratorProfile { unipotent, defect_rank, fixed_hyperplane })
        })
        .collect();
    Ok(RankOneProfile { d, generators })
}

/// For each column `k`, the common fixed hyperplane of the `E_ik`, `i != k`.
pub fn column_hyperplanes(profile: &RankOneProfile) -> Result<HyperplaneOutcome> {
    if !profile.all_rank_one() {
        return Err(Error::Precondition("every generator must be a rank-one unipotent".into()));
    }
    let d = profile.d;
    let mut out = Vec::with_capacity(d);
    for k in 1..=d {
        let mut hs = (1..=d).filter(|&i| i != k).map(|i| {
            profile.generators[&GenSymbol { i, j: k }].fixed_hyperplane.clone().expect("rank one")
        });
        let first = hs.next().expect("d >= 3");
        if hs.any(|h| h != first) {
            return Ok(HyperplaneOutcome::NotCoherent { column: k });
        }
        out.push(first);
    }
    Ok(HyperplaneOutcome::Coherent(out))
}

/// `L_i = ∩_{k != i} H_k`; degenerate unless all `L_i` are lines and the
/// `H_k` meet in zero.
pub fn recover_lines(hyperplanes: &[Subspace<Rational>]) -> Result<LineOutcome> {
    let d = hyperplanes.len();
    if d < 2 || hyperplanes.iter().any(|h| h.ambient_dim() != d || h.dim() != d - 1) {
        return Err(Error::Precondition(format!("expected {d} hyperplanes of dimension {}", d.saturating_sub(1))));
    }
    let total = hyperplanes[1..].iter().fold(hyperplanes[0].clone(), |acc, h| acc.intersection(h));
    if total.dim() != 0 {
        return Ok(LineOutcome::Degenerate(format!("the hyperplanes meet in {total}")));
    }
    let mut lines = Vec::with_capacity(d);
    for i in 0..d {
        let mut others = (0..d).filter(|&k| k != i).map(|k| &hyperplanes[k]);
        let first = others.next().expect("d >= 2").clone();
        let l = others.fold(first, |acc, h| acc.intersection(h));
        if l.dim() != 1 {
            return Ok(LineOutcome::Degenerate(format!("L_{} = {l} is not a line", i + 1)));
        }
        lines.push(l);
    }
    Ok(LineOutcome::Lines(lines))
}

/// Integer vector spanning a rational line, divided by its content, with
/// first nonzero coordinate positive.
pub fn primitive_vector(v: &[Rational]) -> Option<Vec<BigInt>> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> =
        v.iter().map(|x| rational_to_integer(&(x * Rational::from_integer(lcm.clone()))).expect("cleared")).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return None;
    }
    let sign = if ints.iter().find(|x| !x.is_zero()).expect("nonzero").is_negative() { -g } else { g };
    Some(ints.into_iter().map(|x| x / &sign).collect())
}

/// `v_d` primitive on `L_d`, then `v_i = (u_{i,i+1} - id) v_{i+1}`.
pub fn recover_basis(h: &HomCandidate<Rational>, lines: &[Subspace<Rational>]) -> Result<Vec<Vec<BigInt>>> {
    let d = h.d();
    if lines.len() != d || lines.iter().any(|l| l.dim() != 1) {
        return Err(Error::Precondition(format!("expected {d} lines")));
    }
    let vd = primitive_vector(&lines[d - 1].basis()[0]).expect("a line has a nonzero vector");
    let mut vs = vec![vd];
    for i in (1..d).rev() {
        let u = h.integer_image(GenSymbol { i, j: i + 1 })?;
        let v = u.minus_identity().apply(vs.last().expect("nonempty"));
        if v.iter().all(Zero::is_zero) {
            return Err(Error::Degenerate(format!("v_{i} = 0")));
        }
        let vr: Vec<Rational> = v.iter().cloned().map(Rational::from_integer).collect();
        if !lines[i - 1].contains(&vr) {
            return Err(Error::Degenerate(format!("v_{i} does not lie on L_{i}")));
        }
        vs.push(v);
    }
    vs.reverse();
    let m = IntMatrix::from_columns(&vs)?;
    if m.det().is_zero() {
        return Err(Error::Degenerate("recovered vectors are linearly dependent".into()));
    }
    Ok(vs)
}

/// `C` with `image(E_ij) = C E_ij C^-1` for all generators, if one exists
/// along the rank-one route.
fn attempt(h: &HomCandidate<Rational>, seed: u64, stages: &mut Vec<String>, tag: &str) -> std::result::Result<IntMatrix, String> {
    let d = h.d();
    let profile = profile_generators(h).map_err(|e| e.to_string())?;
    if let Some((g, p)) = profile.generators.iter().find(|(_, p)| p.fixed_hyperplane.is_none()) {
        let what = if p.unipotent { format!("defect rank {}", p.defect_rank) } else { "not unipotent".to_string() };
        return Err(format!("image of {g} is not a rank-one unipotent ({what})"));
    }
    stages.push(format!("{tag}: all images are rank-one unipotents"));
    let hyperplanes = match column_hyperplanes(&profile).map_err(|e| e.to_string())? {
        HyperplaneOutcome::Coherent(hs) => hs,
        HyperplaneOutcome::NotCoherent { column } => {
            return Err(format!("fixed hyperplanes of column {column} disagree"));
        }
    };
    stages.push(format!("{tag}: column hyperplanes coherent"));
    let lines = match recover_lines(&hyperplanes).map_err(|e| e.to_string())? {
        LineOutcome::Lines(ls) => ls,
        LineOutcome::Degenerate(why) => return Err(why),
    };
    let vs = recover_basis(h, &lines).map_err(|e| e.to_string())?;
    let raw = IntMatrix::from_columns(&vs).map_err(|e| e.to_string())?;
    let diag = smith_normal_form(&raw).diagonal();
    let ell = diag[0].clone();
    if diag.iter().any(|x| *x != ell) {
        return Err(format!("lattice spanned by the recovered basis is not a multiple of Z^{d} (invariants {diag:?})"));
    }
    stages.push(format!("{tag}: recovered lattice is {ell} Z^{d}"));
    let mut c = raw.map(|x| x / &ell);
    let sign_row = (0..d).find(|&i| !c.get(i, 0).is_zero()).expect("invertible");
    if c.get(sign_row, 0).is_negative() {
        c = c.neg();
    }
    let cq = c.to_rational();
    let ci = cq.inverse().map_err(|e| e.to_string())?;
    for (&g, img) in h.images() {
        let std = IntMatrix::elementary(d, g.i - 1, g.j - 1).to_rational();
        if &(&(&cq * &std) * &ci) != img {
            return Err(format!("conjugation by the recovered basis does not reproduce the image of {g}"));
        }
    }
    let standard = HomCandidate::identity_candidate(d).map_err(|e| e.to_string())?;
    let mut rng = seeded_rng(seed);
    for _ in 0..SPOT_CHECK_WORDS {
        let w = random_word(d, SPOT_CHECK_LENGTH, &mut rng);
        let lhs = h.evaluate_word(&w).map_err(|e| e.to_string())?;
        let rhs = &(&cq * &standard.evaluate_word(&w).map_err(|e| e.to_string())?) * &ci;
        if lhs != rhs {
            return Err(format!("conjugation fails on the word {w}"));
        }
    }
    stages.push(format!("{tag}: conjugation verified on generators and {SPOT_CHECK_WORDS} random words"));
    Ok(c)
}

/// Full pipeline with per-stage diagnostics.
pub fn classify_endomorphism_report(h: &HomCandidate<Rational>) -> Result<ClassifierReport> {
    classify_endomorphism_seeded(h, SPOT_CHECK_SEED)
}

/// As [`classify_endomorphism_report`], drawing the random spot-check words
/// from `seed`.
pub fn classify_endomorphism_seeded(h: &HomCandidate<Rational>, seed: u64) -> Result<ClassifierReport> {
    let d = h.d();
    if d < 3 {
        return Err(Error::Domain(format!("classification needs d >= 3, got {d}")));
    }
    let mut stages = Vec::new();
    let reject = |reason: String, stages: Vec<String>| ClassifierReport { verdict: ClassifierVerdict::Rejected { reason }, stages };
    let m = h.image_size();
    if m < d {
        return Ok(reject(
            format!(
                "images have size {m} < {d}; every homomorphism SL_{d}(Z) -> GL_{m}(C) is trivial, \
                 so this candidate is not classified"
            ),
            stages,
        ));
    }
    if m > d {
        return Ok(reject(format!("images have size {m} > {d}; only endomorphisms (m = d) are classified"), stages));
    }
    if h.is_trivial() {
        stages.push("all images are the identity".into());
        return Ok(ClassifierReport { verdict: ClassifierVerdict::Trivial, stages });
    }
    let report = h.verify_hom()?;
    if let Some(f) = report.failures.first() {
        stages.push(format!("relations: {report}"));
        return Ok(reject(format!("not a homomorphism: relator {} {}", f.relator, f.reason), stages));
    }
    stages.push(format!("relations: {report}"));
    let direct_failure = match attempt(h, seed, &mut stages, "direct") {
        Ok(c) => {
            let verdict = ClassifierVerdict::Automorphism { conjugator: c, used_inverse_transpose: false };
            return Ok(ClassifierReport { verdict, stages });
        }
        Err(why) => why,
    };
    stages.push(format!("direct: {direct_failure}; retrying after inverse-transpose"));
    let twisted = h.precompose_inverse_transpose()?;
    match attempt(&twisted, seed, &mut stages, "inverse-transpose") {
        Ok(c) => {
            let verdict = ClassifierVerdict::Automorphism { conjugator: c, used_inverse_transpose: true };
            Ok(ClassifierReport { verdict, stages })
        }
        Err(why) => {
            stages.push(format!("inverse-transpose: {why}"));
            let reason = format!(
                "no conjugation found (direct: {direct_failure}; inverse-transpose: {why}); \
                 a nontrivial endomorphism must be an automorphism, so the input is inconsistent"
            );
            Ok(reject(reason, stages))
        }
    }
}

pub fn classify_endomorphism(h: &HomCandidate<Rational>) -> Result<ClassifierVerdict> {
    classify_endomorphism_report(h).map(|r| r.verdict)
}

/// Classifies a candidate read from a file; non-integer candidates are
/// rejected since they are not endomorphisms of `SL_d(Z)`.
pub fn classify_loaded(c: &LoadedCandidate, seed: u64) -> Result<ClassifierReport> {
    match c {
        LoadedCandidate::Integer(h) => classify_endomorphism_seeded(h, seed),
        LoadedCandidate::Quadratic(h) => Ok(ClassifierReport {
            verdict: ClassifierVerdict::Rejected {
                reason: format!("images over {} are not integral; only integer candidates are classified", h.domain()),
            },
            stages: Vec::new(),
        }),
    }
}

/// Checks the defining property of an `Automorphism` verdict.
pub fn verdict_reproduces(h: &HomCandidate<Rational>, verdict: &ClassifierVerdict) -> Result<bool> {
    let ClassifierVerdict::Automorphism { conjugator, used_inverse_transpose } = verdict else {
        return Ok(false);
    };
    let target = if *used_inverse_transpose { h.precompose_inverse_transpose()? } else { h.clone() };
    let expected = HomCandidate::conjugated_candidate(conjugator)?;
    Ok(target.images() == expected.images() && conjugator.det().abs().is_one())
}
