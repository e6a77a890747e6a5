//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use sltorus::abgroups::{abelianize_presentation, sl2_amalgam_presentation};
use sltorus::endoclass::{
    classify_endomorphism, classify_transvection, predict_commutator, random_gl_matrix, rank_one_unipotent,
    seeded_rng, ClassifierVerdict, TransvectionClass,
};
use sltorus::matrices::{IntMatrix, Matrix, MatrixOrder};
use sltorus::mcg::{
    brute_force_fixed_count, eta_sigma_witness, mcg_structure, omega, splitting_decision, torelli_invariants,
    Extension, Torus, MCG_DIMS,
};
use sltorus::scalars::{bernoulli, rat, rat_int, QuadScalar, Rational, Ring};
use sltorus::spheres::{bp_order, theta_record, BpOrder};
use sltorus::steinberg::{
    build_counterexample_rep, closure_order, steinberg_presentation, u3_exceptional_rep, u3_relations, ClosureOrder,
    GenSymbol, HomCandidate, ScalarDomain, U3Case,
};

type Check = std::result::Result<(), String>;

/// Name, time budget and check.
type Criterion = (&'static str, Duration, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lift<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Rows of the table of homotopy spheres, transcribed by hand.
const TABLE: [(usize, &str, &str); 18] = [
    (1, "0", "0"),
    (2, "0", "0"),
    (3, "0", "0"),
    (5, "0", "0"),
    (6, "0", "0"),
    (7, "Z/28", "Z/28"),
    (8, "Z/2", "0"),
    (9, "(Z/2)^2 (+) Z/2", "(Z/2)^2 (+) 0"),
    (10, "Z/6", "Z/6"),
    (11, "Z/992", "Z/992"),
    (12, "0", "0"),
    (13, "Z/3", "Z/3"),
    (14, "Z/2", "0"),
    (15, "Z/2 (+) Z/8128", "Z/2 (+) Z/8128"),
    (16, "Z/2", "0"),
    (17, "(Z/2)^3 (+) Z/2", "(Z/2)^3 (+) 0"),
    (18, "Z/8 (+) Z/2", "Z/8 (+) Z/2"),
    (19, "Z/2 (+) Z/523264", "Z/2 (+) Z/523264"),
];

fn table_reproduction() -> Check {
    let out = lift(
        Command::new(env!("CARGO_BIN_EXE_sltorus"))
            .args(["--format", "machine", "spheres-table", "--from", "1", "--to", "19"])
            .output(),
    )?;
    ensure!(out.status.success(), "spheres-table exited with {:?}", out.status.code());
    let text = String::from_utf8_lossy(&out.stdout);
    let expected: Vec<String> = TABLE
        .iter()
        .flat_map(|(d, t, s)| [format!("theta_{d}={t}"), format!("theta_split_{d}={s}")])
        .collect();
    let got: Vec<&str> = text.lines().collect();
    ensure!(got == expected, "table mismatch:\n{text}");
    Ok(())
}

/// `B_0..B_max` from `sum_{j<=m} C(m+1, j) B_j = 0`.
fn bernoulli_recurrence(max: usize) -> Vec<BigRational> {
    let mut b = vec![BigRational::one()];
    for m in 1..=max {
        let s = (0..m).fold(BigRational::zero(), |acc, j| {
            acc + BigRational::from_integer(BigInt::from(binomial(m as u64 + 1, j as u64))) * &b[j]
        });
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

fn bp_formula() -> Check {
    let oracle = bernoulli_recurrence(30);
    for n in (2..=30).step_by(2) {
        ensure!(lift(bernoulli(n as u32))? == oracle[n], "B_{n} disagrees with the recurrence");
    }
    ensure!(lift(bernoulli(1))? == oracle[1], "B_1 convention");
    ensure!(oracle[30] == rat(8615841276005, 14322), "recurrence oracle B_30");
    let order = |d| lift(bp_order(d));
    for (d, v) in [(7, 28), (11, 992), (15, 8128), (9, 2), (5, 1)] {
        ensure!(order(d)? == BpOrder::Order(BigInt::from(v)), "bP_{} should be {v}", d + 1);
    }
    for d in (6..=18).step_by(2) {
        ensure!(order(d)? == BpOrder::Order(BigInt::one()), "bP_{} should be trivial", d + 1);
    }
    ensure!(order(125)? == BpOrder::Unknown, "bP_126 should be unknown");
    for d in [7, 11, 15] {
        let BpOrder::Order(bp) = order(d)? else { unreachable!() };
        let factors = lift(theta_record(d))?.theta.invariant_factors();
        ensure!(factors.iter().any(|&f| BigInt::from(f) == bp), "bP_{} not a cyclic factor of Theta_{d}", d + 1);
    }
    Ok(())
}

fn sign_normalized(c: &IntMatrix) -> IntMatrix {
    let row = (0..c.rows()).find(|&i| !c.get(i, 0).is_zero()).expect("invertible");
    if c.get(row, 0) < &BigInt::zero() {
        c.neg()
    } else {
        c.clone()
    }
}

fn endomorphism_round_trip() -> Check {
    let mut rng = seeded_rng(2024);
    for d in 3..=5 {
        for k in 0..100 {
            let c = random_gl_matrix(d, 30, &mut rng);
            let expected = sign_normalized(&c);
            let h = lift(HomCandidate::conjugated_candidate(&c))?;
            let twisted = lift(h.precompose_inverse_transpose())?;
            for (input, flag) in [(&h, false), (&twisted, true)] {
                let verdict = lift(classify_endomorphism(input))?;
                let want = ClassifierVerdict::Automorphism { conjugator: expected.clone(), used_inverse_transpose: flag };
                ensure!(verdict == want, "d={d} sample {k} flag={flag}: C = {c}, got {verdict}");
            }
        }
    }
    Ok(())
}

fn relation_verification() -> Check {
    for d in 3..=5 {
        for h in [HomCandidate::identity_candidate(d), HomCandidate::inverse_transpose_candidate(d)] {
            let report = lift(lift(h)?.verify_hom())?;
            ensure!(report.passed(), "d={d}: {report}");
        }
    }
    // Single-entry changes that stay triangular, so the image stays in SL_3.
    let base = lift(HomCandidate::identity_candidate(3))?;
    let mut options = Vec::new();
    for g in GenSymbol::all(3) {
        for r in 0..3 {
            for c in 0..3 {
                if r != c && (r < c) == (g.i < g.j) {
                    options.extend([(g, r, c, 1i64), (g, r, c, -1)]);
                }
            }
        }
    }
    let mut rng = seeded_rng(4);
    options.shuffle(&mut rng);
    for &(g, r, c, delta) in options.iter().take(20) {
        let mut images = base.images().clone();
        let m = images.get_mut(&g).expect("generator");
        m.set(r, c, m.get(r, c).clone() + rat_int(delta));
        let corrupted = lift(HomCandidate::new(3, ScalarDomain::Integer, images))?;
        let report = lift(corrupted.verify_hom())?;
        ensure!(!report.passed(), "corrupting {g} at ({r},{c}) by {delta} went undetected");
    }
    Ok(())
}

/// Order of the image group, recorded on first computation.
const COUNTEREXAMPLE_ORDER: u64 = 168;

fn counterexample() -> Check {
    let h = build_counterexample_rep();
    ensure!(h.domain() == ScalarDomain::Quadratic(-7), "field is {}", h.domain());
    let report = lift(h.verify_hom())?;
    ensure!(report.passed(), "{report}");
    ensure!(!h.is_trivial(), "candidate is trivial");
    for (g, m) in h.images() {
        ensure!(lift(m.order(100))? == MatrixOrder::Finite(2), "image of {g} does not have order 2");
    }
    let first = lift(closure_order(&h, 1_000_000))?;
    let second = lift(closure_order(&build_counterexample_rep(), 1_000_000))?;
    ensure!(first == second, "closure order unstable: {first} vs {second}");
    ensure!(first == ClosureOrder::Finite(COUNTEREXAMPLE_ORDER), "closure order {first}");
    Ok(())
}

fn invariants() -> Check {
    for d in 3..=5 {
        for r in 0..=d {
            for n in [2u64, 3, 4, 6] {
                let inv = lift(torelli_invariants(d, r, n))?;
                let want = if r == 0 || r == d { 1 } else { 0 };
                ensure!(inv.count() == want, "d={d} r={r} n={n}: {} invariant factors", inv.count());
                if let Some(brute) = lift(brute_force_fixed_count(d, r, n, 1_000_000))? {
                    ensure!(
                        inv.fixed_vectors() == brute.into(),
                        "d={d} r={r} n={n}: SNF gives {} fixed vectors, enumeration {brute}",
                        inv.fixed_vectors()
                    );
                }
            }
        }
    }
    Ok(())
}

fn homology() -> Check {
    let (gens, rels) = sl2_amalgam_presentation();
    let h1 = lift(abelianize_presentation(&gens, &rels))?;
    ensure!(h1.invariant_factors() == vec![12], "H_1(SL_2) = {h1}");
    for d in 3..=5 {
        let (gens, rels) = lift(steinberg_presentation(d))?;
        let h1 = lift(abelianize_presentation(&gens, &rels))?;
        ensure!(h1.is_trivial(), "H_1(SL_{d}) = {h1}");
    }
    Ok(())
}

fn mcg_coherence() -> Check {
    for d in MCG_DIMS {
        let theta = lift(theta_record(d))?.theta;
        let mut sigmas = theta.generators();
        sigmas.push(theta.identity());
        for sigma in sigmas {
            let eta = lift(eta_sigma_witness(d, &sigma))?;
            let s = lift(mcg_structure(d, &sigma, &eta))?;
            let v = lift(splitting_decision(d, &Torus::ConnectedSum(sigma.clone())))?;
            ensure!((s.extension == Extension::Sl) == v.split, "d={d} Sigma={sigma}: tag and splitting disagree");
        }
    }
    let sigma7 = lift(lift(theta_record(7))?.theta.element(&[1]))?;
    let seven = lift(mcg_structure(7, &sigma7, &lift(lift(theta_record(8))?.theta.element(&[0]))?))?;
    let omega7 = lift(omega(7))?;
    ensure!(seven.extension == Extension::Sl, "d=7 should be SL");
    for (q, o) in seven.quotient.wedge_summands.iter().zip(&omega7.wedge_summands) {
        let same = if q.j == 1 { q.factor.is_trivial() } else { q.factor == o.factor };
        ensure!(same, "d=7 summand j={} is {}", q.j, q.factor);
    }
    let nine = lift(theta_record(9))?.theta;
    let sigma8 = lift(lift(theta_record(8))?.theta.element(&[1]))?;
    for eta in lift(nine.elements())?.into_iter().filter(|x| *x != nine.identity()) {
        let s = lift(mcg_structure(8, &sigma8, &eta))?;
        ensure!(s.extension == Extension::SlBar, "d=8 eta.Sigma={eta} should be SLbar");
        let j0 = &s.quotient.summand(0).factor;
        ensure!(j0.invariant_factors() == vec![2, 2], "d=8 Theta_9/<eta.Sigma> = {j0}");
        ensure!(s.quotient.summand(1).factor.is_trivial(), "d=8 Theta_8/<Sigma> nontrivial");
    }
    Ok(())
}

fn random_vec<R: Rng>(n: usize, rng: &mut R) -> Vec<Rational> {
    (0..n).map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(rat_int(0), |acc, (x, y)| acc + x * y)
}

/// Projection of `w` onto the orthogonal complement of `basis`.
fn project_out(w: &[Rational], basis: &[Vec<Rational>]) -> Vec<Rational> {
    let mut ortho: Vec<Vec<Rational>> = Vec::new();
    for b in basis {
        let mut v = b.clone();
        for o in &ortho {
            let k = dot(&v, o) / dot(o, o);
            v = v.iter().zip(o).map(|(x, y)| x - &k * y).collect();
        }
        if v.iter().any(|x| !x.is_zero_elem()) {
            ortho.push(v);
        }
    }
    let mut v = w.to_vec();
    for o in &ortho {
        let k = dot(&v, o) / dot(o, o);
        v = v.iter().zip(o).map(|(x, y)| x - &k * y).collect();
    }
    v
}

fn commutator_law() -> Check {
    let mut rng = seeded_rng(9);
    let mut seen = [0usize; 4];
    let mut pairs = 0;
    while pairs < 500 {
        let n = rng.gen_range(3..=6);
        let case = pairs % 4;
        let h = random_vec(n, &mut rng);
        let l = project_out(&random_vec(n, &mut rng), std::slice::from_ref(&h));
        // Cases: 0 L ⊂ H', L' ⊄ H; 1 L ⊄ H', L' ⊂ H; 2 both; 3 neither.
        let h2 = if case == 0 || case == 2 { project_out(&random_vec(n, &mut rng), std::slice::from_ref(&l)) } else { random_vec(n, &mut rng) };
        let l2 = if case == 1 || case == 2 {
            project_out(&random_vec(n, &mut rng), &[h2.clone(), h.clone()])
        } else {
            project_out(&random_vec(n, &mut rng), std::slice::from_ref(&h2))
        };
        let nonzero = |v: &[Rational]| v.iter().any(|x| !x.is_zero_elem());
        if !(nonzero(&h) && nonzero(&l) && nonzero(&h2) && nonzero(&l2)) {
            continue;
        }
        let u = lift(rank_one_unipotent(&h, &l))?;
        let u2 = lift(rank_one_unipotent(&h2, &l2))?;
        let computed = classify_transvection(&lift(u.commutator(&u2))?);
        let predicted = predict_commutator((&h, &l), (&h2, &l2));
        ensure!(computed == predicted, "n={n}: computed {computed}, predicted {predicted}");
        let slot = match predicted {
            TransvectionClass::Identity => 2,
            TransvectionClass::NotUnipotent => 3,
            TransvectionClass::RankOne { ref line, .. } => {
                if line.contains(&l) {
                    0
                } else {
                    1
                }
            }
            TransvectionClass::HigherRank => return Err("predicted a higher-rank unipotent".into()),
        };
        seen[slot] += 1;
        pairs += 1;
    }
    ensure!(seen.iter().all(|&c| c >= 50), "cases not all exercised: {seen:?}");
    Ok(())
}

fn u3_representations() -> Check {
    let q = |d: i64, a: i64, b: i64| QuadScalar::new(d, rat_int(a), rat_int(b)).expect("valid");
    let cases = [
        (U3Case::M2, q(-3, 1, 0), q(-3, 1, 0)),
        (U3Case::M2, q(-3, 2, 1), q(-3, -5, 0)),
        (U3Case::M3, q(-3, 1, 0), q(-3, 1, 0)),
        (U3Case::M3, q(-3, 3, 1), q(-3, 0, 2)),
    ];
    for (case, mu, nu) in cases {
        let h = lift(u3_exceptional_rep(case, &mu, &nu))?;
        for w in u3_relations() {
            ensure!(lift(h.evaluate_word(&w))?.is_identity(), "{case:?}: relation {w} fails");
        }
        let g = |i, j| GenSymbol { i, j };
        let z = lift(h.image(g(1, 3)))?;
        for other in [g(1, 2), g(2, 3)] {
            let m = lift(h.image(other))?;
            ensure!(lift(z.checked_mul(m))? == lift(m.checked_mul(z))?, "{case:?}: E13 image not central");
        }
        ensure!(!z.is_unipotent(), "{case:?}: E13 image is unipotent");
        let lambda = z.get(0, 0).clone();
        ensure!(*z == Matrix::identity_like(z.rows(), &lambda).scale(&lambda), "{case:?}: E13 image not scalar");
        let one = lambda.one_like();
        match case {
            U3Case::M2 => ensure!(lambda == -one, "{case:?}: scalar {lambda}"),
            U3Case::M3 => {
                let cube = lambda.clone() * lambda.clone() * lambda.clone();
                ensure!(cube == one && lambda != one, "{case:?}: scalar {lambda} is not a nontrivial cube root of 1");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Table of homotopy spheres reproduced", Duration::from_secs(1), table_reproduction),
        ("bP orders and Bernoulli numbers", Duration::from_secs(1), bp_formula),
        ("endomorphism round trip", Duration::from_secs(60), endomorphism_round_trip),
        ("Steinberg relation verification", Duration::from_secs(10), relation_verification),
        ("finite-image counterexample over Q(sqrt(-7))", Duration::from_secs(60), counterexample),
        ("SL_d(Z)-invariants of wedge powers", Duration::from_secs(120), invariants),
        ("H_1 from presentations", Duration::from_secs(5), homology),
        ("mapping class group and splitting coherence", Duration::from_secs(5), mcg_coherence),
        ("rank-one commutator law", Duration::from_secs(10), commutator_law),
        ("exceptional U_3 representations", Duration::from_secs(1), u3_representations),
    ];
    let mut failed = 0;
    for (k, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            if elapsed <= budget {
                Ok(())
            } else {
                Err(format!("took {elapsed:.2?}, budget {budget:.0?}"))
            }
        });
        match result {
            Ok(()) => println!("PASS criterion {}: {name} ({elapsed:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
