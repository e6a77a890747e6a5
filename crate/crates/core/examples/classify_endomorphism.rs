// Recover the conjugator of a twisted automorphism of `SL_d(Z)`.

use sltorus::endoclass::{classify_endomorphism_report, random_gl_matrix, seeded_rng};
use sltorus::steinberg::HomCandidate;

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

pub fn run_example() -> sltorus::Result<()> {
    let mut rng = seeded_rng(42);
    let c = random_gl_matrix(4, 20, &mut rng);
    println!("hidden conjugator C = {c}");
    let h = HomCandidate::conjugated_candidate(&c)?.precompose_inverse_transpose()?;
    let report = classify_endomorphism_report(&h)?;
    for s in &report.stages {
        println!("  {s}");
    }
    println!("{}", report.verdict);
    Ok(())
}
