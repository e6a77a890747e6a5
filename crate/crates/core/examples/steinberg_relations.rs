// Check Steinberg relations for candidate homomorphisms out of `SL_d(Z)`.

use sltorus::matrices::RatMatrix;
use sltorus::scalars::rat_int;
use sltorus::steinberg::{steinberg_relations, GenSymbol, HomCandidate, ScalarDomain};

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

pub fn run_example() -> sltorus::Result<()> {
    for w in steinberg_relations(3)?.iter().take(3) {
        println!("relator {w}");
    }
    for d in 3..=5 {
        let id = HomCandidate::identity_candidate(d)?;
        let it = HomCandidate::inverse_transpose_candidate(d)?;
        println!("d={d} identity: {}, inverse-transpose: {}", id.verify_hom()?, it.verify_hom()?);
    }
    // Bump one entry of the image of E_12 above the diagonal.
    let mut images = HomCandidate::identity_candidate(3)?.images().clone();
    let e12 = GenSymbol::new(1, 2, 3)?;
    let mut m: RatMatrix = images[&e12].clone();
    m.set(0, 2, m.get(0, 2).clone() + rat_int(1));
    images.insert(e12, m);
    let bad = HomCandidate::new(3, ScalarDomain::Integer, images)?;
    println!("corrupted: {}", bad.verify_hom()?);
    Ok(())
}
