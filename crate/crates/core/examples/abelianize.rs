// First homology of `SL_d(Z)` from presentations.

use sltorus::abgroups::{abelianize_presentation, sl2_amalgam_presentation};
use sltorus::steinberg::steinberg_presentation;

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

pub fn run_example() -> sltorus::Result<()> {
    let (gens, rels) = sl2_amalgam_presentation();
    println!("H_1(SL_2(Z)) = {}", abelianize_presentation(&gens, &rels)?);
    for d in 3..=5 {
        let (gens, rels) = steinberg_presentation(d)?;
        println!("H_1(SL_{d}(Z)) = {} ({} generators, {} relators)", abelianize_presentation(&gens, &rels)?, gens.len(), rels.len());
    }
    Ok(())
}
