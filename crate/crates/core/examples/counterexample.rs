// A nontrivial homomorphism `SL_3(Z) -> GL_3(Q(sqrt(-7)))` with finite image.

use sltorus::steinberg::{build_counterexample_rep, closure_order};

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

pub fn run_example() -> sltorus::Result<()> {
    let h = build_counterexample_rep();
    println!("{h}");
    println!("relations: {}", h.verify_hom()?);
    println!("image order: {}", closure_order(&h, 1_000_000)?);
    Ok(())
}
