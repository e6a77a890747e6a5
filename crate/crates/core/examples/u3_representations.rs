// Representations of `U_3(Z)` in which `E_13` acts by a nontrivial scalar.

use sltorus::scalars::{rat, rat_int, QuadScalar};
use sltorus::steinberg::{u3_exceptional_rep, u3_relations, GenSymbol, U3Case};

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

pub fn run_example() -> sltorus::Result<()> {
    let cases = [
        (U3Case::M2, QuadScalar::from_rational(-3, rat(2, 3))?, QuadScalar::from_rational(-3, rat_int(5))?),
        (U3Case::M3, QuadScalar::from_rational(-3, rat_int(1))?, QuadScalar::new(-3, rat_int(1), rat_int(1))?),
    ];
    for (case, mu, nu) in cases {
        let h = u3_exceptional_rep(case, &mu, &nu)?;
        let ok = u3_relations().iter().map(|w| h.evaluate_word(w)).collect::<sltorus::Result<Vec<_>>>()?;
        let center = h.image(GenSymbol::new(1, 3, 3)?)?;
        println!(
            "{case:?}: relations hold = {}, E13 -> {center}, unipotent = {}",
            ok.iter().all(|m| m.is_identity()),
            center.is_unipotent()
        );
    }
    Ok(())
}
