// `SL_d(Z)`-invariants of `Λ^r Z^d ⊗ Z/n`.

use sltorus::mcg::{brute_force_fixed_count, torelli_invariants};

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

pub fn run_example() -> sltorus::Result<()> {
    for (d, r, n) in [(3, 1, 2), (3, 3, 5), (4, 2, 3), (5, 2, 6), (4, 0, 4)] {
        let inv = torelli_invariants(d, r, n)?;
        let brute = brute_force_fixed_count(d, r, n, 1_000_000)?
            .map_or("too many vectors".to_string(), |c| format!("{c} fixed vectors"));
        println!("d={d} r={r} n={n}: {} generator(s), factors {:?}; brute force: {brute}", inv.count(), inv.factors);
    }
    Ok(())
}
