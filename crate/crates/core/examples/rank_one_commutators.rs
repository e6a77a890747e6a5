// Commutators of rank-one unipotents `id + l h^T`.

use sltorus::endoclass::{classify_transvection, predict_commutator, rank_one_unipotent};
use sltorus::scalars::{rat_int, Rational};

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat_int(x)).collect()
}

pub fn run_example() -> sltorus::Result<()> {
    let cases = [
        ((v(&[0, 1, 0]), v(&[1, 0, 0])), (v(&[0, 0, 1]), v(&[0, 1, 0]))),
        ((v(&[0, 0, 1]), v(&[0, 1, 0])), (v(&[0, 1, 0]), v(&[1, 0, 0]))),
        ((v(&[0, 1, 0]), v(&[1, 0, 0])), (v(&[0, 0, 1]), v(&[1, 0, 0]))),
        ((v(&[0, 1, 0]), v(&[1, 0, 0])), (v(&[1, 0, 0]), v(&[0, 1, 0]))),
    ];
    for ((h, l), (h2, l2)) in cases {
        let c = rank_one_unipotent(&h, &l)?.commutator(&rank_one_unipotent(&h2, &l2)?)?;
        println!("computed {}  predicted {}", classify_transvection(&c), predict_commutator((&h, &l), (&h2, &l2)));
    }
    Ok(())
}
