// Smith normal form, exterior powers and quadratic-field arithmetic.

use sltorus::abgroups::structure_from_relations;
use sltorus::matrices::{exterior_power, smith_normal_form, IntMatrix};
use sltorus::scalars::{rat_int, QuadScalar};

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

pub fn run_example() -> sltorus::Result<()> {
    let m = IntMatrix::parse("2,4,4;-6,6,12;10,-4,-16")?;
    let snf = smith_normal_form(&m);
    println!("SNF diagonal of {m}: {:?}", snf.diagonal().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("Z^3 / rows = {}", structure_from_relations(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?);
    let e = IntMatrix::elementary(4, 0, 1);
    println!("Lambda^2 E_12 = {}", exterior_power(&e, 2)?);
    let w = QuadScalar::new(-7, rat_int(1), rat_int(1))?;
    println!("(1+sqrt(-7))^-1 = {}, norm = {}", w.checked_inv()?, w.norm());
    Ok(())
}
