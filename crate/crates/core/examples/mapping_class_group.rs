// Mapping class groups of exotic tori `T^d # Σ`.

use sltorus::mcg::{eta_sigma_witness, mcg_structure, omega};
use sltorus::spheres::theta_record;

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

pub fn run_example() -> sltorus::Result<()> {
    println!("Omega for d = 7:\n{}\n", omega(7)?.render());
    for d in [7, 8] {
        let sigma = theta_record(d)?.theta.generators()[0].clone();
        let eta = eta_sigma_witness(d, &sigma)?;
        println!("d = {d}, Sigma = {sigma}, eta.Sigma = {eta}:");
        println!("{}\n", mcg_structure(d, &sigma, &eta)?);
    }
    Ok(())
}
