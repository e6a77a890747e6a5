// Which exotic tori `T^d # Σ` have a split homology action.

use sltorus::mcg::{splitting_decision, Torus};
use sltorus::spheres::theta_record;

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

pub fn run_example() -> sltorus::Result<()> {
    for d in [7, 8, 9, 17] {
        let theta = theta_record(d)?.theta;
        for sigma in theta.elements()?.into_iter().take(4) {
            let v = splitting_decision(d, &Torus::ConnectedSum(sigma))?;
            println!("d={d:<2} split={:<5} {}", v.split, v.reason);
        }
    }
    let v = splitting_decision(11, &Torus::NotConnectedSum)?;
    println!("d=11 fake torus not of the form T^d # Σ: split={} ({})", v.split, v.reason);
    Ok(())
}
