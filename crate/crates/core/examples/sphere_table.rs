// Groups of homotopy spheres, their split subgroups and `bP_{d+1}`.

use sltorus::spheres::{bp_order, render_row, self_check, theta_record};

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}

pub fn run_example() -> sltorus::Result<()> {
    for d in (5..=19).filter(|&d| d != 4) {
        let row = theta_record(d)?;
        println!("{}", render_row(&row));
        println!("  |Theta_{d}| = {}, bP_{} = {}", row.order(), d + 1, bp_order(d)?);
    }
    self_check()?;
    println!("bP_(d+1) divides |Theta_d| on every odd row");
    Ok(())
}
