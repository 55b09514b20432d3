// Signs of the coefficients of ∏(1-x^n)^s at s = 2u²+u.

use std::error::Error;

use etaforge::identity::{f_polys, kostant_checks};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f = f_polys(4)?;
    for k in 0..=4 {
        println!("f_{k}(s) = {}", f.coeff(k));
    }
    let checks = kostant_checks(6)?;
    for c in checks.iter().filter(|c| c.k == 3) {
        println!("k=3 {:?} at {}: {} pass={}", c.kind, c.at, c.value, c.pass);
    }
    println!("{}/{} checks pass", checks.iter().filter(|c| c.pass).count(), checks.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
