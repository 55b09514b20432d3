// Charge vectors of t-cores and their self-conjugate and doubled distinct restrictions.

use std::error::Error;

use etaforge::bijection::{gks_phi, gks_phi_inverse, phi1, phi1_inverse, phi2, phi2_inverse};
use etaforge::family::{dd_cores, sc_cores};
use etaforge::partition::Partition;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = 3;
    let core = Partition::new(vec![4, 2])?;
    let v = gks_phi(&core, t)?;
    println!("φ({core}) = {:?}, weight {}", v.n, v.weight());
    println!("back: {}", gks_phi_inverse(&v)?);
    for sc in sc_cores(t, 12) {
        let n = phi1(&sc, t)?;
        println!("φ₁({sc}) = {n:?} -> {}", phi1_inverse(&n, t)?);
    }
    for dd in dd_cores(t, 12) {
        let n = phi2(&dd, t)?;
        println!("φ₂({dd}) = {n:?} -> {}", phi2_inverse(&n, t)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
