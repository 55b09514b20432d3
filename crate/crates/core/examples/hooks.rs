// Hook lengths, signs and Frobenius coordinates of a doubled distinct partition.

use std::error::Error;

use etaforge::partition::Partition;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let lam: Partition = "[4,2,1,1]".parse()?;
    println!("λ = {lam}, |λ| = {}, durfee {}, δ = {}", lam.weight(), lam.durfee(), lam.delta());
    for s in lam.hook_lengths() {
        println!("  box ({},{}) h = {:>2} ε = {:>2}", s.i, s.j, s.h, s.eps);
    }
    let (arms, legs) = lam.frobenius();
    println!("frobenius arms {arms:?} legs {legs:?}");
    println!("principal hooks {:?}", lam.profile().delta_set);
    println!("{:?}", lam.classify(Some(3)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
