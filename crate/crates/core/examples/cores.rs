// Ribbon removal down to a t-core, and building partitions from principal hooks.

use std::error::Error;

use etaforge::partition::Partition;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let lam: Partition = "[7,6,4,2,2,1]".parse()?;
    for t in 2..=5 {
        println!("{t}-core of {lam}: {}", lam.t_core(t)?);
    }
    let mu0: Partition = "[3,1]".parse()?;
    let dd = Partition::dd_double(&mu0)?;
    println!("doubled {mu0} -> {dd}, undoubled back to {}", dd.dd_undouble()?);
    println!("SC from hooks [7,3]: {}", Partition::sc_from_hooks(&[7, 3])?);
    println!("DD from hooks [8,2]: {}", Partition::dd_from_hooks(&[8, 2])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
