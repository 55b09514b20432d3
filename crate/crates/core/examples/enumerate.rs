// Enumerating partition families up to a weight.

use std::error::Error;

use etaforge::family::{dd_core_count, enumerate, Family, FamilySpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (family, t) in [(Family::Dd, None), (Family::DdTCore, Some(3)), (Family::ScXDdPairs, Some(3))] {
        let members = enumerate(&FamilySpec { family, t, max_weight: 6 })?;
        println!("{family} (t = {t:?}): {} members up to weight 6", members.len());
    }
    println!("DD 3-cores of weight 2: {}", dd_core_count(3, 2));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
