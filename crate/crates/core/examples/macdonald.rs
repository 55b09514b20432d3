// Lattice sums in types A, C, B and BC against powers of ∏(1-x^k).

use std::error::Error;

use etaforge::eta::eta_factor_rat;
use etaforge::identity::{macdonald_sum, MacType};
use etaforge::rational::int;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (ty, t) in [(MacType::A, 3), (MacType::C, 2), (MacType::B, 3), (MacType::BC, 2)] {
        let s = macdonald_sum(ty, t, 8)?;
        let p = eta_factor_rat(1, &int(ty.dimension(t)), 8)?;
        println!("{ty} t={t} dim {}: {} (equal: {})", ty.dimension(t), s, s == p);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
