// Canonical 0/1 words and the Littlewood decomposition.

use std::error::Error;

use etaforge::partition::Partition;
use etaforge::word::{box_map, littlewood, littlewood_inverse, to_word};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let lam: Partition = "[8,7,6,5,3,2,1]".parse()?;
    let w = to_word(&lam);
    println!("{lam} -> {w} ({:?})", w.form());
    let q = littlewood(&lam, 3)?;
    println!("3-core {} quotient {:?}", q.core, q.quotient.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    println!("rebuilt {}", littlewood_inverse(&q)?);
    for (cell, (k, c)) in box_map(&lam, 3)? {
        println!("  box ({},{}) -> quotient {k} box ({},{})", cell.i, cell.j, c.i, c.j);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
