// The whole registry at the quick profile.

use std::error::Error;

use etaforge::identity::{registry, run_all, Profile};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let instances = registry(Profile::Quick);
    let reports = run_all(&instances)?;
    for r in &reports {
        println!("{:<12} {:<24} order {:>2} {:?}", r.identity, serde_json::to_string(&r.params)?, r.order, r.status);
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed}/{} passed", reports.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
