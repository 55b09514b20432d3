// Verifying registry identities and printing their reports.

use std::error::Error;

use etaforge::identity::{verify, IdentityId, Params};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (id, params, order) in [
        (IdentityId::No, Params::default(), 8),
        (IdentityId::Thm1, Params::default(), 8),
        (IdentityId::Thm2, Params::t(3), 6),
        (IdentityId::CorExp, Params::t(3), 6),
    ] {
        println!("{}", id.formula());
        let report = verify(id, &params, order)?;
        println!("{}", serde_json::to_string(&report)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
