// Compact sets determined by their maxima, and the product they balance.

use std::error::Error;

use etaforge::bijection::{core_pair_sides, merged_delta, set_e, CompactSet};
use etaforge::family::pairs;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = 2;
    for (sc, dd) in pairs(Some(t + 1), 12).into_iter().filter(|(a, b)| !a.is_empty() || !b.is_empty()) {
        let (e, positives) = set_e(&merged_delta(&sc, &dd), t)?;
        let a = CompactSet::new(e, t)?;
        let (lhs, rhs) = a.balance_sides();
        let (q, hooks) = core_pair_sides(&sc, &dd, t)?;
        println!(
            "({sc}, {dd}) maxima {:?} positives ok {} ∏(e+m)/e = {lhs} = {rhs}, Q = {q} = {hooks}",
            a.maxima,
            a.positives() == positives
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
