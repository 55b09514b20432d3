// Pairs of self-conjugate and doubled distinct cores as integer vectors.

use std::error::Error;

use etaforge::bijection::{delta_profile, hook_product_poly, merged_delta, q_delta_poly, varphi, varphi_inverse};
use etaforge::family::pairs;
use etaforge::partition::pair_to_nu;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = 2;
    for (sc, dd) in pairs(Some(t + 1), 8) {
        let v = varphi(&sc, &dd, t)?;
        let delta = merged_delta(&sc, &dd);
        let prof = delta_profile(&delta, t);
        let (l, m) = varphi_inverse(&v)?;
        println!(
            "({sc}, {dd}) Δ = {delta:?} Δ_i = {:?} σ_i = {:?} n = {:?} v = {:?} back ({l}, {m})",
            prof.values,
            prof.signs,
            v.n,
            v.macdonald_vector()
        );
    }
    for (sc, dd) in pairs(None, 4) {
        let nu = pair_to_nu(&sc, &dd)?;
        let q = q_delta_poly(&merged_delta(&sc, &dd));
        println!("({sc}, {dd}) -> ν = {nu}, Q(t) = {q}, matches hooks of ν: {}", q == hook_product_poly(&nu));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
