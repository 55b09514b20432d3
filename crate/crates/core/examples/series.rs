// Truncated power series with symbolic exponents.

use std::error::Error;

use etaforge::eta::{eta_product, EtaFactor};
use etaforge::poly::{MultiPoly, Var};
use etaforge::series::{euler_product, RatSeries};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e: RatSeries = euler_product(1, 12);
    println!("∏(1-x^k) = {e}");
    println!("1/∏(1-x^k) = {}", e.invert()?);
    let z = &MultiPoly::var(Var::Z) - &MultiPoly::one();
    let s = eta_product(&[EtaFactor::new(1, 0, z)], 3)?;
    println!("∏(1-x^k)^(z-1) = {s}");
    let y = eta_product(&[EtaFactor::new(3, 2, 1)], 6)?;
    println!("∏(1-x^(3k) y^(2k)) = {y}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
