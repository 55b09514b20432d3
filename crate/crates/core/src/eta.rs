//! Eta-type products `∏_k (1 - x^{a k} y^{b k})^e` with symbolic exponents.
//!
//! The `x^{1/24}` prefactor of the Dedekind eta function is never built;
//! identities are normalised so both sides are ordinary power series.

use serde::Serialize;

use crate::poly::{MultiPoly, Var};
use crate::rational::Rational;
use crate::ring::Ring;
use crate::series::{euler_product, PolySeries, PowerSeries, RatSeries, SeriesError};

/// One factor `∏_{k>=1} (1 - x^{scale k} y^{y_power k})^{exponent}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EtaFactor {
    pub scale: usize,
    pub y_power: u32,
    pub exponent: MultiPoly,
}

impl EtaFactor {
    pub fn new(scale: usize, y_power: u32, exponent: impl Into<MultiPoly>) -> Self {
        Self {
            scale,
            y_power,
            exponent: exponent.into(),
        }
    }
}

/// `∏_{k>=1} (1 - x^{scale k} y^{y_power k})` truncated at `order`.
fn base(scale: usize, y_power: u32, order: usize) -> PolySeries {
    if y_power == 0 {
        return euler_product::<Rational>(scale, order).to_poly();
    }
    let y = MultiPoly::var(Var::Y);
    let mut s = PolySeries::one(order);
    let mut k = 1;
    while scale * k <= order {
        let step = scale * k;
        let mono = y.pow(y_power * k as u32);
        for n in (step..=order).rev() {
            let shifted = s.coeff(n - step).mul_ref(&mono);
            let mut c = s.coeff(n).clone();
            c.sub_assign_ref(&shifted);
            s.set_coeff(n, c);
        }
        k += 1;
    }
    s
}

pub fn eta_factor(f: &EtaFactor, order: usize) -> Result<PolySeries, SeriesError> {
    if f.scale == 0 {
        return Err(SeriesError::ZeroScale);
    }
    if f.y_power == 0 {
        if let Some(c) = f.exponent.as_constant() {
            return Ok(eta_factor_rat(f.scale, &c, order)?.to_poly());
        }
    }
    base(f.scale, f.y_power, order).pow_sym(&f.exponent)
}

/// Product of all factors; the empty product is `1`.
pub fn eta_product(spec: &[EtaFactor], order: usize) -> Result<PolySeries, SeriesError> {
    let mut out = PolySeries::one(order);
    for f in spec {
        out = out.mul(&eta_factor(f, order)?)?;
    }
    Ok(out)
}

/// `∏_k (1 - x^{scale k})^e` for a rational exponent.
pub fn eta_factor_rat(scale: usize, e: &Rational, order: usize) -> Result<RatSeries, SeriesError> {
    if scale == 0 {
        return Err(SeriesError::ZeroScale);
    }
    let b = euler_product::<Rational>(scale, order);
    if e.is_integer() {
        let k: i64 = e.to_integer().try_into().expect("exponent fits in i64");
        if k.unsigned_abs() <= 4 {
            return b.pow_int(k);
        }
    }
    b.pow_sym(e)
}

pub fn eta_product_rat(spec: &[(usize, Rational)], order: usize) -> Result<RatSeries, SeriesError> {
    spec.iter().try_fold(PowerSeries::one(order), |acc, (scale, e)| {
        acc.mul(&eta_factor_rat(*scale, e, order)?)
    })
}
