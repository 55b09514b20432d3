//! Truncated formal power series in `x` over a coefficient [`Ring`].
//!
//! A series of order `N` carries exactly the coefficients of `x^0..=x^N`;
//! no operation reads or writes past `N`. Multiplication is schoolbook.
//! `exp`/`log` use the usual first-order recurrences, which divide only by
//! positive integers, so any ring containing the rationals works.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::poly::MultiPoly;
use crate::rational::{rat, Rational};
use crate::ring::Ring;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("constant term is not a unit")]
    NonUnit,
    #[error("exp needs a zero constant term")]
    ExpConstantTerm,
    #[error("log needs constant term 1")]
    LogConstantTerm,
    #[error("eta factor scale must be at least 1")]
    ZeroScale,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries<R> {
    coeffs: Vec<R>,
}

pub type RatSeries = PowerSeries<Rational>;
pub type PolySeries = PowerSeries<MultiPoly>;

/// A coefficient that differs between two series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

impl<R: Ring> PowerSeries<R> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, R::one(), order)
    }

    /// `c * x^k`, which is zero if `k > order`.
    pub fn monomial(k: usize, c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Adds `c` to the coefficient of `x^k`; ignored past the order.
    pub fn add_to_coeff(&mut self, k: usize, c: &R) {
        if let Some(slot) = self.coeffs.get_mut(k) {
            slot.add_assign_ref(c);
        }
    }

    pub fn set_coeff(&mut self, k: usize, c: R) {
        if let Some(slot) = self.coeffs.get_mut(k) {
            *slot = c;
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            Err(SeriesError::OrderMismatch(self.order(), other.order()))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign_ref(b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.sub_assign_ref(b);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j].add_product(a, b);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn times(&self, c: &R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or(SeriesError::NonUnit)?;
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc.add_product(&self.coeffs[j], &out.coeffs[k - j]);
            }
            out.coeffs[k] = acc.mul_ref(&inv0).neg_ref();
        }
        Ok(out)
    }

    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpConstantTerm);
        }
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = R::one();
        // k e_k = sum_{j=1..k} j a_j e_{k-j}
        let weighted: Vec<R> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| a.scale(&rat(j as i64, 1)))
            .collect();
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc.add_product(&weighted[j], &out.coeffs[k - j]);
            }
            out.coeffs[k] = acc.scale(&rat(1, k as i64));
        }
        Ok(out)
    }

    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogConstantTerm);
        }
        let n = self.order();
        let mut out = Self::zero(n);
        // k g_k = k f_k - sum_{j=1..k-1} j g_j f_{k-j}
        let mut weighted: Vec<R> = vec![R::zero(); n + 1];
        for k in 1..=n {
            let mut acc = self.coeffs[k].scale(&rat(k as i64, 1));
            for j in 1..k {
                let mut term = R::zero();
                term.add_product(&weighted[j], &self.coeffs[k - j]);
                acc.sub_assign_ref(&term);
            }
            weighted[k] = acc.clone();
            out.coeffs[k] = acc.scale(&rat(1, k as i64));
        }
        Ok(out)
    }

    /// `self^s := exp(s * log(self))` for a ring-valued exponent.
    pub fn pow_sym(&self, s: &R) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnit);
        }
        self.log()?.times(s).exp()
    }

    /// Integer power by repeated multiplication (inverting first if `k < 0`).
    pub fn pow_int(&self, k: i64) -> Result<Self, SeriesError> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut out = Self::one(self.order());
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> PowerSeries<S> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<PowerSeries<S>, E> {
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// First exponent where the two series differ, comparing up to the
    /// smaller order.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(k, (a, b))| Mismatch {
                exponent: k,
                lhs: a.to_string(),
                rhs: b.to_string(),
            })
    }

    /// Dump as `[{"exponent": k, "coefficient": "..."}, ...]` for every
    /// exponent up to the order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    serde_json::json!({ "exponent": k, "coefficient": c.to_string() })
                })
                .collect(),
        )
    }
}

impl RatSeries {
    pub fn to_poly(&self) -> PolySeries {
        self.map(|c| MultiPoly::constant(c.clone()))
    }
}

impl<R: Ring> fmt::Display for PowerSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// `prod_{k>=1} (1 - x^{scale*k})` truncated at `order`, built by
/// multiplying the finitely many nontrivial binomials.
pub fn euler_product<R: Ring>(scale: usize, order: usize) -> PowerSeries<R> {
    let mut s = PowerSeries::<R>::one(order);
    if scale == 0 {
        return PowerSeries::zero(order);
    }
    let mut step = scale;
    while step <= order {
        for n in (step..=order).rev() {
            let lower = s.coeffs[n - step].clone();
            s.coeffs[n].sub_assign_ref(&lower);
        }
        step += scale;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;
    use crate::rational::int;
    use proptest::prelude::*;

    fn rs(v: &[i64], order: usize) -> RatSeries {
        RatSeries::from_coeffs(v.iter().map(|&c| int(c)).collect(), order)
    }

    /// Number of partitions of n, by brute-force enumeration of part lists.
    fn partition_count(n: usize) -> i64 {
        fn go(rest: usize, max: usize) -> i64 {
            if rest == 0 {
                return 1;
            }
            (1..=max.min(rest)).map(|p| go(rest - p, p)).sum()
        }
        go(n, n)
    }

    #[test]
    fn unit_law() {
        let a = rs(&[1, 3, -2, 5, 7], 4);
        assert_eq!(a.mul(&a.invert().unwrap()).unwrap(), RatSeries::one(4));
    }

    #[test]
    fn inverse_of_euler_product_counts_partitions() {
        let order = 15;
        let p = euler_product::<Rational>(1, order).invert().unwrap();
        let expected: Vec<i64> = (0..=order).map(partition_count).collect();
        assert_eq!(&expected[..8], &[1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(p, rs(&expected, order));
    }

    #[test]
    fn geometric_telescoping() {
        let n = 9;
        let one_minus_x = rs(&[1, -1], n);
        let geo = rs(&vec![1; n + 1], n);
        assert_eq!(one_minus_x.mul(&geo).unwrap(), RatSeries::one(n));
    }

    #[test]
    fn errors() {
        let a = rs(&[1, 1], 3);
        let b = rs(&[1, 1], 4);
        assert_eq!(a.mul(&b), Err(SeriesError::OrderMismatch(3, 4)));
        assert_eq!(rs(&[0, 1], 3).invert(), Err(SeriesError::NonUnit));
        assert_eq!(rs(&[1, 1], 3).exp(), Err(SeriesError::ExpConstantTerm));
        assert_eq!(rs(&[2, 1], 3).log(), Err(SeriesError::LogConstantTerm));
        assert_eq!(rs(&[2, 1], 3).pow_sym(&int(2)), Err(SeriesError::NonUnit));
    }

    #[test]
    fn exp_log_identities() {
        assert_eq!(RatSeries::zero(6).exp().unwrap(), RatSeries::one(6));
        assert_eq!(RatSeries::one(6).log().unwrap(), RatSeries::zero(6));
    }

    #[test]
    fn log_of_partition_generating_function() {
        // log prod 1/(1-x^k) = sum_k x^k / (k (1 - x^k)) = sum_k sum_j x^{kj}/k
        let order = 20;
        let lhs = euler_product::<Rational>(1, order).invert().unwrap().log().unwrap();
        let mut rhs = RatSeries::zero(order);
        for k in 1..=order {
            let mut j = 1;
            while k * j <= order {
                rhs.add_to_coeff(k * j, &rat(1, k as i64));
                j += 1;
            }
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pow_sym_examples() {
        let n = 8;
        assert_eq!(rs(&[1, -1, 4], n).pow_sym(&int(0)).unwrap(), RatSeries::one(n));
        assert_eq!(rs(&[1, -1], n).pow_sym(&int(-1)).unwrap(), rs(&vec![1; n + 1], n));
        // x^1 coefficient of prod(1-x^k)^(z-1) is 1 - z
        let z_minus_1 = &MultiPoly::var(Var::Z) - &MultiPoly::one();
        let e = euler_product::<MultiPoly>(1, 4).pow_sym(&z_minus_1).unwrap();
        assert_eq!(e.coeff(1), &(&MultiPoly::one() - &MultiPoly::var(Var::Z)));
    }

    fn unit_series(order: usize) -> impl Strategy<Value = RatSeries> {
        prop::collection::vec((-6i64..6, 1i64..5), order).prop_map(move |cs| {
            let mut v = vec![int(1)];
            v.extend(cs.into_iter().map(|(p, q)| rat(p, q)));
            RatSeries::from_coeffs(v, order)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn exp_inverts_log(f in unit_series(20)) {
            prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
        }

        #[test]
        fn pow_sym_matches_integer_powers(f in unit_series(12), k in -3i64..5) {
            prop_assert_eq!(f.pow_sym(&int(k)).unwrap(), f.pow_int(k).unwrap());
        }

        #[test]
        fn pow_sym_is_additive(f in unit_series(12), a in -4i64..4, b in 1i64..4) {
            let s1 = rat(a, b);
            let s2 = rat(b, 3);
            let lhs = f.pow_sym(&s1).unwrap().mul(&f.pow_sym(&s2).unwrap()).unwrap();
            prop_assert_eq!(lhs, f.pow_sym(&(s1 + s2)).unwrap());
        }

        #[test]
        fn ring_laws(a in unit_series(8), b in unit_series(8), c in unit_series(8)) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }
    }
}
