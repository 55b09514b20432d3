//! Macdonald lattice sums in types Ã, C̃, B̃ and B̃C.
//!
//! Each sum runs over congruence-constrained integer vectors `v` with the
//! term `c · w(v) · x^{‖v‖²/D - offset}`; the offset is the modular
//! exponent of the matching power of eta, so every exponent must land on a
//! nonnegative integer.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::bijection::c1;
use crate::rational::{factorial, int, rat, sign_pow, Rational};
use crate::series::RatSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MacType {
    A,
    C,
    B,
    BC,
}

impl MacType {
    pub const ALL: [MacType; 4] = [MacType::A, MacType::C, MacType::B, MacType::BC];

    pub fn name(self) -> &'static str {
        match self {
            MacType::A => "A",
            MacType::C => "C",
            MacType::B => "B",
            MacType::BC => "BC",
        }
    }

    /// The power of `∏(1 - x^k)` on the product side.
    pub fn dimension(self, t: usize) -> i64 {
        let t = t as i64;
        match self {
            MacType::A => t * t - 1,
            MacType::C | MacType::B => 2 * t * t + t,
            MacType::BC => 2 * t * t - t,
        }
    }

    /// `dimension / 24`.
    pub fn offset(self, t: usize) -> Rational {
        rat(self.dimension(t), 24)
    }

    fn denominator(self, t: usize) -> i64 {
        let t = t as i64;
        match self {
            MacType::A => 2 * t,
            MacType::C => 4 * t + 4,
            MacType::B => 8 * (2 * t - 1),
            MacType::BC => 8 * (2 * t + 1),
        }
    }

    fn check(self, t: usize) -> Result<(), MacError> {
        let ok = match self {
            MacType::A => t >= 3 && t % 2 == 1,
            MacType::C => t >= 2,
            MacType::B => t >= 3,
            MacType::BC => t >= 1,
        };
        if ok {
            Ok(())
        } else {
            let need = match self {
                MacType::A => "an odd t >= 3",
                MacType::C => "t >= 2",
                MacType::B => "t >= 3",
                MacType::BC => "t >= 1",
            };
            Err(MacError::Parameter { ty: self, t, need })
        }
    }

    /// The normalising constant: `c₀` for Ã, `c₁` for C̃, and for B̃, B̃C the
    /// reciprocal of the weight of `(1, 3, ..., 2t-1)`.
    pub fn constant(self, t: usize) -> Rational {
        match self {
            MacType::A => {
                let den = (1..t as u64).fold(BigInt::one(), |acc, k| acc * factorial(k));
                Rational::new(sign_pow((t as i64 - 1) / 2).into(), den)
            }
            MacType::C => c1(t),
            MacType::B | MacType::BC => {
                let base: Vec<i64> = (1..=t as i64).map(|i| 2 * i - 1).collect();
                weight(self, t, &base).recip()
            }
        }
    }
}

impl fmt::Display for MacType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MacType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MacType::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown Macdonald type `{s}`"))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MacError {
    #[error("type {ty} needs {need}, got t = {t}")]
    Parameter { ty: MacType, t: usize, need: &'static str },
    #[error("vector {0:?} has exponent {1}, not a nonnegative integer")]
    Offset(Vec<i64>, String),
    #[error("enlarging the search box found new terms")]
    Incomplete,
}

/// Per-coordinate residues and modulus of the admissible vectors.
fn congruences(ty: MacType, t: usize) -> (Vec<i64>, i64) {
    let t = t as i64;
    match ty {
        MacType::A => ((0..t).collect(), t),
        MacType::C => ((1..=t).collect(), 2 * t + 2),
        MacType::B => ((1..=t).map(|i| 2 * i - 1).collect(), 4 * t - 2),
        MacType::BC => ((1..=t).map(|i| 2 * i - 1).collect(), 4 * t + 2),
    }
}

fn admissible(ty: MacType, t: usize, v: &[i64]) -> bool {
    match ty {
        MacType::A => v.iter().sum::<i64>() == 0,
        MacType::B => {
            let (res, m) = congruences(ty, t);
            v.iter().zip(&res).map(|(x, r)| (x - r) / m).sum::<i64>() % 2 == 0
        }
        MacType::C | MacType::BC => true,
    }
}

/// `w(v)` without the constant.
fn weight(ty: MacType, t: usize, v: &[i64]) -> Rational {
    let mut w = BigInt::one();
    for (a, &x) in v.iter().enumerate() {
        if matches!(ty, MacType::C | MacType::B) {
            w *= x;
        }
        for &y in &v[a + 1..] {
            w *= match ty {
                MacType::A => x - y,
                _ => x * x - y * y,
            };
        }
    }
    if ty == MacType::BC {
        let s: i64 = v.iter().sum();
        w *= sign_pow((s - t as i64) / 2);
    }
    Rational::from_integer(w)
}

/// Every admissible vector with all coordinates in `[-radius, radius]`.
fn vectors(ty: MacType, t: usize, radius: i64) -> Vec<Vec<i64>> {
    let (res, m) = congruences(ty, t);
    let axes: Vec<Vec<i64>> = res
        .iter()
        .map(|&r| {
            let lo = (-radius - r).div_euclid(m) + 1;
            let hi = (radius - r).div_euclid(m);
            (lo..=hi).map(|k| k * m + r).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    fn rec(axes: &[Vec<i64>], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == axes.len() {
            out.push(cur.clone());
            return;
        }
        for &x in &axes[cur.len()] {
            cur.push(x);
            rec(axes, cur, out);
            cur.pop();
        }
    }
    rec(&axes, &mut cur, &mut out);
    out.retain(|v| admissible(ty, t, v));
    out
}

fn sum_in_box(ty: MacType, t: usize, order: usize, radius: i64) -> Result<(RatSeries, usize), MacError> {
    let den = ty.denominator(t);
    let off = ty.offset(t);
    let c = ty.constant(t);
    let mut s = RatSeries::zero(order);
    let mut terms = 0;
    for v in vectors(ty, t, radius) {
        let norm: i64 = v.iter().map(|x| x * x).sum();
        let e = rat(norm, den) - &off;
        if !e.is_integer() || e < Rational::zero() {
            return Err(MacError::Offset(v, e.to_string()));
        }
        let e: i64 = e.to_integer().try_into().expect("small exponent");
        if e as usize > order {
            continue;
        }
        let w = weight(ty, t, &v);
        if w.is_zero() {
            continue;
        }
        s.add_to_coeff(e as usize, &(&w * &c));
        terms += 1;
    }
    Ok((s, terms))
}

/// The radius where `‖v‖² / D - offset <= order` can still hold.
fn radius(ty: MacType, t: usize, order: usize) -> i64 {
    let bound = (int(order as i64) + ty.offset(t)) * int(ty.denominator(t));
    let b: i64 = bound.floor().to_integer().try_into().expect("small bound");
    b.sqrt() + 1
}

/// The normalised sum, truncated at `order`. The enumeration box is enlarged
/// once and must not produce new terms.
pub fn macdonald_sum(ty: MacType, t: usize, order: usize) -> Result<RatSeries, MacError> {
    ty.check(t)?;
    let r = radius(ty, t, order);
    let (s, n) = sum_in_box(ty, t, order, r)?;
    let (s2, n2) = sum_in_box(ty, t, order, 2 * r + congruences(ty, t).1)?;
    if s != s2 || n != n2 {
        return Err(MacError::Incomplete);
    }
    Ok(s)
}
