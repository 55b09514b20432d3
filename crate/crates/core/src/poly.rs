//! Sparse multivariate polynomials with rational coefficients.
//!
//! The variable set is fixed and small: the formal parameters that appear
//! in the hook-length identities. Terms are stored in a `BTreeMap` keyed by
//! exponent vectors; zero coefficients are never stored, so structural
//! equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::rational::{fmt_rational, Rational};

pub const NUM_VARS: usize = 5;

/// Formal parameters, in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    Z,
    Y,
    B,
    S,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::T, Var::Z, Var::Y, Var::B, Var::S];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Z => "z",
            Var::Y => "y",
            Var::B => "b",
            Var::S => "s",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Exponents = [u32; NUM_VARS];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable {0} occurs with an odd exponent; cannot substitute its square")]
    OddPower(Var),
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

fn mono_mul(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = [0; NUM_VARS];
    for i in 0..NUM_VARS {
        out[i] = a[i] + b[i];
    }
    out
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, [0; NUM_VARS])
    }

    pub fn monomial(c: Rational, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NUM_VARS];
        e[v.index()] = 1;
        Self::monomial(Rational::one(), e)
    }

    /// `a + b*v`, the common shape of hook factors.
    pub fn linear(a: Rational, b: Rational, v: Var) -> Self {
        let mut p = Self::constant(a);
        let mut e = [0; NUM_VARS];
        e[v.index()] = 1;
        p.add_term(e, b);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&[0; NUM_VARS])
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0; NUM_VARS]).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Replaces `v` by the polynomial `value`.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Self {
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one()];
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let k = e[v.index()] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = *e;
            rest[v.index()] = 0;
            let term = &MultiPoly::monomial(c.clone(), rest) * &powers[k];
            out = &out + &term;
        }
        out
    }

    pub fn eval(&self, v: Var, value: &Rational) -> Self {
        self.substitute(v, &MultiPoly::constant(value.clone()))
    }

    /// Evaluates every variable; `None` if some variable is left unassigned.
    pub fn eval_all(&self, values: &[(Var, Rational)]) -> Option<Rational> {
        let mut p = self.clone();
        for (v, x) in values {
            p = p.eval(*v, x);
        }
        p.as_constant()
    }

    /// Substitutes `v^2 = u`, which requires every exponent of `v` to be even.
    pub fn substitute_square(&self, v: Var, u: &Rational) -> Result<Self, PolyError> {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let k = e[v.index()];
            if k % 2 != 0 {
                return Err(PolyError::OddPower(v));
            }
            let mut rest = *e;
            rest[v.index()] = 0;
            out.add_term(rest, c * crate::rational::pow(u, (k / 2) as i64));
        }
        Ok(out)
    }

    pub fn rename(&self, from: Var, to: Var) -> Self {
        self.substitute(from, &MultiPoly::var(to))
    }

    /// Terms in canonical order: decreasing total degree, then decreasing
    /// exponent vector in variable order.
    pub fn canonical_terms(&self) -> Vec<(Exponents, Rational)> {
        let mut v: Vec<(Exponents, Rational)> =
            self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.canonical_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e[v.index()] > 0)
                .map(|v| match e[v.index()] {
                    1 => v.name().to_string(),
                    k => format!("{}^{}", v.name(), k),
                })
                .collect();
            if mono.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", fmt_rational(&abs))?;
                }
                f.write_str(&mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::constant(crate::rational::int(n))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(mono_mul(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl crate::ring::Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        MultiPoly::scale(self, r)
    }
    fn from_rational(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
    fn unit_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        if Zero::is_zero(&c) {
            None
        } else {
            Some(MultiPoly::constant(c.recip()))
        }
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                self.add_term(mono_mul(ea, eb), ca * cb);
            }
        }
    }
}
