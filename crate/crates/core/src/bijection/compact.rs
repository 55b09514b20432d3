//! `2t+2`-compact sets and the product identities they carry.
//!
//! A compact set contains `-1, ..., -(2t+1)`, no multiple of `m = 2t+2`, and
//! is closed under subtracting `m` down to the negatives. It is determined
//! by its maxima, one per nonzero residue class.

use std::collections::BTreeSet;

use num_traits::One;
use serde::Serialize;

use super::{delta_profile, merged_delta, varphi, BijectionError};
use crate::partition::Partition;
use crate::poly::{MultiPoly, Var};
use crate::rational::{factorial, int, rat, sign_pow, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactSet {
    pub modulus: usize,
    pub maxima: Vec<i64>,
}

impl CompactSet {
    /// Validates `2t+1` maxima with distinct nonzero residues, each above
    /// `-(2t+2)`.
    pub fn new(mut maxima: Vec<i64>, t: usize) -> Result<Self, BijectionError> {
        let m = 2 * t as i64 + 2;
        if maxima.len() != 2 * t + 1 {
            return Err(BijectionError::Maxima(format!(
                "need {} elements, got {}",
                2 * t + 1,
                maxima.len()
            )));
        }
        let residues: BTreeSet<i64> = maxima.iter().map(|e| e.rem_euclid(m)).collect();
        if residues.len() != maxima.len() || residues.contains(&0) {
            return Err(BijectionError::Maxima("residues must be distinct and nonzero".into()));
        }
        if let Some(e) = maxima.iter().find(|&&e| e <= -m) {
            return Err(BijectionError::Maxima(format!("{e} is below -{m}")));
        }
        maxima.sort_unstable();
        Ok(Self { modulus: m as usize, maxima })
    }

    pub fn positives(&self) -> Vec<i64> {
        let m = self.modulus as i64;
        let mut out: Vec<i64> = self
            .maxima
            .iter()
            .flat_map(|&e| (0..).map(move |k| e - k * m).take_while(|&a| a > 0))
            .collect();
        out.sort_unstable();
        out
    }

    /// `(∏_{e ∈ E} (e+m)/e, -∏_{a > 0} (1 - (m/a)²))`, equal for every
    /// compact set.
    pub fn balance_sides(&self) -> (Rational, Rational) {
        let m = self.modulus as i64;
        let lhs = self
            .maxima
            .iter()
            .fold(Rational::one(), |acc, &e| acc * rat(e + m, e));
        let rhs = -self.positives().iter().fold(Rational::one(), |acc, &a| {
            acc * (int(1) - rat(m * m, a * a))
        });
        (lhs, rhs)
    }
}

/// Maxima of the compact set attached to `Δ`, and its positive part
/// `{h11 + τ_j j : 1 <= j < h11}` with `τ_j = +1` iff `j ∈ Δ`.
pub fn set_e(delta: &[usize], t: usize) -> Result<(Vec<i64>, Vec<i64>), BijectionError> {
    let h11 = *delta.iter().max().ok_or(BijectionError::EmptyDelta)? as i64;
    let m = 2 * t as i64 + 2;
    let prof = delta_profile(delta, t);
    let i0 = prof.values.iter().position(|&d| d == h11);
    let mut e = vec![h11 - m / 2, h11 - m, 2 * h11 - m];
    for (k, &d) in prof.values.iter().enumerate() {
        if Some(k) != i0 {
            e.push(h11 + d);
            e.push(h11 - d - m);
        }
    }
    e.sort_unstable();
    let mut positives: Vec<i64> = (1..h11)
        .map(|j| if delta.contains(&(j as usize)) { h11 + j } else { h11 - j })
        .collect();
    positives.sort_unstable();
    Ok((e, positives))
}

/// `(-1)^{⌊t/2⌋} / (1! 3! ... (2t-1)!)`.
pub fn c1(t: usize) -> Rational {
    let den = (1..=t as u64).fold(num_bigint::BigInt::one(), |acc, k| acc * factorial(2 * k - 1));
    Rational::new(sign_pow((t / 2) as i64).into(), den)
}

fn tau(delta: &[usize], j: usize) -> i64 {
    if delta.contains(&j) {
        1
    } else {
        -1
    }
}

/// `∏_{h∈Δ} (1 - (2t+2)/h)(1 - (t+1)/h) ∏_{j<h} (1 - ((2t+2)/(h + τ_j j))²)`
/// at a rational `t`.
pub fn q_delta(delta: &[usize], t: &Rational) -> Rational {
    let one = Rational::one();
    let tt = t + &one;
    let m = &tt * int(2);
    let mut acc = one.clone();
    for &h in delta {
        let hr = int(h as i64);
        acc *= (&one - &m / &hr) * (&one - &tt / &hr);
        for j in 1..h {
            let d = int(h as i64 + tau(delta, j) * j as i64);
            let r = &m / d;
            acc *= &one - &r * &r;
        }
    }
    acc
}

/// The same product as a polynomial in `t`.
pub fn q_delta_poly(delta: &[usize]) -> MultiPoly {
    let lin = |c: Rational| MultiPoly::linear(int(1) - &c, -c, Var::T);
    let mut acc = MultiPoly::one();
    for &h in delta {
        let hr = h as i64;
        acc = &acc * &lin(rat(2, hr));
        acc = &acc * &lin(rat(1, hr));
        for j in 1..h {
            let c = rat(2, hr + tau(delta, j) * j as i64);
            acc = &acc * &lin(c.clone());
            acc = &acc * &lin(-c);
        }
    }
    acc
}

/// `∏_{h ∈ H(ν)} (1 - (2t+2)/(h ε_h))` as a polynomial in `t`.
pub fn hook_product_poly(nu: &Partition) -> MultiPoly {
    nu.hook_lengths().iter().fold(MultiPoly::one(), |acc, s| {
        let c = rat(2, s.signed());
        &acc * &MultiPoly::linear(int(1) - &c, -c, Var::T)
    })
}

/// Both sides of the product identity for a pair of `(t+1)`-cores:
/// `∏ v_i ∏_{i<j} (v_i² - v_j²)` with `v = (2t+2)n + (1..t)`, and
/// `δ_λ δ_μ / c₁ · Q(Δ)`.
pub fn core_pair_sides(lambda: &Partition, mu: &Partition, t: usize) -> Result<(Rational, Rational), BijectionError> {
    let v = varphi(lambda, mu, t)?.macdonald_vector();
    let mut lhs = Rational::one();
    for (a, &x) in v.iter().enumerate() {
        lhs *= int(x);
        for &y in &v[a + 1..] {
            lhs *= int(x * x - y * y);
        }
    }
    let sign = int(lambda.delta() as i64 * mu.delta() as i64);
    let rhs = sign / c1(t) * q_delta(&merged_delta(lambda, mu), &int(t as i64));
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::pairs;
    use crate::partition::{p, pair_to_nu};
    use proptest::prelude::*;

    #[test]
    fn all_negative_maxima() {
        for t in 1..5 {
            let e: Vec<i64> = (1..=2 * t as i64 + 1).map(|k| -k).collect();
            let a = CompactSet::new(e, t).unwrap();
            assert!(a.positives().is_empty());
            assert_eq!(a.balance_sides(), (int(-1), int(-1)));
        }
    }

    #[test]
    fn rejects_bad_maxima() {
        assert!(CompactSet::new(vec![-1, -2], 2).is_err());
        assert!(CompactSet::new(vec![-1, -2, -3, -4, 5], 2).is_err());
        assert!(CompactSet::new(vec![-1, -2, -3, -4, -6], 2).is_err());
        assert!(CompactSet::new(vec![-1, -2, -3, -4, -11], 2).is_err());
    }

    #[test]
    fn set_e_examples() {
        let (e, pos) = set_e(&[2], 2).unwrap();
        assert_eq!(e, vec![-4, -3, -2, -1, 1]);
        assert_eq!(pos, vec![1]);
        assert_eq!(CompactSet::new(e, 2).unwrap().positives(), pos);
        let (e, _) = set_e(&[13, 8, 7, 2, 1], 2).unwrap();
        assert!(e.contains(&10) && e.contains(&7) && e.contains(&20));
        assert!(e.contains(&21) && e.contains(&-1));
        assert!(set_e(&[1], 2).unwrap().1.is_empty());
        assert_eq!(set_e(&[2, 1], 2).unwrap().1, vec![3]);
        assert_eq!(set_e(&[], 2), Err(BijectionError::EmptyDelta));
    }

    #[test]
    fn set_e_is_a_compact_set_of_the_right_positives() {
        for t in 2..=4 {
            for (l, m) in pairs(Some(t + 1), 24).into_iter().skip(1) {
                let d = merged_delta(&l, &m);
                let (e, pos) = set_e(&d, t).unwrap();
                let a = CompactSet::new(e, t).unwrap();
                assert_eq!(a.positives(), pos, "Δ={d:?} t={t}");
                let (x, y) = a.balance_sides();
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn macdonald_constant() {
        assert_eq!(c1(2), rat(-1, 6));
        assert_eq!(c1(3), rat(-1, 720));
        // base term ∏ i ∏ (i² - j²) equals 1/c₁
        for t in 1..6i64 {
            let mut w = int(1);
            for i in 1..=t {
                w *= int(i);
                for j in i + 1..=t {
                    w *= int(i * i - j * j);
                }
            }
            assert_eq!(w, c1(t as usize).recip());
        }
    }

    #[test]
    fn core_pair_product_on_example() {
        let (a, b) = core_pair_sides(&p(&[7, 5, 3, 2, 2, 1, 1]), &p(&[5, 3, 1, 1]), 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn q_matches_nu_product() {
        let l = p(&[3, 1, 1]);
        let m = p(&[2]);
        let nu = pair_to_nu(&l, &m).unwrap();
        let q = q_delta_poly(&merged_delta(&l, &m));
        assert_eq!(q, hook_product_poly(&nu));
        assert_eq!(q.eval_all(&[(Var::T, rat(5, 3))]).unwrap(), q_delta(&merged_delta(&l, &m), &rat(5, 3)));
    }

    proptest! {
        #[test]
        fn balance_on_random_maxima(t in 2usize..5, seed in prop::collection::vec((0i64..4, 0u32..1000), 9)) {
            let m = 2 * t as i64 + 2;
            let mut classes: Vec<i64> = (1..m).collect();
            // a seeded permutation picks which classes get lifted
            for (k, (_, r)) in seed.iter().enumerate() {
                let len = classes.len();
                classes.swap(k % len, *r as usize % len);
            }
            let e: Vec<i64> = classes
                .iter()
                .enumerate()
                .map(|(k, &r)| r - m + m * seed[k % seed.len()].0)
                .collect();
            let a = CompactSet::new(e, t).unwrap();
            let (x, y) = a.balance_sides();
            prop_assert_eq!(x, y);
        }
    }
}
