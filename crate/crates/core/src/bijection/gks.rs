//! The Garvan–Kim–Stanton map from `t`-cores to zero-sum vectors, and its
//! restrictions to self-conjugate and doubled distinct cores.

use serde::Serialize;

use super::{check_core, check_modulus, BijectionError};
use crate::partition::Partition;
use crate::word::{partition_of_bits, to_word};

/// `(n_0, ..., n_{t-1})` with `Σ n_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ChargeVector {
    pub n: Vec<i64>,
    pub modulus: usize,
}

impl ChargeVector {
    /// `(t/2) Σ n_i² + Σ i n_i`, which equals the weight of the core.
    pub fn weight(&self) -> i64 {
        let t = self.modulus as i64;
        let sq: i64 = self.n.iter().map(|x| x * x).sum();
        let lin: i64 = self.n.iter().enumerate().map(|(i, x)| i as i64 * x).sum();
        (t * sq + 2 * lin) / 2
    }
}

/// Reads the charges off the word: on runner `k`, the number of `0`s at
/// nonnegative positions minus the number of `1`s at negative positions.
pub fn gks_phi(lam: &Partition, t: usize) -> Result<ChargeVector, BijectionError> {
    check_modulus(t, 2)?;
    check_core(lam, t)?;
    let w = to_word(lam);
    let mut n = vec![0i64; t];
    for (off, &b) in w.window().iter().enumerate() {
        let p = w.start() + off as i64;
        let k = p.rem_euclid(t as i64) as usize;
        if p >= 0 && b == 0 {
            n[k] += 1;
        } else if p < 0 && b == 1 {
            n[k] -= 1;
        }
    }
    Ok(ChargeVector { n, modulus: t })
}

/// Runner `k` holds a bead at `a t + k` exactly when `a >= n_k`.
pub fn gks_phi_inverse(v: &ChargeVector) -> Result<Partition, BijectionError> {
    let t = v.modulus;
    check_modulus(t, 2)?;
    if v.n.len() != t {
        return Err(BijectionError::Length { expected: t, got: v.n.len() });
    }
    let sum: i64 = v.n.iter().sum();
    if sum != 0 {
        return Err(BijectionError::NonZeroSum(sum));
    }
    let lo = v.n.iter().copied().min().unwrap_or(0).min(0) - 1;
    let hi = v.n.iter().copied().max().unwrap_or(0).max(0) + 1;
    let mut bits = Vec::new();
    for a in lo..hi {
        for &nk in &v.n {
            bits.push(u8::from(a >= nk));
        }
    }
    Ok(partition_of_bits(&bits))
}

/// Slow oracle from the extended residue diagram: the exposed box at the end
/// of row `i` has label `(λ_i - i) mod t` and region `⌊(λ_i - i)/t⌋ + 1`;
/// `n_k` is the largest region carrying label `k`.
pub fn gks_phi_exposed(lam: &Partition, t: usize) -> Vec<i64> {
    let t = t as i64;
    let mut n = vec![i64::MIN; t as usize];
    for i in 1..=(lam.len() as i64 + t) {
        let d = lam.part(i as usize) as i64 - i;
        let k = d.rem_euclid(t) as usize;
        n[k] = n[k].max(d.div_euclid(t) + 1);
    }
    n
}

/// `φ₁`: the last `⌊t/2⌋` charges of a self-conjugate `t`-core.
pub fn phi1(lam: &Partition, t: usize) -> Result<Vec<i64>, BijectionError> {
    if !lam.is_self_conjugate() {
        return Err(BijectionError::NotSelfConjugate(lam.clone()));
    }
    let n = gks_phi(lam, t)?.n;
    Ok(n[t - t / 2..].to_vec())
}

/// Rebuilds the charges from `n_i = -n_{t-1-i}`.
pub fn phi1_inverse(v: &[i64], t: usize) -> Result<Partition, BijectionError> {
    check_modulus(t, 2)?;
    let k = t / 2;
    if v.len() != k {
        return Err(BijectionError::Length { expected: k, got: v.len() });
    }
    let mut n = vec![0i64; t];
    n[t - k..].copy_from_slice(v);
    for i in 0..k {
        n[i] = -n[t - 1 - i];
    }
    gks_phi_inverse(&ChargeVector { n, modulus: t })
}

/// `φ₂`: the last `⌊(t-1)/2⌋` charges of a doubled distinct `t`-core.
pub fn phi2(mu: &Partition, t: usize) -> Result<Vec<i64>, BijectionError> {
    if !mu.is_doubled_distinct() {
        return Err(BijectionError::NotDoubledDistinct(mu.clone()));
    }
    let n = gks_phi(mu, t)?.n;
    Ok(n[t - (t - 1) / 2..].to_vec())
}

/// Rebuilds the charges from `n_0 = 0` and `n_i = -n_{t-i}`.
pub fn phi2_inverse(v: &[i64], t: usize) -> Result<Partition, BijectionError> {
    check_modulus(t, 2)?;
    let k = (t - 1) / 2;
    if v.len() != k {
        return Err(BijectionError::Length { expected: k, got: v.len() });
    }
    let mut n = vec![0i64; t];
    n[t - k..].copy_from_slice(v);
    for i in 1..=k {
        n[i] = -n[t - i];
    }
    gks_phi_inverse(&ChargeVector { n, modulus: t })
}

/// `t‖n‖² + c·n` with `c = (1,3,...,t-1)` for even `t`, `(2,4,...,t-1)` for odd.
pub fn phi1_weight(v: &[i64], t: usize) -> i64 {
    let start = if t.is_multiple_of(2) { 1 } else { 2 };
    quadratic_weight(v, t, start)
}

/// `t‖n‖² + d·n` with `d = (2,4,...,t-2)` for even `t`, `(1,3,...,t-2)` for odd.
pub fn phi2_weight(v: &[i64], t: usize) -> i64 {
    let start = if t.is_multiple_of(2) { 2 } else { 1 };
    quadratic_weight(v, t, start)
}

fn quadratic_weight(v: &[i64], t: usize, start: i64) -> i64 {
    v.iter()
        .enumerate()
        .map(|(k, x)| t as i64 * x * x + (start + 2 * k as i64) * x)
        .sum()
}
