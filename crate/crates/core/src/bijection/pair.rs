//! The map `φ` from pairs in `SC_(t+1) × DD_(t+1)` to `Z^t`, described both
//! through `φ₁`/`φ₂` and through the merged principal hooks `Δ`.

use serde::Serialize;

use super::{check_core, check_modulus, phi1, phi2, BijectionError};
use crate::partition::Partition;

/// `(n_1, ..., n_t)`; the cores live at modulus `t + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairVector {
    pub n: Vec<i64>,
    pub t: usize,
}

impl PairVector {
    /// `(t+1)‖n‖² + Σ i n_i`.
    pub fn weight(&self) -> i64 {
        let tt = self.t as i64 + 1;
        self.n
            .iter()
            .enumerate()
            .map(|(k, x)| tt * x * x + (k as i64 + 1) * x)
            .sum()
    }

    /// `σ_i = -1` iff `n_i < 0`.
    pub fn signs(&self) -> Vec<i8> {
        self.n.iter().map(|&x| if x < 0 { -1 } else { 1 }).collect()
    }

    /// `v_i = (2t+2) n_i + i`.
    pub fn macdonald_vector(&self) -> Vec<i64> {
        let m = 2 * (self.t as i64 + 1);
        self.n
            .iter()
            .enumerate()
            .map(|(k, x)| m * x + k as i64 + 1)
            .collect()
    }
}

/// `Δ_1..Δ_t` and `σ_1..σ_t` read from a merged principal hook set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaProfile {
    pub values: Vec<i64>,
    pub signs: Vec<i8>,
    pub t: usize,
}

impl DeltaProfile {
    /// The vector forced by `t+1+Δ_i = σ_i((2t+2) n_i + i)`.
    pub fn vector(&self) -> PairVector {
        let tt = self.t as i64 + 1;
        let n = self
            .values
            .iter()
            .zip(&self.signs)
            .enumerate()
            .map(|(k, (&d, &s))| {
                let i = k as i64 + 1;
                if s > 0 {
                    (tt + d - i) / (2 * tt)
                } else {
                    -(tt + d + i) / (2 * tt)
                }
            })
            .collect();
        PairVector { n, t: self.t }
    }
}

/// Principal hooks of `λ` and `μ` together, decreasing.
pub fn merged_delta(lambda: &Partition, mu: &Partition) -> Vec<usize> {
    let mut d: Vec<usize> = lambda
        .profile()
        .delta_set
        .into_iter()
        .chain(mu.profile().delta_set)
        .collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// `Δ_i` is the largest `h ∈ Δ` with `h ≡ ±i - t - 1 mod 2t+2`, or `i - t - 1`
/// when no such `h` exists.
pub fn delta_profile(delta: &[usize], t: usize) -> DeltaProfile {
    let tt = t as i64 + 1;
    let m = 2 * tt;
    let mut values = Vec::with_capacity(t);
    let mut signs = Vec::with_capacity(t);
    for i in 1..=t as i64 {
        let plus = (i - tt).rem_euclid(m);
        let minus = (-i - tt).rem_euclid(m);
        let best = delta
            .iter()
            .map(|&h| h as i64)
            .filter(|h| h % m == plus || h % m == minus)
            .max();
        match best {
            Some(h) => {
                values.push(h);
                signs.push(if h % m == plus { 1 } else { -1 });
            }
            None => {
                values.push(i - tt);
                signs.push(1);
            }
        }
    }
    DeltaProfile { values, signs, t }
}

/// `φ(λ, μ)`: `φ₁(λ)` and `φ₂(μ)` interleaved. When `t+1` is odd, `φ₁`
/// fills the even slots and `φ₂` the odd ones; when `t+1` is even the roles
/// swap.
pub fn varphi(lambda: &Partition, mu: &Partition, t: usize) -> Result<PairVector, BijectionError> {
    check_modulus(t, 1)?;
    let tt = t + 1;
    check_core(lambda, tt)?;
    check_core(mu, tt)?;
    let a = phi1(lambda, tt)?;
    let b = phi2(mu, tt)?;
    let (even, odd) = if tt % 2 == 1 { (a, b) } else { (b, a) };
    let (mut ev, mut od) = (even.into_iter(), odd.into_iter());
    let n = (1..=t)
        .map(|i| if i % 2 == 0 { ev.next() } else { od.next() }.expect("slot counts match"))
        .collect();
    Ok(PairVector { n, t })
}

/// Principal hooks added by each coordinate: `n_i = k > 0` gives
/// `(t+1)(2m-1) + i` and `n_i = -k` gives `(t+1)(2m-1) - i`, `m = 1..k`.
pub fn delta_of_vector(v: &PairVector) -> Vec<usize> {
    let tt = v.t as i64 + 1;
    let mut out = Vec::new();
    for (k, &x) in v.n.iter().enumerate() {
        let i = k as i64 + 1;
        let s = if x < 0 { -1 } else { 1 };
        for m in 1..=x.abs() {
            out.push((tt * (2 * m - 1) + s * i) as usize);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Odd hooks go to the self-conjugate core, even ones to the doubled
/// distinct core.
pub fn varphi_inverse(v: &PairVector) -> Result<(Partition, Partition), BijectionError> {
    check_modulus(v.t, 1)?;
    if v.n.len() != v.t {
        return Err(BijectionError::Length { expected: v.t, got: v.n.len() });
    }
    let delta = delta_of_vector(v);
    let odd: Vec<usize> = delta.iter().copied().filter(|h| h % 2 == 1).collect();
    let even: Vec<usize> = delta.iter().copied().filter(|h| h % 2 == 0).collect();
    Ok((Partition::sc_from_hooks(&odd)?, Partition::dd_from_hooks(&even)?))
}

/// No residue class mod `2t+2` holds both a `t+1+i` and a `t+1-i` element.
pub fn no_opposite_classes(delta: &[usize], t: usize) -> bool {
    let tt = t as i64 + 1;
    let m = 2 * tt;
    (1..=t as i64).all(|i| {
        let has = |r: i64| delta.iter().any(|&h| h as i64 % m == r.rem_euclid(m));
        !(has(tt + i) && has(tt - i))
    })
}

/// `h ∈ Δ` and `h > 2t+2` imply `h - 2t - 2 ∈ Δ`.
pub fn downward_closed(delta: &[usize], t: usize) -> bool {
    let m = 2 * (t + 1);
    delta.iter().all(|&h| h <= m || delta.contains(&(h - m)))
}

/// The set conditions under which `Δ` comes from a pair of `(t+1)`-cores:
/// positive, distinct, no multiple of `t+1`, and both predicates above.
pub fn is_pair_delta(delta: &[usize], t: usize) -> bool {
    let mut sorted = delta.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == delta.len()
        && delta.iter().all(|&h| h > 0 && h % (t + 1) != 0)
        && no_opposite_classes(delta, t)
        && downward_closed(delta, t)
}
