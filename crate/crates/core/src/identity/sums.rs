//! Sum sides of the identities, built by exhaustive enumeration.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::family::{dd_cores, dd_partitions_of, pairs, partitions_of, sc_partitions_of, signed_dd_core_count};
use crate::partition::{HookStat, Partition};
use crate::poly::{MultiPoly, Var};
use crate::rational::{factorial, int, rat, sign_pow, Rational};
use crate::series::PowerSeries;

/// Members of weight `<= max_weight`, each with its hook statistics.
pub(crate) fn with_hooks(members: Vec<Partition>) -> Vec<(Partition, Vec<HookStat>)> {
    members
        .into_par_iter()
        .map(|p| {
            let h = p.hook_lengths();
            (p, h)
        })
        .collect()
}

pub(crate) fn all_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

pub(crate) fn sc_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(sc_partitions_of).collect()
}

/// Doubled distinct partitions with `|λ|/2 <= half`.
pub(crate) fn dd_up_to(half: usize) -> Vec<Partition> {
    (0..=half).flat_map(|n| dd_partitions_of(2 * n)).collect()
}

/// `Σ x^{e(λ)} term(λ)` truncated at `order`; terms are built in parallel
/// and added in enumeration order.
pub(crate) fn family_sum<R: crate::ring::Ring>(
    members: &[(Partition, Vec<HookStat>)],
    order: usize,
    exponent: impl Fn(&Partition) -> usize + Sync,
    term: impl Fn(&Partition, &[HookStat]) -> R + Sync,
) -> PowerSeries<R> {
    let terms: Vec<(usize, R)> = members
        .par_iter()
        .filter_map(|(p, h)| {
            let e = exponent(p);
            (e <= order).then(|| (e, term(p, h)))
        })
        .collect();
    let mut s = PowerSeries::zero(order);
    for (e, c) in terms {
        s.add_to_coeff(e, &c);
    }
    s
}

pub(crate) fn half(p: &Partition) -> usize {
    debug_assert!(p.weight().is_multiple_of(2), "doubled distinct weights are even");
    p.weight() / 2
}

fn delta(p: &Partition) -> Rational {
    int(p.delta() as i64)
}

/// `∏ (a(s) + b(s) v)` over hook statistics.
fn linear_product(hooks: &[HookStat], v: Var, f: impl Fn(&HookStat) -> (Rational, Rational)) -> MultiPoly {
    hooks.iter().fold(MultiPoly::one(), |acc, s| {
        let (a, b) = f(s);
        &acc * &MultiPoly::linear(a, b, v)
    })
}

/// `∏_{h∈H(λ)} (1 - z/h²)`.
pub fn no_term(hooks: &[HookStat]) -> MultiPoly {
    linear_product(hooks, Var::Z, |s| (int(1), -rat(1, (s.h * s.h) as i64)))
}

/// `δ ∏_{h∈H(λ)} (1 - (2t+2)/(h ε_h))` in `t`.
pub fn thm1_term(p: &Partition, hooks: &[HookStat]) -> MultiPoly {
    let prod = linear_product(hooks, Var::T, |s| {
        let c = rat(2, s.signed());
        (int(1) - &c, -c)
    });
    prod.scale(&delta(p))
}

/// `δ ∏_{h∈H_t(λ)} (y - y t(2z+2)/(ε_h h))` in `y, z`.
pub fn thm2_term(p: &Partition, hooks: &[HookStat], t: usize) -> MultiPoly {
    let y = MultiPoly::var(Var::Y);
    let mut acc = MultiPoly::constant(delta(p));
    for s in hooks.iter().filter(|s| s.h % t == 0) {
        let c = rat(2 * t as i64, s.signed());
        acc = &(&acc * &y) * &MultiPoly::linear(int(1) - &c, -c, Var::Z);
    }
    acc
}

pub fn sum_no(order: usize) -> PowerSeries<MultiPoly> {
    family_sum(&with_hooks(all_up_to(order)), order, Partition::weight, |_, h| no_term(h))
}

pub fn sum_thm1(order: usize) -> PowerSeries<MultiPoly> {
    family_sum(&with_hooks(dd_up_to(order)), order, half, thm1_term)
}

pub fn sum_thm2(t: usize, order: usize) -> PowerSeries<MultiPoly> {
    family_sum(&with_hooks(dd_up_to(order)), order, half, |p, h| thm2_term(p, h, t))
}

/// `Σ_{λ∈SC} δ x^{|λ|} ∏_{h∈H(λ)} (1 - 2z/(h ε_h))`.
pub fn sum_sc_ccheck(order: usize) -> PowerSeries<MultiPoly> {
    family_sum(&with_hooks(sc_up_to(order)), order, Partition::weight, |p, h| {
        linear_product(h, Var::Z, |s| (int(1), -rat(2, s.signed()))).scale(&delta(p))
    })
}

/// `Σ δ_λ δ_μ x^{|λ|+|μ|} Q_Δ(t)` over all pairs in `SC × DD`.
pub fn sum_thm_pair(order: usize) -> PowerSeries<MultiPoly> {
    let ps = pairs(None, order);
    let terms: Vec<(usize, MultiPoly)> = ps
        .par_iter()
        .map(|(l, m)| {
            let d = crate::bijection::merged_delta(l, m);
            let q = crate::bijection::q_delta_poly(&d);
            (l.weight() + m.weight(), q.scale(&int(l.delta() as i64 * m.delta() as i64)))
        })
        .collect();
    let mut s = PowerSeries::zero(order);
    for (e, c) in terms {
        s.add_to_coeff(e, &c);
    }
    s
}

/// `Σ_{λ∈DD} δ x^{|λ|/2} y^{#H_t(λ)}`.
pub fn sum_cor_z1(t: usize, order: usize) -> PowerSeries<MultiPoly> {
    family_sum(&with_hooks(dd_up_to(order)), order, half, |p, h| {
        let k = h.iter().filter(|s| s.h % t == 0).count() as u32;
        MultiPoly::var(Var::Y).pow(k).scale(&delta(p))
    })
}

/// `Σ_{λ∈DD} δ x^{|λ|/2}`.
pub fn sum_cor_z1y1(order: usize) -> PowerSeries<Rational> {
    family_sum(&with_hooks(dd_up_to(order)), order, half, |p, _| delta(p))
}

/// `Σ_{λ∈DD} δ x^{|λ|/2} ∏_{h∈H_t(λ)} (1 - t(2z+2)/(ε_h h))`.
pub fn sum_cor_y1(t: usize, order: usize) -> PowerSeries<MultiPoly> {
    family_sum(&with_hooks(dd_up_to(order)), order, half, |p, h| {
        let ht: Vec<HookStat> = h.iter().copied().filter(|s| s.h % t == 0).collect();
        linear_product(&ht, Var::Z, |s| {
            let c = rat(2 * t as i64, s.signed());
            (int(1) - &c, -c)
        })
        .scale(&delta(p))
    })
}

/// `Σ_{λ∈DD} δ x^{|λ|/2} Σ 1/h` over diagonal boxes whose hook is a
/// multiple of `t`.
pub fn sum_cor_zp1(t: usize, order: usize) -> PowerSeries<Rational> {
    family_sum(&with_hooks(dd_up_to(order)), order, half, |p, h| {
        let s: Rational = h
            .iter()
            .filter(|s| s.on_diagonal() && s.h % t == 0)
            .map(|s| rat(1, s.h as i64))
            .sum();
        s * delta(p)
    })
}

/// `Σ_{λ∈DD} δ x^{|λ|/2} ∏_{h∈H_t(λ)} bt/(h ε_h)`.
pub fn sum_cor_exp(t: usize, order: usize) -> PowerSeries<MultiPoly> {
    family_sum(&with_hooks(dd_up_to(order)), order, half, |p, h| {
        let ht: Vec<&HookStat> = h.iter().filter(|s| s.h % t == 0).collect();
        let c = ht.iter().fold(delta(p), |acc, s| acc * rat(t as i64, s.signed()));
        MultiPoly::var(Var::B).pow(ht.len() as u32).scale(&c)
    })
}

/// `Σ_{λ∈DD} x^{|λ|/2} ∏_{h∈H(λ)} b/h`.
pub fn sum_cor_t1(order: usize) -> PowerSeries<MultiPoly> {
    family_sum(&with_hooks(dd_up_to(order)), order, half, |_, h| {
        let c = h.iter().fold(Rational::one(), |acc, s| acc * rat(1, s.h as i64));
        MultiPoly::var(Var::B).pow(h.len() as u32).scale(&c)
    })
}

/// `Σ_{DD t-cores} δ x^{|λ|/2}`.
pub fn sum_signed_dd_cores(t: usize, order: usize) -> PowerSeries<Rational> {
    let mut s = PowerSeries::zero(order);
    for p in dd_cores(t, 2 * order) {
        s.add_to_coeff(half(&p), &delta(&p));
    }
    s
}

/// `Σ q^{|λ|+|μ|}` over `SC_(t) × DD_(t)`.
pub fn sum_genfun_ht(t: usize, order: usize) -> PowerSeries<Rational> {
    let mut s = PowerSeries::zero(order);
    for (l, m) in pairs(Some(t), order) {
        s.add_to_coeff(l.weight() + m.weight(), &Rational::one());
    }
    s
}

/// `Σ_{λ∈DD, |λ|=2n} ∏_{h∈H(λ)} 1/h`.
pub fn hook_sympl(n: usize) -> Rational {
    dd_partitions_of(2 * n)
        .par_iter()
        .map(|p| p.hook_lengths().iter().fold(Rational::one(), |acc, s| acc * rat(1, s.h as i64)))
        .reduce(Rational::zero, |a, b| a + b)
}

pub fn hook_sympl_rhs(n: usize) -> Rational {
    Rational::new(1.into(), factorial(n as u64) * num_bigint::BigInt::from(2).pow(n as u32))
}

/// Which doubled distinct partitions of weight `2tn + m` enter the
/// generalised hook sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HookFilter {
    /// `#H_t(λ) = 2n`.
    Count,
    /// The `t`-core of `λ` is empty.
    EmptyCore,
}

fn core_is_empty(p: &Partition, t: usize) -> bool {
    t == 1 || p.t_core(t).expect("t >= 2").is_empty()
}

/// `Σ δ ∏_{h∈H_t(λ)} 1/(h ε_h)`, and the same sum weighted by
/// `Σ_{h∈H_t(λ)} h ε_h`, over `λ ∈ DD` with `|λ| = 2tn + m`.
pub fn hook_gen(t: usize, n: usize, m: usize, filter: HookFilter) -> (Rational, Rational) {
    dd_partitions_of(2 * t * n + m)
        .par_iter()
        .filter_map(|p| {
            let ht = p.hooks_div_t(t);
            let keep = match filter {
                HookFilter::Count => ht.len() == 2 * n,
                HookFilter::EmptyCore => core_is_empty(p, t),
            };
            keep.then(|| {
                let w = ht.iter().fold(delta(p), |acc, s| acc / int(s.signed()));
                let marked: i64 = ht.iter().map(HookStat::signed).sum();
                (w.clone(), w * int(marked))
            })
        })
        .reduce(|| (Rational::zero(), Rational::zero()), |a, b| (a.0 + b.0, a.1 + b.1))
}

/// `(-1)^n / (n! tⁿ 2ⁿ)`.
pub fn hook_gen_rhs(t: usize, n: usize) -> Rational {
    let den = factorial(n as u64) * num_bigint::BigInt::from(2 * t as i64).pow(n as u32);
    Rational::new(sign_pow(n as i64).into(), den)
}

/// `3(-1)^n / ((n-1)! tⁿ 2ⁿ)`, zero at `n = 0`.
pub fn cor413_rhs(t: usize, n: usize) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    hook_gen_rhs(t, n) * int(3 * n as i64)
}

/// `(-1)^n c_t(m) / (n! tⁿ 2ⁿ)` with the signed core count.
pub fn cor412_rhs(t: usize, n: usize, m: usize) -> Rational {
    hook_gen_rhs(t, n) * int(signed_dd_core_count(t, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm1_first_coefficient() {
        let s = sum_thm1(1);
        // -(2t²+t)
        let expect = &(&MultiPoly::var(Var::T).pow(2) * &MultiPoly::from(-2)) - &MultiPoly::var(Var::T);
        assert_eq!(s.coeff(1), &expect);
    }

    #[test]
    fn small_sums() {
        assert_eq!(sum_cor_z1y1(1).coeffs(), &[int(1), int(-1)]);
        assert_eq!(hook_sympl(1), rat(1, 2));
        assert_eq!(hook_gen(1, 1, 0, HookFilter::Count).0, rat(-1, 2));
        assert_eq!(hook_gen_rhs(1, 1), rat(-1, 2));
        assert_eq!(cor413_rhs(3, 0), int(0));
    }

    #[test]
    fn marked_sum_at_t1_is_3n() {
        for n in 1..=15 {
            for p in dd_partitions_of(2 * n) {
                let s: i64 = p.hook_lengths().iter().map(HookStat::signed).sum();
                assert_eq!(s, 3 * n as i64, "{p}");
            }
        }
    }
}
