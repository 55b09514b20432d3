//! Exhaustive suites shared by the bijection tests and the acceptance run.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use etaforge::bijection::{
    delta_profile, gks_phi, gks_phi_inverse, hook_product_poly, core_pair_sides, merged_delta, phi1, phi1_inverse,
    phi1_weight, phi2, phi2_inverse, phi2_weight, q_delta, q_delta_poly, varphi, varphi_inverse, CompactSet,
    PairVector,
};
use etaforge::family::{dd_cores, dd_partitions_of, pairs, partitions_of, sc_cores};
use etaforge::identity::rational_samples;
use etaforge::partition::{nu_to_pair, pair_to_nu, Cell, Partition};
use etaforge::poly::Var;
use etaforge::word::{box_map, littlewood, littlewood_inverse};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn all_up_to(w: usize) -> Vec<Partition> {
    (0..=w).flat_map(partitions_of).collect()
}

/// Integer vectors of length `len` with coordinates in `-r..=r`.
fn boxes(len: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-r..=r).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `gks_phi` on every t-core of weight <= 40, t <= 7.
pub fn gks_suite() -> Outcome {
    let all = all_up_to(40);
    let mut checked = 0;
    for t in 2..=7 {
        let mut seen = BTreeSet::new();
        for lam in all.iter().filter(|p| p.is_t_core(t)) {
            let v = gks_phi(lam, t).map_err(|e| e.to_string())?;
            ensure!(v.n.iter().sum::<i64>() == 0, "{lam} t={t}: charges {:?} do not sum to 0", v.n);
            ensure!(v.weight() == lam.weight() as i64, "{lam} t={t}: weight law fails for {:?}", v.n);
            let back = gks_phi_inverse(&v).map_err(|e| e.to_string())?;
            ensure!(&back == lam, "{lam} t={t}: inverse gives {back}");
            ensure!(seen.insert(v.n.clone()), "{lam} t={t}: charge vector repeated");
            checked += 1;
        }
    }
    Ok(format!("{checked} cores"))
}

/// `φ₁` and `φ₂` on every SC and DD t-core of weight <= 40, t <= 7, and
/// every vector of weight <= 40 maps back to a core.
pub fn phi12_suite() -> Outcome {
    let mut checked = 0;
    for t in 2..=7usize {
        let sc = sc_cores(t, 40);
        for lam in &sc {
            let n = phi1(lam, t).map_err(|e| e.to_string())?;
            let g = gks_phi(lam, t).map_err(|e| e.to_string())?.n;
            ensure!(n.len() == t / 2 && n[..] == g[t - t / 2..], "{lam} t={t}: φ₁ {n:?} vs φ {g:?}");
            ensure!((0..t).all(|i| g[i] == -g[t - 1 - i]), "{lam} t={t}: φ {g:?} not antisymmetric");
            ensure!(phi1_weight(&n, t) == lam.weight() as i64, "{lam} t={t}: φ₁ weight law");
            ensure!(&phi1_inverse(&n, t).map_err(|e| e.to_string())? == lam, "{lam} t={t}: φ₁ inverse");
            checked += 1;
        }
        let dd = dd_cores(t, 40);
        for mu in &dd {
            let n = phi2(mu, t).map_err(|e| e.to_string())?;
            let g = gks_phi(mu, t).map_err(|e| e.to_string())?.n;
            ensure!(n.len() == (t - 1) / 2, "{mu} t={t}: φ₂ length");
            ensure!(g[0] == 0 && (1..t).all(|i| g[i] == -g[t - i]), "{mu} t={t}: φ {g:?} symmetry");
            ensure!(phi2_weight(&n, t) == mu.weight() as i64, "{mu} t={t}: φ₂ weight law");
            ensure!(&phi2_inverse(&n, t).map_err(|e| e.to_string())? == mu, "{mu} t={t}: φ₂ inverse");
            checked += 1;
        }
        let img1 = boxes(t / 2, 6).into_iter().filter(|n| phi1_weight(n, t) <= 40).count();
        ensure!(img1 == sc.len(), "t={t}: {img1} φ₁ vectors for {} SC cores", sc.len());
        let img2 = boxes((t - 1) / 2, 6).into_iter().filter(|n| phi2_weight(n, t) <= 40).count();
        ensure!(img2 == dd.len(), "t={t}: {img2} φ₂ vectors for {} DD cores", dd.len());
    }
    Ok(format!("{checked} cores"))
}

/// `varphi` on every pair of (t+1)-cores of total weight <= 35, t ∈ {2,3,4}.
pub fn varphi_suite() -> Outcome {
    let mut checked = 0;
    for t in 2..=4usize {
        let all = pairs(Some(t + 1), 35);
        for (lam, mu) in &all {
            let v = varphi(lam, mu, t).map_err(|e| e.to_string())?;
            ensure!(v.weight() == (lam.weight() + mu.weight()) as i64, "({lam},{mu}) t={t}: weight law");
            let prof = delta_profile(&merged_delta(lam, mu), t);
            let m = 2 * t as i64 + 2;
            for i in 0..t {
                let lhs = t as i64 + 1 + prof.values[i];
                let rhs = prof.signs[i] as i64 * (m * v.n[i] + i as i64 + 1);
                ensure!(lhs == rhs, "({lam},{mu}) t={t}: Δ relation fails at i={}", i + 1);
            }
            ensure!(prof.vector() == v, "({lam},{mu}) t={t}: Δ profile disagrees");
            let back = varphi_inverse(&v).map_err(|e| e.to_string())?;
            ensure!(&back.0 == lam && &back.1 == mu, "({lam},{mu}) t={t}: inverse gives {back:?}");
            checked += 1;
        }
        let vs: Vec<PairVector> = boxes(t, 5)
            .into_iter()
            .map(|n| PairVector { n, t })
            .filter(|v| v.weight() <= 35)
            .collect();
        ensure!(vs.len() == all.len(), "t={t}: {} vectors for {} pairs", vs.len(), all.len());
        for v in vs {
            let (lam, mu) = varphi_inverse(&v).map_err(|e| e.to_string())?;
            ensure!(varphi(&lam, &mu, t).map_err(|e| e.to_string())? == v, "{:?} t={t}: not a round trip", v.n);
        }
    }
    Ok(format!("{checked} pairs"))
}

/// Littlewood decomposition on every partition of weight <= 30, and the
/// sign and diagonal properties on DD partitions for odd t.
pub fn littlewood_suite() -> Outcome {
    let all = all_up_to(30);
    let mut checked = 0;
    for t in [2usize, 3, 5] {
        for lam in &all {
            let q = littlewood(lam, t).map_err(|e| e.to_string())?;
            ensure!(q.weight() == lam.weight(), "{lam} t={t}: weight identity");
            let mut lhs: Vec<usize> = lam.hooks_div_t(t).iter().map(|s| s.h / t).collect();
            let mut rhs: Vec<usize> = q.quotient.iter().flat_map(|p| p.hook_lengths()).map(|s| s.h).collect();
            lhs.sort_unstable();
            rhs.sort_unstable();
            ensure!(lhs == rhs, "{lam} t={t}: hook multisets differ");
            ensure!(&littlewood_inverse(&q).map_err(|e| e.to_string())? == lam, "{lam} t={t}: inverse");
            checked += 1;
        }
    }
    for t in [3usize, 5] {
        let tp = (t - 1) / 2;
        for lam in (0..=15).flat_map(|k| dd_partitions_of(2 * k)) {
            let q = littlewood(&lam, t).map_err(|e| e.to_string())?;
            ensure!(q.core.is_doubled_distinct() && q.quotient[0].is_doubled_distinct(), "{lam} t={t}: DD parts");
            ensure!(
                (1..t).all(|i| q.quotient[t - i] == q.quotient[i].conjugate()),
                "{lam} t={t}: quotient not conjugate-symmetric"
            );
            ensure!(lam.delta() == q.core.delta() * q.quotient[0].delta(), "{lam} t={t}: sign (i)");
            let map = box_map(&lam, t).map_err(|e| e.to_string())?;
            let inv: BTreeMap<(usize, Cell), Cell> = map.iter().map(|(s, (k, d))| ((*k, *d), *s)).collect();
            ensure!(inv.len() == map.len(), "{lam} t={t}: box map not injective");
            for (src, (k, dst)) in &map {
                if *k == 0 {
                    ensure!(src.above_diagonal() == dst.above_diagonal(), "{lam} t={t}: (ii) at {src:?}");
                }
            }
            for i in 1..=tp {
                for v in q.quotient[i].cells() {
                    let a = inv[&(i, v)];
                    let b = inv[&(t - i, v.transpose())];
                    ensure!(a.above_diagonal() != b.above_diagonal(), "{lam} t={t}: (iii) at {v:?}");
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} decompositions"))
}

/// `pair_to_nu` on every SC × DD pair of weight <= 15 with the product
/// identity at symbolic t and at eight rational samples.
pub fn pair_to_nu_suite() -> Outcome {
    let mut checked = 0;
    for (lam, mu) in pairs(None, 15) {
        let nu = pair_to_nu(&lam, &mu).map_err(|e| e.to_string())?;
        ensure!(nu.is_doubled_distinct(), "({lam},{mu}): ν = {nu} not DD");
        ensure!(nu.weight() == 2 * (lam.weight() + mu.weight()), "({lam},{mu}): weight");
        ensure!(nu.delta() == lam.delta() * mu.delta(), "({lam},{mu}): sign");
        let back = nu_to_pair(&nu).map_err(|e| e.to_string())?;
        ensure!(back.0 == lam && back.1 == mu, "({lam},{mu}): nu_to_pair gives {back:?}");
        let delta = merged_delta(&lam, &mu);
        let hp = hook_product_poly(&nu);
        ensure!(q_delta_poly(&delta) == hp, "({lam},{mu}): Q(t) differs from the hook product");
        for s in rational_samples() {
            let at = hp.eval_all(&[(Var::T, s.clone())]).expect("univariate");
            ensure!(q_delta(&delta, &s) == at, "({lam},{mu}): Q({s}) differs");
        }
        checked += 1;
    }
    Ok(format!("{checked} pairs"))
}

fn maxima(t: usize) -> impl Strategy<Value = (usize, Vec<i64>)> {
    let m = 2 * t as i64 + 2;
    (Just((1..m).collect::<Vec<i64>>()).prop_shuffle(), prop::collection::vec(-1i64..6, 2 * t + 1))
        .prop_map(move |(res, ks)| (t, res.iter().zip(&ks).map(|(r, k)| r + k * m).collect()))
}

/// 500 random maximal sets for t ∈ {2,3,4}: both sides of the product
/// identity agree.
pub fn compact_suite() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 500, failure_persistence: None, ..Config::default() });
    let strategy = prop_oneof![maxima(2), maxima(3), maxima(4)];
    let cases = std::cell::Cell::new(0);
    runner
        .run(&strategy, |(t, e)| {
            let a = CompactSet::new(e, t).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let (lhs, rhs) = a.balance_sides();
            prop_assert_eq!(lhs, rhs);
            cases.set(cases.get() + 1);
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!("{} sets", cases.get()))
}

/// The product identity on every pair of (t+1)-cores of weight <= 30, t ∈ {2,3}.
pub fn core_pair_suite() -> Outcome {
    let mut checked = 0;
    for t in [2usize, 3] {
        for (lam, mu) in pairs(Some(t + 1), 30) {
            let (l, r) = core_pair_sides(&lam, &mu, t).map_err(|e| e.to_string())?;
            ensure!(l == r, "({lam},{mu}) t={t}: {l} != {r}");
            checked += 1;
        }
    }
    Ok(format!("{checked} pairs"))
}
