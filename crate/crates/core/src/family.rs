//! Exhaustive enumeration of the partition families used by the identities.
//!
//! Self-conjugate and doubled distinct partitions are generated from their
//! principal hooks rather than filtered out of all partitions, so DD
//! weights up to 60 stay cheap.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    All,
    Sc,
    Dd,
    Distinct,
    TCore,
    ScTCore,
    DdTCore,
    ScXDdPairs,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::All,
        Family::Sc,
        Family::Dd,
        Family::Distinct,
        Family::TCore,
        Family::ScTCore,
        Family::DdTCore,
        Family::ScXDdPairs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::All => "ALL",
            Family::Sc => "SC",
            Family::Dd => "DD",
            Family::Distinct => "DISTINCT",
            Family::TCore => "T_CORE",
            Family::ScTCore => "SC_T_CORE",
            Family::DdTCore => "DD_T_CORE",
            Family::ScXDdPairs => "SC_x_DD_PAIRS",
        }
    }

    pub fn needs_modulus(self) -> bool {
        matches!(self, Family::TCore | Family::ScTCore | Family::DdTCore)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("family {0} needs a modulus t >= 1")]
    MissingModulus(Family),
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| FamilyError::Unknown(s.to_string()))
    }
}

/// A family, an optional modulus, and an inclusive weight bound. For
/// `SC_x_DD_PAIRS` the modulus is optional (pairs of `t`-cores when set)
/// and the bound applies to `|λ| + |μ|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub t: Option<usize>,
    pub max_weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Member {
    Single(Partition),
    Pair(Partition, Partition),
}

impl Member {
    pub fn weight(&self) -> usize {
        match self {
            Member::Single(p) => p.weight(),
            Member::Pair(a, b) => a.weight() + b.weight(),
        }
    }
}

fn generate(n: usize, max: usize, distinct: bool, odd: bool, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_sorted(prefix.clone()));
        return;
    }
    for part in (1..=max.min(n)).rev() {
        if odd && part % 2 == 0 {
            continue;
        }
        prefix.push(part);
        let next = if distinct { part - 1 } else { part };
        generate(n - part, next, distinct, odd, prefix, out);
        prefix.pop();
    }
}

fn collect(n: usize, distinct: bool, odd: bool) -> Vec<Partition> {
    let mut out = Vec::new();
    generate(n, n, distinct, odd, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> std::vec::IntoIter<Partition> {
    collect(n, false, false).into_iter()
}

pub fn distinct_partitions_of(n: usize) -> Vec<Partition> {
    collect(n, true, false)
}

/// Self-conjugate partitions of `n`, built from distinct odd principal hooks.
pub fn sc_partitions_of(n: usize) -> Vec<Partition> {
    collect(n, true, true)
        .iter()
        .map(|hooks| Partition::sc_from_hooks(hooks.parts()).expect("distinct odd hooks"))
        .collect()
}

/// Doubled distinct partitions of `n` (none when `n` is odd).
pub fn dd_partitions_of(n: usize) -> Vec<Partition> {
    if n % 2 == 1 {
        return Vec::new();
    }
    distinct_partitions_of(n / 2)
        .iter()
        .map(|mu0| Partition::dd_double(mu0).expect("distinct parts"))
        .collect()
}

fn up_to(max: usize, f: impl Fn(usize) -> Vec<Partition>) -> Vec<Partition> {
    (0..=max).flat_map(f).collect()
}

pub fn enumerate(spec: &FamilySpec) -> Result<Vec<Member>, FamilyError> {
    let FamilySpec { family, t, max_weight } = *spec;
    let modulus = || match t {
        Some(t) if t >= 1 => Ok(t),
        _ => Err(FamilyError::MissingModulus(family)),
    };
    let singles = |v: Vec<Partition>| v.into_iter().map(Member::Single).collect();
    Ok(match family {
        Family::All => singles(up_to(max_weight, |n| partitions_of(n).collect())),
        Family::Sc => singles(up_to(max_weight, sc_partitions_of)),
        Family::Dd => singles(up_to(max_weight, dd_partitions_of)),
        Family::Distinct => singles(up_to(max_weight, distinct_partitions_of)),
        Family::TCore => {
            let t = modulus()?;
            singles(up_to(max_weight, |n| partitions_of(n).filter(|p| p.is_t_core(t)).collect()))
        }
        Family::ScTCore => {
            let t = modulus()?;
            singles(sc_cores(t, max_weight))
        }
        Family::DdTCore => {
            let t = modulus()?;
            singles(dd_cores(t, max_weight))
        }
        Family::ScXDdPairs => pairs(t, max_weight)
            .into_iter()
            .map(|(a, b)| Member::Pair(a, b))
            .collect(),
    })
}

pub fn sc_cores(t: usize, max_weight: usize) -> Vec<Partition> {
    up_to(max_weight, sc_partitions_of)
        .into_iter()
        .filter(|p| p.is_t_core(t))
        .collect()
}

pub fn dd_cores(t: usize, max_weight: usize) -> Vec<Partition> {
    up_to(max_weight, dd_partitions_of)
        .into_iter()
        .filter(|p| p.is_t_core(t))
        .collect()
}

/// Pairs `(λ, μ)` in SC × DD with `|λ| + |μ| <= max_weight`, restricted to
/// `t`-cores when `t` is given. Ordered by total weight, then by `λ`'s
/// weight.
pub fn pairs(t: Option<usize>, max_weight: usize) -> Vec<(Partition, Partition)> {
    let keep = |p: &Partition| t.is_none_or(|t| p.is_t_core(t));
    let sc: Vec<Partition> = up_to(max_weight, sc_partitions_of).into_iter().filter(keep).collect();
    let dd: Vec<Partition> = up_to(max_weight, dd_partitions_of).into_iter().filter(keep).collect();
    let mut out = Vec::new();
    for total in 0..=max_weight {
        for a in &sc {
            if a.weight() > total {
                break;
            }
            for b in dd.iter().filter(|b| a.weight() + b.weight() == total) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Number of doubled distinct `t`-cores of weight `m`.
pub fn dd_core_count(t: usize, m: usize) -> usize {
    dd_partitions_of(m).iter().filter(|p| p.is_t_core(t)).count()
}

/// `Σ δ` over doubled distinct `t`-cores of weight `m`.
pub fn signed_dd_core_count(t: usize, m: usize) -> i64 {
    dd_partitions_of(m)
        .iter()
        .filter(|p| p.is_t_core(t))
        .map(|p| p.delta() as i64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    fn singles(spec: FamilySpec) -> Vec<Partition> {
        enumerate(&spec)
            .unwrap()
            .into_iter()
            .map(|m| match m {
                Member::Single(p) => p,
                Member::Pair(..) => unreachable!(),
            })
            .collect()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(partitions_of(20).count(), 627);
    }

    #[test]
    fn subfamilies_match_filters() {
        for n in 0..=18 {
            let all: Vec<Partition> = partitions_of(n).collect();
            let mut sc: Vec<_> = all.iter().filter(|p| p.is_self_conjugate()).cloned().collect();
            let mut dd: Vec<_> = all.iter().filter(|p| p.is_doubled_distinct()).cloned().collect();
            let mut a = sc_partitions_of(n);
            let mut b = dd_partitions_of(n);
            for v in [&mut sc, &mut dd, &mut a, &mut b] {
                v.sort();
            }
            assert_eq!(a, sc, "SC weight {n}");
            assert_eq!(b, dd, "DD weight {n}");
        }
    }

    #[test]
    fn spec_examples() {
        let spec = |family, t, max_weight| FamilySpec { family, t, max_weight };
        assert_eq!(singles(spec(Family::Dd, None, 2)), vec![Partition::empty(), p(&[2])]);
        let e = Partition::empty();
        assert_eq!(
            enumerate(&spec(Family::ScXDdPairs, Some(3), 1)).unwrap(),
            vec![Member::Pair(e.clone(), e.clone()), Member::Pair(p(&[1]), e.clone())]
        );
        assert_eq!(
            singles(spec(Family::TCore, Some(2), 6)),
            vec![e, p(&[1]), p(&[2, 1]), p(&[3, 2, 1])]
        );
        assert_eq!(
            enumerate(&spec(Family::TCore, None, 3)),
            Err(FamilyError::MissingModulus(Family::TCore))
        );
        assert_eq!("dd_t_core".parse::<Family>(), Ok(Family::DdTCore));
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn dd_weights_are_even() {
        let dd = singles(FamilySpec { family: Family::Dd, t: None, max_weight: 21 });
        assert!(dd.iter().all(|p| p.weight() % 2 == 0));
    }

    #[test]
    fn core_counts() {
        for t in 1..6 {
            assert_eq!(dd_core_count(t, 0), 1);
        }
        assert_eq!(dd_core_count(3, 2), 1);
        assert_eq!(dd_core_count(3, 1), 0);
        assert_eq!(signed_dd_core_count(3, 2), -1);
    }
}
