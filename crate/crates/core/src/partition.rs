//! Integer partitions and their Ferrers-diagram statistics.
//!
//! Diagrams use the French convention: box `(i, j)` sits in row `i` and
//! column `j`, both starting at 1, with row 1 at the bottom. A box is
//! strictly above the diagonal when `i > j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("part at index {index} is {value}, parts must be positive")]
    NonPositive { index: usize, value: i64 },
    #[error("part at index {index} exceeds the previous part")]
    Increasing { index: usize },
    #[error("expected a JSON array of integers: {0}")]
    Syntax(String),
    #[error("parts are not distinct")]
    NotDistinct,
    #[error("{0:?} is not doubled distinct")]
    NotDoubledDistinct(Vec<usize>),
    #[error("{0:?} is not self-conjugate")]
    NotSelfConjugate(Vec<usize>),
    #[error("{partition:?} is not a {t}-core")]
    NotCore { partition: Vec<usize>, t: usize },
    #[error("modulus must be at least {min}, got {t}")]
    Modulus { t: usize, min: usize },
    #[error("invalid Frobenius coordinates")]
    Frobenius,
}

/// A non-increasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

/// Box `(i, j)`: row `i`, column `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn transpose(self) -> Self {
        Self { i: self.j, j: self.i }
    }

    pub fn above_diagonal(self) -> bool {
        self.i > self.j
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookStat {
    pub i: usize,
    pub j: usize,
    pub h: usize,
    pub eps: i8,
}

impl HookStat {
    pub fn cell(&self) -> Cell {
        Cell::new(self.i, self.j)
    }

    pub fn on_diagonal(&self) -> bool {
        self.i == self.j
    }

    /// `h * eps` as a signed integer.
    pub fn signed(&self) -> i64 {
        self.h as i64 * self.eps as i64
    }
}

/// Principal hook lengths, Durfee size and `delta = (-1)^D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalProfile {
    pub delta_set: Vec<usize>,
    pub durfee: usize,
    pub sign: i8,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub self_conjugate: bool,
    pub doubled_distinct: bool,
    pub t_core: Option<bool>,
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = PartitionError;

    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        for (index, &value) in v.iter().enumerate() {
            if value <= 0 {
                return Err(PartitionError::NonPositive { index, value });
            }
            if index > 0 && value > v[index - 1] {
                return Err(PartitionError::Increasing { index });
            }
        }
        Ok(Self::from_sorted(v.into_iter().map(|p| p as usize).collect()))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: Vec<i64> =
            serde_json::from_str(s).map_err(|e| PartitionError::Syntax(e.to_string()))?;
        Self::try_from(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validating constructor; rejects zero parts and increases.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        Self::try_from(parts.into_iter().map(|p| p as i64).collect::<Vec<_>>())
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` for a 1-based row, 0 past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.i >= 1 && c.j >= 1 && c.j <= self.part(c.i)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |j| Cell::new(r + 1, j)))
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_sorted(parts)
    }

    /// Every box with its hook length and sign, in row-major order.
    pub fn hook_lengths(&self) -> Vec<HookStat> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight);
        for (r, &p) in self.parts.iter().enumerate() {
            let i = r + 1;
            for j in 1..=p {
                let h = p - j + conj.part(j) - i + 1;
                let eps = if i > j { -1 } else { 1 };
                out.push(HookStat { i, j, h, eps });
            }
        }
        out
    }

    pub fn hook(&self, c: Cell) -> Option<usize> {
        if !self.contains(c) {
            return None;
        }
        let leg = self.parts.iter().take_while(|&&p| p >= c.j).count() - c.i;
        Some(self.part(c.i) - c.j + leg + 1)
    }

    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(r, &p)| p > r)
            .count()
    }

    /// `(-1)^D`.
    pub fn delta(&self) -> i8 {
        if self.durfee().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Frobenius coordinates: arms `λ_i - i` and legs `λ*_i - i`, `i <= D`.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let d = self.durfee();
        let conj = self.conjugate();
        let arms = (1..=d).map(|i| self.part(i) - i).collect();
        let legs = (1..=d).map(|i| conj.part(i) - i).collect();
        (arms, legs)
    }

    pub fn profile(&self) -> PrincipalProfile {
        let (arms, legs) = self.frobenius();
        let delta_set = arms.iter().zip(&legs).map(|(a, b)| a + b + 1).collect();
        PrincipalProfile {
            delta_set,
            durfee: arms.len(),
            sign: self.delta(),
        }
    }

    /// Inverse of [`Partition::frobenius`]; both sequences must be strictly
    /// decreasing and of equal length.
    pub fn from_frobenius(arms: &[usize], legs: &[usize]) -> Result<Self, PartitionError> {
        let strictly_decreasing = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strictly_decreasing(arms) || !strictly_decreasing(legs) {
            return Err(PartitionError::Frobenius);
        }
        let d = arms.len();
        let mut parts: Vec<usize> = (0..d).map(|k| arms[k] + k + 1).collect();
        // column k+1 has length legs[k] + k + 1
        let mut row = d + 1;
        loop {
            let len = (0..d).filter(|&k| legs[k] + k + 1 >= row).count();
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        Ok(Self::from_sorted(parts))
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// `λ_i = λ*_i + 1` for every `i <= D`.
    pub fn is_doubled_distinct(&self) -> bool {
        let (arms, legs) = self.frobenius();
        arms.iter().zip(&legs).all(|(a, b)| *a == b + 1)
    }

    /// Boxes whose hook length is a multiple of `t`.
    pub fn hooks_div_t(&self, t: usize) -> Vec<HookStat> {
        self.hook_lengths()
            .into_iter()
            .filter(|s| t > 0 && s.h % t == 0)
            .collect()
    }

    pub fn is_t_core(&self, t: usize) -> bool {
        t > 0 && self.hook_lengths().iter().all(|s| s.h % t != 0)
    }

    pub fn classify(&self, t: Option<usize>) -> Flags {
        Flags {
            self_conjugate: self.is_self_conjugate(),
            doubled_distinct: self.is_doubled_distinct(),
            t_core: t.map(|t| self.is_t_core(t)),
        }
    }

    /// Removes the rim ribbon whose lowest-leftmost box is the end of the
    /// hook at `c`.
    fn remove_ribbon(&self, c: Cell) -> Self {
        let leg = self.parts.iter().take_while(|&&p| p >= c.j).count() - c.i;
        let mut parts = self.parts.clone();
        for r in c.i..c.i + leg {
            parts[r - 1] = self.part(r + 1) - 1;
        }
        parts[c.i + leg - 1] = c.j - 1;
        Self::from_unsorted(parts)
    }

    /// The `t`-core, by repeatedly removing ribbons of length `t`.
    pub fn t_core(&self, t: usize) -> Result<Self, PartitionError> {
        if t < 2 {
            return Err(PartitionError::Modulus { t, min: 2 });
        }
        let mut cur = self.clone();
        while let Some(s) = cur.hook_lengths().into_iter().find(|s| s.h == t) {
            cur = cur.remove_ribbon(s.cell());
        }
        Ok(cur)
    }

    /// Adds `μ0_i` boxes to column `i` of the shifted diagram of `μ0`.
    pub fn dd_double(mu0: &Partition) -> Result<Self, PartitionError> {
        if mu0.parts.windows(2).any(|w| w[0] == w[1]) {
            return Err(PartitionError::NotDistinct);
        }
        let arms = mu0.parts.clone();
        let legs: Vec<usize> = mu0.parts.iter().map(|p| p - 1).collect();
        Self::from_frobenius(&arms, &legs)
    }

    pub fn dd_undouble(&self) -> Result<Self, PartitionError> {
        if !self.is_doubled_distinct() {
            return Err(PartitionError::NotDoubledDistinct(self.parts.clone()));
        }
        Ok(Self::from_sorted(self.frobenius().0))
    }

    /// The three hook symmetries of doubled distinct partitions.
    pub fn dd_symmetry_check(&self) -> Result<bool, PartitionError> {
        if !self.is_doubled_distinct() {
            return Err(PartitionError::NotDoubledDistinct(self.parts.clone()));
        }
        let d = self.durfee();
        let h = |i: usize, j: usize| self.hook(Cell::new(i, j));
        for i in 1..=d {
            for j in 1..=d {
                if h(i, j) != h(j, i) {
                    return Ok(false);
                }
            }
            if h(i, i) != h(i, d + 1).map(|x| 2 * x) {
                return Ok(false);
            }
        }
        for c in self.cells().filter(|c| c.i > d && c.j <= d) {
            if h(c.i, c.j) != h(c.j, c.i + 1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Self-conjugate partition with the given odd principal hooks.
    pub fn sc_from_hooks(hooks: &[usize]) -> Result<Self, PartitionError> {
        let mut hooks = hooks.to_vec();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        if hooks.iter().any(|h| h % 2 == 0) || hooks.windows(2).any(|w| w[0] == w[1]) {
            return Err(PartitionError::Frobenius);
        }
        let arms: Vec<usize> = hooks.iter().map(|h| (h - 1) / 2).collect();
        Self::from_frobenius(&arms, &arms)
    }

    /// Doubled distinct partition with the given even principal hooks.
    pub fn dd_from_hooks(hooks: &[usize]) -> Result<Self, PartitionError> {
        let mut hooks = hooks.to_vec();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        if hooks.iter().any(|&h| h == 0 || h % 2 == 1) || hooks.windows(2).any(|w| w[0] == w[1]) {
            return Err(PartitionError::Frobenius);
        }
        let arms: Vec<usize> = hooks.iter().map(|h| h / 2).collect();
        let legs: Vec<usize> = hooks.iter().map(|h| h / 2 - 1).collect();
        Self::from_frobenius(&arms, &legs)
    }
}

/// The doubled distinct `ν` whose principal hooks are twice the merged
/// principal hooks of `λ` and `μ`.
pub fn pair_to_nu(lambda: &Partition, mu: &Partition) -> Result<Partition, PartitionError> {
    if !lambda.is_self_conjugate() {
        return Err(PartitionError::NotSelfConjugate(lambda.parts.clone()));
    }
    if !mu.is_doubled_distinct() {
        return Err(PartitionError::NotDoubledDistinct(mu.parts.clone()));
    }
    let mut hooks: Vec<usize> = lambda
        .profile()
        .delta_set
        .into_iter()
        .chain(mu.profile().delta_set)
        .map(|h| 2 * h)
        .collect();
    hooks.sort_unstable_by(|a, b| b.cmp(a));
    Partition::dd_from_hooks(&hooks)
}

pub fn nu_to_pair(nu: &Partition) -> Result<(Partition, Partition), PartitionError> {
    if !nu.is_doubled_distinct() {
        return Err(PartitionError::NotDoubledDistinct(nu.parts.clone()));
    }
    let halves: Vec<usize> = nu.profile().delta_set.iter().map(|h| h / 2).collect();
    let odd: Vec<usize> = halves.iter().copied().filter(|h| h % 2 == 1).collect();
    let even: Vec<usize> = halves.iter().copied().filter(|h| h % 2 == 0).collect();
    Ok((Partition::sc_from_hooks(&odd)?, Partition::dd_from_hooks(&even)?))
}

/// Shorthand for tests and examples: `p(&[4, 2, 1])`.
pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::partitions_of;
    use proptest::prelude::*;

    #[test]
    fn hooks_of_small_shapes() {
        assert!(Partition::empty().hook_lengths().is_empty());
        let one = p(&[1]).hook_lengths();
        assert_eq!(one, vec![HookStat { i: 1, j: 1, h: 1, eps: 1 }]);
        assert!(one[0].on_diagonal());
        let big = p(&[6, 5, 3, 2, 1, 1, 1]);
        assert_eq!(big.hook(Cell::new(1, 1)), Some(12));
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[7, 5, 3, 2, 2, 1, 1]).conjugate(), p(&[7, 5, 3, 2, 2, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn principal_profiles() {
        let e = Partition::empty().profile();
        assert_eq!((e.durfee, e.sign, e.delta_set.len()), (0, 1, 0));
        let sc = p(&[7, 5, 3, 2, 2, 1, 1]).profile();
        assert_eq!(sc.delta_set, vec![13, 7, 1]);
        assert_eq!((sc.durfee, sc.sign), (3, -1));
        let two = p(&[2]).profile();
        assert_eq!((two.delta_set, two.durfee, two.sign), (vec![2], 1, -1));
    }

    #[test]
    fn t_cores_by_ribbon_removal() {
        assert_eq!(p(&[2, 1]).t_core(3).unwrap(), Partition::empty());
        let core = p(&[5, 3, 1, 1]);
        assert_eq!(core.t_core(3).unwrap(), core);
        assert_eq!(p(&[7, 6, 4, 2, 2, 1]).t_core(3).unwrap(), p(&[5, 3, 1, 1]));
        assert!(p(&[1]).t_core(1).is_err());
    }

    #[test]
    fn hooks_divisible_by_t() {
        assert!(p(&[5, 3, 1, 1]).hooks_div_t(3).is_empty());
        let all: Vec<_> = p(&[2]).hooks_div_t(1).iter().map(|s| (s.h, s.eps)).collect();
        assert_eq!(all, vec![(2, 1), (1, 1)]);
        let h = p(&[7, 7, 7, 5, 3, 3]).hooks_div_t(3);
        assert_eq!(h.iter().filter(|s| s.h == 12).count(), 1);
        assert_eq!(h.iter().filter(|s| s.h == 9).count(), 2);
    }

    #[test]
    fn doubling() {
        assert_eq!(Partition::dd_double(&p(&[4, 1])).unwrap(), p(&[5, 3, 1, 1]));
        assert_eq!(Partition::dd_double(&Partition::empty()).unwrap(), Partition::empty());
        assert_eq!(Partition::dd_double(&p(&[1])).unwrap(), p(&[2]));
        assert_eq!(p(&[5, 3, 1, 1]).dd_undouble().unwrap(), p(&[4, 1]));
        assert_eq!(Partition::dd_double(&p(&[2, 2])), Err(PartitionError::NotDistinct));
        assert!(p(&[2, 1]).dd_undouble().is_err());
    }

    #[test]
    fn classification() {
        assert!(p(&[7, 5, 3, 2, 2, 1, 1]).classify(None).self_conjugate);
        let f = p(&[5, 3, 1, 1]).classify(Some(3));
        assert!(f.doubled_distinct && f.t_core == Some(true));
        let f = p(&[2, 1]).classify(Some(3));
        assert_eq!(f.t_core, Some(false));
        assert!(!f.doubled_distinct);
    }

    #[test]
    fn dd_symmetries() {
        assert_eq!(p(&[6, 6, 5, 3, 2]).dd_symmetry_check(), Ok(true));
        assert_eq!(p(&[2]).dd_symmetry_check(), Ok(true));
        assert_eq!(Partition::empty().dd_symmetry_check(), Ok(true));
        assert!(p(&[3]).dd_symmetry_check().is_err());
    }

    #[test]
    fn pair_and_nu() {
        let e = Partition::empty();
        assert_eq!(pair_to_nu(&e, &e).unwrap(), e);
        let nu = pair_to_nu(&p(&[1]), &e).unwrap();
        assert_eq!(nu, p(&[2]));
        let nu = pair_to_nu(&p(&[7, 5, 3, 2, 2, 1, 1]), &p(&[5, 3, 1, 1])).unwrap();
        assert_eq!(nu.profile().delta_set, vec![26, 16, 14, 4, 2]);
        assert_eq!(nu.weight(), 62);
        assert_eq!(nu_to_pair(&nu).unwrap(), (p(&[7, 5, 3, 2, 2, 1, 1]), p(&[5, 3, 1, 1])));
        assert!(pair_to_nu(&p(&[2]), &e).is_err());
    }

    #[test]
    fn parsing_reports_offending_index() {
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!(
            "[3,1,2]".parse::<Partition>(),
            Err(PartitionError::Increasing { index: 2 })
        );
        assert_eq!(
            "[3,0]".parse::<Partition>(),
            Err(PartitionError::NonPositive { index: 1, value: 0 })
        );
        assert_eq!(serde_json::to_string(&p(&[5, 3, 1, 1])).unwrap(), "[5,3,1,1]");
        let stats = serde_json::to_string(&p(&[1]).hook_lengths()).unwrap();
        assert_eq!(stats, r#"[{"i":1,"j":1,"h":1,"eps":1}]"#);
    }

    #[test]
    fn sign_identity_on_doubled_distinct() {
        for w in (0..=30).step_by(2) {
            for lam in partitions_of(w).filter(Partition::is_doubled_distinct) {
                let eps: i64 = lam.hook_lengths().iter().map(|s| s.eps as i64).product();
                let lhs = lam.delta() as i64 * eps;
                let rhs = if (w / 2) % 2 == 0 { 1 } else { -1 };
                assert_eq!(lhs, rhs, "{lam}");
                let weak = lam.hook_lengths().iter().filter(|s| s.i <= s.j).count();
                assert_eq!(if weak % 2 == 0 { 1 } else { -1 }, rhs * lam.delta() as i64);
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..12, 0..10).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(l in arb_partition()) {
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate().weight(), l.weight());
        }

        #[test]
        fn hook_multiset_is_conjugation_invariant(l in arb_partition()) {
            let mut a: Vec<_> = l.hook_lengths().iter().map(|s| (s.j, s.i, s.h)).collect();
            let mut b: Vec<_> = l.conjugate().hook_lengths().iter().map(|s| (s.i, s.j, s.h)).collect();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn frobenius_round_trip(l in arb_partition()) {
            let (a, b) = l.frobenius();
            prop_assert_eq!(Partition::from_frobenius(&a, &b).unwrap(), l.clone());
            let prof = l.profile();
            prop_assert_eq!(prof.delta_set.len(), prof.durfee);
            prop_assert!(prof.delta_set.windows(2).all(|w| w[0] > w[1]));
        }

        #[test]
        fn core_weight_is_congruent(l in arb_partition(), t in 2usize..6) {
            let c = l.t_core(t).unwrap();
            prop_assert!(c.is_t_core(t));
            prop_assert_eq!((l.weight() - c.weight()) % t, 0);
        }

        #[test]
        fn doubling_round_trip(v in prop::collection::btree_set(1usize..12, 0..6)) {
            let mu0 = Partition::from_unsorted(v.into_iter().collect());
            let mu = Partition::dd_double(&mu0).unwrap();
            prop_assert!(mu.is_doubled_distinct());
            prop_assert_eq!(mu.weight(), 2 * mu0.weight());
            prop_assert_eq!(mu.dd_undouble().unwrap(), mu0);
            prop_assert_eq!(mu.dd_symmetry_check(), Ok(true));
        }
    }
}
