//! The bi-infinite binary word of a partition and the Littlewood
//! decomposition.
//!
//! The word reads the boundary of the Ferrers diagram from the top-left:
//! `1` is a horizontal step and `0` a vertical one. It starts with
//! infinitely many `0`s and ends with infinitely many `1`s. In canonical
//! form the dot sits where the number of `1`s before it equals the number
//! of `0`s after it. A box corresponds to a pair of positions `i < j` with
//! `c_i = 1`, `c_j = 0`, and its hook length is `j - i`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Cell, Partition, PartitionError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("unexpected character `{0}` in word")]
    BadChar(char),
    #[error("word needs exactly one `.`")]
    Dot,
    #[error("window must start with 1 and end with 0")]
    NotTrimmed,
    #[error("dot is not at the balance point")]
    NotCanonical,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A finite window of a canonical word. Positions `-dot..len-dot` are
/// stored; everything before is `0` and everything after is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CanonicalWord {
    bits: Vec<u8>,
    dot: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WordForm {
    SelfConjugate,
    DoubledDistinct,
    /// Only the empty partition.
    Both,
    Neither,
}

impl CanonicalWord {
    pub fn from_partition(lam: &Partition) -> Self {
        let mut bits = Vec::with_capacity(lam.len() + lam.part(1));
        let mut prev = 0;
        for &row in lam.parts().iter().rev() {
            bits.extend(std::iter::repeat_n(1, row - prev));
            bits.push(0);
            prev = row;
        }
        let zeros = bits.iter().filter(|&&b| b == 0).count();
        let mut ones_before = 0;
        let mut zeros_after = zeros;
        let mut dot = 0;
        while ones_before != zeros_after {
            if bits[dot] == 1 {
                ones_before += 1;
            } else {
                zeros_after -= 1;
            }
            dot += 1;
        }
        Self { bits, dot }
    }

    /// Validates a window given as bits and a dot offset.
    pub fn new(bits: Vec<u8>, dot: usize) -> Result<Self, WordError> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(WordError::BadChar(char::from(b'0' + b)));
        }
        if dot > bits.len() {
            return Err(WordError::Dot);
        }
        if !bits.is_empty() && (bits[0] != 1 || bits[bits.len() - 1] != 0) {
            return Err(WordError::NotTrimmed);
        }
        let ones_before = bits[..dot].iter().filter(|&&b| b == 1).count();
        let zeros_after = bits[dot..].iter().filter(|&&b| b == 0).count();
        if ones_before != zeros_after {
            return Err(WordError::NotCanonical);
        }
        Ok(Self { bits, dot })
    }

    pub fn to_partition(&self) -> Partition {
        partition_of_bits(&self.bits)
    }

    pub fn window(&self) -> &[u8] {
        &self.bits
    }

    pub fn dot(&self) -> usize {
        self.dot
    }

    /// First stored position (`-dot`).
    pub fn start(&self) -> i64 {
        -(self.dot as i64)
    }

    /// One past the last stored position.
    pub fn end(&self) -> i64 {
        (self.bits.len() - self.dot) as i64
    }

    /// `c_p` for any integer position.
    pub fn bit(&self, p: i64) -> u8 {
        if p < self.start() {
            0
        } else if p >= self.end() {
            1
        } else {
            self.bits[(p - self.start()) as usize]
        }
    }

    pub fn form(&self) -> WordForm {
        word_form(self)
    }
}

/// The partition of any finite window (implicit `0`s before, `1`s after):
/// each `0` closes a row whose length is the number of `1`s before it.
pub(crate) fn partition_of_bits(bits: &[u8]) -> Partition {
    let mut ones = 0;
    let mut rows = Vec::new();
    for &b in bits {
        if b == 1 {
            ones += 1;
        } else if ones > 0 {
            rows.push(ones);
        }
    }
    rows.reverse();
    Partition::from_sorted(rows)
}

impl fmt::Display for CanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.bits.iter().enumerate() {
            if k == self.dot {
                f.write_str(".")?;
            }
            write!(f, "{b}")?;
        }
        if self.dot == self.bits.len() {
            f.write_str(".")?;
        }
        Ok(())
    }
}

impl FromStr for CanonicalWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::new();
        let mut dot = None;
        for ch in s.trim().chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                '.' if dot.is_none() => dot = Some(bits.len()),
                _ if ch == '.' => return Err(WordError::Dot),
                _ => return Err(WordError::BadChar(ch)),
            }
        }
        Self::new(bits, dot.ok_or(WordError::Dot)?)
    }
}

impl TryFrom<String> for CanonicalWord {
    type Error = WordError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<CanonicalWord> for String {
    fn from(w: CanonicalWord) -> Self {
        w.to_string()
    }
}

pub fn to_word(lam: &Partition) -> CanonicalWord {
    CanonicalWord::from_partition(lam)
}

pub fn from_word(w: &CanonicalWord) -> Partition {
    w.to_partition()
}

/// Reverse, then complement every bit.
pub fn mirror_f(v: &[u8]) -> Vec<u8> {
    v.iter().rev().map(|b| 1 - b).collect()
}

/// Reads off the DD form `c_0 = 1, c_p = 1 - c_{-p}` and the SC form
/// `c_p = 1 - c_{-1-p}`.
pub fn word_form(w: &CanonicalWord) -> WordForm {
    let reach = w.start().abs().max(w.end()) + 1;
    let sc = (0..=reach).all(|p| w.bit(p) == 1 - w.bit(-1 - p));
    let dd = w.bit(0) == 1 && (1..=reach).all(|p| w.bit(p) == 1 - w.bit(-p));
    match (sc, dd) {
        (true, true) => WordForm::Both,
        (true, false) => WordForm::SelfConjugate,
        (false, true) => WordForm::DoubledDistinct,
        (false, false) => WordForm::Neither,
    }
}

/// A `t`-core together with its `t`-quotient `(λ^0, ..., λ^{t-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientVector {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub modulus: usize,
}

impl QuotientVector {
    pub fn weight(&self) -> usize {
        self.core.weight() + self.modulus * self.quotient.iter().map(Partition::weight).sum::<usize>()
    }
}

/// Section `k` of a word: the bits at positions `a*t + k` for `a` in
/// `lo..hi`, where the range covers the whole window.
struct Sections {
    t: i64,
    lo: i64,
    hi: i64,
    bits: Vec<Vec<u8>>,
}

impl Sections {
    fn of(w: &CanonicalWord, t: usize) -> Self {
        let t = t as i64;
        let lo = w.start().div_euclid(t) - 1;
        let hi = w.end().div_euclid(t) + 2;
        let bits = (0..t)
            .map(|k| (lo..hi).map(|a| w.bit(a * t + k)).collect())
            .collect();
        Self { t, lo, hi, bits }
    }

    /// Index `a` of position `p`, and its section.
    fn locate(&self, p: i64) -> (usize, usize) {
        (p.rem_euclid(self.t) as usize, (p.div_euclid(self.t) - self.lo) as usize)
    }
}

/// Canonical word of `λ` spread over section positions, with its dot at `b`.
fn section_bits(lam: &Partition, b: i64, lo: i64, hi: i64) -> Vec<u8> {
    let w = to_word(lam);
    (lo..hi).map(|a| w.bit(a - b)).collect()
}

/// Index of the first `1` in a sorted section `0...01...1`.
fn boundary(section: &[u8], lo: i64) -> i64 {
    lo + section.iter().take_while(|&&b| b == 0).count() as i64
}

fn check_modulus(t: usize) -> Result<(), PartitionError> {
    if t < 2 {
        Err(PartitionError::Modulus { t, min: 2 })
    } else {
        Ok(())
    }
}

/// Splits `λ` into its `t`-core and `t`-quotient. The core comes from
/// sliding every `10` to `01` inside each section.
pub fn littlewood(lam: &Partition, t: usize) -> Result<QuotientVector, PartitionError> {
    check_modulus(t)?;
    let w = to_word(lam);
    let s = Sections::of(&w, t);
    let quotient = s.bits.iter().map(|b| partition_of_bits(b)).collect();
    let mut merged = Vec::with_capacity(s.bits.len() * s.bits[0].len());
    let sorted: Vec<Vec<u8>> = s
        .bits
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    for a in 0..(s.hi - s.lo) as usize {
        for sec in &sorted {
            merged.push(sec[a]);
        }
    }
    Ok(QuotientVector {
        core: partition_of_bits(&merged),
        quotient,
        modulus: t,
    })
}

pub fn littlewood_inverse(qv: &QuotientVector) -> Result<Partition, PartitionError> {
    let t = qv.modulus;
    check_modulus(t)?;
    if !qv.core.is_t_core(t) {
        return Err(PartitionError::NotCore { partition: qv.core.parts().to_vec(), t });
    }
    if qv.quotient.len() != t {
        return Err(PartitionError::Modulus { t: qv.quotient.len(), min: t });
    }
    let w = to_word(&qv.core);
    let s = Sections::of(&w, t);
    let pad = qv.quotient.iter().map(|q| (q.len() + q.part(1)) as i64).max().unwrap_or(0) + 1;
    let (lo, hi) = (s.lo - pad, s.hi + pad);
    let secs: Vec<Vec<u8>> = qv
        .quotient
        .iter()
        .zip(&s.bits)
        .map(|(q, core_sec)| section_bits(q, boundary(core_sec, s.lo), lo, hi))
        .collect();
    let mut merged = Vec::new();
    for a in 0..(hi - lo) as usize {
        for sec in &secs {
            merged.push(sec[a]);
        }
    }
    Ok(partition_of_bits(&merged))
}

/// Cell of the box given by positions `i < j` of a word: row is the number
/// of `0`s at or after `j`, column the number of `1`s at or before `i`.
fn cell_of(bits: &[u8], i: usize, j: usize) -> Cell {
    let row = bits[j..].iter().filter(|&&b| b == 0).count();
    let col = bits[..=i].iter().filter(|&&b| b == 1).count();
    Cell::new(row, col)
}

/// Sends each box of `λ` with hook divisible by `t` to `(k, box of λ^k)`.
pub fn box_map(lam: &Partition, t: usize) -> Result<BTreeMap<Cell, (usize, Cell)>, PartitionError> {
    check_modulus(t)?;
    let w = to_word(lam);
    let s = Sections::of(&w, t);
    let mut out = BTreeMap::new();
    let start = w.start();
    let bits = w.window();
    for i in 0..bits.len() {
        if bits[i] != 1 {
            continue;
        }
        for j in (i + t..bits.len()).step_by(t) {
            if bits[j] != 0 {
                continue;
            }
            let src = cell_of(bits, i, j);
            let (k, ai) = s.locate(start + i as i64);
            let (_, aj) = s.locate(start + j as i64);
            out.insert(src, (k, cell_of(&s.bits[k], ai, aj)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::partitions_of;
    use crate::partition::p;
    use proptest::prelude::*;

    #[test]
    fn words_of_examples() {
        assert_eq!(to_word(&Partition::empty()).to_string(), ".");
        assert_eq!(to_word(&p(&[4, 2, 1, 1])).to_string(), "1001.0110");
        assert_eq!(to_word(&p(&[1])).to_string(), "1.0");
        let w: CanonicalWord = "1001.0110".parse().unwrap();
        assert_eq!(from_word(&w), p(&[4, 2, 1, 1]));
        assert_eq!(w.bit(-5), 0);
        assert_eq!(w.bit(4), 1);
        assert_eq!(serde_json::to_string(&w).unwrap(), "\"1001.0110\"");
    }

    #[test]
    fn rejects_non_canonical() {
        assert_eq!("10.010".parse::<CanonicalWord>(), Err(WordError::NotCanonical));
        assert_eq!("01.0".parse::<CanonicalWord>(), Err(WordError::NotTrimmed));
        assert_eq!("1.2".parse::<CanonicalWord>(), Err(WordError::BadChar('2')));
        assert_eq!("10".parse::<CanonicalWord>(), Err(WordError::Dot));
    }

    #[test]
    fn mirror() {
        let bits = |s: &str| s.bytes().map(|b| b - b'0').collect::<Vec<u8>>();
        assert_eq!(mirror_f(&bits("1001010")), bits("1010110"));
        assert!(mirror_f(&[]).is_empty());
        assert_eq!(mirror_f(&bits("10")), bits("10"));
    }

    #[test]
    fn forms() {
        assert_eq!(word_form(&to_word(&p(&[5, 3, 1, 1]))), WordForm::DoubledDistinct);
        assert_eq!(word_form(&to_word(&p(&[7, 5, 3, 2, 2, 1, 1]))), WordForm::SelfConjugate);
        assert_eq!(word_form(&to_word(&p(&[2, 1]))), WordForm::SelfConjugate);
        assert_eq!(word_form(&to_word(&Partition::empty())), WordForm::Both);
        assert_eq!(word_form(&to_word(&p(&[3, 1]))), WordForm::DoubledDistinct);
        assert_eq!(word_form(&to_word(&p(&[3, 2]))), WordForm::Neither);
    }

    #[test]
    fn forms_agree_with_classification() {
        for n in 1..=16 {
            for lam in partitions_of(n) {
                let f = word_form(&to_word(&lam));
                assert_eq!(f == WordForm::SelfConjugate, lam.is_self_conjugate(), "{lam}");
                assert_eq!(f == WordForm::DoubledDistinct, lam.is_doubled_distinct(), "{lam}");
            }
        }
    }

    #[test]
    fn core_of_a_core_is_itself() {
        let mu = p(&[5, 3, 1, 1]);
        let qv = littlewood(&mu, 3).unwrap();
        assert_eq!(qv.core, mu);
        assert!(qv.quotient.iter().all(Partition::is_empty));
        assert!(box_map(&mu, 3).unwrap().is_empty());
    }

    #[test]
    fn decomposition_of_a_doubled_distinct_partition() {
        let lam = p(&[8, 7, 6, 5, 3, 2, 1]);
        let qv = littlewood(&lam, 3).unwrap();
        assert_eq!(qv.quotient[2], qv.quotient[1].conjugate());
        assert!(qv.quotient[0].is_doubled_distinct());
        assert!(qv.core.is_doubled_distinct() && qv.core.is_t_core(3));
        assert_eq!(qv.core, p(&[2]));
        assert_eq!(qv.quotient, vec![p(&[2]), p(&[2, 1, 1]), p(&[3, 1])]);
        assert_eq!(littlewood_inverse(&qv).unwrap(), lam);
    }

    #[test]
    fn hook_correspondence_on_example() {
        let lam = p(&[7, 7, 7, 5, 3, 3]);
        let map = box_map(&lam, 3).unwrap();
        let qv = littlewood(&lam, 3).unwrap();
        for (src, (k, dst)) in &map {
            let h = lam.hook(*src).unwrap();
            assert_eq!(h, 3 * qv.quotient[*k].hook(*dst).unwrap());
            if h == 12 {
                assert_eq!(*k, 0);
            }
        }
        let mut nines: Vec<usize> = map
            .iter()
            .filter(|(src, _)| lam.hook(**src) == Some(9))
            .map(|(_, (k, _))| *k)
            .collect();
        nines.sort_unstable();
        assert_eq!(nines, vec![1, 2]);
    }

    #[test]
    fn two_quotient_of_small_shape() {
        let lam = p(&[3, 1]);
        let map = box_map(&lam, 2).unwrap();
        let qv = littlewood(&lam, 2).unwrap();
        let mut hooks: Vec<(usize, usize)> = map
            .iter()
            .map(|(src, (k, dst))| (lam.hook(*src).unwrap(), qv.quotient[*k].hook(*dst).unwrap()))
            .collect();
        hooks.sort_unstable();
        assert_eq!(hooks, vec![(2, 1), (4, 2)]);
    }

    #[test]
    fn inverse_rejects_non_core() {
        let qv = QuotientVector { core: p(&[3]), quotient: vec![Partition::empty(); 3], modulus: 3 };
        assert!(littlewood_inverse(&qv).is_err());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..10, 0..9).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn word_round_trip(l in arb_partition()) {
            let w = to_word(&l);
            prop_assert_eq!(w.to_string().parse::<CanonicalWord>().unwrap(), w.clone());
            prop_assert_eq!(from_word(&w), l.clone());
            prop_assert_eq!(w.window().iter().take(w.dot()).filter(|&&b| b == 1).count(), l.durfee());
        }

        #[test]
        fn littlewood_round_trip(l in arb_partition(), t in 2usize..6) {
            let qv = littlewood(&l, t).unwrap();
            prop_assert_eq!(qv.weight(), l.weight());
            prop_assert_eq!(&qv.core, &l.t_core(t).unwrap());
            prop_assert_eq!(littlewood_inverse(&qv).unwrap(), l);
        }

        #[test]
        fn mirror_is_an_involution(v in prop::collection::vec(0u8..2, 0..20)) {
            prop_assert_eq!(mirror_f(&mirror_f(&v)), v);
        }
    }
}
