//! The registry of identities: each one pairs an enumerated sum with a
//! product side, and `verify` compares them coefficient by coefficient.

mod kostant;
mod macdonald;
mod sums;

pub use kostant::{checks as kostant_checks, f_polys, samples as kostant_samples, CheckKind, KostantCheck};
pub use macdonald::{macdonald_sum, MacError, MacType};
pub use sums::*;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::One;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bijection::{hook_product_poly, merged_delta, q_delta, q_delta_poly};
use crate::eta::{eta_factor_rat, eta_product, eta_product_rat, EtaFactor};
use crate::family::{dd_partitions_of, pairs};
use crate::partition::{nu_to_pair, pair_to_nu};
use crate::poly::{MultiPoly, PolyError, Var};
use crate::rational::{int, rat, sign_pow, Rational};
use crate::series::{euler_product, Mismatch, PolySeries, RatSeries, SeriesError};

macro_rules! registry {
    ($($id:ident => $name:literal, $formula:literal;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId { $($id),* }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$id),*];

            pub fn name(self) -> &'static str {
                match self { $(IdentityId::$id => $name),* }
            }

            /// The statement in plain notation.
            pub fn formula(self) -> &'static str {
                match self { $(IdentityId::$id => $formula),* }
            }
        }
    };
}

registry! {
    No => "NO", "Σ_λ x^{|λ|} ∏_{h∈H(λ)} (1 - z/h²) = ∏_k (1 - x^k)^{z-1}";
    Thm1 => "THM1", "Σ_{λ∈DD} δ_λ x^{|λ|/2} ∏_{h∈H(λ)} (1 - (2t+2)/(h ε_h)) = ∏_k (1 - x^k)^{2t²+t}";
    Thm2 => "THM2", "Σ_{λ∈DD} δ_λ x^{|λ|/2} ∏_{h∈H_t(λ)} (y - yt(2z+2)/(ε_h h)) = ∏_k (1 - x^k)(1 - x^{kt})^{t'-1}(1 - x^{kt}y^{2k})^{(2z+1)(zt+3t')}, t = 2t'+1";
    HookSympl => "HOOK_SYMPL", "Σ_{λ∈DD, |λ|=2n} ∏_{h∈H(λ)} 1/h = 1/(2ⁿ n!)";
    HookGen => "HOOK_GEN", "Σ_{λ∈DD, |λ|=2tn, #H_t(λ)=2n} δ_λ ∏_{h∈H_t(λ)} 1/(h ε_h) = (-1)ⁿ/(n! tⁿ 2ⁿ)";
    MacA => "MAC_A", "c₀ Σ_v x^{‖v‖²/2t - (t²-1)/24} ∏_{i<j} (v_i - v_j) = ∏_k (1 - x^k)^{t²-1}, v_i ≡ i mod t, Σ v_i = 0";
    MacC => "MAC_C", "c₁ Σ_v x^{‖v‖²/(4t+4) - (2t²+t)/24} ∏ v_i ∏_{i<j} (v_i² - v_j²) = ∏_k (1 - x^k)^{2t²+t}, v_i ≡ i mod 2t+2";
    MacB => "MAC_B", "c_B Σ_v x^{‖v‖²/8(2t-1) - (2t²+t)/24} ∏ v_i ∏_{i<j} (v_i² - v_j²) = ∏_k (1 - x^k)^{2t²+t}, v_i ≡ 2i-1 mod 4t-2, Σ v_i ≡ t² mod 8t-4";
    MacBc => "MAC_BC", "c_BC Σ_v x^{‖v‖²/8(2t+1) - (2t²-t)/24} (-1)^{(Σ v_i - t)/2} ∏_{i<j} (v_i² - v_j²) = ∏_k (1 - x^k)^{2t²-t}, v_i ≡ 2i-1 mod 4t+2";
    GenfunHt => "GENFUN_HT", "Σ_{(λ,μ)∈SC_(t)×DD_(t)} q^{|λ|+|μ|} = ∏_k (1 - q^{2k})(1 - q^{tk})(1 - q^{2tk})^{t-2} / (1 - q^k)";
    Lemma42 => "LEMMA42", "Σ_{λ∈DD_(t)} δ_λ x^{|λ|/2} = ∏_k (1 - x^k)(1 - x^{kt})^{t'-1}, t = 2t'+1";
    ThmPair => "THM_PAIR", "Σ_{(λ,μ)∈SC×DD} δ_λ δ_μ x^{|λ|+|μ|} Q_Δ(t) = ∏_k (1 - x^k)^{2t²+t}, Q_Δ(t) = ∏_{h∈Δ} (1 - (2t+2)/h)(1 - (t+1)/h) ∏_{j<h} (1 - ((2t+2)/(h + τ_j j))²)";
    Thm310 => "THM310", "(λ,μ) ↦ ν ∈ DD with principal hooks 2Δ: |ν| = 2(|λ|+|μ|), δ_ν = δ_λ δ_μ, Q_Δ(t) = ∏_{h∈H(ν)} (1 - (2t+2)/(h ε_h))";
    CorZ1 => "COR_Z1", "Σ_{λ∈DD} δ_λ x^{|λ|/2} y^{#H_t(λ)} = ∏_k (1 - x^k)(1 - x^{kt})^{t'-1}(1 - x^{kt}y^{2k})^{1-t'}";
    CorZ1y1 => "COR_Z1Y1", "Σ_{λ∈DD} δ_λ x^{|λ|/2} = ∏_k (1 - x^k)";
    CorYI => "COR_Y_I", "Σ_{λ∈DD} δ_λ x^{|λ|/2} (-1)^{#H_t(λ)/2} = ∏_k (1 - x^k) ∏_{k odd} ((1 - x^{kt})/(1 + x^{kt}))^{t'-1}";
    CorY1 => "COR_Y1", "Σ_{λ∈DD} δ_λ x^{|λ|/2} ∏_{h∈H_t(λ)} (1 - t(2z+2)/(ε_h h)) = ∏_k (1 - x^k)(1 - x^{kt})^{(z+1)(2zt+2t-3)}";
    CorZp1 => "COR_ZP1", "Σ_{λ∈DD} δ_λ x^{|λ|/2} Σ_{h∈H_t(λ), h∈Δ} 1/h = -1/(2t) ∏_k (1 - x^k) Σ_{m≥1} x^{tm}/(m(1 - x^{tm}))";
    CorExp => "COR_EXP", "Σ_{λ∈DD} δ_λ x^{|λ|/2} ∏_{h∈H_t(λ)} bt/(h ε_h) = exp(-tb²x^t/2) ∏_k (1 - x^k)(1 - x^{kt})^{t'-1}";
    CorT1 => "COR_T1", "Σ_{λ∈DD} x^{|λ|/2} ∏_{h∈H(λ)} b/h = exp(b²x/2)";
    Cor411 => "COR_411", "Σ_{λ∈DD, |λ|=2tn, t-core of λ empty} δ_λ ∏_{h∈H_t(λ)} 1/(h ε_h) = (-1)ⁿ/(n! tⁿ 2ⁿ)";
    Cor412 => "COR_412", "Σ_{λ∈DD, |λ|=2tn+m, #H_t(λ)=2n} δ_λ ∏_{h∈H_t(λ)} 1/(h ε_h) = (-1)ⁿ c_t(m)/(n! tⁿ 2ⁿ), c_t(m) = Σ δ over DD t-cores of weight m";
    Cor413 => "COR_413", "Σ_{λ∈DD, |λ|=2tn, #H_t(λ)=2n} δ_λ ∏_{h∈H_t(λ)} 1/(h ε_h) Σ_{h∈H_t(λ)} h ε_h = 3(-1)ⁿ/((n-1)! tⁿ 2ⁿ)";
    Kostant => "KOSTANT", "∏_n (1 - x^n)^s = Σ_k f_k(s) x^k: (-1)^k f_k(2s²+s) > 0 for s > k-1, f_k(m²-1) ≠ 0 for m ≥ max(k,4)";
    ScCcheck => "SC_CCHECK", "Σ_{λ∈SC} δ_λ x^{|λ|} ∏_{h∈H(λ)} (1 - 2z/(h ε_h)) = (∏_i (1 - x^{2i})^{z+1} / (1 - x^i))^{2z-1}";
    SignEq25 => "SIGN_EQ25", "δ_λ ∏_{h∈H(λ)} ε_h = (-1)^{|λ|/2} for λ ∈ DD";
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| IdentityError::Unknown(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// What the parameter `t` must satisfy, if the identity takes one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TRule {
    None,
    Odd,
    AtLeast(usize),
    OddAtLeast3,
}

/// Which coefficient ring an identity lives in; decides the quick-profile
/// order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Symbolic,
    Numeric,
}

impl IdentityId {
    pub fn t_rule(self) -> TRule {
        use IdentityId::*;
        match self {
            Thm2 | HookGen | Cor411 | Cor412 | Cor413 | Lemma42 | CorZ1 | CorYI | CorY1 | CorZp1 | CorExp => TRule::Odd,
            MacA => TRule::OddAtLeast3,
            MacC => TRule::AtLeast(2),
            MacB => TRule::AtLeast(3),
            MacBc | GenfunHt => TRule::AtLeast(1),
            No | Thm1 | HookSympl | ThmPair | Thm310 | CorZ1y1 | CorT1 | Kostant | ScCcheck | SignEq25 => TRule::None,
        }
    }

    pub fn kind(self) -> Kind {
        use IdentityId::*;
        match self {
            No | Thm1 | Thm2 | ThmPair | CorZ1 | CorYI | CorY1 | CorExp | CorT1 | Kostant | ScCcheck => Kind::Symbolic,
            _ => Kind::Numeric,
        }
    }

    /// The order used when none is given, and by the full profile.
    pub fn default_order(self) -> usize {
        use IdentityId::*;
        match self {
            No | Thm1 | ThmPair | ScCcheck | Kostant => 12,
            Thm2 | CorZ1 | CorZ1y1 | CorYI | CorY1 | CorZp1 | CorExp | CorT1 => 10,
            MacA | MacC | MacB | MacBc => 20,
            GenfunHt | Lemma42 => 30,
            HookSympl => 8,
            HookGen | Cor411 | Cor413 => 4,
            Cor412 => 2,
            Thm310 | SignEq25 => 15,
        }
    }

    /// Coefficients are indexed by `n` rather than by a power of `x`.
    pub fn indexed_by_n(self) -> bool {
        matches!(self, IdentityId::HookSympl | IdentityId::HookGen | IdentityId::Cor411 | IdentityId::Cor412 | IdentityId::Cor413)
    }

    fn mac_type(self) -> Option<MacType> {
        match self {
            IdentityId::MacA => Some(MacType::A),
            IdentityId::MacC => Some(MacType::C),
            IdentityId::MacB => Some(MacType::B),
            IdentityId::MacBc => Some(MacType::BC),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

impl Params {
    pub fn t(t: usize) -> Self {
        Self { t: Some(t), ..Self::default() }
    }
}

#[derive(Debug, Error)]
pub enum IdentityError {
    #[error("unknown identity `{0}`")]
    Unknown(String),
    #[error("{0}")]
    Parameter(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Macdonald(#[from] MacError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn param_err(msg: impl Into<String>) -> IdentityError {
    IdentityError::Parameter(msg.into())
}

/// Checks `params` against the identity and returns `t` when it takes one.
pub fn validate(id: IdentityId, params: &Params) -> Result<Option<usize>, IdentityError> {
    let t = match (id.t_rule(), params.t) {
        (TRule::None, None) => None,
        (TRule::None, Some(_)) => return Err(param_err(format!("{id} takes no --t"))),
        (_, None) => return Err(param_err(format!("{id} needs --t"))),
        (TRule::Odd, Some(t)) if t % 2 == 0 => {
            let hint = if id == IdentityId::Thm2 {
                "; the even case goes through the self-conjugate expansion, see SC_CCHECK"
            } else {
                ""
            };
            return Err(param_err(format!("{id} needs an odd t, got {t}{hint}")));
        }
        (TRule::OddAtLeast3, Some(t)) if t < 3 || t % 2 == 0 => {
            return Err(param_err(format!("{id} needs an odd t >= 3, got {t}")))
        }
        (TRule::AtLeast(min), Some(t)) if t < min => return Err(param_err(format!("{id} needs t >= {min}, got {t}"))),
        (_, Some(t)) => Some(t),
    };
    if params.m.is_some() != (id == IdentityId::Cor412) {
        return Err(param_err(if id == IdentityId::Cor412 {
            format!("{id} needs --m")
        } else {
            format!("{id} takes no --m")
        }));
    }
    if params.n.is_some() && !id.indexed_by_n() {
        return Err(param_err(format!("{id} takes no --n")));
    }
    Ok(t)
}

/// A series on each side of a comparison.
#[derive(Clone, Debug, PartialEq)]
pub enum Sides {
    Rat(RatSeries, RatSeries),
    Poly(PolySeries, PolySeries),
}

impl Sides {
    pub fn first_mismatch(&self) -> Option<Mismatch> {
        match self {
            Sides::Rat(a, b) => a.first_mismatch(b),
            Sides::Poly(a, b) => a.first_mismatch(b),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (l, r) = match self {
            Sides::Rat(a, b) => (a.to_json(), b.to_json()),
            Sides::Poly(a, b) => (a.to_json(), b.to_json()),
        };
        serde_json::json!({ "lhs": l, "rhs": r })
    }
}

fn var(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

fn c(r: Rational) -> MultiPoly {
    MultiPoly::constant(r)
}

/// `t' - 1` for `t = 2t'+1`.
fn tp1(t: usize) -> Rational {
    int((t as i64 - 1) / 2 - 1)
}

fn dd_cores_product(t: usize, order: usize) -> Result<RatSeries, IdentityError> {
    Ok(eta_product_rat(&[(1, int(1)), (t, tp1(t))], order)?)
}

/// Coefficients `f(n)` placed at `x^n` over the requested indices.
fn indexed(order: usize, only: Option<usize>, f: impl Fn(usize) -> Rational + Sync) -> RatSeries {
    let idx: Vec<usize> = match only {
        Some(n) => vec![n],
        None => (0..=order).collect(),
    };
    let vals: Vec<(usize, Rational)> = idx.into_par_iter().map(|n| (n, f(n))).collect();
    let mut s = RatSeries::zero(order);
    for (n, v) in vals {
        s.set_coeff(n, v);
    }
    s
}

/// Pass counts against check counts, one coefficient per index.
fn counts(order: usize, per: &[(usize, bool)]) -> Sides {
    let mut pass = RatSeries::zero(order);
    let mut all = RatSeries::zero(order);
    for &(k, ok) in per {
        all.add_to_coeff(k, &Rational::one());
        if ok {
            pass.add_to_coeff(k, &Rational::one());
        }
    }
    Sides::Rat(pass, all)
}

/// Rational samples of `t` for the pair product identity.
pub fn rational_samples() -> [Rational; 8] {
    [rat(1, 2), rat(-3, 2), rat(2, 3), rat(5, 7), rat(-1, 3), rat(7, 4), int(3), int(-5)]
}

/// Every property of `(λ,μ) ↦ ν` holds for the pair.
fn nu_laws_hold(l: &crate::partition::Partition, m: &crate::partition::Partition) -> bool {
    let Ok(nu) = pair_to_nu(l, m) else { return false };
    let d = merged_delta(l, m);
    let q = q_delta_poly(&d);
    let h = hook_product_poly(&nu);
    nu.weight() == 2 * (l.weight() + m.weight())
        && nu.delta() == l.delta() * m.delta()
        && nu.is_doubled_distinct()
        && nu_to_pair(&nu).ok().as_ref() == Some(&(l.clone(), m.clone()))
        && q == h
        && rational_samples()
            .iter()
            .all(|s| h.eval_all(&[(Var::T, s.clone())]) == Some(q_delta(&d, s)))
}

/// Both sides of every comparison the identity makes at `order`.
pub fn sides(id: IdentityId, params: &Params, order: usize) -> Result<Vec<Sides>, IdentityError> {
    use IdentityId::*;
    let t = validate(id, params)?;
    let tt = t.unwrap_or(0);
    let poly = |l: PolySeries, r: PolySeries| Sides::Poly(l, r);
    let rats = |l: RatSeries, r: RatSeries| Sides::Rat(l, r);
    Ok(match id {
        No => {
            let rhs = eta_product(&[EtaFactor::new(1, 0, &var(Var::Z) - &MultiPoly::one())], order)?;
            vec![poly(sum_no(order), rhs)]
        }
        Thm1 => {
            let e = &(&var(Var::T).pow(2) * &MultiPoly::from(2)) + &var(Var::T);
            vec![poly(sum_thm1(order), eta_product(&[EtaFactor::new(1, 0, e)], order)?)]
        }
        Thm2 => {
            let z = var(Var::Z);
            let e = &(&(&z * &MultiPoly::from(2)) + &MultiPoly::one())
                * &(&(&z * &MultiPoly::from(tt as i64)) + &MultiPoly::from(3 * ((tt as i64 - 1) / 2)));
            let rhs = eta_product(
                &[EtaFactor::new(1, 0, 1), EtaFactor::new(tt, 0, c(tp1(tt))), EtaFactor::new(tt, 2, e)],
                order,
            )?;
            let lhs = sum_thm2(tt, order);
            let mut out = vec![poly(lhs.clone(), rhs)];
            if tt == 1 {
                let at_y1 = lhs.map(|p| p.eval(Var::Y, &int(1)));
                let thm1 = sum_thm1(order).map(|p| p.rename(Var::T, Var::Z));
                out.push(poly(at_y1, thm1));
            }
            out
        }
        HookSympl => vec![rats(indexed(order, params.n, hook_sympl), indexed(order, params.n, hook_sympl_rhs))],
        HookGen | Cor411 | Cor413 => {
            let filter = if id == Cor411 { HookFilter::EmptyCore } else { HookFilter::Count };
            let lhs = indexed(order, params.n, |n| {
                let (plain, marked) = hook_gen(tt, n, 0, filter);
                if id == Cor413 {
                    marked
                } else {
                    plain
                }
            });
            let rhs = indexed(order, params.n, |n| if id == Cor413 { cor413_rhs(tt, n) } else { hook_gen_rhs(tt, n) });
            vec![rats(lhs, rhs)]
        }
        Cor412 => {
            let m = params.m.expect("validated");
            let lhs = indexed(order, params.n, |n| hook_gen(tt, n, m, HookFilter::Count).0);
            let rhs = indexed(order, params.n, |n| cor412_rhs(tt, n, m));
            vec![rats(lhs, rhs)]
        }
        MacA | MacC | MacB | MacBc => {
            let ty = id.mac_type().expect("Macdonald id");
            let rhs = eta_factor_rat(1, &int(ty.dimension(tt)), order)?;
            vec![rats(macdonald_sum(ty, tt, order)?, rhs)]
        }
        GenfunHt => {
            let spec = [(2, int(1)), (1, int(-1)), (tt, int(1)), (2 * tt, int(tt as i64 - 2))];
            vec![rats(sum_genfun_ht(tt, order), eta_product_rat(&spec, order)?)]
        }
        Lemma42 => vec![rats(sum_signed_dd_cores(tt, order), dd_cores_product(tt, order)?)],
        ThmPair => {
            let e = &(&var(Var::T).pow(2) * &MultiPoly::from(2)) + &var(Var::T);
            vec![poly(sum_thm_pair(order), eta_product(&[EtaFactor::new(1, 0, e)], order)?)]
        }
        Thm310 => {
            let ps = pairs(None, order);
            let per: Vec<(usize, bool)> = ps
                .par_iter()
                .map(|(l, m)| (l.weight() + m.weight(), nu_laws_hold(l, m)))
                .collect();
            vec![counts(order, &per)]
        }
        CorZ1 => {
            let rhs = eta_product(
                &[
                    EtaFactor::new(1, 0, 1),
                    EtaFactor::new(tt, 0, c(tp1(tt))),
                    EtaFactor::new(tt, 2, c(-tp1(tt))),
                ],
                order,
            )?;
            vec![poly(sum_cor_z1(tt, order), rhs)]
        }
        CorZ1y1 => vec![rats(sum_cor_z1y1(order), euler_product(1, order))],
        CorYI => {
            let lhs = sum_cor_z1(tt, order).try_map(|p| p.substitute_square(Var::Y, &int(-1)))?;
            let e = tp1(tt);
            let spec = [(1, int(1)), (tt, &e * int(2)), (2 * tt, &e * int(-3)), (4 * tt, e.clone())];
            vec![poly(lhs, eta_product_rat(&spec, order)?.to_poly())]
        }
        CorY1 => {
            // (z+1)(2zt+2t-3)
            let z = var(Var::Z);
            let t2 = MultiPoly::from(2 * tt as i64);
            let e = &(&z + &MultiPoly::one()) * &(&(&(&z * &t2) + &t2) - &MultiPoly::from(3));
            let rhs = eta_product(&[EtaFactor::new(1, 0, 1), EtaFactor::new(tt, 0, e)], order)?;
            vec![poly(sum_cor_y1(tt, order), rhs)]
        }
        CorZp1 => {
            let mut inner = RatSeries::zero(order);
            for m in 1..=order / tt {
                for j in (1..).take_while(|j| tt * m * j <= order) {
                    inner.add_to_coeff(tt * m * j, &rat(1, m as i64));
                }
            }
            let rhs = euler_product::<Rational>(1, order).mul(&inner)?.scale(&rat(-1, 2 * tt as i64));
            vec![rats(sum_cor_zp1(tt, order), rhs)]
        }
        CorExp => {
            let mut arg = PolySeries::zero(order);
            if tt <= order {
                arg.set_coeff(tt, var(Var::B).pow(2).scale(&rat(-(tt as i64), 2)));
            }
            let rhs = arg.exp()?.mul(&dd_cores_product(tt, order)?.to_poly())?;
            vec![poly(sum_cor_exp(tt, order), rhs)]
        }
        CorT1 => {
            let mut arg = PolySeries::zero(order);
            if order >= 1 {
                arg.set_coeff(1, var(Var::B).pow(2).scale(&rat(1, 2)));
            }
            vec![poly(sum_cor_t1(order), arg.exp()?)]
        }
        Kostant => {
            let per: Vec<(usize, bool)> = kostant_checks(order)?.iter().map(|c| (c.k, c.pass)).collect();
            vec![counts(order, &per)]
        }
        ScCcheck => {
            // (2z-1)(z+1) on (1 - x^{2i}), -(2z-1) on (1 - x^i)
            let z = var(Var::Z);
            let a = &(&z * &MultiPoly::from(2)) - &MultiPoly::one();
            let rhs = eta_product(
                &[EtaFactor::new(2, 0, &a * &(&z + &MultiPoly::one())), EtaFactor::new(1, 0, -a)],
                order,
            )?;
            vec![poly(sum_sc_ccheck(order), rhs)]
        }
        SignEq25 => {
            let per: Vec<(usize, bool)> = (0..=order)
                .into_par_iter()
                .flat_map_iter(|n| {
                    dd_partitions_of(2 * n).into_iter().map(move |p| {
                        let eps: i64 = p.hook_lengths().iter().map(|s| s.eps as i64).product();
                        (n, p.delta() as i64 * eps == sign_pow(n as i64))
                    })
                })
                .collect();
            vec![counts(order, &per)]
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: Params,
    pub order: usize,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Builds both sides and compares them exactly. A mismatch is a failing
/// report, not an error.
pub fn verify(id: IdentityId, params: &Params, order: usize) -> Result<VerificationReport, IdentityError> {
    let start = Instant::now();
    let order = match (id.indexed_by_n(), params.n) {
        (true, Some(n)) => n,
        _ => order,
    };
    let all = sides(id, params, order)?;
    let first_mismatch = all.iter().find_map(Sides::first_mismatch);
    Ok(VerificationReport {
        identity: id,
        params: *params,
        order,
        status: if first_mismatch.is_none() { Status::Pass } else { Status::Fail },
        first_mismatch,
        ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(param_err(format!("unknown profile `{s}`"))),
        }
    }
}

/// One registry run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: IdentityId,
    pub params: Params,
    pub order: usize,
}

fn order_for(id: IdentityId, profile: Profile) -> usize {
    let full = id.default_order();
    match (profile, id.kind()) {
        (Profile::Full, _) => full,
        (Profile::Quick, Kind::Symbolic) => full.min(8),
        (Profile::Quick, Kind::Numeric) => full.min(30),
    }
}

/// The parameter sets each identity runs with.
fn param_sets(id: IdentityId) -> Vec<Params> {
    use IdentityId::*;
    let ts = |v: &[usize]| v.iter().map(|&t| Params::t(t)).collect();
    match id {
        Thm2 | CorZ1 | CorYI | CorY1 | CorZp1 | CorExp => ts(&[1, 3, 5]),
        HookGen | Cor411 | Cor413 => ts(&[1, 3]),
        Cor412 => [1, 3]
            .iter()
            .flat_map(|&t| [0, 2, 4].map(|m| Params { t: Some(t), n: None, m: Some(m) }))
            .collect(),
        MacA => ts(&[3, 5]),
        MacC => ts(&[2, 3, 4]),
        MacB => ts(&[3, 4]),
        MacBc => ts(&[1, 2, 3]),
        GenfunHt => ts(&[2, 3, 4, 5]),
        Lemma42 => ts(&[3, 5, 7]),
        _ => vec![Params::default()],
    }
}

/// The whole registry at a profile, in registry order.
pub fn registry(profile: Profile) -> Vec<Instance> {
    IdentityId::ALL
        .iter()
        .flat_map(|&id| {
            param_sets(id)
                .into_iter()
                .map(move |params| Instance { id, params, order: order_for(id, profile) })
        })
        .collect()
}

/// Runs the instances in parallel; reports come back in input order.
pub fn run_all(instances: &[Instance]) -> Result<Vec<VerificationReport>, IdentityError> {
    instances
        .par_iter()
        .map(|i| verify(i.id, &i.params, i.order))
        .collect()
}
