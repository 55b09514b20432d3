//! Sign and non-vanishing of the coefficients `f_k(s)` of `∏(1 - x^n)^s`.

use serde::Serialize;

use crate::poly::{MultiPoly, Var};
use crate::rational::{fmt_rational, int, is_positive, is_zero, rat, sign_pow, Rational};
use crate::series::{euler_product, PolySeries, SeriesError};

/// `f_0(s), ..., f_order(s)` as polynomials in `s`.
pub fn f_polys(order: usize) -> Result<PolySeries, SeriesError> {
    euler_product::<MultiPoly>(1, order).pow_sym(&MultiPoly::var(Var::S))
}

/// `s ∈ {k - 1/2, k, k + 7/3, 3k}`, all above `k - 1`.
pub fn samples(k: usize) -> [Rational; 4] {
    let k = k as i64;
    [rat(2 * k - 1, 2), int(k), rat(3 * k + 7, 3), int(3 * k)]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CheckKind {
    /// `(-1)^k f_k(2s²+s) > 0`.
    Sign,
    /// `f_k(m²-1) != 0`.
    NonZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostantCheck {
    pub k: usize,
    pub kind: CheckKind,
    pub at: String,
    pub value: String,
    pub pass: bool,
}

/// Sign checks for `1 <= k <= order`, and non-vanishing checks for
/// `k <= min(order, 10)`, `m = max(k,4)..=k+3`.
pub fn checks(order: usize) -> Result<Vec<KostantCheck>, SeriesError> {
    let f = f_polys(order)?;
    let mut out = Vec::new();
    for k in 1..=order {
        let fk = f.coeff(k);
        let eval = |s: &Rational| fk.eval_all(&[(Var::S, s.clone())]).expect("univariate");
        for s in samples(k) {
            let arg = int(2) * &s * &s + &s;
            let v = eval(&arg) * int(sign_pow(k as i64));
            out.push(KostantCheck {
                k,
                kind: CheckKind::Sign,
                at: fmt_rational(&s),
                pass: is_positive(&v),
                value: fmt_rational(&v),
            });
        }
        if k <= 10 {
            for m in k.max(4)..=k + 3 {
                let v = eval(&int((m * m) as i64 - 1));
                out.push(KostantCheck {
                    k,
                    kind: CheckKind::NonZero,
                    at: m.to_string(),
                    pass: !is_zero(&v),
                    value: fmt_rational(&v),
                });
            }
        }
    }
    Ok(out)
}
