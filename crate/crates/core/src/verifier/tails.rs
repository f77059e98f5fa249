//! Certificates extending finite sweeps to all larger parameters.
//!
//! Each certificate bounds the true margin from below by an explicit
//! function that is increasing past a threshold, then checks positivity at
//! the sweep boundary with enclosures.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::compare::{ceil_log2, Exponent, PrecisionConfig};
use super::interval::LogInterval;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TailError {
    /// A required quantity is certainly nonpositive.
    #[error("{0}")]
    Refuted(String),
    #[error("undecided at {0} bits")]
    Undecided(u32),
}

/// Result of evaluating a certificate at one precision.
enum Check {
    Holds,
    Refuted(String),
    Open,
}

fn all_positive(named: &[(&str, LogInterval)]) -> Check {
    if let Some((name, _)) = named.iter().find(|(_, v)| v.is_negative()) {
        return Check::Refuted(format!("{name} is negative"));
    }
    if named.iter().all(|(_, v)| v.is_positive()) {
        Check::Holds
    } else {
        Check::Open
    }
}

fn escalate(precision: PrecisionConfig, mut at: impl FnMut(u32) -> Check) -> Result<(), TailError> {
    let mut p = precision.start.max(1);
    loop {
        match at(p) {
            Check::Holds => return Ok(()),
            Check::Refuted(why) => return Err(TailError::Refuted(why)),
            Check::Open if p >= precision.cap => return Err(TailError::Undecided(p)),
            Check::Open => p = (p * 2).min(precision.cap),
        }
    }
}

fn ln_lambda(p: u32) -> LogInterval {
    LogInterval::ln_u64(24, p).div_int(&BigInt::from(3))
}

fn int(n: i64, p: u32) -> LogInterval {
    LogInterval::from_int(&BigInt::from(n), p)
}

/// `D·ln q − ln(λ·c) − ln ⌈log₂ q⌉`, a lower bound for
/// `D·ln q − ln(λ·c·log₂ q)`.
fn slack_bound(gap: &LogInterval, coef: u64, q: &BigUint, p: u32) -> LogInterval {
    let bits = ceil_log2(q).max(1);
    gap.mul(&LogInterval::ln_uint(q, p))
        .sub(&ln_lambda(p))
        .sub(&LogInterval::ln_u64(coef, p))
        .sub(&LogInterval::ln_u64(bits, p))
}

/// Certifies `λ·c·f·q^a < q^(e·st)` for every `q = p^f > q_max`.
///
/// With `D = e·st − a > 0` the margin is at least
/// `D·ln q − ln(λc) − ln log₂ q`, whose derivative in `q` is positive once
/// `ln q > 1/D`; positivity at `q_max` then covers every larger `q`. The
/// doubling comparison at `2·q_max` is checked as well.
pub fn q_tail(exponent: &Exponent, st: i64, a: i64, coef: u64, q_max: u64, precision: PrecisionConfig) -> Result<(), TailError> {
    let q = BigUint::from(q_max);
    let q2 = BigUint::from(q_max) * 2u32;
    escalate(precision, |p| {
        let gap = exponent.enclosure(p).scale(&BigInt::from(st)).sub(&int(a, p));
        let at_max = slack_bound(&gap, coef, &q, p);
        let at_double = slack_bound(&gap, coef, &q2, p);
        all_positive(&[
            ("exponent gap", gap.clone()),
            ("gap times ln q_max minus 1", gap.mul(&LogInterval::ln_uint(&q, p)).sub(&int(1, p))),
            ("margin bound at q_max", at_max.clone()),
            ("doubling increase", at_double.sub(&at_max)),
        ])
    })
}

/// Tail for `f·q·(q−1) <= (q³−q)^(e/3)`: the margin is at least
/// `(e−2)·ln q + (e/3)·ln(1 − q⁻²) − ln log₂ q`, increasing once
/// `ln q > 1/(e−2)`.
pub fn psl2_tail(exponent: &Exponent, q_max: u64, precision: PrecisionConfig) -> Result<(), TailError> {
    let bound = |q: &BigUint, e: &LogInterval, p: u32| {
        let ln_q = LogInterval::ln_uint(q, p);
        let ln_ratio = LogInterval::ln_uint(&(q * q - 1u32), p).sub(&ln_q.scale(&BigInt::from(2)));
        e.sub(&int(2, p))
            .mul(&ln_q)
            .add(&e.mul(&ln_ratio).div_int(&BigInt::from(3)))
            .sub(&LogInterval::ln_u64(ceil_log2(q).max(1), p))
    };
    let q = BigUint::from(q_max);
    let q2 = &q * 2u32;
    escalate(precision, |p| {
        let e = exponent.enclosure(p);
        let slope = e.sub(&int(2, p));
        let at_max = bound(&q, &e, p);
        all_positive(&[
            ("exponent minus 2", slope.clone()),
            ("slope times ln q_max minus 1", slope.mul(&LogInterval::ln_uint(&q, p)).sub(&int(1, p))),
            ("margin bound at q_max", at_max.clone()),
            ("doubling increase", bound(&q2, &e, p).sub(&at_max)),
        ])
    })
}

/// Coefficients of `P(n + shift)` for `P` given by ascending coefficients.
pub fn taylor_shift(coeffs: &[BigRational], shift: u64) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); coeffs.len()];
    let s = BigRational::from_integer(shift.into());
    for (k, c) in coeffs.iter().enumerate() {
        // c·(m + s)^k = c·Σ C(k, j) s^(k−j) m^j
        let mut binom = BigInt::from(1);
        for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
            let term = c * BigRational::from_integer(binom.clone()) * num_traits::pow(s.clone(), k - j);
            *slot += term;
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
    }
    out
}

/// Certifies `λ·c·f·q^a(n) < q^(e·st(n))` for every `n >= n0` and every
/// prime power `q >= 2`.
///
/// With `D(n) = e·st(n) − a(n)`, the minimum over `q >= 2` of
/// `D·ln q − ln log₂ q` is `D·ln 2` once `D >= 1/ln 2`. After the shift
/// `n = n0 + m`, nonnegative coefficients of positive degree make `D(n)`
/// at least its constant term for every `m >= 0`.
pub fn rank_tail(
    exponent: &Exponent,
    st: &[BigRational],
    a: &[BigRational],
    coef: u64,
    n0: u64,
    precision: PrecisionConfig,
) -> Result<(), TailError> {
    let len = st.len().max(a.len());
    let pad = |v: &[BigRational]| {
        let mut v = v.to_vec();
        v.resize(len, BigRational::zero());
        v
    };
    let st = taylor_shift(&pad(st), n0);
    let a = taylor_shift(&pad(a), n0);
    escalate(precision, |p| {
        let e = exponent.enclosure(p);
        let d: Vec<LogInterval> = st
            .iter()
            .zip(&a)
            .map(|(s, t)| e.mul_ratio(s).sub(&LogInterval::from_rational(t, p)))
            .collect();
        for (j, dj) in d.iter().enumerate().skip(1) {
            if dj.is_negative() {
                return Check::Refuted(format!("coefficient of degree {j} is negative"));
            }
            if dj.endpoints().0.is_negative() {
                return Check::Open;
            }
        }
        let ln2 = LogInterval::ln2(p);
        let d0_ln2 = d[0].mul(&ln2);
        all_positive(&[
            ("constant term times ln 2 minus 1", d0_ln2.sub(&int(1, p))),
            (
                "constant term times ln 2 minus ln(lambda c)",
                d0_ln2.sub(&ln_lambda(p)).sub(&LogInterval::ln_u64(coef, p)),
            ),
        ])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn shift_matches_direct_evaluation() {
        let poly = [r(3), r(-2), r(5)];
        let shifted = taylor_shift(&poly, 4);
        for m in 0..6i64 {
            let direct: BigRational = poly.iter().enumerate().map(|(k, c)| c * r((m + 4).pow(k as u32))).sum();
            let via: BigRational = shifted.iter().enumerate().map(|(k, c)| c * r(m.pow(k as u32))).sum();
            assert_eq!(direct, via);
        }
    }

    #[test]
    fn q_tails() {
        let cfg = PrecisionConfig::with_cap(1024);
        // E8 row
        assert!(q_tail(&Exponent::mu(), 120, 191, 1, 4096, cfg).is_ok());
        // Suzuki row
        assert!(q_tail(&Exponent::mu(), 2, 3, 1, 4096, cfg).is_ok());
        // exponent smaller than the subgroup exponent
        assert!(q_tail(&Exponent::mu(), 1, 3, 1, 4096, cfg).is_err());
    }

    #[test]
    fn psl2_tail_needs_room() {
        let cfg = PrecisionConfig::with_cap(1024);
        assert!(psl2_tail(&Exponent::mu(), 65536, cfg).is_ok());
        assert!(psl2_tail(&Exponent::mu(), 4, cfg).is_err());
        assert!(psl2_tail(&Exponent::rational(2, 1), 65536, cfg).is_err());
    }

    #[test]
    fn rank_tail_for_unitary_row() {
        let half = |n: i64| BigRational::new(n.into(), 2.into());
        let st = [r(0), half(-1), half(1)];
        let a = [r(2), r(-2), r(1)];
        assert!(rank_tail(&Exponent::mu(), &st, &a, 2, 13, PrecisionConfig::with_cap(1024)).is_ok());
        // a larger subgroup exponent outgrows the Steinberg exponent
        let big = [r(0), r(0), r(2)];
        assert!(rank_tail(&Exponent::mu(), &st, &big, 2, 13, PrecisionConfig::with_cap(1024)).is_err());
    }
}
