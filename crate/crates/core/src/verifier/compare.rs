//! Certified comparison of `x` against `y^(e·num/den)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::interval::LogInterval;
use crate::gfield::factorize;

/// Environment variable overriding the default precision cap.
pub const PRECISION_CAP_ENV: &str = "SOLVDEG_PRECISION_CAP";
pub const DEFAULT_PRECISION_CAP: u32 = 4096;
pub const START_PRECISION: u32 = 64;

/// Largest power (in bits) the equality certificate will expand.
const CERTIFICATE_BIT_LIMIT: u64 = 1 << 22;

/// An irrational or rational exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exponent {
    /// `coef · ln(num) / ln(base)`.
    LogRatio { coef: u64, num: u64, base: u64 },
    Rational(#[serde(with = "ratio_text")] BigRational),
}

impl Exponent {
    /// `3 · log_504(168)`.
    pub fn mu() -> Exponent {
        Exponent::LogRatio {
            coef: 3,
            num: 168,
            base: 504,
        }
    }

    pub fn rational(num: i64, den: i64) -> Exponent {
        Exponent::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn enclosure(&self, precision: u32) -> LogInterval {
        match self {
            Exponent::LogRatio { coef, num, base } => LogInterval::ln_u64(*num, precision)
                .div(&LogInterval::ln_u64(*base, precision))
                .expect("base > 1")
                .scale(&BigInt::from(*coef)),
            Exponent::Rational(r) => LogInterval::from_rational(r, precision),
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            Exponent::LogRatio { coef, num, base } => *coef as f64 * (*num as f64).ln() / (*base as f64).ln(),
            Exponent::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::LogRatio { coef, num, base } => write!(f, "{coef}*log_{base}({num})"),
            Exponent::Rational(r) => write!(f, "{r}"),
        }
    }
}

mod ratio_text {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| D::Error::custom(format!("bad rational {text:?}")))
    }
}

/// Precision schedule: start bits, doubled up to the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionConfig {
    pub start: u32,
    pub cap: u32,
}

impl Default for PrecisionConfig {
    /// Reads the cap from the environment when set.
    fn default() -> Self {
        let cap = std::env::var(PRECISION_CAP_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_PRECISION_CAP);
        PrecisionConfig {
            start: START_PRECISION.min(cap),
            cap,
        }
    }
}

impl PrecisionConfig {
    pub fn with_cap(cap: u32) -> Self {
        PrecisionConfig {
            start: START_PRECISION.min(cap),
            cap,
        }
    }

    fn schedule(&self) -> impl Iterator<Item = u32> {
        let cap = self.cap.max(1);
        let mut next = Some(self.start.clamp(1, cap));
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur >= cap { None } else { Some((cur * 2).min(cap)) };
            Some(cur)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Less,
    Equal,
    Greater,
    Undecidable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Less => "less",
            Verdict::Equal => "equal",
            Verdict::Greater => "greater",
            Verdict::Undecidable => "undecidable",
        })
    }
}

/// Outcome of [`cmp_power`]: the verdict for `x` versus the power, and the
/// enclosure of `ln(power) − ln(x)` at the last precision tried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: Verdict,
    pub margin: LogInterval,
    pub precision: u32,
    /// Set when `Equal` came from the exact certificate.
    pub certified_equal: bool,
}

/// Compares `x` with `y^(μ·num/den)`.
pub fn cmp_power(x: &BigRational, y: &BigRational, num: i64, den: i64) -> Comparison {
    cmp_power_with(x, y, num, den, &Exponent::mu(), PrecisionConfig::default())
}

/// Compares `x` with `y^(e·num/den)` for a general exponent `e`.
///
/// Enclosures of `(num/den)·e·ln y − ln x` are refined until their sign is
/// known. If they never separate from zero, exact equality is tested
/// algebraically; failing that the result is `Undecidable`.
pub fn cmp_power_with(
    x: &BigRational,
    y: &BigRational,
    num: i64,
    den: i64,
    exponent: &Exponent,
    precision: PrecisionConfig,
) -> Comparison {
    assert!(x.is_positive() && y.is_positive(), "arguments must be positive");
    assert!(den != 0, "zero denominator");
    let ratio = BigRational::new(num.into(), den.into());
    let mut certificate: Option<bool> = None;
    let mut last = None;
    for p in precision.schedule() {
        let margin = power_margin(x, y, &ratio, exponent, p);
        if margin.is_positive() {
            return done(Verdict::Less, margin, p, false);
        }
        if margin.is_negative() {
            return done(Verdict::Greater, margin, p, false);
        }
        if *certificate.get_or_insert_with(|| exactly_equal(x, y, &ratio, exponent)) {
            return done(Verdict::Equal, margin, p, true);
        }
        last = Some((margin, p));
    }
    let (margin, p) = last.expect("schedule is nonempty");
    done(Verdict::Undecidable, margin, p, false)
}

fn done(verdict: Verdict, margin: LogInterval, precision: u32, certified_equal: bool) -> Comparison {
    Comparison {
        verdict,
        margin,
        precision,
        certified_equal,
    }
}

/// Enclosure of `ratio·e·ln y − ln x`.
pub fn power_margin(x: &BigRational, y: &BigRational, ratio: &BigRational, exponent: &Exponent, p: u32) -> LogInterval {
    let ln_y = LogInterval::ln_rational(y, p);
    let ln_x = LogInterval::ln_rational(x, p);
    exponent.enclosure(p).mul(&ln_y).mul_ratio(ratio).sub(&ln_x)
}

/// Exact test of `x = y^(e·ratio)`.
pub fn exactly_equal(x: &BigRational, y: &BigRational, ratio: &BigRational, exponent: &Exponent) -> bool {
    match exponent {
        Exponent::Rational(r) => rational_power_equal(x, y, &(ratio * r)),
        Exponent::LogRatio { coef, num, base } => {
            // y = base^t forces y^(e·ratio) = num^(coef·t·ratio)
            let Some(t) = log_in_base(y, *base) else {
                return false;
            };
            let power = ratio * t * BigRational::from_integer((*coef).into());
            let target = BigRational::from_integer((*num).into());
            rational_power_equal(x, &target, &power)
        }
    }
}

/// `x = y^e` for rational `e`, decided as `x^den = y^num`.
fn rational_power_equal(x: &BigRational, y: &BigRational, e: &BigRational) -> bool {
    let (Some(en), Some(ed)) = (e.numer().abs().to_u64(), e.denom().to_u64()) else {
        return false;
    };
    let size = |r: &BigRational| r.numer().bits() + r.denom().bits();
    if size(x).saturating_mul(ed) > CERTIFICATE_BIT_LIMIT || size(y).saturating_mul(en) > CERTIFICATE_BIT_LIMIT {
        return false;
    }
    let lhs = num_traits::pow(x.clone(), ed as usize);
    let mut rhs = num_traits::pow(y.clone(), en as usize);
    if e.is_negative() {
        rhs = rhs.recip();
    }
    lhs == rhs
}

/// The rational `t` with `y = base^t`, if one exists.
fn log_in_base(y: &BigRational, base: u64) -> Option<BigRational> {
    if base < 2 {
        return None;
    }
    let mut num: BigUint = y.numer().to_biguint()?;
    let mut den: BigUint = y.denom().to_biguint()?;
    let mut t: Option<BigRational> = None;
    for (prime, e) in factorize(base) {
        let pb = BigUint::from(prime);
        let mut v: i64 = 0;
        while (&num % &pb).is_zero() {
            num /= &pb;
            v += 1;
        }
        while (&den % &pb).is_zero() {
            den /= &pb;
            v -= 1;
        }
        let here = BigRational::new(v.into(), (e as i64).into());
        match &t {
            Some(prev) if *prev != here => return None,
            _ => t = Some(here),
        }
    }
    (num.is_one() && den.is_one()).then_some(t).flatten()
}

/// Convenience for integer arguments.
pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `a^e` as a rational, for small exponents.
pub fn int_pow(a: u64, e: u32) -> BigRational {
    int(BigInt::from(a).pow(e))
}

/// `⌈log₂ q⌉`, an integer upper bound on `log₂ q`.
pub fn ceil_log2(q: &BigUint) -> u64 {
    let bits = q.bits();
    if (q - 1u32).bits() < bits || q.is_one() {
        // q is a power of two
        bits - 1
    } else {
        bits
    }
}
