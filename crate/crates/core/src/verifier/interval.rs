//! Fixed-point enclosures with outward rounding.
//!
//! A [`LogInterval`] at precision `p` is the real interval
//! `[lo · 2^-p, hi · 2^-p]` with integer endpoints. Every operation rounds
//! the lower endpoint down and the upper endpoint up, so the true value
//! stays enclosed.

use std::cell::RefCell;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

/// Extra working bits used inside logarithm evaluation.
const GUARD_BITS: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogInterval {
    lo: BigInt,
    hi: BigInt,
    precision: u32,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl LogInterval {
    /// Panics unless `lo <= hi`.
    pub fn new(lo: BigInt, hi: BigInt, precision: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        LogInterval { lo, hi, precision }
    }

    pub fn zero(precision: u32) -> Self {
        Self::from_int(&BigInt::zero(), precision)
    }

    pub fn from_int(n: &BigInt, precision: u32) -> Self {
        let v = n << precision;
        LogInterval {
            lo: v.clone(),
            hi: v,
            precision,
        }
    }

    pub fn from_rational(r: &BigRational, precision: u32) -> Self {
        let scaled = r.numer() << precision;
        LogInterval {
            lo: floor_div(&scaled, r.denom()),
            hi: ceil_div(&scaled, r.denom()),
            precision,
        }
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Scaled endpoints `(lo, hi)`.
    pub fn endpoints(&self) -> (&BigInt, &BigInt) {
        (&self.lo, &self.hi)
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_positive() && !self.is_negative()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.precision, other.precision, "precision mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        LogInterval::new(&self.lo + &other.lo, &self.hi + &other.hi, self.precision)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        LogInterval::new(&self.lo - &other.hi, &self.hi - &other.lo, self.precision)
    }

    pub fn neg(&self) -> Self {
        LogInterval::new(-&self.hi, -&self.lo, self.precision)
    }

    /// Exact multiplication by an integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            LogInterval::new(b, a, self.precision)
        } else {
            LogInterval::new(a, b, self.precision)
        }
    }

    /// Division by a nonzero integer.
    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(!k.is_zero(), "division by zero");
        let (a, b) = if k.is_negative() { (&self.hi, &self.lo) } else { (&self.lo, &self.hi) };
        LogInterval::new(floor_div(a, k), ceil_div(b, k), self.precision)
    }

    pub fn mul_ratio(&self, r: &BigRational) -> Self {
        self.scale(r.numer()).div_int(r.denom())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let one = pow2(self.precision);
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let min = products.iter().min().expect("four products");
        let max = products.iter().max().expect("four products");
        LogInterval::new(floor_div(min, &one), ceil_div(max, &one), self.precision)
    }

    /// Division by an interval that excludes zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        self.check(other);
        if other.contains_zero() {
            return None;
        }
        let one = pow2(self.precision);
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&other.lo, &other.hi] {
                let scaled = a * &one;
                let (f, c) = if b.is_negative() {
                    (floor_div(&-&scaled, &-b), ceil_div(&-&scaled, &-b))
                } else {
                    (floor_div(&scaled, b), ceil_div(&scaled, b))
                };
                lo = Some(lo.map_or(f.clone(), |l: BigInt| l.min(f)));
                hi = Some(hi.map_or(c.clone(), |h: BigInt| h.max(c)));
            }
        }
        Some(LogInterval::new(lo?, hi?, self.precision))
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Self) -> Self {
        self.check(other);
        LogInterval::new(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
            self.precision,
        )
    }

    /// Re-expresses at a lower precision, rounding outward.
    pub fn coarsen(&self, precision: u32) -> Self {
        assert!(precision <= self.precision);
        let d = pow2(self.precision - precision);
        LogInterval::new(floor_div(&self.lo, &d), ceil_div(&self.hi, &d), precision)
    }

    pub fn width(&self) -> f64 {
        scaled_to_f64(&(&self.hi - &self.lo), self.precision)
    }

    pub fn midpoint(&self) -> f64 {
        scaled_to_f64(&(&self.lo + &self.hi), self.precision + 1)
    }

    /// A double no larger than the lower endpoint.
    pub fn lo_f64(&self) -> f64 {
        scaled_to_f64(&self.lo, self.precision).next_down()
    }

    /// A double no smaller than the upper endpoint.
    pub fn hi_f64(&self) -> f64 {
        scaled_to_f64(&self.hi, self.precision).next_up()
    }

    /// Natural logarithm of a positive integer.
    pub fn ln_uint(n: &BigUint, precision: u32) -> Self {
        assert!(!n.is_zero(), "logarithm of zero");
        let w = precision + GUARD_BITS;
        ln_uint_working(n, w).coarsen(precision)
    }

    /// Natural logarithm of a positive rational.
    pub fn ln_rational(r: &BigRational, precision: u32) -> Self {
        assert!(r.is_positive(), "logarithm of a nonpositive number");
        let w = precision + GUARD_BITS;
        let num = r.numer().to_biguint().expect("positive");
        let den = r.denom().to_biguint().expect("positive");
        ln_uint_working(&num, w).sub(&ln_uint_working(&den, w)).coarsen(precision)
    }

    pub fn ln_u64(n: u64, precision: u32) -> Self {
        Self::ln_uint(&BigUint::from(n), precision)
    }

    pub fn ln2(precision: u32) -> Self {
        ln2_working(precision + GUARD_BITS).coarsen(precision)
    }
}

fn scaled_to_f64(v: &BigInt, precision: u32) -> f64 {
    // keep 64 significant bits before converting
    let bits = v.bits();
    if bits > 64 {
        let shift = bits - 64;
        let top = (v >> shift).to_f64().unwrap_or(f64::NAN);
        let exp = shift as i32 - precision as i32;
        top * 2f64.powi(exp)
    } else {
        v.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(precision as i32))
    }
}

impl fmt::Display for LogInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.12e}, {:.12e}]", self.lo_f64(), self.hi_f64())
    }
}

/// `atanh(t)` for `t` in `[t_lo, t_hi] · 2^-w`, `0 <= t <= 1/3`.
fn atanh_small(t_lo: &BigInt, t_hi: &BigInt, w: u32) -> LogInterval {
    let one = pow2(w);
    let t2_lo = floor_div(&(t_lo * t_lo), &one);
    let t2_hi = ceil_div(&(t_hi * t_hi), &one);
    let (mut p_lo, mut p_hi) = (t_lo.clone(), t_hi.clone());
    let (mut s_lo, mut s_hi) = (BigInt::zero(), BigInt::zero());
    let mut k = 1u64;
    loop {
        let d = BigInt::from(k);
        s_lo += floor_div(&p_lo, &d);
        s_hi += ceil_div(&p_hi, &d);
        p_lo = floor_div(&(&p_lo * &t2_lo), &one);
        p_hi = ceil_div(&(&p_hi * &t2_hi), &one);
        k += 2;
        if p_hi <= BigInt::one() {
            // remaining terms sum to at most p·(9/8) < 2 units
            if p_hi.is_positive() {
                s_hi += 2;
            }
            break;
        }
    }
    LogInterval::new(s_lo, s_hi, w)
}

thread_local! {
    static LN2_CACHE: RefCell<FxHashMap<u32, LogInterval>> = RefCell::new(FxHashMap::default());
}

/// `ln 2 = 2·atanh(1/3)` at working precision `w`.
fn ln2_working(w: u32) -> LogInterval {
    if let Some(v) = LN2_CACHE.with(|c| c.borrow().get(&w).cloned()) {
        return v;
    }
    let one = pow2(w);
    let three = BigInt::from(3);
    let v = atanh_small(&floor_div(&one, &three), &ceil_div(&one, &three), w).scale(&BigInt::from(2));
    LN2_CACHE.with(|c| c.borrow_mut().insert(w, v.clone()));
    v
}

/// `ln m` for an integer `m` with at most `w + 8` bits, computed as
/// `k·ln 2 + 2·atanh((m − 2^k)/(m + 2^k))` with `2^k <= m < 2^(k+1)`.
fn ln_exact(m: &BigUint, w: u32) -> LogInterval {
    let k = m.bits() - 1;
    let m = BigInt::from_biguint(Sign::Plus, m.clone());
    let base = BigInt::one() << k;
    let num = (&m - &base) << w;
    let den = &m + &base;
    let series = atanh_small(&floor_div(&num, &den), &ceil_div(&num, &den), w);
    series
        .scale(&BigInt::from(2))
        .add(&ln2_working(w).scale(&BigInt::from(k)))
}

fn ln_uint_working(n: &BigUint, w: u32) -> LogInterval {
    if n.is_one() {
        return LogInterval::zero(w);
    }
    let bits = n.bits();
    let keep = w as u64 + 8;
    if bits <= keep {
        return ln_exact(n, w);
    }
    // n lies in [a·2^s, (a+1)·2^s)
    let s = bits - keep;
    let a: BigUint = n >> s;
    let shift = ln2_working(w).scale(&BigInt::from(s));
    ln_exact(&a, w).hull(&ln_exact(&(a + 1u32), w)).add(&shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn encloses(iv: &LogInterval, x: f64) -> bool {
        iv.lo_f64() <= x + 1e-12 && x - 1e-12 <= iv.hi_f64()
    }

    #[test]
    fn ln_of_small_integers() {
        for n in 1u64..200 {
            let iv = LogInterval::ln_u64(n, 64);
            assert!(encloses(&iv, (n as f64).ln()), "n = {n}: {iv}");
            assert!(iv.width() < 1e-15);
        }
    }

    #[test]
    fn ln2_digits() {
        let iv = LogInterval::ln2(200);
        // ln 2 = 0.693147180559945309417232121458176568...
        let digits = BigInt::parse_bytes(b"693147180559945309417232121458176568", 10).unwrap();
        let scale = BigInt::from(10).pow(36);
        let lo = LogInterval::from_rational(&BigRational::new(digits.clone(), scale.clone()), 200);
        let hi = LogInterval::from_rational(&BigRational::new(digits + 1, scale), 200);
        assert!(iv.endpoints().0 <= hi.endpoints().1);
        assert!(iv.endpoints().1 >= lo.endpoints().0);
        assert!(iv.width() < 1e-55);
    }

    #[test]
    fn ln_of_huge_integer_is_enclosed() {
        let n = BigUint::from(3u32).pow(5000);
        let iv = LogInterval::ln_uint(&n, 96);
        let exact = 5000.0 * 3f64.ln();
        assert!(encloses(&iv, exact));
        assert!(iv.width() < 1e-20);
    }

    #[test]
    fn arithmetic_encloses() {
        let p = 80;
        let a = LogInterval::ln_u64(7, p);
        let b = LogInterval::ln_u64(3, p);
        assert!(encloses(&a.mul(&b), 7f64.ln() * 3f64.ln()));
        assert!(encloses(&a.div(&b).unwrap(), 7f64.ln() / 3f64.ln()));
        assert!(encloses(&a.sub(&b), (7.0f64 / 3.0).ln()));
        assert!(encloses(&b.sub(&a).neg(), (7.0f64 / 3.0).ln()));
        assert!(encloses(&a.div_int(&BigInt::from(-3)), -7f64.ln() / 3.0));
        assert!(LogInterval::zero(p).div(&LogInterval::zero(p)).is_none());
        let r = BigRational::new(BigInt::from(-5), BigInt::from(7));
        assert!(encloses(&LogInterval::from_rational(&r, p), -5.0 / 7.0));
    }

    #[test]
    fn ln_of_rational() {
        let r = BigRational::new(BigInt::from(2), BigInt::from(9));
        assert!(encloses(&LogInterval::ln_rational(&r, 64), (2.0f64 / 9.0).ln()));
    }
}
