//! Small finite fields GF(p^f) in the polynomial basis.
//!
//! Elements are dense coefficient vectors reduced modulo a fixed monic
//! irreducible polynomial. The modulus is the first monic irreducible of
//! degree `f` in lexicographic order of `(c_{f-1}, ..., c_0)`, which makes
//! every field (and every group built on top of it) reproducible.

use std::fmt;

use thiserror::Error;

/// Largest field order accepted by [`FieldSpec::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field exponent must be positive")]
    ZeroExponent,
    #[error("field order {p}^{f} exceeds the cap of 2^20")]
    TooLarge { p: u64, f: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("inversion of zero")]
    ZeroInverse,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^f`, returning `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

/// A field element: `f` coefficients in `[0, p)`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    coeffs: Vec<u32>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// GF(p^f) with its defining modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    f: u32,
    /// Monic, lowest degree first, length `f + 1`.
    modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn new(p: u64, f: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if f == 0 {
            return Err(FieldError::ZeroExponent);
        }
        match p.checked_pow(f) {
            Some(q) if q <= MAX_FIELD_ORDER => {}
            _ => return Err(FieldError::TooLarge { p, f }),
        }
        let p = p as u32;
        let modulus = first_irreducible(p, f as usize);
        Ok(FieldSpec { p, f, modulus })
    }

    /// The field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Self, FieldError> {
        let (p, f) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Self::new(p, f)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.f)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            coeffs: vec![0; self.f as usize],
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> FieldElem {
        let mut e = self.zero();
        e.coeffs[0] = n.rem_euclid(self.p as i64) as u32;
        e
    }

    /// The residue class of `x`. In a prime field this reduces to a constant.
    pub fn x(&self) -> FieldElem {
        if self.f == 1 {
            // modulus is x itself, so x = 0
            return self.zero();
        }
        let mut e = self.zero();
        e.coeffs[1] = 1;
        e
    }

    /// Element with base-`p` digits of `idx` as coefficients.
    pub fn from_index(&self, mut idx: u32) -> FieldElem {
        let mut e = self.zero();
        for c in e.coeffs.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        e
    }

    pub fn index(&self, a: &FieldElem) -> u32 {
        a.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + y) % self.p)
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem {
            coeffs: a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let p = self.p as u64;
        let f = self.f as usize;
        let mut prod = vec![0u64; 2 * f - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce using x^f = -(c_0 + ... + c_{f-1} x^{f-1})
        for k in (f..prod.len()).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..f {
                let sub = lead * self.modulus[i] as u64 % p;
                prod[k - f + i] = (prod[k - f + i] + p - sub) % p;
            }
        }
        FieldElem {
            coeffs: prod[..f].iter().map(|&c| c as u32).collect(),
        }
    }

    /// `a^e`; negative exponents go through the inverse.
    pub fn pow(&self, a: &FieldElem, e: i64) -> Result<FieldElem, FieldError> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        Ok(self.pow_u(&base, e.unsigned_abs()))
    }

    fn pow_u(&self, a: &FieldElem, mut e: u64) -> FieldElem {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow_u(a, self.order() as u64 - 2))
    }

    /// `a -> a^p`, the generator of the Galois group.
    pub fn frobenius(&self, a: &FieldElem) -> FieldElem {
        self.pow_u(a, self.p as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: &FieldElem) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let n = self.order() - 1;
        let mut order = n;
        for (prime, _) in factorize(n as u64) {
            let prime = prime as u32;
            while order.is_multiple_of(prime) && self.pow_u(a, (order / prime) as u64) == self.one() {
                order /= prime;
            }
        }
        Some(order)
    }

    /// The first element (in index order) generating the multiplicative group.
    pub fn primitive_element(&self) -> FieldElem {
        let n = self.order() - 1;
        self.elements()
            .find(|a| self.mult_order(a) == Some(n))
            .expect("multiplicative group of a finite field is cyclic")
    }
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let shift = r.len() - dm;
        for i in 0..dm {
            let sub = lead * m[i] as u64 % p;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Monic polynomial of degree `deg` whose low coefficients are the base-`p`
/// digits of `idx`.
fn monic_from_index(p: u32, deg: usize, mut idx: u64) -> Vec<u32> {
    let mut poly = vec![0u32; deg + 1];
    for c in poly.iter_mut().take(deg) {
        *c = (idx % p as u64) as u32;
        idx /= p as u64;
    }
    poly[deg] = 1;
    poly
}

/// Trial division by every monic polynomial of degree at most `deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for idx in 0..(p as u64).pow(d as u32) {
            let h = monic_from_index(p, d, idx);
            if poly_rem(poly, &h, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: u32, f: usize) -> Vec<u32> {
    (0..(p as u64).pow(f as u32))
        .map(|idx| monic_from_index(p, f, idx))
        .find(|poly| is_irreducible(poly, p))
        .expect("irreducible polynomials of every degree exist")
}
