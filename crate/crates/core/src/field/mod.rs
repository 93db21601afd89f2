//! Exact arithmetic in `F_q` and its extensions `F_{q^s}`.
//!
//! The base field `F_q`, `q = p^a`, is stored as `F_p[x]/(m(x))` with `m` the
//! lex-least monic irreducible of degree `a`. Extensions are quotient rings
//! `F_q[y]/(f(y))` over the base field directly, so the tower never has more
//! than two levels above the prime field.

mod base;
mod extension;
mod factor;
pub mod poly;

pub use base::{BaseField, Fq};
pub use extension::{ExtElement, Extension, FieldTower};
pub use factor::factor_polynomial;
pub use poly::Poly;

use crate::error::{Error, Result};

/// A prime power `q = p^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub p: u64,
    pub a: u32,
    pub q: u64,
}

impl PrimePower {
    pub fn new(p: u64, a: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if a == 0 {
            return Err(Error::OutOfRange("exponent a must be at least 1".into()));
        }
        let q = p
            .checked_pow(a)
            .filter(|&q| q < (1 << 31))
            .ok_or_else(|| Error::OutOfRange(format!("{p}^{a} is too large")))?;
        Ok(Self { p, a, q })
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Distinct prime divisors of `n` in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `q` modulo `n`; `ord_1(q) = 1`.
pub fn mult_order(n: u64, q: u64) -> Result<u64> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    if n == 1 {
        return Ok(1);
    }
    let qr = q % n;
    let mut acc = qr;
    let mut s = 1u64;
    while acc != 1 {
        acc = ((acc as u128 * qr as u128) % n as u128) as u64;
        s += 1;
    }
    Ok(s)
}
