use std::fmt;

use super::poly::{self, Poly};
use super::PrimePower;
use crate::error::{Error, Result};

/// Largest `q = p^a`, `a > 1`, for which log/antilog tables are built.
const MAX_TABLE_SIZE: u64 = 1 << 20;

/// An element of the base field `F_q`.
///
/// The code is the base-`p` integer `c_0 + c_1 p + ... + c_{a-1} p^{a-1}` of the
/// coefficient vector of the element as a polynomial over `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Fq(pub(crate) u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The field `F_q = F_p[x]/(m(x))`.
#[derive(Clone)]
pub struct BaseField {
    pp: PrimePower,
    /// Monic modulus over `F_p`, coefficient codes low-degree first; empty when `a = 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaseField")
            .field("p", &self.pp.p)
            .field("a", &self.pp.a)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl BaseField {
    pub fn new(p: u64, a: u32) -> Result<Self> {
        let pp = PrimePower::new(p, a)?;
        let prime = Self::prime(pp.p);
        if a == 1 {
            return Ok(prime);
        }
        if pp.q > MAX_TABLE_SIZE {
            return Err(Error::OutOfRange(format!("non-prime field size {} exceeds {MAX_TABLE_SIZE}", pp.q)));
        }
        let m = poly::lex_least_irreducible(&prime, a as usize);
        let modulus: Vec<u32> = m.coeffs().iter().map(|c| c.0).collect();
        let mut field = Self { pp, modulus, exp: Vec::new(), log: Vec::new() };
        field.build_tables(&prime, &m);
        Ok(field)
    }

    fn prime(p: u64) -> Self {
        Self { pp: PrimePower { p, a: 1, q: p }, modulus: Vec::new(), exp: Vec::new(), log: Vec::new() }
    }

    fn build_tables(&mut self, prime: &BaseField, m: &Poly) {
        let q = self.pp.q as usize;
        let to_poly = |code: u32| -> Poly {
            let mut c = Vec::with_capacity(self.pp.a as usize);
            let mut r = code as u64;
            for _ in 0..self.pp.a {
                c.push(Fq((r % self.pp.p) as u32));
                r /= self.pp.p;
            }
            Poly::from_coeffs(c)
        };
        let to_code = |f: &Poly| -> u32 {
            let mut code = 0u64;
            for c in f.coeffs().iter().rev() {
                code = code * self.pp.p + c.0 as u64;
            }
            code as u32
        };
        for g in 2..q as u32 {
            let gp = to_poly(g);
            let mut exp = Vec::with_capacity(q - 1);
            let mut cur = Poly::one();
            loop {
                exp.push(to_code(&cur));
                cur = poly::rem(prime, &poly::mul(prime, &cur, &gp), m);
                if cur.is_one() {
                    break;
                }
            }
            if exp.len() == q - 1 {
                let mut log = vec![0u32; q];
                for (k, &e) in exp.iter().enumerate() {
                    log[e as usize] = k as u32;
                }
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("multiplicative group of a finite field is cyclic");
    }

    pub fn prime_power(&self) -> PrimePower {
        self.pp
    }

    pub fn p(&self) -> u64 {
        self.pp.p
    }

    pub fn degree(&self) -> u32 {
        self.pp.a
    }

    pub fn q(&self) -> u64 {
        self.pp.q
    }

    /// Base modulus over `F_p` as coefficient integers, low degree first (empty for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Every element, ordered by code.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.pp.q as u32).map(Fq)
    }

    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.pp.p as i64) as u32)
    }

    /// Builds an element from its `F_p` coefficients, low degree first.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fq> {
        if coeffs.len() > self.pp.a as usize || coeffs.iter().any(|&c| c >= self.pp.p) {
            return Err(Error::OutOfRange(format!("{coeffs:?} is not an element of F_{}", self.pp.q)));
        }
        let mut code = 0u64;
        for &c in coeffs.iter().rev() {
            code = code * self.pp.p + c;
        }
        Ok(Fq(code as u32))
    }

    /// Coefficients over `F_p`, low degree first, always of length `a`.
    pub fn coeffs(&self, x: Fq) -> Vec<u64> {
        let mut r = x.0 as u64;
        (0..self.pp.a)
            .map(|_| {
                let c = r % self.pp.p;
                r /= self.pp.p;
                c
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, x: Fq, y: Fq) -> Fq {
        let p = self.pp.p as u32;
        if self.pp.a == 1 {
            let s = x.0 + y.0;
            return Fq(if s >= p { s - p } else { s });
        }
        let (mut a, mut b) = (x.0, y.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.pp.a {
            let d = (a % p + b % p) % p;
            out += d * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        Fq(out)
    }

    #[inline]
    pub fn neg(&self, x: Fq) -> Fq {
        let p = self.pp.p as u32;
        if self.pp.a == 1 {
            return Fq(if x.0 == 0 { 0 } else { p - x.0 });
        }
        let mut a = x.0;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.pp.a {
            let d = (p - a % p) % p;
            out += d * place;
            a /= p;
            place = place.wrapping_mul(p);
        }
        Fq(out)
    }

    #[inline]
    pub fn sub(&self, x: Fq, y: Fq) -> Fq {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Fq, y: Fq) -> Fq {
        if self.pp.a == 1 {
            return Fq(((x.0 as u64 * y.0 as u64) % self.pp.p) as u32);
        }
        if x.0 == 0 || y.0 == 0 {
            return Fq::ZERO;
        }
        let n = self.exp.len() as u32;
        let k = (self.log[x.0 as usize] + self.log[y.0 as usize]) % n;
        Fq(self.exp[k as usize])
    }

    pub fn pow(&self, x: Fq, mut e: u128) -> Fq {
        let mut acc = Fq::ONE;
        let mut b = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: Fq) -> Option<Fq> {
        if x.0 == 0 {
            return None;
        }
        if self.pp.a == 1 {
            return Some(self.pow(x, (self.pp.p - 2) as u128));
        }
        let n = self.exp.len() as u32;
        Some(Fq(self.exp[((n - self.log[x.0 as usize]) % n) as usize]))
    }

    /// The unique `y` with `y^p = x`.
    pub fn pth_root(&self, x: Fq) -> Fq {
        self.pow(x, (self.pp.q / self.pp.p) as u128)
    }

    /// Formats an element as its `F_p` coefficient tuple, e.g. `(1,0,2)`.
    pub fn format(&self, x: Fq) -> String {
        let parts: Vec<String> = self.coeffs(x).iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }
}
