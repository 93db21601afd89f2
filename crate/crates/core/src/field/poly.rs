//! Dense univariate polynomials over `F_q`.
//!
//! Functions take the coefficient field explicitly; a [`Poly`] is only a
//! normalized coefficient vector (no trailing zeros, low degree first).

use std::cmp::Ordering;

use super::base::{BaseField, Fq};
use super::prime_divisors;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    c: Vec<Fq>,
}

impl Poly {
    pub fn from_coeffs(mut c: Vec<Fq>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Self { c }
    }

    pub fn zero() -> Self {
        Self { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self { c: vec![Fq::ONE] }
    }

    pub fn x() -> Self {
        Self { c: vec![Fq::ZERO, Fq::ONE] }
    }

    pub fn constant(a: Fq) -> Self {
        Self::from_coeffs(vec![a])
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.c.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == Fq::ONE
    }

    pub fn lead(&self) -> Fq {
        self.c.last().copied().unwrap_or(Fq::ZERO)
    }

    /// Formats as `[c0 c1 ...]` with each coefficient as its `F_p` tuple.
    pub fn format(&self, f: &BaseField) -> String {
        let parts: Vec<String> = self.c.iter().map(|&x| f.format(x)).collect();
        format!("[{}]", parts.join(" "))
    }
}

/// Canonical order: degree first, then coefficients compared low degree first.
pub fn canonical_cmp(a: &Poly, b: &Poly) -> Ordering {
    a.c.len().cmp(&b.c.len()).then_with(|| a.c.cmp(&b.c))
}

pub fn add(f: &BaseField, a: &Poly, b: &Poly) -> Poly {
    let n = a.c.len().max(b.c.len());
    Poly::from_coeffs((0..n).map(|i| f.add(a.coeff(i), b.coeff(i))).collect())
}

pub fn sub(f: &BaseField, a: &Poly, b: &Poly) -> Poly {
    let n = a.c.len().max(b.c.len());
    Poly::from_coeffs((0..n).map(|i| f.sub(a.coeff(i), b.coeff(i))).collect())
}

pub fn scale(f: &BaseField, a: &Poly, s: Fq) -> Poly {
    Poly::from_coeffs(a.c.iter().map(|&x| f.mul(x, s)).collect())
}

pub fn mul(f: &BaseField, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![Fq::ZERO; a.c.len() + b.c.len() - 1];
    for (i, &x) in a.c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.c.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    Poly::from_coeffs(out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem(f: &BaseField, a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = b.degree().expect("division by the zero polynomial");
    let inv_lead = f.inv(b.lead()).expect("nonzero leading coefficient");
    let mut r = a.c.clone();
    if r.len() <= db {
        return (Poly::zero(), a.clone());
    }
    let mut q = vec![Fq::ZERO; r.len() - db];
    for k in (0..q.len()).rev() {
        let coef = f.mul(r[k + db], inv_lead);
        if coef.is_zero() {
            continue;
        }
        q[k] = coef;
        for (j, &bj) in b.c.iter().enumerate() {
            r[k + j] = f.sub(r[k + j], f.mul(coef, bj));
        }
    }
    r.truncate(db);
    (Poly::from_coeffs(q), Poly::from_coeffs(r))
}

pub fn rem(f: &BaseField, a: &Poly, b: &Poly) -> Poly {
    divrem(f, a, b).1
}

pub fn monic(f: &BaseField, a: &Poly) -> Poly {
    if a.is_zero() {
        return Poly::zero();
    }
    scale(f, a, f.inv(a.lead()).expect("nonzero"))
}

/// Monic gcd (zero if both inputs are zero).
pub fn gcd(f: &BaseField, a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Returns `(g, s, t)` with `s*a + t*b = g`, `g` the monic gcd.
pub fn ext_gcd(f: &BaseField, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = f.inv(r0.lead()).expect("nonzero");
    (scale(f, &r0, inv), scale(f, &s0, inv), scale(f, &t0, inv))
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(f: &BaseField, a: &Poly, m: &Poly) -> Option<Poly> {
    let (g, s, _) = ext_gcd(f, &rem(f, a, m), m);
    g.is_one().then(|| rem(f, &s, m))
}

pub fn mul_mod(f: &BaseField, a: &Poly, b: &Poly, m: &Poly) -> Poly {
    rem(f, &mul(f, a, b), m)
}

pub fn pow_mod(f: &BaseField, base: &Poly, mut e: u128, m: &Poly) -> Poly {
    let mut acc = rem(f, &Poly::one(), m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(f, &acc, &b, m);
        }
        b = mul_mod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

pub fn derivative(f: &BaseField, a: &Poly) -> Poly {
    Poly::from_coeffs(a.c.iter().enumerate().skip(1).map(|(i, &x)| f.mul(f.from_int(i as i64), x)).collect())
}

/// For `a(x) = b(x^p)`, returns `b(x)^{1/p}` applied coefficientwise, i.e. the `p`-th root of `a`.
pub fn pth_root(f: &BaseField, a: &Poly) -> Poly {
    let p = f.p() as usize;
    Poly::from_coeffs(a.c.iter().step_by(p).map(|&x| f.pth_root(x)).collect())
}

/// `x^(q^k) mod m`, by `k` successive `q`-th powers.
pub fn x_pow_q_pow(f: &BaseField, k: usize, m: &Poly) -> Poly {
    let mut acc = rem(f, &Poly::x(), m);
    for _ in 0..k {
        acc = pow_mod(f, &acc, f.q() as u128, m);
    }
    acc
}

/// Rabin's test: `g` of degree `s` is irreducible iff `x^(q^s) = x mod g` and
/// `gcd(x^(q^(s/l)) - x, g) = 1` for every prime `l | s`.
pub fn is_irreducible(f: &BaseField, g: &Poly) -> bool {
    let Some(s) = g.degree() else { return false };
    if s == 0 {
        return false;
    }
    if s == 1 {
        return true;
    }
    let g = monic(f, g);
    let x = Poly::x();
    if x_pow_q_pow(f, s, &g) != rem(f, &x, &g) {
        return false;
    }
    prime_divisors(s as u64).into_iter().all(|l| {
        let h = sub(f, &x_pow_q_pow(f, s / l as usize, &g), &x);
        gcd(f, &h, &g).is_one()
    })
}

/// The lex-least monic irreducible of degree `s`: coefficient tuples
/// `(c_0, ..., c_{s-1})` compared with `c_0` most significant.
pub fn lex_least_irreducible(f: &BaseField, s: usize) -> Poly {
    assert!(s >= 1);
    let q = f.q() as u32;
    let mut digits = vec![0u32; s];
    // c_0 = 0 means x | g; skip that whole block at once.
    if s > 1 {
        digits[0] = 1;
    }
    loop {
        let mut c: Vec<Fq> = digits.iter().map(|&d| Fq(d)).collect();
        c.push(Fq::ONE);
        let g = Poly::from_coeffs(c);
        if is_irreducible(f, &g) {
            return g;
        }
        // increment with c_{s-1} least significant
        let mut k = s;
        loop {
            k -= 1;
            digits[k] += 1;
            if digits[k] < q {
                break;
            }
            digits[k] = 0;
            assert!(k > 0, "irreducible polynomials exist in every degree");
        }
    }
}
