//! Factorization over `F_q`: squarefree decomposition, distinct-degree
//! splitting, then deterministic equal-degree splitting.

use super::base::{BaseField, Fq};
use super::poly::{self, Poly};

/// Factors a nonzero polynomial of positive degree into monic irreducibles with
/// multiplicities, sorted by degree then coefficients (low degree first).
///
/// The leading coefficient is dropped: the product of the returned powers is
/// the monic associate of `g`.
pub fn factor_polynomial(f: &BaseField, g: &Poly) -> Vec<(Poly, usize)> {
    assert!(g.degree().is_some_and(|d| d >= 1), "factor_polynomial needs deg >= 1");
    let g = poly::monic(f, g);
    let mut out = Vec::new();
    for (sqf, mult) in squarefree(f, &g) {
        for (part, d) in distinct_degree(f, &sqf) {
            for irr in equal_degree(f, &part, d) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|a, b| poly::canonical_cmp(&a.0, &b.0).then(a.1.cmp(&b.1)));
    // A factor may appear in two squarefree parts only after p-th root recursion; merge.
    let mut merged: Vec<(Poly, usize)> = Vec::with_capacity(out.len());
    for (p, m) in out {
        match merged.last_mut() {
            Some((last, lm)) if *last == p => *lm += m,
            _ => merged.push((p, m)),
        }
    }
    merged
}

fn squarefree(f: &BaseField, a: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let da = poly::derivative(f, a);
    let mut c = poly::gcd(f, a, &da);
    let mut w = poly::divrem(f, a, &c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = poly::gcd(f, &w, &c);
        let z = poly::divrem(f, &w, &y).0;
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        c = poly::divrem(f, &c, &y).0;
        w = y;
    }
    if !c.is_one() {
        let root = poly::pth_root(f, &c);
        let p = f.p() as usize;
        out.extend(squarefree(f, &root).into_iter().map(|(g, m)| (g, m * p)));
    }
    out
}

/// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &BaseField, a: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = a.clone();
    let x = Poly::x();
    let mut h = poly::rem(f, &x, &rest);
    let mut d = 0;
    while rest.degree().is_some_and(|deg| deg >= 2 * (d + 1)) {
        d += 1;
        h = poly::pow_mod(f, &h, f.q() as u128, &rest);
        let g = poly::gcd(f, &poly::sub(f, &h, &x), &rest);
        if !g.is_one() {
            rest = poly::divrem(f, &rest, &g).0;
            h = poly::rem(f, &h, &rest);
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg >= 1) {
        out.push((rest, deg));
    }
    out
}

/// Splits a squarefree monic product of irreducibles of degree `d`.
fn equal_degree(f: &BaseField, a: &Poly, d: usize) -> Vec<Poly> {
    let n = a.degree().expect("nonzero");
    if n == d {
        return vec![a.clone()];
    }
    let q = f.q() as usize;
    // Candidate splitting polynomials enumerated deterministically by base-q counter.
    let mut idx: usize = q; // skip constants
    loop {
        let mut r = idx;
        let mut c = Vec::new();
        while r > 0 {
            c.push(Fq((r % q) as u32));
            r /= q;
        }
        idx += 1;
        let t = Poly::from_coeffs(c);
        if t.degree().is_some_and(|dt| dt >= n) {
            panic!("equal-degree splitting exhausted all candidates");
        }
        let probe = if f.p() == 2 { trace_map(f, &t, d, a) } else { half_power(f, &t, d, a) };
        let g = poly::gcd(f, &probe, a);
        if let Some(dg) = g.degree() {
            if dg > 0 && dg < n {
                let h = poly::divrem(f, a, &g).0;
                let mut out = equal_degree(f, &g, d);
                out.extend(equal_degree(f, &h, d));
                return out;
            }
        }
    }
}

/// `t^((q^d - 1)/2) - 1 mod a` for odd `q`.
fn half_power(f: &BaseField, t: &Poly, d: usize, a: &Poly) -> Poly {
    let q = f.q() as u128;
    // t^(1 + q + ... + q^(d-1)) then raise to (q-1)/2
    let mut norm = Poly::one();
    let mut cur = poly::rem(f, t, a);
    for _ in 0..d {
        norm = poly::mul_mod(f, &norm, &cur, a);
        cur = poly::pow_mod(f, &cur, q, a);
    }
    let u = poly::pow_mod(f, &norm, (q - 1) / 2, a);
    poly::sub(f, &u, &Poly::one())
}

/// Absolute trace `t + t^2 + ... + t^(2^(k d - 1)) mod a` for `q = 2^k`.
fn trace_map(f: &BaseField, t: &Poly, d: usize, a: &Poly) -> Poly {
    let steps = f.degree() as usize * d;
    let mut acc = Poly::zero();
    let mut cur = poly::rem(f, t, a);
    for _ in 0..steps {
        acc = poly::add(f, &acc, &cur);
        cur = poly::mul_mod(f, &cur, &cur, a);
    }
    acc
}
