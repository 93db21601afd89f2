use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::base::{BaseField, Fq};
use super::poly::{self, Poly};
use super::{gcd, mult_order, prime_divisors};
use crate::error::{Error, Result};

/// An element of `F_{q^s} = F_q[y]/(f(y))`, coefficients low degree first, length `s`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ExtElement(pub(crate) Vec<Fq>);

impl ExtElement {
    pub fn coeffs(&self) -> &[Fq] {
        &self.0
    }
}

/// The degree-`s` extension of the base field, with its lex-least modulus.
#[derive(Debug)]
pub struct Extension {
    degree: usize,
    modulus: Poly,
}

impl Extension {
    fn new(base: &BaseField, s: usize) -> Self {
        let modulus = poly::lex_least_irreducible(base, s);
        Self { degree: s, modulus }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Number of elements, `q^s`, when it fits in a `u128`.
    pub fn order(&self, base: &BaseField) -> Option<u128> {
        (base.q() as u128).checked_pow(self.degree as u32)
    }

    fn wrap(&self, p: Poly) -> ExtElement {
        let mut c = p.coeffs().to_vec();
        c.resize(self.degree, Fq::ZERO);
        ExtElement(c)
    }

    fn unwrap(&self, x: &ExtElement) -> Poly {
        Poly::from_coeffs(x.0.clone())
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement(vec![Fq::ZERO; self.degree])
    }

    pub fn one(&self) -> ExtElement {
        self.embed(Fq::ONE)
    }

    /// The image of `c` under the embedding `F_q -> F_{q^s}`.
    pub fn embed(&self, c: Fq) -> ExtElement {
        let mut v = vec![Fq::ZERO; self.degree];
        v[0] = c;
        ExtElement(v)
    }

    /// Element with the given coefficient codes, low degree first.
    pub fn element(&self, coeffs: &[Fq]) -> ExtElement {
        assert!(coeffs.len() <= self.degree);
        let mut v = coeffs.to_vec();
        v.resize(self.degree, Fq::ZERO);
        ExtElement(v)
    }

    pub fn add(&self, base: &BaseField, x: &ExtElement, y: &ExtElement) -> ExtElement {
        ExtElement(x.0.iter().zip(&y.0).map(|(&a, &b)| base.add(a, b)).collect())
    }

    pub fn scale(&self, base: &BaseField, x: &ExtElement, c: Fq) -> ExtElement {
        ExtElement(x.0.iter().map(|&a| base.mul(a, c)).collect())
    }

    pub fn mul(&self, base: &BaseField, x: &ExtElement, y: &ExtElement) -> ExtElement {
        if self.degree == 1 {
            return ExtElement(vec![base.mul(x.0[0], y.0[0])]);
        }
        let prod = poly::mul_mod(base, &self.unwrap(x), &self.unwrap(y), &self.modulus);
        self.wrap(prod)
    }

    pub fn pow(&self, base: &BaseField, x: &ExtElement, mut e: u128) -> ExtElement {
        let mut acc = self.one();
        let mut b = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(base, &acc, &b);
            }
            b = self.mul(base, &b, &b);
            e >>= 1;
        }
        acc
    }

    /// `x^e` for `e = sum_i digits[i] q^i`, with digits in `0..q`.
    ///
    /// Lets exponents near `q^s` be used without big integers.
    pub fn pow_base_q(&self, base: &BaseField, x: &ExtElement, digits: &[u64]) -> ExtElement {
        let mut acc = self.one();
        let mut cur = x.clone();
        for &d in digits {
            if d != 0 {
                acc = self.mul(base, &acc, &self.pow(base, &cur, d as u128));
            }
            cur = self.frobenius(base, &cur);
        }
        acc
    }

    /// The relative Frobenius `x -> x^q`.
    pub fn frobenius(&self, base: &BaseField, x: &ExtElement) -> ExtElement {
        self.pow(base, x, base.q() as u128)
    }

    /// `tr(x) = x + x^q + ... + x^{q^{s-1}}`, re-expressed in `F_q`.
    pub fn trace(&self, base: &BaseField, x: &ExtElement) -> Result<Fq> {
        let mut acc = self.zero();
        let mut cur = x.clone();
        for _ in 0..self.degree {
            acc = self.add(base, &acc, &cur);
            cur = self.frobenius(base, &cur);
        }
        if acc.0[1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InternalInconsistency(format!("trace {acc:?} is not fixed by Frobenius")));
        }
        Ok(acc.0[0])
    }

    /// Elements in coefficient-lex order (`c_0` most significant), starting at zero.
    pub fn elements<'a>(&'a self, base: &'a BaseField) -> impl Iterator<Item = ExtElement> + 'a {
        let q = base.q() as u32;
        let s = self.degree;
        let mut digits: Option<Vec<u32>> = Some(vec![0; s]);
        std::iter::from_fn(move || {
            let cur = digits.clone()?;
            let mut next = cur.clone();
            let mut k = s;
            loop {
                if k == 0 {
                    digits = None;
                    break;
                }
                k -= 1;
                next[k] += 1;
                if next[k] < q {
                    digits = Some(next);
                    break;
                }
                next[k] = 0;
            }
            Some(ExtElement(cur.into_iter().map(Fq).collect()))
        })
    }
}

/// `F_q` together with lazily built extensions `F_{q^s}`.
///
/// The extension cache fills idempotently and may be shared across threads.
#[derive(Debug)]
pub struct FieldTower {
    base: BaseField,
    extensions: Mutex<HashMap<usize, Arc<Extension>>>,
}

impl FieldTower {
    pub fn new(p: u64, a: u32) -> Result<Self> {
        Ok(Self { base: BaseField::new(p, a)?, extensions: Mutex::new(HashMap::new()) })
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn q(&self) -> u64 {
        self.base.q()
    }

    pub fn extend(&self, s: usize) -> Arc<Extension> {
        assert!(s >= 1, "extension degree must be positive");
        let mut cache = self.extensions.lock().expect("extension cache poisoned");
        cache.entry(s).or_insert_with(|| Arc::new(Extension::new(&self.base, s))).clone()
    }

    /// The least element (coefficient-lex order) of exact multiplicative order `n`
    /// in `F_{q^s}`, `s = ord_n(q)`.
    ///
    /// A first root `z` is found as `x^((q^s-1)/n)` for the least `x` giving exact
    /// order `n`; the result is the least of the `z^k`, `gcd(k, n) = 1`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<(Arc<Extension>, ExtElement)> {
        let q = self.q();
        let s = mult_order(n, q)? as usize;
        let ext = self.extend(s);
        if n == 1 {
            let one = ext.one();
            return Ok((ext, one));
        }
        let base = &self.base;
        let cofactor = unit_group_cofactor(q, s, n);
        let primes = prime_divisors(n);
        let has_exact_order = |y: &ExtElement| primes.iter().all(|&l| ext.pow(base, y, (n / l) as u128) != ext.one());
        let first = ext
            .elements(base)
            .skip(1)
            .map(|x| ext.pow_base_q(base, &x, &cofactor))
            .find(|y| has_exact_order(y))
            .ok_or_else(|| Error::InternalInconsistency(format!("no primitive {n}-th root of unity")))?;
        let mut best = first.clone();
        let mut power = first.clone();
        for k in 2..n {
            power = ext.mul(base, &power, &first);
            if gcd(k, n) == 1 && power < best {
                best = power.clone();
            }
        }
        Ok((ext, best))
    }
}

/// Base-`q` digits (least significant first) of `(q^s - 1) / n`, where `n | q^s - 1`.
fn unit_group_cofactor(q: u64, s: usize, n: u64) -> Vec<u64> {
    // q^s - 1 has every digit equal to q - 1; long division from the top.
    let mut out = vec![0u64; s];
    let mut rem: u128 = 0;
    for i in (0..s).rev() {
        let cur = rem * q as u128 + (q - 1) as u128;
        out[i] = (cur / n as u128) as u64;
        rem = cur % n as u128;
    }
    debug_assert_eq!(rem, 0, "n must divide q^s - 1");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extend_is_cached_and_uses_lex_least_modulus() {
        let t = FieldTower::new(2, 1).unwrap();
        let e = t.extend(2);
        assert!(Arc::ptr_eq(&e, &t.extend(2)));
        assert_eq!(e.modulus().coeffs(), &[Fq(1), Fq(1), Fq(1)]);
        let t5 = FieldTower::new(5, 1).unwrap();
        assert_eq!(t5.extend(2).order(t5.base()), Some(25));
        assert_eq!(t5.extend(60).order(t5.base()), None);
        assert_eq!(t5.extend(1).degree(), 1);
    }

    #[test]
    fn roots_of_unity_examples() {
        let t2 = FieldTower::new(2, 1).unwrap();
        let (e, z) = t2.primitive_root_of_unity(3).unwrap();
        // z^2 + z + 1 = 0
        let b = t2.base();
        let lhs = e.add(b, &e.add(b, &e.mul(b, &z, &z), &z), &e.one());
        assert_eq!(lhs, e.zero());
        assert_eq!(z, e.element(&[Fq(0), Fq(1)]));

        let t7 = FieldTower::new(7, 1).unwrap();
        let (_, z) = t7.primitive_root_of_unity(3).unwrap();
        assert_eq!(z.coeffs(), &[Fq(2)]);

        let (_, one) = t7.primitive_root_of_unity(1).unwrap();
        assert_eq!(one.coeffs(), &[Fq(1)]);
        assert!(t7.primitive_root_of_unity(14).is_err());
    }

    #[test]
    fn root_of_unity_has_exact_order() {
        for (p, a) in [(3u64, 1u32), (5, 1), (7, 1), (2, 2), (13, 1)] {
            let t = FieldTower::new(p, a).unwrap();
            for n in 1..40u64 {
                if gcd(n, t.q()) != 1 {
                    continue;
                }
                let (e, z) = t.primitive_root_of_unity(n).unwrap();
                let b = t.base();
                assert_eq!(e.pow(b, &z, n as u128), e.one());
                for l in prime_divisors(n) {
                    assert_ne!(e.pow(b, &z, (n / l) as u128), e.one(), "q={} n={n}", t.q());
                }
            }
        }
    }

    #[test]
    fn cofactor_digits() {
        // (7^2 - 1) / 8 = 6 = 6 + 0*7
        assert_eq!(unit_group_cofactor(7, 2, 8), vec![6, 0]);
        // (2^4 - 1) / 5 = 3 = 1 + 1*2
        assert_eq!(unit_group_cofactor(2, 4, 5), vec![1, 1, 0, 0]);
        assert_eq!(unit_group_cofactor(13, 1, 1), vec![12]);
    }

    #[test]
    fn trace_examples() {
        let t = FieldTower::new(2, 1).unwrap();
        let e = t.extend(2);
        let b = t.base();
        assert_eq!(e.trace(b, &e.one()).unwrap(), Fq(0));
        let zeta = e.element(&[Fq(0), Fq(1)]);
        assert_eq!(e.trace(b, &zeta).unwrap(), Fq(1));
        let t7 = FieldTower::new(7, 1).unwrap();
        let e1 = t7.extend(1);
        assert_eq!(e1.trace(t7.base(), &e1.embed(Fq(5))).unwrap(), Fq(5));
    }

    #[test]
    fn frobenius_fixed_set_is_base_field() {
        for (p, a, s) in [(2u64, 1u32, 3usize), (3, 1, 2), (2, 2, 2), (5, 1, 2)] {
            let t = FieldTower::new(p, a).unwrap();
            let e = t.extend(s);
            let b = t.base();
            let fixed: Vec<ExtElement> = e.elements(b).filter(|x| e.frobenius(b, x) == *x).collect();
            let embedded: Vec<ExtElement> = b.elements().map(|c| e.embed(c)).collect();
            assert_eq!(fixed.len(), embedded.len());
            assert!(embedded.iter().all(|x| fixed.contains(x)));
        }
    }

    #[test]
    fn elements_enumerate_in_lex_order() {
        let t = FieldTower::new(3, 1).unwrap();
        let e = t.extend(2);
        let els: Vec<ExtElement> = e.elements(t.base()).collect();
        assert_eq!(els.len(), 9);
        assert!(els.windows(2).all(|w| w[0] < w[1]));
    }
}
