use std::collections::HashMap;

use super::{FiniteGroup, GroupMeta};
use crate::error::{Error, Result};
use crate::field::pow_mod;

/// Largest order for which a full Cayley table is built.
pub(crate) const MAX_TABLE_ORDER: usize = 8192;

/// `⟨a, b | a^n = 1, b^t = a^k, b^{-1} a b = a^r⟩`, elements indexed by
/// `i + n j` for the normal form `a^i b^j` (`0 <= i < n`, `0 <= j < t`).
///
/// Moving `a^i` left past `b^j` gives `b^j a^i = a^{i r^{-j}} b^j`.
pub fn metacyclic_group(n: u64, t: u64, k: u64, r: u64) -> Result<FiniteGroup> {
    if n == 0 || t == 0 {
        return Err(Error::BadPresentation("n and t must be positive".into()));
    }
    if pow_mod(r, t, n) != 1 % n {
        return Err(Error::BadPresentation(format!("r^t = {r}^{t} is not 1 mod {n}")));
    }
    if !((k % n) * ((r + n - 1) % n)).is_multiple_of(n) {
        return Err(Error::BadPresentation(format!("k(r-1) = {k}*({r}-1) is not 0 mod {n}")));
    }
    let order = (n * t) as usize;
    if order > MAX_TABLE_ORDER {
        return Err(Error::OutOfRange(format!("group order {order} too large")));
    }
    let k = k % n;
    // r^{-1} = r^{t-1} mod n
    let rinv = pow_mod(r, t - 1, n);
    let rinv_pow: Vec<u64> = (0..t).map(|j| pow_mod(rinv, j, n)).collect();
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order as u64 {
        let (i1, j1) = (x % n, x / n);
        for y in 0..order as u64 {
            let (i2, j2) = (y % n, y / n);
            let mut i = (i1 + i2 * rinv_pow[j1 as usize]) % n;
            let mut j = j1 + j2;
            if j >= t {
                j -= t;
                i = (i + k) % n;
            }
            mul.push((i + n * j) as u32);
        }
    }
    let labels = (0..order as u64).map(|x| normal_form_label(&[("a", x % n), ("b", x / n)])).collect();
    Ok(FiniteGroup::from_flat_unchecked(order, mul).with_labels(labels).with_meta(GroupMeta::Metacyclic {
        n,
        t,
        k,
        r: r % n.max(1),
    }))
}

/// `"1"`, `"a"`, `"a^2 b"`, ... from `(symbol, exponent)` pairs.
fn normal_form_label(parts: &[(&str, u64)]) -> String {
    let words: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
        .collect();
    if words.is_empty() {
        "1".into()
    } else {
        words.join(" ")
    }
}

pub fn cyclic_group(n: u64) -> FiniteGroup {
    metacyclic_group(n, 1, 0, 1).expect("cyclic presentation is consistent")
}

/// Dihedral group of order `2n`.
pub fn dihedral_group(n: u64) -> FiniteGroup {
    metacyclic_group(n, 2, 0, n - 1).expect("dihedral presentation is consistent")
}

/// `⟨x, y, t | x^2, y^2, t^{2^m}, y^{-1}x^{-1}yx t^{2^{m-1}}, t central⟩`, order `2^{m+2}`.
///
/// Elements `t^c x^e y^f` are indexed by `c + 2^m (e + 2f)`; `yx = xy t^{2^{m-1}}`.
pub fn d1_group(m: u32) -> FiniteGroup {
    assert!(m >= 1);
    let tm = 1usize << m;
    let z = tm / 2;
    let order = 4 * tm;
    let split = |g: usize| (g % tm, (g / tm) & 1, g / (2 * tm));
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        let (c1, e1, f1) = split(a);
        for b in 0..order {
            let (c2, e2, f2) = split(b);
            let c = (c1 + c2 + z * f1 * e2) % tm;
            let e = e1 ^ e2;
            let f = f1 ^ f2;
            mul.push((c + tm * (e + 2 * f)) as u32);
        }
    }
    let labels = (0..order)
        .map(|g| {
            let (c, e, f) = split(g);
            normal_form_label(&[("t", c as u64), ("x", e as u64), ("y", f as u64)])
        })
        .collect();
    FiniteGroup::from_flat_unchecked(order, mul).with_labels(labels).with_meta(GroupMeta::D1 { m })
}

/// `⟨x, y | x^{2^{m+1}} = 1, y^2 = x^2, y^{-1} x y = x^{2^m + 1}⟩`, order `2^{m+2}`,
/// built as the metacyclic group `(2^{m+1}, 2, 2, 2^m + 1)` with `a = x`, `b = y`.
pub fn d2_group(m: u32) -> FiniteGroup {
    assert!(m >= 1);
    let n = 1u64 << (m + 1);
    let g = metacyclic_group(n, 2, 2, (1 << m) + 1).expect("D2 presentation is consistent");
    let labels = g.elements().map(|x| normal_form_label(&[("x", x as u64 % n), ("y", x as u64 / n)])).collect();
    g.with_labels(labels).with_meta(GroupMeta::D2 { m })
}

/// The permutation group generated by `gens` (images of `0..d`), elements sorted
/// lexicographically as image vectors, so the identity comes first.
pub fn from_permutations(gens: &[Vec<usize>]) -> FiniteGroup {
    let d = gens.first().map_or(0, Vec::len);
    let id: Vec<usize> = (0..d).collect();
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..d).map(|i| q[p[i]]).collect() };
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
    let mut k = 0;
    while k < elems.len() {
        for s in gens {
            let z = compose(&elems[k], s);
            if !index.contains_key(&z) {
                index.insert(z.clone(), elems.len());
                elems.push(z);
            }
        }
        k += 1;
    }
    elems.sort();
    let index: HashMap<&[usize], usize> = elems.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let n = elems.len();
    let mut mul = Vec::with_capacity(n * n);
    for p in &elems {
        for q in &elems {
            mul.push(index[compose(p, q).as_slice()] as u32);
        }
    }
    let labels = elems.iter().map(|p| cycle_label(p)).collect();
    FiniteGroup::from_flat_unchecked(n, mul).with_labels(labels)
}

/// Cycle notation, `()` for the identity.
fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut x = p[s];
        while x != s {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        let parts: Vec<String> = cyc.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", parts.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

pub fn symmetric_group(d: usize) -> FiniteGroup {
    assert!(d >= 1);
    let mut swap: Vec<usize> = (0..d).collect();
    if d > 1 {
        swap.swap(0, 1);
    }
    let cycle: Vec<usize> = (0..d).map(|i| (i + 1) % d).collect();
    from_permutations(&[swap, cycle])
}

pub fn alternating_group(d: usize) -> FiniteGroup {
    assert!(d >= 3);
    let gens: Vec<Vec<usize>> = (2..d)
        .map(|k| {
            let mut p: Vec<usize> = (0..d).collect();
            // (0 1 k)
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    from_permutations(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_group(g: &FiniteGroup) {
        let t = g.table();
        let checked = FiniteGroup::from_table(&t).expect("valid group");
        assert_eq!(&checked, g);
        assert!(g.is_latin());
    }

    #[test]
    fn metacyclic_examples() {
        let d8 = metacyclic_group(4, 2, 0, 3).unwrap();
        assert_group(&d8);
        assert!(!d8.is_abelian());
        assert_eq!(d8.elements().filter(|&x| d8.element_order(x) == 4).count(), 2);
        let z4 = metacyclic_group(2, 2, 1, 1).unwrap();
        assert_eq!(z4.element_order(2), 4);
        assert!(z4.is_abelian());
        assert!(cyclic_group(7).is_abelian());
        assert!(matches!(metacyclic_group(5, 2, 0, 2), Err(Error::BadPresentation(_))));
        assert!(matches!(metacyclic_group(4, 2, 1, 3), Err(Error::BadPresentation(_))));
        for (n, t, k, r) in [(5, 4, 0, 2), (7, 3, 0, 2), (9, 3, 0, 4), (8, 2, 0, 3), (16, 4, 0, 3), (8, 2, 2, 5)] {
            assert_group(&metacyclic_group(n, t, k, r).unwrap());
        }
    }

    #[test]
    fn presentation_relations_hold() {
        // b^{-1} a b = a^r and b^t = a^k
        let (n, t, k, r) = (7u64, 3u64, 0u64, 2u64);
        let g = metacyclic_group(n, t, k, r).unwrap();
        let (a, b) = (1usize, n as usize);
        assert_eq!(g.conj(a, b), g.pow(a, r));
        assert_eq!(g.pow(b, t), g.pow(a, k));
        let q = metacyclic_group(8, 2, 4, 3).unwrap();
        assert_eq!(q.pow(8, 2), 4);
        assert_eq!(q.label(8 + 3), "a^3 b");
        assert_eq!(q.label(0), "1");
    }

    #[test]
    fn d1_and_d2() {
        for m in 1..=4 {
            let g = d1_group(m);
            assert_group(&g);
            assert_eq!(g.order(), 1 << (m + 2));
            let center = g.center();
            assert_eq!(center.order(), 1 << m);
            assert!(center.contains(1));
            let h = d2_group(m);
            assert_group(&h);
            assert_eq!(h.order(), 1 << (m + 2));
            assert_eq!(g.quotient(&center).group().order(), 4);
            assert!(g.quotient(&center).group().is_abelian());
            assert!(h.quotient(&h.center()).group().is_abelian());
            assert_eq!(h.quotient(&h.center()).group().order(), 4);
        }
        // D1(1) is dihedral of order 8, D2(1) quaternion: count involutions.
        let inv = |g: &FiniteGroup| g.elements().filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(inv(&d1_group(1)), 5);
        assert_eq!(inv(&d2_group(1)), 1);
        assert_eq!(d1_group(2).label(1 + 4 + 8), "t x y");
    }

    #[test]
    fn permutation_groups() {
        let s3 = symmetric_group(3);
        assert_group(&s3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.label(0), "()");
        assert_eq!(alternating_group(4).order(), 12);
        assert_eq!(symmetric_group(4).order(), 24);
    }
}
