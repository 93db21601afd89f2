//! Independent check of the idempotent engine: split the center of `F_q[G]`
//! by linear algebra and polynomial factorization, and count simple
//! components by `q`-classes. Nothing here touches the subgroup machinery.

use std::sync::Arc;

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::error::{Error, Result};
use crate::field::poly::{self, Poly};
use crate::field::{factor_polynomial, gcd, BaseField, Fq};
use crate::group::FiniteGroup;
use crate::linalg::{nullspace, EchelonBasis};

fn require_semisimple(g: &FiniteGroup, q: u64) -> Result<()> {
    if gcd(q, g.order() as u64) != 1 {
        return Err(Error::NotSemisimple { q, order: g.order() });
    }
    Ok(())
}

/// Number of orbits of conjugacy classes under `class(g) -> class(g^q)`.
pub fn q_class_count(g: &FiniteGroup, q: u64) -> Result<usize> {
    require_semisimple(g, q)?;
    let classes = g.conjugacy_classes();
    let mut class_of = vec![0usize; g.order()];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    let image: Vec<usize> = classes.iter().map(|c| class_of[g.pow(c[0], q)]).collect();
    let mut seen = vec![false; classes.len()];
    let mut orbits = 0;
    for start in 0..classes.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = image[i];
        }
    }
    Ok(orbits)
}

/// Class sums with the structure constants `z_i z_j = sum_k c[i][j][k] z_k`.
#[derive(Debug, Clone)]
pub struct CenterBasis {
    pub class_sums: Vec<AlgebraElement>,
    pub constants: Vec<Vec<Vec<Fq>>>,
}

impl CenterBasis {
    pub fn new(ctx: &Arc<GroupAlgebra>) -> Result<Self> {
        let classes = ctx.group().conjugacy_classes();
        let class_sums: Vec<AlgebraElement> = classes.iter().map(|c| AlgebraElement::indicator(ctx, c)).collect();
        let mut constants = Vec::with_capacity(class_sums.len());
        for zi in &class_sums {
            let mut row = Vec::with_capacity(class_sums.len());
            for zj in &class_sums {
                let prod = zi.mul(zj)?;
                // Central, so constant on classes; read at the representatives.
                let coeffs: Vec<Fq> = classes.iter().map(|c| prod.coeff(c[0])).collect();
                if classes.iter().zip(&coeffs).any(|(c, &v)| c.iter().any(|&x| prod.coeff(x) != v)) {
                    return Err(Error::InternalInconsistency("product of class sums is not central".into()));
                }
                row.push(coeffs);
            }
            constants.push(row);
        }
        Ok(Self { class_sums, constants })
    }
}

/// Evaluates `u(w)` in the block with identity `e`.
fn eval_in_block(u: &Poly, w: &AlgebraElement, e: &AlgebraElement) -> Result<AlgebraElement> {
    let mut acc = AlgebraElement::zero(e.ctx());
    for &c in u.coeffs().iter().rev() {
        acc = acc.mul(w)?.add(&e.scale(c))?;
    }
    Ok(acc)
}

/// Minimal polynomial of `w` acting in the block `e` (so `w^0 = e`).
fn min_poly(f: &BaseField, w: &AlgebraElement, e: &AlgebraElement) -> Result<Poly> {
    let mut basis = EchelonBasis::new();
    let mut power = e.clone();
    loop {
        if let Some(c) = basis.insert(f, power.coeffs()) {
            // power = sum c_i w^i, so x^k - sum c_i x^i annihilates w.
            let mut coeffs: Vec<Fq> = c.iter().map(|&x| f.neg(x)).collect();
            coeffs.push(Fq::ONE);
            return Ok(Poly::from_coeffs(coeffs));
        }
        power = power.mul(w)?;
    }
}

/// Splits `e` along the irreducible factors of the minimal polynomial of `w e`.
/// Returns `None` when the polynomial is irreducible.
fn split_block(f: &BaseField, w: &AlgebraElement, e: &AlgebraElement) -> Result<Option<Vec<AlgebraElement>>> {
    let we = w.mul(e)?;
    let mu = min_poly(f, &we, e)?;
    let factors = factor_polynomial(f, &mu);
    if factors.iter().any(|(_, k)| *k > 1) {
        let q = e.ctx().field().q();
        return Err(Error::NotSemisimple { q, order: e.ctx().group().order() });
    }
    if factors.len() <= 1 {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(factors.len());
    for (m, _) in &factors {
        let (cofactor, r) = poly::divrem(f, &mu, m);
        debug_assert!(r.is_zero());
        // s m + t cofactor = 1, so u = t cofactor is 1 mod m and 0 mod cofactor.
        let (g, _, t) = poly::ext_gcd(f, m, &cofactor);
        if !g.is_one() {
            return Err(Error::InternalInconsistency("factors of a squarefree polynomial share a root".into()));
        }
        let u = poly::rem(f, &poly::mul(f, &t, &cofactor), &mu);
        out.push(eval_in_block(&u, &we, e)?);
    }
    Ok(Some(out))
}

/// A basis of `Z(F_q[G]) e` and the kernel of `u -> u^q - u` on it. The kernel
/// dimension is the number of fields `Z e` splits into.
fn frobenius_kernel(f: &BaseField, sums: &[AlgebraElement], e: &AlgebraElement) -> Result<Vec<AlgebraElement>> {
    let q = e.ctx().field().q();
    let mut echelon = EchelonBasis::new();
    let mut basis = Vec::new();
    for z in sums {
        let v = z.mul(e)?;
        if echelon.insert(f, v.coeffs()).is_none() {
            basis.push(v);
        }
    }
    let r = basis.len();
    // Column i holds the coordinates of b_i^q - b_i.
    let mut cols = Vec::with_capacity(r);
    for b in &basis {
        let img = b.pow(q).sub(b)?;
        let c = echelon
            .coordinates(f, img.coeffs())
            .ok_or_else(|| Error::InternalInconsistency("Z e is not closed under powers".into()))?;
        cols.push(c);
    }
    let rows: Vec<Vec<Fq>> = (0..r).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let kernel = nullspace(f, &rows, r);
    kernel
        .iter()
        .map(|x| {
            let mut acc = AlgebraElement::zero(e.ctx());
            for (b, &c) in basis.iter().zip(x) {
                acc = acc.add(&b.scale(c))?;
            }
            Ok(acc)
        })
        .collect()
}

/// The primitive idempotents of the center of `F_q[G]`, sorted by coefficient vector.
///
/// Blocks are refined by the minimal polynomials of the class sums, in class
/// order. A block on which every class sum has an irreducible minimal
/// polynomial can still be a product of isomorphic fields, so each surviving
/// block is finished off with the Berlekamp subalgebra `{u : u^q = u}`.
pub fn center_split(ctx: &Arc<GroupAlgebra>) -> Result<Vec<AlgebraElement>> {
    let g = ctx.group();
    let f = ctx.base();
    require_semisimple(g, ctx.field().q())?;
    let sums: Vec<AlgebraElement> = g.conjugacy_classes().iter().map(|c| AlgebraElement::indicator(ctx, c)).collect();

    let mut blocks = vec![AlgebraElement::one(ctx)];
    for z in &sums {
        let mut next = Vec::with_capacity(blocks.len());
        for e in blocks {
            match split_block(f, z, &e)? {
                Some(parts) => next.extend(parts),
                None => next.push(e),
            }
        }
        blocks = next;
    }

    let mut done = Vec::new();
    while let Some(e) = blocks.pop() {
        let kernel = frobenius_kernel(f, &sums, &e)?;
        if kernel.len() <= 1 {
            done.push(e);
            continue;
        }
        // Any kernel element outside F_q e has a split minimal polynomial with
        // at least two roots.
        let mut split = None;
        for w in &kernel {
            if let Some(parts) = split_block(f, w, &e)? {
                split = Some(parts);
                break;
            }
        }
        match split {
            Some(parts) => blocks.extend(parts),
            None => return Err(Error::InternalInconsistency("Berlekamp kernel failed to split a block".into())),
        }
    }
    done.sort();
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;
    use crate::group::{cyclic_group, d2_group, dihedral_group, symmetric_group};

    fn ctx(g: FiniteGroup, p: u64, a: u32) -> Arc<GroupAlgebra> {
        GroupAlgebra::new(Arc::new(g), Arc::new(FieldTower::new(p, a).unwrap()))
    }

    #[test]
    fn q_class_examples() {
        assert_eq!(q_class_count(&cyclic_group(12), 13).unwrap(), 12);
        assert_eq!(q_class_count(&symmetric_group(3), 5).unwrap(), 3);
        assert_eq!(q_class_count(&d2_group(1), 3).unwrap(), 5);
        // Z_7 over F_2: {0}, {1,2,4}, {3,5,6}.
        assert_eq!(q_class_count(&cyclic_group(7), 2).unwrap(), 3);
        assert!(matches!(q_class_count(&symmetric_group(3), 3), Err(Error::NotSemisimple { .. })));
    }

    #[test]
    fn split_examples() {
        let c = ctx(cyclic_group(1), 5, 1);
        assert_eq!(center_split(&c).unwrap(), vec![AlgebraElement::one(&c)]);

        let c = ctx(cyclic_group(3), 2, 1);
        let s: Vec<String> = center_split(&c).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(s, vec!["(1)*a + (1)*a^2", "(1)*1 + (1)*a + (1)*a^2"]);

        let c = ctx(symmetric_group(3), 5, 1);
        assert_eq!(center_split(&c).unwrap().len(), 3);
    }

    #[test]
    fn berlekamp_completion_is_needed_and_works() {
        // Cases where several components share one residue field.
        for (g, p, a) in [(cyclic_group(5), 2, 2), (dihedral_group(5), 3, 1), (cyclic_group(15), 2, 1)] {
            let c = ctx(g.clone(), p, a);
            let split = center_split(&c).unwrap();
            assert_eq!(split.len(), q_class_count(&g, c.field().q()).unwrap());
            let mut sum = AlgebraElement::zero(&c);
            for e in &split {
                assert!(e.is_idempotent() && e.is_central() && !e.is_zero());
                sum = sum.add(e).unwrap();
            }
            assert_eq!(sum, AlgebraElement::one(&c));
        }
    }

    #[test]
    fn structure_constants_expand_products() {
        let c = ctx(dihedral_group(4), 3, 1);
        let cb = CenterBasis::new(&c).unwrap();
        for (i, zi) in cb.class_sums.iter().enumerate() {
            for (j, zj) in cb.class_sums.iter().enumerate() {
                let mut acc = AlgebraElement::zero(&c);
                for (k, zk) in cb.class_sums.iter().enumerate() {
                    acc = acc.add(&zk.scale(cb.constants[i][j][k])).unwrap();
                }
                assert_eq!(acc, zi.mul(zj).unwrap());
            }
        }
    }
}
