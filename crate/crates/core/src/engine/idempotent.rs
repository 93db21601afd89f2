use std::collections::HashSet;
use std::sync::Arc;

use super::cosets::{generator_cosets, CyclotomicCoset};
use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::error::{Error, Result};
use crate::field::{gcd, FieldTower, Fq};
use crate::group::{FiniteGroup, Subgroup};

/// A cyclic section `K/H` with a fixed generator `aH` and discrete logs.
#[derive(Debug, Clone)]
pub struct CyclicQuotient {
    n: u64,
    generator: usize,
    log: Vec<u32>,
}

impl CyclicQuotient {
    /// Uses the least element of `K` that generates `K/H`.
    pub fn new(g: &FiniteGroup, k: &Subgroup, h: &Subgroup) -> Result<Self> {
        let gens = Self::generator_candidates(g, k, h)?;
        Self::with_generator(g, k, h, gens[0])
    }

    /// All elements of `K` whose coset generates `K/H`, in index order.
    pub fn generator_candidates(g: &FiniteGroup, k: &Subgroup, h: &Subgroup) -> Result<Vec<usize>> {
        let err = || Error::NotCyclicQuotient { k_order: k.order(), h_order: h.order() };
        if !h.is_subgroup_of(k) || !h.is_normal_in(g, k) {
            return Err(err());
        }
        let n = k.order() / h.order();
        let gens: Vec<usize> = k.members().iter().copied().filter(|&a| coset_order(g, h, a) == n).collect();
        if gens.is_empty() {
            return Err(err());
        }
        Ok(gens)
    }

    pub fn with_generator(g: &FiniteGroup, k: &Subgroup, h: &Subgroup, a: usize) -> Result<Self> {
        let n = k.order() / h.order();
        if !k.contains(a) || coset_order(g, h, a) != n {
            return Err(Error::NotCyclicQuotient { k_order: k.order(), h_order: h.order() });
        }
        let mut log = vec![u32::MAX; g.order()];
        let mut x = 0;
        for i in 0..n {
            for &y in h.members() {
                log[g.mul(x, y)] = i as u32;
            }
            x = g.mul(x, a);
        }
        Ok(Self { n: n as u64, generator: a, log })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    /// `e` with `xH = (aH)^e`, for `x` in `K`.
    pub fn log(&self, x: usize) -> Option<u64> {
        let e = self.log[x];
        (e != u32::MAX).then_some(e as u64)
    }
}

/// Order of `aH` in `N_G(H)/H`.
fn coset_order(g: &FiniteGroup, h: &Subgroup, a: usize) -> usize {
    let mut x = a;
    let mut i = 1;
    while !h.contains(x) {
        x = g.mul(x, a);
        i += 1;
    }
    i
}

/// `tr(zeta^{j e})` for `e = 0..n`, `zeta` the canonical primitive `n`-th root of unity.
pub fn character_traces(field: &FieldTower, n: u64, j: u64) -> Result<Vec<Fq>> {
    let (ext, zeta) = field.primitive_root_of_unity(n)?;
    let base = field.base();
    let z = ext.pow(base, &zeta, j as u128);
    let mut out = Vec::with_capacity(n as usize);
    let mut cur = ext.one();
    for _ in 0..n {
        out.push(ext.trace(base, &cur)?);
        cur = ext.mul(base, &cur, &z);
    }
    Ok(out)
}

/// `eps_C(K, H) = |K|^{-1} sum_{g in K} tr(chi(gH)) g^{-1}` with `chi = chi_j`,
/// `j` the least member of `C` and the canonical generator of `K/H`.
pub fn epsilon_idempotent(
    ctx: &Arc<GroupAlgebra>,
    k: &Subgroup,
    h: &Subgroup,
    coset: &CyclotomicCoset,
) -> Result<AlgebraElement> {
    let cq = CyclicQuotient::new(ctx.group(), k, h)?;
    epsilon_with(ctx, k, &cq, coset.representative())
}

/// `eps` for an explicit cyclic section and character exponent `j`.
pub fn epsilon_with(ctx: &Arc<GroupAlgebra>, k: &Subgroup, cq: &CyclicQuotient, j: u64) -> Result<AlgebraElement> {
    let q = ctx.field().q();
    if gcd(q, k.order() as u64) != 1 {
        return Err(Error::NotCoprime { n: k.order() as u64, q });
    }
    let n = cq.order();
    let traces = character_traces(ctx.field(), n, j % n.max(1))?;
    let base = ctx.base();
    let k_inv = base.inv(base.from_int((k.order() as u64 % base.p()) as i64)).expect("|K| is a unit");
    let g = ctx.group();
    let mut coeffs = vec![Fq::ZERO; g.order()];
    for &x in k.members() {
        let e = cq.log(x).expect("x in K");
        coeffs[g.inv(x)] = base.mul(k_inv, traces[e as usize]);
    }
    AlgebraElement::from_coeffs(ctx, coeffs)
}

/// Sum of the distinct `G`-conjugates of `eps`.
pub fn conjugate_sum(eps: &AlgebraElement) -> AlgebraElement {
    let g = eps.ctx().group().clone();
    // Keyed by coefficients; the context is shared.
    let mut seen: HashSet<Vec<Fq>> = HashSet::new();
    let mut orbit = vec![eps.clone()];
    seen.insert(eps.coeffs().to_vec());
    let gens = g.generators();
    let mut i = 0;
    while i < orbit.len() {
        for &x in &gens {
            let c = orbit[i].conjugate(x);
            if seen.insert(c.coeffs().to_vec()) {
                orbit.push(c);
            }
        }
        i += 1;
    }
    orbit.iter().skip(1).fold(eps.clone(), |acc, x| acc.add(x).expect("same context"))
}

/// `e_C(G, K, H)`.
pub fn ec_idempotent(
    ctx: &Arc<GroupAlgebra>,
    k: &Subgroup,
    h: &Subgroup,
    coset: &CyclotomicCoset,
) -> Result<AlgebraElement> {
    Ok(conjugate_sum(&epsilon_idempotent(ctx, k, h, coset)?))
}

/// The action of `N_G(H) ∩ N_G(K)` on the generator cosets of `K/H`.
#[derive(Debug, Clone)]
pub struct CosetOrbits {
    /// Generator cosets, sorted by representative.
    pub cosets: Vec<CyclotomicCoset>,
    /// Orbits as sorted index lists into `cosets`, ordered by least index.
    pub orbits: Vec<Vec<usize>>,
    /// The stabilizer `E_G(K/H)` of any coset.
    pub stabilizer: Subgroup,
}

impl CosetOrbits {
    /// One coset per orbit, the least one.
    pub fn representatives(&self) -> Vec<CyclotomicCoset> {
        self.orbits.iter().map(|o| self.cosets[o[0]].clone()).collect()
    }
}

/// `R(K/H)` and `E_G(K/H)`.
///
/// `g` in `N_G(H) ∩ N_G(K)` satisfies `g^{-1} a g H = (aH)^m` for a unit `m`,
/// and sends the coset `C` to `m C`. The stabilizer is computed for every
/// coset and required to be the same.
pub fn coset_orbits(g: &FiniteGroup, k: &Subgroup, h: &Subgroup, cq: &CyclicQuotient, q: u64) -> Result<CosetOrbits> {
    let n = cq.order();
    let cosets = generator_cosets(n, q)?;
    let norm = g.normalizer(h).intersect(&g.normalizer(k));
    let a = cq.generator();
    let multipliers: Vec<(usize, u64)> =
        norm.members().iter().map(|&x| (x, cq.log(g.conj(a, x)).expect("normalizer preserves K"))).collect();
    let index_of = |c: &CyclotomicCoset| cosets.binary_search(c).expect("image of a generator coset");

    let mut stabilizer: Option<Vec<usize>> = None;
    for c in &cosets {
        let stab: Vec<usize> = multipliers.iter().filter(|(_, m)| c.scaled(*m) == *c).map(|(x, _)| *x).collect();
        match &stabilizer {
            None => stabilizer = Some(stab),
            Some(s) if *s != stab => {
                return Err(Error::AssertionFailure {
                    invariant: "E_G(K/H) independent of the coset".into(),
                    witness: format!("cosets {:?} and {:?}", cosets[0].members(), c.members()),
                })
            }
            _ => {}
        }
    }
    let stabilizer = Subgroup::from_members(g, stabilizer.unwrap_or_default())
        .ok_or_else(|| Error::InternalInconsistency("coset stabilizer is not a subgroup".into()))?;
    if !k.is_subgroup_of(&stabilizer) {
        return Err(Error::InternalInconsistency("K does not stabilize its own cosets".into()));
    }

    let mut distinct: Vec<u64> = multipliers.iter().map(|(_, m)| *m).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let mut orbit_of = vec![usize::MAX; cosets.len()];
    let mut orbits = Vec::new();
    for i in 0..cosets.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![i];
        orbit_of[i] = id;
        let mut t = 0;
        while t < orbit.len() {
            let c = cosets[orbit[t]].clone();
            for &m in &distinct {
                let j = index_of(&c.scaled(m));
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    orbit.push(j);
                }
            }
            t += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    Ok(CosetOrbits { cosets, orbits, stabilizer })
}
