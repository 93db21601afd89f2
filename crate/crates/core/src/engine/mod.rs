//! Primitive central idempotents of semisimple `F_q[G]` for metabelian `G`,
//! built from the triples `(N, D, A_N)` and the cyclotomic cosets of `A_N/D`.

mod cosets;
mod idempotent;
mod shoda;
mod summary;

pub use cosets::{generator_cosets, CyclotomicCoset};
pub use idempotent::{
    character_traces, conjugate_sum, coset_orbits, ec_idempotent, epsilon_idempotent, epsilon_with, CosetOrbits,
    CyclicQuotient,
};
pub use shoda::{shoda_triples, Choice, ShodaTriple};
pub use summary::{aut_description, AutTerm, WedderburnSummary};

pub(crate) use shoda::pick;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{AlgebraElement, GroupAlgebra};
use crate::error::{Error, Result};
use crate::field::{gcd, mult_order};
use crate::group::{FiniteGroup, DEFAULT_SUBGROUP_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Largest group order the subgroup lattice is enumerated for.
    pub cap: usize,
    pub choice: Choice,
    /// Run the exact invariant checks before returning.
    pub verify: bool,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_SUBGROUP_CAP, choice: Choice::Canonical, verify: true }
    }
}

/// One simple component `M_d(F_{q^l})` together with its idempotent and where it came from.
#[derive(Debug, Clone)]
pub struct ComponentDescriptor {
    pub d: u64,
    pub l: u64,
    pub idempotent: AlgebraElement,
    pub triple: ShodaTriple,
    /// Generator of `A/D` the coset exponents refer to.
    pub generator: usize,
    pub coset: CyclotomicCoset,
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub summary: WedderburnSummary,
    pub components: Vec<ComponentDescriptor>,
}

impl Decomposition {
    pub fn idempotents(&self) -> Vec<AlgebraElement> {
        self.components.iter().map(|c| c.idempotent.clone()).collect()
    }

    /// The idempotents as a sorted list, for set comparisons.
    pub fn idempotent_set(&self) -> Vec<AlgebraElement> {
        let mut v = self.idempotents();
        v.sort();
        v
    }
}

/// `(d, l)` for a triple: `d = [G : A]`, `l = ord_{[A:D]}(q) / [E_G(A/D) : A]`.
pub fn component_params(g: &FiniteGroup, triple: &ShodaTriple, q: u64) -> Result<(u64, u64)> {
    let cq = CyclicQuotient::new(g, &triple.a, &triple.d)?;
    let orbits = coset_orbits(g, &triple.a, &triple.d, &cq, q)?;
    params_from(g, triple, &orbits, q)
}

fn params_from(g: &FiniteGroup, triple: &ShodaTriple, orbits: &CosetOrbits, q: u64) -> Result<(u64, u64)> {
    let a = &triple.a;
    if !a.is_subgroup_of(&orbits.stabilizer) {
        return Err(Error::InternalInconsistency("E_G(A/D) does not contain A".into()));
    }
    let d = (g.order() / a.order()) as u64;
    let s = mult_order(triple.cyclic_order() as u64, q)?;
    let e_index = (orbits.stabilizer.order() / a.order()) as u64;
    if s % e_index != 0 {
        return Err(Error::InternalInconsistency(format!("ord = {s} is not divisible by [E : A] = {e_index}")));
    }
    Ok((d, s / e_index))
}

/// Complete set of primitive central idempotents of `F_q[G]` with the
/// Wedderburn summary.
pub fn decompose(ctx: &Arc<GroupAlgebra>, opts: DecomposeOptions) -> Result<Decomposition> {
    let g = ctx.group();
    let q = ctx.field().q();
    if gcd(q, g.order() as u64) != 1 {
        return Err(Error::NotSemisimple { q, order: g.order() });
    }
    let triples = shoda_triples(g, opts.cap, opts.choice)?;
    let per_triple: Vec<Vec<ComponentDescriptor>> = triples
        .par_iter()
        .enumerate()
        .map(|(i, t)| triple_components(ctx, t, opts.choice.rng(i, 0xc0)))
        .collect::<Result<_>>()?;
    let mut components: Vec<ComponentDescriptor> = per_triple.into_iter().flatten().collect();
    components.sort_by(|x, y| (x.triple.sort_key(), &x.coset).cmp(&(y.triple.sort_key(), &y.coset)));

    let mut alpha: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for c in &components {
        *alpha.entry((c.d, c.l)).or_default() += 1;
    }
    let out = Decomposition { summary: WedderburnSummary::new(q, alpha), components };
    if opts.verify {
        verify_decomposition(ctx, &out)?;
    }
    Ok(out)
}

pub(crate) fn triple_components(
    ctx: &Arc<GroupAlgebra>,
    triple: &ShodaTriple,
    mut rng: Option<ChaCha8Rng>,
) -> Result<Vec<ComponentDescriptor>> {
    let g = ctx.group();
    let q = ctx.field().q();
    let gens = CyclicQuotient::generator_candidates(g, &triple.a, &triple.d)?;
    let cq = CyclicQuotient::with_generator(g, &triple.a, &triple.d, *pick(&gens, &mut rng))?;
    let orbits = coset_orbits(g, &triple.a, &triple.d, &cq, q)?;
    let (d, l) = params_from(g, triple, &orbits, q)?;
    let mut out = Vec::with_capacity(orbits.orbits.len());
    for orbit in &orbits.orbits {
        let coset = orbits.cosets[*pick(orbit, &mut rng)].clone();
        let j = *pick(coset.members(), &mut rng);
        let eps = epsilon_with(ctx, &triple.a, &cq, j)?;
        out.push(ComponentDescriptor {
            d,
            l,
            idempotent: conjugate_sum(&eps),
            triple: triple.clone(),
            generator: cq.generator(),
            coset,
        });
    }
    Ok(out)
}

fn violation(invariant: &str, witness: String) -> Error {
    Error::AssertionFailure { invariant: invariant.into(), witness }
}

/// Exact checks: each idempotent nonzero, idempotent and central; pairwise
/// orthogonal; the sum is `1`; `sum alpha d^2 l = |G|`.
pub fn verify_decomposition(ctx: &Arc<GroupAlgebra>, dec: &Decomposition) -> Result<()> {
    let es: Vec<&AlgebraElement> = dec.components.iter().map(|c| &c.idempotent).collect();
    es.par_iter().enumerate().try_for_each(|(i, e)| {
        if e.is_zero() {
            return Err(violation("nonzero", format!("component {i}")));
        }
        if !e.is_idempotent() {
            return Err(violation("e^2 = e", format!("component {i}: {e}")));
        }
        if !e.is_central() {
            return Err(violation("central", format!("component {i}: {e}")));
        }
        Ok(())
    })?;
    let pairs: Vec<(usize, usize)> = (0..es.len()).flat_map(|i| (i + 1..es.len()).map(move |j| (i, j))).collect();
    pairs.par_iter().try_for_each(|&(i, j)| {
        // Both factors are central, so one product suffices.
        if !es[i].mul(es[j])?.is_zero() {
            return Err(violation("orthogonal", format!("components {i} and {j}")));
        }
        Ok(())
    })?;
    let mut sum = AlgebraElement::zero(ctx);
    for e in &es {
        sum = sum.add(e)?;
    }
    let one = AlgebraElement::one(ctx);
    if sum != one {
        let idx = (0..sum.coeffs().len()).find(|&i| sum.coeffs()[i] != one.coeffs()[i]).unwrap_or(0);
        return Err(violation("sum of idempotents = 1", format!("coefficient index {idx}")));
    }
    let total = dec.summary.total_dimension();
    if total != ctx.group().order() as u64 {
        return Err(violation("sum alpha d^2 l = |G|", format!("{total} != {}", ctx.group().order())));
    }
    Ok(())
}

/// Checks `dim F_q[G] e = d^2 l` for every component.
pub fn verify_ideal_dimensions(dec: &Decomposition) -> Result<()> {
    dec.components.par_iter().enumerate().try_for_each(|(i, c)| {
        let dim = c.idempotent.left_ideal_dimension() as u64;
        if dim != c.d * c.d * c.l {
            return Err(violation("dim F_q[G] e = d^2 l", format!("component {i}: {dim} != {}^2 * {}", c.d, c.l)));
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;
    use crate::group::{cyclic_group, d2_group, dihedral_group, symmetric_group};

    fn ctx(g: FiniteGroup, p: u64) -> Arc<GroupAlgebra> {
        GroupAlgebra::new(Arc::new(g), Arc::new(FieldTower::new(p, 1).unwrap()))
    }

    fn alpha(dec: &Decomposition) -> Vec<((u64, u64), u64)> {
        dec.summary.components.iter().map(|(&k, &v)| (k, v)).collect()
    }

    #[test]
    fn s3_over_f5() {
        let c = ctx(symmetric_group(3), 5);
        let dec = decompose(&c, DecomposeOptions::default()).unwrap();
        assert_eq!(alpha(&dec), vec![((1, 1), 2), ((2, 1), 1)]);
        verify_ideal_dimensions(&dec).unwrap();
        let s3 = symmetric_group(3);
        let t = &shoda_triples(&s3, 512, Choice::Canonical).unwrap()[0];
        assert_eq!(component_params(&s3, t, 2).unwrap(), (2, 1));
    }

    #[test]
    fn small_examples() {
        let dec = decompose(&ctx(dihedral_group(4), 3), DecomposeOptions::default()).unwrap();
        assert_eq!(alpha(&dec), vec![((1, 1), 4), ((2, 1), 1)]);
        let dec = decompose(&ctx(d2_group(2), 3), DecomposeOptions::default()).unwrap();
        assert_eq!(alpha(&dec), vec![((1, 1), 4), ((1, 2), 2), ((2, 2), 1)]);
        // Z_7 over F_2: 1 + 6/3.
        let dec = decompose(&ctx(cyclic_group(7), 2), DecomposeOptions::default()).unwrap();
        assert_eq!(alpha(&dec), vec![((1, 1), 1), ((1, 3), 2)]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            decompose(&ctx(symmetric_group(3), 2), DecomposeOptions::default()).unwrap_err(),
            Error::NotSemisimple { q: 2, order: 6 }
        );
        assert!(matches!(
            decompose(&ctx(symmetric_group(4), 5), DecomposeOptions::default()),
            Err(Error::NotMetabelian { .. })
        ));
    }

    #[test]
    fn seeded_choices_give_the_same_set() {
        let c = ctx(dihedral_group(6), 5);
        let base = decompose(&c, DecomposeOptions::default()).unwrap();
        for seed in 0..5 {
            let opts = DecomposeOptions { choice: Choice::Seeded(seed), ..Default::default() };
            let other = decompose(&c, opts).unwrap();
            assert_eq!(other.idempotent_set(), base.idempotent_set());
            assert_eq!(other.summary, base.summary);
        }
    }
}
