use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// `(N, D, A)` with `N ⊴ G`, `N ≤ D ≤ A`, `A/N` a maximal abelian subgroup of
/// `G/N` containing `(G/N)'`, `A/D` cyclic and `D/N` core-free in `G/N`.
/// All three are stored as subgroups of `G` (full preimages).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShodaTriple {
    pub n: Subgroup,
    pub d: Subgroup,
    pub a: Subgroup,
}

impl ShodaTriple {
    /// `[A : D]`.
    pub fn cyclic_order(&self) -> usize {
        self.a.order() / self.d.order()
    }

    pub(crate) fn sort_key(&self) -> (&Subgroup, &Subgroup) {
        (&self.n, &self.d)
    }
}

/// How the free choices in the enumeration are made.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Choice {
    /// Canonical rules: largest-then-lex-least `A_N`, lex-least orbit
    /// representatives, least generators and coset members.
    Canonical,
    /// Uniformly random valid choices from a seeded generator.
    Seeded(u64),
}

impl Choice {
    /// Independent generator for the `index`-th work item.
    pub(crate) fn rng(&self, index: usize, salt: u64) -> Option<ChaCha8Rng> {
        match *self {
            Choice::Canonical => None,
            Choice::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(
                seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt.rotate_left(17),
            )),
        }
    }
}

/// Picks the first element, or a random one when a generator is supplied.
pub(crate) fn pick<'a, T>(items: &'a [T], rng: &mut Option<ChaCha8Rng>) -> &'a T {
    match rng {
        None => &items[0],
        Some(r) => items.choose(r).expect("nonempty choice set"),
    }
}

/// The triples `S` of the group, sorted by `(|N|, N, |D|, D)`.
pub fn shoda_triples(g: &FiniteGroup, cap: usize, choice: Choice) -> Result<Vec<ShodaTriple>> {
    if !g.is_metabelian() {
        let d = g.derived_subgroup();
        return Err(Error::NotMetabelian { second_derived_order: d.derived(g).order() });
    }
    let normals = g.normal_subgroups(cap)?;
    let per_n: Vec<Vec<ShodaTriple>> = normals
        .par_iter()
        .enumerate()
        .map(|(idx, n)| triples_over(g, n, cap, choice.rng(idx, 0x5d)))
        .collect::<Result<_>>()?;
    let mut out: Vec<ShodaTriple> = per_n.into_iter().flatten().collect();
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    Ok(out)
}

fn triples_over(g: &FiniteGroup, n: &Subgroup, cap: usize, mut rng: Option<ChaCha8Rng>) -> Result<Vec<ShodaTriple>> {
    let quot = g.quotient(n);
    let qg = quot.group();
    let a_choices = qg.maximal_abelian_over_derived_all(cap)?;
    let a_q = pick(&a_choices, &mut rng).clone();
    let a = quot.preimage(&a_q);
    let candidates: Vec<Subgroup> = qg
        .subgroups_within(&a_q, cap)?
        .into_iter()
        .filter(|d| a_q.order() % d.order() == 0 && quotient_is_cyclic(qg, &a_q, d) && d.is_core_free(qg))
        .collect();
    // One representative per G/N-conjugacy class.
    let mut done: Vec<bool> = vec![false; candidates.len()];
    let mut out = Vec::new();
    for i in 0..candidates.len() {
        if done[i] {
            continue;
        }
        let orbit = candidates[i].conjugates(qg);
        for c in &orbit {
            if let Ok(j) = candidates.binary_search(c) {
                done[j] = true;
            }
        }
        // `conjugates` is sorted by (order, members), so the first entry is lex-least.
        let d_q = pick(&orbit, &mut rng);
        out.push(ShodaTriple { n: n.clone(), d: quot.preimage(d_q), a: a.clone() });
    }
    Ok(out)
}

/// `A/D` cyclic, for `D ≤ A` with `A` abelian.
fn quotient_is_cyclic(g: &FiniteGroup, a: &Subgroup, d: &Subgroup) -> bool {
    let n = a.order() / d.order();
    a.members().iter().any(|&x| {
        let mut y = x;
        let mut k = 1;
        while !d.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        k == n
    })
}
