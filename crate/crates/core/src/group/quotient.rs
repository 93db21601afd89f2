use super::{FiniteGroup, Subgroup};

/// `G/N` on coset indices. Coset `i` is represented by its least element;
/// cosets are numbered by increasing representative, so the identity coset is `0`.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    group: FiniteGroup,
    modulus: Subgroup,
    coset_of: Vec<usize>,
    reps: Vec<usize>,
}

impl QuotientGroup {
    pub(crate) fn new(g: &FiniteGroup, n: &Subgroup) -> Self {
        debug_assert!(n.is_normal(g), "quotient by a non-normal subgroup");
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::with_capacity(g.order() / n.order());
        for x in g.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &h in n.members() {
                coset_of[g.mul(x, h)] = id;
            }
        }
        let k = reps.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                mul.push(coset_of[g.mul(a, b)] as u32);
            }
        }
        let group = FiniteGroup::from_flat_unchecked(k, mul);
        Self { group, modulus: n.clone(), coset_of, reps }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn modulus(&self) -> &Subgroup {
        &self.modulus
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// Least element of coset `i`.
    pub fn lift(&self, i: usize) -> usize {
        self.reps[i]
    }

    /// Image of a subgroup of `G` in `G/N`.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let mut m: Vec<usize> = h.members().iter().map(|&x| self.coset_of[x]).collect();
        m.sort_unstable();
        m.dedup();
        Subgroup::from_sorted(m)
    }

    /// Full preimage in `G` of a subgroup of `G/N`.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_sorted((0..self.coset_of.len()).filter(|&x| h.contains(self.coset_of[x])).collect())
    }
}
