use std::cmp::Ordering;
use std::collections::HashSet;

use rayon::prelude::*;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Default bound on `|G|` for full subgroup enumeration.
pub const DEFAULT_SUBGROUP_CAP: usize = 512;

/// A subgroup, identified by its sorted member set.
///
/// Ordered by `(order, members)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.len().cmp(&other.members.len()).then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    /// Checks closure and wraps an arbitrary member list.
    pub fn from_members(g: &FiniteGroup, mut members: Vec<usize>) -> Option<Self> {
        members.sort_unstable();
        members.dedup();
        let s = Self { members };
        s.is_closed(g).then_some(s)
    }

    /// The subgroup generated by `gens`.
    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Self {
        closure(g, gens)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.members.iter().all(|&x| other.contains(x))
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &x in &self.members {
            m[x] = true;
        }
        m
    }

    fn is_closed(&self, g: &FiniteGroup) -> bool {
        self.contains(0) && self.members.iter().all(|&a| self.members.iter().all(|&b| self.contains(g.mul(a, b))))
    }

    /// Greedy generating set: repeatedly add the least member not yet generated.
    pub fn generators(&self, g: &FiniteGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        let mut inside = vec![false; g.order()];
        inside[0] = true;
        for &x in &self.members {
            if inside[x] {
                continue;
            }
            gens.push(x);
            let h = extend(g, &span, &gens);
            for &y in h.members() {
                inside[y] = true;
            }
            span = h.members;
        }
        gens
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_sorted(self.members.iter().copied().filter(|&x| other.contains(x)).collect())
    }

    /// The subgroup generated by `self` and `other`.
    pub fn join(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators(g);
        gens.extend(other.generators(g));
        closure(g, &gens)
    }

    /// `x^{-1} H x`.
    pub fn conjugate(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        let mut m: Vec<usize> = self.members.iter().map(|&h| g.conj(h, x)).collect();
        m.sort_unstable();
        Subgroup::from_sorted(m)
    }

    pub fn is_normal_in(&self, g: &FiniteGroup, ambient: &Subgroup) -> bool {
        let gens = if ambient.order() == g.order() { g.generators() } else { ambient.generators(g) };
        let hgens = self.generators(g);
        gens.iter().all(|&x| hgens.iter().all(|&h| self.contains(g.conj(h, x))))
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        self.is_normal_in(g, &g.whole())
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        let gens = self.generators(g);
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn is_cyclic(&self, g: &FiniteGroup) -> bool {
        self.members.iter().any(|&x| g.element_order(x) == self.order())
    }

    /// Derived subgroup of `self`.
    pub fn derived(&self, g: &FiniteGroup) -> Subgroup {
        let gens = self.generators(g);
        let mut comms: Vec<usize> = Vec::new();
        for &a in &gens {
            for &b in &gens {
                comms.push(g.commutator(a, b));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        // Normal closure in `self` of the generator commutators.
        let mut members = closure(g, &comms);
        loop {
            let conj: Vec<usize> = members
                .members
                .iter()
                .flat_map(|&c| gens.iter().map(move |&x| (c, x)))
                .map(|(c, x)| g.conj(c, x))
                .filter(|&y| !members.contains(y))
                .collect();
            if conj.is_empty() {
                return members;
            }
            let mut gens = members.generators(g);
            gens.extend(conj);
            members = closure(g, &gens);
        }
    }

    /// The largest subgroup of `self` normal in `g`: the intersection of all conjugates.
    pub fn core(&self, g: &FiniteGroup) -> Subgroup {
        let gens = g.generators();
        let mut cur = self.clone();
        // Intersecting with conjugates by generators until stable gives the core.
        loop {
            let mut next = cur.clone();
            for &x in &gens {
                next = next.intersect(&cur.conjugate(g, x));
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_core_free(&self, g: &FiniteGroup) -> bool {
        self.core(g).order() == 1
    }

    /// The distinct conjugates of `self` in `g`, sorted.
    pub fn conjugates(&self, g: &FiniteGroup) -> Vec<Subgroup> {
        let gens = g.generators();
        let mut seen: HashSet<Subgroup> = HashSet::new();
        let mut orbit = vec![self.clone()];
        seen.insert(self.clone());
        let mut k = 0;
        while k < orbit.len() {
            let h = orbit[k].clone();
            for &x in &gens {
                let c = h.conjugate(g, x);
                if seen.insert(c.clone()) {
                    orbit.push(c);
                }
            }
            k += 1;
        }
        orbit.sort();
        orbit
    }

    pub fn index_in(&self, ambient: &Subgroup) -> usize {
        ambient.order() / self.order()
    }
}

/// The subgroup generated by `gens`.
fn closure(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    extend(g, &[0], gens)
}

/// The subgroup generated by `start` and `gens`, where `start` is a subgroup
/// whose own generators are among `gens` (or `{0}`).
///
/// A set containing the identity and closed under right multiplication by a
/// generating set is the generated subgroup.
fn extend(g: &FiniteGroup, start: &[usize], gens: &[usize]) -> Subgroup {
    let mut inside = vec![false; g.order()];
    let mut members: Vec<usize> = Vec::with_capacity(g.order());
    for &x in start.iter().chain(std::iter::once(&0)) {
        if !inside[x] {
            inside[x] = true;
            members.push(x);
        }
    }
    let mut k = 0;
    while k < members.len() {
        let y = members[k];
        for &s in gens {
            let z = g.mul(y, s);
            if !inside[z] {
                inside[z] = true;
                members.push(z);
            }
        }
        k += 1;
    }
    members.sort_unstable();
    Subgroup::from_sorted(members)
}

impl FiniteGroup {
    /// Every subgroup exactly once, sorted by `(order, members)`.
    ///
    /// Layered closure: cyclic subgroups first, then joins of known subgroups
    /// with cyclic ones until nothing new appears.
    pub fn all_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>> {
        self.subgroups_within(&self.whole(), cap)
    }

    /// Every subgroup of `ambient`, sorted.
    pub fn subgroups_within(&self, ambient: &Subgroup, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order() > cap {
            return Err(Error::CapExceeded { order: self.order(), cap });
        }
        let mut cyclic: Vec<(usize, Subgroup)> = Vec::new();
        let mut seen: HashSet<Subgroup> = HashSet::new();
        for &x in ambient.members() {
            let c = Subgroup::generated(self, &[x]);
            if seen.insert(c.clone()) {
                cyclic.push((x, c));
            }
        }
        let mut frontier: Vec<(Subgroup, Vec<usize>)> = cyclic.iter().map(|(x, c)| (c.clone(), vec![*x])).collect();
        let mut all: Vec<Subgroup> = frontier.iter().map(|(h, _)| h.clone()).collect();
        while !frontier.is_empty() {
            let found: Vec<Vec<(Subgroup, Vec<usize>)>> = frontier
                .par_iter()
                .map(|(h, hgens)| {
                    let mut local: Vec<(Subgroup, Vec<usize>)> = Vec::new();
                    let mut local_seen: HashSet<Subgroup> = HashSet::new();
                    for (x, _) in &cyclic {
                        if h.contains(*x) {
                            continue;
                        }
                        let mut gens = hgens.clone();
                        gens.push(*x);
                        let j = extend(self, h.members(), &gens);
                        if !seen.contains(&j) && local_seen.insert(j.clone()) {
                            local.push((j, gens));
                        }
                    }
                    local
                })
                .collect();
            let mut next = Vec::new();
            for (j, gens) in found.into_iter().flatten() {
                if seen.insert(j.clone()) {
                    all.push(j.clone());
                    next.push((j, gens));
                }
            }
            frontier = next;
        }
        all.sort();
        Ok(all)
    }

    pub fn normal_subgroups(&self, cap: usize) -> Result<Vec<Subgroup>> {
        Ok(self.all_subgroups(cap)?.into_iter().filter(|h| h.is_normal(self)).collect())
    }

    /// Maximal abelian subgroups containing `G'`, sorted by decreasing order
    /// then lex-least member list. The first one is the canonical choice.
    pub fn maximal_abelian_over_derived_all(&self, cap: usize) -> Result<Vec<Subgroup>> {
        let derived = self.derived_subgroup();
        if !derived.is_abelian(self) {
            return Err(Error::NotMetabelian { second_derived_order: derived.derived(self).order() });
        }
        if self.is_abelian() {
            return Ok(vec![self.whole()]);
        }
        // Abelian subgroups over G' correspond to abelian subgroups of the
        // centralizer of G' that contain G'.
        let cent = self.centralizer(&derived);
        let candidates: Vec<Subgroup> = self
            .subgroups_within(&cent, cap)?
            .into_iter()
            .filter(|a| derived.is_subgroup_of(a) && a.is_abelian(self))
            .collect();
        let mut maximal: Vec<Subgroup> = candidates
            .iter()
            .filter(|a| !candidates.iter().any(|b| b.order() > a.order() && a.is_subgroup_of(b)))
            .cloned()
            .collect();
        maximal.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.members().cmp(b.members())));
        Ok(maximal)
    }

    /// The canonical maximal abelian subgroup containing `G'`: largest order,
    /// then lex-least member list.
    pub fn maximal_abelian_over_derived(&self, cap: usize) -> Result<Subgroup> {
        Ok(self.maximal_abelian_over_derived_all(cap)?.swap_remove(0))
    }
}
