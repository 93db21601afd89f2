//! Finite groups as Cayley tables, with the subgroup-lattice services the
//! idempotent enumeration needs.
//!
//! Element `0` is always the identity. Subgroups are plain sorted member sets;
//! functions that need the ambient operation take the group explicitly.

mod cayley_file;
mod lattice;
mod presentations;
mod quotient;

pub use cayley_file::{parse_cayley, write_cayley};
pub use lattice::{Subgroup, DEFAULT_SUBGROUP_CAP};
pub use presentations::{
    alternating_group, cyclic_group, d1_group, d2_group, dihedral_group, from_permutations, metacyclic_group,
    symmetric_group,
};
pub use quotient::QuotientGroup;

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Where a group came from; used for labelling and for the specialized paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupMeta {
    Metacyclic { n: u64, t: u64, k: u64, r: u64 },
    D1 { m: u32 },
    D2 { m: u32 },
    File,
}

/// Orders up to this bound get an exhaustive associativity check.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
    meta: Option<GroupMeta>,
    gens: OnceLock<Vec<usize>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a table and builds the group. Axioms are checked in the order
    /// identity, inverses, associativity; the first violation is reported.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::BadTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadTable(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::BadTable(format!("row {i} contains out-of-range index {bad}")));
            }
        }
        let mul: Vec<u32> = table.iter().flatten().map(|&x| x as u32).collect();
        let g = Self::from_flat_unchecked(n, mul);
        g.validate()?;
        Ok(g)
    }

    /// Builds a group from a flattened table known to be a group with identity `0`.
    pub(crate) fn from_flat_unchecked(order: usize, mul: Vec<u32>) -> Self {
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            if let Some(b) = (0..order).find(|&b| mul[a * order + b] == 0) {
                inv[a] = b as u32;
            }
        }
        Self { order, mul, inv, labels: None, meta: None, gens: OnceLock::new() }
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::NoIdentity { witness: x });
            }
        }
        for x in 0..n {
            let y = self.inv[x];
            if y == u32::MAX || self.mul(y as usize, x) != 0 {
                return Err(Error::NoInverse { element: x });
            }
        }
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::NotAssociative { a, b, c });
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            // Deterministic sample: a fixed linear-congruential walk.
            let mut s: u64 = 0x9e37_79b9_7f4a_7c15;
            for _ in 0..(1 << 20) {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (s >> 33) as usize % n;
                let b = (s >> 13) as usize % n;
                let c = (s as usize >> 3) % n;
                check(a, b, c)?;
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn with_meta(mut self, meta: GroupMeta) -> Self {
        self.meta = Some(meta);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn meta(&self) -> Option<GroupMeta> {
        self.meta
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => format!("g{g}"),
        }
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g^{-1} h g`.
    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.inv(g), self.mul(h, g))
    }

    /// `a^{-1} b^{-1} a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, g: usize, e: u64) -> usize {
        let mut acc = 0;
        for _ in 0..e % self.element_order(g) as u64 {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// The table as rows of indices.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A deterministic generating set: greedily add the least element not yet generated.
    pub fn generators(&self) -> Vec<usize> {
        self.gens.get_or_init(|| self.whole().generators(self)).clone()
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted((0..self.order).collect())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(vec![0])
    }

    pub fn exponent(&self) -> usize {
        (0..self.order)
            .map(|g| self.element_order(g))
            .fold(1, |a, b| a / crate::field::gcd(a as u64, b as u64) as usize * b)
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let mut class_of = vec![usize::MAX; self.order];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.order {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut class = vec![x];
            class_of[x] = id;
            let mut k = 0;
            while k < class.len() {
                let y = class[k];
                for &g in &gens {
                    let z = self.conj(y, g);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        class.push(z);
                    }
                }
                k += 1;
            }
            class.sort_unstable();
            out.push(class);
        }
        out
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.whole().derived(self)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    /// Elements commuting with every element of `s`.
    pub fn centralizer(&self, s: &Subgroup) -> Subgroup {
        let gens = s.generators(self);
        Subgroup::from_sorted(
            (0..self.order).filter(|&g| gens.iter().all(|&h| self.mul(g, h) == self.mul(h, g))).collect(),
        )
    }

    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        let gens = s.generators(self);
        Subgroup::from_sorted((0..self.order).filter(|&g| gens.iter().all(|&h| s.contains(self.conj(h, g)))).collect())
    }

    /// `is_metabelian`: `G''` trivial.
    pub fn is_metabelian(&self) -> bool {
        self.derived_subgroup().derived(self).order() == 1
    }

    pub fn quotient(&self, n: &Subgroup) -> QuotientGroup {
        QuotientGroup::new(self, n)
    }

    /// Checks the Latin-square property and `inv(inv(x)) = x`.
    pub fn is_latin(&self) -> bool {
        let n = self.order;
        let mut seen = vec![0usize; n];
        for (stamp, a) in (0..n).enumerate() {
            for b in 0..n {
                let r = self.mul(a, b);
                if seen[r] == stamp + 1 {
                    return false;
                }
                seen[r] = stamp + 1;
            }
        }
        let mut seen = vec![0usize; n];
        for (stamp, b) in (0..n).enumerate() {
            for a in 0..n {
                let r = self.mul(a, b);
                if seen[r] == stamp + 1 {
                    return false;
                }
                seen[r] = stamp + 1;
            }
        }
        (0..n).all(|x| self.inv(self.inv(x)) == x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> Vec<Vec<usize>> {
        vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]]
    }

    #[test]
    fn table_validation() {
        assert_eq!(FiniteGroup::from_table(&[vec![0]]).unwrap().order(), 1);
        assert_eq!(FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]]).unwrap().order(), 2);
        let mut bad = klein();
        bad[1][2] = 2;
        assert!(matches!(FiniteGroup::from_table(&bad), Err(Error::NotAssociative { .. })));
        let no_id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(FiniteGroup::from_table(&no_id), Err(Error::NoIdentity { witness: 0 }));
        let no_inv = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 0]];
        assert_eq!(FiniteGroup::from_table(&no_inv), Err(Error::NoInverse { element: 1 }));
        assert!(matches!(FiniteGroup::from_table(&[vec![0, 5], vec![1, 0]]), Err(Error::BadTable(_))));
    }

    #[test]
    fn classes_and_subgroups_of_s3() {
        let s3 = symmetric_group(3);
        let sizes: Vec<usize> = s3.conjugacy_classes().iter().map(Vec::len).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3]);
        assert_eq!(s3.derived_subgroup().order(), 3);
        assert_eq!(s3.center().order(), 1);
        assert!(s3.is_metabelian());
        assert!(!symmetric_group(4).is_metabelian());
        assert!(alternating_group(4).is_metabelian());
    }

    #[test]
    fn abelian_basics() {
        let z = cyclic_group(12);
        assert!(z.is_abelian());
        assert_eq!(z.derived_subgroup().order(), 1);
        assert_eq!(z.exponent(), 12);
        let d8 = dihedral_group(4);
        assert!(!d8.is_abelian());
        assert_eq!(d8.center().order(), 2);
        let a = d8.whole();
        assert_eq!(d8.normalizer(&d8.center()), a);
    }
}
