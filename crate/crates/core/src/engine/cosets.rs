use crate::error::Result;
use crate::field::{gcd, mult_order};

/// A `q`-cyclotomic coset of units modulo `n`.
///
/// A character `chi_j` of a cyclic group of order `n` (sending the fixed
/// generator to `zeta^j`) is identified with its exponent `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicCoset {
    modulus: u64,
    members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn representative(&self) -> u64 {
        self.members[0]
    }

    pub fn contains(&self, j: u64) -> bool {
        self.members.binary_search(&(j % self.modulus.max(1))).is_ok()
    }

    /// `m C`, for a unit `m` mod `n`.
    pub fn scaled(&self, m: u64) -> CyclotomicCoset {
        let n = self.modulus;
        let mut members: Vec<u64> = self.members.iter().map(|&j| j * m % n.max(1)).collect();
        members.sort_unstable();
        CyclotomicCoset { modulus: n, members }
    }
}

/// The `q`-cyclotomic cosets of units modulo `n`, sorted by representative.
///
/// For `n = 1` there is a single coset `{0}` (the trivial character).
pub fn generator_cosets(n: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    let s = mult_order(n, q)?;
    if n == 1 {
        return Ok(vec![CyclotomicCoset { modulus: 1, members: vec![0] }]);
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for j in 1..n {
        if seen[j as usize] || gcd(j, n) != 1 {
            continue;
        }
        let mut members = Vec::new();
        let mut x = j;
        while !seen[x as usize] {
            seen[x as usize] = true;
            members.push(x);
            x = ((x as u128 * q as u128) % n as u128) as u64;
        }
        members.sort_unstable();
        debug_assert_eq!(members.len() as u64, s, "generator coset size must be ord_n(q)");
        out.push(CyclotomicCoset { modulus: n, members });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn examples() {
        let c = generator_cosets(1, 7).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].representative(), 0);
        let c = generator_cosets(5, 2).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].members(), &[1, 2, 3, 4]);
        let c = generator_cosets(8, 7).unwrap();
        let m: Vec<&[u64]> = c.iter().map(|x| x.members()).collect();
        assert_eq!(m, vec![&[1u64, 7][..], &[3, 5][..]]);
        assert_eq!(generator_cosets(6, 3), Err(Error::NotCoprime { n: 6, q: 3 }));
    }

    #[test]
    fn cosets_partition_units() {
        for n in 1..80u64 {
            for q in [2u64, 3, 5, 7, 11, 13, 25] {
                if gcd(n, q) != 1 {
                    continue;
                }
                let cs = generator_cosets(n, q).unwrap();
                let mut all: Vec<u64> = cs.iter().flat_map(|c| c.members().to_vec()).collect();
                all.sort_unstable();
                let units: Vec<u64> = if n == 1 { vec![0] } else { (1..n).filter(|&j| gcd(j, n) == 1).collect() };
                assert_eq!(all, units);
                let s = mult_order(n, q).unwrap() as usize;
                assert!(cs.iter().all(|c| c.members().len() == s));
                assert!(cs.windows(2).all(|w| w[0].representative() < w[1].representative()));
            }
        }
    }
}
