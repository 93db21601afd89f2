//! Closed-form enumeration for `G = ⟨a, b | a^n = 1, b^t = a^k, b^{-1} a b = a^r⟩`:
//! normal subgroups `H_{v,i,c} = ⟨a^v, a^i b^c⟩`, the core-free sections over
//! them, and the idempotents built from those, without a subgroup lattice.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::GroupAlgebra;
use crate::engine::{verify_decomposition, ComponentDescriptor, Decomposition, ShodaTriple, WedderburnSummary};
use crate::error::{Error, Result};
use crate::field::{divisors, gcd, mult_order, pow_mod, FieldTower};
use crate::group::{metacyclic_group, FiniteGroup, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MetacyclicParams {
    pub n: u64,
    pub t: u64,
    pub k: u64,
    pub r: u64,
}

impl MetacyclicParams {
    pub fn new(n: u64, t: u64, k: u64, r: u64) -> Result<Self> {
        if n == 0 || t == 0 {
            return Err(Error::BadPresentation("n and t must be positive".into()));
        }
        if pow_mod(r, t, n) != 1 % n {
            return Err(Error::BadPresentation(format!("r^t = {r}^{t} is not 1 mod {n}")));
        }
        if !((k % n) * ((r % n + n - 1) % n)).is_multiple_of(n) {
            return Err(Error::BadPresentation(format!("k(r-1) = {k}*({r}-1) is not 0 mod {n}")));
        }
        Ok(Self { n, t, k, r })
    }

    pub fn group(&self) -> Result<FiniteGroup> {
        metacyclic_group(self.n, self.t, self.k, self.r)
    }

    /// `o_v = ord_v(r)` for `v | n`.
    pub fn o_v(&self, v: u64) -> u64 {
        mult_order(v, self.r).expect("r is a unit modulo n")
    }

    /// `(r - 1) mod v`, as a non-negative residue.
    fn r_minus_one(&self, v: u64) -> u64 {
        (self.r % v + v - 1) % v
    }

    /// Element `a^i b^c` of the table built by [`MetacyclicParams::group`], for any `i, c >= 0`.
    pub fn element(&self, g: &FiniteGroup, i: u64, c: u64) -> usize {
        let a = (1 % self.n) as usize;
        let b = if self.t > 1 { self.n as usize } else { (self.k % self.n) as usize };
        g.mul(g.pow(a, i), g.pow(b, c))
    }

    /// `⟨a^v, a^i b^c⟩`.
    pub fn h(&self, g: &FiniteGroup, v: u64, i: u64, c: u64) -> Subgroup {
        Subgroup::generated(g, &[self.element(g, v, 0), self.element(g, i, c)])
    }

    /// `G_{o} = ⟨a, b^{o}⟩`.
    pub fn g_o(&self, g: &FiniteGroup, o: u64) -> Subgroup {
        Subgroup::generated(g, &[self.element(g, 1, 0), self.element(g, 0, o)])
    }

    /// Membership of `(w, i, c)` in `B_{o}`.
    pub fn in_b(&self, o: u64, w: u64, i: u64, c: u64) -> bool {
        let (n, t) = (self.n, self.t);
        w > 0
            && n % w == 0
            && (pow_mod(self.r, o, w) + w - 1).is_multiple_of(w)
            && o * c > 0
            && t % (o * c) == 0
            && (self.k + i * (t / (o * c))).is_multiple_of(w)
    }
}

/// `(v, i, c)` with `H_{v,i,c}` normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalTriple {
    pub v: u64,
    pub i: u64,
    pub c: u64,
}

/// `(v, alpha, beta)`: the section `H_{v,alpha,beta o_v}` of `G_{o_v}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XTriple {
    pub v: u64,
    pub alpha: u64,
    pub beta: u64,
}

/// All `(v, i, c)` with `v | n`, `c | t`, `0 <= i < v`, `v | k + i t/c`, `o_v | c`, `v | i(r-1)`.
pub fn normal_triples(p: &MetacyclicParams) -> Vec<NormalTriple> {
    let mut out = Vec::new();
    for v in divisors(p.n) {
        let ov = p.o_v(v);
        let rm1 = p.r_minus_one(v);
        for c in divisors(p.t) {
            if c % ov != 0 {
                continue;
            }
            for i in 0..v {
                if (p.k + i * (p.t / c)).is_multiple_of(v) && (i * rm1).is_multiple_of(v) {
                    out.push(NormalTriple { v, i, c });
                }
            }
        }
    }
    out.sort();
    out
}

/// `H_{v,i,c}` as a subgroup of `g`.
pub fn normal_subgroup(g: &FiniteGroup, p: &MetacyclicParams, nt: &NormalTriple) -> Subgroup {
    p.h(g, nt.v, nt.i, nt.c)
}

/// Every member of `X_{v,i,c}`, with `0 <= alpha < v`.
pub fn x_triples(p: &MetacyclicParams, nt: &NormalTriple) -> Vec<XTriple> {
    let NormalTriple { v, i, c } = *nt;
    let ov = p.o_v(v);
    let rm1 = p.r_minus_one(v);
    let mut out = Vec::new();
    for alpha in 0..v {
        let num = c * gcd(alpha * rm1 % v, v);
        if !num.is_multiple_of(v * ov) {
            continue;
        }
        let beta = num / (v * ov);
        if beta == 0 || c % (beta * ov) != 0 {
            continue;
        }
        if alpha * (c / (beta * ov)) % v != i % v {
            continue;
        }
        if gcd(gcd(v, alpha), beta) != 1 || !p.in_b(ov, v, alpha, beta) {
            continue;
        }
        out.push(XTriple { v, alpha, beta });
    }
    out
}

/// `(v, a1, b1) ~ (v, a2, b2)`: `b1 = b2` and `a1 = a2 r^j (mod v)` for some `j`.
pub fn x_equivalent(p: &MetacyclicParams, x: &XTriple, y: &XTriple) -> bool {
    if x.v != y.v || x.beta != y.beta {
        return false;
    }
    let v = x.v;
    let mut cur = y.alpha % v;
    for _ in 0..p.o_v(v) {
        if cur == x.alpha % v {
            return true;
        }
        cur = cur * (p.r % v) % v;
    }
    false
}

/// One representative (least `alpha`) per `~`-class of `X_{v,i,c}`.
pub fn x_classes(p: &MetacyclicParams, nt: &NormalTriple) -> Vec<XTriple> {
    let mut reps: Vec<XTriple> = Vec::new();
    for x in x_triples(p, nt) {
        if !reps.iter().any(|y| x_equivalent(p, y, &x)) {
            reps.push(x);
        }
    }
    reps
}

/// The subgroup `⟨a^u, a^{alpha delta/(beta o)} b^delta⟩` with
/// `delta = beta u o / gcd(alpha(r-1), u)`, returned as `(u, exponent, delta)`.
pub fn core_formula(p: &MetacyclicParams, o: u64, u: u64, alpha: u64, beta: u64) -> (u64, u64, u64) {
    let g = gcd(alpha * p.r_minus_one(u) % u, u);
    let delta = beta * u * o / g;
    (u, alpha * (delta / (beta * o)), delta)
}

/// The triples `(H_{v,i,c}, H_{v,alpha,beta o_v}, G_{o_v})`, sorted like the generic enumeration.
pub fn metacyclic_triples(g: &FiniteGroup, p: &MetacyclicParams) -> Vec<ShodaTriple> {
    let mut out: Vec<ShodaTriple> = normal_triples(p)
        .par_iter()
        .flat_map_iter(|nt| {
            let n = normal_subgroup(g, p, nt);
            let a = p.g_o(g, p.o_v(nt.v));
            x_classes(p, nt)
                .into_iter()
                .map(|x| ShodaTriple { n: n.clone(), d: p.h(g, x.v, x.alpha, x.beta * p.o_v(x.v)), a: a.clone() })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    out
}

/// The idempotents `e_C(G, G_{o_v}, H_{v,alpha,beta o_v})` over all normal
/// triples, `~`-classes and orbit representatives `C`.
pub fn metacyclic_decompose(p: &MetacyclicParams, field: &Arc<FieldTower>, verify: bool) -> Result<Decomposition> {
    let q = field.q();
    if gcd(q, p.n * p.t) != 1 {
        return Err(Error::NotSemisimple { q, order: (p.n * p.t) as usize });
    }
    let g = Arc::new(p.group()?);
    let ctx = GroupAlgebra::new(g.clone(), field.clone());
    let triples = metacyclic_triples(&g, p);
    let per: Vec<Vec<ComponentDescriptor>> =
        triples.par_iter().map(|t| crate::engine::triple_components(&ctx, t, None)).collect::<Result<_>>()?;
    let mut components: Vec<ComponentDescriptor> = per.into_iter().flatten().collect();
    components.sort_by(|x, y| (x.triple.sort_key(), &x.coset).cmp(&(y.triple.sort_key(), &y.coset)));
    let mut alpha: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for c in &components {
        *alpha.entry((c.d, c.l)).or_default() += 1;
    }
    let out = Decomposition { summary: WedderburnSummary::new(q, alpha), components };
    if verify {
        verify_decomposition(&ctx, &out)?;
    }
    Ok(out)
}
