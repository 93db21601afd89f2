//! Closed forms for the two families with `G/Z(G)` the Klein four-group:
//!
//! * `D1(m) = ⟨x, y, t | x^2, y^2, t^{2^m}, [y, x] t^{2^{m-1}}, t central⟩`
//! * `D2(m) = ⟨x, y | x^{2^{m+1}}, y^2 = x^2, y^{-1} x y = x^{2^m + 1}⟩`
//!
//! Both have order `2^{m+2}`. Everything here is transcribed from the
//! published case tables and is checked against the generic engine, never
//! adjusted to fit it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::GroupAlgebra;
use crate::engine::{decompose, AutTerm, DecomposeOptions, ShodaTriple, WedderburnSummary};
use crate::error::{Error, Result};
use crate::field::FieldTower;
use crate::group::{d1_group, d2_group, FiniteGroup, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    D1,
    D2,
}

impl Family {
    pub fn group(self, m: u32) -> FiniteGroup {
        match self {
            Family::D1 => d1_group(m),
            Family::D2 => d2_group(m),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::D1 => "d1",
            Family::D2 => "d2",
        })
    }
}

/// `q mod 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    OneMod4,
    MinusOneMod4,
}

/// `lambda` is the 2-adic valuation of `q - 1` or `q + 1`, by branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lambda {
    pub lambda: u32,
    pub branch: Branch,
}

pub fn lambda_of(q: u64) -> Result<Lambda> {
    if q.is_multiple_of(2) {
        return Err(Error::EvenQ(q));
    }
    Ok(if q % 4 == 1 {
        Lambda { lambda: (q - 1).trailing_zeros(), branch: Branch::OneMod4 }
    } else {
        Lambda { lambda: (q + 1).trailing_zeros(), branch: Branch::MinusOneMod4 }
    })
}

fn check_args(m: u32, q: u64) -> Result<Lambda> {
    let lam = lambda_of(q)?;
    if m < 2 {
        return Err(Error::OutOfRange(format!("closed forms need m >= 2, got {m}")));
    }
    if m > 40 {
        return Err(Error::OutOfRange(format!("m = {m} too large")));
    }
    Ok(lam)
}

fn p2(e: u32) -> u64 {
    1u64 << e
}

/// Accumulates `(d, l) -> alpha`; zero multiplicities vanish in the summary.
struct Alpha(BTreeMap<(u64, u64), u64>);

impl Alpha {
    fn new() -> Self {
        Alpha(BTreeMap::new())
    }

    fn add(&mut self, d: u64, l: u64, a: u64) -> &mut Self {
        *self.0.entry((d, l)).or_default() += a;
        self
    }

    fn build(&mut self, q: u64) -> WedderburnSummary {
        WedderburnSummary::new(q, std::mem::take(&mut self.0))
    }
}

/// Wedderburn decomposition of `F_q[D1(m)]`, `m >= 2`, `q` odd.
pub fn d1_closed_form(m: u32, q: u64) -> Result<WedderburnSummary> {
    let Lambda { lambda: lam, branch } = check_args(m, q)?;
    let mut a = Alpha::new();
    match branch {
        Branch::OneMod4 => {
            if m <= lam {
                a.add(1, 1, p2(m + 1)).add(2, 1, p2(m - 1));
            } else if m == lam + 1 {
                a.add(1, 1, p2(m + 1)).add(2, 2, p2(m - 2));
            } else {
                a.add(1, 1, p2(lam + 2));
                for al in lam + 1..=m - 1 {
                    a.add(1, p2(al - lam), p2(lam + 1));
                }
                a.add(2, p2(m - lam), p2(lam - 1));
            }
        }
        Branch::MinusOneMod4 => {
            if m <= lam + 1 {
                a.add(1, 1, 8).add(1, 2, p2(m) - 4).add(2, 2, p2(m - 2));
            } else if m == lam + 2 {
                a.add(1, 1, 8).add(1, 2, p2(m) - 4).add(2, 4, p2(m - 3));
            } else {
                a.add(1, 1, 8).add(1, 2, p2(lam + 2) - 4);
                for al in lam + 2..=m - 1 {
                    a.add(1, p2(al - lam), p2(lam + 1));
                }
                a.add(2, p2(m - lam), p2(lam - 1));
            }
        }
    }
    Ok(a.build(q))
}

/// Wedderburn decomposition of `F_q[D2(m)]`, `m >= 2`, `q` odd.
pub fn d2_closed_form(m: u32, q: u64) -> Result<WedderburnSummary> {
    let Lambda { lambda: lam, branch } = check_args(m, q)?;
    let mut a = Alpha::new();
    match branch {
        Branch::OneMod4 => {
            if m <= lam {
                a.add(1, 1, p2(m + 1)).add(2, 1, p2(m - 1));
            } else {
                a.add(1, 1, p2(lam + 1));
                for al in lam + 1..=m {
                    a.add(1, p2(al - lam), p2(lam));
                }
                a.add(2, p2(m - lam), p2(lam - 1));
            }
        }
        Branch::MinusOneMod4 => {
            if m <= lam + 1 {
                a.add(1, 1, 4).add(1, 2, p2(m) - 2).add(2, 2, p2(m - 2));
            } else {
                a.add(1, 1, 4).add(1, 2, p2(lam + 1) - 2);
                for al in lam + 2..=m {
                    a.add(1, p2(al - lam), p2(lam));
                }
                a.add(2, p2(m - lam), p2(lam - 1));
            }
        }
    }
    Ok(a.build(q))
}

pub fn closed_form(family: Family, m: u32, q: u64) -> Result<WedderburnSummary> {
    match family {
        Family::D1 => d1_closed_form(m, q),
        Family::D2 => d2_closed_form(m, q),
    }
}

fn sym(n: u64) -> AutTerm {
    AutTerm::Symmetric(n)
}

/// `Z_l^{(k)} ⋊ S_k`.
fn wreath_z(l: u64, k: u64) -> AutTerm {
    AutTerm::semidirect(AutTerm::power(AutTerm::Cyclic(l), k), sym(k))
}

/// `(SL_2(F_{q^l}) ⋊ Z_l)^{(k)} ⋊ S_k`.
fn wreath_sl(q: u64, l: u64, k: u64) -> AutTerm {
    let base = AutTerm::semidirect(AutTerm::sl(2, q, l), AutTerm::Cyclic(l));
    AutTerm::semidirect(AutTerm::power(base, k), sym(k))
}

/// `H_lambda = (SL_2(F_{q^{2^{m-lambda}}}) ⋊ Z_{2^{m-lambda}})^{(2^{lambda-1})} ⋊ S_{2^{lambda-1}}`.
fn h_lambda(q: u64, m: u32, lam: u32) -> AutTerm {
    wreath_sl(q, p2(m - lam), p2(lam - 1))
}

/// The automorphism-group term for `F_q[D1(m)]`, as displayed case by case.
pub fn d1_aut_closed_form(m: u32, q: u64) -> Result<AutTerm> {
    let Lambda { lambda: lam, branch } = check_args(m, q)?;
    let mut parts = Vec::new();
    match branch {
        Branch::OneMod4 => {
            if m <= lam {
                parts.push(sym(p2(m + 1)));
                parts.push(AutTerm::semidirect(AutTerm::power(AutTerm::sl(2, q, 1), p2(m - 1)), sym(p2(m - 1))));
            } else if m == lam + 1 {
                parts.push(sym(p2(m + 1)));
                parts.push(wreath_sl(q, 2, p2(m - 2)));
            } else {
                parts.push(sym(p2(lam + 2)));
                for al in lam + 1..=m - 1 {
                    parts.push(wreath_z(p2(al - lam), p2(lam + 1)));
                }
                parts.push(h_lambda(q, m, lam));
            }
        }
        Branch::MinusOneMod4 => {
            parts.push(sym(8));
            if m <= lam + 1 {
                parts.push(wreath_z(2, p2(m) - 4));
                parts.push(wreath_sl(q, 2, p2(m - 2)));
            } else if m == lam + 2 {
                parts.push(wreath_z(2, p2(m) - 4));
                parts.push(wreath_sl(q, 4, p2(m - 3)));
            } else {
                parts.push(wreath_z(2, p2(lam + 2) - 4));
                for al in lam + 2..=m - 1 {
                    parts.push(wreath_z(p2(al - lam), p2(lam + 1)));
                }
                parts.push(h_lambda(q, m, lam));
            }
        }
    }
    Ok(AutTerm::direct_sum(parts))
}

/// The automorphism-group term for `F_q[D2(m)]`, as displayed case by case.
pub fn d2_aut_closed_form(m: u32, q: u64) -> Result<AutTerm> {
    let Lambda { lambda: lam, branch } = check_args(m, q)?;
    let mut parts = Vec::new();
    match branch {
        Branch::OneMod4 => {
            if m <= lam {
                parts.push(sym(p2(m + 1)));
                parts.push(AutTerm::semidirect(AutTerm::power(AutTerm::sl(2, q, 1), p2(m - 1)), sym(p2(m - 1))));
            } else {
                parts.push(sym(p2(lam + 1)));
                for al in lam + 1..=m {
                    parts.push(wreath_z(p2(al - lam), p2(lam)));
                }
                parts.push(h_lambda(q, m, lam));
            }
        }
        Branch::MinusOneMod4 => {
            parts.push(sym(4));
            if m <= lam + 1 {
                parts.push(wreath_z(2, p2(m) - 2));
                parts.push(wreath_sl(q, 2, p2(m - 2)));
            } else {
                parts.push(wreath_z(2, p2(lam + 1) - 2));
                for al in lam + 2..=m {
                    parts.push(wreath_z(p2(al - lam), p2(lam)));
                }
                parts.push(h_lambda(q, m, lam));
            }
        }
    }
    Ok(AutTerm::direct_sum(parts))
}

pub fn aut_closed_form(family: Family, m: u32, q: u64) -> Result<AutTerm> {
    match family {
        Family::D1 => d1_aut_closed_form(m, q),
        Family::D2 => d2_aut_closed_form(m, q),
    }
}

/// Generators of `D1(m)` in the table built by [`d1_group`].
struct D1Elems<'a> {
    g: &'a FiniteGroup,
    m: u32,
}

impl D1Elems<'_> {
    /// `t^c x^e y^f`.
    fn w(&self, c: u64, e: usize, f: usize) -> usize {
        let tm = 1usize << self.m;
        (c as usize % tm) + tm * (e + 2 * f)
    }

    fn sub(&self, gens: &[usize]) -> Subgroup {
        Subgroup::generated(self.g, gens)
    }
}

/// The non-identity normal subgroups of `D1(m)`, `m >= 2`, listed family by
/// family: `⟨t^{2^a}, x⟩, ⟨t^{2^a}, y⟩, ⟨t^{2^a}, xy⟩, ⟨t^{2^a}, x, y⟩`;
/// `⟨t^{2^b} x⟩, ⟨t^{2^b} y⟩, ⟨t^{2^{m-1}}, t^{2^b} xy⟩, ⟨t^{2^{m-1}}, x, t^{2^b} y⟩,
/// ⟨t^{2^{m-1}}, t^{2^b} x, y⟩, ⟨t^{2^b} x, t^{2^b} y⟩`; `⟨t^{2^c}⟩`,
/// with `0 <= a, c <= m-1` and `0 <= b <= m-2`. In list order, not sorted.
pub fn d1_normal_subgroup_list(m: u32) -> Result<Vec<Subgroup>> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("the list needs m >= 2, got {m}")));
    }
    let g = d1_group(m);
    let e = D1Elems { g: &g, m };
    let top = p2(m - 1);
    let mut out = Vec::new();
    for a in 0..m {
        let t = e.w(p2(a), 0, 0);
        out.push(e.sub(&[t, e.w(0, 1, 0)]));
        out.push(e.sub(&[t, e.w(0, 0, 1)]));
        out.push(e.sub(&[t, e.w(0, 1, 1)]));
        out.push(e.sub(&[t, e.w(0, 1, 0), e.w(0, 0, 1)]));
    }
    for b in 0..m - 1 {
        let c = p2(b);
        out.push(e.sub(&[e.w(c, 1, 0)]));
        out.push(e.sub(&[e.w(c, 0, 1)]));
        out.push(e.sub(&[e.w(top, 0, 0), e.w(c, 1, 1)]));
        out.push(e.sub(&[e.w(top, 0, 0), e.w(0, 1, 0), e.w(c, 0, 1)]));
        out.push(e.sub(&[e.w(top, 0, 0), e.w(c, 1, 0), e.w(0, 0, 1)]));
        out.push(e.sub(&[e.w(c, 1, 0), e.w(c, 0, 1)]));
    }
    for c in 0..m {
        out.push(e.sub(&[e.w(p2(c), 0, 0)]));
    }
    let mut sorted = out.clone();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::AssertionFailure {
            invariant: "listed normal subgroups are distinct".into(),
            witness: format!("{:?}", w[0].members()),
        });
    }
    if let Some(h) = out.iter().find(|h| !h.is_normal(&g)) {
        return Err(Error::AssertionFailure {
            invariant: "listed subgroups are normal".into(),
            witness: format!("{:?}", h.members()),
        });
    }
    Ok(out)
}

/// One row of the published per-triple tables: the triple, `d = [G : A]`,
/// `l = o(A, D)` and `|R(A/D)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub triple: ShodaTriple,
    pub d: u64,
    pub l: u64,
    pub count: u64,
}

/// `2^{e - lam}` when `e >= threshold`, else `below`.
fn piece(e: u32, threshold: u32, lam: u32, below: u64) -> u64 {
    if e >= threshold {
        p2(e - lam)
    } else {
        below
    }
}

fn row(label: String, g: &FiniteGroup, n: Subgroup, d: Subgroup, a: Subgroup, (l, count): (u64, u64)) -> TableRow {
    let index = (g.order() / a.order()) as u64;
    TableRow { label, triple: ShodaTriple { n, d, a }, d: index, l, count }
}

/// The triples of `D1(m)` with their `(o(A, D), |R(A/D)|)` as tabulated.
pub fn d1_table(m: u32, q: u64) -> Result<Vec<TableRow>> {
    let Lambda { lambda: lam, branch } = check_args(m, q)?;
    let g = d1_group(m);
    let e = D1Elems { g: &g, m };
    let whole = g.whole();
    let top = p2(m - 1);
    let x = e.w(0, 1, 0);
    let y = e.w(0, 0, 1);
    let t = e.w(1, 0, 0);
    let mut rows = Vec::new();
    let quotient_row = |label: String, n: Subgroup, lr: (u64, u64)| row(label, &g, n.clone(), n, whole.clone(), lr);

    let n1 = e.sub(&[t, x]);
    rows.push(quotient_row("N1".into(), n1.clone(), (1, 1)));
    rows.push(quotient_row("N2".into(), e.sub(&[t, y]), (1, 1)));
    rows.push(quotient_row("N3".into(), e.sub(&[t, e.w(0, 1, 1)]), (1, 1)));
    for al in 0..m {
        let lr = match branch {
            Branch::OneMod4 if al == 0 => (1, 1),
            Branch::OneMod4 => (piece(al, lam + 1, lam, 1), if al > lam { p2(lam - 1) } else { p2(al - 1) }),
            Branch::MinusOneMod4 if al <= 1 => (1, 1),
            Branch::MinusOneMod4 => (piece(al, lam + 2, lam, 2), if al >= lam + 2 { p2(lam - 1) } else { p2(al - 2) }),
        };
        rows.push(quotient_row(format!("N4({al})"), e.sub(&[e.w(p2(al), 0, 0), x, y]), lr));
    }
    for be in 0..m - 1 {
        let c = p2(be);
        let lr = match branch {
            Branch::OneMod4 => (piece(be + 1, lam + 1, lam, 1), if be >= lam { p2(lam - 1) } else { p2(be) }),
            Branch::MinusOneMod4 if be == 0 => (1, 1),
            Branch::MinusOneMod4 => (piece(be + 1, lam + 2, lam, 2), if be > lam { p2(lam - 1) } else { p2(be - 1) }),
        };
        rows.push(quotient_row(format!("N5({be})"), e.sub(&[e.w(top, 0, 0), x, e.w(c, 0, 1)]), lr));
        rows.push(quotient_row(format!("N6({be})"), e.sub(&[e.w(top, 0, 0), e.w(c, 1, 0), y]), lr));
        rows.push(quotient_row(format!("N7({be})"), e.sub(&[e.w(c, 1, 0), e.w(c, 0, 1)]), lr));
    }
    let lr = match branch {
        Branch::OneMod4 => (piece(m, lam + 1, lam, 1), if m > lam { p2(lam - 1) } else { p2(m - 1) }),
        Branch::MinusOneMod4 => (piece(m, lam + 1, lam, 2), if m >= lam + 2 { p2(lam - 1) } else { p2(m - 2) }),
    };
    rows.push(row("N0".into(), &g, g.trivial(), e.sub(&[x]), n1, lr));
    Ok(rows)
}

/// The triples of `D2(m)` with their `(o(A, D), |R(A/D)|)` as tabulated.
pub fn d2_table(m: u32, q: u64) -> Result<Vec<TableRow>> {
    let Lambda { lambda: lam, branch } = check_args(m, q)?;
    let g = d2_group(m);
    let n = p2(m + 1);
    // x^i y^j has index i + n j.
    let w = |i: u64, j: u64| ((i % n) + n * j) as usize;
    let sub = |gens: &[usize]| Subgroup::generated(&g, gens);
    let whole = g.whole();
    let mut rows = Vec::new();
    let quotient_row = |label: String, k: Subgroup, lr: (u64, u64)| row(label, &g, k.clone(), k, whole.clone(), lr);

    let k1 = sub(&[w(1, 0)]);
    rows.push(quotient_row("K1".into(), k1.clone(), (1, 1)));
    let graded = |e: u32, first_special: u32| -> (u64, u64) {
        match branch {
            Branch::OneMod4 if e == 0 => (1, 1),
            Branch::OneMod4 => (piece(e, lam + 1, lam, 1), if e > lam { p2(lam - 1) } else { p2(e - 1) }),
            Branch::MinusOneMod4 if e <= first_special => (1, 1),
            Branch::MinusOneMod4 => (piece(e, lam + 2, lam, 2), if e >= lam + 2 { p2(lam - 1) } else { p2(e - 2) }),
        }
    };
    for al in 0..=m {
        let k2 = sub(&[w(p2(al), 0), w(p2(al) - 1, 1)]);
        rows.push(quotient_row(format!("K2({al})"), k2, graded(al, 1)));
    }
    for be in 1..=m {
        let k3 = sub(&[w(p2(be), 0), w(p2(be - 1) + n - 1, 1)]);
        rows.push(quotient_row(format!("K3({be})"), k3, graded(be, 1)));
    }
    let lr = match branch {
        Branch::OneMod4 => (piece(m, lam + 1, lam, 1), if m > lam { p2(lam - 1) } else { p2(m - 1) }),
        Branch::MinusOneMod4 => (piece(m, lam + 2, lam, 2), if m >= lam + 2 { p2(lam - 1) } else { p2(m - 2) }),
    };
    rows.push(row("K0".into(), &g, g.trivial(), g.trivial(), k1, lr));
    Ok(rows)
}

pub fn family_table(family: Family, m: u32, q: u64) -> Result<Vec<TableRow>> {
    match family {
        Family::D1 => d1_table(m, q),
        Family::D2 => d2_table(m, q),
    }
}

/// Closed form against the generic engine for one `(family, m, q)`.
#[derive(Debug, Clone)]
pub struct FamilyCheck {
    pub family: Family,
    pub m: u32,
    pub q: u64,
    pub closed: WedderburnSummary,
    pub engine: WedderburnSummary,
    pub aut_closed: AutTerm,
    pub aut_engine: AutTerm,
}

impl FamilyCheck {
    pub fn order(&self) -> u64 {
        p2(self.m + 2)
    }

    pub fn summary_matches(&self) -> bool {
        self.closed == self.engine
    }

    pub fn aut_matches(&self) -> bool {
        self.aut_closed == self.aut_engine
    }

    pub fn closed_dimension_ok(&self) -> bool {
        self.closed.total_dimension() == self.order()
    }

    pub fn is_consistent(&self) -> bool {
        self.summary_matches() && self.aut_matches() && self.closed_dimension_ok()
    }
}

/// Runs the closed forms and the engine over a prime field `F_q`.
pub fn check_family(family: Family, m: u32, q: u64, opts: DecomposeOptions) -> Result<FamilyCheck> {
    let closed = closed_form(family, m, q)?;
    let aut_closed = aut_closed_form(family, m, q)?;
    let field = Arc::new(FieldTower::new(q, 1)?);
    let ctx = GroupAlgebra::new(Arc::new(family.group(m)), field);
    let engine = decompose(&ctx, opts)?.summary;
    let aut_engine = engine.aut();
    Ok(FamilyCheck { family, m, q, closed, engine, aut_closed, aut_engine })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(s: &WedderburnSummary) -> Vec<((u64, u64), u64)> {
        s.components.iter().map(|(&k, &v)| (k, v)).collect()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_of(5).unwrap(), Lambda { lambda: 2, branch: Branch::OneMod4 });
        assert_eq!(lambda_of(3).unwrap(), Lambda { lambda: 2, branch: Branch::MinusOneMod4 });
        assert_eq!(lambda_of(7).unwrap(), Lambda { lambda: 3, branch: Branch::MinusOneMod4 });
        assert_eq!(lambda_of(17).unwrap(), Lambda { lambda: 4, branch: Branch::OneMod4 });
        assert_eq!(lambda_of(4), Err(Error::EvenQ(4)));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(map(&d1_closed_form(2, 5).unwrap()), vec![((1, 1), 8), ((2, 1), 2)]);
        assert_eq!(map(&d2_closed_form(2, 3).unwrap()), vec![((1, 1), 4), ((1, 2), 2), ((2, 2), 1)]);
        assert_eq!(map(&d1_closed_form(4, 5).unwrap()), vec![((1, 1), 16), ((1, 2), 8), ((2, 4), 2)]);
        assert!(matches!(d1_closed_form(1, 5), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn closed_forms_satisfy_the_dimension_identity() {
        for m in 2..12 {
            for q in [3u64, 5, 7, 9, 13, 17, 25, 31, 97, 127, 257] {
                assert_eq!(d1_closed_form(m, q).unwrap().total_dimension(), p2(m + 2), "d1 m={m} q={q}");
                assert_eq!(d2_closed_form(m, q).unwrap().total_dimension(), p2(m + 2), "d2 m={m} q={q}");
            }
        }
    }

    #[test]
    fn aut_examples() {
        assert_eq!(d1_aut_closed_form(2, 5).unwrap().to_string(), "S_8 ⊕ (SL_2(F_5)^(2) ⋊ S_2)");
        let expected = AutTerm::direct_sum(vec![
            sym(4),
            wreath_z(2, 2),
            AutTerm::semidirect(AutTerm::sl(2, 3, 2), AutTerm::Cyclic(2)),
        ]);
        assert_eq!(d2_aut_closed_form(2, 3).unwrap(), expected);
    }

    #[test]
    fn aut_closed_form_agrees_with_summary_form() {
        for m in 2..10 {
            for q in [3u64, 5, 7, 13, 17, 31] {
                assert_eq!(d1_aut_closed_form(m, q).unwrap(), d1_closed_form(m, q).unwrap().aut(), "d1 {m} {q}");
                assert_eq!(d2_aut_closed_form(m, q).unwrap(), d2_closed_form(m, q).unwrap().aut(), "d2 {m} {q}");
            }
        }
    }

    #[test]
    fn d1_list_small() {
        let list = d1_normal_subgroup_list(2).unwrap();
        assert_eq!(list.len(), 16);
        let g = d1_group(2);
        let mut brute = g.normal_subgroups(512).unwrap();
        brute.retain(|h| h.order() > 1);
        let mut ours = list;
        ours.sort();
        assert_eq!(ours, brute);
    }
}
