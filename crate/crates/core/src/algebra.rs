//! Dense elements of the group algebra `F_q[G]`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{BaseField, FieldTower, Fq};
use crate::group::FiniteGroup;
use crate::linalg;

/// The pair `(G, F_q)` shared by all elements of one algebra.
#[derive(Debug)]
pub struct GroupAlgebra {
    group: Arc<FiniteGroup>,
    field: Arc<FieldTower>,
}

impl GroupAlgebra {
    pub fn new(group: Arc<FiniteGroup>, field: Arc<FieldTower>) -> Arc<Self> {
        Arc::new(Self { group, field })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn field(&self) -> &Arc<FieldTower> {
        &self.field
    }

    pub fn base(&self) -> &BaseField {
        self.field.base()
    }

    pub fn is_semisimple(&self) -> bool {
        crate::field::gcd(self.field.q(), self.group.order() as u64) == 1
    }
}

/// An element `sum_g c_g g`, coefficients indexed by element index.
///
/// Equality, hashing and ordering look at the coefficients only; mixing
/// elements of different algebras in arithmetic is an error.
#[derive(Clone)]
pub struct AlgebraElement {
    ctx: Arc<GroupAlgebra>,
    coeffs: Vec<Fq>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

impl Hash for AlgebraElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for AlgebraElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficient-lex order, element index 0 most significant.
impl Ord for AlgebraElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(c)*label` terms in element-index order joined by ` + `, or `0`.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = self.ctx.base();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, &c)| format!("{}*{}", base.format(c), self.ctx.group.label(g)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl AlgebraElement {
    pub fn zero(ctx: &Arc<GroupAlgebra>) -> Self {
        Self { ctx: ctx.clone(), coeffs: vec![Fq::ZERO; ctx.group.order()] }
    }

    pub fn one(ctx: &Arc<GroupAlgebra>) -> Self {
        Self::basis(ctx, 0)
    }

    pub fn basis(ctx: &Arc<GroupAlgebra>, g: usize) -> Self {
        let mut x = Self::zero(ctx);
        x.coeffs[g] = Fq::ONE;
        x
    }

    pub fn from_coeffs(ctx: &Arc<GroupAlgebra>, coeffs: Vec<Fq>) -> Result<Self> {
        if coeffs.len() != ctx.group.order() {
            return Err(Error::OutOfRange(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                ctx.group.order()
            )));
        }
        if coeffs.iter().any(|c| c.code() as u64 >= ctx.field.q()) {
            return Err(Error::OutOfRange("coefficient outside F_q".into()));
        }
        Ok(Self { ctx: ctx.clone(), coeffs })
    }

    /// Sum of the given elements with coefficient one.
    pub fn indicator(ctx: &Arc<GroupAlgebra>, elements: &[usize]) -> Self {
        let mut x = Self::zero(ctx);
        for &g in elements {
            x.coeffs[g] = ctx.base().add(x.coeffs[g], Fq::ONE);
        }
        x
    }

    pub fn ctx(&self) -> &Arc<GroupAlgebra> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> Fq {
        self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&g| !self.coeffs[g].is_zero()).collect()
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::MixedContext)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let f = self.ctx.base();
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Self { ctx: self.ctx.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let f = self.ctx.base();
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(Self { ctx: self.ctx.clone(), coeffs })
    }

    pub fn scale(&self, c: Fq) -> Self {
        let f = self.ctx.base();
        Self { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect() }
    }

    pub fn neg(&self) -> Self {
        let f = self.ctx.base();
        Self { ctx: self.ctx.clone(), coeffs: self.coeffs.iter().map(|&a| f.neg(a)).collect() }
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let g = &self.ctx.group;
        let f = self.ctx.base();
        let n = g.order();
        let right: Vec<(usize, Fq)> = other.coeffs.iter().copied().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let coeffs = if f.degree() == 1 {
            let p = f.p();
            let mut acc = vec![0u64; n];
            for (a, &x) in self.coeffs.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let x = x.code() as u64;
                for &(b, y) in &right {
                    let k = g.mul(a, b);
                    acc[k] = (acc[k] + x * y.code() as u64) % p;
                }
            }
            acc.into_iter().map(|v| f.from_int(v as i64)).collect()
        } else {
            let mut out = vec![Fq::ZERO; n];
            for (a, &x) in self.coeffs.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for &(b, y) in &right {
                    let k = g.mul(a, b);
                    out[k] = f.add(out[k], f.mul(x, y));
                }
            }
            out
        };
        Ok(Self { ctx: self.ctx.clone(), coeffs })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.ctx);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).expect("same context");
            }
            b = b.mul(&b).expect("same context");
            e >>= 1;
        }
        acc
    }

    /// Linear extension of `h -> g^{-1} h g`.
    pub fn conjugate(&self, g: usize) -> Self {
        let grp = &self.ctx.group;
        let mut coeffs = vec![Fq::ZERO; grp.order()];
        for (h, &c) in self.coeffs.iter().enumerate() {
            coeffs[grp.conj(h, g)] = c;
        }
        Self { ctx: self.ctx.clone(), coeffs }
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).expect("same context") == *self
    }

    /// Central iff fixed by conjugation with each generator of `G`.
    pub fn is_central(&self) -> bool {
        self.ctx.group.generators().into_iter().all(|g| self.conjugate(g) == *self)
    }

    /// `xy = yx = 0`.
    pub fn are_orthogonal(&self, other: &Self) -> Result<bool> {
        Ok(self.mul(other)?.is_zero() && other.mul(self)?.is_zero())
    }

    /// `dim_{F_q} F_q[G] e`: rank of `x -> x e` on the regular representation.
    pub fn left_ideal_dimension(&self) -> usize {
        let n = self.ctx.group.order();
        let rows: Vec<Vec<Fq>> =
            (0..n).map(|g| Self::basis(&self.ctx, g).mul(self).expect("same context").coeffs).collect();
        linalg::rank(self.ctx.base(), &rows)
    }
}
