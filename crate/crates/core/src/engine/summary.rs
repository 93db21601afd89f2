use std::collections::BTreeMap;
use std::fmt;

/// Symbolic automorphism-group terms. Only the shape is represented; nothing
/// is constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AutTerm {
    Trivial,
    /// `SL_d(F_{q^l})`.
    SpecialLinear {
        d: u64,
        q: u64,
        l: u64,
    },
    /// `Z_l`.
    Cyclic(u64),
    /// `S_n`.
    Symmetric(u64),
    /// `X^{(k)}`, the direct product of `k` copies.
    Power(Box<AutTerm>, u64),
    /// `X ⋊ Y`.
    Semidirect(Box<AutTerm>, Box<AutTerm>),
    DirectSum(Vec<AutTerm>),
}

impl AutTerm {
    pub fn sl(d: u64, q: u64, l: u64) -> Self {
        AutTerm::SpecialLinear { d, q, l }.canonical()
    }

    pub fn power(x: AutTerm, k: u64) -> Self {
        AutTerm::Power(Box::new(x), k).canonical()
    }

    pub fn semidirect(x: AutTerm, y: AutTerm) -> Self {
        AutTerm::Semidirect(Box::new(x), Box::new(y)).canonical()
    }

    pub fn direct_sum(xs: Vec<AutTerm>) -> Self {
        AutTerm::DirectSum(xs).canonical()
    }

    /// `((SL_d(F_{q^l}) ⋊ Z_l)^{(alpha)}) ⋊ S_alpha`.
    pub fn component(d: u64, q: u64, l: u64, alpha: u64) -> Self {
        let k = AutTerm::semidirect(AutTerm::sl(d, q, l), AutTerm::Cyclic(l));
        AutTerm::semidirect(AutTerm::power(k, alpha), AutTerm::Symmetric(alpha))
    }

    /// Normal form: trivial factors removed, sums flattened and sorted.
    ///
    /// `SL_1`, `Z_1`, `S_1` and `S_0` are trivial; `X ⋊ 1 = 1 ⋊ X = X`;
    /// `X^{(1)} = X`; `1^{(k)} = 1`.
    pub fn canonical(self) -> Self {
        match self {
            AutTerm::SpecialLinear { d, .. } if d <= 1 => AutTerm::Trivial,
            AutTerm::Cyclic(l) if l <= 1 => AutTerm::Trivial,
            AutTerm::Symmetric(n) if n <= 1 => AutTerm::Trivial,
            AutTerm::Power(x, k) => {
                let x = x.canonical();
                if x == AutTerm::Trivial || k == 0 {
                    AutTerm::Trivial
                } else if k == 1 {
                    x
                } else {
                    AutTerm::Power(Box::new(x), k)
                }
            }
            AutTerm::Semidirect(x, y) => match (x.canonical(), y.canonical()) {
                (AutTerm::Trivial, y) => y,
                (x, AutTerm::Trivial) => x,
                (x, y) => AutTerm::Semidirect(Box::new(x), Box::new(y)),
            },
            AutTerm::DirectSum(xs) => {
                let mut flat = Vec::new();
                for x in xs {
                    match x.canonical() {
                        AutTerm::Trivial => {}
                        AutTerm::DirectSum(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                flat.sort();
                match flat.len() {
                    0 => AutTerm::Trivial,
                    1 => flat.pop().unwrap(),
                    _ => AutTerm::DirectSum(flat),
                }
            }
            other => other,
        }
    }

    fn is_atomic(&self) -> bool {
        !matches!(self, AutTerm::Power(..) | AutTerm::Semidirect(..) | AutTerm::DirectSum(..))
    }
}

fn field_size(q: u64, l: u64) -> String {
    match u32::try_from(l).ok().and_then(|l| q.checked_pow(l)) {
        Some(v) => v.to_string(),
        None => format!("{q}^{l}"),
    }
}

impl fmt::Display for AutTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |x: &AutTerm| if x.is_atomic() { x.to_string() } else { format!("({x})") };
        match self {
            AutTerm::Trivial => write!(f, "1"),
            AutTerm::SpecialLinear { d, q, l } => write!(f, "SL_{d}(F_{})", field_size(*q, *l)),
            AutTerm::Cyclic(l) => write!(f, "Z_{l}"),
            AutTerm::Symmetric(n) => write!(f, "S_{n}"),
            AutTerm::Power(x, k) => write!(f, "{}^({k})", wrap(x)),
            AutTerm::Semidirect(x, y) => {
                let left = if matches!(**x, AutTerm::DirectSum(_)) { format!("({x})") } else { x.to_string() };
                write!(f, "{left} ⋊ {}", wrap(y))
            }
            AutTerm::DirectSum(xs) => {
                let parts: Vec<String> = xs.iter().map(wrap).collect();
                write!(f, "{}", parts.join(" ⊕ "))
            }
        }
    }
}

/// `F_q[G] ≅ ⊕ M_d(F_{q^l})^{(alpha_{d,l})}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnSummary {
    pub q: u64,
    /// `(d, l) -> alpha_{d,l}`.
    pub components: BTreeMap<(u64, u64), u64>,
}

impl WedderburnSummary {
    pub fn new(q: u64, components: BTreeMap<(u64, u64), u64>) -> Self {
        let components = components.into_iter().filter(|&(_, a)| a > 0).collect();
        Self { q, components }
    }

    /// `sum alpha d^2 l`.
    pub fn total_dimension(&self) -> u64 {
        self.components.iter().map(|(&(d, l), &a)| a * d * d * l).sum()
    }

    pub fn component_count(&self) -> u64 {
        self.components.values().sum()
    }

    pub fn aut(&self) -> AutTerm {
        aut_description(self)
    }

    /// `F_5^(8) ⊕ M_2(F_5)^(2)` style rendering.
    pub fn display(&self) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(&(d, l), &a)| {
                let field = format!("F_{}", field_size(self.q, l));
                let base = if d == 1 { field } else { format!("M_{d}({field})") };
                if a == 1 {
                    base
                } else {
                    format!("{base}^({a})")
                }
            })
            .collect();
        parts.join(" ⊕ ")
    }
}

/// `⊕_{d,l} (SL_d(F_{q^l}) ⋊ Z_l)^{(alpha_{d,l})} ⋊ S_{alpha_{d,l}}`, canonicalized.
pub fn aut_description(summary: &WedderburnSummary) -> AutTerm {
    AutTerm::direct_sum(summary.components.iter().map(|(&(d, l), &a)| AutTerm::component(d, summary.q, l, a)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(q: u64, xs: &[((u64, u64), u64)]) -> WedderburnSummary {
        WedderburnSummary::new(q, xs.iter().copied().collect())
    }

    #[test]
    fn aut_examples() {
        assert_eq!(aut_description(&summary(5, &[((1, 1), 6)])), AutTerm::Symmetric(6));
        assert_eq!(aut_description(&summary(7, &[((2, 1), 1)])), AutTerm::sl(2, 7, 1));
        let s = summary(5, &[((1, 1), 8), ((2, 1), 2)]);
        assert_eq!(s.aut().to_string(), "S_8 ⊕ (SL_2(F_5)^(2) ⋊ S_2)");
        let s = summary(3, &[((1, 1), 4), ((1, 2), 2), ((2, 2), 1)]);
        // Summands are sorted structurally, not in display order.
        assert_eq!(s.aut().to_string(), "S_4 ⊕ (SL_2(F_9) ⋊ Z_2) ⊕ (Z_2^(2) ⋊ S_2)");
        assert_eq!(s.display(), "F_3^(4) ⊕ F_9^(2) ⊕ M_2(F_9)");
        assert_eq!(s.total_dimension(), 16);
        assert_eq!(aut_description(&summary(3, &[((1, 1), 1)])), AutTerm::Trivial);
    }

    #[test]
    fn canonical_form_is_idempotent_and_order_free() {
        let a = AutTerm::direct_sum(vec![AutTerm::Symmetric(3), AutTerm::Cyclic(2)]);
        let b = AutTerm::direct_sum(vec![
            AutTerm::Cyclic(2),
            AutTerm::Trivial,
            AutTerm::DirectSum(vec![AutTerm::Symmetric(3), AutTerm::Symmetric(1)]),
        ]);
        assert_eq!(a, b);
        assert_eq!(a.clone().canonical(), a);
        assert_eq!(AutTerm::power(AutTerm::Cyclic(5), 1), AutTerm::Cyclic(5));
        assert_eq!(AutTerm::semidirect(AutTerm::Trivial, AutTerm::Symmetric(2)), AutTerm::Symmetric(2));
        assert_eq!(field_size(13, 40), "13^40");
    }
}
