use thiserror::Error;

/// Errors raised by the field, group, algebra and decomposition layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u64, q: u64 },

    #[error("field size {q} is not coprime to the group order {order}; the group algebra is not semisimple")]
    NotSemisimple { q: u64, order: usize },

    #[error("group is not metabelian (second derived subgroup has order {second_derived_order})")]
    NotMetabelian { second_derived_order: usize },

    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("element 0 is not a two-sided identity (witness element {witness})")]
    NoIdentity { witness: usize },

    #[error("element {element} has no inverse")]
    NoInverse { element: usize },

    #[error("invalid multiplication table: {0}")]
    BadTable(String),

    #[error("inconsistent presentation: {0}")]
    BadPresentation(String),

    #[error("group order {order} exceeds the subgroup enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("quotient {k_order}/{h_order} is not cyclic")]
    NotCyclicQuotient { k_order: usize, h_order: usize },

    #[error("algebra elements belong to different group algebras")]
    MixedContext,

    #[error("q = {0} is even; the closed forms need odd q")]
    EvenQ(u64),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("invariant `{invariant}` violated: {witness}")]
    AssertionFailure { invariant: String, witness: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
