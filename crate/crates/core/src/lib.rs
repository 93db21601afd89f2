pub mod algebra;
pub mod engine;
pub mod error;
pub mod families;
pub mod field;
pub mod group;
pub mod linalg;
pub mod metacyclic;
pub mod oracle;
pub mod report;

pub use algebra::{AlgebraElement, GroupAlgebra};
pub use error::{Error, Result};
