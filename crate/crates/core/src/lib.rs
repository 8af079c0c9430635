//! Exact computation in symbol algebras of degree 3 over the cyclotomic field `Q(w)`.

pub mod algebra;
pub mod error;
pub mod fibonacci;
pub mod field;
pub mod fixtures;
pub mod forms;
pub mod json;
pub mod linalg;
pub mod repr;
pub mod sampling;
pub mod solver;
pub mod verify;

pub use algebra::{AlgebraParams, Exponent, SymbolElement};
pub use error::{Error, Result};
pub use field::CycQ;
pub use forms::CharData;
pub use repr::{MatK, VecK};
