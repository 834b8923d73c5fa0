//! Exact computations on multidimensional convolutional codes over prime
//! fields: minimal reduced polynomial resolutions, Forney tables, Hilbert
//! functions, predictable-degree and reducedness tests, and observability.

pub mod complexes;
pub mod error;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod module;
pub mod observability;
pub mod oracle;
pub mod parse;
pub mod poly;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use module::{twisted_degree, ModElem, PolyMatrix, TwistFunction};
pub use poly::{Degree, Monomial, Poly, Ring, RingKind};
