//! Exact computations on finite-dimensional commutative algebras over the
//! rationals.

pub mod analysis;
pub mod artin;
pub mod criteria;
pub mod error;
pub mod groebner;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod singular;

pub use error::{Error, ErrorCategory, Result};
pub use linalg::{Matrix, Rational, Subspace};
pub use poly::{Monomial, MonomialOrder, OrderKind, Polynomial, VarSet};
