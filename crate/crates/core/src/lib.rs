//! Exact computations with finite-dimensional Hopf algebras, their smash and
//! crossed products, and the bialgebroids built on them.
//!
//! Everything is given by structure constants over the rationals or a prime
//! field. Every algebraic identity is checked exactly on a basis; checkers
//! return a [`CheckReport`] carrying witness index tuples instead of a bare
//! boolean.

pub mod actions;
pub mod algebra;
pub mod bialgebroid;
pub mod catalog;
pub mod definition;
pub mod error;
pub mod linalg;
pub mod products;
pub mod report;
pub mod scalar;
pub mod universal;
pub mod verify;

pub use error::{Error, Result};
pub use report::{CheckReport, Status};
pub use scalar::{FieldSpec, Scalar};
