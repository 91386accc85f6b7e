//! Frobenius n-homomorphisms, n-transfers and n-branched coverings on
//! finite and exact models.
//!
//! Everything is verified by direct computation: exact rational arithmetic
//! for the finite models, complex arithmetic with an explicit tolerance for
//! polynomial coverings of the plane.

pub mod algebra;
pub mod coverings;
pub mod error;
pub mod frobenius;
pub mod io;
pub mod linalg;
pub mod multiset;
pub mod partitions;
pub mod poly;
pub mod polyroots;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod suite;
pub mod sweep;
pub mod symbolic;
pub mod sympow;
pub mod transfer;

pub use algebra::{AlgebraElement, AlgebraOps, AlgebraRef, CommutativeAlgebra, LinearMap};
pub use error::{Error, Result};
pub use scalar::{Backend, Scalar};
