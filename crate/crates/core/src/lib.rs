//! Exact Kazhdan-Lusztig combinatorics for symmetric groups.
//!
//! The crate computes KL polynomials, the Hecke algebra in its standard and
//! canonical bases, Kazhdan-Lusztig cells, the Grothendieck-group action of
//! projective functors on simple modules in the principal block of category
//! `O` for `sl_n`, and a reduction pipeline that sorts pairs `(x, y)` by the
//! argument needed to show that `theta_x L(y)` is indecomposable or zero.

pub mod cache;
pub mod cells;
pub mod characters;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod kl;
pub mod laurent;
pub mod pipeline;

pub use coxeter::{GenSet, GeneratorWord, Partition, Permutation, Side, SymmetricGroup};
pub use error::{Error, Result};
pub use hecke::{Basis, HeckeAlgebra, HeckeElement};
pub use kl::KLTable;
pub use laurent::LaurentPolynomial;
