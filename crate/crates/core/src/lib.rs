//! Exact computations around the rigid local systems attached to the groups
//! `Γ_r = Λ_r ⋊ S_{r+1}`: symmetric-group character theory, integral models of
//! the standard representation, finite quotients of `Γ_r` and their
//! irreducibles, and first cohomology computed by two independent routes.
//!
//! Everything is exact: integers are arbitrary precision, linear algebra runs
//! over `Q`, and character values of finite groups live in cyclotomic fields.

pub mod chartab;
pub mod cohomology;
pub mod cyclotomic;
pub mod error;
pub mod intrep;
pub mod linalg;
pub mod registry;
pub mod report;
pub mod semidirect;
pub mod symgroup;

pub use error::{Error, Result};
