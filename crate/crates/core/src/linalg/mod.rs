//! Exact integer and rational matrices: products, determinants, Smith normal
//! form, row reduction and kernels.

mod integer;
mod rational;
mod snf;

pub use integer::IntegerMatrix;
pub use rational::{nullspace, rank, RationalMatrix, RowReducer, Vector};
pub use snf::{smith_normal_form, SnfResult, MAX_SNF_DIM};
