use num_bigint::BigInt;
use num_traits::One;

use super::rep::IntegerRep;
use super::standard_rep;
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, IntegerMatrix, SnfResult};
use crate::symgroup::Permutation;

/// `ρ(σ)` for `σ = (1 2 … n) = s_1 s_2 ⋯ s_{n-1}` equals the matrix with first
/// row all `-1`, identity on the subdiagonal and zeros elsewhere.
pub fn verify_sigma_formula(rep: &IntegerRep) -> bool {
    let n = rep.group_degree();
    let r = rep.degree();
    if n < 2 || r != n - 1 {
        return false;
    }
    let sigma = rep
        .generators()
        .iter()
        .fold(IntegerMatrix::identity(r), |acc, s| &acc * s);
    debug_assert_eq!(
        (1..n).fold(Permutation::identity(n), |acc, i| acc.compose(&Permutation::adjacent(n, i))),
        Permutation::long_cycle(n)
    );
    let mut expected = IntegerMatrix::zeros(r, r);
    for j in 0..r {
        expected[(0, j)] = -BigInt::one();
    }
    for i in 1..r {
        expected[(i, i - 1)] = BigInt::one();
    }
    sigma == expected
}

/// Structure of `Λ_r / (σ - 1) Λ_r`.
#[derive(Debug, Clone)]
pub struct Coinvariants {
    pub rank: usize,
    pub snf: SnfResult,
    /// `|det(ρ(σ) - I)|`.
    pub determinant: BigInt,
}

impl Coinvariants {
    pub fn elementary_divisors(&self) -> &[BigInt] {
        &self.snf.elementary_divisors
    }

    pub fn quotient_order(&self) -> BigInt {
        self.snf.torsion_order()
    }
}

/// Elementary divisors of `ρ_r(σ) - I`. Refuses odd `r`: the long cycle then
/// has even order and the torsion argument does not apply.
pub fn sigma_coinvariants(r: usize) -> Result<Coinvariants> {
    if r % 2 == 1 {
        return Err(Error::OddRank(r));
    }
    if r < 2 {
        return Err(Error::input("rank r must be at least 2"));
    }
    let rho = standard_rep(r)?;
    let sigma = rho.evaluate(&Permutation::long_cycle(r + 1));
    let diff = &sigma - &IntegerMatrix::identity(r);
    let snf = smith_normal_form(&diff)?;
    let determinant = num_traits::Signed::abs(&diff.determinant());
    if snf.torsion_order() != determinant {
        return Err(Error::internal("SNF divisor product differs from |det(σ - I)|"));
    }
    Ok(Coinvariants {
        rank: r,
        snf,
        determinant,
    })
}
