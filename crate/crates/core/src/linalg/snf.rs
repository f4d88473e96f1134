use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;
use crate::error::{Error, Result};

/// Largest row or column count accepted by [`smith_normal_form`].
pub const MAX_SNF_DIM: usize = 200;

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | …`.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    pub elementary_divisors: Vec<BigInt>,
}

impl SnfResult {
    /// Order of the torsion part of the cokernel `Z^m / A Z^n`, ignoring free summands.
    pub fn torsion_order(&self) -> BigInt {
        self.elementary_divisors
            .iter()
            .filter(|d| !d.is_zero())
            .fold(BigInt::from(1), |acc, d| acc * d)
    }

    /// Rank of the free part of the cokernel.
    pub fn free_rank(&self) -> usize {
        let rows = self.d.rows();
        rows - self.elementary_divisors.iter().filter(|d| !d.is_zero()).count()
    }

    /// Nontrivial invariant factors of the cokernel; a zero entry stands for `Z`.
    pub fn cokernel_invariants(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self
            .elementary_divisors
            .iter()
            .filter(|d| *d != &BigInt::from(1))
            .cloned()
            .collect();
        out.extend(std::iter::repeat_n(BigInt::zero(), self.d.rows() - self.elementary_divisors.len()));
        out
    }
}

/// Smith normal form by row and column reduction, always pivoting on the
/// entry of smallest absolute value in the remaining block.
pub fn smith_normal_form(a: &IntegerMatrix) -> Result<SnfResult> {
    let (m, n) = (a.rows(), a.cols());
    Error::check_cap("matrix dimension", m.max(n) as u128, MAX_SNF_DIM as u128)?;

    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = smallest_entry(&d, t) else {
                return Ok(finish(u, d, v));
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the block
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Ok(finish(u, d, v))
}

fn smallest_entry(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn finish(u: IntegerMatrix, d: IntegerMatrix, v: IntegerMatrix) -> SnfResult {
    let k = d.rows().min(d.cols());
    let elementary_divisors = (0..k).map(|i| d[(i, i)].clone()).collect();
    SnfResult {
        u,
        d,
        v,
        elementary_divisors,
    }
}
