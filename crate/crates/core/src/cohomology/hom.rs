use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::chartab::inner_product;
use crate::error::{Error, Result};
use crate::intrep::{rep_character, IntegerRep};
use crate::linalg::{RationalMatrix, RowReducer};

/// Basis of `Hom_{S_n}(L, M)`: matrices `F` (`dim M × dim L`) with
/// `M(s) F = F L(s)` for every adjacent transposition `s`.
///
/// The dimension is checked against `⟨χ_L, χ_M⟩`.
pub fn equivariant_hom_basis(l: &IntegerRep, m: &IntegerRep) -> Result<Vec<RationalMatrix>> {
    if l.group_degree() != m.group_degree() {
        return Err(Error::input("both modules must be over the same symmetric group"));
    }
    let (dl, dm) = (l.degree(), m.degree());
    let unknowns = dl * dm;
    let mut system = RowReducer::new(unknowns);
    for (lg, mg) in l.generators().iter().zip(m.generators()) {
        for i in 0..dm {
            for j in 0..dl {
                // (M F)_ij - (F L)_ij
                let mut entries: Vec<(usize, BigRational)> = Vec::new();
                for k in 0..dm {
                    if !mg[(i, k)].is_zero() {
                        entries.push((k * dl + j, BigRational::from_integer(mg[(i, k)].clone())));
                    }
                }
                for k in 0..dl {
                    if !lg[(k, j)].is_zero() {
                        entries.push((i * dl + k, BigRational::from_integer(-lg[(k, j)].clone())));
                    }
                }
                system.push_sparse(&entries);
            }
        }
    }
    let basis: Vec<RationalMatrix> = system
        .nullspace()
        .into_iter()
        .map(|v| RationalMatrix::from_rows(v.chunks(dl).map(<[BigRational]>::to_vec).collect()))
        .collect();
    let expected = inner_product(&rep_character(l)?, &rep_character(m)?)?;
    if expected != BigRational::from_integer(BigInt::from(basis.len())) {
        return Err(Error::internal(format!(
            "equivariant Hom has dimension {} but the character inner product is {expected}",
            basis.len()
        )));
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intrep::{end0_action, standard_rep};

    #[test]
    fn small_cases() {
        let l2 = standard_rep(2).unwrap();
        let e = end0_action(&l2).unwrap();
        assert_eq!(equivariant_hom_basis(&l2, &e).unwrap().len(), 1);
        assert_eq!(equivariant_hom_basis(&l2, &IntegerRep::trivial(3).unwrap()).unwrap().len(), 0);
        assert_eq!(equivariant_hom_basis(&l2.copies(2).unwrap(), &e).unwrap().len(), 2);
    }

    #[test]
    fn basis_is_equivariant() {
        let l = standard_rep(4).unwrap();
        let m = end0_action(&l).unwrap();
        for f in equivariant_hom_basis(&l, &m).unwrap() {
            for (lg, mg) in l.generators().iter().zip(m.generators()) {
                let left = RationalMatrix::from_integer(mg).mul(&f);
                let right = f.mul(&RationalMatrix::from_integer(lg));
                assert_eq!(left, right);
            }
        }
    }
}
