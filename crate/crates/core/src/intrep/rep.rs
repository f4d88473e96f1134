use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::chartab::{inner_product, ClassFunction};
use crate::error::{Error, Result};
use crate::linalg::IntegerMatrix;
use crate::symgroup::Permutation;

/// A representation of `S_n` by integer matrices, given on the adjacent
/// transpositions `s_1, …, s_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerRep {
    degree: usize,
    group_degree: usize,
    generators: Vec<IntegerMatrix>,
    /// Set for the standard representation with odd `r`; such ranks are
    /// outside the torsion and rigidity statements.
    odd_rank: bool,
}

impl IntegerRep {
    /// Builds a representation and checks the Coxeter relations exactly.
    pub fn new(group_degree: usize, generators: Vec<IntegerMatrix>) -> Result<Self> {
        let rep = IntegerRep::unchecked(group_degree, generators)?;
        rep.check_coxeter()?;
        Ok(rep)
    }

    /// Builds a representation without checking the relations.
    pub fn unchecked(group_degree: usize, generators: Vec<IntegerMatrix>) -> Result<Self> {
        if group_degree == 0 || generators.len() != group_degree - 1 {
            return Err(Error::input(format!(
                "S_{group_degree} needs {} generator images, got {}",
                group_degree.saturating_sub(1),
                generators.len()
            )));
        }
        let degree = match generators.first() {
            Some(m) => m.rows(),
            None => 1,
        };
        if generators.iter().any(|m| m.rows() != degree || m.cols() != degree) {
            return Err(Error::input("generator images must be square of equal size"));
        }
        Ok(IntegerRep {
            degree,
            group_degree,
            generators,
            odd_rank: false,
        })
    }

    pub fn trivial(n: usize) -> Result<Self> {
        IntegerRep::new(n, vec![IntegerMatrix::identity(1); n.saturating_sub(1)])
    }

    pub fn sign(n: usize) -> Result<Self> {
        IntegerRep::new(n, vec![IntegerMatrix::diagonal(&[-1]); n.saturating_sub(1)])
    }

    /// The natural permutation representation on `Z^n`.
    pub fn permutation(n: usize) -> Result<Self> {
        let gens = (1..n)
            .map(|i| permutation_matrix(&Permutation::adjacent(n, i)))
            .collect();
        IntegerRep::new(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group_degree(&self) -> usize {
        self.group_degree
    }

    pub fn generators(&self) -> &[IntegerMatrix] {
        &self.generators
    }

    pub fn is_odd_rank(&self) -> bool {
        self.odd_rank
    }

    /// `s_i² = 1`, `(s_i s_{i+1})³ = 1`, `(s_i s_j)² = 1` for `|i-j| ≥ 2`.
    pub fn check_coxeter(&self) -> Result<()> {
        let k = self.generators.len();
        let pow_is_identity = |m: &IntegerMatrix, e: usize| {
            let mut acc = IntegerMatrix::identity(self.degree);
            for _ in 0..e {
                acc = &acc * m;
            }
            acc.is_identity()
        };
        for i in 0..k {
            for j in i..k {
                let prod = &self.generators[i] * &self.generators[j];
                let e = match j - i {
                    0 => 1,
                    1 => 3,
                    _ => 2,
                };
                if !pow_is_identity(&prod, e) {
                    return Err(Error::input(format!(
                        "Coxeter relation fails for s_{} and s_{}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// `ρ(g)` as the product of generator images along a bubble-sort word.
    pub fn evaluate(&self, g: &Permutation) -> IntegerMatrix {
        assert_eq!(g.degree(), self.group_degree, "permutation of the wrong degree");
        g.adjacent_word()
            .iter()
            .fold(IntegerMatrix::identity(self.degree), |acc, &i| &acc * &self.generators[i - 1])
    }

    /// Compares `ρ(g)` with `ρ(g h⁻¹) ρ(h)` for random `g`, `h`.
    pub fn spot_check_well_defined<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize) -> Result<()> {
        let n = self.group_degree;
        for _ in 0..samples {
            let g = Permutation::random(n, rng);
            let h = Permutation::random(n, rng);
            let lhs = self.evaluate(&g);
            let rhs = &self.evaluate(&g.compose(&h.inverse())) * &self.evaluate(&h);
            if lhs != rhs {
                return Err(Error::internal(format!("ρ is not multiplicative at {g}, {h}")));
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &IntegerRep) -> Result<IntegerRep> {
        self.same_group(other)?;
        Ok(IntegerRep {
            degree: self.degree + other.degree,
            group_degree: self.group_degree,
            generators: self
                .generators
                .iter()
                .zip(&other.generators)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
            odd_rank: self.odd_rank || other.odd_rank,
        })
    }

    pub fn tensor(&self, other: &IntegerRep) -> Result<IntegerRep> {
        self.same_group(other)?;
        Ok(IntegerRep {
            degree: self.degree * other.degree,
            group_degree: self.group_degree,
            generators: self
                .generators
                .iter()
                .zip(&other.generators)
                .map(|(a, b)| a.kronecker(b))
                .collect(),
            odd_rank: self.odd_rank || other.odd_rank,
        })
    }

    /// `c` copies of this representation, block diagonal.
    pub fn copies(&self, c: usize) -> Result<IntegerRep> {
        if c == 0 {
            return Err(Error::input("at least one copy is required"));
        }
        let mut out = self.clone();
        for _ in 1..c {
            out = out.direct_sum(self)?;
        }
        Ok(out)
    }

    fn same_group(&self, other: &IntegerRep) -> Result<()> {
        if self.group_degree != other.group_degree {
            return Err(Error::input(format!(
                "representations of S_{} and S_{}",
                self.group_degree, other.group_degree
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "group": format!("S{}", self.group_degree),
            "generators": self.generators,
        })
    }
}

pub(crate) fn permutation_matrix(g: &Permutation) -> IntegerMatrix {
    let n = g.degree();
    let mut m = IntegerMatrix::zeros(n, n);
    for j in 0..n {
        m[(g.apply(j), j)] = BigInt::one();
    }
    m
}

/// `Λ_r = ker(Z^{r+1} → Z)` with basis `ε_i = e_i - e_{r+1}`, as a representation of `S_{r+1}`.
///
/// `s_i` for `i < r` swaps `ε_i` and `ε_{i+1}`; `s_r` sends `ε_j ↦ ε_j - ε_r`
/// for `j < r` and `ε_r ↦ -ε_r`. Odd `r` is accepted and flagged.
pub fn standard_rep(r: usize) -> Result<IntegerRep> {
    if r == 0 {
        return Err(Error::input("the standard lattice needs rank r >= 1"));
    }
    Error::check_cap("standard representation rank", r as u128, 40)?;
    let n = r + 1;
    let gens = (1..n)
        .map(|i| {
            let sigma = Permutation::adjacent(n, i);
            let mut m = IntegerMatrix::zeros(r, r);
            for j in 0..r {
                // σ(ε_j) = e_{σ(j)} - e_{σ(r)}, rewritten in the ε basis
                let a = sigma.apply(j);
                let b = sigma.apply(r);
                if a < r {
                    m[(a, j)] += BigInt::one();
                }
                if b < r {
                    m[(b, j)] -= BigInt::one();
                }
            }
            m
        })
        .collect();
    let mut rep = IntegerRep::new(n, gens)?;
    rep.odd_rank = r % 2 == 1;
    Ok(rep)
}

/// The character, evaluated at one representative per cycle type and
/// cross-checked at a conjugate representative.
pub fn rep_character(rep: &IntegerRep) -> Result<ClassFunction> {
    let n = rep.group_degree;
    let conj = if n >= 2 {
        Permutation::long_cycle(n).compose(&Permutation::adjacent(n, 1))
    } else {
        Permutation::identity(n)
    };
    let mut err = None;
    let f = ClassFunction::from_fn(n, |lambda| {
        let g = Permutation::class_representative(lambda);
        let t = rep.evaluate(&g).trace();
        let g2 = conj.compose(&g).compose(&conj.inverse());
        let t2 = rep.evaluate(&g2).trace();
        if t != t2 && err.is_none() {
            err = Some(Error::internal(format!(
                "trace differs between {g} and its conjugate {g2}"
            )));
        }
        BigRational::from_integer(t)
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(f),
    }
}

/// Index of `E_ij` (`i ≠ j`) or `E_ii - E_{i+1,i+1}` in the trace-zero basis:
/// off-diagonal units in row-major order, then the diagonal differences.
fn end0_coordinates(x: &IntegerMatrix) -> Vec<BigInt> {
    let r = x.rows();
    let mut coords = Vec::with_capacity(r * r - 1);
    for i in 0..r {
        for j in 0..r {
            if i != j {
                coords.push(x[(i, j)].clone());
            }
        }
    }
    // Σ c_i (E_ii - E_{i+1,i+1}) has diagonal (c_1, c_2 - c_1, …), so c_i are partial sums
    let mut partial = BigInt::zero();
    for i in 0..r - 1 {
        partial += &x[(i, i)];
        coords.push(partial.clone());
    }
    coords
}

fn end0_basis_element(r: usize, k: usize) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(r, r);
    let off = r * (r - 1);
    if k < off {
        let i = k / (r - 1);
        let mut j = k % (r - 1);
        if j >= i {
            j += 1;
        }
        m[(i, j)] = BigInt::one();
    } else {
        let i = k - off;
        m[(i, i)] = BigInt::one();
        m[(i + 1, i + 1)] = -BigInt::one();
    }
    m
}

/// Conjugation action `X ↦ ρ(g) X ρ(g)⁻¹` on trace-zero matrices, in the
/// basis `{E_ij : i ≠ j}` (row-major) followed by `{E_ii - E_{i+1,i+1}}`.
pub fn end0_action(rep: &IntegerRep) -> Result<IntegerRep> {
    let r = rep.degree;
    if r < 2 {
        return Err(Error::input("End⁰ of a representation of degree < 2 is zero"));
    }
    let dim = r * r - 1;
    let basis: Vec<IntegerMatrix> = (0..dim).map(|k| end0_basis_element(r, k)).collect();
    let gens = rep
        .generators
        .iter()
        .map(|g| {
            let g_inv = g.inverse_unimodular()?;
            let mut m = IntegerMatrix::zeros(dim, dim);
            for (k, b) in basis.iter().enumerate() {
                let image = &(g * b) * &g_inv;
                for (row, c) in end0_coordinates(&image).into_iter().enumerate() {
                    m[(row, k)] = c;
                }
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    let out = IntegerRep {
        degree: dim,
        group_degree: rep.group_degree,
        generators: gens,
        odd_rank: rep.odd_rank,
    };
    // χ_{End⁰} = χ·χ̄ - 1 and characters of S_n are real
    let chi = rep_character(rep)?;
    let expected = chi.mul(&chi)?.sub(&ClassFunction::constant(rep.group_degree, 1)?)?;
    if rep_character(&out)? != expected {
        return Err(Error::internal("End⁰ character differs from χ² - 1"));
    }
    Ok(out)
}

/// `⟨ambient, target⟩`, which must be a non-negative integer.
pub fn multiplicity(target: &ClassFunction, ambient: &ClassFunction) -> Result<BigInt> {
    let ip = inner_product(ambient, target)?;
    if !ip.is_integer() || ip.is_negative() {
        return Err(Error::input(format!(
            "inner product {ip} is not a non-negative integer"
        )));
    }
    Ok(ip.to_integer())
}
