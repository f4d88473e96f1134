use num_bigint::BigInt;
use serde::Serialize;

use super::group::Case;
use crate::error::{Error, Result};
use crate::intrep::{standard_rep, IntegerRep};
use crate::linalg::{smith_normal_form, IntegerMatrix};

/// A word in the free group: `(generator index, ±1)` letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Word(pub Vec<(usize, i8)>);

impl Word {
    pub fn generator(i: usize) -> Word {
        Word(vec![(i, 1)])
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn power(&self, e: usize) -> Word {
        Word(self.0.iter().copied().cycle().take(self.0.len() * e).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self, generators: usize) -> Vec<i64> {
        let mut sums = vec![0; generators];
        for &(g, e) in &self.0 {
            sums[g] += i64::from(e);
        }
        sums
    }

    /// Evaluates the word with the given images and inverse images.
    pub fn evaluate<G: Clone>(&self, images: &[G], inverses: &[G], identity: &G, mul: impl Fn(&G, &G) -> G) -> G {
        self.0.iter().fold(identity.clone(), |acc, &(g, e)| {
            if e > 0 {
                mul(&acc, &images[g])
            } else {
                mul(&acc, &inverses[g])
            }
        })
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(g, e)| if e > 0 { names[g].clone() } else { format!("{}^-1", names[g]) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Finite presentation of `Γ_r` (or its doubled-lattice variant): lattice
/// generators `t_1…t_k`, then adjacent transpositions `s_1…s_r`.
#[derive(Debug, Clone, Serialize)]
pub struct Presentation {
    pub rank: usize,
    pub case: Case,
    pub lattice_rank: usize,
    pub generator_names: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn lattice_generators(&self) -> std::ops::Range<usize> {
        0..self.lattice_rank
    }

    pub fn sym_generators(&self) -> std::ops::Range<usize> {
        self.lattice_rank..self.generator_names.len()
    }

    /// Evaluates every relator on integer matrices; true iff all are the identity.
    pub fn relators_hold_in_matrices(&self, images: &[IntegerMatrix]) -> Result<bool> {
        if images.len() != self.generator_count() {
            return Err(Error::input("one image per generator is required"));
        }
        let dim = images[0].rows();
        let inverses = images
            .iter()
            .map(IntegerMatrix::inverse_unimodular)
            .collect::<Result<Vec<_>>>()?;
        let id = IntegerMatrix::identity(dim);
        Ok(self
            .relators
            .iter()
            .all(|w| w.evaluate(images, &inverses, &id, |a, b| a * b).is_identity()))
    }

    /// Invariant factors of the abelianization; `0` stands for a free `Z` summand.
    pub fn abelianization(&self) -> Result<Vec<BigInt>> {
        let g = self.generator_count();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|w| w.exponent_sums(g)).collect();
        let relation_matrix = IntegerMatrix::from_rows(&rows)?;
        let snf = smith_normal_form(&relation_matrix.transpose())?;
        Ok(snf.cokernel_invariants())
    }

    pub fn rendered_relators(&self) -> Vec<String> {
        self.relators.iter().map(|w| w.render(&self.generator_names)).collect()
    }
}

/// Coxeter relators of `S_{r+1}`, commutators of the lattice generators, and
/// `s_a t_i s_a⁻¹ = t^{ρ(s_a) e_i}` for every pair.
pub fn gamma_presentation(r: usize, case: Case) -> Result<Presentation> {
    if r % 2 == 1 {
        return Err(Error::OddRank(r));
    }
    if r < 2 {
        return Err(Error::input("rank r must be at least 2"));
    }
    let rho = standard_rep(r)?;
    let action: IntegerRep = match case {
        Case::Quasi => rho,
        Case::Projective => rho.direct_sum(&rho)?,
    };
    let k = action.degree();
    let mut names: Vec<String> = (1..=k).map(|i| format!("t{i}")).collect();
    names.extend((1..=r).map(|a| format!("s{a}")));
    let s = |a: usize| Word::generator(k + a);
    let t = |i: usize| Word::generator(i);

    let mut relators = Vec::new();
    for a in 0..r {
        relators.push(s(a).power(2));
    }
    for a in 0..r.saturating_sub(1) {
        relators.push(s(a).concat(&s(a + 1)).power(3));
    }
    for a in 0..r {
        for b in a + 2..r {
            relators.push(s(a).concat(&s(b)).power(2));
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            relators.push(t(i).concat(&t(j)).concat(&t(i).inverse()).concat(&t(j).inverse()));
        }
    }
    for (a, m) in action.generators().iter().enumerate() {
        for i in 0..k {
            let mut target = Word(Vec::new());
            for j in 0..k {
                let c: i64 = (&m[(j, i)]).try_into().expect("small action entries");
                let letter = if c >= 0 { t(j) } else { t(j).inverse() };
                target = target.concat(&letter.power(c.unsigned_abs() as usize));
            }
            relators.push(s(a).concat(&t(i)).concat(&s(a).inverse()).concat(&target.inverse()));
        }
    }
    Ok(Presentation {
        rank: r,
        case,
        lattice_rank: k,
        generator_names: names,
        relators,
    })
}
