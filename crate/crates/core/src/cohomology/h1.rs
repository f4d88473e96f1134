use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use super::hom::equivariant_hom_basis;
use super::module::GModule;
use crate::error::{Error, Result};
use crate::intrep::standard_rep;
use crate::linalg::{RationalMatrix, RowReducer, Vector};
use crate::semidirect::{Presentation, QElement, SemidirectGroup, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    HsFormula,
    FoxCalculus,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::HsFormula => "hs_formula",
            Method::FoxCalculus => "fox_calculus",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `dim H¹(Γ, M)` with cocycle representatives of a basis.
///
/// `cocycle_basis[b][j]` is the value of the `b`-th cocycle on generator `j`.
#[derive(Debug, Clone)]
pub struct CohomologyResult {
    pub dimension: usize,
    pub method: Method,
    pub module: String,
    pub generator_names: Vec<String>,
    pub cocycle_basis: Vec<Vec<Vector>>,
    pub cocycle_space_dimension: usize,
    pub coboundary_dimension: usize,
}

impl CohomologyResult {
    pub fn to_json(&self) -> Value {
        let basis: Vec<Value> = self
            .cocycle_basis
            .iter()
            .map(|cocycle| {
                let mut obj = Map::new();
                for (name, v) in self.generator_names.iter().zip(cocycle) {
                    obj.insert(name.clone(), Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>()));
                }
                Value::Object(obj)
            })
            .collect();
        json!({
            "dim": self.dimension.to_string(),
            "method": self.method.name(),
            "module": self.module,
            "z1_dim": self.cocycle_space_dimension.to_string(),
            "b1_dim": self.coboundary_dimension.to_string(),
            "basis": basis,
        })
    }

    /// Value of the `b`-th basis cocycle on a word.
    pub fn evaluate(&self, module: &GModule, b: usize, word: &Word) -> Vector {
        evaluate_cocycle(module, &self.cocycle_basis[b], word)
    }
}

/// `φ(w)` for the cocycle with generator values `values`, accumulated from
/// the right: `φ(x w) = φ(x) + x·φ(w)` and `φ(x⁻¹ w) = x⁻¹·(φ(w) - φ(x))`.
pub(crate) fn evaluate_cocycle(module: &GModule, values: &[Vector], word: &Word) -> Vector {
    let mut acc = module.zero_vector();
    for &(g, e) in word.0.iter().rev() {
        if e > 0 {
            acc = module.matrices()[g].apply(&acc);
            add_assign(&mut acc, &values[g]);
        } else {
            sub_assign(&mut acc, &values[g]);
            acc = module.inverses()[g].apply(&acc);
        }
    }
    acc
}

fn add_assign(a: &mut Vector, b: &[BigRational]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

fn sub_assign(a: &mut Vector, b: &[BigRational]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
}

/// `H¹(Γ, M) = Hom_{S_{r+1}}(L, M)` for `M` pulled back from `S_{r+1}`, with
/// `L = Λ_r` (quasi) or `Λ_r ⊕ Λ_r` (projective).
///
/// Each homomorphism `F` gives the cocycle `t_i ↦ F ε_i`, `s_a ↦ 0`.
pub fn h1_dim_hs(presentation: &Presentation, module: &GModule) -> Result<CohomologyResult> {
    module.check_presentation(presentation)?;
    if !module.lattice_acts_trivially() {
        return Err(Error::input(format!(
            "module {} is not trivial on the lattice; the equivariant-Hom formula does not apply",
            module.name()
        )));
    }
    let sym = module
        .sym_rep()
        .ok_or_else(|| Error::input(format!("module {} carries no S_{{r+1}} model", module.name())))?;
    let lattice = standard_rep(presentation.rank)?.copies(presentation.case.copies())?;
    let homs = equivariant_hom_basis(&lattice, sym)?;
    let zero = module.zero_vector();
    let cocycle_basis = homs
        .iter()
        .map(|f| {
            let mut values: Vec<Vector> = (0..presentation.lattice_rank)
                .map(|i| (0..f.rows()).map(|row| f.get(row, i).clone()).collect())
                .collect();
            values.extend(presentation.sym_generators().map(|_| zero.clone()));
            values
        })
        .collect();
    let coboundary_dimension = module.dimension() - module.invariants_dimension();
    Ok(CohomologyResult {
        dimension: homs.len(),
        method: Method::HsFormula,
        module: module.name().to_string(),
        generator_names: presentation.generator_names.clone(),
        cocycle_basis,
        cocycle_space_dimension: homs.len() + coboundary_dimension,
        coboundary_dimension,
    })
}

/// Fox-derivative blocks `(∂R/∂x_j)` evaluated in the module, for one relator.
fn fox_blocks(module: &GModule, relator: &Word, generators: usize) -> Vec<Option<RationalMatrix>> {
    let d = module.dimension();
    let mut blocks: Vec<Option<RationalMatrix>> = vec![None; generators];
    let mut prefix = RationalMatrix::identity(d);
    for &(g, e) in &relator.0 {
        if e > 0 {
            accumulate(&mut blocks[g], &prefix, false);
            prefix = prefix.mul(&module.matrices()[g]);
        } else {
            prefix = prefix.mul(&module.inverses()[g]);
            accumulate(&mut blocks[g], &prefix, true);
        }
    }
    blocks
}

fn accumulate(slot: &mut Option<RationalMatrix>, m: &RationalMatrix, negate: bool) {
    let term = if negate { m.neg() } else { m.clone() };
    *slot = Some(match slot.take() {
        None => term,
        Some(prev) => {
            let rows: Vec<Vector> = prev
                .to_rows()
                .into_iter()
                .zip(term.to_rows())
                .map(|(a, b)| a.iter().zip(&b).map(|(x, y)| x + y).collect())
                .collect();
            RationalMatrix::from_rows(rows)
        }
    });
}

/// `H¹(Γ, M) = Z¹ / B¹` from the presentation: `Z¹` is the kernel of the
/// stacked Fox-derivative matrices of the relators, `dim B¹ = dim M - dim M^Γ`.
pub fn fox_cocycle_h1(presentation: &Presentation, module: &GModule) -> Result<CohomologyResult> {
    module.check_presentation(presentation)?;
    let d = module.dimension();
    let n = presentation.generator_count();
    let mut system = RowReducer::new(n * d);
    for relator in &presentation.relators {
        let blocks = fox_blocks(module, relator, n);
        for i in 0..d {
            let entries: Vec<(usize, BigRational)> = blocks
                .iter()
                .enumerate()
                .filter_map(|(j, b)| b.as_ref().map(|b| (j, b)))
                .flat_map(|(j, b)| {
                    b.row(i)
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(move |(c, x)| (j * d + c, x.clone()))
                })
                .collect();
            if !entries.is_empty() {
                system.push_sparse(&entries);
            }
        }
    }
    let cocycles = system.nullspace();

    // coboundaries δm: x_j ↦ (x_j - 1) m, for m running over a basis of M
    let mut quotient = RowReducer::new(n * d);
    for c in 0..d {
        let v: Vector = module
            .matrices()
            .iter()
            .flat_map(|m| (0..d).map(move |row| {
                let x = m.get(row, c).clone();
                if row == c {
                    x - BigRational::one()
                } else {
                    x
                }
            }))
            .collect();
        quotient.push(v);
    }
    let coboundary_dimension = d - module.invariants_dimension();
    if quotient.rank() != coboundary_dimension {
        return Err(Error::internal(format!(
            "coboundary span has rank {}, expected {coboundary_dimension}",
            quotient.rank()
        )));
    }
    let mut cocycle_basis = Vec::new();
    for z in &cocycles {
        if quotient.push(z.clone()) {
            cocycle_basis.push(z.chunks(d).map(<[BigRational]>::to_vec).collect::<Vec<Vector>>());
        }
    }
    let dimension = cocycles
        .len()
        .checked_sub(coboundary_dimension)
        .ok_or_else(|| Error::internal("coboundaries exceed cocycles"))?;
    if cocycle_basis.len() != dimension {
        return Err(Error::internal(format!(
            "found {} classes independent modulo coboundaries, expected {dimension}",
            cocycle_basis.len()
        )));
    }
    Ok(CohomologyResult {
        dimension,
        method: Method::FoxCalculus,
        module: module.name().to_string(),
        generator_names: presentation.generator_names.clone(),
        cocycle_basis,
        cocycle_space_dimension: cocycles.len(),
        coboundary_dimension,
    })
}

/// Normal-form word `t^v · s_{i_1} ⋯ s_{i_k}` of an element of `Γ`.
fn normal_word(presentation: &Presentation, x: &QElement) -> Word {
    let mut letters = Vec::new();
    for (i, &c) in x.v.iter().enumerate() {
        let e = if c >= 0 { 1 } else { -1 };
        letters.extend(std::iter::repeat_n((i, e), c.unsigned_abs() as usize));
    }
    let offset = presentation.lattice_rank;
    letters.extend(x.g.adjacent_word().into_iter().map(|a| (offset + a - 1, 1)));
    Word(letters)
}

/// Checks `φ(gh) = φ(g) + g·φ(h)` on random pairs of elements of `Γ`, each
/// evaluated through its normal-form word.
pub fn check_cocycle_condition<R: Rng + ?Sized>(
    gamma: &SemidirectGroup,
    presentation: &Presentation,
    module: &GModule,
    result: &CohomologyResult,
    rng: &mut R,
    samples: usize,
) -> Result<()> {
    if gamma.modulus() != 0 {
        return Err(Error::input("the cocycle check runs on the infinite group"));
    }
    module.check_presentation(presentation)?;
    for (b, values) in result.cocycle_basis.iter().enumerate() {
        for _ in 0..samples {
            let (g, h) = (gamma.random_element(rng), gamma.random_element(rng));
            let (wg, wh, wgh) = (
                normal_word(presentation, &g),
                normal_word(presentation, &h),
                normal_word(presentation, &gamma.mul(&g, &h)),
            );
            let lhs = evaluate_cocycle(module, values, &wgh);
            let mut rhs = evaluate_cocycle(module, values, &wg);
            add_assign(&mut rhs, &module.act_word(&wg, &evaluate_cocycle(module, values, &wh)));
            if lhs != rhs {
                return Err(Error::internal(format!(
                    "cocycle {b} ({}) fails φ(gh) = φ(g) + g·φ(h) at g = {g:?}, h = {h:?}",
                    result.method
                )));
            }
        }
    }
    Ok(())
}
