use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intrep::IntegerRep;
use crate::linalg::{rank, IntegerMatrix, RationalMatrix, Vector};
use crate::semidirect::{Case, Presentation, Word};

/// A finite-dimensional `Q[Γ]`-module, given by one matrix per generator of
/// a presentation of `Γ`.
#[derive(Debug, Clone)]
pub struct GModule {
    name: String,
    rank: usize,
    case: Case,
    dimension: usize,
    matrices: Vec<RationalMatrix>,
    inverses: Vec<RationalMatrix>,
    lattice_acts_trivially: bool,
    sym_rep: Option<IntegerRep>,
}

impl GModule {
    /// Validates the matrices against every relator of `presentation`.
    pub fn new(
        presentation: &Presentation,
        name: &str,
        matrices: Vec<RationalMatrix>,
        sym_rep: Option<IntegerRep>,
    ) -> Result<GModule> {
        if matrices.len() != presentation.generator_count() {
            return Err(Error::input(format!(
                "{} generator matrices given, presentation has {} generators",
                matrices.len(),
                presentation.generator_count()
            )));
        }
        let dimension = matrices.first().map_or(0, RationalMatrix::rows);
        if matrices.iter().any(|m| m.rows() != dimension || m.cols() != dimension) {
            return Err(Error::input("module matrices must be square of a common size"));
        }
        let inverses = matrices
            .iter()
            .map(|m| m.inverse().ok_or_else(|| Error::input("singular generator matrix")))
            .collect::<Result<Vec<_>>>()?;
        let lattice_acts_trivially = presentation.lattice_generators().all(|i| matrices[i].is_identity());
        let module = GModule {
            name: name.to_string(),
            rank: presentation.rank,
            case: presentation.case,
            dimension,
            matrices,
            inverses,
            lattice_acts_trivially,
            sym_rep,
        };
        for (i, w) in presentation.relators.iter().enumerate() {
            if !module.word_matrix(w).is_identity() {
                return Err(Error::input(format!(
                    "module {name} violates relator {i}: {}",
                    w.render(&presentation.generator_names)
                )));
            }
        }
        Ok(module)
    }

    /// The module `Γ → S_{r+1} → GL(rep)`: lattice generators act trivially.
    pub fn pulled_back(presentation: &Presentation, name: &str, rep: &IntegerRep) -> Result<GModule> {
        if rep.group_degree() != presentation.rank + 1 {
            return Err(Error::input(format!(
                "representation of S_{} cannot be pulled back to a presentation of rank {}",
                rep.group_degree(),
                presentation.rank
            )));
        }
        let mut matrices = vec![RationalMatrix::identity(rep.degree()); presentation.lattice_rank];
        matrices.extend(rep.generators().iter().map(RationalMatrix::from_integer));
        GModule::new(presentation, name, matrices, Some(rep.clone()))
    }

    /// The faithful affine module `Q^k ⊕ Q`, `(v, g) ↦ [[ρ(g), v], [0, 1]]`,
    /// on which the lattice acts non-trivially.
    pub fn affine(presentation: &Presentation, action: &IntegerRep) -> Result<GModule> {
        let k = presentation.lattice_rank;
        if action.degree() != k {
            return Err(Error::input("affine module needs an action of the lattice rank"));
        }
        let mut matrices = Vec::with_capacity(presentation.generator_count());
        for i in 0..k {
            let mut m = IntegerMatrix::identity(k + 1);
            m[(i, k)] = num_bigint::BigInt::one();
            matrices.push(RationalMatrix::from_integer(&m));
        }
        for g in action.generators() {
            matrices.push(RationalMatrix::from_integer(&g.direct_sum(&IntegerMatrix::identity(1))));
        }
        GModule::new(presentation, "affine", matrices, None)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn matrices(&self) -> &[RationalMatrix] {
        &self.matrices
    }

    pub fn inverses(&self) -> &[RationalMatrix] {
        &self.inverses
    }

    pub fn lattice_acts_trivially(&self) -> bool {
        self.lattice_acts_trivially
    }

    /// The `S_{r+1}`-representation this module was pulled back from, if any.
    pub fn sym_rep(&self) -> Option<&IntegerRep> {
        self.sym_rep.as_ref()
    }

    pub(crate) fn check_presentation(&self, presentation: &Presentation) -> Result<()> {
        if presentation.rank != self.rank
            || presentation.case != self.case
            || presentation.generator_count() != self.matrices.len()
        {
            return Err(Error::input(format!(
                "module {} was built for a different presentation",
                self.name
            )));
        }
        Ok(())
    }

    pub fn word_matrix(&self, w: &Word) -> RationalMatrix {
        w.evaluate(
            &self.matrices,
            &self.inverses,
            &RationalMatrix::identity(self.dimension),
            RationalMatrix::mul,
        )
    }

    /// `w · v`, applying letters from the right.
    pub fn act_word(&self, w: &Word, v: &[BigRational]) -> Vector {
        w.0.iter().rev().fold(v.to_vec(), |acc, &(g, e)| {
            if e > 0 {
                self.matrices[g].apply(&acc)
            } else {
                self.inverses[g].apply(&acc)
            }
        })
    }

    /// Dimension of `M^Γ`, the common fixed space of all generators.
    pub fn invariants_dimension(&self) -> usize {
        let rows: Vec<Vector> = self.matrices.iter().flat_map(|m| m.sub_identity().to_rows()).collect();
        if rows.is_empty() {
            return self.dimension;
        }
        self.dimension - rank(&rows)
    }

    pub(crate) fn zero_vector(&self) -> Vector {
        vec![BigRational::zero(); self.dimension]
    }
}
