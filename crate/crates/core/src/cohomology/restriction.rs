use serde::Serialize;

use super::h1::{evaluate_cocycle, CohomologyResult};
use super::module::GModule;
use crate::error::{Error, Result};
use crate::linalg::{RowReducer, Vector};
use crate::semidirect::Word;

/// Lattice classes of the three boundary loops at infinity for `r = 2`.
pub const DEFAULT_BOUNDARY_LOOPS: [[i64; 2]; 3] = [[1, 0], [0, 1], [-1, -1]];

/// The map `H¹(Γ, M) → ⊕_γ H¹(⟨γ⟩, M)`, `H¹(⟨γ⟩, M) = M / (γ - 1) M`.
#[derive(Debug, Clone, Serialize)]
pub struct RestrictionReport {
    pub loops: Vec<Vec<i64>>,
    pub h1_dimension: usize,
    pub evaluation_rank: usize,
    pub kernel_dimension: usize,
}

fn lattice_word(gamma: &[i64]) -> Word {
    Word(
        gamma
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| {
                let e = if c >= 0 { 1 } else { -1 };
                std::iter::repeat_n((i, e), c.unsigned_abs() as usize)
            })
            .collect(),
    )
}

pub fn restrict_to_loop(module: &GModule, h1: &CohomologyResult, gamma: &[i64]) -> Result<RestrictionReport> {
    restrict_to_loops(module, h1, &[gamma.to_vec()])
}

/// Rank and kernel of restriction to the cyclic subgroups `⟨t^γ⟩`, jointly.
pub fn restrict_to_loops(module: &GModule, h1: &CohomologyResult, loops: &[Vec<i64>]) -> Result<RestrictionReport> {
    let k = h1.generator_names.len() - module.rank();
    if h1.generator_names.len() != module.matrices().len() {
        return Err(Error::input("cohomology result and module use different presentations"));
    }
    if let Some(bad) = loops.iter().find(|g| g.len() != k) {
        return Err(Error::input(format!(
            "loop {bad:?} has {} coordinates, the lattice has rank {k}",
            bad.len()
        )));
    }
    let d = module.dimension();
    let mut reducer = RowReducer::new(d * loops.len());
    // image of (γ - 1) in each block
    for (block, gamma) in loops.iter().enumerate() {
        let minus_one = module.word_matrix(&lattice_word(gamma)).sub_identity();
        for c in 0..d {
            let mut v: Vector = vec![Default::default(); d * loops.len()];
            for row in 0..d {
                v[block * d + row] = minus_one.get(row, c).clone();
            }
            reducer.push(v);
        }
    }
    let base = reducer.rank();
    for values in &h1.cocycle_basis {
        let v: Vector = loops
            .iter()
            .flat_map(|gamma| evaluate_cocycle(module, values, &lattice_word(gamma)))
            .collect();
        reducer.push(v);
    }
    let evaluation_rank = reducer.rank() - base;
    Ok(RestrictionReport {
        loops: loops.to_vec(),
        h1_dimension: h1.dimension,
        evaluation_rank,
        kernel_dimension: h1.dimension - evaluation_rank,
    })
}

/// Dimension of the kernel of restriction to all `loops` simultaneously.
pub fn boundary_tangent_dim(module: &GModule, h1: &CohomologyResult, loops: &[Vec<i64>]) -> Result<usize> {
    if h1.dimension == 0 {
        return Ok(0);
    }
    Ok(restrict_to_loops(module, h1, loops)?.kernel_dimension)
}

/// Vectors in `[-bound, bound]²` with coprime entries.
pub fn primitive_loops(bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            if num_integer::gcd(a, b) == 1 {
                out.push(vec![a, b]);
            }
        }
    }
    out
}
