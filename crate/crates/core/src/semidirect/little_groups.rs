use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use super::dual::{dual_character_orbits, DualCharacter};
use super::group::{build_group, Case, QElement, SemidirectGroup};
use crate::chartab::{small_group_irreducible_characters, CharacterTable, FiniteGroup};
use crate::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};
use crate::symgroup::Permutation;

/// Default bound on `|Q|` for the little-groups construction.
pub const MAX_LITTLE_GROUPS_ORDER: u64 = 100_000;

#[derive(Debug)]
struct Stabilizer {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    group: FiniteGroup,
    table: CharacterTable,
    /// `transversal[p]` maps the orbit representative to the `p`-th orbit point.
    transversal: Vec<Permutation>,
}

/// One irreducible of `Q = (Z/m)^k ⋊ S_{r+1}`: induced from `χ ⊗ ψ` on
/// `(Z/m)^k ⋊ H`, where `χ` is an orbit representative extended trivially
/// over its stabilizer `H` and `ψ` an irreducible of `H`.
#[derive(Debug, Clone)]
pub struct IrrepDescriptor {
    pub orbit_representative: DualCharacter,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub stabilizer_generators: Vec<Permutation>,
    pub stabilizer_irrep_label: String,
    pub stabilizer_irrep_degree: u64,
    pub degree: u64,
    stabilizer: Arc<Stabilizer>,
    row: usize,
}

impl IrrepDescriptor {
    /// The character value at `x`, in `field` (whose conductor must be a
    /// multiple of `m` and of the stabilizer exponent).
    pub fn character_at(&self, group: &SemidirectGroup, x: &QElement, field: &Arc<CyclotomicField>) -> Cyclotomic {
        let stab = &self.stabilizer;
        let m = group.modulus() as i64;
        let step = field.conductor() as i64 / m;
        let u = &self.orbit_representative.exponents;
        let mut acc = Cyclotomic::zero(field);
        for c in &stab.transversal {
            let c_inv = c.inverse();
            let h = c_inv.compose(&x.g).compose(c);
            let Some(&hi) = stab.index.get(&h) else {
                continue;
            };
            let w = group.act(&c_inv, &x.v);
            let pairing: i64 = u.iter().zip(&w).map(|(a, b)| a * b).sum::<i64>().rem_euclid(m);
            let psi = stab.table.rows[self.row][stab.group.class_of(hi)].embed(field);
            acc = &acc + &(&Cyclotomic::root_of_unity(field, pairing * step) * &psi);
        }
        acc
    }

    /// Restricted to the lattice, the representation is trivial iff its orbit is the trivial character.
    pub fn lattice_acts_trivially(&self) -> bool {
        self.orbit_representative.is_trivial()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "orbit_rep": self.orbit_representative.exponents.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "orbit_size": self.orbit_size,
            "stabilizer_order": self.stabilizer_order,
            "stab_irrep": self.stabilizer_irrep_label,
            "stab_irrep_degree": self.stabilizer_irrep_degree,
            "degree": self.degree,
        })
    }
}

/// Smallest field holding every character value of `Q`.
pub fn character_field(group: &SemidirectGroup) -> Arc<CyclotomicField> {
    let sym_exponent = (1..=group.sym_degree() as u64).fold(1, num_integer::lcm);
    CyclotomicField::new(num_integer::lcm(group.modulus().max(1), sym_exponent))
}

pub fn little_groups_irreps(group: &SemidirectGroup) -> Result<Vec<IrrepDescriptor>> {
    little_groups_irreps_capped(group, MAX_LITTLE_GROUPS_ORDER)
}

/// Irreducibles of the finite quotient, one orbit of dual characters at a
/// time. Fails with an internal error unless `Σ degree² = |Q|`.
pub fn little_groups_irreps_capped(group: &SemidirectGroup, max_order: u64) -> Result<Vec<IrrepDescriptor>> {
    let order = group
        .order()
        .ok_or_else(|| Error::input("little-groups construction needs a finite modulus"))?;
    if order > BigUint::from(max_order) {
        return Err(Error::SizeLimit {
            what: "quotient order for little groups",
            value: u128::try_from(&order).unwrap_or(u128::MAX),
            limit: max_order as u128,
        });
    }
    let id = Permutation::identity(group.sym_degree());
    let mut out = Vec::new();
    for orbit in dual_character_orbits(group)? {
        let (h, elements) = FiniteGroup::generate(id.clone(), &orbit.result.stabilizer_generators, |a, b| a.compose(b))?;
        let table = small_group_irreducible_characters(&h, &format!("Stab{:?}", orbit.representative()))?;
        let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let degrees = table.degrees();
        let stabilizer = Arc::new(Stabilizer {
            elements,
            index,
            group: h,
            table,
            transversal: orbit.result.transversal.clone(),
        });
        for (row, &d) in degrees.iter().enumerate() {
            out.push(IrrepDescriptor {
                orbit_representative: DualCharacter {
                    modulus: group.modulus(),
                    exponents: orbit.representative().to_vec(),
                },
                orbit_size: orbit.size(),
                stabilizer_order: stabilizer.elements.len(),
                stabilizer_generators: orbit.result.stabilizer_generators.clone(),
                stabilizer_irrep_label: stabilizer.table.row_labels[row].clone(),
                stabilizer_irrep_degree: d,
                degree: orbit.size() as u64 * d,
                stabilizer: stabilizer.clone(),
                row,
            });
        }
    }
    let sum_sq: BigUint = out.iter().map(|d| BigUint::from(d.degree) * d.degree).sum();
    if sum_sq != order {
        return Err(Error::internal(format!(
            "little-groups completeness fails: Σ degree² = {sum_sq}, |Q| = {order}"
        )));
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct RankCount {
    pub rank: usize,
    pub case: Case,
    pub modulus: u64,
    pub quotient_order: String,
    pub total_irreps: usize,
    /// degree → number of irreducibles of that degree
    pub degree_histogram: BTreeMap<u64, usize>,
    pub count: usize,
    pub linear_count: usize,
    #[serde(skip)]
    pub descriptors: Vec<IrrepDescriptor>,
}

impl RankCount {
    pub fn descriptors_json(&self) -> Value {
        Value::Array(self.descriptors.iter().map(IrrepDescriptor::to_json).collect())
    }
}

/// Irreducibles of degree exactly `r` of the quotient at `m = r + 1`.
pub fn count_rank_r_irreps(r: usize, case: Case) -> Result<RankCount> {
    count_rank_r_irreps_capped(r, case, MAX_LITTLE_GROUPS_ORDER)
}

pub fn count_rank_r_irreps_capped(r: usize, case: Case, max_order: u64) -> Result<RankCount> {
    let modulus = r as u64 + 1;
    let group = build_group(r, case, modulus)?;
    let all = little_groups_irreps_capped(&group, max_order)?;
    let mut degree_histogram = BTreeMap::new();
    for d in &all {
        *degree_histogram.entry(d.degree).or_insert(0) += 1;
    }
    let linear_count = degree_histogram.get(&1).copied().unwrap_or(0);
    let total_irreps = all.len();
    let descriptors: Vec<IrrepDescriptor> = all.into_iter().filter(|d| d.degree == r as u64).collect();
    Ok(RankCount {
        rank: r,
        case,
        modulus,
        quotient_order: group.order().expect("finite").to_string(),
        total_irreps,
        degree_histogram,
        count: descriptors.len(),
        linear_count,
        descriptors,
    })
}
