use std::collections::HashMap;

use num_integer::Integer;
use serde::Serialize;

use super::group::SemidirectGroup;
use super::Case;
use crate::error::{Error, Result};
use crate::symgroup::{closure, orbit_with_stabilizer, OrbitResult, Permutation, DEFAULT_ORBIT_CAP};

/// The character `v ↦ ζ_m^{⟨u, v⟩}` of `(Z/m)^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DualCharacter {
    pub modulus: u64,
    pub exponents: Vec<i64>,
}

impl DualCharacter {
    /// `m / gcd(m, u_1, …, u_k)`.
    pub fn order(&self) -> u64 {
        let g = self
            .exponents
            .iter()
            .fold(self.modulus, |acc, &u| acc.gcd(&(u.unsigned_abs())));
        self.modulus / g
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&u| u == 0)
    }
}

impl SemidirectGroup {
    /// `(g·χ)(v) = χ(ρ(g)⁻¹ v)`, i.e. `u ↦ ρ(g⁻¹)ᵀ u mod m`.
    pub fn act_on_dual(&self, g: &Permutation, u: &[i64]) -> Vec<i64> {
        let m = self.modulus() as i64;
        let mat = self.matrix(&g.inverse());
        let k = u.len();
        (0..k)
            .map(|j| (0..k).map(|i| mat[i][j] * u[i]).sum::<i64>().rem_euclid(m))
            .collect()
    }

    pub fn sigma(&self) -> Permutation {
        Permutation::long_cycle(self.sym_degree())
    }

    pub(crate) fn sym_generators(&self) -> Vec<Permutation> {
        let n = self.sym_degree();
        (1..n).map(|i| Permutation::adjacent(n, i)).collect()
    }
}

#[derive(Debug, Clone)]
pub struct DualOrbit {
    pub result: OrbitResult<Vec<i64>, Permutation>,
    /// Every member is fixed by `σ = (1 2 … r+1)`.
    pub sigma_fixed: bool,
    pub max_character_order: u64,
    pub stabilizer_order: usize,
}

impl DualOrbit {
    pub fn representative(&self) -> &[i64] {
        &self.result.orbit[0]
    }

    pub fn size(&self) -> usize {
        self.result.size
    }
}

/// Splits the `m^k` characters of the lattice quotient into `S_{r+1}`-orbits.
/// Orbits are listed by their lexicographically smallest member, which is
/// also the representative, so the trivial character comes first.
pub fn dual_character_orbits(group: &SemidirectGroup) -> Result<Vec<DualOrbit>> {
    if group.modulus() == 0 {
        return Err(Error::input("dual orbits need a finite modulus m >= 1"));
    }
    let m = group.modulus();
    let gens = group.sym_generators();
    let id = Permutation::identity(group.sym_degree());
    let sigma = group.sigma();
    let sym_order = crate::symgroup::factorial(group.sym_degree());
    let mut assigned: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut orbits = Vec::new();
    for u in group.lattice_vectors()? {
        if assigned.contains_key(&u) {
            continue;
        }
        let result = orbit_with_stabilizer(&gens, &id, |g, x: &Vec<i64>| group.act_on_dual(g, x), &u, DEFAULT_ORBIT_CAP)?;
        let stabilizer_order = closure(&result.stabilizer_generators, &id, DEFAULT_ORBIT_CAP)?.len();
        if num_bigint::BigUint::from(stabilizer_order * result.size) != sym_order {
            return Err(Error::internal("orbit-stabilizer identity fails on a dual orbit"));
        }
        let sigma_fixed = result.orbit.iter().all(|x| group.act_on_dual(&sigma, x) == *x);
        let max_character_order = result
            .orbit
            .iter()
            .map(|x| DualCharacter { modulus: m, exponents: x.clone() }.order())
            .max()
            .unwrap_or(1);
        for x in &result.orbit {
            assigned.insert(x.clone(), orbits.len());
        }
        orbits.push(DualOrbit {
            result,
            sigma_fixed,
            max_character_order,
            stabilizer_order,
        });
    }
    Ok(orbits)
}

#[derive(Debug, Clone, Serialize)]
pub struct TorsionReport {
    pub rank: usize,
    pub case: Case,
    pub modulus: u64,
    pub pass: bool,
    /// `gcd(m, r+1)`.
    pub order_bound: u64,
    /// Every σ-fixed character with its order.
    pub sigma_fixed: Vec<(DualCharacter, u64)>,
    /// Sizes of all orbits, in orbit order.
    pub orbit_sizes: Vec<usize>,
    /// Orbits of size ≤ r that are not entirely σ-fixed.
    pub small_orbit_violations: Vec<DualCharacter>,
    /// σ-fixed characters whose order does not divide `gcd(m, r+1)`.
    pub order_violations: Vec<DualCharacter>,
}

/// Checks that small orbits (size ≤ r) consist of σ-fixed characters and that
/// σ-fixed characters have order dividing `gcd(m, r+1)`.
pub fn verify_torsion_claim(r: usize, case: Case, modulus: u64) -> Result<TorsionReport> {
    if r % 2 == 1 {
        return Err(Error::OddRank(r));
    }
    if modulus == 0 {
        return Err(Error::input("modulus must be at least 1"));
    }
    let group = super::build_group(r, case, modulus)?;
    let orbits = dual_character_orbits(&group)?;
    let sigma = group.sigma();
    let order_bound = modulus.gcd(&(r as u64 + 1));
    let mut sigma_fixed = Vec::new();
    let mut small_orbit_violations = Vec::new();
    let mut order_violations = Vec::new();
    for orbit in &orbits {
        if orbit.size() <= r && !orbit.sigma_fixed {
            small_orbit_violations.push(DualCharacter {
                modulus,
                exponents: orbit.representative().to_vec(),
            });
        }
        for u in &orbit.result.orbit {
            if group.act_on_dual(&sigma, u) == *u {
                let chi = DualCharacter {
                    modulus,
                    exponents: u.clone(),
                };
                let ord = chi.order();
                if !order_bound.is_multiple_of(ord) {
                    order_violations.push(chi.clone());
                }
                sigma_fixed.push((chi, ord));
            }
        }
    }
    sigma_fixed.sort();
    Ok(TorsionReport {
        rank: r,
        case,
        modulus,
        pass: small_orbit_violations.is_empty() && order_violations.is_empty(),
        order_bound,
        sigma_fixed,
        orbit_sizes: orbits.iter().map(DualOrbit::size).collect(),
        small_orbit_violations,
        order_violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationImage {
    pub orbit_size: usize,
    pub image_order: usize,
    pub sigma_image_is_identity: bool,
}

/// Order of the image of `S_{r+1} → Sym(orbit)` and whether σ acts trivially on the orbit.
pub fn orbit_permutation_image(group: &SemidirectGroup, orbit: &DualOrbit) -> Result<PermutationImage> {
    let points = &orbit.result.orbit;
    let index: HashMap<&Vec<i64>, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let induced = |g: &Permutation| -> Result<Permutation> {
        let images = points
            .iter()
            .map(|p| {
                index
                    .get(&group.act_on_dual(g, p))
                    .copied()
                    .ok_or_else(|| Error::input("orbit is not closed under the action"))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    };
    let gens = group
        .sym_generators()
        .iter()
        .map(induced)
        .collect::<Result<Vec<_>>>()?;
    let id = Permutation::identity(points.len());
    let image_order = closure(&gens, &id, DEFAULT_ORBIT_CAP)?.len();
    let sigma_image_is_identity = induced(&group.sigma())?.is_identity();
    Ok(PermutationImage {
        orbit_size: points.len(),
        image_order,
        sigma_image_is_identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semidirect::build_group;

    fn sizes(r: usize, case: Case, m: u64) -> Vec<usize> {
        let mut s: Vec<usize> = dual_character_orbits(&build_group(r, case, m).unwrap())
            .unwrap()
            .iter()
            .map(DualOrbit::size)
            .collect();
        s.sort_unstable();
        s
    }

    #[test]
    fn orbit_sizes_quasi_mod_three() {
        assert_eq!(sizes(2, Case::Quasi, 3), vec![1, 2, 3, 3]);
        let orbits = dual_character_orbits(&build_group(2, Case::Quasi, 3).unwrap()).unwrap();
        assert_eq!(orbits[0].representative(), &[0, 0]);
        assert_eq!(orbits[0].stabilizer_order, 6);
        let two = orbits.iter().find(|o| o.size() == 2).unwrap();
        assert!(two.sigma_fixed);
        assert_eq!(two.stabilizer_order, 3);
    }

    #[test]
    fn projective_sigma_fixed() {
        let group = build_group(2, Case::Projective, 3).unwrap();
        let orbits = dual_character_orbits(&group).unwrap();
        let fixed: Vec<usize> = orbits.iter().filter(|o| o.sigma_fixed).map(DualOrbit::size).collect();
        assert_eq!(fixed.iter().sum::<usize>(), 9);
        let mut f = fixed.clone();
        f.sort_unstable();
        assert_eq!(f, vec![1, 2, 2, 2, 2]);
        assert_eq!(orbits.iter().map(DualOrbit::size).sum::<usize>(), 81);
    }

    #[test]
    fn torsion_examples() {
        let t = verify_torsion_claim(2, Case::Quasi, 3).unwrap();
        assert!(t.pass);
        let orders: Vec<u64> = t.sigma_fixed.iter().map(|(_, o)| *o).collect();
        assert_eq!(orders, vec![1, 3, 3]);
        let t = verify_torsion_claim(2, Case::Quasi, 2).unwrap();
        assert!(t.pass);
        assert_eq!(t.sigma_fixed.len(), 1);
        assert!(t.sigma_fixed[0].0.is_trivial());
        assert!(matches!(verify_torsion_claim(3, Case::Quasi, 4), Err(Error::OddRank(3))));
    }

    #[test]
    fn permutation_images() {
        let group = build_group(2, Case::Quasi, 3).unwrap();
        let orbits = dual_character_orbits(&group).unwrap();
        let trivial = orbit_permutation_image(&group, &orbits[0]).unwrap();
        assert_eq!(trivial.image_order, 1);
        let two = orbits.iter().find(|o| o.size() == 2).unwrap();
        let img = orbit_permutation_image(&group, two).unwrap();
        assert_eq!(img.image_order, 2);
        assert!(img.sigma_image_is_identity);
        let three = orbits.iter().find(|o| o.size() == 3).unwrap();
        let img = orbit_permutation_image(&group, three).unwrap();
        assert_eq!(img.image_order, 6);
        assert!(!img.sigma_image_is_identity);
    }
}
