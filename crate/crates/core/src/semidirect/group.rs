use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intrep::{standard_rep, IntegerRep};
use crate::symgroup::{factorial, Permutation};

/// Largest quotient order for which elements are enumerated explicitly.
pub const MAX_ENUMERATED_ORDER: u64 = 10_000_000;
const CLASS_ENUMERATION_CAP: u64 = 10_000;

/// Which lattice the symmetric group acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    /// `Λ_r` itself, rank `r`.
    Quasi,
    /// Two copies `Λ_r ⊕ Λ_r`, rank `2r`, acted on block-diagonally.
    Projective,
}

impl Case {
    /// Number of copies of `Λ_r` in the lattice.
    pub fn copies(self) -> usize {
        match self {
            Case::Quasi => 1,
            Case::Projective => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Case::Quasi => "quasi",
            Case::Projective => "projective",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quasi" => Ok(Case::Quasi),
            "projective" => Ok(Case::Projective),
            other => Err(Error::input(format!("unknown case {other:?}; expected quasi or projective"))),
        }
    }
}

/// An element `(v, g)` of a lattice-by-symmetric-group semidirect product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QElement {
    pub v: Vec<i64>,
    pub g: Permutation,
}

/// `Z^k ⋊ S_{r+1}` (modulus 0) or its quotient `(Z/m)^k ⋊ S_{r+1}`.
#[derive(Debug, Clone)]
pub struct SemidirectGroup {
    r: usize,
    case: Case,
    modulus: u64,
    action: IntegerRep,
    matrices: HashMap<Permutation, Vec<Vec<i64>>>,
}

/// Validated `Γ_r` (modulus 0) or finite quotient; `r` must be even.
pub fn build_group(r: usize, case: Case, modulus: u64) -> Result<SemidirectGroup> {
    if r < 2 {
        return Err(Error::input("rank r must be at least 2"));
    }
    if r % 2 == 1 {
        return Err(Error::OddRank(r));
    }
    Error::check_cap("symmetric group degree r+1", (r + 1) as u128, 8)?;
    let rho = standard_rep(r)?;
    let action = match case {
        Case::Quasi => rho,
        Case::Projective => rho.direct_sum(&rho)?,
    };
    let matrices = Permutation::all(r + 1)
        .into_iter()
        .map(|g| {
            let m = action.evaluate(&g).to_i64_rows().expect("small entries");
            (g, m)
        })
        .collect();
    let group = SemidirectGroup {
        r,
        case,
        modulus,
        action,
        matrices,
    };
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0);
    group.check_group_laws(&mut rng, 50)?;
    Ok(group)
}

impl SemidirectGroup {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn lattice_rank(&self) -> usize {
        self.action.degree()
    }

    pub fn sym_degree(&self) -> usize {
        self.r + 1
    }

    pub fn action(&self) -> &IntegerRep {
        &self.action
    }

    pub fn matrix(&self, g: &Permutation) -> &[Vec<i64>] {
        &self.matrices[g]
    }

    /// `m^k (r+1)!`, or `None` for the infinite group.
    pub fn order(&self) -> Option<BigUint> {
        if self.modulus == 0 {
            return None;
        }
        Some(BigUint::from(self.modulus).pow(self.lattice_rank() as u32) * factorial(self.sym_degree()))
    }

    pub(crate) fn order_u64(&self) -> Option<u64> {
        self.order().and_then(|o| o.to_u64())
    }

    fn reduce(&self, x: i64) -> i64 {
        if self.modulus == 0 {
            x
        } else {
            x.rem_euclid(self.modulus as i64)
        }
    }

    /// `ρ(g) v`, reduced mod `m`.
    pub fn act(&self, g: &Permutation, v: &[i64]) -> Vec<i64> {
        self.matrices[g]
            .iter()
            .map(|row| self.reduce(row.iter().zip(v).map(|(a, b)| a * b).sum()))
            .collect()
    }

    pub fn identity(&self) -> QElement {
        QElement {
            v: vec![0; self.lattice_rank()],
            g: Permutation::identity(self.sym_degree()),
        }
    }

    pub fn element(&self, v: Vec<i64>, g: Permutation) -> QElement {
        QElement {
            v: v.into_iter().map(|x| self.reduce(x)).collect(),
            g,
        }
    }

    /// `(v, g)(w, h) = (v + ρ(g) w, g h)`.
    pub fn mul(&self, a: &QElement, b: &QElement) -> QElement {
        let gw = self.act(&a.g, &b.v);
        QElement {
            v: a.v.iter().zip(gw).map(|(x, y)| self.reduce(x + y)).collect(),
            g: a.g.compose(&b.g),
        }
    }

    pub fn inv(&self, a: &QElement) -> QElement {
        let g_inv = a.g.inverse();
        QElement {
            v: self.act(&g_inv, &a.v).into_iter().map(|x| self.reduce(-x)).collect(),
            g: g_inv,
        }
    }

    /// Lattice generators `t_i = (e_i, 1)` followed by `s_a = (0, s_a)`.
    pub fn generators(&self) -> Vec<QElement> {
        let k = self.lattice_rank();
        let n = self.sym_degree();
        let mut gens: Vec<QElement> = (0..k)
            .map(|i| {
                let mut v = vec![0; k];
                v[i] = 1;
                self.element(v, Permutation::identity(n))
            })
            .collect();
        gens.extend((1..n).map(|a| QElement {
            v: vec![0; k],
            g: Permutation::adjacent(n, a),
        }));
        gens
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> QElement {
        let bound = if self.modulus == 0 { 7 } else { self.modulus as i64 };
        let v = (0..self.lattice_rank())
            .map(|_| rng.gen_range(0..bound) - if self.modulus == 0 { 3 } else { 0 })
            .collect();
        self.element(v, Permutation::random(self.sym_degree(), rng))
    }

    /// Associativity, identity and inverse laws on random triples.
    pub fn check_group_laws<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize) -> Result<()> {
        let e = self.identity();
        for _ in 0..samples {
            let (a, b, c) = (self.random_element(rng), self.random_element(rng), self.random_element(rng));
            if self.mul(&self.mul(&a, &b), &c) != self.mul(&a, &self.mul(&b, &c)) {
                return Err(Error::internal("semidirect multiplication is not associative"));
            }
            if self.mul(&a, &e) != a || self.mul(&e, &a) != a {
                return Err(Error::internal("identity law fails"));
            }
            if self.mul(&a, &self.inv(&a)) != e || self.mul(&self.inv(&a), &a) != e {
                return Err(Error::internal("inverse law fails"));
            }
        }
        Ok(())
    }

    /// All lattice vectors mod `m`, lexicographic.
    pub fn lattice_vectors(&self) -> Result<Vec<Vec<i64>>> {
        if self.modulus == 0 {
            return Err(Error::input("the infinite group has no finite lattice quotient"));
        }
        let k = self.lattice_rank() as u32;
        let total = (self.modulus as u128).pow(k);
        Error::check_cap("lattice quotient size", total, 1_000_000)?;
        let m = self.modulus as i64;
        Ok((0..total as u64)
            .map(|mut idx| {
                let mut v = vec![0; k as usize];
                for slot in v.iter_mut().rev() {
                    *slot = (idx % m as u64) as i64;
                    idx /= m as u64;
                }
                v
            })
            .collect())
    }

    /// Every element, lattice part major.
    pub fn elements(&self) -> Result<Vec<QElement>> {
        let order = self
            .order_u64()
            .ok_or_else(|| Error::input("cannot enumerate an infinite group"))?;
        Error::check_cap("quotient order", order as u128, MAX_ENUMERATED_ORDER as u128)?;
        let perms = Permutation::all(self.sym_degree());
        let mut out = Vec::with_capacity(order as usize);
        for v in self.lattice_vectors()? {
            for g in &perms {
                out.push(QElement { v: v.clone(), g: g.clone() });
            }
        }
        Ok(out)
    }

    /// Conjugacy classes by brute force (orders up to 10⁴), each sorted, classes
    /// ordered by their smallest element.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<QElement>>> {
        let order = self
            .order_u64()
            .ok_or_else(|| Error::input("cannot enumerate an infinite group"))?;
        Error::check_cap("quotient order for class enumeration", order as u128, CLASS_ENUMERATION_CAP as u128)?;
        let gens = self.generators();
        let gen_invs: Vec<QElement> = gens.iter().map(|g| self.inv(g)).collect();
        let mut assigned: HashSet<QElement> = HashSet::new();
        let mut classes = Vec::new();
        for x in self.elements()? {
            if assigned.contains(&x) {
                continue;
            }
            let mut class = vec![x.clone()];
            assigned.insert(x.clone());
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for (g, gi) in gens.iter().zip(&gen_invs) {
                    let z = self.mul(&self.mul(g, &y), gi);
                    if assigned.insert(z.clone()) {
                        class.push(z.clone());
                        queue.push_back(z);
                    }
                }
            }
            class.sort();
            classes.push(class);
        }
        Ok(classes)
    }
}
