use std::collections::HashMap;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest group order handled by the generic character-table machinery.
pub const MAX_GENERIC_ORDER: usize = 400;

/// A finite group stored as a validated Cayley table. Element 0 is the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    element_order: Vec<u64>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table: closure, identity at index 0, cancellation
    /// and associativity (exhaustive up to order 100, sampled above).
    pub fn from_cayley_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::input("empty Cayley table"));
        }
        Error::check_cap("group order", n as u128, MAX_GENERIC_ORDER as u128)?;
        for row in &table {
            if row.len() != n {
                return Err(Error::input("Cayley table is not square"));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(Error::input("Cayley table row is not a permutation"));
                }
                seen[x] = true;
            }
        }
        for (i, row) in table.iter().enumerate() {
            if row[0] != i || table[0][i] != i {
                return Err(Error::input("element 0 is not the identity"));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| table[table[a][b]][c] == table[a][table[b][c]];
        if n <= 100 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::input(format!("multiplication not associative at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..200_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::input(format!("multiplication not associative at ({a},{b},{c})")));
                }
            }
        }

        let inverse: Vec<usize> = (0..n)
            .map(|a| table[a].iter().position(|&x| x == 0).expect("row is a permutation"))
            .collect();
        let element_order = (0..n)
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != 0 {
                    x = table[x][a];
                    k += 1;
                }
                k
            })
            .collect();

        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for g in 0..n {
                let y = table[table[g][x]][inverse[g]];
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    class.push(y);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }

        Ok(FiniteGroup {
            table,
            inverse,
            element_order,
            classes,
            class_of,
        })
    }

    /// Enumerates the group generated by `generators` under `mul` and returns it
    /// with the element list (index `i` of the group is `elements[i]`).
    pub fn generate<E, F>(identity: E, generators: &[E], mul: F) -> Result<(FiniteGroup, Vec<E>)>
    where
        E: Clone + Eq + Hash,
        F: Fn(&E, &E) -> E,
    {
        for g in generators {
            if mul(&identity, g) != *g || mul(g, &identity) != *g {
                return Err(Error::input("supplied identity is not a two-sided identity"));
            }
        }
        let mut index: HashMap<E, usize> = HashMap::from([(identity.clone(), 0)]);
        let mut elements = vec![identity];
        let mut i = 0;
        while i < elements.len() {
            for g in generators {
                let x = mul(&elements[i], g);
                if !index.contains_key(&x) {
                    Error::check_cap("group order", elements.len() as u128 + 1, MAX_GENERIC_ORDER as u128)?;
                    index.insert(x.clone(), elements.len());
                    elements.push(x);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let x = mul(&elements[a], &elements[b]);
                table[a][b] = *index
                    .get(&x)
                    .ok_or_else(|| Error::input("multiplication leaves the generated set"))?;
            }
        }
        Ok((FiniteGroup::from_cayley_table(table)?, elements))
    }

    /// The cyclic group `Z/n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_cayley_table(table)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        (0..k).fold(0, |acc, _| self.table[acc][a])
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.element_order[a]
    }

    pub fn exponent(&self) -> u64 {
        self.element_order
            .iter()
            .fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Conjugacy classes; class 0 is `{identity}`.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }
}
