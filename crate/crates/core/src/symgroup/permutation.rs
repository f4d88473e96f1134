use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::orbit::GroupElement;
use super::partition::Partition;
use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}` stored in one-line notation.
///
/// Composition follows functions: `(g * h)(x) = g(h(x))`. External
/// representations (display, one-line input, serialization) are 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-indexed images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::input(format!("{images:?} is not a permutation of 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-indexed one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::input("one-line notation is 1-indexed"));
        }
        Permutation::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// The cycle `(c_0 c_1 … c_k)` on `n` points, 1-indexed.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &p) in points.iter().enumerate() {
            let q = points[(i + 1) % points.len()];
            if p == 0 || p > n || q == 0 || q > n {
                return Err(Error::input(format!("cycle point out of range 1..={n}")));
            }
            images[p - 1] = q - 1;
        }
        Permutation::from_images(images)
    }

    /// Adjacent transposition `s_i = (i, i+1)`, `1 ≤ i < n`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "adjacent transposition s_{i} outside S_{n}");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// The long cycle `(1 2 … n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    /// A representative of the class with cycle type `lambda`, cycles on consecutive points.
    pub fn class_representative(lambda: &Partition) -> Self {
        let n = lambda.n();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in lambda.parts() {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        Permutation { images }
    }

    /// All `n!` permutations of `n` points, in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
            .expect("cycle lengths are positive")
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().element_order()
    }

    pub fn sign(&self) -> i64 {
        self.cycle_type().sign()
    }

    /// Indices `i_1, …, i_k` (1-indexed) with `self = s_{i_1} s_{i_2} ⋯ s_{i_k}`.
    ///
    /// Obtained by bubble-sorting the one-line notation with right
    /// multiplications by adjacent transpositions.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut line = self.images.clone();
        let mut swaps = Vec::new();
        let n = line.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(1 + pass) {
                if line[i] > line[i + 1] {
                    line.swap(i, i + 1);
                    swaps.push(i + 1);
                }
            }
        }
        // self · s_{j_1} ⋯ s_{j_k} = id, so self = s_{j_k} ⋯ s_{j_1}
        swaps.reverse();
        swaps
    }
}

impl GroupElement for Permutation {
    fn mul(&self, rhs: &Self) -> Self {
        self.compose(rhs)
    }

    fn inv(&self) -> Self {
        self.inverse()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let line = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&line).map_err(serde::de::Error::custom)
    }
}

pub fn cycle_type(g: &Permutation) -> Partition {
    g.cycle_type()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).cycle_type(), Partition::column(4));
        assert_eq!(Permutation::long_cycle(3).cycle_type(), Partition::row(3));
        let g = Permutation::from_one_line(&[2, 1, 4, 3]).unwrap();
        assert_eq!(g.cycle_type(), Partition::new(vec![2, 2]).unwrap());
    }

    #[test]
    fn long_cycle_is_product_of_adjacent() {
        for n in 2..8 {
            let product = (1..n).fold(Permutation::identity(n), |acc, i| {
                acc.compose(&Permutation::adjacent(n, i))
            });
            assert_eq!(product, Permutation::long_cycle(n));
        }
        assert_eq!(Permutation::long_cycle(3), Permutation::cycle(3, &[1, 2, 3]).unwrap());
    }

    #[test]
    fn adjacent_word_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..9 {
            for _ in 0..20 {
                let g = Permutation::random(n, &mut rng);
                let rebuilt = g
                    .adjacent_word()
                    .iter()
                    .fold(Permutation::identity(n), |acc, &i| {
                        acc.compose(&Permutation::adjacent(n, i))
                    });
                assert_eq!(rebuilt, g);
            }
        }
    }

    #[test]
    fn enumerates_all() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(5).len(), 120);
    }

    #[test]
    fn display_is_one_indexed() {
        assert_eq!(Permutation::long_cycle(3).to_string(), "(1 2 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
    }
}
