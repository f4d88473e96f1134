use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_partitions`].
pub const MAX_PARTITION_N: usize = 40;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::input(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::input(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(multiplicity of i)` for `i = 1..=largest part`, index 0 unused.
    pub fn multiplicities(&self) -> Vec<usize> {
        let top = self.parts.first().copied().unwrap_or(0);
        let mut m = vec![0; top + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        let top = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=top)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Sign of any permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.n() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Order of any permutation with this cycle type.
    pub fn element_order(&self) -> u64 {
        self.parts
            .iter()
            .fold(1u64, |acc, &p| num_integer::lcm(acc, p as u64))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    Error::check_cap("partition size n", n as u128, MAX_PARTITION_N as u128)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// `z_λ = ∏ i^{m_i} m_i!`, the order of the centralizer of an element of cycle type `λ`.
pub fn centralizer_order(lambda: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (i, &m) in lambda.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= BigUint::from(i) * BigUint::from(k);
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(3).unwrap(),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
    }

    #[test]
    fn enumeration_cap() {
        assert!(enumerate_partitions(40).is_ok());
        assert!(matches!(
            enumerate_partitions(41),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn rejects_malformed() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_order(&p(&[1, 1, 1])), BigUint::from(6u32));
        assert_eq!(centralizer_order(&p(&[3])), BigUint::from(3u32));
        assert_eq!(centralizer_order(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(centralizer_order(&p(&[2, 2])), BigUint::from(8u32));
    }

    #[test]
    fn conjugate_is_involution() {
        for lambda in enumerate_partitions(9).unwrap() {
            assert_eq!(lambda.conjugate().conjugate(), lambda);
            assert_eq!(lambda.conjugate().n(), 9);
        }
    }
}
