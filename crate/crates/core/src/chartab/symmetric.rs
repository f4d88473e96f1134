use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::symgroup::{centralizer_order, enumerate_partitions, factorial, Partition};

/// Largest degree accepted by [`mn_character_value`].
pub const MAX_MN_DEGREE: usize = 12;
/// Largest degree accepted by [`character_table`].
pub const MAX_TABLE_DEGREE: usize = 10;

/// Conjugacy classes of `S_n` in column order: lexicographically increasing,
/// so the identity class `(1^n)` comes first and `(n)` last.
pub(crate) fn class_order(n: usize) -> Vec<Partition> {
    let mut classes = enumerate_partitions(n).expect("degree checked by caller");
    classes.reverse();
    classes
}

/// `χ^λ(μ)` by border-strip removal on β-sets.
pub fn mn_character_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.n() != mu.n() {
        return Err(Error::input(format!(
            "partitions {lambda} and {mu} have different sizes"
        )));
    }
    Error::check_cap("Murnaghan-Nakayama degree", lambda.n() as u128, MAX_MN_DEGREE as u128)?;
    let mut memo = HashMap::new();
    Ok(mn_with_memo(lambda, mu, &mut memo))
}

fn mn_with_memo(lambda: &Partition, mu: &Partition, memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let len = lambda.len();
    // β_i = λ_i + (ℓ - 1 - i), strictly decreasing
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    strip(&beta, mu.parts(), 0, memo)
}

fn strip(beta: &[usize], mu: &[usize], k: usize, memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if k == mu.len() {
        return 1;
    }
    let key = (beta.to_vec(), mu[k..].to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let h = mu[k];
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < h || beta.contains(&(b - h)) {
            continue;
        }
        let target = b - h;
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next: Vec<usize> = beta.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * strip(&next, mu, k + 1, memo);
    }
    memo.insert(key, total);
    total
}

/// A rational-valued class function on `S_n`, one value per class in column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<BigRational>,
}

impl ClassFunction {
    pub fn new(n: usize, values: Vec<BigRational>) -> Result<Self> {
        let classes = enumerate_partitions(n)?.len();
        if values.len() != classes {
            return Err(Error::input(format!(
                "class function on S_{n} needs {classes} values, got {}",
                values.len()
            )));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn from_integers(n: usize, values: &[i64]) -> Result<Self> {
        ClassFunction::new(
            n,
            values.iter().map(|&v| BigRational::from_integer(v.into())).collect(),
        )
    }

    pub fn constant(n: usize, c: i64) -> Result<Self> {
        let k = enumerate_partitions(n)?.len();
        ClassFunction::from_integers(n, &vec![c; k])
    }

    /// Evaluates `f` at one representative of each class.
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> BigRational) -> Result<Self> {
        Error::check_cap("symmetric group degree", n as u128, crate::symgroup::MAX_PARTITION_N as u128)?;
        let values = class_order(n).iter().map(&mut f).collect();
        Ok(ClassFunction { n, values })
    }

    pub fn degree_n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> Vec<Partition> {
        class_order(self.n)
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value_at(&self, class: &Partition) -> Option<&BigRational> {
        class_order(self.n)
            .iter()
            .position(|c| c == class)
            .map(|i| &self.values[i])
    }

    /// Value at the identity class.
    pub fn dimension(&self) -> &BigRational {
        &self.values[0]
    }

    pub fn integer_values(&self) -> Option<Vec<BigInt>> {
        self.values
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }

    fn zip_with(&self, other: &ClassFunction, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::input(format!(
                "class functions on S_{} and S_{}",
                self.n, other.n
            )));
        }
        Ok(ClassFunction {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product (character of the tensor product).
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let classes: Vec<String> = class_order(self.n).iter().map(ToString::to_string).collect();
        let values: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        json!({ "classes": classes, "values": values }).serialize(s)
    }
}

/// `(1/n!) Σ_classes |C| f(C) g(C)`; characters of `S_n` are real, so no conjugation is needed.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.n != g.n {
        return Err(Error::input(format!(
            "inner product of class functions on S_{} and S_{}",
            f.n, g.n
        )));
    }
    let order = BigInt::from(factorial(f.n));
    let mut acc = BigRational::zero();
    for ((class, a), b) in class_order(f.n).iter().zip(&f.values).zip(&g.values) {
        let size = &order / BigInt::from(centralizer_order(class));
        acc += BigRational::from_integer(size) * a * b;
    }
    Ok(acc / BigRational::from_integer(order))
}

/// The full integer character table of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricCharacterTable {
    n: usize,
    /// Row labels, reverse lexicographic: `(n)` (trivial) first.
    irreducibles: Vec<Partition>,
    /// Column labels, identity class first.
    classes: Vec<Partition>,
    class_sizes: Vec<u64>,
    values: Vec<Vec<i64>>,
}

pub fn character_table(n: usize) -> Result<SymmetricCharacterTable> {
    if n == 0 {
        return Err(Error::input("character table of S_0 is not supported; n >= 1"));
    }
    Error::check_cap("character table degree", n as u128, MAX_TABLE_DEGREE as u128)?;
    let irreducibles = enumerate_partitions(n)?;
    let classes = class_order(n);
    let order = factorial(n);
    let class_sizes = classes
        .iter()
        .map(|c| (&order / centralizer_order(c)).to_u64().expect("n <= 10"))
        .collect();
    let mut memo = HashMap::new();
    let values = irreducibles
        .iter()
        .map(|lambda| {
            classes
                .iter()
                .map(|mu| mn_with_memo(lambda, mu, &mut memo))
                .collect()
        })
        .collect();
    Ok(SymmetricCharacterTable {
        n,
        irreducibles,
        classes,
        class_sizes,
        values,
    })
}

impl SymmetricCharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    pub fn irreducibles(&self) -> &[Partition] {
        &self.irreducibles
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[i64]> {
        self.irreducibles
            .iter()
            .position(|l| l == lambda)
            .map(|i| self.values[i].as_slice())
    }

    pub fn character(&self, lambda: &Partition) -> Option<ClassFunction> {
        self.row(lambda)
            .map(|row| ClassFunction::from_integers(self.n, row).expect("row length matches"))
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.values.iter().map(|row| row[0]).collect()
    }

    /// Exact check of row orthogonality, column orthogonality and `Σ χ(1)² = |G|`.
    pub fn check_orthogonality(&self) -> Result<()> {
        let order = self.order() as i128;
        let k = self.classes.len();
        if self.values.len() != k {
            return Err(Error::internal("character table is not square"));
        }
        for i in 0..k {
            for j in 0..k {
                let s: i128 = (0..k)
                    .map(|c| self.class_sizes[c] as i128 * self.values[i][c] as i128 * self.values[j][c] as i128)
                    .sum();
                let expected = if i == j { order } else { 0 };
                if s != expected {
                    return Err(Error::internal(format!(
                        "row orthogonality fails for {} and {}",
                        self.irreducibles[i], self.irreducibles[j]
                    )));
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let s: i128 = (0..k)
                    .map(|i| self.values[i][c] as i128 * self.values[i][d] as i128)
                    .sum();
                let expected = if c == d { order / self.class_sizes[c] as i128 } else { 0 };
                if s != expected {
                    return Err(Error::internal(format!(
                        "column orthogonality fails for {} and {}",
                        self.classes[c], self.classes[d]
                    )));
                }
            }
        }
        let sum_sq: i128 = self.degrees().iter().map(|&d| d as i128 * d as i128).sum();
        if sum_sq != order {
            return Err(Error::internal("sum of squared degrees differs from the group order"));
        }
        Ok(())
    }

    /// `{classes, class_sizes, rows: {partition: [values]}}`, all numbers as decimal strings.
    pub fn to_json(&self) -> Value {
        let mut rows = Map::new();
        for (lambda, row) in self.irreducibles.iter().zip(&self.values) {
            rows.insert(
                lambda.to_string(),
                Value::Array(row.iter().map(|v| Value::String(v.to_string())).collect()),
            );
        }
        json!({
            "group": format!("S{}", self.n),
            "classes": self.classes.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "class_sizes": self.class_sizes.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "rows": rows,
        })
    }
}

/// Multiplicities of the irreducible characters of `S_n` in a class function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// `(λ, m_λ)` in row order; zero multiplicities included.
    pub multiplicities: Vec<(Partition, BigInt)>,
    /// Set when some multiplicity is negative.
    pub is_virtual: bool,
}

impl Decomposition {
    pub fn multiplicity(&self, lambda: &Partition) -> BigInt {
        self.multiplicities
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, m)| m.clone())
            .unwrap_or_default()
    }
}

pub fn decompose_class_function(f: &ClassFunction) -> Result<Decomposition> {
    let table = character_table(f.n)?;
    let mut multiplicities = Vec::new();
    for lambda in table.irreducibles() {
        let chi = table.character(lambda).expect("row exists");
        let m = inner_product(f, &chi)?;
        if !m.is_integer() {
            return Err(Error::NotVirtualCharacter {
                label: lambda.to_string(),
                value: m.to_string(),
            });
        }
        multiplicities.push((lambda.clone(), m.to_integer()));
    }
    let is_virtual = multiplicities.iter().any(|(_, m)| m.is_negative());
    Ok(Decomposition {
        multiplicities,
        is_virtual,
    })
}
