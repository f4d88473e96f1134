use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};

use super::dixon::modular_characters;
use super::finite_group::FiniteGroup;
use super::symmetric::SymmetricCharacterTable;
use crate::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};

/// Character table of a finite group with values in `Q(ζ_N)`, `N` the exponent.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub descriptor: String,
    pub order: u64,
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<u64>,
    pub row_labels: Vec<String>,
    pub rows: Vec<Vec<Cyclotomic>>,
    pub field: Arc<CyclotomicField>,
}

impl CharacterTable {
    pub fn exponent(&self) -> u64 {
        self.field.conductor()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows
            .iter()
            .map(|row| {
                let d = row[0].to_integer().expect("degrees are integers");
                u64::try_from(d).expect("degrees are positive")
            })
            .collect()
    }

    /// `(1/|G|) Σ |C| f(C) conj(g(C))`.
    pub fn inner_product(&self, f: &[Cyclotomic], g: &[Cyclotomic]) -> Result<Cyclotomic> {
        if f.len() != self.class_sizes.len() || g.len() != self.class_sizes.len() {
            return Err(Error::input("class function length does not match the class list"));
        }
        let mut acc = Cyclotomic::zero(&self.field);
        for ((a, b), &size) in f.iter().zip(g).zip(&self.class_sizes) {
            let term = &a.embed(&self.field) * &b.embed(&self.field).conj();
            acc = &acc + &term.scale(&BigRational::from_integer(size.into()));
        }
        Ok(acc.scale(&BigRational::new(BigInt::one(), self.order.into())))
    }

    /// Exact row and column orthogonality and `Σ χ(1)² = |G|`.
    pub fn check_orthogonality(&self) -> Result<()> {
        let k = self.class_sizes.len();
        if self.rows.len() != k {
            return Err(Error::internal(format!(
                "{} irreducibles for {k} classes",
                self.rows.len()
            )));
        }
        let one = Cyclotomic::from_integer(&self.field, 1);
        for i in 0..k {
            for j in i..k {
                let ip = self.inner_product(&self.rows[i], &self.rows[j])?;
                let ok = if i == j { ip == one } else { ip.is_zero() };
                if !ok {
                    return Err(Error::internal(format!(
                        "row orthogonality fails for {} and {}: {ip}",
                        self.row_labels[i], self.row_labels[j]
                    )));
                }
            }
        }
        let conj: Vec<Vec<Cyclotomic>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cyclotomic::conj).collect())
            .collect();
        for c in 0..k {
            for d in c..k {
                let mut acc = Cyclotomic::zero(&self.field);
                for i in 0..k {
                    acc = &acc + &(&self.rows[i][c] * &conj[i][d]);
                }
                let expected = if c == d {
                    Cyclotomic::from_integer(&self.field, (self.order / self.class_sizes[c]) as i64)
                } else {
                    Cyclotomic::zero(&self.field)
                };
                if acc != expected {
                    return Err(Error::internal(format!(
                        "column orthogonality fails for classes {} and {}",
                        self.class_labels[c], self.class_labels[d]
                    )));
                }
            }
        }
        let sum_sq: u64 = self.degrees().iter().map(|d| d * d).sum();
        if sum_sq != self.order {
            return Err(Error::internal("sum of squared degrees differs from the group order"));
        }
        Ok(())
    }

    /// `{classes, class_sizes, rows: {label: [{conductor, coeffs}]}}`.
    pub fn to_json(&self) -> Value {
        let mut rows = Map::new();
        for (label, row) in self.row_labels.iter().zip(&self.rows) {
            rows.insert(label.clone(), serde_json::to_value(row).expect("serializable"));
        }
        json!({
            "group": self.descriptor,
            "order": self.order.to_string(),
            "exponent": self.exponent().to_string(),
            "classes": self.class_labels,
            "class_sizes": self.class_sizes.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "rows": rows,
        })
    }
}

impl From<&SymmetricCharacterTable> for CharacterTable {
    fn from(t: &SymmetricCharacterTable) -> Self {
        let field = CyclotomicField::new(1);
        CharacterTable {
            descriptor: format!("S{}", t.n()),
            order: t.order(),
            class_labels: t.classes().iter().map(ToString::to_string).collect(),
            class_sizes: t.class_sizes().to_vec(),
            row_labels: t.irreducibles().iter().map(ToString::to_string).collect(),
            rows: t
                .rows()
                .iter()
                .map(|row| row.iter().map(|&v| Cyclotomic::from_integer(&field, v)).collect())
                .collect(),
            field,
        }
    }
}

/// Irreducible characters of a small finite group.
///
/// Common eigenvectors of the class matrices are found modulo a prime
/// `p ≡ 1 (mod exponent)`, `p > |G|`; each character value is then recovered
/// exactly from the eigenvalue multiplicities of `ρ(g)`, which are small
/// non-negative integers. The result is certified by exact orthogonality
/// checks in `Q(ζ_N)` before it is returned.
///
/// Classes are ordered as in [`FiniteGroup::classes`]; rows are sorted by
/// degree with the trivial character first.
pub fn small_group_irreducible_characters(group: &FiniteGroup, descriptor: &str) -> Result<CharacterTable> {
    let (exponent, modular) = modular_characters(group)?;
    let field = CyclotomicField::new(exponent);
    let mut rows: Vec<(u64, Vec<Cyclotomic>)> = modular
        .into_iter()
        .map(|mc| {
            let row = mc
                .values
                .iter()
                .map(|counts| Cyclotomic::from_exponent_counts(&field, counts))
                .collect();
            (mc.degree, row)
        })
        .collect();
    let is_trivial = |row: &[Cyclotomic]| row.iter().all(|v| v.to_integer() == Some(BigInt::one()));
    rows.sort_by_cached_key(|(d, row)| {
        let key: Vec<String> = row.iter().map(|v| format!("{:?}", v.coefficients())).collect();
        (*d, !is_trivial(row), key)
    });

    let classes = group.classes();
    let table = CharacterTable {
        descriptor: descriptor.to_string(),
        order: group.order() as u64,
        class_labels: classes
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{}{}", group.element_order(c[0]), class_suffix(i, classes, group)))
            .collect(),
        class_sizes: classes.iter().map(|c| c.len() as u64).collect(),
        row_labels: (1..=rows.len()).map(|i| format!("X.{i}")).collect(),
        rows: rows.into_iter().map(|(_, r)| r).collect(),
        field,
    };
    table.check_orthogonality()?;
    Ok(table)
}

/// ATLAS-style class names: element order followed by a letter among classes of that order.
fn class_suffix(i: usize, classes: &[Vec<usize>], group: &FiniteGroup) -> String {
    let o = group.element_order(classes[i][0]);
    let rank = classes[..i]
        .iter()
        .filter(|c| group.element_order(c[0]) == o)
        .count();
    let mut s = String::new();
    let mut r = rank;
    loop {
        s.insert(0, (b'a' + (r % 26) as u8) as char);
        if r < 26 {
            break;
        }
        r = r / 26 - 1;
    }
    s
}

impl CharacterTable {
    pub fn is_rational(&self) -> bool {
        self.rows.iter().flatten().all(|v| v.to_rational().is_some())
    }
}
