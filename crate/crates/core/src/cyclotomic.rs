//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`, stored in the power basis
//! `1, ζ, …, ζ^{φ(N)-1}` and reduced modulo the `N`-th cyclotomic polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

/// The field `Q(ζ_N)` together with the reduction data for its power basis.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    conductor: u64,
    degree: usize,
    /// `reduction[k]` = coordinates of `ζ^k` for `0 ≤ k < N`.
    reduction: Vec<Vec<i64>>,
}

impl CyclotomicField {
    pub fn new(conductor: u64) -> Arc<Self> {
        assert!(conductor >= 1, "cyclotomic conductor must be positive");
        let phi = cyclotomic_polynomial(conductor);
        let degree = phi.len() - 1;
        let n = conductor as usize;
        let mut reduction = Vec::with_capacity(n);
        let mut current = vec![0i64; degree];
        current[0] = 1;
        for _ in 0..n {
            reduction.push(current.clone());
            // multiply by ζ and reduce by the monic Φ_N
            let top = current[degree - 1];
            for i in (1..degree).rev() {
                current[i] = current[i - 1] - top * phi[i];
            }
            current[0] = -top * phi[0];
        }
        Arc::new(CyclotomicField {
            conductor,
            degree,
            reduction,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// `φ(N)`.
    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Coefficients of `Φ_n`, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = exact_divide(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = num.len() - den.len();
    let mut quot = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclotomic {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree],
        }
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: BigRational) -> Self {
        let mut z = Cyclotomic::zero(field);
        z.coeffs[0] = q;
        z
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, k: i64) -> Self {
        Cyclotomic::from_rational(field, BigRational::from_integer(k.into()))
    }

    /// `ζ_N^k`.
    pub fn root_of_unity(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let n = field.conductor as i64;
        let e = k.rem_euclid(n) as usize;
        Cyclotomic {
            field: field.clone(),
            coeffs: field.reduction[e]
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        }
    }

    /// Builds `Σ_k mults[k] ζ_N^k` from integer multiplicities indexed by exponent.
    pub fn from_exponent_counts(field: &Arc<CyclotomicField>, counts: &[(u64, i64)]) -> Self {
        let mut acc = vec![BigInt::zero(); field.degree];
        for &(e, m) in counts {
            if m == 0 {
                continue;
            }
            let e = (e % field.conductor) as usize;
            for (a, &c) in acc.iter_mut().zip(&field.reduction[e]) {
                *a += BigInt::from(c) * m;
            }
        }
        Cyclotomic {
            field: field.clone(),
            coeffs: acc.into_iter().map(BigRational::from_integer).collect(),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if this element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Image under `ζ ↦ ζ^k` for `k` coprime to `N`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.field.conductor as i64;
        debug_assert_eq!(k.rem_euclid(n).gcd(&n), 1);
        let mut acc = vec![BigRational::zero(); self.field.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as i64 * k).rem_euclid(n) as usize;
            for (a, &r) in acc.iter_mut().zip(&self.field.reduction[e]) {
                if r != 0 {
                    *a += c * BigRational::from_integer(r.into());
                }
            }
        }
        Cyclotomic {
            field: self.field.clone(),
            coeffs: acc,
        }
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The same number written in `Q(ζ_M)`, `N | M`.
    pub fn embed(&self, target: &Arc<CyclotomicField>) -> Self {
        if Arc::ptr_eq(&self.field, target) || self.field.conductor == target.conductor {
            return Cyclotomic {
                field: target.clone(),
                coeffs: self.coeffs.clone(),
            };
        }
        assert!(
            target.conductor.is_multiple_of(self.field.conductor),
            "cannot embed Q(ζ_{}) into Q(ζ_{})",
            self.field.conductor,
            target.conductor
        );
        let step = target.conductor / self.field.conductor;
        let mut acc = vec![BigRational::zero(); target.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((i as u64 * step) % target.conductor) as usize;
            for (a, &r) in acc.iter_mut().zip(&target.reduction[e]) {
                if r != 0 {
                    *a += c * BigRational::from_integer(r.into());
                }
            }
        }
        Cyclotomic {
            field: target.clone(),
            coeffs: acc,
        }
    }

    /// Floating-point value under `ζ_N ↦ exp(2πi/N)`; display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.field.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * i as f64 / n;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }

    fn check_field(&self, other: &Cyclotomic) {
        assert_eq!(
            self.field.conductor, other.field.conductor,
            "mixed conductors in cyclotomic arithmetic; embed first"
        );
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.field.conductor == other.field.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = num_integer::lcm(self.field.conductor, other.field.conductor);
        let field = CyclotomicField::new(m);
        self.embed(&field).coeffs == other.embed(&field).coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_field(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_field(rhs);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_field(rhs);
        let n = self.field.conductor as usize;
        let mut by_power = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    by_power[(i + j) % n] += a * b;
                }
            }
        }
        let d = self.field.degree;
        let mut coeffs: Vec<BigRational> = by_power[..d.min(n)].to_vec();
        coeffs.resize(d, BigRational::zero());
        for (k, c) in by_power.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (a, &r) in coeffs.iter_mut().zip(&self.field.reduction[k]) {
                if r != 0 {
                    *a += c * BigRational::from_integer(r.into());
                }
            }
        }
        Cyclotomic {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let n = self.field.conductor;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if i == 0 {
                c.abs().to_string()
            } else {
                let unit = if i == 1 { format!("z{n}") } else { format!("z{n}^{i}") };
                if c.abs().is_one() {
                    unit
                } else {
                    format!("{}*{unit}", c.abs())
                }
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => write!(f, "{term}")?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("conductor", &self.field.conductor)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(60).len() - 1, 16);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [2u64, 3, 5, 6, 12, 30] {
            let f = CyclotomicField::new(n);
            let mut sum = Cyclotomic::zero(&f);
            for k in 0..n as i64 {
                sum = &sum + &Cyclotomic::root_of_unity(&f, k);
            }
            assert!(sum.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn multiplication_matches_exponents() {
        let f = CyclotomicField::new(12);
        for a in 0..12 {
            for b in 0..12 {
                let prod = &Cyclotomic::root_of_unity(&f, a) * &Cyclotomic::root_of_unity(&f, b);
                assert_eq!(prod, Cyclotomic::root_of_unity(&f, a + b));
            }
        }
    }

    #[test]
    fn conjugation_and_norm() {
        let f = CyclotomicField::new(3);
        let z = Cyclotomic::root_of_unity(&f, 1);
        assert_eq!(z.conj(), Cyclotomic::root_of_unity(&f, 2));
        assert_eq!((&z * &z.conj()).to_rational(), Some(BigRational::one()));
        // 1 + ζ_3 + ζ_3^2 = 0, so ζ_3 + ζ_3^2 = -1 is rational
        let s = &z + &z.conj();
        assert_eq!(s.to_integer(), Some(BigInt::from(-1)));
    }

    #[test]
    fn embedding_is_compatible() {
        let f3 = CyclotomicField::new(3);
        let f6 = CyclotomicField::new(6);
        let z3 = Cyclotomic::root_of_unity(&f3, 1);
        assert_eq!(z3.embed(&f6), Cyclotomic::root_of_unity(&f6, 2));
        assert_eq!(z3, Cyclotomic::root_of_unity(&f6, 2));
        assert_ne!(z3, Cyclotomic::root_of_unity(&f6, 1));
    }
}
