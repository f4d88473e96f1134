//! Modular eigenvector computation in the class algebra, followed by exact
//! reconstruction of character values as sums of roots of unity.

use crate::error::{Error, Result};

use super::finite_group::FiniteGroup;

/// Character values of one irreducible, as eigenvalue multiplicities:
/// `values[c]` lists `(e, m)` meaning `χ(g_c) = Σ m ζ_N^e`.
pub(crate) struct ModularCharacter {
    pub degree: u64,
    pub values: Vec<Vec<(u64, i64)>>,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > order`.
pub(crate) fn choose_prime(order: u64, exponent: u64) -> u64 {
    let mut p = exponent * (order / exponent + 1) + 1;
    while !is_prime(p) {
        p += exponent;
    }
    p
}

fn primitive_root_of_unity(n: u64, p: u64) -> u64 {
    let factors = prime_factors(n);
    (2..p)
        .map(|a| pow_mod(a, (p - 1) / n, p))
        .find(|&z| factors.iter().all(|&q| pow_mod(z, n / q, p) != 1))
        .expect("p ≡ 1 mod n has a primitive n-th root of unity")
}

/// Column basis kept in reduced form: `pivots[i]` is a row where column `i`
/// has a 1 and every other column a 0.
struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_columns(mut cols: Vec<Vec<u64>>, p: u64) -> Subspace {
        let mut pivots = Vec::new();
        for i in 0..cols.len() {
            let r = (0..cols[i].len())
                .find(|&r| cols[i][r] != 0 && !pivots.contains(&r))
                .expect("columns are independent");
            let inv = inv_mod(cols[i][r], p);
            for x in cols[i].iter_mut() {
                *x = *x * inv % p;
            }
            for j in 0..cols.len() {
                if j != i && cols[j][r] != 0 {
                    let f = cols[j][r];
                    let pivot_col = cols[i].clone();
                    for (x, y) in cols[j].iter_mut().zip(&pivot_col) {
                        *x = (*x + p - f * y % p) % p;
                    }
                }
            }
            pivots.push(r);
        }
        Subspace { basis: cols, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Kernel of a square matrix mod p.
fn kernel_mod(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let m = mat.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<u64>> = mat.to_vec();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for c in 0..m {
        let Some(r) = (row..n).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(row, r);
        let inv = inv_mod(a[row][c], p);
        for x in a[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r2 in 0..n {
            if r2 != row && a[r2][c] != 0 {
                let f = a[r2][c];
                let pr = a[row].clone();
                for (x, y) in a[r2].iter_mut().zip(&pr) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivot_cols.push(c);
        row += 1;
    }
    (0..m)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![0; m];
            v[free] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - a[r][free]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial mod p via Hessenberg reduction, constant term first.
fn charpoly_mod(mat: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = mat.len();
    let mut h: Vec<Vec<u64>> = mat.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for i in m + 1..n {
            if h[i][m - 1] == 0 {
                continue;
            }
            let t = h[i][m - 1] * inv % p;
            for j in 0..n {
                let v = t * h[m][j] % p;
                h[i][j] = (h[i][j] + p - v) % p;
            }
            for row in h.iter_mut() {
                let v = t * row[i] % p;
                row[m] = (row[m] + v) % p;
            }
        }
    }
    // polys[k] = charpoly of the leading k×k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let kk = k - 1;
        // (x - h[kk][kk]) * polys[k-1]
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - h[kk][kk] * c % p) % p;
        }
        let mut prod = 1u64;
        for i in 1..k {
            // subtract h[kk-i][kk] * Π_{j=kk-i+1}^{kk} h[j][j-1] * polys[kk-i]
            prod = prod * h[kk - i + 1][kk - i] % p;
            let coef = h[kk - i][kk] * prod % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[kk - i].iter().enumerate() {
                next[d] = (next[d] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn roots_mod(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0)
        .collect()
}

pub(crate) fn modular_characters(group: &FiniteGroup) -> Result<(u64, Vec<ModularCharacter>)> {
    let order = group.order() as u64;
    let exponent = group.exponent();
    let p = choose_prime(order, exponent);
    let classes = group.classes();
    let k = classes.len();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();

    // A_j[i][l] = #{x ∈ C_j : x^{-1} g_l ∈ C_i}
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        let mut a = vec![vec![0u64; k]; k];
        for (l, &g) in reps.iter().enumerate() {
            for &x in &classes[j] {
                let i = group.class_of(group.mul(group.inverse(x), g));
                a[i][l] += 1;
            }
        }
        for row in a.iter_mut() {
            for x in row.iter_mut() {
                *x %= p;
            }
        }
        a
    };

    let identity_cols: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|r| u64::from(r == i)).collect())
        .collect();
    let mut spaces = vec![Subspace::from_columns(identity_cols, p)];
    for j in 1..k {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let a = class_matrix(j);
        let mut next = Vec::new();
        for space in spaces {
            if space.dim() == 1 {
                next.push(space);
                continue;
            }
            let d = space.dim();
            // A·B expressed in the basis B, read off at the pivot rows
            let images: Vec<Vec<u64>> = space
                .basis
                .iter()
                .map(|b| (0..k).map(|r| (0..k).fold(0, |acc, l| (acc + a[r][l] * b[l]) % p)).collect())
                .collect();
            let x: Vec<Vec<u64>> = (0..d)
                .map(|row| (0..d).map(|col| images[col][space.pivots[row]]).collect())
                .collect();
            let mut found = 0;
            for lambda in roots_mod(&charpoly_mod(&x, p), p) {
                let shifted: Vec<Vec<u64>> = x
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(c, &v)| if r == c { (v + p - lambda) % p } else { v })
                            .collect()
                    })
                    .collect();
                let ker = kernel_mod(&shifted, p);
                found += ker.len();
                let cols: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|y| {
                        (0..k)
                            .map(|r| (0..d).fold(0, |acc, c| (acc + space.basis[c][r] * y[c]) % p))
                            .collect()
                    })
                    .collect();
                next.push(Subspace::from_columns(cols, p));
            }
            if found != d {
                return Err(Error::internal(format!(
                    "class matrix {j} is not diagonalizable mod {p}"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::internal(format!(
            "class algebra split into {} pieces, expected {k}",
            spaces.len()
        )));
    }

    let inverse_class: Vec<usize> = reps.iter().map(|&g| group.class_of(group.inverse(g))).collect();
    let z = primitive_root_of_unity(exponent, p);
    let max_degree = (order as f64).sqrt().floor() as u64;

    let mut out = Vec::with_capacity(k);
    for space in spaces {
        let w0 = space.basis[0][0];
        if w0 == 0 {
            return Err(Error::internal("eigenvector vanishes at the identity class"));
        }
        let inv0 = inv_mod(w0, p);
        let w: Vec<u64> = space.basis[0].iter().map(|x| x * inv0 % p).collect();
        let denom = (0..k).fold(0, |acc, l| {
            (acc + w[l] * w[inverse_class[l]] % p * inv_mod(sizes[l] % p, p)) % p
        });
        if denom == 0 {
            return Err(Error::internal("degenerate degree equation"));
        }
        let d2 = order % p * inv_mod(denom, p) % p;
        let degree = (1..=max_degree)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::internal("no integer degree matches the class algebra"))?;
        let chi_mod: Vec<u64> = (0..k)
            .map(|l| w[l] * degree % p * inv_mod(sizes[l] % p, p) % p)
            .collect();

        let mut values = Vec::with_capacity(k);
        for &g in &reps {
            let o = group.element_order(g);
            let step = exponent / o;
            let zeta_o = pow_mod(z, step, p);
            let inv_o = inv_mod(o % p, p);
            let powers: Vec<u64> = (0..o).map(|t| chi_mod[group.class_of(group.pow(g, t))]).collect();
            let mut counts = Vec::new();
            for e in 0..o {
                let root_inv = inv_mod(pow_mod(zeta_o, e, p), p);
                let mut acc = 0;
                let mut r = 1;
                for &v in &powers {
                    acc = (acc + v * r) % p;
                    r = r * root_inv % p;
                }
                let m = acc * inv_o % p;
                if m > degree {
                    return Err(Error::internal(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree}"
                    )));
                }
                if m > 0 {
                    counts.push((e * step, m as i64));
                }
            }
            values.push(counts);
        }
        out.push(ModularCharacter { degree, values });
    }
    Ok((exponent, out))
}
