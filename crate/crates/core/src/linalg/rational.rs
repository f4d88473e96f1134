use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntegerMatrix;

pub type Vector = Vec<BigRational>;

/// Dense square-or-rectangular matrix over `Q`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_integer(m: &IntegerMatrix) -> Self {
        let mut out = RationalMatrix::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.data[i * m.cols() + j] = BigRational::from_integer(m[(i, j)].clone());
            }
        }
        out
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rational matrix");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == RationalMatrix::identity(self.rows)
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[BigRational]) -> Vector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<RationalMatrix> {
        if self.rows != self.cols {
            return None;
        }
        invert(&self.to_rows()).map(RationalMatrix::from_rows)
    }

    pub fn neg(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn sub_identity(&self) -> RationalMatrix {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out.data[i * self.cols + i] -= BigRational::one();
        }
        out
    }
}

/// Incremental row reduction over `Q`.
///
/// Rows are kept in reduced row echelon form: each stored row has a leading 1
/// in its pivot column and zeros in every other pivot column.
#[derive(Debug, Clone)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, row: &mut Vector) {
        for (stored, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, s) in row.iter_mut().zip(stored) {
                if !s.is_zero() {
                    *x -= &factor * s;
                }
            }
        }
    }

    /// True if `row` lies in the span of the rows pushed so far.
    pub fn contains(&self, row: &[BigRational]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(Zero::is_zero)
    }

    /// Adds a row; returns `true` if it increased the rank.
    pub fn push(&mut self, row: Vector) -> bool {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        let mut row = row;
        self.reduce(&mut row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[p].recip();
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for stored in self.rows.iter_mut() {
            if stored[p].is_zero() {
                continue;
            }
            let factor = stored[p].clone();
            for (x, s) in stored.iter_mut().zip(&row) {
                if !s.is_zero() {
                    *x -= &factor * s;
                }
            }
        }
        self.rows.push(row);
        self.pivots.push(p);
        true
    }

    /// Adds a sparse row given as `(column, value)` pairs.
    pub fn push_sparse(&mut self, entries: &[(usize, BigRational)]) -> bool {
        let mut row = vec![BigRational::zero(); self.cols];
        for (c, v) in entries {
            row[*c] += v;
        }
        self.push(row)
    }

    /// Basis of the solution space `{x : r·x = 0 for every pushed row r}`.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[free] = BigRational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[free].clone();
                }
                v
            })
            .collect()
    }
}

pub fn rank(rows: &[Vector]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut rr = RowReducer::new(first.len());
    for r in rows {
        rr.push(r.clone());
    }
    rr.rank()
}

/// Kernel of the matrix whose rows are given, as a list of basis vectors.
pub fn nullspace(rows: &[Vector], cols: usize) -> Vec<Vector> {
    let mut rr = RowReducer::new(cols);
    for r in rows {
        rr.push(r.clone());
    }
    rr.nullspace()
}

/// Inverse of a square rational matrix, or `None` if singular.
pub(crate) fn invert(rows: &[Vector]) -> Option<Vec<Vector>> {
    let n = rows.len();
    let mut a: Vec<Vector> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(p, c);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vector {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let rows = vec![q(&[1, 2, 3]), q(&[2, 4, 6])];
        assert_eq!(rank(&rows), 1);
        let ker = nullspace(&rows, 3);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let dot: BigRational = v.iter().zip(&rows[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn membership() {
        let mut rr = RowReducer::new(3);
        assert!(rr.push(q(&[1, 1, 0])));
        assert!(rr.push(q(&[0, 1, 1])));
        assert!(!rr.push(q(&[1, 2, 1])));
        assert!(rr.contains(&q(&[2, 0, -2])));
        assert!(!rr.contains(&q(&[0, 0, 1])));
    }

    #[test]
    fn inverse() {
        let a = vec![q(&[2, 1]), q(&[1, 1])];
        assert_eq!(invert(&a).unwrap(), vec![q(&[1, -1]), q(&[-1, 2])]);
        assert!(invert(&[q(&[1, 2]), q(&[2, 4])]).is_none());
    }
}
