//! Dense integer and rational matrices with exact elimination.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, AlgebraError> {
        if data.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "buffer length must be rows * cols");
        Self { rows, cols, data: data.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    /// Entries as `i64` when every one of them fits.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.data.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * &c).collect() }
    }

    /// Principal submatrix with row and column `k` removed.
    pub fn delete_row_col(&self, k: usize) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != k).collect();
        let mut data = Vec::with_capacity(keep.len() * keep.len());
        for &i in &keep {
            for &j in &keep {
                data.push(self.get(i, j).clone());
            }
        }
        Self { rows: keep.len(), cols: keep.len(), data }
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(m: &IntMatrix) -> Result<BigInt, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a = m.data.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                Some(p) => {
                    for j in 0..n {
                        a.swap(k * n + j, p * n + j);
                    }
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
        }
        prev = a[k * n + k].clone();
    }
    Ok(if n == 0 { sign } else { sign * prev })
}

pub type RatVector = Vec<BigRational>;

/// Row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self, AlgebraError> {
        if data.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_columns(rows: usize, columns: &[RatVector]) -> Result<Self, AlgebraError> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(AlgebraError::DimensionMismatch);
        }
        let cols = columns.len();
        let mut data = vec![BigRational::zero(); rows * cols];
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                data[i * cols + j] = x.clone();
            }
        }
        Ok(Self { rows, cols, data })
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

    pub fn column(&self, j: usize) -> RatVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// `self - mu * I`.
    pub fn shifted(&self, mu: &BigRational) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out.data[i * self.cols + i] -= mu;
        }
        out
    }

    /// Reduced row echelon form and the pivot columns, in increasing order.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.data.swap(r * cols + j, p * cols + j);
                }
            }
            let inv = a.data[r * cols + c].recip();
            for j in c..cols {
                a.data[r * cols + j] *= &inv;
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = a.data[i * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let delta = &f * &a.data[r * cols + j];
                    a.data[i * cols + j] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }
}

/// Basis of the right null space, one vector per free column of the RREF
/// (free columns taken in increasing order, free entry set to 1).
pub fn kernel_basis(m: &RatMatrix) -> Vec<RatVector> {
    let (r, pivots) = m.rref();
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect()
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Solves `g x = rhs` for every column of `rhs` by Gaussian elimination with
/// full pivoting; the first nonzero entry in row-major order wins.
fn solve_full_pivot(g: &RatMatrix, rhs: &RatMatrix) -> Result<RatMatrix, AlgebraError> {
    let k = g.rows;
    let m = rhs.cols;
    let mut a = g.data.clone();
    let mut b = rhs.data.clone();
    let mut col_perm: Vec<usize> = (0..k).collect();
    for step in 0..k {
        let pivot = (step..k)
            .flat_map(|i| (step..k).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i * k + j].is_zero())
            .ok_or(AlgebraError::DependentBasis)?;
        let (pi, pj) = pivot;
        if pi != step {
            for j in 0..k {
                a.swap(step * k + j, pi * k + j);
            }
            for j in 0..m {
                b.swap(step * m + j, pi * m + j);
            }
        }
        if pj != step {
            for i in 0..k {
                a.swap(i * k + step, i * k + pj);
            }
            col_perm.swap(step, pj);
        }
        let inv = a[step * k + step].recip();
        for i in step + 1..k {
            let f = &a[i * k + step] * &inv;
            if f.is_zero() {
                continue;
            }
            for j in step..k {
                let d = &f * &a[step * k + j];
                a[i * k + j] -= d;
            }
            for j in 0..m {
                let d = &f * &b[step * m + j];
                b[i * m + j] -= d;
            }
        }
    }
    let mut y = vec![BigRational::zero(); k * m];
    for i in (0..k).rev() {
        for j in 0..m {
            let mut acc = b[i * m + j].clone();
            for l in i + 1..k {
                acc -= &a[i * k + l] * &y[l * m + j];
            }
            y[i * m + j] = acc / &a[i * k + i];
        }
    }
    // undo the column permutation: unknown `col_perm[i]` sits in row `i`
    let mut x = vec![BigRational::zero(); k * m];
    for i in 0..k {
        for j in 0..m {
            x[col_perm[i] * m + j] = y[i * m + j].clone();
        }
    }
    Ok(RatMatrix { rows: k, cols: m, data: x })
}

fn gram(basis: &[RatVector]) -> RatMatrix {
    let k = basis.len();
    let mut data = Vec::with_capacity(k * k);
    for a in basis {
        for b in basis {
            data.push(dot(a, b));
        }
    }
    RatMatrix { rows: k, cols: k, data }
}

/// Orthogonal projection of `v` onto `span(basis)`, `V (VᵀV)⁻¹ Vᵀ v`.
pub fn project(basis: &[RatVector], v: &[BigRational]) -> Result<RatVector, AlgebraError> {
    if basis.iter().any(|b| b.len() != v.len()) {
        return Err(AlgebraError::DimensionMismatch);
    }
    if basis.is_empty() {
        return Ok(vec![BigRational::zero(); v.len()]);
    }
    let rhs = RatMatrix { rows: basis.len(), cols: 1, data: basis.iter().map(|b| dot(b, v)).collect() };
    let coeffs = solve_full_pivot(&gram(basis), &rhs)?;
    let mut out = vec![BigRational::zero(); v.len()];
    for (b, c) in basis.iter().zip(&coeffs.data) {
        for (o, x) in out.iter_mut().zip(b) {
            *o += c * x;
        }
    }
    Ok(out)
}

/// Full projector matrix `V (VᵀV)⁻¹ Vᵀ` onto `span(basis)` in dimension `n`.
pub fn projector(basis: &[RatVector], n: usize) -> Result<RatMatrix, AlgebraError> {
    if basis.iter().any(|b| b.len() != n) {
        return Err(AlgebraError::DimensionMismatch);
    }
    if basis.is_empty() {
        return Ok(RatMatrix { rows: n, cols: n, data: vec![BigRational::zero(); n * n] });
    }
    let k = basis.len();
    let mut vt = Vec::with_capacity(k * n);
    for b in basis {
        vt.extend(b.iter().cloned());
    }
    let x = solve_full_pivot(&gram(basis), &RatMatrix { rows: k, cols: n, data: vt })?;
    let mut data = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for (l, b) in basis.iter().enumerate() {
            if b[i].is_zero() {
                continue;
            }
            for j in 0..n {
                data[i * n + j] += &b[i] * &x.data[l * n + j];
            }
        }
    }
    Ok(RatMatrix { rows: n, cols: n, data })
}

/// `true` when every entry is zero.
pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}
