//! Characteristic polynomials by the division-free Berkowitz recurrence.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::poly::IntPolynomial;
use super::small;
use crate::error::AlgebraError;

pub const MAX_CHAR_POLY_ORDER: usize = 4096;

/// `det(tI - m)`.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.rows() > MAX_CHAR_POLY_ORDER {
        return Err(AlgebraError::TooLarge(m.rows()));
    }
    if let Some(fast) = m.to_i64().and_then(|a| small::berkowitz(&a, m.rows())) {
        return Ok(small::to_big(&fast));
    }
    Ok(berkowitz_big(m))
}

/// `det((tI - m)[a|a])`, the characteristic polynomial of `m` with row and
/// column `a` removed.
pub fn char_poly_deleted(m: &IntMatrix, a: usize) -> Result<IntPolynomial, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if a >= m.rows() {
        return Err(AlgebraError::IndexOutOfRange { index: a, n: m.rows() });
    }
    char_poly(&m.delete_row_col(a))
}

/// Arbitrary-precision Berkowitz; coefficients in ascending order.
pub(crate) fn berkowitz_big(m: &IntMatrix) -> IntPolynomial {
    let n = m.rows();
    // descending coefficients of the characteristic polynomial of the
    // leading r x r block
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-m.get(r, r).clone());
        let mut v: Vec<BigInt> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for _ in 0..r {
            let rv: BigInt = (0..r).map(|j| m.get(r, j) * &v[j]).sum();
            toeplitz.push(-rv);
            v = (0..r).map(|i| (0..r).map(|j| m.get(i, j) * &v[j]).sum()).collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(r) {
                *slot += &toeplitz[i - j] * &p[j];
            }
        }
        p = next;
    }
    p.reverse();
    IntPolynomial::new(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::determinant;

    fn mat(n: usize, xs: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(n, n, xs)
    }

    #[test]
    fn hand_computed() {
        let k2 = mat(2, &[1, -1, -1, 1]);
        assert_eq!(char_poly(&k2).unwrap(), IntPolynomial::from_i64(&[0, -2, 1]));
        let p3 = mat(3, &[1, -1, 0, -1, 2, -1, 0, -1, 1]);
        assert_eq!(char_poly(&p3).unwrap(), IntPolynomial::from_i64(&[0, 3, -4, 1]));
        assert_eq!(char_poly(&IntMatrix::zeros(3, 3)).unwrap(), IntPolynomial::from_i64(&[0, 0, 0, 1]));
        assert_eq!(char_poly(&IntMatrix::zeros(0, 0)).unwrap(), IntPolynomial::one());
        assert!(char_poly(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn deleted() {
        let p3 = mat(3, &[1, -1, 0, -1, 2, -1, 0, -1, 1]);
        assert_eq!(char_poly_deleted(&p3, 1).unwrap(), IntPolynomial::from_i64(&[1, -2, 1]));
        let k2 = mat(2, &[1, -1, -1, 1]);
        assert_eq!(char_poly_deleted(&k2, 0).unwrap(), IntPolynomial::linear_root(1));
        assert_eq!(char_poly_deleted(&mat(1, &[5]), 0).unwrap(), IntPolynomial::one());
        assert!(char_poly_deleted(&k2, 2).is_err());
    }

    /// Oracle: det(rI - m) by Bareiss at n + 1 integer points determines the
    /// degree-n polynomial; compare point values.
    #[test]
    fn agrees_with_determinants_at_points() {
        let m = mat(4, &[3, 1, -2, 0, 1, 0, 5, 7, -2, 5, 1, 1, 0, 7, 1, -4]);
        let p = char_poly(&m).unwrap();
        let big = berkowitz_big(&m);
        assert_eq!(p, big);
        for r in -3i64..=3 {
            let shifted = IntMatrix::identity(4).scale(r);
            let diff: Vec<BigInt> = shifted.entries().iter().zip(m.entries()).map(|(a, b)| a - b).collect();
            let d = determinant(&IntMatrix::new(4, 4, diff).unwrap()).unwrap();
            assert_eq!(p.eval(&BigInt::from(r)), d);
        }
    }

    #[test]
    fn falls_back_when_entries_are_huge() {
        let big = BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62);
        let m = IntMatrix::new(1, 1, vec![big.clone()]).unwrap();
        assert_eq!(char_poly(&m).unwrap(), IntPolynomial::new(vec![-big, BigInt::one()]));
    }
}
