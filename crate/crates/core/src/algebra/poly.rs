//! Integer polynomials: gcd, exact division and integer root extraction.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Integer polynomial, coefficients in ascending degree order with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![BigInt::one()] }
    }

    /// `t - r`.
    pub fn linear_root(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divided by its content, with a positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self { coeffs: self.coeffs.iter().map(|x| x / &c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Pseudo-remainder: `lc(d)^(deg p - deg d + 1) * p mod d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.coeffs.len() - 1;
        let lc = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.pop().expect("non-empty");
            let shift = r.len() - dd;
            for c in r.iter_mut() {
                *c *= lc;
            }
            for (k, dc) in d.coeffs[..dd].iter().enumerate() {
                r[shift + k] -= &top * dc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Multiplicity of `r` as a root; zero polynomial reports 0.
    pub fn root_multiplicity(&self, r: i64) -> usize {
        if self.is_zero() {
            return 0;
        }
        let r = BigInt::from(r);
        let mut p = self.coeffs.clone();
        let mut mult = 0;
        while p.len() > 1 {
            // synthetic division by (t - r)
            let mut q = vec![BigInt::zero(); p.len() - 1];
            let mut acc = BigInt::zero();
            for k in (0..p.len()).rev() {
                acc = acc * &r + &p[k];
                if k > 0 {
                    q[k - 1] = acc.clone();
                }
            }
            if !acc.is_zero() {
                break;
            }
            mult += 1;
            p = q;
        }
        mult
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{a}t^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Greatest common divisor via the primitive remainder sequence; the result
/// is primitive with a positive leading coefficient.
pub fn poly_gcd(p: &IntPolynomial, q: &IntPolynomial) -> Result<IntPolynomial, AlgebraError> {
    if p.is_zero() && q.is_zero() {
        return Err(AlgebraError::BothZero);
    }
    let (mut a, mut b) = (p.primitive(), q.primitive());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive();
        a = b;
        b = r;
    }
    Ok(a.primitive())
}

/// Quotient `p / d` when it is an integer polynomial with zero remainder.
pub fn exact_div(p: &IntPolynomial, d: &IntPolynomial) -> Result<IntPolynomial, AlgebraError> {
    let dd = d.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    let Some(dp) = p.degree() else {
        return Ok(IntPolynomial::zero());
    };
    if dp < dd {
        return Err(AlgebraError::InexactDivision);
    }
    let lc = &d.coeffs[dd];
    let mut r = p.coeffs.clone();
    let mut q = vec![BigInt::zero(); dp - dd + 1];
    for k in (0..=dp - dd).rev() {
        let top = &r[k + dd];
        let (c, rem) = top.div_rem(lc);
        if !rem.is_zero() {
            return Err(AlgebraError::InexactDivision);
        }
        for (j, dc) in d.coeffs.iter().enumerate() {
            r[k + j] -= &c * dc;
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return Err(AlgebraError::InexactDivision);
    }
    Ok(IntPolynomial::new(q))
}

/// Integer roots in `[lo, hi]` with their multiplicities.
pub fn integer_roots(p: &IntPolynomial, lo: i64, hi: i64) -> Result<BTreeMap<i64, usize>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    Ok((lo..=hi)
        .filter_map(|r| {
            let m = p.root_multiplicity(r);
            (m > 0).then_some((r, m))
        })
        .collect())
}

/// Whether `found` accounts for every root of `p`: multiplicities add up to
/// the degree and the roots sum to `-c[k-1] / c[k]`.
pub fn all_roots_integer(p: &IntPolynomial, found: &BTreeMap<i64, usize>) -> bool {
    let Some(k) = p.degree() else {
        return false;
    };
    let count: usize = found.values().sum();
    if count != k {
        return false;
    }
    if k == 0 {
        return true;
    }
    let sum: BigInt = found.iter().map(|(&r, &m)| BigInt::from(r) * BigInt::from(m)).sum();
    sum * &p.coeffs[k] == -p.coeffs[k - 1].clone()
}
