//! Machine-integer fast path for the exact polynomial pipeline.
//!
//! Every routine uses checked `i128` arithmetic and returns `None` on
//! overflow; callers then fall back to the arbitrary-precision versions.
//! Coefficients are ascending, trailing zeros trimmed.

use num_bigint::BigInt;
use num_integer::Integer;

use super::poly::IntPolynomial;

pub type SmallPoly = Vec<i128>;

pub fn to_big(p: &[i128]) -> IntPolynomial {
    IntPolynomial::new(p.iter().map(|&c| BigInt::from(c)).collect())
}

fn trim(mut p: SmallPoly) -> SmallPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Berkowitz on a row-major `n x n` buffer.
pub fn berkowitz(a: &[i64], n: usize) -> Option<SmallPoly> {
    let at = |i: usize, j: usize| a[i * n + j] as i128;
    let mut p: Vec<i128> = vec![1];
    let mut v = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    let mut toeplitz = Vec::with_capacity(n + 2);
    for r in 0..n {
        toeplitz.clear();
        toeplitz.push(1);
        toeplitz.push(-at(r, r));
        v.clear();
        v.extend((0..r).map(|i| at(i, r)));
        for _ in 0..r {
            let mut rv: i128 = 0;
            for (j, x) in v.iter().enumerate() {
                rv = rv.checked_add(at(r, j).checked_mul(*x)?)?;
            }
            toeplitz.push(rv.checked_neg()?);
            w.clear();
            for i in 0..r {
                let mut acc: i128 = 0;
                for (j, x) in v.iter().enumerate() {
                    let e = at(i, j);
                    if e != 0 {
                        acc = acc.checked_add(e.checked_mul(*x)?)?;
                    }
                }
                w.push(acc);
            }
            std::mem::swap(&mut v, &mut w);
        }
        let mut next = vec![0i128; r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(r) {
                *slot = slot.checked_add(toeplitz[i - j].checked_mul(p[j])?)?;
            }
        }
        p = next;
    }
    p.reverse();
    Some(trim(p))
}

fn content(p: &[i128]) -> i128 {
    p.iter().fold(0i128, |acc, &c| acc.gcd(&c))
}

fn primitive(p: SmallPoly) -> Option<SmallPoly> {
    let Some(&lc) = p.last() else {
        return Some(p);
    };
    let mut c = content(&p);
    if lc < 0 {
        c = c.checked_neg()?;
    }
    Some(p.into_iter().map(|x| x / c).collect())
}

fn pseudo_rem(p: &[i128], d: &[i128]) -> Option<SmallPoly> {
    let dd = d.len() - 1;
    let lc = d[dd];
    let mut r = p.to_vec();
    while r.len() > dd && !r.is_empty() {
        let top = r.pop()?;
        let shift = r.len() - dd;
        if lc != 1 {
            for c in r.iter_mut() {
                *c = c.checked_mul(lc)?;
            }
        }
        for (k, &dc) in d[..dd].iter().enumerate() {
            r[shift + k] = r[shift + k].checked_sub(top.checked_mul(dc)?)?;
        }
        r = trim(r);
    }
    Some(r)
}

/// Primitive gcd with positive leading coefficient; at least one input nonzero.
pub fn gcd(p: &[i128], q: &[i128]) -> Option<SmallPoly> {
    let (mut a, mut b) = (primitive(p.to_vec())?, primitive(q.to_vec())?);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(pseudo_rem(&a, &b)?)?;
        a = b;
        b = r;
    }
    primitive(a)
}

/// `p / d` when exact over the integers; `None` also covers overflow and
/// inexact division, so callers must re-run the arbitrary-precision path.
pub fn exact_div(p: &[i128], d: &[i128]) -> Option<SmallPoly> {
    let dd = d.len().checked_sub(1)?;
    if p.is_empty() {
        return Some(Vec::new());
    }
    let dp = p.len() - 1;
    if dp < dd {
        return None;
    }
    let lc = d[dd];
    let mut r = p.to_vec();
    let mut q = vec![0i128; dp - dd + 1];
    for k in (0..=dp - dd).rev() {
        let top = r[k + dd];
        if top % lc != 0 {
            return None;
        }
        let c = top / lc;
        for (j, &dc) in d.iter().enumerate() {
            r[k + j] = r[k + j].checked_sub(c.checked_mul(dc)?)?;
        }
        q[k] = c;
    }
    r.iter().all(|&c| c == 0).then(|| trim(q))
}

/// Multiplicity of the integer root `x`; `None` on overflow.
pub fn root_multiplicity(p: &[i128], x: i128) -> Option<usize> {
    let mut cur = p.to_vec();
    let mut mult = 0;
    while cur.len() > 1 {
        let mut q = vec![0i128; cur.len() - 1];
        let mut acc: i128 = 0;
        for k in (0..cur.len()).rev() {
            acc = acc.checked_mul(x)?.checked_add(cur[k])?;
            if k > 0 {
                q[k - 1] = acc;
            }
        }
        if acc != 0 {
            break;
        }
        mult += 1;
        cur = q;
    }
    Some(mult)
}

/// Integer basis of the right kernel of `m - mu I` (row-major `n x n`), by
/// fraction-free elimination to reduced echelon form. Each vector is
/// primitive; the span equals the rational kernel.
pub fn integer_kernel(m: &[i64], n: usize, mu: i64) -> Option<Vec<Vec<i128>>> {
    let mut rows: Vec<Vec<i128>> =
        (0..n).map(|i| (0..n).map(|j| m[i * n + j] as i128 - if i == j { mu as i128 } else { 0 }).collect()).collect();
    let mut pivots = Vec::new();
    for c in 0..n {
        let r = pivots.len();
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        normalize_row(&mut rows[r], c)?;
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let g = pivot_row[c].gcd(&row[c]);
            let (x, y) = (pivot_row[c] / g, row[c] / g);
            for (e, &pe) in row.iter_mut().zip(&pivot_row) {
                *e = e.checked_mul(x)?.checked_sub(pe.checked_mul(y)?)?;
            }
            if let Some(lead) = row.iter().position(|&e| e != 0) {
                normalize_row(row, lead)?;
            }
        }
        pivots.push(c);
    }
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|&f| !is_pivot[f]) {
        let mut scale: i128 = 1;
        for (k, &p) in pivots.iter().enumerate() {
            if rows[k][f] != 0 {
                scale = scale.lcm(&rows[k][p]);
            }
        }
        let mut v = vec![0i128; n];
        v[f] = scale;
        for (k, &p) in pivots.iter().enumerate() {
            if rows[k][f] != 0 {
                v[p] = rows[k][f].checked_neg()?.checked_mul(scale / rows[k][p])?;
            }
        }
        let c = content(&v);
        basis.push(v.into_iter().map(|x| x / c).collect());
    }
    Some(basis)
}

/// Divides by the content and makes the entry at `lead` positive.
fn normalize_row(row: &mut [i128], lead: usize) -> Option<()> {
    let mut c = content(row);
    if row[lead] < 0 {
        c = c.checked_neg()?;
    }
    for e in row.iter_mut() {
        *e /= c;
    }
    Some(())
}
