//! Floating-point reference evaluation of `U(t) = exp(itL)`.
//!
//! Nothing here feeds an exact decision. The oracle exists so that every
//! exact answer can be checked against an independent computation: a cyclic
//! Jacobi eigensolver, `U(t) = Σ e^{itμ} v vᵀ`, a block-form detector, and a
//! dense time scan.

use num_complex::Complex64;

use crate::error::OracleError;
use crate::graph::{Graph, Vertex};

pub const MAX_ORDER: usize = 2000;
const MAX_SWEEPS: usize = 100;

/// Ascending eigenvalues with orthonormal eigenvectors; `vector(r)` is the
/// eigenvector of `values[r]`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    n: usize,
    values: Vec<f64>,
    // column r holds eigenvector r, stored contiguously
    vectors: Vec<f64>,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vector(&self, r: usize) -> &[f64] {
        &self.vectors[r * self.n..(r + 1) * self.n]
    }
}

/// Symmetric eigendecomposition by cyclic Jacobi sweeps in fixed order.
pub fn eigh(m: &[f64], n: usize) -> Result<Spectrum, OracleError> {
    if n > MAX_ORDER {
        return Err(OracleError::TooLarge(n));
    }
    assert_eq!(m.len(), n * n, "buffer length must be n * n");
    let mut asym = 0.0f64;
    for i in 0..n {
        for j in 0..i {
            asym = asym.max((m[i * n + j] - m[j * n + i]).abs());
        }
    }
    if asym > 1e-12 {
        return Err(OracleError::Asymmetric(asym));
    }
    let mut a = m.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = 1e-13 * norm.max(f64::MIN_POSITIVE);
    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let off =
            (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).fold(0.0f64, |acc, (i, j)| acc.max(a[i * n + j].abs()));
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= target * 1e-3 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r != p && r != q {
                        let (arp, arq) = (a[r * n + p], a[r * n + q]);
                        let (np, nq) = (c * arp - s * arq, s * arp + c * arq);
                        a[r * n + p] = np;
                        a[p * n + r] = np;
                        a[r * n + q] = nq;
                        a[q * n + r] = nq;
                    }
                    let (vrp, vrq) = (v[r * n + p], v[r * n + q]);
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
    }
    if !converged {
        return Err(OracleError::NoConvergence(MAX_SWEEPS));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &col in &order {
        vectors.extend((0..n).map(|r| v[r * n + col]));
    }
    Ok(Spectrum { n, values, vectors })
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum, OracleError> {
    eigh(&g.laplacian_f64(), g.order())
}

/// Dense `U(t)`, row-major.
#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    pub time: f64,
    n: usize,
    entries: Vec<Complex64>,
}

impl TransitionMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.entries[i * n + k];
                for j in 0..n {
                    out[i * n + j] += x * other.entries[k * n + j];
                }
            }
        }
        Self { time: self.time + other.time, n, entries: out }
    }

    /// `‖U U* - I‖∞`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let s: Complex64 = (0..n).map(|k| self.get(i, k) * self.get(j, k).conj()).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - want).norm());
            }
        }
        worst
    }

    /// `‖U - Uᵀ‖∞`.
    pub fn symmetry_defect(&self) -> f64 {
        let n = self.n;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .fold(0.0, |acc: f64, (i, j)| acc.max((self.get(i, j) - self.get(j, i)).norm()))
    }

    /// `max |self - other|` entrywise.
    pub fn distance(&self, other: &Self) -> f64 {
        self.entries.iter().zip(&other.entries).fold(0.0, |acc: f64, (x, y)| acc.max((x - y).norm()))
    }
}

fn phases(spec: &Spectrum, t: f64) -> Vec<Complex64> {
    spec.values.iter().map(|&mu| Complex64::from_polar(1.0, t * mu)).collect()
}

/// `U(t)` from a precomputed spectrum.
pub fn transition_from_spectrum(spec: &Spectrum, t: f64) -> TransitionMatrix {
    let n = spec.n;
    let ph = phases(spec, t);
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for (r, w) in ph.iter().enumerate() {
        let v = spec.vector(r);
        for i in 0..n {
            let wi = w * v[i];
            for j in 0..n {
                entries[i * n + j] += wi * v[j];
            }
        }
    }
    TransitionMatrix { time: t, n, entries }
}

pub fn transition_matrix(g: &Graph, t: f64) -> Result<TransitionMatrix, OracleError> {
    Ok(transition_from_spectrum(&laplacian_spectrum(g)?, t))
}

/// Row `a` of `U(t)`.
pub fn transition_row(spec: &Spectrum, t: f64, a: Vertex) -> Vec<Complex64> {
    let n = spec.n;
    let mut row = vec![Complex64::new(0.0, 0.0); n];
    for (r, w) in phases(spec, t).iter().enumerate() {
        let v = spec.vector(r);
        let wa = w * v[a];
        for (slot, x) in row.iter_mut().zip(v) {
            *slot += wa * x;
        }
    }
    row
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Block {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
}

/// Off-pair leakage of rows `a` and `b`, and the `{a, b}` block when the
/// leakage is within tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockCheck {
    pub leakage: f64,
    pub block: Option<Block>,
}

fn block_from_rows(ra: &[Complex64], rb: &[Complex64], a: Vertex, b: Vertex, tol: f64) -> BlockCheck {
    let leakage =
        (0..ra.len()).filter(|&j| j != a && j != b).fold(0.0f64, |acc, j| acc.max(ra[j].norm()).max(rb[j].norm()));
    let block = (leakage <= tol).then(|| Block { alpha: ra[a], beta: ra[b], gamma: rb[b] });
    BlockCheck { leakage, block }
}

pub fn block_fr_check(u: &TransitionMatrix, a: Vertex, b: Vertex, tol: f64) -> BlockCheck {
    let n = u.n;
    let ra = &u.entries[a * n..(a + 1) * n];
    let rb = &u.entries[b * n..(b + 1) * n];
    block_from_rows(ra, rb, a, b, tol)
}

/// `‖U(τ)e_a - αe_a - βe_b‖∞`.
pub fn revival_residual(spec: &Spectrum, t: f64, a: Vertex, b: Vertex, alpha: Complex64, beta: Complex64) -> f64 {
    let col = transition_row(spec, t, a); // U is symmetric: row a = column a
    col.iter()
        .enumerate()
        .map(|(j, x)| {
            let want = if j == a {
                alpha
            } else if j == b {
                beta
            } else {
                Complex64::new(0.0, 0.0)
            };
            (x - want).norm()
        })
        .fold(0.0, f64::max)
}

pub const SCAN_TOL: f64 = 1e-7;
pub const SCAN_MIN_BETA: f64 = 1e-3;
const REFINE_STEPS: usize = 20;

/// Times in `(0, t_max]` at which rows `a` and `b` of `U(t)` have leakage
/// below `1e-7` and `|β| > 1e-3`.
///
/// The grid `k · t_max / steps` is scanned; grid hits are kept and every
/// local minimum of the leakage is refined by 20 interval-halving steps.
/// Results are sorted and merged within `1e-6`.
pub fn time_scan(g: &Graph, a: Vertex, b: Vertex, t_max: f64, steps: usize) -> Result<Vec<f64>, OracleError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let spec = laplacian_spectrum(g)?;
    Ok(time_scan_spectrum(&spec, a, b, t_max, steps))
}

pub fn time_scan_spectrum(spec: &Spectrum, a: Vertex, b: Vertex, t_max: f64, steps: usize) -> Vec<f64> {
    let steps = steps.max(1);
    let h = t_max / steps as f64;
    let eval = |t: f64| {
        let ra = transition_row(spec, t, a);
        let rb = transition_row(spec, t, b);
        let c = block_from_rows(&ra, &rb, a, b, SCAN_TOL);
        (c.leakage, ra[b].norm())
    };
    let grid: Vec<(f64, f64)> = (0..=steps + 1).map(|k| eval(k as f64 * h)).collect();
    let mut hits = Vec::new();
    for k in 1..=steps {
        let t = k as f64 * h;
        let (leak, beta) = grid[k];
        if leak < SCAN_TOL {
            if beta > SCAN_MIN_BETA {
                hits.push(t);
            }
            continue;
        }
        if leak <= grid[k - 1].0 && leak <= grid[k + 1].0 {
            let (mut centre, mut width) = (t, h);
            let mut best = leak;
            for _ in 0..REFINE_STEPS {
                width /= 2.0;
                for cand in [centre - width, centre + width] {
                    let l = eval(cand).0;
                    if l < best {
                        best = l;
                        centre = cand;
                    }
                }
            }
            let (leak, beta) = eval(centre);
            if leak < SCAN_TOL && beta > SCAN_MIN_BETA && centre > 0.0 && centre <= t_max + 1e-12 {
                hits.push(centre);
            }
        }
    }
    hits.sort_by(f64::total_cmp);
    hits.dedup_by(|x, y| (*x - *y).abs() < 1e-6);
    hits
}

/// Numeric strong-cospectrality heuristic: eigenvalues are clustered within
/// `1e-8`, each cluster's idempotent column at `a` is compared with the one
/// at `b` up to sign. Advisory only.
pub fn numeric_strong_cospectral(g: &Graph, a: Vertex, b: Vertex, tol: f64) -> Result<bool, OracleError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let spec = laplacian_spectrum(g)?;
    let n = spec.n;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && spec.values[end] - spec.values[end - 1] < 1e-8 {
            end += 1;
        }
        let mut fa = vec![0.0; n];
        let mut fb = vec![0.0; n];
        for r in start..end {
            let v = spec.vector(r);
            for i in 0..n {
                fa[i] += v[i] * v[a];
                fb[i] += v[i] * v[b];
            }
        }
        let same = fa.iter().zip(&fb).all(|(x, y)| (x - y).abs() <= tol);
        let opposite = fa.iter().zip(&fb).all(|(x, y)| (x + y).abs() <= tol);
        if !same && !opposite {
            return Ok(false);
        }
        start = end;
    }
    Ok(true)
}
