//! Eigenvalue supports, exact strong cospectrality and the `Φ⁺ / Φ⁻ / Φ⁰`
//! partition of a vertex pair.
//!
//! Everything here is exact. Supports come from
//! `f = ψ / gcd(ψ, ψ_a)` with `ψ = det(tI - L)` and `ψ_a` the same
//! determinant with row and column `a` removed; the roots of `f` are exactly
//! the eigenvalues whose idempotent does not vanish on `e_a`. Laplacian
//! eigenvalues lie in `[0, n]`, so integer roots are found by scanning.
//!
//! Strong cospectrality compares `F_μ e_a` with `F_μ e_b`. Because
//! `F_μ (e_a ∓ e_b) = 0` exactly when every vector `v` of the `μ`-eigenspace
//! has `v_a = ±v_b`, the test only needs a kernel basis of `L - μI`, which
//! avoids forming projections on the hot path.
//! [`eigenprojection_column`] computes the projections themselves, and the
//! tests compare the two methods.
//!
//! For supports with irrational members, [`SpectralContext::is_strongly_cospectral`]
//! decides the question from polynomials alone, so a negative answer is
//! exact for every graph.

use std::cell::OnceCell;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    self, char_poly, char_poly_deleted, exact_div, integer_roots, kernel_basis, poly_gcd, project, small, IntMatrix,
    IntPolynomial, RatVector,
};
use crate::error::SpectralError;
use crate::graph::{distances, eccentricity, is_connected, laplacian, spanning_tree_count, Graph, Vertex};
use crate::time::PiMultiple;

/// `Φ_a` for one vertex, restricted to what exact integer arithmetic can
/// certify.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueSupport {
    pub vertex: Vertex,
    /// Integer members of `Φ_a`.
    pub integer_eigenvalues: BTreeSet<i64>,
    /// Whether `Φ_a` consists of integers only.
    pub all_integer: bool,
    /// `|Φ_a|`, the degree of the support polynomial.
    pub support_size: usize,
}

/// Periodicity at a vertex. `big_g` is `gcd Φ_a`; it is absent for an
/// isolated vertex, whose support is `{0}` and which is periodic at every
/// time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Periodicity {
    pub vertex: Vertex,
    pub periodic: bool,
    pub big_g: Option<u64>,
}

impl Periodicity {
    /// `2π / G`.
    pub fn minimal_period(&self) -> Option<PiMultiple> {
        self.big_g.filter(|_| self.periodic).map(PiMultiple::two_pi_over)
    }

    /// Whether the walk returns to the vertex (up to phase) at `t`.
    pub fn periodic_at(&self, t: &PiMultiple) -> bool {
        match (self.periodic, self.minimal_period()) {
            (false, _) => false,
            (true, None) => true,
            (true, Some(p)) => t.multiple_of(&p).is_some(),
        }
    }
}

/// Eigenvalue classes of a strongly cospectral pair. `zero` holds the
/// integer eigenvalues outside the common support; `irrational_spectrum`
/// flags that the spectrum has non-integer eigenvalues, which then all lie
/// in `Φ⁰` as well.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairPartition {
    pub a: Vertex,
    pub b: Vertex,
    pub plus: BTreeSet<i64>,
    pub minus: BTreeSet<i64>,
    pub zero: BTreeSet<i64>,
    pub irrational_spectrum: bool,
}

impl PairPartition {
    /// The same partition seen from `b`.
    pub fn swapped(&self) -> Self {
        Self { a: self.b, b: self.a, ..self.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Poly {
    Small(Vec<i128>),
    Big(IntPolynomial),
}

impl Poly {
    fn to_big(&self) -> IntPolynomial {
        match self {
            Poly::Small(p) => small::to_big(p),
            Poly::Big(p) => p.clone(),
        }
    }

    /// Integer roots in `[0, hi]` with multiplicity.
    fn roots(&self, hi: i64) -> BTreeMap<i64, usize> {
        if let Poly::Small(p) = self {
            let fast: Option<BTreeMap<i64, usize>> = (0..=hi)
                .map(|r| small::root_multiplicity(p, r as i128).map(|m| (r, m)))
                .filter(|x| !matches!(x, Some((_, 0))))
                .collect();
            if let Some(found) = fast {
                return found;
            }
        }
        integer_roots(&self.to_big(), 0, hi).expect("characteristic polynomials are nonzero")
    }

    fn degree(&self) -> usize {
        match self {
            Poly::Small(p) => p.len() - 1,
            Poly::Big(p) => p.degree().expect("nonzero"),
        }
    }

    fn splits(&self, found: &BTreeMap<i64, usize>) -> bool {
        match self {
            Poly::Small(p) => {
                let k = p.len() - 1;
                if found.values().sum::<usize>() != k {
                    return false;
                }
                if k == 0 {
                    return true;
                }
                let sum: i128 = found.iter().map(|(&r, &m)| r as i128 * m as i128).sum();
                sum.checked_mul(p[k]) == p[k - 1].checked_neg()
            }
            Poly::Big(p) => algebra::all_roots_integer(p, found),
        }
    }
}

#[derive(Debug)]
enum Kernel {
    Small(Vec<Vec<i128>>),
    Big(Vec<RatVector>),
}

/// Relation between `F_μ e_a` and `F_μ e_b` for a single eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Class {
    Plus,
    Minus,
    Zero,
    Unrelated,
}

impl Kernel {
    fn classify(&self, a: Vertex, b: Vertex) -> Class {
        fn fold<T: PartialEq + Zero>(pairs: impl Iterator<Item = (T, T)>, neg: impl Fn(&T) -> T) -> Class {
            let (mut plus, mut minus, mut zero) = (true, true, true);
            for (x, y) in pairs {
                zero &= x.is_zero() && y.is_zero();
                plus &= x == y;
                minus &= x == neg(&y);
            }
            match (zero, plus, minus) {
                (true, _, _) => Class::Zero,
                (false, true, _) => Class::Plus,
                (false, false, true) => Class::Minus,
                _ => Class::Unrelated,
            }
        }
        match self {
            Kernel::Small(vs) => fold(vs.iter().map(|v| (v[a], v[b])), |y| -*y),
            Kernel::Big(vs) => fold(vs.iter().map(|v| (v[a].clone(), v[b].clone())), |y| -y.clone()),
        }
    }
}

/// Exact spectral data of one graph, shared across vertex and pair queries.
///
/// Supports and eigenspace kernels are computed lazily and cached, so an
/// all-pairs scan pays for each at most once. Not `Sync`; parallel callers
/// build one context per graph.
pub struct SpectralContext<'g> {
    graph: &'g Graph,
    lap: Vec<i64>,
    psi: Poly,
    eigenvalues: BTreeMap<i64, usize>,
    integral: bool,
    supports: Vec<OnceCell<EigenvalueSupport>>,
    kernels: Vec<OnceCell<Kernel>>,
}

impl<'g> SpectralContext<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let n = graph.order();
        let lap = graph.laplacian_i64();
        let psi = match small::berkowitz(&lap, n) {
            Some(p) => Poly::Small(p),
            None => Poly::Big(char_poly(&laplacian(graph)).expect("Laplacians are square")),
        };
        let eigenvalues = psi.roots(n as i64);
        let integral = psi.splits(&eigenvalues);
        Self {
            graph,
            lap,
            psi,
            eigenvalues,
            integral,
            supports: (0..n).map(|_| OnceCell::new()).collect(),
            kernels: (0..=n).map(|_| OnceCell::new()).collect(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// `ψ(t) = det(tI - L)`.
    pub fn char_poly(&self) -> IntPolynomial {
        self.psi.to_big()
    }

    /// Integer eigenvalues of `L` with their multiplicities.
    pub fn integer_eigenvalues(&self) -> &BTreeMap<i64, usize> {
        &self.eigenvalues
    }

    /// Whether every Laplacian eigenvalue is an integer.
    pub fn is_integral(&self) -> bool {
        self.integral
    }

    fn deleted(&self, a: Vertex) -> Vec<i64> {
        let n = self.graph.order();
        let mut out = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != a) {
            for j in (0..n).filter(|&j| j != a) {
                out.push(self.lap[i * n + j]);
            }
        }
        out
    }

    fn support_poly_inner(&self, a: Vertex) -> Poly {
        let n = self.graph.order();
        if let Poly::Small(psi) = &self.psi {
            let fast = small::berkowitz(&self.deleted(a), n - 1)
                .and_then(|pa| small::gcd(psi, &pa))
                .and_then(|g| small::exact_div(psi, &g));
            if let Some(f) = fast {
                return Poly::Small(f);
            }
        }
        let psi = self.psi.to_big();
        let psi_a = char_poly_deleted(&laplacian(self.graph), a).expect("vertex checked by caller");
        let g = poly_gcd(&psi, &psi_a).expect("ψ is monic");
        Poly::Big(exact_div(&psi, &g).expect("gcd divides ψ"))
    }

    /// `ψ / gcd(ψ, ψ_a)`, whose roots are exactly `Φ_a`, each simple.
    pub fn support_poly(&self, a: Vertex) -> Result<IntPolynomial, SpectralError> {
        self.graph.check_vertex(a)?;
        Ok(self.support_poly_inner(a).to_big())
    }

    pub fn support(&self, a: Vertex) -> Result<&EigenvalueSupport, SpectralError> {
        self.graph.check_vertex(a)?;
        Ok(self.supports[a].get_or_init(|| {
            let f = self.support_poly_inner(a);
            let roots = f.roots(self.graph.order() as i64);
            EigenvalueSupport {
                vertex: a,
                all_integer: f.splits(&roots),
                integer_eigenvalues: roots.into_keys().collect(),
                support_size: f.degree(),
            }
        }))
    }

    pub fn periodicity(&self, a: Vertex) -> Result<Periodicity, SpectralError> {
        let s = self.support(a)?;
        let big_g = s
            .all_integer
            .then(|| s.integer_eigenvalues.iter().fold(0u64, |acc, &m| acc.gcd(&(m as u64))))
            .filter(|&g| g > 0);
        Ok(Periodicity { vertex: a, periodic: s.all_integer, big_g })
    }

    fn kernel(&self, mu: i64) -> &Kernel {
        self.kernels[mu as usize].get_or_init(|| {
            let n = self.graph.order();
            match small::integer_kernel(&self.lap, n, mu) {
                Some(basis) => Kernel::Small(basis),
                None => {
                    let shift = BigRational::from_integer(BigInt::from(mu));
                    Kernel::Big(kernel_basis(&laplacian(self.graph).to_rational().shifted(&shift)))
                }
            }
        })
    }

    /// Roots-free strong cospectrality test valid for any spectrum.
    ///
    /// With `u± = e_a ± e_b`, the eigenvalues `θ` with `F_θ u± ≠ 0` are the
    /// roots of `ψ / gcd(ψ, N±)` where `N± = ψ · u±ᵀ (tI - L)⁻¹ u±`. The pair
    /// is strongly cospectral exactly when no `θ` has both `F_θ u⁺` and
    /// `F_θ u⁻` nonzero, i.e. when those two polynomials are coprime.
    pub fn is_strongly_cospectral(&self, a: Vertex, b: Vertex) -> Result<bool, SpectralError> {
        self.graph.check_vertex(a)?;
        self.graph.check_vertex(b)?;
        if a == b {
            return Err(SpectralError::SameVertex);
        }
        if let (Some(plus), Some(minus)) = (self.small_vector_support(a, b, 1), self.small_vector_support(a, b, -1)) {
            if let Some(g) = small::gcd(&plus, &minus) {
                return Ok(g.len() == 1);
            }
        }
        let plus = self.big_vector_support(a, b, 1);
        let minus = self.big_vector_support(a, b, -1);
        Ok(poly_gcd(&plus, &minus).expect("nonzero").degree() == Some(0))
    }

    fn small_vector_support(&self, a: Vertex, b: Vertex, sign: i64) -> Option<Vec<i128>> {
        let Poly::Small(psi) = &self.psi else {
            return None;
        };
        let n = self.graph.order();
        let mut v = vec![0i128; n];
        v[a] = 1;
        v[b] = sign as i128;
        let u = v.clone();
        let mut moments = Vec::with_capacity(n);
        for _ in 0..n {
            moments.push(u.iter().zip(&v).try_fold(0i128, |acc, (x, y)| acc.checked_add(x.checked_mul(*y)?))?);
            let mut next = vec![0i128; n];
            for (i, slot) in next.iter_mut().enumerate() {
                for (&e, &x) in self.lap[i * n..(i + 1) * n].iter().zip(&v) {
                    if e != 0 {
                        *slot = slot.checked_add((e as i128).checked_mul(x)?)?;
                    }
                }
            }
            v = next;
        }
        let mut num = vec![0i128; n];
        for (j, slot) in num.iter_mut().enumerate() {
            for i in j + 1..=n {
                *slot = slot.checked_add(psi[i].checked_mul(moments[i - j - 1])?)?;
            }
        }
        let g = small::gcd(psi, &num)?;
        small::exact_div(psi, &g)
    }

    fn big_vector_support(&self, a: Vertex, b: Vertex, sign: i64) -> IntPolynomial {
        let n = self.graph.order();
        let psi = self.psi.to_big();
        let mut v = vec![BigInt::zero(); n];
        v[a] = BigInt::one();
        v[b] = BigInt::from(sign);
        let u = v.clone();
        let mut moments = Vec::with_capacity(n);
        for _ in 0..n {
            moments.push(u.iter().zip(&v).map(|(x, y)| x * y).sum::<BigInt>());
            v = (0..n)
                .map(|i| (0..n).filter(|&j| self.lap[i * n + j] != 0).map(|j| &v[j] * self.lap[i * n + j]).sum())
                .collect();
        }
        let num: Vec<BigInt> = (0..n).map(|j| (j + 1..=n).map(|i| psi.coeff(i) * &moments[i - j - 1]).sum()).collect();
        let g = poly_gcd(&psi, &IntPolynomial::new(num)).expect("ψ is nonzero");
        exact_div(&psi, &g).expect("gcd divides ψ")
    }

    /// The partition of a strongly cospectral pair, or `None` when the pair
    /// is not strongly cospectral. Both supports must be all-integer.
    pub fn strong_cospectral(&self, a: Vertex, b: Vertex) -> Result<Option<PairPartition>, SpectralError> {
        if a == b {
            self.graph.check_vertex(a)?;
            return Err(SpectralError::SameVertex);
        }
        let (sa, sb) = (self.support(a)?, self.support(b)?);
        if let Some(s) = [sa, sb].into_iter().find(|s| !s.all_integer) {
            // the partition is only represented over the integers, but a
            // negative answer is still exact
            return match self.is_strongly_cospectral(a, b)? {
                false => Ok(None),
                true => Err(SpectralError::NonIntegerSupport(s.vertex)),
            };
        }
        if sa.integer_eigenvalues != sb.integer_eigenvalues {
            return Ok(None);
        }
        let (mut plus, mut minus) = (BTreeSet::new(), BTreeSet::new());
        for &mu in &sa.integer_eigenvalues {
            match self.kernel(mu).classify(a, b) {
                Class::Plus => plus.insert(mu),
                Class::Minus => minus.insert(mu),
                Class::Zero | Class::Unrelated => return Ok(None),
            };
        }
        let zero = self.eigenvalues.keys().filter(|mu| !sa.integer_eigenvalues.contains(mu)).copied().collect();
        Ok(Some(PairPartition { a, b, plus, minus, zero, irrational_spectrum: !self.integral }))
    }
}

pub fn support_poly(g: &Graph, a: Vertex) -> Result<IntPolynomial, SpectralError> {
    SpectralContext::new(g).support_poly(a)
}

pub fn eigenvalue_support(g: &Graph, a: Vertex) -> Result<EigenvalueSupport, SpectralError> {
    g.check_vertex(a)?;
    SpectralContext::new(g).support(a).cloned()
}

pub fn is_periodic(g: &Graph, a: Vertex) -> Result<Periodicity, SpectralError> {
    g.check_vertex(a)?;
    SpectralContext::new(g).periodicity(a)
}

pub fn strong_cospectral(g: &Graph, a: Vertex, b: Vertex) -> Result<Option<PairPartition>, SpectralError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    SpectralContext::new(g).strong_cospectral(a, b)
}

/// `F_μ e_a` in exact rational arithmetic, from a kernel basis of
/// `L - μI` and an orthogonal projection.
pub fn eigenprojection_column(g: &Graph, mu: i64, a: Vertex) -> Result<RatVector, SpectralError> {
    g.check_vertex(a)?;
    let shift = BigRational::from_integer(BigInt::from(mu));
    let basis = kernel_basis(&laplacian(g).to_rational().shifted(&shift));
    if basis.is_empty() {
        return Err(SpectralError::NotAnEigenvalue(mu));
    }
    let mut e = vec![BigRational::zero(); g.order()];
    e[a] = BigRational::one();
    Ok(project(&basis, &e).expect("kernel bases are independent"))
}

fn not_applicable(why: &str) -> SpectralError {
    SpectralError::NotApplicable(why.into())
}

/// Whether the product of the integer eigenvalues outside `Φ_a` divides the
/// number of spanning trees. Needs a connected graph with an integral
/// spectrum and an all-integer support at `a`.
pub fn support_product_divides_trees(g: &Graph, a: Vertex) -> Result<bool, SpectralError> {
    let ctx = SpectralContext::new(g);
    let s = ctx.support(a)?;
    if !is_connected(g) || !s.all_integer || !ctx.is_integral() {
        return Err(not_applicable("needs a connected graph with integral spectrum and support"));
    }
    let product: BigInt = ctx
        .integer_eigenvalues()
        .keys()
        .filter(|mu| !s.integer_eigenvalues.contains(mu))
        .map(|&mu| BigInt::from(mu))
        .product();
    Ok((spanning_tree_count(g) % product).is_zero())
}

/// `|Φ_a| >= ecc(a) + 1` on a connected graph.
pub fn check_eccentricity_bound(g: &Graph, a: Vertex) -> Result<bool, SpectralError> {
    let s = eigenvalue_support(g, a)?;
    if !is_connected(g) {
        return Err(not_applicable("eccentricity needs a connected graph"));
    }
    Ok(s.support_size > eccentricity(g, a)?)
}

/// Summing `F_μ e_a` over each class yields `(e_a ± e_b) / 2` exactly.
pub fn check_idempotent_sums(g: &Graph, p: &PairPartition) -> Result<bool, SpectralError> {
    let n = g.order();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for (class, sign) in [(&p.plus, 1), (&p.minus, -1)] {
        let mut sum = vec![BigRational::zero(); n];
        for &mu in class {
            for (acc, x) in sum.iter_mut().zip(eigenprojection_column(g, mu, p.a)?) {
                *acc += x;
            }
        }
        let mut want = vec![BigRational::zero(); n];
        want[p.a] = half.clone();
        want[p.b] = &half * BigRational::from_integer(BigInt::from(sign));
        if sum != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strongly cospectral vertices have equal degree.
pub fn check_equal_degrees(g: &Graph, p: &PairPartition) -> bool {
    g.degree(p.a) == g.degree(p.b)
}

/// Two-sided degree bounds from the smallest nonzero and largest element of
/// each class, with `σ = 1` when `a ~ b`. Needs a connected graph.
pub fn check_degree_bounds(g: &Graph, p: &PairPartition) -> Result<bool, SpectralError> {
    if !is_connected(g) {
        return Err(not_applicable("degree bounds need a connected graph"));
    }
    let nonzero_min = |s: &BTreeSet<i64>| s.iter().copied().find(|&x| x != 0);
    let (Some(lp), Some(tp), Some(lm), Some(tm)) =
        (nonzero_min(&p.plus), p.plus.last().copied(), nonzero_min(&p.minus), p.minus.last().copied())
    else {
        return Err(not_applicable("a class lacks a nonzero element"));
    };
    let n = g.order() as i64;
    let sigma = BigRational::from_integer(BigInt::from(g.has_edge(p.a, p.b) as i64));
    let scaled = |x: i64| BigRational::new(BigInt::from((n - 2) * x), BigInt::from(n)) + &sigma;
    let int = |x: i64| BigRational::from_integer(BigInt::from(x));
    let d = int(g.degree(p.a) as i64);
    let lower = std::cmp::max(scaled(lp), int(lm) - &sigma);
    let upper = std::cmp::min(scaled(tp), int(tm) - &sigma);
    Ok(lower <= d && d <= upper)
}

/// With `k = |Φ⁻|`: every vertex at distance `k` from `a` is within `k` of
/// `b`, and `dist(a, b) <= 2k`.
pub fn check_distance_bound(g: &Graph, p: &PairPartition) -> Result<bool, SpectralError> {
    let k = p.minus.len();
    let da = distances(g, p.a)?;
    let db = distances(g, p.b)?;
    let ring_ok = da.iter().zip(&db).all(|(x, y)| *x != Some(k) || y.is_some_and(|y| y <= k));
    let pair_ok = da[p.b].is_some_and(|d| d <= 2 * k);
    Ok(ring_ok && pair_ok)
}

/// `|Φ⁻| = 1` forces `a` and `b` to be twins.
pub fn check_twin(g: &Graph, p: &PairPartition) -> bool {
    if p.minus.len() != 1 {
        return true;
    }
    let outside =
        |v: Vertex| -> Vec<Vertex> { g.neighbors(v).iter().copied().filter(|&w| w != p.a && w != p.b).collect() };
    outside(p.a) == outside(p.b)
}

/// Every odd prime dividing a member of `Φ⁻` divides the spanning-tree
/// count.
pub fn check_prime_divisors(g: &Graph, p: &PairPartition) -> bool {
    let trees = spanning_tree_count(g);
    p.minus
        .iter()
        .all(|&mu| odd_prime_factors(mu.unsigned_abs()).into_iter().all(|q| (&trees % BigInt::from(q)).is_zero()))
}

fn odd_prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while m > 0 && m.is_multiple_of(2) {
        m /= 2;
    }
    let mut q = 3;
    while q * q <= m {
        if m.is_multiple_of(q) {
            out.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 2;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Structural sanity of a partition: `0 ∈ Φ⁺`, classes disjoint, entries in
/// `[0, n]`, and on three or more vertices `|Φ⁺| >= 2`, `|Φ⁻| >= 1`.
pub fn check_partition_shape(g: &Graph, p: &PairPartition) -> bool {
    let n = g.order() as i64;
    let disjoint = p.plus.is_disjoint(&p.minus) && p.plus.is_disjoint(&p.zero) && p.minus.is_disjoint(&p.zero);
    let in_range = p.plus.iter().chain(&p.minus).chain(&p.zero).all(|&x| (0..=n).contains(&x));
    let sizes = g.order() < 3 || (p.plus.len() >= 2 && !p.minus.is_empty());
    p.plus.contains(&0) && disjoint && in_range && sizes
}

/// Integer spectrum of `m` recovered from its characteristic polynomial;
/// used by tests and the oracle cross-checks.
pub fn integer_spectrum(m: &IntMatrix, hi: i64) -> BTreeMap<i64, usize> {
    let p = char_poly(m).expect("square");
    integer_roots(&p, 0, hi).expect("nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, double_cone, standard_graph, StandardGraph};

    fn path(n: usize) -> Graph {
        standard_graph(StandardGraph::Path, n).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        standard_graph(StandardGraph::Cycle, n).unwrap()
    }

    fn set(xs: &[i64]) -> BTreeSet<i64> {
        xs.iter().copied().collect()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn support_polynomials() {
        let p3 = path(3);
        assert_eq!(support_poly(&p3, 0).unwrap(), IntPolynomial::from_i64(&[0, 3, -4, 1]));
        assert_eq!(support_poly(&p3, 1).unwrap(), IntPolynomial::from_i64(&[0, -3, 1]));
        assert_eq!(support_poly(&path(2), 1).unwrap(), IntPolynomial::from_i64(&[0, -2, 1]));
        assert!(support_poly(&p3, 3).is_err());
    }

    #[test]
    fn supports() {
        let s = eigenvalue_support(&path(3), 0).unwrap();
        assert_eq!((s.integer_eigenvalues, s.all_integer, s.support_size), (set(&[0, 1, 3]), true, 3));
        let s = eigenvalue_support(&cycle(5), 2).unwrap();
        assert_eq!((s.integer_eigenvalues, s.all_integer), (set(&[0]), false));
        let s = eigenvalue_support(&cycle(4), 1).unwrap();
        assert_eq!((s.integer_eigenvalues, s.all_integer), (set(&[0, 2, 4]), true));
        let s = eigenvalue_support(&Graph::empty(1), 0).unwrap();
        assert_eq!((s.integer_eigenvalues, s.all_integer), (set(&[0]), true));
    }

    #[test]
    fn periodicity() {
        for v in 0..4 {
            let p = is_periodic(&cycle(4), v).unwrap();
            assert_eq!((p.periodic, p.big_g), (true, Some(2)));
            assert_eq!(p.minimal_period(), PiMultiple::new(1, 1));
        }
        assert!(!is_periodic(&cycle(5), 0).unwrap().periodic);
        assert_eq!(is_periodic(&path(2), 0).unwrap().big_g, Some(2));
        let lone = is_periodic(&Graph::empty(1), 0).unwrap();
        assert!(lone.periodic && lone.periodic_at(&PiMultiple::new(1, 7).unwrap()));
    }

    #[test]
    fn projection_columns() {
        let p3 = path(3);
        assert_eq!(eigenprojection_column(&p3, 0, 0).unwrap(), vec![rat(1, 3); 3]);
        assert!(algebra::is_zero_vector(&eigenprojection_column(&p3, 1, 1).unwrap()));
        assert_eq!(eigenprojection_column(&p3, 1, 0).unwrap(), vec![rat(1, 2), rat(0, 1), rat(-1, 2)]);
        assert_eq!(eigenprojection_column(&p3, 2, 0), Err(SpectralError::NotAnEigenvalue(2)));
    }

    #[test]
    fn partitions() {
        let p = strong_cospectral(&path(3), 0, 2).unwrap().unwrap();
        assert_eq!((p.plus.clone(), p.minus.clone(), p.zero.clone()), (set(&[0, 3]), set(&[1]), set(&[])));
        let p = strong_cospectral(&cycle(6), 0, 3).unwrap().unwrap();
        assert_eq!((p.plus.clone(), p.minus.clone(), p.zero.clone()), (set(&[0, 3]), set(&[1, 4]), set(&[])));
        assert_eq!(strong_cospectral(&path(4), 0, 1).unwrap(), None);
        // the ends of P4 are exchanged by a reflection, so they are strongly
        // cospectral, but over an irrational support
        assert_eq!(strong_cospectral(&path(4), 0, 3), Err(SpectralError::NonIntegerSupport(0)));
        assert_eq!(strong_cospectral(&path(3), 1, 1), Err(SpectralError::SameVertex));
        assert_eq!(strong_cospectral(&cycle(5), 0, 2).unwrap(), None);
        // integral supports that are not related: K4 minus an edge, a
        // conical vertex against an apex
        let g = double_cone(&path(2));
        assert_eq!(strong_cospectral(&g, 0, 2).unwrap(), None);
    }

    /// Kernel classification agrees with comparing projection columns.
    #[test]
    fn classification_matches_projections() {
        let graphs = [path(3), cycle(4), cycle(6), double_cone(&path(3)), complement(&cycle(6))];
        for g in &graphs {
            let ctx = SpectralContext::new(g);
            for a in 0..g.order() {
                for b in 0..g.order() {
                    if a == b {
                        continue;
                    }
                    for &mu in ctx.integer_eigenvalues().keys() {
                        let fa = eigenprojection_column(g, mu, a).unwrap();
                        let fb = eigenprojection_column(g, mu, b).unwrap();
                        let neg: Vec<BigRational> = fb.iter().map(|x| -x.clone()).collect();
                        let want = if algebra::is_zero_vector(&fa) && algebra::is_zero_vector(&fb) {
                            Class::Zero
                        } else if fa == fb {
                            Class::Plus
                        } else if fa == neg {
                            Class::Minus
                        } else {
                            Class::Unrelated
                        };
                        assert_eq!(ctx.kernel(mu).classify(a, b), want, "{g:?} {a} {b} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn trees_divisibility_and_invariants() {
        assert!(support_product_divides_trees(&path(3), 1).unwrap());
        for v in 0..6 {
            assert!(support_product_divides_trees(&cycle(6), v).unwrap());
        }
        assert!(support_product_divides_trees(&cycle(5), 0).is_err());
        for g in [path(3), cycle(6)] {
            for a in 0..g.order() {
                assert!(check_eccentricity_bound(&g, a).unwrap());
            }
        }
        let p = strong_cospectral(&cycle(6), 0, 3).unwrap().unwrap();
        assert!(check_idempotent_sums(&cycle(6), &p).unwrap());
        assert!(check_degree_bounds(&cycle(6), &p).unwrap());
        assert!(check_distance_bound(&cycle(6), &p).unwrap());
        assert!(check_twin(&cycle(6), &p));
        assert!(check_prime_divisors(&cycle(6), &p));
        assert!(check_partition_shape(&cycle(6), &p));
        let p = strong_cospectral(&path(3), 0, 2).unwrap().unwrap();
        assert!(check_twin(&path(3), &p));
        assert_eq!(p.swapped().a, 2);
    }

    #[test]
    fn prime_factors() {
        assert_eq!(odd_prime_factors(90), vec![3, 5]);
        assert_eq!(odd_prime_factors(8), Vec::<u64>::new());
        assert_eq!(odd_prime_factors(49), vec![7]);
    }

    /// The polynomial test must agree with the kernel test wherever the
    /// latter applies, and also covers irrational supports.
    #[test]
    fn polynomial_test_agrees_with_kernels() {
        let graphs = [path(3), path(5), cycle(4), cycle(5), cycle(6), double_cone(&path(3)), complement(&cycle(6))];
        for g in &graphs {
            let ctx = SpectralContext::new(g);
            for a in 0..g.order() {
                for b in a + 1..g.order() {
                    let poly = ctx.is_strongly_cospectral(a, b).unwrap();
                    match ctx.strong_cospectral(a, b) {
                        Ok(p) => assert_eq!(poly, p.is_some(), "{g:?} {a} {b}"),
                        Err(SpectralError::NonIntegerSupport(_)) => assert!(poly),
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
        // ends of P5 are exchanged by the reflection: strongly cospectral
        // with an irrational support
        assert!(ctx_sc(&path(5), 0, 4));
        assert_eq!(strong_cospectral(&path(5), 0, 4), Err(SpectralError::NonIntegerSupport(0)));
        assert!(!ctx_sc(&path(5), 0, 1));
    }

    fn ctx_sc(g: &Graph, a: Vertex, b: Vertex) -> bool {
        SpectralContext::new(g).is_strongly_cospectral(a, b).unwrap()
    }

    #[test]
    fn big_fallback_agrees() {
        // large enough that the machine-integer Berkowitz overflows
        let g = double_cone(&standard_graph(StandardGraph::Complete, 38).unwrap());
        let ctx = SpectralContext::new(&g);
        assert!(matches!(ctx.psi, Poly::Big(_)));
        assert_eq!(ctx.integer_eigenvalues(), &BTreeMap::from([(0, 1), (38, 1), (40, 38)]));
        let s = ctx.support(3).unwrap();
        assert_eq!((s.integer_eigenvalues.clone(), s.all_integer), (set(&[0, 40]), true));
        let p = ctx.strong_cospectral(0, 1).unwrap().unwrap();
        assert_eq!((p.plus, p.minus), (set(&[0, 40]), set(&[38])));
        assert_eq!(ctx.strong_cospectral(2, 3).unwrap(), None);
        assert!(ctx.is_strongly_cospectral(0, 1).unwrap());
    }
}
