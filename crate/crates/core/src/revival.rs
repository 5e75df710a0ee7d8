//! Proper fractional revival: the exact decision, its earliest time and
//! amplitudes, and arithmetic checks for the constructions built on it.
//!
//! For a strongly cospectral pair with integer classes `Φ⁺`, `Φ⁻`, the walk
//! `U(t) = exp(itL)` at `t` acts on `e_a` as
//! `Σ_{Φ⁺} e^{itμ} F_μ e_a + Σ_{Φ⁻} e^{itμ} F_μ e_a`. Revival needs
//! `e^{itμ}` constant on each class, which happens exactly at multiples of
//! `2π/g` where `g` is the gcd of within-class differences. Since `0 ∈ Φ⁺`,
//! the `Φ⁺` phase is then `1` and the `Φ⁻` phase is `ω = e^{2πik/g}`, with `k`
//! the common residue of `Φ⁻` modulo `g`. Summing over each class gives
//! `(e_a ± e_b)/2`, so `α = (1 + ω)/2` and `β = (1 - ω)/2`.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{RevivalError, SpectralError};
use crate::graph::{cartesian_product, complement, is_connected, join, Graph, Vertex};
use crate::oracle;
use crate::spectral::{PairPartition, SpectralContext};
use crate::time::PiMultiple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RevivalStatus {
    NotStronglyCospectral,
    NonIntegerSupport,
    PeriodicOnly,
    Proper,
}

/// The root of unity `ω = e^{2πik/g}`. `(k, g)` is kept as produced;
/// equality compares the fractions.
#[derive(Clone, Copy, Debug, Eq, Serialize, Deserialize)]
pub struct PhaseRational {
    pub k: u64,
    pub g: u64,
}

impl PartialEq for PhaseRational {
    fn eq(&self, other: &Self) -> bool {
        self.k as u128 * other.g as u128 == other.k as u128 * self.g as u128
    }
}

impl PhaseRational {
    /// `None` unless `g > 0` and `k < g`.
    pub fn new(k: u64, g: u64) -> Option<Self> {
        (g > 0 && k < g).then_some(Self { k, g })
    }

    /// Reduced modulo one full turn.
    fn wrapped(k: u64, g: u64) -> Self {
        Self { k: k % g, g }
    }

    pub fn omega(&self) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * PI * self.k as f64 / self.g as f64)
    }

    /// `ω = 1`: the walk returns to `e_a` up to phase.
    pub fn is_trivial(&self) -> bool {
        self.k == 0
    }

    /// `ω = -1`: perfect state transfer.
    pub fn is_half_turn(&self) -> bool {
        2 * self.k == self.g
    }
}

/// `α = (1 + ω)/2` and `β = (1 - ω)/2`; the phase is the exact description,
/// the complex numbers are its decimal evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Amplitudes {
    pub phase: PhaseRational,
    pub alpha: Complex64,
    pub beta: Complex64,
}

pub fn amplitudes_at(phase: PhaseRational) -> Amplitudes {
    let w = phase.omega();
    let half = Complex64::new(0.5, 0.0);
    let (mut alpha, mut beta) = (half * (1.0 + w), half * (1.0 - w));
    // exact cases stay exact in floating point
    if phase.is_trivial() {
        (alpha, beta) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    } else if phase.is_half_turn() {
        (alpha, beta) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    }
    Amplitudes { phase, alpha, beta }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RevivalDecision {
    pub status: RevivalStatus,
    pub pair: (Vertex, Vertex),
    pub partition: Option<PairPartition>,
    pub g: Option<u64>,
    pub earliest_time: Option<PiMultiple>,
    pub phase: Option<PhaseRational>,
    pub is_pst: Option<bool>,
}

impl RevivalDecision {
    fn bare(status: RevivalStatus, a: Vertex, b: Vertex) -> Self {
        Self { status, pair: (a, b), partition: None, g: None, earliest_time: None, phase: None, is_pst: None }
    }

    pub fn is_proper(&self) -> bool {
        self.status == RevivalStatus::Proper
    }

    pub fn amplitudes(&self) -> Option<Amplitudes> {
        self.phase.filter(|_| self.is_proper()).map(amplitudes_at)
    }

    /// Phase of `ω` at `t`, when `t` is a revival time of this pair (proper
    /// or not). Defined for proper and periodic-only decisions.
    pub fn phase_at(&self, t: &PiMultiple) -> Option<PhaseRational> {
        self.partition.as_ref().and_then(|p| phase_at(p, t))
    }

    /// Proper revival exactly at `t`: `t = m · 2π/g` with `m·k ≢ 0 (mod g)`.
    pub fn proper_at(&self, t: &PiMultiple) -> bool {
        self.is_proper() && self.phase_at(t).is_some_and(|w| !w.is_trivial())
    }
}

/// `gcd` of the within-class differences of `Φ⁺` and of `Φ⁻`; undefined
/// (reported as [`RevivalError::SpecialSmall`]) when both classes are
/// singletons, which only happens on two vertices or on a `K2` component.
pub fn class_gcd(p: &PairPartition) -> Result<u64, RevivalError> {
    let mut g = 0u64;
    for class in [&p.plus, &p.minus] {
        if let Some(&lo) = class.first() {
            g = class.iter().fold(g, |acc, &x| acc.gcd(&((x - lo) as u64)));
        }
    }
    if g == 0 {
        Err(RevivalError::SpecialSmall)
    } else {
        Ok(g)
    }
}

/// `e^{itμ}` at `t = (p/q)π` is the root of unity `pμ / 2q` turns. The pair
/// revives at `t` when that is constant on each class; the result is then the
/// `Φ⁻` phase.
pub fn phase_at(part: &PairPartition, t: &PiMultiple) -> Option<PhaseRational> {
    let turn = 2 * t.den() as u128;
    let num = t.num() as u128;
    let constant =
        |class: &BTreeSet<i64>, base: i64| class.iter().all(|&mu| (num * (mu - base) as u128).is_multiple_of(turn));
    if !constant(&part.plus, 0) {
        return None;
    }
    let Some(&m0) = part.minus.first() else {
        return Some(PhaseRational { k: 0, g: 1 });
    };
    if !constant(&part.minus, m0) {
        return None;
    }
    let k = (num * m0 as u128 % turn) as u64;
    let g = turn as u64;
    let r = k.gcd(&g);
    Some(if k == 0 { PhaseRational { k: 0, g: 1 } } else { PhaseRational::wrapped(k / r, g / r) })
}

/// The characterization applied to one pair on at least three vertices.
pub fn decide_proper_lafr(g: &Graph, a: Vertex, b: Vertex) -> Result<RevivalDecision, RevivalError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if g.order() < 3 {
        return Err(RevivalError::SpecialSmall);
    }
    decide_with(&SpectralContext::new(g), a, b)
}

/// [`decide_proper_lafr`] against a shared spectral context.
pub fn decide_with(ctx: &SpectralContext<'_>, a: Vertex, b: Vertex) -> Result<RevivalDecision, RevivalError> {
    if a == b {
        return Err(SpectralError::SameVertex.into());
    }
    if ctx.graph().order() < 3 {
        return Err(RevivalError::SpecialSmall);
    }
    let (sa, sb) = (ctx.support(a)?, ctx.support(b)?);
    if !sa.all_integer || !sb.all_integer {
        return Ok(RevivalDecision::bare(RevivalStatus::NonIntegerSupport, a, b));
    }
    let Some(part) = ctx.strong_cospectral(a, b)? else {
        return Ok(RevivalDecision::bare(RevivalStatus::NotStronglyCospectral, a, b));
    };
    decide_partition(part)
}

fn decide_partition(part: PairPartition) -> Result<RevivalDecision, RevivalError> {
    let g = class_gcd(&part)?;
    let residues: BTreeSet<u64> = part.minus.iter().map(|&m| m as u64 % g).collect();
    debug_assert!(residues.len() <= 1, "Φ⁻ residues must agree modulo g");
    let k = residues.first().copied().unwrap_or(0);
    let (a, b) = (part.a, part.b);
    let mut d = RevivalDecision::bare(RevivalStatus::PeriodicOnly, a, b);
    d.g = Some(g);
    if k != 0 {
        let phase = PhaseRational { k, g };
        d.status = RevivalStatus::Proper;
        d.earliest_time = Some(PiMultiple::two_pi_over(g));
        d.phase = Some(phase);
        d.is_pst = Some(phase.is_half_turn());
    }
    d.partition = Some(part);
    Ok(d)
}

/// Candidate pairs that survive the cheap necessary conditions: equal
/// degrees, all-integer supports, and equal supports.
fn candidate_pairs(ctx: &SpectralContext<'_>) -> Result<Vec<(Vertex, Vertex)>, RevivalError> {
    let g = ctx.graph();
    let n = g.order();
    let deg = g.degrees();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if deg[a] != deg[b] {
                continue;
            }
            let (sa, sb) = (ctx.support(a)?, ctx.support(b)?);
            if sa.all_integer && sb.all_integer && sa.integer_eigenvalues == sb.integer_eigenvalues {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

/// Proper and periodic-only decisions for every unordered pair, in
/// lexicographic order. Pairs on a `K2` component have no class gcd and are
/// omitted; graphs on fewer than three vertices yield nothing.
pub fn all_lafr_pairs(g: &Graph) -> Vec<RevivalDecision> {
    all_lafr_pairs_with(&SpectralContext::new(g))
}

pub fn all_lafr_pairs_with(ctx: &SpectralContext<'_>) -> Vec<RevivalDecision> {
    if ctx.graph().order() < 3 {
        return Vec::new();
    }
    let pairs = candidate_pairs(ctx).expect("vertices are in range");
    pairs
        .into_iter()
        .filter_map(|(a, b)| decide_with(ctx, a, b).ok())
        .filter(|d| matches!(d.status, RevivalStatus::Proper | RevivalStatus::PeriodicOnly))
        .collect()
}

pub fn proper_pairs(g: &Graph) -> Vec<RevivalDecision> {
    all_lafr_pairs(g).into_iter().filter(RevivalDecision::is_proper).collect()
}

/// The smallest `2π/g` over proper pairs.
pub fn earliest_common_lafr_time(g: &Graph) -> Option<PiMultiple> {
    proper_pairs(g).iter().filter_map(|d| d.earliest_time).min()
}

/// Pairs with proper revival exactly at `t`, any order `n >= 2`. This works
/// from the partition directly, so it also covers `K2` and `K2` components,
/// where the class gcd is undefined.
pub fn proper_pairs_at(g: &Graph, t: &PiMultiple) -> BTreeSet<(Vertex, Vertex)> {
    let ctx = SpectralContext::new(g);
    let mut out = BTreeSet::new();
    for (a, b) in candidate_pairs(&ctx).expect("vertices are in range") {
        if let Ok(Some(p)) = ctx.strong_cospectral(a, b) {
            if phase_at(&p, t).is_some_and(|w| !w.is_trivial()) {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Proper revival between `a` and `b` exactly at `t`.
pub fn proper_at_time(g: &Graph, a: Vertex, b: Vertex, t: &PiMultiple) -> Result<bool, RevivalError> {
    Ok(lafr_phase_at_time(g, a, b, t)?.is_some_and(|w| !w.is_trivial()))
}

/// `ω` at `t` when the pair revives there (`U(t)e_a = αe_a + βe_b`), else
/// `None`. Pairs over irrational supports never revive properly and report
/// `None`.
pub fn lafr_phase_at_time(
    g: &Graph,
    a: Vertex,
    b: Vertex,
    t: &PiMultiple,
) -> Result<Option<PhaseRational>, RevivalError> {
    let ctx = SpectralContext::new(g);
    match ctx.strong_cospectral(a, b) {
        Ok(Some(p)) => Ok(phase_at(&p, t)),
        Ok(None) | Err(SpectralError::NonIntegerSupport(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Two vertices: `U(t)e_0 = ((1 + e^{2it})/2) e_0 + ((1 - e^{2it})/2) e_1`,
/// so revival is proper exactly when `t ∉ πℤ`, and perfect at odd multiples
/// of `π/2`. Returns `ω = e^{2it}`.
pub fn two_vertex_phase(t: &PiMultiple) -> PhaseRational {
    PhaseRational::wrapped(t.num() % t.den(), t.den())
}

fn not_applicable(why: impl Into<String>) -> RevivalError {
    RevivalError::NotApplicable(why.into())
}

/// Both sides of the Cartesian product theorem at one time. Proper revival in
/// `X □ Y` at `τ` happens exactly between `(u, c)` and `(u, d)` with `u`
/// periodic in `X` and `(c, d)` proper in `Y`, or symmetrically with the
/// factors swapped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartesianCheck {
    /// Proper pairs of the product at `τ`.
    pub product_pairs: BTreeSet<(Vertex, Vertex)>,
    /// Pairs predicted from the factors.
    pub predicted_pairs: BTreeSet<(Vertex, Vertex)>,
    /// `X` has a periodic vertex and `Y` a proper pair at `τ`.
    pub x_periodic_y_proper: bool,
    /// `Y` has a periodic vertex and `X` a proper pair at `τ`.
    pub y_periodic_x_proper: bool,
}

impl CartesianCheck {
    pub fn product_has_proper(&self) -> bool {
        !self.product_pairs.is_empty()
    }

    /// The iff holds and the pair structure matches.
    pub fn holds(&self) -> bool {
        self.product_pairs == self.predicted_pairs
            && self.product_has_proper() == (self.x_periodic_y_proper || self.y_periodic_x_proper)
    }
}

pub fn check_cartesian_theorem(x: &Graph, y: &Graph, tau: &PiMultiple) -> Result<CartesianCheck, RevivalError> {
    if tau.is_zero() {
        return Err(not_applicable("time must be positive"));
    }
    let product = cartesian_product(x, y);
    let periodic = |g: &Graph| -> Result<Vec<Vertex>, RevivalError> {
        let ctx = SpectralContext::new(g);
        let mut out = Vec::new();
        for v in 0..g.order() {
            if ctx.periodicity(v)?.periodic_at(tau) {
                out.push(v);
            }
        }
        Ok(out)
    };
    let (px, py) = (periodic(x)?, periodic(y)?);
    let (qx, qy) = (proper_pairs_at(x, tau), proper_pairs_at(y, tau));
    let m = y.order();
    let mut predicted = BTreeSet::new();
    for &u in &px {
        for &(c, d) in &qy {
            predicted.insert((u * m + c, u * m + d));
        }
    }
    for &u in &py {
        for &(c, d) in &qx {
            predicted.insert((c * m + u, d * m + u));
        }
    }
    Ok(CartesianCheck {
        product_pairs: proper_pairs_at(&product, tau),
        predicted_pairs: predicted,
        x_periodic_y_proper: !px.is_empty() && !qy.is_empty(),
        y_periodic_x_proper: !py.is_empty() && !qx.is_empty(),
    })
}

/// `exp(iτL̄) = exp(-iτL)` within `1e-9` when `nτ ∈ 2πℤ`, via the oracle.
pub fn check_complement_transfer(x: &Graph, tau: &PiMultiple) -> Result<bool, RevivalError> {
    let n = x.order() as u128;
    if !(n * tau.num() as u128).is_multiple_of(2 * tau.den() as u128) {
        return Err(not_applicable("n·τ is not a multiple of 2π"));
    }
    let t = tau.to_f64();
    let lhs = oracle::transition_matrix(&complement(x), t).map_err(|e| not_applicable(e.to_string()))?;
    let rhs = oracle::transition_matrix(x, -t).map_err(|e| not_applicable(e.to_string()))?;
    Ok(lhs.distance(&rhs) <= 1e-9)
}

/// A graph is a join exactly when its complement is disconnected.
pub fn is_join(z: &Graph) -> bool {
    z.order() >= 2 && !is_connected(&complement(z))
}

/// On a join of order `n`, every proper pair has `g | n`.
pub fn check_join_timing(z: &Graph) -> Result<bool, RevivalError> {
    if z.order() < 3 || !is_join(z) {
        return Err(not_applicable("not a join on at least three vertices"));
    }
    let n = z.order() as u64;
    Ok(proper_pairs(z).iter().all(|d| d.g.is_some_and(|g| n.is_multiple_of(g))))
}

/// Given proper revival between `a` and `b` in `X` with class gcd `g`,
/// `g | |X|` and `g | |Y|`, decides the same pair in `X + Y`. The
/// construction predicts proper revival there at `2π/g`.
pub fn check_infjoin_construction(
    x: &Graph,
    pair: (Vertex, Vertex),
    y: &Graph,
) -> Result<RevivalDecision, RevivalError> {
    let base = decide_proper_lafr(x, pair.0, pair.1)?;
    let g = base.g.filter(|_| base.is_proper()).ok_or_else(|| not_applicable("pair is not proper in X"))?;
    if !(x.order() as u64).is_multiple_of(g) || !(y.order() as u64).is_multiple_of(g) {
        return Err(not_applicable(format!("g = {g} must divide both orders")));
    }
    decide_proper_lafr(&join(x, y), pair.0, pair.1)
}

/// The conditions of the threshold-graph characterization for the pair
/// `(a, b)` at `τ`: `m1 = 2` with `{a, b}` the initial independent set,
/// `τ ∉ (π/2)ℤ`, `(m1 + m2)τ ≡ 0` and `m_j τ ≡ 0 (mod 2π)` for `j >= 3`.
pub fn threshold_conditions(m: &[usize], pair: (Vertex, Vertex), tau: &PiMultiple) -> bool {
    let full_turn = |k: usize| (k as u128 * tau.num() as u128).is_multiple_of(2 * tau.den() as u128);
    let half_pi = PiMultiple::new(1, 2).expect("nonzero");
    m.len() >= 2
        && m[0] == 2
        && (pair == (0, 1) || pair == (1, 0))
        && tau.multiple_of(&half_pi).is_none()
        && full_turn(m[0] + m[1])
        && m[2..].iter().all(|&k| full_turn(k))
}

/// Polygamy arithmetic for `X □ Y` with proper pairs of class gcds `g`, `h`
/// and vertex supports with gcds `G`, `H`. At `2π/gcd(g, H)` the `X` pair
/// revives properly (it is a revival time but not a period, as
/// `gcd(g, H) ∤ G`) while `Y` is periodic; symmetrically at `2π/gcd(h, G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygamyCheck {
    pub lafr_x_per_y_time: PiMultiple,
    pub lafr_y_per_x_time: PiMultiple,
    pub ok: bool,
}

pub fn check_polygamy_conditions(g: u64, h: u64, big_g: u64, big_h: u64) -> Result<PolygamyCheck, RevivalError> {
    if [g, h, big_g, big_h].contains(&0) {
        return Err(not_applicable("all parameters must be positive"));
    }
    let d1 = g.gcd(&big_h);
    let d2 = h.gcd(&big_g);
    Ok(PolygamyCheck {
        lafr_x_per_y_time: PiMultiple::two_pi_over(d1),
        lafr_y_per_x_time: PiMultiple::two_pi_over(d2),
        ok: !big_g.is_multiple_of(d1) && !big_h.is_multiple_of(d2),
    })
}

/// Antipodal classes of a Hadamard graph built from an order-`n²` matrix:
/// `Φ⁺ = {0, n², 2n²}` and `Φ⁻ = {n² - n, n² + n}`.
pub fn hadamard_partition_check(n: i64, part: &PairPartition) -> bool {
    let s = n * n;
    part.plus == BTreeSet::from([0, s, 2 * s]) && part.minus == BTreeSet::from([s - n, s + n])
}
