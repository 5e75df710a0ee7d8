//! Full analysis of one graph as a serializable report: supports,
//! per-vertex periodicity, revival decisions with exact times and phases,
//! and an oracle residual for every proper decision.

use std::fmt;
use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{OracleError, RevivalError, SpectralError};
use crate::graph::{to_graph6, Graph, Vertex};
use crate::oracle::{self, Spectrum};
use crate::revival::{all_lafr_pairs_with, decide_with, RevivalDecision, RevivalStatus};
use crate::spectral::SpectralContext;
use crate::time::PiMultiple;

pub const DEFAULT_MAX_EXACT: usize = 500;
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("graph has {n} vertices; the exact pipeline is capped at {max}")]
    TooLarge { n: usize, max: usize },
    #[error("pair ({0}, {1}) is not two distinct vertices of the graph")]
    BadPair(Vertex, Vertex),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Revival(#[from] RevivalError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    /// Restrict decisions to these pairs (any status is then reported).
    pub pairs: Option<Vec<(Vertex, Vertex)>>,
    /// Residual bound for calling a proper decision oracle-verified.
    pub tol: f64,
    pub max_exact: usize,
    pub max_numeric: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self { pairs: None, tol: DEFAULT_TOL, max_exact: DEFAULT_MAX_EXACT, max_numeric: oracle::MAX_ORDER }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphIdentity {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseValue {
    pub k: u64,
    pub g: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecisionRecord {
    pub pair: [Vertex; 2],
    pub status: RevivalStatus,
    pub g: Option<u64>,
    pub time: Option<PiMultiple>,
    pub time_decimal: Option<String>,
    pub phase: Option<PhaseValue>,
    pub alpha: Option<ComplexValue>,
    pub beta: Option<ComplexValue>,
    pub is_pst: Option<bool>,
    pub oracle_residual: Option<f64>,
    pub oracle_verified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicityRecord {
    pub vertex: Vertex,
    pub periodic: bool,
    #[serde(rename = "G")]
    pub big_g: Option<u64>,
    pub period: Option<PiMultiple>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportRecord {
    pub vertex: Vertex,
    pub integer_eigenvalues: Vec<i64>,
    pub all_integer: bool,
    pub support_size: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RuntimeStats {
    pub exact_secs: f64,
    pub oracle_secs: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Toolchain {
    pub package: String,
    pub version: String,
    pub rustc: String,
}

impl Toolchain {
    pub fn current() -> Self {
        Self {
            package: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            rustc: env!("LAFR_RUSTC_VERSION").into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: GraphIdentity,
    pub decisions: Vec<DecisionRecord>,
    pub periodicity: Vec<PeriodicityRecord>,
    pub supports: Vec<SupportRecord>,
    pub notes: Vec<String>,
    pub stats: RuntimeStats,
    pub toolchain: Toolchain,
}

impl AnalysisReport {
    pub fn proper(&self) -> impl Iterator<Item = &DecisionRecord> {
        self.decisions.iter().filter(|d| d.status == RevivalStatus::Proper)
    }

    /// Every proper decision has a residual within tolerance.
    pub fn all_verified(&self) -> bool {
        self.proper().all(|d| d.oracle_verified == Some(true))
    }
}

/// `‖U(τ)e_a - αe_a - βe_b‖∞` for a proper decision, at its earliest time.
pub fn oracle_residual(spec: &Spectrum, d: &RevivalDecision) -> Option<f64> {
    let amp = d.amplitudes()?;
    let t = d.earliest_time?.to_f64();
    Some(oracle::revival_residual(spec, t, d.pair.0, d.pair.1, amp.alpha, amp.beta))
}

fn record(d: &RevivalDecision) -> DecisionRecord {
    let amp = d.amplitudes();
    DecisionRecord {
        pair: [d.pair.0, d.pair.1],
        status: d.status,
        g: d.g,
        time: d.earliest_time,
        time_decimal: d.earliest_time.map(|t| t.decimal()),
        phase: d.phase.map(|p| PhaseValue { k: p.k, g: p.g }),
        alpha: amp.map(|a| a.alpha.into()),
        beta: amp.map(|a| a.beta.into()),
        is_pst: d.is_pst,
        oracle_residual: None,
        oracle_verified: None,
    }
}

pub fn analyze(g: &Graph, opts: &AnalyzeOptions) -> Result<AnalysisReport, ReportError> {
    let n = g.order();
    if n > opts.max_exact {
        return Err(ReportError::TooLarge { n, max: opts.max_exact });
    }
    let start = Instant::now();
    let ctx = SpectralContext::new(g);
    let mut notes = Vec::new();
    let mut supports = Vec::with_capacity(n);
    let mut periodicity = Vec::with_capacity(n);
    for v in 0..n {
        let s = ctx.support(v)?;
        supports.push(SupportRecord {
            vertex: v,
            integer_eigenvalues: s.integer_eigenvalues.iter().copied().collect(),
            all_integer: s.all_integer,
            support_size: s.support_size,
        });
        let p = ctx.periodicity(v)?;
        periodicity.push(PeriodicityRecord {
            vertex: v,
            periodic: p.periodic,
            big_g: p.big_g,
            period: p.minimal_period(),
        });
    }
    let decisions: Vec<RevivalDecision> = match &opts.pairs {
        _ if n < 3 => {
            if g.size() == 1 {
                notes.push(
                    "two vertices: proper revival at every t outside πℤ, perfect transfer at odd multiples of π/2"
                        .into(),
                );
            }
            Vec::new()
        }
        Some(pairs) => {
            let mut out = Vec::new();
            for &(a, b) in pairs {
                if a == b || a >= n || b >= n {
                    return Err(ReportError::BadPair(a, b));
                }
                match decide_with(&ctx, a.min(b), a.max(b)) {
                    Ok(d) => out.push(d),
                    // a pair on a K2 component has no class gcd
                    Err(RevivalError::SpecialSmall) => notes.push(format!("pair ({a}, {b}) lies on a K2 component")),
                    Err(e) => return Err(e.into()),
                }
            }
            out.sort_by_key(|d| d.pair);
            out.dedup_by_key(|d| d.pair);
            out
        }
        None => all_lafr_pairs_with(&ctx),
    };
    let exact_secs = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let mut records: Vec<DecisionRecord> = decisions.iter().map(record).collect();
    if decisions.iter().any(RevivalDecision::is_proper) {
        if n <= opts.max_numeric {
            let spec = oracle::laplacian_spectrum(g)?;
            for (r, d) in records.iter_mut().zip(&decisions) {
                r.oracle_residual = oracle_residual(&spec, d);
                r.oracle_verified = r.oracle_residual.map(|x| x <= opts.tol);
            }
        } else {
            notes.push(format!("oracle skipped: {n} vertices exceeds {}", opts.max_numeric));
        }
    }
    let oracle_secs = start.elapsed().as_secs_f64();

    Ok(AnalysisReport {
        graph: GraphIdentity { graph6: to_graph6(g), n, edges: g.size() },
        decisions: records,
        periodicity,
        supports,
        notes,
        stats: RuntimeStats { exact_secs, oracle_secs },
        toolchain: Toolchain::current(),
    })
}

fn status_name(s: RevivalStatus) -> &'static str {
    match s {
        RevivalStatus::NotStronglyCospectral => "NOT_STRONGLY_COSPECTRAL",
        RevivalStatus::NonIntegerSupport => "NON_INTEGER_SUPPORT",
        RevivalStatus::PeriodicOnly => "PERIODIC_ONLY",
        RevivalStatus::Proper => "PROPER",
    }
}

fn complex(z: &ComplexValue) -> String {
    format!("{:.12}{:+.12}i", z.re, z.im)
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.graph;
        writeln!(f, "graph {}  n={}  |E|={}", g.graph6, g.n, g.edges)?;
        let proper = self.proper().count();
        writeln!(f, "{} decision(s), {proper} proper", self.decisions.len())?;
        for d in &self.decisions {
            write!(f, "  ({}, {}) {}", d.pair[0], d.pair[1], status_name(d.status))?;
            if let Some(g) = d.g {
                write!(f, "  g={g}")?;
            }
            if let (Some(t), Some(dec)) = (&d.time, &d.time_decimal) {
                write!(f, "  time {t} ({dec})")?;
            }
            if let Some(p) = d.phase {
                write!(f, "  phase {}/{}", p.k, p.g)?;
            }
            if let (Some(a), Some(b)) = (&d.alpha, &d.beta) {
                write!(f, "  alpha {}  beta {}", complex(a), complex(b))?;
            }
            if let Some(pst) = d.is_pst {
                write!(f, "  pst={pst}")?;
            }
            if let Some(r) = d.oracle_residual {
                write!(f, "  residual {r:.3e}")?;
            }
            writeln!(f)?;
        }
        for p in &self.periodicity {
            write!(f, "  vertex {}: ", p.vertex)?;
            match (p.periodic, p.big_g, &p.period) {
                (false, ..) => write!(f, "not periodic")?,
                (true, Some(big_g), Some(t)) => write!(f, "periodic, G={big_g}, period {t}")?,
                (true, ..) => write!(f, "periodic at every time")?,
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}
