//! Theorem-verification campaigns behind a name → strategy registry.
//!
//! Each campaign sweeps a corpus, runs the exact decisions, and records
//! every graph that contradicts the statement being checked. Results are
//! deterministic apart from the wall time, whatever the worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{canonical_mask, free_trees, labeled_graphs, random_join};
use crate::graph::{
    cartesian_product, disjoint_union, double_cone, hadamard_graph, is_connected, is_double_cone, join, standard_graph,
    sylvester_hadamard, threshold_graph, to_graph6, Graph, StandardGraph,
};
use crate::revival::{
    check_cartesian_theorem, check_complement_transfer, check_infjoin_construction, check_join_timing,
    check_polygamy_conditions, decide_proper_lafr, hadamard_partition_check, proper_pairs, threshold_conditions,
    RevivalStatus,
};
use crate::spectral::SpectralContext;
use crate::time::PiMultiple;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignResult {
    pub campaign: String,
    pub corpus_size: usize,
    pub corpus_by_order: BTreeMap<usize, usize>,
    /// Graphs with at least one proper pair.
    pub positive_count: usize,
    /// One graph6 string per isomorphism class of positives.
    pub positive_classes: Vec<String>,
    pub checks: Vec<CheckOutcome>,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub wall_time_secs: f64,
}

impl CampaignResult {
    fn new(name: &str) -> Self {
        Self {
            campaign: name.to_string(),
            corpus_size: 0,
            corpus_by_order: BTreeMap::new(),
            positive_count: 0,
            positive_classes: Vec::new(),
            checks: Vec::new(),
            counterexamples: Vec::new(),
            notes: Vec::new(),
            wall_time_secs: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    /// Equality ignoring wall time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        Self { wall_time_secs: 0.0, ..self.clone() } == Self { wall_time_secs: 0.0, ..other.clone() }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CampaignOptions {
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Largest tree order for the tree campaign (2..=14, default 10).
    pub tree_n_max: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum CampaignError {
    #[error("unknown campaign `{0}`")]
    Unknown(String),
    #[error("invalid option: {0}")]
    InvalidOption(String),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

pub trait Campaign: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, opts: &CampaignOptions) -> Result<CampaignResult, CampaignError>;
}

pub struct CampaignRegistry {
    campaigns: BTreeMap<&'static str, Box<dyn Campaign>>,
}

impl CampaignRegistry {
    pub fn empty() -> Self {
        Self { campaigns: BTreeMap::new() }
    }

    pub fn register(&mut self, c: Box<dyn Campaign>) {
        self.campaigns.insert(c.name(), c);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Campaign> {
        self.campaigns.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.campaigns.keys().copied()
    }

    pub fn run(&self, name: &str, opts: &CampaignOptions) -> Result<CampaignResult, CampaignError> {
        let c = self.get(name).ok_or_else(|| CampaignError::Unknown(name.to_string()))?;
        let pool = match opts.workers {
            Some(0) => return Err(CampaignError::InvalidOption("workers must be positive".into())),
            Some(w) => Some(rayon::ThreadPoolBuilder::new().num_threads(w).build()?),
            None => None,
        };
        let start = Instant::now();
        let mut result = match pool {
            Some(p) => p.install(|| c.run(opts)),
            None => c.run(opts),
        }?;
        result.wall_time_secs = start.elapsed().as_secs_f64();
        Ok(result)
    }
}

impl Default for CampaignRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(TreeCampaign));
        r.register(Box::new(PrimeOrderCampaign { p: 5 }));
        r.register(Box::new(PrimeOrderCampaign { p: 7 }));
        r.register(Box::new(ConstructionCampaign));
        r
    }
}

fn has_proper_pair(g: &Graph) -> bool {
    g.order() == 2 && g.size() == 1 || g.order() >= 3 && !proper_pairs(g).is_empty()
}

fn class_representatives(graphs: impl Iterator<Item = Graph>) -> Vec<String> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in graphs {
        if seen.insert((g.order(), canonical_mask(&g))) {
            out.push(to_graph6(&Graph::from_bitmask(g.order(), canonical_mask(&g))));
        }
    }
    out
}

// ---------------------------------------------------------------- trees

/// No tree other than `K2` and `P3` has proper revival.
pub struct TreeCampaign;

impl Campaign for TreeCampaign {
    fn name(&self) -> &'static str {
        "trees"
    }

    fn description(&self) -> &'static str {
        "all free trees up to the given order; only K2 and P3 may revive properly"
    }

    fn run(&self, opts: &CampaignOptions) -> Result<CampaignResult, CampaignError> {
        let n_max = opts.tree_n_max.unwrap_or(10);
        if !(2..=14).contains(&n_max) {
            return Err(CampaignError::InvalidOption(format!("tree order {n_max} outside 2..=14")));
        }
        let mut res = CampaignResult::new(self.name());
        let mut positives = Vec::new();
        for n in 2..=n_max {
            let trees = free_trees(n);
            res.corpus_by_order.insert(n, trees.len());
            res.corpus_size += trees.len();
            let flags: Vec<bool> = trees.par_iter().map(has_proper_pair).collect();
            for (t, proper) in trees.into_iter().zip(flags) {
                if !proper {
                    continue;
                }
                if n > 3 {
                    res.counterexamples.push(Counterexample {
                        graph6: to_graph6(&t),
                        reason: format!("tree on {n} vertices with a proper pair"),
                    });
                }
                positives.push(t);
            }
        }
        res.positive_count = positives.len();
        res.positive_classes = class_representatives(positives.into_iter());
        res.notes.push("K2: proper revival at every t outside πℤ, perfect transfer at odd multiples of π/2".into());
        Ok(res)
    }
}

// ---------------------------------------------------------- prime order

/// On a prime number of vertices, proper revival forces a double cone.
pub struct PrimeOrderCampaign {
    pub p: usize,
}

impl Campaign for PrimeOrderCampaign {
    fn name(&self) -> &'static str {
        match self.p {
            5 => "prime5",
            7 => "prime7",
            _ => "prime",
        }
    }

    fn description(&self) -> &'static str {
        "every connected labeled graph of prime order with a proper pair is a double cone"
    }

    fn run(&self, _opts: &CampaignOptions) -> Result<CampaignResult, CampaignError> {
        let p = self.p;
        if p != 5 && p != 7 {
            return Err(CampaignError::InvalidOption(format!("prime order {p} not supported")));
        }
        let bits = p * (p - 1) / 2;
        // (mask, is a double cone) for each connected positive, in mask order
        let scanned: Vec<(bool, Option<(u64, bool)>)> = (0..1u64 << bits)
            .into_par_iter()
            .map(|m| {
                let g = Graph::from_bitmask(p, m);
                if !is_connected(&g) {
                    return (false, None);
                }
                let hit = has_proper_pair(&g).then(|| (m, is_double_cone(&g).is_some()));
                (true, hit)
            })
            .collect();
        let mut res = CampaignResult::new(self.name());
        res.corpus_size = scanned.iter().filter(|s| s.0).count();
        res.corpus_by_order.insert(p, res.corpus_size);
        let hits: Vec<(u64, bool)> = scanned.into_iter().filter_map(|s| s.1).collect();
        res.positive_count = hits.len();
        for &(m, cone) in &hits {
            if !cone {
                res.counterexamples.push(Counterexample {
                    graph6: to_graph6(&Graph::from_bitmask(p, m)),
                    reason: "proper pair on a prime order graph that is not a double cone".into(),
                });
            }
        }
        res.positive_classes = class_representatives(hits.iter().map(|&(m, _)| Graph::from_bitmask(p, m)));
        res.notes.push(format!("{} labeled graphs scanned", 1u64 << bits));
        Ok(res)
    }
}

// -------------------------------------------------------- constructions

/// The fixed battery of construction theorems.
pub struct ConstructionCampaign;

fn std_graph(kind: StandardGraph, n: usize) -> Graph {
    standard_graph(kind, n).expect("valid standard graph")
}

fn pi(num: u64, den: u64) -> PiMultiple {
    PiMultiple::new(num, den).expect("nonzero denominator")
}

fn outcome(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome { name: name.into(), passed, detail: detail.into() }
}

fn double_cone_battery(res: &mut CampaignResult) {
    let mut count = 0;
    for k in 1..=5 {
        for y in labeled_graphs(k) {
            let z = double_cone(&y);
            let n = z.order() as u64;
            count += 1;
            let ok = decide_proper_lafr(&z, 0, 1).is_ok_and(|d| {
                d.status == RevivalStatus::Proper
                    && d.g == Some(n)
                    && d.earliest_time == Some(PiMultiple::two_pi_over(n))
                    && d.is_pst == Some(n == 4)
            });
            if !ok {
                res.counterexamples.push(Counterexample {
                    graph6: to_graph6(&z),
                    reason: "double cone without proper revival at 2π/n".into(),
                });
            }
        }
    }
    let failed = res.counterexamples.len();
    res.checks.push(outcome("double cones over all graphs on 1..=5 vertices", failed == 0, format!("{count} cones")));
}

fn cartesian_battery(res: &mut CampaignResult) {
    let (k1, k2, k3) = (
        std_graph(StandardGraph::Complete, 1),
        std_graph(StandardGraph::Complete, 2),
        std_graph(StandardGraph::Complete, 3),
    );
    let (p3, p4) = (std_graph(StandardGraph::Path, 3), std_graph(StandardGraph::Path, 4));
    let t = pi(2, 3);
    for (label, x, y, expect) in [
        ("K3 □ P3", &k3, &p3, true),
        ("K1 □ P3", &k1, &p3, true),
        ("K2 □ P3", &k2, &p3, true),
        ("K2 □ P4", &k2, &p4, false),
    ] {
        let c = check_cartesian_theorem(x, y, &t);
        let passed = c.as_ref().is_ok_and(|c| c.holds() && c.product_has_proper() == expect);
        res.checks.push(outcome(format!("cartesian {label} at 2π/3"), passed, format!("{c:?}")));
        if !passed {
            res.counterexamples.push(Counterexample {
                graph6: to_graph6(&cartesian_product(x, y)),
                reason: format!("cartesian iff fails for {label}"),
            });
        }
    }
    // the negative side of the K2 case: K2 has no periodic vertex at 2π/3
    let k2p3 = check_cartesian_theorem(&k2, &p3, &t).map(|c| c.x_periodic_y_proper);
    res.checks.push(outcome("K2 not periodic at 2π/3", k2p3.as_ref().is_ok_and(|v| !v), format!("{k2p3:?}")));
}

fn complement_battery(res: &mut CampaignResult) {
    let c4 = std_graph(StandardGraph::Cycle, 4);
    let p3k1 = disjoint_union(&std_graph(StandardGraph::Path, 3), &std_graph(StandardGraph::Complete, 1));
    for (label, g, t) in
        [("C4 at π/2", &c4, pi(1, 2)), ("P3 ∪ K1 at π/2", &p3k1, pi(1, 2)), ("C4 at 2π", &c4, pi(2, 1))]
    {
        let r = check_complement_transfer(g, &t);
        res.checks.push(outcome(
            format!("complement identity {label}"),
            r.as_ref().is_ok_and(|&v| v),
            format!("{r:?}"),
        ));
    }
}

fn join_battery(res: &mut CampaignResult) {
    let mut rng = StdRng::seed_from_u64(0x6a6f696e);
    let mut fixed = vec![
        double_cone(&std_graph(StandardGraph::Complete, 3)),
        join(&Graph::empty(2), &std_graph(StandardGraph::Complete, 4)),
    ];
    // 20 random joins with 3 <= n <= 10
    for i in 0..20 {
        let n1 = 1 + i % 5;
        let n2 = 2 + (i * 3) % (9 - n1);
        fixed.push(random_join(n1, n2, 0.5, &mut rng));
    }
    let mut proper = 0;
    let mut all = true;
    for z in &fixed {
        proper += proper_pairs(z).len();
        if !check_join_timing(z).is_ok_and(|v| v) {
            all = false;
            res.counterexamples
                .push(Counterexample { graph6: to_graph6(z), reason: "proper pair on a join with g ∤ n".into() });
        }
    }
    res.checks.push(outcome("join timing g | n", all, format!("{} joins, {proper} proper pairs", fixed.len())));
}

fn infjoin_battery(res: &mut CampaignResult) {
    let cases = [
        ("C4 + K4 at π/2", std_graph(StandardGraph::Cycle, 4), (0, 2), std_graph(StandardGraph::Complete, 4), pi(1, 2)),
        (
            "double cone(K4) + C6 at π/3",
            double_cone(&std_graph(StandardGraph::Complete, 4)),
            (0, 1),
            std_graph(StandardGraph::Cycle, 6),
            pi(1, 3),
        ),
        ("P3 + K3 at 2π/3", std_graph(StandardGraph::Path, 3), (0, 2), std_graph(StandardGraph::Complete, 3), pi(2, 3)),
    ];
    for (label, x, pair, y, t) in cases {
        let d = check_infjoin_construction(&x, pair, &y);
        let passed = d.as_ref().is_ok_and(|d| d.proper_at(&t));
        res.checks.push(outcome(
            format!("infjoin {label}"),
            passed,
            format!("{:?}", d.map(|d| (d.status, d.earliest_time))),
        ));
    }
}

fn threshold_battery(res: &mut CampaignResult) {
    let m = [2, 4];
    let t = pi(1, 3);
    let g = threshold_graph(&m).expect("valid threshold parameters");
    let d = decide_proper_lafr(&g, 0, 1);
    let passed =
        threshold_conditions(&m, (0, 1), &t) && d.as_ref().is_ok_and(|d| d.proper_at(&t) && d.is_pst == Some(false));
    res.checks.push(outcome("threshold Γ(2,4) proper at π/3", passed, format!("{:?}", d.map(|d| (d.status, d.g)))));
}

fn hadamard_battery(res: &mut CampaignResult) {
    // order n² Sylvester matrices for n = 2, 4
    for (n, k) in [(2i64, 2u32), (4, 4)] {
        let h = sylvester_hadamard(k).expect("small Sylvester order");
        let g = hadamard_graph(&h).expect("Sylvester matrices are Hadamard");
        let b = h.rows();
        let part = SpectralContext::new(&g).strong_cospectral(0, b);
        let passed = part.as_ref().is_ok_and(|p| p.as_ref().is_some_and(|p| hadamard_partition_check(n, p)));
        res.checks.push(outcome(format!("Hadamard n = {n} antipodal partition"), passed, format!("{part:?}")));
    }
}

fn polygamy_battery(res: &mut CampaignResult) {
    for q in [1u64, 3, 5] {
        let c = check_polygamy_conditions(12 * q, 12, 6 * q, 4);
        res.checks.push(outcome(
            format!("polygamy arithmetic q = {q}"),
            c.as_ref().is_ok_and(|c| c.ok),
            format!("{c:?}"),
        ));
    }
}

impl Campaign for ConstructionCampaign {
    fn name(&self) -> &'static str {
        "constructions"
    }

    fn description(&self) -> &'static str {
        "double cones, Cartesian products, complements, joins, threshold and Hadamard graphs"
    }

    fn run(&self, _opts: &CampaignOptions) -> Result<CampaignResult, CampaignError> {
        let mut res = CampaignResult::new(self.name());
        double_cone_battery(&mut res);
        cartesian_battery(&mut res);
        complement_battery(&mut res);
        join_battery(&mut res);
        infjoin_battery(&mut res);
        threshold_battery(&mut res);
        hadamard_battery(&mut res);
        polygamy_battery(&mut res);
        res.corpus_size = res.checks.len();
        Ok(res)
    }
}

/// Canonical graph6 of `double_cone(K3)`, a known prime-5 positive.
pub fn double_cone_k3_class() -> String {
    let g = double_cone(&std_graph(StandardGraph::Complete, 3));
    to_graph6(&Graph::from_bitmask(5, canonical_mask(&g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lists_campaigns() {
        let r = CampaignRegistry::default();
        assert_eq!(r.names().collect::<Vec<_>>(), ["constructions", "prime5", "prime7", "trees"]);
        assert!(matches!(r.run("nope", &CampaignOptions::default()), Err(CampaignError::Unknown(_))));
        let zero = CampaignOptions { workers: Some(0), ..Default::default() };
        assert!(r.run("trees", &zero).is_err());
    }

    #[test]
    fn small_trees() {
        let r = CampaignRegistry::default();
        let res = r.run("trees", &CampaignOptions { tree_n_max: Some(3), ..Default::default() }).unwrap();
        assert!(res.passed());
        assert_eq!(res.positive_count, 2);
        assert_eq!(res.corpus_by_order, BTreeMap::from([(2, 1), (3, 1)]));
        let res = r.run("trees", &CampaignOptions { tree_n_max: Some(2), ..Default::default() }).unwrap();
        assert_eq!((res.positive_count, res.corpus_size), (1, 1));
        assert!(r.run("trees", &CampaignOptions { tree_n_max: Some(15), ..Default::default() }).is_err());
    }

    #[test]
    fn prime5_is_deterministic() {
        let r = CampaignRegistry::default();
        let a = r.run("prime5", &CampaignOptions { workers: Some(1), ..Default::default() }).unwrap();
        let b = r.run("prime5", &CampaignOptions { workers: Some(3), ..Default::default() }).unwrap();
        assert!(a.passed() && a.same_outcome(&b));
        assert_eq!(a.corpus_size, 728);
        assert!(a.positive_classes.contains(&double_cone_k3_class()));
    }
}
