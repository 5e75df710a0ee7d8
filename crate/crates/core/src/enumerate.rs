//! Graph corpora: unlabeled free trees, unlabeled connected graphs on a few
//! vertices, labeled bitmask sweeps and seeded random graphs.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::graph::{is_connected, join, Graph, Vertex};

/// Upper-triangle row-major bit layout shared with [`Graph::from_bitmask`].
pub fn bitmask(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n * n.saturating_sub(1) / 2 <= 64, "too many vertex pairs for a u64 mask");
    g.edges().iter().fold(0u64, |m, &(u, v)| m | 1 << pair_bit(n, u.min(v), u.max(v)))
}

fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Every labeled graph on `n` vertices, in mask order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let bits = n * n.saturating_sub(1) / 2;
    assert!(bits < 64, "too many labeled graphs");
    (0..1u64 << bits).map(move |m| Graph::from_bitmask(n, m))
}

// ---------------------------------------------------------------- trees

type Adj = Vec<Vec<usize>>;

fn rooted_code(adj: &Adj, v: usize, parent: usize, out: &mut Vec<u8>) {
    let mut kids: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| {
            let mut c = Vec::new();
            rooted_code(adj, w, v, &mut c);
            c
        })
        .collect();
    kids.sort();
    out.push(b'(');
    kids.iter().for_each(|k| out.extend_from_slice(k));
    out.push(b')');
}

fn centers(adj: &Adj) -> Vec<usize> {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Complete isomorphism invariant: the smaller center-rooted code.
fn tree_code(adj: &Adj) -> (Vec<u8>, usize) {
    centers(adj)
        .into_iter()
        .map(|c| {
            let mut code = Vec::new();
            rooted_code(adj, c, usize::MAX, &mut code);
            (code, c)
        })
        .min()
        .expect("a tree has a center")
}

fn without_leaf(adj: &Adj, leaf: usize) -> Adj {
    let relabel = |v: usize| if v > leaf { v - 1 } else { v };
    adj.iter()
        .enumerate()
        .filter(|&(v, _)| v != leaf)
        .map(|(_, ns)| ns.iter().filter(|&&w| w != leaf).map(|&w| relabel(w)).collect())
        .collect()
}

/// The code of the canonical parent: the smallest code over all leaf
/// deletions.
fn parent_code(adj: &Adj) -> Vec<u8> {
    (0..adj.len())
        .filter(|&v| adj[v].len() == 1)
        .map(|leaf| tree_code(&without_leaf(adj, leaf)).0)
        .min()
        .expect("trees on two or more vertices have leaves")
}

/// Relabels breadth-first from the canonical root with children in code
/// order, so isomorphic inputs give identical graphs.
fn canonical_tree(adj: &Adj) -> Graph {
    let (_, root) = tree_code(adj);
    let n = adj.len();
    let mut label = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([root]);
    label[root] = 0;
    let mut next = 1;
    let mut edges = Vec::new();
    while let Some(v) = queue.pop_front() {
        let mut kids: Vec<(Vec<u8>, usize)> = adj[v]
            .iter()
            .filter(|&&w| w != parent[v])
            .map(|&w| {
                let mut c = Vec::new();
                rooted_code(adj, w, v, &mut c);
                (c, w)
            })
            .collect();
        kids.sort();
        for (_, w) in kids {
            parent[w] = v;
            label[w] = next;
            next += 1;
            edges.push((label[v], label[w]));
            queue.push_back(w);
        }
    }
    Graph::new(n, edges).expect("relabeled tree is simple")
}

/// All unlabeled free trees on `n` vertices, by reverse search: a tree on
/// `k + 1` vertices is produced only from its canonical parent, the
/// lexicographically smallest leaf-deleted subtree. Output is sorted by
/// canonical code.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut found: BTreeMap<Vec<u8>, Adj> = BTreeMap::new();
    let mut stack: Vec<(Adj, Vec<u8>)> = vec![(vec![Vec::new()], b"()".to_vec())];
    while let Some((adj, code)) = stack.pop() {
        if adj.len() == n {
            found.insert(code, adj);
            continue;
        }
        let mut children = BTreeMap::new();
        for v in 0..adj.len() {
            let mut child = adj.clone();
            let leaf = child.len();
            child[v].push(leaf);
            child.push(vec![v]);
            let child_code = tree_code(&child).0;
            if !children.contains_key(&child_code) && parent_code(&child) == code {
                children.insert(child_code, child);
            }
        }
        stack.extend(children.into_iter().map(|(c, a)| (a, c)));
    }
    found.values().map(canonical_tree).collect()
}

// ------------------------------------------------------- small graphs

/// Vertex invariant used to cut down the permutations tried.
fn refined_key(g: &Graph, v: Vertex) -> (usize, Vec<usize>) {
    let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    ns.sort_unstable();
    (g.degree(v), ns)
}

/// Canonical mask: the minimum bitmask over all relabelings that list the
/// vertices in nondecreasing invariant order. Exact, but exponential in
/// the size of the invariant classes; meant for `n <= 8`.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.order();
    let mut order: Vec<Vertex> = (0..n).collect();
    let keys: Vec<_> = (0..n).map(|v| refined_key(g, v)).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    // block_of[p]: the range of positions sharing p's key
    let mut block_start = vec![0; n];
    for p in 1..n {
        block_start[p] = if keys[order[p]] == keys[order[p - 1]] { block_start[p - 1] } else { p };
    }
    let mut best = u64::MAX;
    let mut pos = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fill(g, &order, &block_start, &keys, 0, &mut pos, &mut used, &mut best);
    best
}

#[allow(clippy::too_many_arguments)]
fn fill(
    g: &Graph,
    order: &[Vertex],
    block_start: &[usize],
    keys: &[(usize, Vec<usize>)],
    p: usize,
    pos: &mut [usize],
    used: &mut [bool],
    best: &mut u64,
) {
    let n = order.len();
    if p == n {
        let m = g.edges().iter().fold(0u64, |m, &(u, v)| {
            let (i, j) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            m | 1 << pair_bit(n, i, j)
        });
        *best = (*best).min(m);
        return;
    }
    let key = &keys[order[block_start[p]]];
    for &v in order.iter().skip(block_start[p]) {
        if used[v] || &keys[v] != key {
            continue;
        }
        used[v] = true;
        pos[v] = p;
        fill(g, order, block_start, keys, p + 1, pos, used, best);
        used[v] = false;
    }
}

/// All unlabeled connected graphs on `n` vertices as canonical masks,
/// grown one vertex at a time (every connected graph has a vertex whose
/// deletion leaves it connected).
pub fn connected_graph_masks(n: usize) -> BTreeSet<u64> {
    assert!(n <= 9, "connected corpus is exhaustive and meant for small orders");
    let mut level: BTreeSet<u64> = if n == 0 { BTreeSet::new() } else { BTreeSet::from([0]) };
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for &m in &level {
            let base = Graph::from_bitmask(k - 1, m);
            for s in 1u32..1 << (k - 1) {
                let extra = (0..k - 1).filter(|&v| s >> v & 1 == 1).map(|v| (v, k - 1));
                let g = Graph::new(k, base.edges().iter().copied().chain(extra)).expect("new vertex edges are fresh");
                next.insert(canonical_mask(&g));
            }
        }
        level = next;
    }
    level
}

/// All unlabeled connected graphs on `n` vertices, in canonical-mask order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graph_masks(n).into_iter().map(|m| Graph::from_bitmask(n, m)).collect()
}

// ------------------------------------------------------------- random

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).expect("pairs are distinct")
}

/// `G(n, p)` conditioned on connectivity, by rejection.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n <= 1 || p > 0.0, "p = 0 never yields a connected graph");
    loop {
        let g = random_graph(n, p, rng);
        if is_connected(&g) {
            return g;
        }
    }
}

/// `X + Y` with random sides of orders `n1`, `n2`.
pub fn random_join<R: Rng + ?Sized>(n1: usize, n2: usize, p: f64, rng: &mut R) -> Graph {
    let x = random_graph(n1, p, rng);
    let y = random_graph(n2, p, rng);
    join(&x, &y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardGraph};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| free_trees(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert_eq!(free_trees(12).len(), 551);
        for t in free_trees(8) {
            assert!(is_connected(&t) && t.size() == 7);
        }
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_graph_masks(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
    }

    /// Brute-force check of the canonical form: classes over all labeled
    /// graphs on five vertices coincide with orbits under all 120 relabelings.
    #[test]
    fn canonical_mask_is_exact() {
        let perms = permutations(5);
        let mut classes = BTreeSet::new();
        for g in labeled_graphs(5) {
            let orbit_min = perms.iter().map(|p| bitmask(&g.relabel(p).unwrap())).min().unwrap();
            let c = canonical_mask(&g);
            classes.insert((c, orbit_min));
        }
        assert_eq!(classes.len(), 34);
        let firsts: BTreeSet<_> = classes.iter().map(|p| p.0).collect();
        assert_eq!(firsts.len(), 34);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn masks_round_trip() {
        let c5 = standard_graph(StandardGraph::Cycle, 5).unwrap();
        assert_eq!(Graph::from_bitmask(5, bitmask(&c5)), c5);
        assert_eq!(labeled_graphs(4).count(), 64);
        assert_eq!(canonical_mask(&c5), canonical_mask(&c5.relabel(&[2, 4, 1, 0, 3]).unwrap()));
    }

    #[test]
    fn random_is_seeded() {
        let a = random_connected_graph(10, 0.3, &mut StdRng::seed_from_u64(7));
        let b = random_connected_graph(10, 0.3, &mut StdRng::seed_from_u64(7));
        assert_eq!(a, b);
        assert!(is_connected(&a));
        let j = random_join(3, 4, 0.5, &mut StdRng::seed_from_u64(1));
        assert_eq!(j.order(), 7);
    }
}
