//! Simple undirected graphs on dense `0..n` vertex labels.
//!
//! A [`Graph`] is an immutable value: the vertex count plus a canonical,
//! sorted edge list with `u < v` in every pair. Neighbor lists are derived
//! at construction time so that adjacency queries are cheap.

mod construct;
mod format;

pub use construct::{hadamard_graph, standard_graph, sylvester_hadamard, threshold_graph, StandardGraph};
pub use format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};

use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::algebra::{determinant, IntMatrix};
use crate::error::GraphError;

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    neighbors: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge iterator, rejecting loops, repeated edges
    /// and endpoints outside `0..n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(n, canon))
    }

    /// `edges` must already be sorted, deduplicated and oriented `u < v`.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Self { n, edges, neighbors }
    }

    /// Graph on `n <= 11` vertices from the upper-triangle bitmask used by
    /// the exhaustive enumerators: bit `k` is the `k`-th pair `(i, j)`, `i < j`,
    /// in row-major order.
    pub fn from_bitmask(n: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut bit = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if mask >> bit & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Self::from_canonical(n, edges)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self, GraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(GraphError::BadPermutation);
        }
        Self::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Laplacian `D - A` as a dense row-major `i64` buffer.
    pub fn laplacian_i64(&self) -> Vec<i64> {
        let n = self.n;
        let mut m = vec![0i64; n * n];
        for &(u, v) in &self.edges {
            m[u * n + v] = -1;
            m[v * n + u] = -1;
            m[u * n + u] += 1;
            m[v * n + v] += 1;
        }
        m
    }

    /// Laplacian as a dense `f64` buffer for the numeric oracle.
    pub fn laplacian_f64(&self) -> Vec<f64> {
        self.laplacian_i64().into_iter().map(|x| x as f64).collect()
    }
}

/// The Laplacian `L = D - A`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    IntMatrix::from_i64(g.order(), g.order(), &g.laplacian_i64())
}

/// Direction assigned to every edge: `(tail, head)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(Vertex, Vertex)>,
}

impl Orientation {
    pub fn new(arcs: Vec<(Vertex, Vertex)>) -> Self {
        Self { arcs }
    }

    /// Low index is the tail.
    pub fn low_to_high(g: &Graph) -> Self {
        Self { arcs: g.edges.clone() }
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }
}

/// Signed vertex-edge incidence matrix: `+1` at the head, `-1` at the tail.
/// Columns follow the canonical edge order of `g`.
pub fn signed_incidence(g: &Graph, o: &Orientation) -> Result<IntMatrix, GraphError> {
    let mut arcs: Vec<((Vertex, Vertex), (Vertex, Vertex))> =
        o.arcs.iter().map(|&(t, h)| ((t.min(h), t.max(h)), (t, h))).collect();
    arcs.sort_unstable();
    if arcs.len() != g.size() || arcs.iter().zip(g.edges()).any(|((e, _), f)| e != f) {
        return Err(GraphError::OrientationMismatch);
    }
    let n = g.order();
    let m = g.size();
    let mut data = vec![0i64; n * m];
    for (col, (_, (tail, head))) in arcs.into_iter().enumerate() {
        data[tail * m + col] = -1;
        data[head * m + col] = 1;
    }
    Ok(IntMatrix::from_i64(n, m, &data))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2 - g.size());
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_canonical(n, edges)
}

/// `y`'s vertices are shifted by `x.order()`; no cross edges.
pub fn disjoint_union(x: &Graph, y: &Graph) -> Graph {
    let shift = x.order();
    let mut edges = x.edges.clone();
    edges.extend(y.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::from_canonical(x.order() + y.order(), edges)
}

/// Disjoint union plus every edge between the two sides.
pub fn join(x: &Graph, y: &Graph) -> Graph {
    let shift = x.order();
    let mut edges = x.edges.clone();
    for u in 0..x.order() {
        for v in 0..y.order() {
            edges.push((u, v + shift));
        }
    }
    edges.extend(y.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
    edges.sort_unstable();
    Graph::from_canonical(x.order() + y.order(), edges)
}

/// Vertex `(i, j)` of the product has index `i * y.order() + j`.
pub fn cartesian_product(x: &Graph, y: &Graph) -> Graph {
    let m = y.order();
    let mut edges = Vec::with_capacity(x.size() * m + y.size() * x.order());
    for &(u, v) in x.edges() {
        for j in 0..m {
            edges.push((u * m + j, v * m + j));
        }
    }
    for i in 0..x.order() {
        for &(u, v) in y.edges() {
            edges.push((i * m + u, i * m + v));
        }
    }
    edges.sort_unstable();
    Graph::from_canonical(x.order() * m, edges)
}

/// `join(empty(2), y)`; the conical vertices are 0 and 1.
pub fn double_cone(y: &Graph) -> Graph {
    join(&Graph::empty(2), y)
}

/// Least pair `(u, v)` of non-adjacent vertices that are both adjacent to
/// every other vertex.
pub fn is_double_cone(g: &Graph) -> Option<(Vertex, Vertex)> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let dominating: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) == n - 2).collect();
    for (i, &u) in dominating.iter().enumerate() {
        for &v in &dominating[i + 1..] {
            if !g.has_edge(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// BFS hop distances from `a`; `None` marks unreachable vertices.
pub fn distances(g: &Graph, a: Vertex) -> Result<Vec<Option<usize>>, GraphError> {
    g.check_vertex(a)?;
    let mut dist = vec![None; g.order()];
    dist[a] = Some(0);
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or(0) + 1;
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// Largest finite distance from `a`.
pub fn eccentricity(g: &Graph, a: Vertex) -> Result<usize, GraphError> {
    Ok(distances(g, a)?.into_iter().flatten().max().unwrap_or(0))
}

pub fn is_connected(g: &Graph) -> bool {
    if g.order() == 0 {
        return true;
    }
    let mut seen = vec![false; g.order()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == g.order()
}

/// Number of spanning trees, as the determinant of the Laplacian with row
/// and column 0 deleted.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    spanning_tree_count_deleting(g, 0).unwrap_or_else(|_| BigInt::from(1))
}

/// Same count through the cofactor at vertex `v`.
pub fn spanning_tree_count_deleting(g: &Graph, v: Vertex) -> Result<BigInt, GraphError> {
    g.check_vertex(v)?;
    let reduced = laplacian(g).delete_row_col(v);
    Ok(determinant(&reduced).expect("reduced Laplacian is square"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        standard_graph(StandardGraph::Path, n).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        standard_graph(StandardGraph::Cycle, n).unwrap()
    }
    fn complete(n: usize) -> Graph {
        standard_graph(StandardGraph::Complete, n).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn laplacian_small_cases() {
        assert_eq!(laplacian(&complete(2)).to_i64().unwrap(), vec![1, -1, -1, 1]);
        assert_eq!(laplacian(&path(3)).to_i64().unwrap(), vec![1, -1, 0, -1, 2, -1, 0, -1, 1]);
        assert!(laplacian(&Graph::empty(3)).to_i64().unwrap().iter().all(|&x| x == 0));
    }

    #[test]
    fn incidence_of_k2() {
        let g = complete(2);
        let b = signed_incidence(&g, &Orientation::low_to_high(&g)).unwrap();
        assert_eq!((b.rows(), b.cols()), (2, 1));
        assert_eq!(b.to_i64().unwrap(), vec![-1, 1]);
        let e = Graph::empty(3);
        let b = signed_incidence(&e, &Orientation::low_to_high(&e)).unwrap();
        assert_eq!((b.rows(), b.cols()), (3, 0));
        assert!(b.mul(&b.transpose()).is_zero());
    }

    #[test]
    fn incidence_any_orientation_gives_laplacian() {
        let g = path(3);
        for flips in 0..4u32 {
            let arcs = g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if flips >> i & 1 == 1 { (v, u) } else { (u, v) })
                .collect();
            let b = signed_incidence(&g, &Orientation::new(arcs)).unwrap();
            assert_eq!(b.mul(&b.transpose()), laplacian(&g));
        }
        let bad = Orientation::new(vec![(0, 2)]);
        assert_eq!(signed_incidence(&g, &bad), Err(GraphError::OrientationMismatch));
    }

    #[test]
    fn complement_cases() {
        assert_eq!(complement(&complete(3)), Graph::empty(3));
        assert_eq!(complement(&cycle(4)), Graph::new(4, [(0, 2), (1, 3)]).unwrap());
        let c5 = complement(&cycle(5));
        assert_eq!(c5.size(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert!(is_connected(&c5));
    }

    #[test]
    fn join_cases() {
        let c4 = join(&Graph::empty(2), &Graph::empty(2));
        assert_eq!(c4.size(), 4);
        assert!(c4.degrees().iter().all(|&d| d == 2));
        let star = join(&Graph::empty(1), &Graph::empty(4));
        assert_eq!(star.degrees(), vec![4, 1, 1, 1, 1]);
        let dc = join(&Graph::empty(2), &path(3));
        let expected = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]).unwrap();
        assert_eq!(dc, expected);
    }

    #[test]
    fn union_identity_and_sizes() {
        let x = cycle(5);
        assert_eq!(disjoint_union(&x, &Graph::empty(0)), x);
        assert_eq!(disjoint_union(&x, &path(4)).size(), x.size() + 3);
    }

    #[test]
    fn product_cases() {
        let c4 = cartesian_product(&complete(2), &complete(2));
        assert_eq!(c4.size(), 4);
        assert!(c4.degrees().iter().all(|&d| d == 2));
        let ladder = cartesian_product(&complete(2), &path(3));
        let expected = Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(ladder, expected);
        let x = cycle(5);
        assert_eq!(cartesian_product(&x, &Graph::empty(1)), x);
    }

    #[test]
    fn double_cone_cases() {
        assert_eq!(double_cone(&Graph::empty(1)), path(3).relabel(&[0, 2, 1]).unwrap());
        assert_eq!(double_cone(&Graph::empty(2)).size(), 4);
        let mut degs = double_cone(&complete(3)).degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 4, 4, 4]);
        assert_eq!(is_double_cone(&cycle(4)), Some((0, 2)));
        assert_eq!(is_double_cone(&path(4)), None);
        assert_eq!(is_double_cone(&double_cone(&path(3))), Some((0, 1)));
    }

    #[test]
    fn distance_helpers() {
        assert_eq!(eccentricity(&path(3), 0).unwrap(), 2);
        assert!((0..6).all(|v| eccentricity(&cycle(6), v).unwrap() == 3));
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_connected(&two_k2));
        assert_eq!(distances(&two_k2, 0).unwrap(), vec![Some(0), Some(1), None, None]);
        assert!(distances(&two_k2, 4).is_err());
    }

    #[test]
    fn spanning_trees_small() {
        assert_eq!(spanning_tree_count(&path(3)), BigInt::from(1));
        assert_eq!(spanning_tree_count(&cycle(6)), BigInt::from(6));
        assert_eq!(spanning_tree_count(&complete(4)), BigInt::from(16));
        assert_eq!(spanning_tree_count(&Graph::empty(1)), BigInt::from(1));
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&two_k2), BigInt::from(0));
    }

    /// Brute force: every (n-1)-subset of edges that is acyclic and spanning.
    fn brute_force_trees(g: &Graph) -> u64 {
        let m = g.size();
        let n = g.order();
        let mut count = 0;
        for mask in 0u64..(1 << m) {
            if mask.count_ones() as usize != n - 1 {
                continue;
            }
            let edges: Vec<_> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| g.edges()[i]).collect();
            if is_connected(&Graph::new(n, edges).unwrap()) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn spanning_tree_brute_force_oracle() {
        for g in [cycle(6), complete(4), path(5), double_cone(&path(3))] {
            assert_eq!(spanning_tree_count(&g), BigInt::from(brute_force_trees(&g)));
            for v in 0..g.order() {
                assert_eq!(spanning_tree_count_deleting(&g, v).unwrap(), spanning_tree_count(&g));
            }
        }
    }
}
