use super::{disjoint_union, join, Graph};
use crate::algebra::IntMatrix;
use crate::error::GraphError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardGraph {
    Path,
    Cycle,
    Complete,
    Empty,
}

/// Named graph on `0..n` with the natural labeling: path edges `{i, i+1}`,
/// the cycle adds `{n-1, 0}`.
pub fn standard_graph(kind: StandardGraph, n: usize) -> Result<Graph, GraphError> {
    if n == 0 || (kind == StandardGraph::Cycle && n < 3) {
        return Err(GraphError::InvalidParameter(format!("{kind:?} on {n} vertices")));
    }
    let edges = match kind {
        StandardGraph::Path => (1..n).map(|i| (i - 1, i)).collect(),
        StandardGraph::Cycle => {
            let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            e.push((0, n - 1));
            e.sort_unstable();
            e
        }
        StandardGraph::Complete => (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect(),
        StandardGraph::Empty => Vec::new(),
    };
    Ok(Graph::from_canonical(n, edges))
}

/// Alternating construction `((O_m1 + K_m2) ∪ O_m3) + K_m4 ...`. Vertices are
/// numbered in construction order, so the first `m1` indices are the initial
/// independent set.
pub fn threshold_graph(m: &[usize]) -> Result<Graph, GraphError> {
    if m.len() < 2 || !m.len().is_multiple_of(2) {
        return Err(GraphError::InvalidParameter(format!(
            "threshold graph needs an even, non-empty parameter list (got {})",
            m.len()
        )));
    }
    if m.contains(&0) {
        return Err(GraphError::InvalidParameter("threshold parameters must be positive".into()));
    }
    let mut g = Graph::empty(m[0]);
    for (i, pair) in m.chunks(2).enumerate() {
        if i > 0 {
            g = disjoint_union(&g, &Graph::empty(pair[0]));
        }
        g = join(&g, &standard_graph(StandardGraph::Complete, pair[1])?);
    }
    Ok(g)
}

/// `2^k x 2^k` Sylvester matrix built by repeated `[[H, H], [H, -H]]`.
pub fn sylvester_hadamard(k: u32) -> Result<IntMatrix, GraphError> {
    if k > 12 {
        return Err(GraphError::InvalidParameter(format!("Sylvester order 2^{k} exceeds 2^12")));
    }
    let mut h = vec![1i64];
    let mut size = 1usize;
    for _ in 0..k {
        let next = size * 2;
        let mut doubled = vec![0i64; next * next];
        for i in 0..size {
            for j in 0..size {
                let x = h[i * size + j];
                doubled[i * next + j] = x;
                doubled[i * next + j + size] = x;
                doubled[(i + size) * next + j] = x;
                doubled[(i + size) * next + j + size] = -x;
            }
        }
        h = doubled;
        size = next;
    }
    Ok(IntMatrix::from_i64(size, size, &h))
}

/// Bipartite graph on row symbols `r_i^±` and column symbols `c_j^±` of an
/// `n x n` Hadamard matrix. Layout: `r+` at `0..n`, `r-` at `n..2n`, `c+` at
/// `2n..3n`, `c-` at `3n..4n`. `r_i^s ~ c_j^t` iff `H_ij = 1` and the signs
/// agree, or `H_ij = -1` and they differ.
pub fn hadamard_graph(h: &IntMatrix) -> Result<Graph, GraphError> {
    let n = h.rows();
    let entries = h
        .to_i64()
        .filter(|e| h.cols() == n && n > 0 && e.iter().all(|&x| x == 1 || x == -1))
        .ok_or(GraphError::NotHadamard)?;
    for i in 0..n {
        for j in 0..n {
            let dot: i64 = (0..n).map(|k| entries[i * n + k] * entries[j * n + k]).sum();
            if dot != if i == j { n as i64 } else { 0 } {
                return Err(GraphError::NotHadamard);
            }
        }
    }
    let mut edges = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            let (same, cross) = (entries[i * n + j] == 1, entries[i * n + j] == -1);
            for s in 0..2 {
                for t in 0..2 {
                    if (same && s == t) || (cross && s != t) {
                        edges.push((s * n + i, 2 * n + t * n + j));
                    }
                }
            }
        }
    }
    Graph::new(4 * n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distances, double_cone, eccentricity, is_connected};

    #[test]
    fn standard_graphs() {
        assert_eq!(
            standard_graph(StandardGraph::Path, 2).unwrap(),
            standard_graph(StandardGraph::Complete, 2).unwrap()
        );
        assert_eq!(
            standard_graph(StandardGraph::Cycle, 3).unwrap(),
            standard_graph(StandardGraph::Complete, 3).unwrap()
        );
        assert_eq!(standard_graph(StandardGraph::Complete, 4).unwrap().size(), 6);
        assert!(standard_graph(StandardGraph::Cycle, 2).is_err());
        assert!(standard_graph(StandardGraph::Path, 0).is_err());
    }

    #[test]
    fn threshold_expansions() {
        let k = |n| standard_graph(StandardGraph::Complete, n).unwrap();
        assert_eq!(threshold_graph(&[2, 2]).unwrap(), double_cone(&k(2)));
        assert_eq!(threshold_graph(&[2, 2]).unwrap().size(), 5);
        assert_eq!(threshold_graph(&[1, 1]).unwrap(), k(2));
        assert_eq!(threshold_graph(&[2, 4]).unwrap(), double_cone(&k(4)));
        // ((O_1 + K_1) ∪ O_1) + K_1: a triangle with a pendant vertex.
        let g = threshold_graph(&[1, 1, 1, 1]).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 1, 3]);
        assert!(threshold_graph(&[1, 2, 3]).is_err());
        assert!(threshold_graph(&[0, 2]).is_err());
    }

    #[test]
    fn sylvester_orthogonality() {
        assert_eq!(sylvester_hadamard(0).unwrap().to_i64().unwrap(), vec![1]);
        assert_eq!(sylvester_hadamard(1).unwrap().to_i64().unwrap(), vec![1, 1, 1, -1]);
        let h = sylvester_hadamard(2).unwrap();
        let hht = h.mul(&h.transpose());
        assert_eq!(hht, IntMatrix::identity(4).scale(4));
        assert!(sylvester_hadamard(13).is_err());
    }

    #[test]
    fn hadamard_one_by_one_is_two_disjoint_edges() {
        let g = hadamard_graph(&sylvester_hadamard(0).unwrap()).unwrap();
        assert_eq!(g, Graph::new(4, [(0, 2), (1, 3)]).unwrap());
    }

    #[test]
    fn hadamard_order_two_is_an_eight_cycle() {
        let g = hadamard_graph(&sylvester_hadamard(1).unwrap()).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert!(is_connected(&g));
        // antipodal symbols sit at distance 4
        assert_eq!(distances(&g, 0).unwrap()[2], Some(4));
    }

    #[test]
    fn hadamard_order_four() {
        let g = hadamard_graph(&sylvester_hadamard(2).unwrap()).unwrap();
        assert_eq!(g.order(), 16);
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert!(g.edges().iter().all(|&(u, v)| u < 8 && v >= 8));
        assert_eq!((0..16).map(|v| eccentricity(&g, v).unwrap()).max(), Some(4));
        assert_eq!(distances(&g, 0).unwrap()[4], Some(4));
    }

    #[test]
    fn rejects_non_hadamard() {
        let m = IntMatrix::from_i64(2, 2, &[1, 1, 1, 1]);
        assert_eq!(hadamard_graph(&m), Err(GraphError::NotHadamard));
        let m = IntMatrix::from_i64(1, 1, &[2]);
        assert_eq!(hadamard_graph(&m), Err(GraphError::NotHadamard));
    }
}
