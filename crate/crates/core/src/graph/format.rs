//! graph6 and plain edge-list text formats.

use super::Graph;
use crate::error::ParseError;

const MAX_GRAPH6_ORDER: u64 = 68_719_476_735;

fn header(n: u64) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut out = vec![126];
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        out
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        out
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = header(n as u64);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, ParseError> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(ParseError::Graph6 { offset, reason: format!("byte {b:#04x} outside 63..=126") }),
        None => Err(ParseError::Graph6 { offset, reason: "unexpected end of input".into() }),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` marker and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let trimmed = text.trim_end();
    let (skip, body) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let err = |offset: usize, reason: &str| ParseError::Graph6 { offset: offset + skip, reason: reason.into() };
    if body.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, mut pos) = if body[0] != 126 {
        (sextet(body, 0)?, 1)
    } else if body.get(1) != Some(&126) {
        let mut n = 0;
        for k in 1..4 {
            n = n << 6 | sextet(body, k).map_err(|_| err(k, "truncated 18-bit header"))?;
        }
        if n <= 62 {
            return Err(err(0, "non-minimal header"));
        }
        (n, 4)
    } else {
        let mut n = 0;
        for k in 2..8 {
            n = n << 6 | sextet(body, k).map_err(|_| err(k, "truncated 36-bit header"))?;
        }
        if n <= 258_047 {
            return Err(err(0, "non-minimal header"));
        }
        (n, 8)
    };
    if n > MAX_GRAPH6_ORDER {
        return Err(err(0, "vertex count out of range"));
    }
    let bits = n as u128 * (n as u128).saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let available = (body.len() - pos) as u128;
    if available < needed {
        return Err(err(body.len(), "truncated adjacency bit vector"));
    }
    let n = usize::try_from(n).map_err(|_| err(0, "vertex count does not fit in memory"))?;
    let mut edges = Vec::new();
    let mut current = 0u64;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                current = sextet(body, pos).map_err(|e| match e {
                    ParseError::Graph6 { offset, reason } => ParseError::Graph6 { offset: offset + skip, reason },
                    other => other,
                })?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if current >> left & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    if pos < body.len() {
        return Err(err(pos, "trailing bytes after adjacency bit vector"));
    }
    if left > 0 && current & ((1 << left) - 1) != 0 {
        return Err(err(pos - 1, "nonzero padding bits"));
    }
    edges.sort_unstable();
    Ok(Graph::from_canonical(n, edges))
}

/// Edge-list text: the first data line is `n`, then one `u v` pair per line.
/// Everything after `#` on a line is ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, first) = lines.next().ok_or(ParseError::EdgeList { line: 1, reason: "missing vertex count".into() })?;
    let n: usize =
        first.parse().map_err(|_| ParseError::EdgeList { line, reason: format!("invalid vertex count {first:?}") })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => edges.push((u, v)),
            _ => return Err(ParseError::EdgeList { line, reason: format!("expected `u v`, got {l:?}") }),
        }
    }
    Graph::new(n, edges).map_err(|e| ParseError::EdgeList { line: 0, reason: e.to_string() })
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardGraph};

    /// Independent decoder written straight from the format description:
    /// expand every data byte into six bits, then walk the upper triangle
    /// column by column.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let bytes = s.as_bytes();
        let n = (bytes[0] - 63) as usize;
        let bits: Vec<bool> =
            bytes[1..].iter().flat_map(|&b| (0..6).rev().map(move |k| (b - 63) >> k & 1 == 1)).collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 0..n {
            for i in 0..j {
                if bits[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        edges.sort_unstable();
        (n, edges)
    }

    #[test]
    fn decodes_small_examples() {
        for (text, n, m) in [("A_", 2, 1), ("B?", 3, 0), ("Bw", 3, 3), ("?", 0, 0), ("@", 1, 0)] {
            let g = parse_graph6(text).unwrap();
            assert_eq!((g.order(), g.size()), (n, m), "{text}");
            assert_eq!(reference_decode(text), (g.order(), g.edges().to_vec()));
        }
        assert_eq!(parse_graph6("A_").unwrap(), standard_graph(StandardGraph::Complete, 2).unwrap());
        assert_eq!(parse_graph6("Bw").unwrap(), standard_graph(StandardGraph::Complete, 3).unwrap());
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap().size(), 3);
    }

    #[test]
    fn encodes_small_examples() {
        assert_eq!(to_graph6(&standard_graph(StandardGraph::Complete, 2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        let c4 = standard_graph(StandardGraph::Cycle, 4).unwrap();
        let s = to_graph6(&c4);
        assert_eq!(s.len(), 2);
        assert_eq!(parse_graph6(&s).unwrap(), c4);
        // same encoding petgraph produces for this graph
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn long_headers_round_trip() {
        for n in [62, 63, 100] {
            let g = standard_graph(StandardGraph::Path, n).unwrap();
            let s = to_graph6(&g);
            assert_eq!(s.as_bytes()[0] == 126, n > 62);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn reports_error_offsets() {
        match parse_graph6("B") {
            Err(ParseError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_graph6("B w") {
            Err(ParseError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_graph6("A\x7f") {
            Err(ParseError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("Bww").is_err());
        assert!(parse_graph6("~??").is_err());
        // K2 with a stray padding bit set
        assert!(parse_graph6("A`").is_err());
    }

    #[test]
    fn edge_list_format() {
        let text = "# a path\n3\n0 1 # first\n\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, standard_graph(StandardGraph::Path, 3).unwrap());
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(matches!(parse_edge_list("3\n0 x\n"), Err(ParseError::EdgeList { line: 2, .. })));
        assert!(parse_edge_list("2\n0 0\n").is_err());
        assert!(parse_edge_list("").is_err());
    }
}
