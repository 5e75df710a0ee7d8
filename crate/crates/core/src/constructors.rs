//! Named graph constructors behind a registry, plus a compact graph-name
//! syntax: `K5`, `P3`, `C6`, `O2` (edgeless) or `g6:<graph6>`.

use std::collections::BTreeMap;

use crate::error::GraphError;
use crate::graph::{
    cartesian_product, complement, disjoint_union, double_cone, hadamard_graph, join, parse_graph6, standard_graph,
    sylvester_hadamard, threshold_graph, Graph, StandardGraph,
};

/// Parses `K<n>`, `P<n>`, `C<n>`, `O<n>` or `g6:<graph6>`.
pub fn parse_graph_name(name: &str) -> Result<Graph, GraphError> {
    let bad = || {
        GraphError::InvalidParameter(format!(
            "unrecognized graph `{name}` (expected K<n>, P<n>, C<n>, O<n> or g6:<str>)"
        ))
    };
    if let Some(code) = name.strip_prefix("g6:") {
        return parse_graph6(code).map_err(|e| GraphError::InvalidParameter(e.to_string()));
    }
    let mut chars = name.chars();
    let kind = match chars.next() {
        Some('K') => StandardGraph::Complete,
        Some('P') => StandardGraph::Path,
        Some('C') => StandardGraph::Cycle,
        Some('O') => StandardGraph::Empty,
        _ => return Err(bad()),
    };
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    standard_graph(kind, n)
}

pub trait GraphConstructor: Send + Sync {
    fn name(&self) -> &'static str;
    fn usage(&self) -> &'static str;
    fn build(&self, args: &[String]) -> Result<Graph, GraphError>;
}

/// Positional arguments after dropping recognized `--flag` labels; any
/// other flag is an error.
fn positional<'a>(args: &'a [String], flags: &[&str]) -> Result<Vec<&'a str>, GraphError> {
    let mut out = Vec::new();
    for a in args {
        if let Some(f) = a.strip_prefix("--") {
            if !flags.contains(&f) {
                return Err(GraphError::InvalidParameter(format!("unknown flag --{f}")));
            }
        } else {
            out.push(a.as_str());
        }
    }
    Ok(out)
}

fn exactly<'a, const N: usize>(args: &[&'a str], usage: &str) -> Result<[&'a str; N], GraphError> {
    <[&str; N]>::try_from(args).map_err(|_| GraphError::InvalidParameter(format!("usage: {usage}")))
}

fn parse_count(s: &str) -> Result<usize, GraphError> {
    s.parse().map_err(|_| GraphError::InvalidParameter(format!("`{s}` is not a non-negative integer")))
}

struct Named(&'static str, StandardGraph, &'static str);

impl GraphConstructor for Named {
    fn name(&self) -> &'static str {
        self.0
    }
    fn usage(&self) -> &'static str {
        self.2
    }
    fn build(&self, args: &[String]) -> Result<Graph, GraphError> {
        let [n] = exactly(&positional(args, &["n"])?, self.2)?;
        standard_graph(self.1, parse_count(n)?)
    }
}

type Binary = fn(&Graph, &Graph) -> Graph;

struct BinaryOp(&'static str, Binary, &'static str);

impl GraphConstructor for BinaryOp {
    fn name(&self) -> &'static str {
        self.0
    }
    fn usage(&self) -> &'static str {
        self.2
    }
    fn build(&self, args: &[String]) -> Result<Graph, GraphError> {
        let [x, y] = exactly(&positional(args, &[])?, self.2)?;
        Ok((self.1)(&parse_graph_name(x)?, &parse_graph_name(y)?))
    }
}

struct DoubleCone;

impl GraphConstructor for DoubleCone {
    fn name(&self) -> &'static str {
        "double-cone"
    }
    fn usage(&self) -> &'static str {
        "double-cone --over GRAPH"
    }
    fn build(&self, args: &[String]) -> Result<Graph, GraphError> {
        let [y] = exactly(&positional(args, &["over"])?, self.usage())?;
        Ok(double_cone(&parse_graph_name(y)?))
    }
}

struct Complement;

impl GraphConstructor for Complement {
    fn name(&self) -> &'static str {
        "complement"
    }
    fn usage(&self) -> &'static str {
        "complement GRAPH"
    }
    fn build(&self, args: &[String]) -> Result<Graph, GraphError> {
        let [x] = exactly(&positional(args, &[])?, self.usage())?;
        Ok(complement(&parse_graph_name(x)?))
    }
}

struct Threshold;

impl GraphConstructor for Threshold {
    fn name(&self) -> &'static str {
        "threshold"
    }
    fn usage(&self) -> &'static str {
        "threshold M1 M2 [M3 M4 ...]"
    }
    fn build(&self, args: &[String]) -> Result<Graph, GraphError> {
        let m = positional(args, &[])?.into_iter().map(parse_count).collect::<Result<Vec<_>, _>>()?;
        threshold_graph(&m)
    }
}

struct Hadamard;

impl GraphConstructor for Hadamard {
    fn name(&self) -> &'static str {
        "hadamard"
    }
    fn usage(&self) -> &'static str {
        "hadamard --sylvester K   (matrix order 2^K, 2^(K+2) vertices)"
    }
    fn build(&self, args: &[String]) -> Result<Graph, GraphError> {
        let [k] = exactly(&positional(args, &["sylvester"])?, self.usage())?;
        let k: u32 =
            k.parse().map_err(|_| GraphError::InvalidParameter(format!("`{k}` is not a Sylvester exponent")))?;
        hadamard_graph(&sylvester_hadamard(k)?)
    }
}

pub struct ConstructorRegistry {
    entries: BTreeMap<&'static str, Box<dyn GraphConstructor>>,
}

impl ConstructorRegistry {
    pub fn empty() -> Self {
        Self { entries: BTreeMap::new() }
    }

    pub fn register(&mut self, c: Box<dyn GraphConstructor>) {
        self.entries.insert(c.name(), c);
    }

    pub fn get(&self, name: &str) -> Option<&dyn GraphConstructor> {
        self.entries.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn build(&self, name: &str, args: &[String]) -> Result<Graph, GraphError> {
        match self.get(name) {
            Some(c) => c.build(args),
            None => Err(GraphError::InvalidParameter(format!(
                "unknown constructor `{name}` (available: {})",
                self.names().collect::<Vec<_>>().join(", ")
            ))),
        }
    }
}

impl Default for ConstructorRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(Named("path", StandardGraph::Path, "path N")));
        r.register(Box::new(Named("cycle", StandardGraph::Cycle, "cycle N")));
        r.register(Box::new(Named("complete", StandardGraph::Complete, "complete N")));
        r.register(Box::new(Named("empty", StandardGraph::Empty, "empty N")));
        r.register(Box::new(BinaryOp("cartesian", cartesian_product, "cartesian GRAPH GRAPH")));
        r.register(Box::new(BinaryOp("join", join, "join GRAPH GRAPH")));
        r.register(Box::new(BinaryOp("union", disjoint_union, "union GRAPH GRAPH")));
        r.register(Box::new(DoubleCone));
        r.register(Box::new(Complement));
        r.register(Box::new(Threshold));
        r.register(Box::new(Hadamard));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::to_graph6;

    fn args(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn graph_names() {
        assert_eq!(parse_graph_name("K3").unwrap().size(), 3);
        assert_eq!(parse_graph_name("O4").unwrap().size(), 0);
        assert_eq!(parse_graph_name("g6:Bw").unwrap(), parse_graph_name("K3").unwrap());
        for bad in ["X3", "K", "Kx", "C2", "g6:", ""] {
            assert!(parse_graph_name(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn registry_builds() {
        let r = ConstructorRegistry::default();
        let dc = r.build("double-cone", &args("--over C4")).unwrap();
        assert_eq!((dc.order(), dc.size()), (6, 12));
        assert_eq!(to_graph6(&dc).len(), 4);
        let k3p3 = r.build("cartesian", &args("K3 P3")).unwrap();
        assert_eq!((k3p3.order(), k3p3.size()), (9, 15));
        let h = r.build("hadamard", &args("--sylvester 2")).unwrap();
        assert_eq!((h.order(), h.size()), (16, 32));
        assert_eq!(r.build("threshold", &args("2 4")).unwrap().order(), 6);
        assert_eq!(r.build("path", &args("5")).unwrap().size(), 4);
        assert!(r.build("nope", &[]).is_err());
        assert!(r.build("cartesian", &args("K3")).is_err());
        assert!(r.build("double-cone", &args("--under C4")).is_err());
        assert!(r.build("threshold", &args("2 4 1")).is_err());
    }
}
