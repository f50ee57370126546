//! Simple undirected graphs; these hold CCE graphs and competition graphs.

use std::fmt;

use crate::digraph::{parse_header, parse_pair, Vertex};
use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `1..=n`.
///
/// Edges are stored as `(u,v)` with `u < v`, sorted.
#[derive(Clone)]
pub struct UndirectedGraph {
    n: u32,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl UndirectedGraph {
    pub fn new(n: u32, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<UndirectedGraph> {
        let mut norm: Vec<(Vertex, Vertex)> = Vec::new();
        for (a, b) in edges {
            if a == 0 || a > n {
                return Err(Error::InvalidVertex(a, n));
            }
            if b == 0 || b > n {
                return Err(Error::InvalidVertex(b, n));
            }
            if a == b {
                return Err(Error::LoopArc(a));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(UndirectedGraph::from_sorted(n, norm))
    }

    pub fn edgeless(n: u32) -> UndirectedGraph {
        UndirectedGraph::from_sorted(n, Vec::new())
    }

    fn from_sorted(n: u32, edges: Vec<(Vertex, Vertex)>) -> UndirectedGraph {
        let mut adj = vec![Vec::new(); n as usize];
        for &(u, v) in &edges {
            adj[(u - 1) as usize].push(v);
            adj[(v - 1) as usize].push(u);
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        UndirectedGraph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n && self.adj[(u - 1) as usize].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[(v - 1) as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[(v - 1) as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n as usize).map(|i| self.adj[i].len()).max().unwrap_or(0)
    }

    pub fn disjoint_union(&self, other: &UndirectedGraph) -> UndirectedGraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        edges.sort_unstable();
        UndirectedGraph::from_sorted(self.n + other.n, edges)
    }

    /// Applies a relabeling; `perm[v-1]` is the new label of `v`.
    /// `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<UndirectedGraph> {
        if perm.len() != self.n as usize {
            return Err(Error::BadParameters(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n as usize];
        for &p in perm {
            if p == 0 || p > self.n || seen[(p - 1) as usize] {
                return Err(Error::BadParameters("not a permutation".into()));
            }
            seen[(p - 1) as usize] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[(u - 1) as usize], perm[(v - 1) as usize]));
        UndirectedGraph::new(self.n, edges)
    }

    /// Renders the text format: `graph <n>` then one `<u> <v>` line per
    /// edge with `u < v`.
    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{} {}\n", u, v));
        }
        s
    }

    /// Parses the text format; endpoint order in edge lines is free.
    pub fn from_text(text: &str) -> Result<UndirectedGraph> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty input, expected `graph <n>`"))?;
        let n = parse_header(header, "graph")?;
        let mut edges = Vec::new();
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            edges.push(parse_pair(line, idx + 1)?);
        }
        UndirectedGraph::new(n, edges)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in self.vertices() {
            s.push_str(&format!("  {};\n", v));
        }
        for &(u, v) in &self.edges {
            s.push_str(&format!("  {} -- {};\n", u, v));
        }
        s.push_str("}\n");
        s
    }
}

impl PartialEq for UndirectedGraph {
    fn eq(&self, other: &UndirectedGraph) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for UndirectedGraph {}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UndirectedGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
