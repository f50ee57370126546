//! Finite simple digraphs with 1-based vertex labels.
//!
//! "Simple" here means: no loops, no parallel arcs. A pair of opposite
//! arcs (u,v) and (v,u) is allowed; the rotation constructions in
//! [`crate::synth`] depend on that.

use std::fmt;

use crate::error::{Error, Result};

/// Vertices are integers `1..=n`.
pub type Vertex = u32;

/// Per-vertex degree caps: indegree at most `max_in`, outdegree at most `max_out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeBound {
    pub max_in: u32,
    pub max_out: u32,
}

impl DegreeBound {
    /// The bound this toolkit revolves around.
    pub const TWO_TWO: DegreeBound = DegreeBound {
        max_in: 2,
        max_out: 2,
    };

    pub fn new(max_in: u32, max_out: u32) -> DegreeBound {
        DegreeBound { max_in, max_out }
    }

    /// The bound satisfied by the reversal of a digraph satisfying `self`.
    pub fn flipped(self) -> DegreeBound {
        DegreeBound {
            max_in: self.max_out,
            max_out: self.max_in,
        }
    }
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.max_in, self.max_out)
    }
}

/// An immutable simple digraph.
///
/// Arcs are kept sorted by `(tail, head)`, so iteration order and every
/// derived output are reproducible. All operations return new values.
#[derive(Clone)]
pub struct Digraph {
    n: u32,
    arcs: Vec<(Vertex, Vertex)>,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
}

impl Digraph {
    /// Builds a digraph on vertices `1..=n` from an arc list.
    ///
    /// Rejects loops, out-of-range endpoints, and duplicate arcs.
    pub fn new(n: u32, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Digraph> {
        let mut sorted: Vec<(Vertex, Vertex)> = arcs.into_iter().collect();
        for &(u, v) in &sorted {
            if u == 0 || u > n {
                return Err(Error::InvalidVertex(u, n));
            }
            if v == 0 || v > n {
                return Err(Error::InvalidVertex(v, n));
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
        }
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateArc(w[0].0, w[0].1));
            }
        }
        Ok(Digraph::from_sorted(n, sorted))
    }

    /// The digraph on `n` vertices with no arcs.
    pub fn edgeless(n: u32) -> Digraph {
        Digraph::from_sorted(n, Vec::new())
    }

    fn from_sorted(n: u32, arcs: Vec<(Vertex, Vertex)>) -> Digraph {
        let mut out = vec![Vec::new(); n as usize];
        let mut inn = vec![Vec::new(); n as usize];
        for &(u, v) in &arcs {
            out[(u - 1) as usize].push(v);
            inn[(v - 1) as usize].push(u);
        }
        for l in inn.iter_mut() {
            l.sort_unstable();
        }
        // `out` is already sorted because `arcs` is sorted by (tail, head).
        Digraph { n, arcs, out, inn }
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n && self.out[(u - 1) as usize].binary_search(&v).is_ok()
    }

    /// Out-neighbors of `v` (the prey of `v`), sorted.
    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[(v - 1) as usize]
    }

    /// In-neighbors of `v` (the predators of `v`), sorted.
    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inn[(v - 1) as usize]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[(v - 1) as usize].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inn[(v - 1) as usize].len()
    }

    /// True iff every vertex satisfies both caps of `bound`.
    pub fn is_bounded(&self, bound: DegreeBound) -> bool {
        self.vertices().all(|v| {
            self.in_degree(v) <= bound.max_in as usize
                && self.out_degree(v) <= bound.max_out as usize
        })
    }

    /// True iff the digraph has no directed cycle (Kahn's algorithm).
    ///
    /// A 2-cycle counts as a cycle, so digraphs built by the rotation
    /// constructions are typically not acyclic.
    pub fn is_acyclic(&self) -> bool {
        let n = self.n as usize;
        let mut indeg: Vec<usize> = (0..n).map(|i| self.inn[i].len()).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0usize;
        while let Some(i) = queue.pop() {
            seen += 1;
            for &w in &self.out[i] {
                let j = (w - 1) as usize;
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push(j);
                }
            }
        }
        seen == n
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        let mut arcs: Vec<(Vertex, Vertex)> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Digraph::from_sorted(self.n, arcs)
    }

    /// Disjoint union; `other`'s vertices are relabeled by adding `self.n`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let shift = self.n;
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().map(|&(u, v)| (u + shift, v + shift)));
        arcs.sort_unstable();
        Digraph::from_sorted(self.n + other.n, arcs)
    }

    /// Deletes the listed arcs; the vertex set is unchanged.
    ///
    /// Fails with [`Error::MissingArc`] if any listed arc is absent.
    pub fn remove_arcs(&self, remove: &[(Vertex, Vertex)]) -> Result<Digraph> {
        for &(u, v) in remove {
            if !self.has_arc(u, v) {
                return Err(Error::MissingArc(u, v));
            }
        }
        let arcs: Vec<(Vertex, Vertex)> = self
            .arcs
            .iter()
            .copied()
            .filter(|a| !remove.contains(a))
            .collect();
        Ok(Digraph::from_sorted(self.n, arcs))
    }

    pub fn remove_arc(&self, u: Vertex, v: Vertex) -> Result<Digraph> {
        self.remove_arcs(&[(u, v)])
    }

    /// Renders the text format: `digraph <n>` then one `<u> <v>` line per arc.
    pub fn to_text(&self) -> String {
        let mut s = format!("digraph {}\n", self.n);
        for &(u, v) in &self.arcs {
            s.push_str(&format!("{} {}\n", u, v));
        }
        s
    }

    /// Parses the text format. Line 1 must be `digraph <n>`; later lines
    /// are `<u> <v>` arcs, with `#` comment lines and blank lines skipped.
    pub fn from_text(text: &str) -> Result<Digraph> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty input, expected `digraph <n>`"))?;
        let n = parse_header(header, "digraph")?;
        let mut arcs = Vec::new();
        for (idx, line) in lines {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (u, v) = parse_pair(line, line_no)?;
            arcs.push((u, v));
        }
        let digraph = Digraph::new(n, arcs)?;
        Ok(digraph)
    }

    /// Standard DOT output, vertices in increasing order.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph D {\n");
        for v in self.vertices() {
            s.push_str(&format!("  {};\n", v));
        }
        for &(u, v) in &self.arcs {
            s.push_str(&format!("  {} -> {};\n", u, v));
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn parse_header(line: &str, keyword: &str) -> Result<u32> {
    let mut it = line.split_ascii_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(k), Some(num), None) if k == keyword => num
            .parse::<u32>()
            .map_err(|_| Error::parse(1, format!("bad vertex count `{}`", num))),
        _ => Err(Error::parse(
            1,
            format!("expected `{} <n>`, got `{}`", keyword, line),
        )),
    }
}

pub(crate) fn parse_pair(line: &str, line_no: usize) -> Result<(Vertex, Vertex)> {
    let mut it = line.split_ascii_whitespace();
    let (a, b, rest) = (it.next(), it.next(), it.next());
    match (a, b, rest) {
        (Some(a), Some(b), None) => {
            let u = a
                .parse::<Vertex>()
                .map_err(|_| Error::parse(line_no, format!("bad vertex `{}`", a)))?;
            let v = b
                .parse::<Vertex>()
                .map_err(|_| Error::parse(line_no, format!("bad vertex `{}`", b)))?;
            Ok((u, v))
        }
        _ => Err(Error::parse(
            line_no,
            format!("expected `<u> <v>`, got `{}`", line),
        )),
    }
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Digraph) -> bool {
        self.n == other.n && self.arcs == other.arcs
    }
}

impl Eq for Digraph {}

impl std::hash::Hash for Digraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.arcs.hash(state);
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs)
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Independent oracle: `order` is a topological order iff every arc
    /// goes from an earlier to a later position.
    fn is_topological_order(d: &Digraph, order: &[Vertex]) -> bool {
        let mut pos = vec![usize::MAX; d.vertex_count() as usize + 1];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i;
        }
        d.arcs().iter().all(|&(u, v)| pos[u as usize] < pos[v as usize])
    }

    #[test]
    fn construction_rejects_bad_arcs() {
        assert_eq!(
            Digraph::new(3, vec![(1, 1)]).unwrap_err(),
            Error::LoopArc(1)
        );
        assert_eq!(
            Digraph::new(3, vec![(1, 4)]).unwrap_err(),
            Error::InvalidVertex(4, 3)
        );
        assert_eq!(
            Digraph::new(3, vec![(0, 2)]).unwrap_err(),
            Error::InvalidVertex(0, 3)
        );
        assert_eq!(
            Digraph::new(3, vec![(1, 2), (1, 2)]).unwrap_err(),
            Error::DuplicateArc(1, 2)
        );
    }

    #[test]
    fn opposite_arcs_are_legal() {
        let d = Digraph::new(2, vec![(1, 2), (2, 1)]).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert!(!d.is_acyclic());
    }

    #[test]
    fn bounded_examples() {
        assert!(Digraph::edgeless(5).is_bounded(DegreeBound::TWO_TWO));
        assert!(fixtures::triangle_witness().is_bounded(DegreeBound::TWO_TWO));
        let star = Digraph::new(4, vec![(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(!star.is_bounded(DegreeBound::TWO_TWO));
        assert!(star.is_bounded(DegreeBound::new(2, 3)));
    }

    #[test]
    fn acyclicity_examples() {
        assert!(Digraph::edgeless(1).is_acyclic());

        let d5 = fixtures::triangle_witness();
        // sources first, then the middle layer, then the sinks
        let order = [7, 8, 9, 1, 2, 3, 4, 5, 6];
        assert!(is_topological_order(&d5, &order));
        assert!(d5.is_acyclic());

        // the 3-vertex rotation digraph carries 2-cycles
        let rot = crate::synth::build_rotation(3, 1).unwrap();
        assert!(rot.has_arc(1, 2) && rot.has_arc(2, 1));
        assert!(!rot.is_acyclic());
    }

    #[test]
    fn reverse_examples() {
        let empty = Digraph::edgeless(4);
        assert_eq!(empty.reverse(), empty);

        let single = Digraph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(single.reverse().arcs(), &[(2, 1)]);

        let d5 = fixtures::triangle_witness();
        assert_eq!(d5.reverse().reverse(), d5);
    }

    #[test]
    fn disjoint_union_examples() {
        let d5 = fixtures::triangle_witness();
        assert_eq!(d5.disjoint_union(&Digraph::edgeless(0)), d5);
        assert_eq!(Digraph::edgeless(0).disjoint_union(&d5), d5);

        let single = Digraph::new(2, vec![(1, 2)]).unwrap();
        let two = single.disjoint_union(&single);
        assert_eq!(two.vertex_count(), 4);
        assert_eq!(two.arcs(), &[(1, 2), (3, 4)]);
    }

    #[test]
    fn remove_arcs_examples() {
        let single = Digraph::new(2, vec![(1, 2)]).unwrap();
        assert_eq!(single.remove_arcs(&[]).unwrap(), single);
        assert_eq!(single.remove_arc(1, 2).unwrap(), Digraph::edgeless(2));
        assert_eq!(
            single.remove_arc(2, 1).unwrap_err(),
            Error::MissingArc(2, 1)
        );

        let rot = crate::synth::build_rotation(3, 1).unwrap();
        assert_eq!(rot.remove_arc(1, 2).unwrap().arc_count(), 5);
    }

    #[test]
    fn degrees_never_grow_under_removal() {
        let d5 = fixtures::triangle_witness();
        let smaller = d5.remove_arc(1, 4).unwrap();
        for v in d5.vertices() {
            assert!(smaller.out_degree(v) <= d5.out_degree(v));
            assert!(smaller.in_degree(v) <= d5.in_degree(v));
        }
        assert!(smaller.is_acyclic());
    }

    #[test]
    fn text_round_trip_is_bit_exact() {
        let d = Digraph::new(3, vec![(2, 1), (1, 3)]).unwrap();
        let text = d.to_text();
        assert_eq!(text, "digraph 3\n1 3\n2 1\n");
        assert_eq!(Digraph::from_text(&text).unwrap(), d);
    }

    #[test]
    fn text_parsing_accepts_comments_and_blank_lines() {
        let text = "digraph 3\n# a comment\n\n1 2\n# another\n2 3\n";
        let d = Digraph::from_text(text).unwrap();
        assert_eq!(d.arcs(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn text_parsing_errors() {
        assert!(matches!(
            Digraph::from_text("graph 3\n1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert_eq!(
            Digraph::from_text("digraph 2\n1 2\n1 2\n").unwrap_err(),
            Error::DuplicateArc(1, 2)
        );
        assert_eq!(
            Digraph::from_text("digraph 2\n1 1\n").unwrap_err(),
            Error::LoopArc(1)
        );
        assert_eq!(
            Digraph::from_text("digraph 2\n1 3\n").unwrap_err(),
            Error::InvalidVertex(3, 2)
        );
        assert!(matches!(
            Digraph::from_text("digraph 2\n1 2 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn dot_output_is_deterministic() {
        let d = Digraph::new(3, vec![(2, 1), (1, 3)]).unwrap();
        assert_eq!(
            d.to_dot(),
            "digraph D {\n  1;\n  2;\n  3;\n  1 -> 3;\n  2 -> 1;\n}\n"
        );
    }
}
