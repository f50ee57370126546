//! Component decomposition, path/cycle classification, and the component
//! multiset (`ComponentSpec`) with its little grammar.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::digraph::Vertex;
use crate::error::{Error, Result};
use crate::undirected::UndirectedGraph;

/// Shape of one connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentShape {
    Path,
    Cycle,
    /// Anything that is neither a path nor a cycle.
    Other,
}

/// A connected component with its vertices in traversal order.
///
/// Paths run end-to-end starting at the smaller endpoint; cycles start at
/// their smallest vertex and turn towards its smaller neighbor. `Other`
/// components list their vertices in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedComponent {
    pub vertices: Vec<Vertex>,
    pub shape: ComponentShape,
}

/// Splits `g` into connected components and classifies each one.
pub fn classify_components(g: &UndirectedGraph) -> Vec<ClassifiedComponent> {
    let n = g.vertex_count();
    let mut seen = vec![false; n as usize + 1];
    let mut result = Vec::new();
    for start in 1..=n {
        if seen[start as usize] {
            continue;
        }
        // collect the component
        let mut stack = vec![start];
        seen[start as usize] = true;
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in g.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        result.push(classify_one(g, members));
    }
    result
}

fn classify_one(g: &UndirectedGraph, members: Vec<Vertex>) -> ClassifiedComponent {
    let k = members.len();
    if members.iter().any(|&v| g.degree(v) > 2) {
        return ClassifiedComponent {
            vertices: members,
            shape: ComponentShape::Other,
        };
    }
    // connected with max degree 2 means e == k (a cycle) or e == k-1 (a path)
    let edge_total: usize = members.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    if edge_total == k && k >= 3 {
        // a cycle: start at the smallest vertex, walk towards its smaller neighbor
        let start = members[0];
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = g.neighbors(start)[0];
        while cur != start {
            order.push(cur);
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| w != prev)
                .expect("cycle vertices have two neighbors");
            prev = cur;
            cur = next;
        }
        ClassifiedComponent {
            vertices: order,
            shape: ComponentShape::Cycle,
        }
    } else if edge_total + 1 == k {
        // a path: walk from the smaller endpoint
        let start = members
            .iter()
            .copied()
            .find(|&v| g.degree(v) <= 1)
            .expect("a path has an endpoint");
        let mut order = vec![start];
        let mut prev = 0;
        let mut cur = start;
        while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        ClassifiedComponent {
            vertices: order,
            shape: ComponentShape::Path,
        }
    } else {
        ClassifiedComponent {
            vertices: members,
            shape: ComponentShape::Other,
        }
    }
}

/// Kind of one component in a spec; cycles order before paths so the
/// canonical rendering reads `C3 + 6xP1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    Cycle,
    Path,
}

/// Canonical multiset of path and cycle components.
///
/// `Path(m)` is the path on m vertices, `Cycle(m)` the cycle of length m.
/// Cycle sizes must be at least 3 and path sizes at least 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComponentSpec {
    items: BTreeMap<(ComponentKind, u32), u32>,
}

impl ComponentSpec {
    pub fn empty() -> ComponentSpec {
        ComponentSpec::default()
    }

    pub fn from_items(items: impl IntoIterator<Item = (ComponentKind, u32)>) -> Result<ComponentSpec> {
        let mut spec = ComponentSpec::empty();
        for (kind, size) in items {
            spec.push(kind, size, 1)?;
        }
        Ok(spec)
    }

    /// Adds `count` components of the given kind and size.
    pub fn push(&mut self, kind: ComponentKind, size: u32, count: u32) -> Result<()> {
        match kind {
            ComponentKind::Path if size == 0 => {
                return Err(Error::BadParameters("path size must be at least 1".into()))
            }
            ComponentKind::Cycle if size < 3 => {
                return Err(Error::BadParameters(format!(
                    "cycle length must be at least 3, got {}",
                    size
                )))
            }
            _ => {}
        }
        if count == 0 {
            return Err(Error::BadParameters("count must be positive".into()));
        }
        *self.items.entry((kind, size)).or_insert(0) += count;
        Ok(())
    }

    /// Iterates `(kind, size, count)` in canonical order.
    pub fn items(&self) -> impl Iterator<Item = (ComponentKind, u32, u32)> + '_ {
        self.items.iter().map(|(&(k, s), &c)| (k, s, c))
    }

    /// Number of components, counting multiplicity.
    pub fn component_count(&self) -> u64 {
        self.items.values().map(|&c| c as u64).sum()
    }

    pub fn total_vertices(&self) -> u64 {
        self.items
            .iter()
            .map(|(&(_, s), &c)| s as u64 * c as u64)
            .sum()
    }

    pub fn path_component_count(&self) -> u64 {
        self.items
            .iter()
            .filter(|(&(k, _), _)| k == ComponentKind::Path)
            .map(|(_, &c)| c as u64)
            .sum()
    }

    /// Path sizes with multiplicity, in descending order.
    pub fn path_sizes_desc(&self) -> Vec<u32> {
        let mut sizes = Vec::new();
        for (kind, size, count) in self.items() {
            if kind == ComponentKind::Path {
                for _ in 0..count {
                    sizes.push(size);
                }
            }
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Cycle lengths with multiplicity, ascending.
    pub fn cycle_sizes(&self) -> Vec<u32> {
        let mut sizes = Vec::new();
        for (kind, size, count) in self.items() {
            if kind == ComponentKind::Cycle {
                for _ in 0..count {
                    sizes.push(size);
                }
            }
        }
        sizes
    }

    /// Every spec with total vertex count at most `total`, in a
    /// deterministic order. Includes the empty spec.
    pub fn enumerate_up_to(total: u32) -> Vec<ComponentSpec> {
        // item catalog in canonical order: cycles 3..=total, paths 1..=total
        let mut catalog = Vec::new();
        for s in 3..=total {
            catalog.push((ComponentKind::Cycle, s));
        }
        for s in 1..=total {
            catalog.push((ComponentKind::Path, s));
        }
        let mut result = Vec::new();
        let mut current = ComponentSpec::empty();
        fn recurse(
            catalog: &[(ComponentKind, u32)],
            pos: usize,
            left: u32,
            current: &mut ComponentSpec,
            result: &mut Vec<ComponentSpec>,
        ) {
            if pos == catalog.len() {
                result.push(current.clone());
                return;
            }
            let (kind, size) = catalog[pos];
            let max_count = left / size;
            for count in 0..=max_count {
                if count > 0 {
                    current.push(kind, size, 1).expect("catalog sizes are valid");
                }
                recurse(catalog, pos + 1, left - count * size, current, result);
            }
            if max_count > 0 {
                current.items.remove(&(kind, size));
            }
        }
        recurse(&catalog, 0, total, &mut current, &mut result);
        result
    }
}

impl fmt::Display for ComponentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.items.is_empty() {
            return f.write_str("(empty)");
        }
        let mut first = true;
        for (kind, size, count) in self.items() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if count > 1 {
                write!(f, "{}x", count)?;
            }
            let letter = match kind {
                ComponentKind::Cycle => 'C',
                ComponentKind::Path => 'P',
            };
            write!(f, "{}{}", letter, size)?;
        }
        Ok(())
    }
}

impl FromStr for ComponentSpec {
    type Err = Error;

    /// Grammar: `spec := item (("+" | ",") item)*`,
    /// `item := [COUNT "x"] ("P" | "C") SIZE`, case-insensitive.
    fn from_str(s: &str) -> Result<ComponentSpec> {
        let mut spec = ComponentSpec::empty();
        let mut any = false;
        for raw in s.split(['+', ',']) {
            let item = raw.trim();
            if item.is_empty() {
                return Err(Error::BadParameters(format!("empty item in spec `{}`", s)));
            }
            any = true;
            spec.push_parsed_item(item)?;
        }
        if !any {
            return Err(Error::BadParameters("empty spec".into()));
        }
        Ok(spec)
    }
}

impl ComponentSpec {
    fn push_parsed_item(&mut self, item: &str) -> Result<()> {
        let bad = |msg: &str| Error::BadParameters(format!("bad item `{}`: {}", item, msg));
        let bytes = item.as_bytes();
        let mut pos = 0;
        // optional COUNT "x"
        let digits_end = bytes
            .iter()
            .position(|b| !b.is_ascii_digit())
            .unwrap_or(bytes.len());
        let mut count = 1u32;
        if digits_end > 0 {
            if digits_end >= bytes.len() || !matches!(bytes[digits_end], b'x' | b'X') {
                return Err(bad("a leading count must be followed by `x`"));
            }
            count = item[..digits_end]
                .parse()
                .map_err(|_| bad("count out of range"))?;
            if count == 0 {
                return Err(bad("count must be positive"));
            }
            pos = digits_end + 1;
        }
        let kind = match bytes.get(pos) {
            Some(b'p') | Some(b'P') => ComponentKind::Path,
            Some(b'c') | Some(b'C') => ComponentKind::Cycle,
            _ => return Err(bad("expected `P` or `C`")),
        };
        pos += 1;
        let size_str = &item[pos..];
        if size_str.is_empty() || !size_str.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected a positive size after the kind"));
        }
        let size: u32 = size_str.parse().map_err(|_| bad("size out of range"))?;
        if size == 0 {
            return Err(bad("size must be positive"));
        }
        self.push(kind, size, count)
    }
}

/// Canonicalizes `g` into a component multiset.
///
/// Fails with [`Error::NotPathsAndCycles`] if some component is neither a
/// path nor a cycle; the offending component rides along in the error.
pub fn to_spec(g: &UndirectedGraph) -> Result<ComponentSpec> {
    let mut spec = ComponentSpec::empty();
    for comp in classify_components(g) {
        let size = comp.vertices.len() as u32;
        match comp.shape {
            ComponentShape::Path => spec.push(ComponentKind::Path, size, 1)?,
            ComponentShape::Cycle => spec.push(ComponentKind::Cycle, size, 1)?,
            ComponentShape::Other => return Err(Error::NotPathsAndCycles(comp.vertices)),
        }
    }
    Ok(spec)
}

/// Isomorphism test restricted to disjoint unions of paths and cycles:
/// true iff `g` decomposes into exactly the multiset `spec`.
pub fn spec_equal(g: &UndirectedGraph, spec: &ComponentSpec) -> bool {
    match to_spec(g) {
        Ok(s) => s == *spec,
        Err(_) => false,
    }
}

fn ensure_max_degree_two(g: &UndirectedGraph) -> Result<()> {
    for v in g.vertices() {
        let deg = g.degree(v);
        if deg > 2 {
            return Err(Error::DegreeTooHigh(v, deg));
        }
    }
    Ok(())
}

/// Interval test for graphs of maximum degree 2: true iff every component
/// is a path or a triangle. Requires max degree <= 2.
pub fn is_interval_bounded_degree(g: &UndirectedGraph) -> Result<bool> {
    ensure_max_degree_two(g)?;
    Ok(classify_components(g).iter().all(|c| match c.shape {
        ComponentShape::Path => true,
        ComponentShape::Cycle => c.vertices.len() == 3,
        ComponentShape::Other => false,
    }))
}

/// Hole test for graphs of maximum degree 2: true iff some component is a
/// cycle of length at least 4. Requires max degree <= 2.
pub fn has_hole_bounded_degree(g: &UndirectedGraph) -> Result<bool> {
    ensure_max_degree_two(g)?;
    Ok(classify_components(g)
        .iter()
        .any(|c| c.shape == ComponentShape::Cycle && c.vertices.len() >= 4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cce::cce;
    use crate::fixtures;

    fn graph(n: u32, edges: &[(Vertex, Vertex)]) -> UndirectedGraph {
        UndirectedGraph::new(n, edges.iter().copied()).unwrap()
    }

    fn spec(s: &str) -> ComponentSpec {
        s.parse().unwrap()
    }

    #[test]
    fn classify_edgeless() {
        let comps = classify_components(&UndirectedGraph::edgeless(3));
        assert_eq!(comps.len(), 3);
        for c in &comps {
            assert_eq!(c.shape, ComponentShape::Path);
            assert_eq!(c.vertices.len(), 1);
        }
    }

    #[test]
    fn classify_square_witness_cce() {
        let comps = classify_components(&cce(&fixtures::square_witness()));
        let cycles: Vec<_> = comps
            .iter()
            .filter(|c| c.shape == ComponentShape::Cycle)
            .collect();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices, vec![1, 2, 3, 4]);
        assert_eq!(
            comps
                .iter()
                .filter(|c| c.shape == ComponentShape::Path && c.vertices.len() == 1)
                .count(),
            7
        );
    }

    #[test]
    fn classify_rejects_branching() {
        // triangle with a pendant vertex
        let g = graph(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]);
        let comps = classify_components(&g);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].shape, ComponentShape::Other);
    }

    #[test]
    fn classify_orders_are_deterministic() {
        // path 4-2-7 listed from its smaller endpoint
        let g = graph(7, &[(2, 4), (2, 7)]);
        let comps = classify_components(&g);
        let path = comps.iter().find(|c| c.vertices.len() == 3).unwrap();
        assert_eq!(path.vertices, vec![4, 2, 7]);
        // cycle starts at the smallest vertex, towards the smaller neighbor
        let g = graph(4, &[(1, 3), (3, 2), (2, 4), (4, 1)]);
        assert_eq!(classify_components(&g)[0].vertices, vec![1, 3, 2, 4]);
    }

    #[test]
    fn to_spec_examples() {
        assert_eq!(to_spec(&cce(&fixtures::triangle_witness())).unwrap(), spec("C3 + 6xP1"));
        let p4 = graph(4, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(to_spec(&p4).unwrap(), spec("P4"));
        let k4 = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert!(matches!(to_spec(&k4), Err(Error::NotPathsAndCycles(_))));
    }

    #[test]
    fn spec_equal_examples() {
        assert!(spec_equal(&cce(&fixtures::triangle_witness()), &spec("C3 + 6xP1")));
        let c4 = graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert!(!spec_equal(&c4, &spec("C3 + P1")));

        let g = cce(&fixtures::square_witness());
        let relabeled = g.relabel(&[5, 9, 1, 4, 2, 3, 6, 7, 8, 11, 10]).unwrap();
        assert!(spec_equal(&relabeled, &to_spec(&g).unwrap()));
    }

    #[test]
    fn union_of_two_triangle_witnesses() {
        let d5 = fixtures::triangle_witness();
        let g = cce(&d5.disjoint_union(&d5));
        assert_eq!(to_spec(&g).unwrap(), spec("2xC3 + 12xP1"));
    }

    #[test]
    fn spec_arithmetic() {
        let s = spec("C3 + 6xP1");
        assert_eq!(s.component_count(), 7);
        assert_eq!(s.total_vertices(), 9);
        assert_eq!(s.path_component_count(), 6);
        assert_eq!(spec("2xP3, P5").path_sizes_desc(), vec![5, 3, 3]);
    }

    #[test]
    fn grammar_round_trips() {
        for (input, canonical) in [
            ("C3 + 6xP1", "C3 + 6xP1"),
            ("C4+7xP1", "C4 + 7xP1"),
            ("2xP3, P5", "2xP3 + P5"),
            ("c3+6xp1", "C3 + 6xP1"),
            ("P3 + P3", "2xP3"),
            ("6xP1 + C3", "C3 + 6xP1"),
        ] {
            assert_eq!(spec(input).to_string(), canonical);
        }
    }

    #[test]
    fn grammar_rejections() {
        for bad in ["", " ", "C2", "P0", "0xP1", "Q3", "3P2", "P", "x3", "P3 C3", "P3 +"] {
            assert!(bad.parse::<ComponentSpec>().is_err(), "accepted `{}`", bad);
        }
    }

    #[test]
    fn interval_and_hole_tests() {
        // P5 + C3
        let g = graph(8, &[(1, 2), (2, 3), (3, 4), (4, 5), (6, 7), (7, 8), (6, 8)]);
        assert!(is_interval_bounded_degree(&g).unwrap());
        assert!(!has_hole_bounded_degree(&g).unwrap());

        let c4 = cce(&fixtures::square_witness());
        assert!(!is_interval_bounded_degree(&c4).unwrap());
        assert!(has_hole_bounded_degree(&c4).unwrap());

        assert!(is_interval_bounded_degree(&UndirectedGraph::edgeless(4)).unwrap());

        let p10: Vec<(Vertex, Vertex)> = (1..10).map(|i| (i, i + 1)).collect();
        assert!(!has_hole_bounded_degree(&graph(10, &p10)).unwrap());

        let k4 = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(
            is_interval_bounded_degree(&k4).unwrap_err(),
            Error::DegreeTooHigh(1, 3)
        );
    }

    #[test]
    fn interval_iff_no_hole_under_precondition() {
        for g in [
            graph(3, &[(1, 2), (2, 3)]),
            graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]),
            graph(6, &[(1, 2), (2, 3), (1, 3), (4, 5)]),
            UndirectedGraph::edgeless(5),
        ] {
            assert_eq!(
                is_interval_bounded_degree(&g).unwrap(),
                !has_hole_bounded_degree(&g).unwrap()
            );
        }
    }

    #[test]
    fn enumerate_up_to_small_totals() {
        // totals 0..=4 by hand: {}, P1, P2, 2xP1, P3, P1+P2, 3xP1, C3,
        // P4, P1+P3, 2xP2, 2xP1+P2, 4xP1, C4, P1+C3
        let specs = ComponentSpec::enumerate_up_to(4);
        assert_eq!(specs.len(), 15);
        assert!(specs.iter().any(|s| s.to_string() == "(empty)"));
        assert!(specs.iter().any(|s| s.to_string() == "C3 + P1"));
        assert!(specs.iter().any(|s| s.to_string() == "2xP1 + P2"));
        // all distinct
        let mut seen = std::collections::HashSet::new();
        for s in &specs {
            assert!(seen.insert(s.to_string()));
            assert!(s.total_vertices() <= 4);
        }
    }
}
