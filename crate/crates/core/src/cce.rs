//! Competition and competition-common-enemy (CCE) graph computation.
//!
//! The CCE graph of a digraph D has the same vertex set as D and an edge
//! uv exactly when u and v have both a common prey (shared out-neighbor)
//! and a common predator (shared in-neighbor) in D.

use std::collections::BTreeSet;

use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};
use crate::shape::{classify_components, ComponentShape};
use crate::undirected::UndirectedGraph;

fn sorted_intersection(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Shared out-neighbors of `u` and `v`, sorted.
pub fn common_prey(d: &Digraph, u: Vertex, v: Vertex) -> Vec<Vertex> {
    sorted_intersection(d.out_neighbors(u), d.out_neighbors(v))
}

/// Shared in-neighbors of `u` and `v`, sorted.
pub fn common_predators(d: &Digraph, u: Vertex, v: Vertex) -> Vec<Vertex> {
    sorted_intersection(d.in_neighbors(u), d.in_neighbors(v))
}

/// The CCE graph of `d`: edge uv iff u,v share a prey and a predator.
pub fn cce(d: &Digraph) -> UndirectedGraph {
    let n = d.vertex_count();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if !common_prey(d, u, v).is_empty() && !common_predators(d, u, v).is_empty() {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::new(n, edges).expect("pairwise scan yields valid edges")
}

/// The competition graph of `d`: edge uv iff u,v share a prey.
pub fn competition(d: &Digraph) -> UndirectedGraph {
    let n = d.vertex_count();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if !common_prey(d, u, v).is_empty() {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::new(n, edges).expect("pairwise scan yields valid edges")
}

fn check_in_range(d: &Digraph, set: &BTreeSet<Vertex>) -> Result<()> {
    for &x in set {
        if x == 0 || x > d.vertex_count() {
            return Err(Error::InvalidVertex(x, d.vertex_count()));
        }
    }
    Ok(())
}

/// Out-neighbors of the vertex set `set` that lie outside `set`.
pub fn out_neighbors_of_set(d: &Digraph, set: &BTreeSet<Vertex>) -> Result<BTreeSet<Vertex>> {
    check_in_range(d, set)?;
    let mut result = BTreeSet::new();
    for &x in set {
        for &v in d.out_neighbors(x) {
            if !set.contains(&v) {
                result.insert(v);
            }
        }
    }
    Ok(result)
}

/// In-neighbors of the vertex set `set` that lie outside `set`.
pub fn in_neighbors_of_set(d: &Digraph, set: &BTreeSet<Vertex>) -> Result<BTreeSet<Vertex>> {
    check_in_range(d, set)?;
    let mut result = BTreeSet::new();
    for &x in set {
        for &v in d.in_neighbors(x) {
            if !set.contains(&v) {
                result.insert(v);
            }
        }
    }
    Ok(result)
}

/// Common prey and predators of one consecutive pair of a path or cycle
/// component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    /// 1-based position: this entry covers the pair (v_index, v_index+1),
    /// wrapping to (v_m, v_1) on cycles.
    pub index: usize,
    pub endpoints: (Vertex, Vertex),
    pub prey: Vec<Vertex>,
    pub predators: Vec<Vertex>,
}

impl WitnessPair {
    pub fn is_unique(&self) -> bool {
        self.prey.len() == 1 && self.predators.len() == 1
    }
}

/// Witness map for a whole component: one entry per consecutive pair.
///
/// Uniqueness of the witnesses is a theorem about degree-bounded digraphs,
/// not an assumption, so the sets are reported in full.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub pairs: Vec<WitnessPair>,
}

impl PairWitness {
    pub fn all_unique(&self) -> bool {
        self.pairs.iter().all(WitnessPair::is_unique)
    }
}

/// Computes the witness map for `component`, which must list a path (or,
/// with `is_cycle`, a cycle) component of `cce(d)` in traversal order.
pub fn pair_witnesses(d: &Digraph, component: &[Vertex], is_cycle: bool) -> Result<PairWitness> {
    let g = cce(d);
    validate_component_order(&g, component, is_cycle)?;
    let m = component.len();
    let mut pairs = Vec::new();
    let last = if is_cycle { m } else { m - 1 };
    for i in 0..last {
        let u = component[i];
        let v = component[(i + 1) % m];
        pairs.push(WitnessPair {
            index: i + 1,
            endpoints: (u, v),
            prey: common_prey(d, u, v),
            predators: common_predators(d, u, v),
        });
    }
    Ok(PairWitness { pairs })
}

fn validate_component_order(g: &UndirectedGraph, component: &[Vertex], is_cycle: bool) -> Result<()> {
    let fail = |msg: String| Err(Error::NotAComponent(msg));
    if component.is_empty() {
        return fail("empty vertex sequence".into());
    }
    for &v in component {
        if v == 0 || v > g.vertex_count() {
            return Err(Error::InvalidVertex(v, g.vertex_count()));
        }
    }
    let listed: BTreeSet<Vertex> = component.iter().copied().collect();
    if listed.len() != component.len() {
        return fail("vertex sequence has repeats".into());
    }

    let comps = classify_components(g);
    let comp = comps
        .iter()
        .find(|c| c.vertices.contains(&component[0]))
        .expect("every vertex lies in one component");
    let actual: BTreeSet<Vertex> = comp.vertices.iter().copied().collect();
    if actual != listed {
        return fail(format!(
            "sequence does not cover the component of vertex {}",
            component[0]
        ));
    }
    match (is_cycle, comp.shape) {
        (false, ComponentShape::Path) => {}
        (true, ComponentShape::Cycle) => {}
        (_, shape) => {
            return fail(format!(
                "component of vertex {} is {:?}, which does not match the requested kind",
                component[0], shape
            ))
        }
    }
    let m = component.len();
    let last = if is_cycle { m } else { m - 1 };
    for i in 0..last {
        let u = component[i];
        let v = component[(i + 1) % m];
        if !g.has_edge(u, v) {
            return fail(format!("consecutive vertices {} and {} are not adjacent", u, v));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::DegreeBound;
    use crate::fixtures;
    use crate::synth::{build_rotation, synth_two_paths};

    #[test]
    fn cce_of_triangle_witness() {
        let g = cce(&fixtures::triangle_witness());
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 3)]);
        for v in 4..=9 {
            assert_eq!(g.degree(v), 0);
        }
    }

    #[test]
    fn cce_of_arcless_digraph_is_edgeless() {
        let g = cce(&Digraph::edgeless(5));
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn cce_of_square_witness() {
        let g = cce(&fixtures::square_witness());
        assert_eq!(g.edges(), &[(1, 2), (1, 4), (2, 3), (3, 4)]);
        for v in 5..=11 {
            assert_eq!(g.degree(v), 0);
        }
    }

    #[test]
    fn competition_examples() {
        assert_eq!(competition(&Digraph::edgeless(3)).edge_count(), 0);

        let d = Digraph::new(3, vec![(1, 3), (2, 3)]).unwrap();
        assert_eq!(competition(&d).edges(), &[(1, 2)]);

        // CCE edges are competition edges
        let d5 = fixtures::triangle_witness();
        let c = competition(&d5);
        for &(u, v) in cce(&d5).edges() {
            assert!(c.has_edge(u, v));
        }
    }

    #[test]
    fn neighbors_of_set_examples() {
        let d5 = fixtures::triangle_witness();
        let all: BTreeSet<Vertex> = d5.vertices().collect();
        assert!(out_neighbors_of_set(&d5, &all).unwrap().is_empty());
        assert!(in_neighbors_of_set(&d5, &all).unwrap().is_empty());

        let core: BTreeSet<Vertex> = [1, 2, 3].into_iter().collect();
        assert_eq!(
            out_neighbors_of_set(&d5, &core).unwrap(),
            [4, 5, 6].into_iter().collect()
        );
        assert_eq!(
            in_neighbors_of_set(&d5, &core).unwrap(),
            [7, 8, 9].into_iter().collect()
        );

        let d6 = fixtures::square_witness();
        let square: BTreeSet<Vertex> = [1, 2, 3, 4].into_iter().collect();
        let plus = out_neighbors_of_set(&d6, &square).unwrap();
        let minus = in_neighbors_of_set(&d6, &square).unwrap();
        let union: BTreeSet<Vertex> = plus.union(&minus).copied().collect();
        assert_eq!(union.len(), 7);

        let bad: BTreeSet<Vertex> = [1, 99].into_iter().collect();
        assert_eq!(
            out_neighbors_of_set(&d5, &bad).unwrap_err(),
            Error::InvalidVertex(99, 9)
        );
    }

    #[test]
    fn witnesses_on_triangle_witness() {
        let d5 = fixtures::triangle_witness();
        let w = pair_witnesses(&d5, &[1, 2, 3], true).unwrap();
        assert!(w.all_unique());
        let prey: Vec<Vertex> = w.pairs.iter().map(|p| p.prey[0]).collect();
        let predators: Vec<Vertex> = w.pairs.iter().map(|p| p.predators[0]).collect();
        assert_eq!(prey, vec![4, 5, 6]);
        assert_eq!(predators, vec![7, 8, 9]);
    }

    #[test]
    fn witnesses_on_rotation_match_the_closed_form() {
        let (m, t) = (7u32, 2u32);
        let d = build_rotation(m, t).unwrap();
        assert!(d.is_bounded(DegreeBound::TWO_TWO));
        let order: Vec<Vertex> = (1..=m).collect();
        let w = pair_witnesses(&d, &order, true).unwrap();
        for p in &w.pairs {
            let i = p.index as u32;
            let expect_prey = (i - 1 + t + 1) % m + 1;
            let expect_pred = (i - 1 + m - t) % m + 1;
            assert_eq!(p.prey, vec![expect_prey]);
            assert_eq!(p.predators, vec![expect_pred]);
        }
    }

    #[test]
    fn witnesses_on_two_path_digraph() {
        // 5-arc digraph realizing P2 + P1; both witnesses of the pair (1,2)
        // land on the extra vertex.
        let d = synth_two_paths(2, 1).unwrap();
        let w = pair_witnesses(&d, &[1, 2], false).unwrap();
        assert_eq!(w.pairs.len(), 1);
        assert_eq!(w.pairs[0].prey, vec![3]);
        assert_eq!(w.pairs[0].predators, vec![3]);
    }

    #[test]
    fn witness_validation_rejects_bad_sequences() {
        let d5 = fixtures::triangle_witness();
        // not a traversal order (1,3,2 is fine on a triangle, but 1,2 misses 3)
        assert!(matches!(
            pair_witnesses(&d5, &[1, 2], true),
            Err(Error::NotAComponent(_))
        ));
        // wrong kind
        assert!(matches!(
            pair_witnesses(&d5, &[1, 2, 3], false),
            Err(Error::NotAComponent(_))
        ));
        // any rotation of a triangle is a valid traversal
        assert!(pair_witnesses(&d5, &[2, 3, 1], true).is_ok());
        // isolated vertex is a trivial path
        let w = pair_witnesses(&d5, &[7], false).unwrap();
        assert!(w.pairs.is_empty());
    }
}
