//! Small reference digraphs used across the test suite and handy for demos.

use crate::digraph::Digraph;

/// A 9-vertex acyclic digraph, indegrees and outdegrees all at most 2,
/// whose CCE graph is a triangle on 1,2,3 plus six isolated vertices.
///
/// Vertices 1..3 form the future triangle, 4..6 are their pairwise common
/// prey, 7..9 their pairwise common predators. This is the smallest shape
/// possible: a cycle of length m in the CCE graph of an acyclic
/// degree-bounded digraph forces at least m+3 outside neighbors, and here
/// the bound is met with equality.
pub fn triangle_witness() -> Digraph {
    Digraph::new(
        9,
        vec![
            (1, 4),
            (1, 6),
            (2, 4),
            (2, 5),
            (3, 5),
            (3, 6),
            (7, 1),
            (7, 2),
            (8, 2),
            (8, 3),
            (9, 1),
            (9, 3),
        ],
    )
    .expect("fixture arcs are valid")
}

/// An 11-vertex acyclic digraph, indegrees and outdegrees all at most 2,
/// whose CCE graph is a 4-cycle on 1,2,3,4 plus seven isolated vertices —
/// eight components in total.
///
/// Its CCE graph contains a hole, so it is not interval; no such example
/// exists with seven or fewer components.
pub fn square_witness() -> Digraph {
    Digraph::new(
        11,
        vec![
            (1, 5),
            (1, 6),
            (2, 6),
            (2, 7),
            (3, 7),
            (3, 8),
            (4, 5),
            (4, 8),
            (5, 2),
            (5, 3),
            (9, 1),
            (9, 2),
            (10, 1),
            (10, 4),
            (11, 3),
            (11, 4),
        ],
    )
    .expect("fixture arcs are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::DegreeBound;

    #[test]
    fn fixtures_are_bounded_and_acyclic() {
        for d in [triangle_witness(), square_witness()] {
            assert!(d.is_bounded(DegreeBound::TWO_TWO));
            assert!(d.is_acyclic());
        }
        assert_eq!(triangle_witness().arc_count(), 12);
        assert_eq!(square_witness().arc_count(), 16);
    }
}
