//! Competition-common-enemy (CCE) graphs of degree-bounded digraphs.
//!
//! The CCE graph of a digraph `D` has the same vertices as `D` and joins
//! `u` and `v` whenever they share both a prey (common out-neighbor) and a
//! predator (common in-neighbor). When every vertex of `D` has indegree
//! and outdegree at most 2, the CCE graph falls apart into paths and
//! cycles, and exactly the multisets without a lone nontrivial path
//! component are realizable. This crate computes CCE and competition
//! graphs, classifies and canonicalizes their component structure, decides
//! realizability, synthesizes explicit witness digraphs, and machine-checks
//! the underlying structure theorems by exhaustive enumeration and seeded
//! random sampling at small scale.
//!
//! Entry points:
//! - [`digraph::Digraph`] and [`undirected::UndirectedGraph`] with their
//!   plain text formats;
//! - [`cce::cce`], [`cce::competition`], [`cce::pair_witnesses`];
//! - [`shape::to_spec`] / [`shape::ComponentSpec`] (grammar: `C3 + 6xP1`);
//! - [`synth::recognize_22`] and [`synth::synthesize`];
//! - [`verify`] for enumeration sweeps, property checkers, and reports.

pub mod cce;
pub mod digraph;
pub mod error;
pub mod fixtures;
pub mod shape;
pub mod synth;
pub mod undirected;
pub mod verify;

pub use crate::cce::{cce, competition, pair_witnesses, PairWitness};
pub use crate::digraph::{DegreeBound, Digraph, Vertex};
pub use crate::error::{Error, Result};
pub use crate::shape::{
    classify_components, has_hole_bounded_degree, is_interval_bounded_degree, spec_equal, to_spec,
    ComponentKind, ComponentSpec,
};
pub use crate::synth::{
    build_rotation, recognize_22, recognize_22_interval, synthesize, RecognitionResult,
};
pub use crate::undirected::UndirectedGraph;
pub use crate::verify::{
    check_acyclic_props, check_structure_props, enumerate, is_minimal, random_22,
    verify_small_acyclic_no_cycle, verify_theorem_1_3, EnumerationConfig, VerificationReport,
};
