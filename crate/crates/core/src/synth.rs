//! Recognition of realizable component multisets and synthesis of witness
//! digraphs.
//!
//! A multiset of paths and cycles is the CCE graph of some digraph with
//! indegrees and outdegrees at most 2 unless it has exactly one path
//! component and that path is nontrivial. The synthesizer produces an
//! explicit witness for every recognizable multiset; witnesses are usually
//! not acyclic.

use std::collections::BTreeSet;

use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};
use crate::shape::{to_spec, ComponentSpec};
use crate::undirected::UndirectedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecognitionReason {
    AllGood,
    SingleNontrivialPath,
    NotPathsAndCycles,
    HoleForbidden,
}

impl std::fmt::Display for RecognitionReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RecognitionReason::AllGood => "AllGood",
            RecognitionReason::SingleNontrivialPath => "SingleNontrivialPath",
            RecognitionReason::NotPathsAndCycles => "NotPathsAndCycles",
            RecognitionReason::HoleForbidden => "HoleForbidden",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub answer: bool,
    pub reason: RecognitionReason,
}

impl RecognitionResult {
    fn yes() -> RecognitionResult {
        RecognitionResult {
            answer: true,
            reason: RecognitionReason::AllGood,
        }
    }

    fn no(reason: RecognitionReason) -> RecognitionResult {
        RecognitionResult { answer: false, reason }
    }
}

/// Decides whether `spec` is realizable as the CCE graph of a digraph
/// with all indegrees and outdegrees at most 2.
pub fn recognize_22(spec: &ComponentSpec) -> RecognitionResult {
    if spec.path_component_count() == 1 {
        let single_size = spec.path_sizes_desc()[0];
        if single_size >= 2 {
            return RecognitionResult::no(RecognitionReason::SingleNontrivialPath);
        }
    }
    RecognitionResult::yes()
}

/// Like [`recognize_22`] but additionally requires the result to be an
/// interval graph, which for this class means: no cycle longer than 3.
pub fn recognize_22_interval(spec: &ComponentSpec) -> RecognitionResult {
    let base = recognize_22(spec);
    if !base.answer {
        return base;
    }
    if spec.cycle_sizes().iter().any(|&len| len >= 4) {
        return RecognitionResult::no(RecognitionReason::HoleForbidden);
    }
    RecognitionResult::yes()
}

/// Graph-level recognition: classifies first, then applies [`recognize_22`].
pub fn recognize_22_graph(g: &UndirectedGraph) -> RecognitionResult {
    match to_spec(g) {
        Ok(spec) => recognize_22(&spec),
        Err(_) => RecognitionResult::no(RecognitionReason::NotPathsAndCycles),
    }
}

fn wrap(x: u32, modulus: u32) -> Vertex {
    (x - 1) % modulus + 1
}

/// The rotation digraph on `m` vertices with step `t`: every vertex `k`
/// points at `k+t` and `k+t+1` (indices wrapping past `m`).
///
/// Every vertex ends up with indegree and outdegree exactly 2, and the CCE
/// graph is the cycle 1,2,...,m: the pair (i, i+1) has common prey `i+t+1`
/// and common predator `i-t`.
pub fn build_rotation(m: u32, t: u32) -> Result<Digraph> {
    if m < 3 {
        return Err(Error::BadParameters(format!(
            "rotation digraph needs at least 3 vertices, got {}",
            m
        )));
    }
    if t < 1 || t > m - 2 {
        return Err(Error::BadParameters(format!(
            "rotation step must lie in 1..={}, got {}",
            m - 2,
            t
        )));
    }
    let mut arcs = Vec::with_capacity(2 * m as usize);
    for k in 1..=m {
        arcs.push((k, wrap(k + t, m)));
        arcs.push((k, wrap(k + t + 1, m)));
    }
    Digraph::new(m, arcs)
}

/// Witness digraph whose CCE graph is the single cycle of length `m`.
pub fn synth_cycle(m: u32) -> Result<Digraph> {
    build_rotation(m, 1)
}

/// Witness digraph whose CCE graph is `P_m + P_n` (two paths).
pub fn synth_two_paths(m: u32, n: u32) -> Result<Digraph> {
    if m == 0 || n == 0 {
        return Err(Error::BadParameters("path sizes must be positive".into()));
    }
    if m == 1 && n == 1 {
        return Ok(Digraph::edgeless(2));
    }
    // the longer path plays the first role so its size is at least 2
    let (a, b) = if m >= 2 { (m, n) } else { (n, m) };
    let rot = build_rotation(a + b, a - 1)?;
    rot.remove_arc(1, a)
}

/// Witness digraph whose CCE graph is `2 P_m + P_n`.
pub fn synth_twin_paths_plus(m: u32, n: u32) -> Result<Digraph> {
    if m == 0 || n == 0 {
        return Err(Error::BadParameters("path sizes must be positive".into()));
    }
    if m == 1 {
        return Ok(synth_two_paths(n, 1)?.disjoint_union(&Digraph::edgeless(1)));
    }
    let rot = build_rotation(2 * m + n, m - 1)?;
    rot.remove_arcs(&[(1, m), (m + 1, 2 * m)])
}

/// Witness digraph whose CCE graph is `P_l + P_m + P_n`.
pub fn synth_three_paths(l: u32, m: u32, n: u32) -> Result<Digraph> {
    if l == 0 || m == 0 || n == 0 {
        return Err(Error::BadParameters("path sizes must be positive".into()));
    }
    let mut sizes = [l, m, n];
    sizes.sort_unstable();
    let [l, m, n] = sizes;
    if l == m {
        return synth_twin_paths_plus(l, n);
    }
    if m == n {
        return synth_twin_paths_plus(m, l);
    }
    if l == 1 {
        return Ok(Digraph::edgeless(1).disjoint_union(&synth_two_paths(m, n)?));
    }
    three_paths_gadget(l, m, n)
}

/// Core construction for 1 < l < m < n: two rotation digraphs with tailored
/// arc deletions, glued by identifying m vertex pairs. Each identified
/// vertex receives indegree 2 and outdegree 2, one side contributing the
/// in-arcs and the other the out-arcs.
fn three_paths_gadget(l: u32, m: u32, n: u32) -> Result<Digraph> {
    debug_assert!(1 < l && l < m && m < n);
    let first = build_rotation(l + m, l - 1)?;
    let mut gone = Vec::new();
    for i in 1..=(m - l + 1) {
        gone.push((l + i, 2 * l - 1 + i));
    }
    for i in 1..=(m - l) {
        gone.push((l + i, 2 * l + i));
    }
    let first = first.remove_arcs(&gone)?;

    let second = build_rotation(m + n, m - l)?;
    let mut gone = Vec::new();
    for i in 1..=l {
        gone.push((n + i, n + m - l + i));
    }
    for i in 1..=(l - 1) {
        gone.push((n + i, n + m - l + 1 + i));
    }
    let second = second.remove_arcs(&gone)?;

    // identify vertex l+i of `first` with vertex m+n+1-i of `second`;
    // the remaining vertices of `second` move past the first block
    let relabel = |k: u32| if k <= n { l + m + k } else { l + (m + n + 1 - k) };
    let mut arcs: BTreeSet<(Vertex, Vertex)> = first.arcs().iter().copied().collect();
    for &(a, b) in second.arcs() {
        arcs.insert((relabel(a), relabel(b)));
    }
    let d = Digraph::new(l + m + n, arcs)?;
    for v in (l + 1)..=(l + m) {
        assert!(
            d.in_degree(v) == 2 && d.out_degree(v) == 2,
            "identified vertex {} must have indegree 2 and outdegree 2",
            v
        );
    }
    Ok(d)
}

/// A synthesized digraph together with a human-readable construction log.
#[derive(Clone, Debug)]
pub struct Witness {
    pub digraph: Digraph,
    pub recipe: Vec<String>,
}

/// Builds a witness digraph whose CCE graph realizes `spec` exactly.
///
/// Fails with [`Error::NotRealizable`] when [`recognize_22`] rejects.
pub fn synthesize(spec: &ComponentSpec) -> Result<Digraph> {
    synthesize_witness(spec).map(|w| w.digraph)
}

/// Like [`synthesize`], also reporting how each block was built.
pub fn synthesize_witness(spec: &ComponentSpec) -> Result<Witness> {
    let recognition = recognize_22(spec);
    if !recognition.answer {
        return Err(Error::NotRealizable(recognition.reason.to_string()));
    }

    let mut digraph = Digraph::edgeless(0);
    let mut recipe = Vec::new();
    let mut append = |acc: &mut Digraph, piece: Digraph, line: String| {
        recipe.push(line);
        *acc = acc.disjoint_union(&piece);
    };

    for len in spec.cycle_sizes() {
        let base = digraph.vertex_count();
        let piece = synth_cycle(len)?;
        append(
            &mut digraph,
            piece,
            format!(
                "vertices {}..{}: C{} from the step-1 rotation digraph on {} vertices",
                base + 1,
                base + len,
                len,
                len
            ),
        );
    }

    let paths = spec.path_sizes_desc();
    if paths.len() == 1 {
        // the recognizer guarantees this lone path is trivial
        let base = digraph.vertex_count();
        append(
            &mut digraph,
            Digraph::edgeless(1),
            format!("vertex {}: P1 as an isolated vertex", base + 1),
        );
    } else {
        let mut i = 0;
        while i < paths.len() {
            let base = digraph.vertex_count();
            let remaining = paths.len() - i;
            if remaining == 3 {
                let (a, b, c) = (paths[i], paths[i + 1], paths[i + 2]);
                let piece = synth_three_paths(a, b, c)?;
                let total = a + b + c;
                append(
                    &mut digraph,
                    piece,
                    format!(
                        "vertices {}..{}: P{} + P{} + P{} from two glued rotation digraphs \
                         (vertex identification construction)",
                        base + 1,
                        base + total,
                        a,
                        b,
                        c
                    ),
                );
                i += 3;
            } else {
                let (a, b) = (paths[i], paths[i + 1]);
                let piece = synth_two_paths(a, b)?;
                let line = if a == 1 && b == 1 {
                    format!("vertices {}..{}: 2xP1 as two isolated vertices", base + 1, base + 2)
                } else {
                    format!(
                        "vertices {}..{}: P{} + P{} from the step-{} rotation digraph on {} \
                         vertices minus the arc ({},{}) (labels local to this block)",
                        base + 1,
                        base + a + b,
                        a,
                        b,
                        a - 1,
                        a + b,
                        1,
                        a
                    )
                };
                append(&mut digraph, piece, line);
                i += 2;
            }
        }
    }

    Ok(Witness { digraph, recipe })
}
