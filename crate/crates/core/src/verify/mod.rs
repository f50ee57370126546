//! Exhaustive and randomized verification: enumerate small degree-bounded
//! digraphs, run every structural property as an executable predicate, and
//! reproduce the tightness examples.

mod bitgraph;

use std::collections::{BTreeSet, HashSet};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cce::{cce, common_predators, common_prey, in_neighbors_of_set, out_neighbors_of_set};
use crate::digraph::{DegreeBound, Digraph, Vertex};
use crate::error::{Error, Result};
use crate::shape::{classify_components, ClassifiedComponent, ComponentShape, ComponentSpec};
use crate::synth::{recognize_22, synthesize};
use crate::undirected::UndirectedGraph;

use bitgraph::{
    canonical_form, choice_masks, encoding_u64, is_canonical, shape_summary, shard_key, BitDigraph,
    PermTable, MAX_N,
};

/// Work partition: this run handles every digraph whose stable key lands
/// on `index` modulo `total`. Keys depend only on the digraph, so shards
/// are reproducible, pairwise disjoint, and their union is the full stream
/// regardless of worker count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: u64,
    pub total: u64,
}

impl Default for Shard {
    fn default() -> Shard {
        Shard { index: 0, total: 1 }
    }
}

impl Shard {
    pub fn new(index: u64, total: u64) -> Shard {
        Shard { index, total }
    }

    fn admits(&self, bd: &BitDigraph) -> bool {
        shard_key(bd) % self.total == self.index
    }
}

/// Parameters for [`enumerate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub n: u32,
    pub acyclic: bool,
    /// Yield one representative per isomorphism class (the minimum
    /// adjacency-encoding relabeling). Honored for n <= 7; above that the
    /// stream silently stays labeled, which affects counts but never
    /// correctness of isomorphism-invariant checks.
    pub isomorph_reduction: bool,
    pub bound: DegreeBound,
    pub shard: Shard,
}

impl EnumerationConfig {
    pub fn new(n: u32) -> EnumerationConfig {
        EnumerationConfig {
            n,
            acyclic: false,
            isomorph_reduction: false,
            bound: DegreeBound::TWO_TWO,
            shard: Shard::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n as usize > MAX_N {
            return Err(Error::BadParameters(format!(
                "enumeration supports at most {} vertices, got {}",
                MAX_N, self.n
            )));
        }
        if self.shard.total == 0 || self.shard.index >= self.shard.total {
            return Err(Error::BadParameters(format!(
                "shard index {} out of range for total {}",
                self.shard.index, self.shard.total
            )));
        }
        Ok(())
    }
}

fn mask_fits(indeg: &[u8; MAX_N], mask: u16, max_in: u32) -> bool {
    let mut bits = mask;
    while bits != 0 {
        let w = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if indeg[w] as u32 >= max_in {
            return false;
        }
    }
    true
}

fn bump(indeg: &mut [u8; MAX_N], mask: u16, up: bool) {
    let mut bits = mask;
    while bits != 0 {
        let w = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if up {
            indeg[w] += 1;
        } else {
            indeg[w] -= 1;
        }
    }
}

/// Iterator over every digraph admitted by an [`EnumerationConfig`], in a
/// reproducible order: vertices take their out-neighborhoods in
/// lexicographic order, earlier vertices varying slowest.
pub struct DigraphStream {
    n: usize,
    lists: Vec<Vec<u16>>,
    max_in: u32,
    acyclic_filter: bool,
    canonical_filter: Option<PermTable>,
    dedup: Option<(PermTable, HashSet<u64>)>,
    shard: Shard,
    stack: Vec<usize>,
    indeg: [u8; MAX_N],
    bd: BitDigraph,
    started: bool,
    exhausted: bool,
}

impl DigraphStream {
    fn new(cfg: &EnumerationConfig) -> Result<DigraphStream> {
        cfg.validate()?;
        let n = cfg.n as usize;
        let reduction = cfg.isomorph_reduction && n <= 7;
        let upper = cfg.acyclic && reduction;
        let lists = (0..n)
            .map(|v| choice_masks(n, v, cfg.bound.max_out, upper))
            .collect();
        Ok(DigraphStream {
            n,
            lists,
            max_in: cfg.bound.max_in,
            acyclic_filter: cfg.acyclic && !reduction,
            canonical_filter: (!cfg.acyclic && reduction).then(|| PermTable::build(n)),
            dedup: (cfg.acyclic && reduction).then(|| (PermTable::build(n), HashSet::new())),
            shard: cfg.shard,
            stack: Vec::with_capacity(n),
            indeg: [0; MAX_N],
            bd: BitDigraph::empty(n),
            started: false,
            exhausted: false,
        })
    }

    fn unapply(&mut self, level: usize) {
        bump(&mut self.indeg, self.bd.out[level], false);
        self.bd.out[level] = 0;
    }

    /// Fills levels `level..n` starting from choice index `start` at
    /// `level`, backtracking as needed. True on reaching a full assignment.
    fn try_fill(&mut self, mut level: usize, mut start: usize) -> bool {
        loop {
            let mut placed = None;
            for idx in start..self.lists[level].len() {
                let mask = self.lists[level][idx];
                if mask_fits(&self.indeg, mask, self.max_in) {
                    bump(&mut self.indeg, mask, true);
                    self.bd.out[level] = mask;
                    placed = Some(idx);
                    break;
                }
            }
            match placed {
                Some(idx) => {
                    self.stack.push(idx);
                    level += 1;
                    start = 0;
                    if level == self.n {
                        return true;
                    }
                }
                None => match self.stack.pop() {
                    Some(prev) => {
                        level -= 1;
                        self.unapply(level);
                        start = prev + 1;
                    }
                    None => return false,
                },
            }
        }
    }

    /// Moves to the next raw assignment; true if one is available.
    fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        if !self.started {
            self.started = true;
            if self.n == 0 || self.try_fill(0, 0) {
                return true;
            }
            self.exhausted = true;
            return false;
        }
        if self.n == 0 {
            self.exhausted = true;
            return false;
        }
        let level = self.n - 1;
        let last = self.stack.pop().expect("at a leaf the stack is full");
        self.unapply(level);
        if self.try_fill(level, last + 1) {
            true
        } else {
            self.exhausted = true;
            false
        }
    }
}

impl Iterator for DigraphStream {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        while self.advance() {
            if self.acyclic_filter && !self.bd.is_acyclic() {
                continue;
            }
            let chosen = if let Some(table) = &self.canonical_filter {
                if !is_canonical(&self.bd, table) {
                    continue;
                }
                self.bd
            } else if let Some((table, seen)) = &mut self.dedup {
                let canon = canonical_form(&self.bd, table);
                if !seen.insert(encoding_u64(&canon)) {
                    continue;
                }
                canon
            } else {
                self.bd
            };
            if !self.shard.admits(&chosen) {
                continue;
            }
            return Some(chosen.to_digraph());
        }
        None
    }
}

/// Streams every labeled digraph on `cfg.n` vertices within `cfg.bound`
/// (restricted to acyclic ones when requested), each exactly once; with
/// isomorph reduction, only canonical representatives.
pub fn enumerate(cfg: &EnumerationConfig) -> Result<DigraphStream> {
    DigraphStream::new(cfg)
}

#[derive(Clone, Copy)]
enum SweepMode {
    /// Every labeled digraph; optionally only the acyclic ones.
    Labeled { acyclic: bool },
    /// One canonical representative per isomorphism class (n <= 7).
    CanonicalReps,
    /// Acyclic classes via arcs that respect the vertex order; no
    /// deduplication, so classes may repeat. Sound for invariant checks.
    UpperTriangular,
}

/// Parallel interior of the exhaustive sweeps. Calls `leaf` on every
/// admitted digraph; a returned string is recorded as a violation.
fn run_bounded_sweep<F>(
    n: usize,
    bound: DegreeBound,
    mode: SweepMode,
    shard: Shard,
    leaf: F,
) -> (u64, Vec<Violation>)
where
    F: Fn(&BitDigraph) -> Option<String> + Sync,
{
    let upper = matches!(mode, SweepMode::UpperTriangular);
    let lists: Vec<Vec<u16>> = (0..n)
        .map(|v| choice_masks(n, v, bound.max_out, upper))
        .collect();
    let table = matches!(mode, SweepMode::CanonicalReps).then(|| PermTable::build(n));

    // seed one task per feasible two-level prefix so rayon has work to split
    let depth = n.min(2);
    let mut tasks: Vec<(BitDigraph, [u8; MAX_N])> = Vec::new();
    {
        let mut bd = BitDigraph::empty(n);
        let mut indeg = [0u8; MAX_N];
        collect_prefixes(&lists, bound.max_in, &mut bd, &mut indeg, 0, depth, &mut tasks);
    }

    let outcomes: Vec<(u64, Vec<Violation>)> = tasks
        .into_par_iter()
        .map(|(mut bd, mut indeg)| {
            let mut count = 0u64;
            let mut violations = Vec::new();
            visit_assignments(&lists, bound.max_in, &mut bd, &mut indeg, depth, &mut |bd| {
                match mode {
                    SweepMode::Labeled { acyclic } if acyclic && !bd.is_acyclic() => return,
                    SweepMode::CanonicalReps
                        if !is_canonical(bd, table.as_ref().expect("table built")) =>
                    {
                        return
                    }
                    _ => {}
                }
                if !shard.admits(bd) {
                    return;
                }
                count += 1;
                if let Some(detail) = leaf(bd) {
                    violations.push(Violation {
                        digraph: bd.to_digraph(),
                        detail,
                    });
                }
            });
            (count, violations)
        })
        .collect();

    let mut total = 0u64;
    let mut violations = Vec::new();
    for (count, mut v) in outcomes {
        total += count;
        violations.append(&mut v);
    }
    violations.sort_by(|a, b| {
        (a.digraph.arcs(), &a.detail).cmp(&(b.digraph.arcs(), &b.detail))
    });
    (total, violations)
}

fn collect_prefixes(
    lists: &[Vec<u16>],
    max_in: u32,
    bd: &mut BitDigraph,
    indeg: &mut [u8; MAX_N],
    level: usize,
    depth: usize,
    tasks: &mut Vec<(BitDigraph, [u8; MAX_N])>,
) {
    if level == depth {
        tasks.push((*bd, *indeg));
        return;
    }
    for &mask in &lists[level] {
        if mask_fits(indeg, mask, max_in) {
            bump(indeg, mask, true);
            bd.out[level] = mask;
            collect_prefixes(lists, max_in, bd, indeg, level + 1, depth, tasks);
            bd.out[level] = 0;
            bump(indeg, mask, false);
        }
    }
}

fn visit_assignments<F: FnMut(&BitDigraph)>(
    lists: &[Vec<u16>],
    max_in: u32,
    bd: &mut BitDigraph,
    indeg: &mut [u8; MAX_N],
    level: usize,
    f: &mut F,
) {
    if level == lists.len() {
        f(bd);
        return;
    }
    for &mask in &lists[level] {
        if mask_fits(indeg, mask, max_in) {
            bump(indeg, mask, true);
            bd.out[level] = mask;
            visit_assignments(lists, max_in, bd, indeg, level + 1, f);
            bd.out[level] = 0;
            bump(indeg, mask, false);
        }
    }
}

/// One failed check: the offending digraph plus the instantiated
/// hypothesis and observed outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub digraph: Digraph,
    pub detail: String,
}

/// Structured outcome of a property or enumeration run.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub property: String,
    pub instances_checked: u64,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(property: impl Into<String>) -> VerificationReport {
        VerificationReport {
            property: property.into(),
            instances_checked: 0,
            violations: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Merges two partial reports over the same property. Counts and work
    /// time add; violations are re-sorted, so merging commutes.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        debug_assert_eq!(self.property, other.property);
        self.instances_checked += other.instances_checked;
        self.violations.extend(other.violations);
        self.violations.sort_by(|a, b| {
            (a.digraph.arcs(), &a.detail).cmp(&(b.digraph.arcs(), &b.detail))
        });
        self.elapsed += other.elapsed;
        self
    }

    /// One-line record: `property=<p> checked=<n> violations=<v> elapsed_ms=<t>`.
    pub fn record_line(&self) -> String {
        format!(
            "property={} checked={} violations={} elapsed_ms={}",
            self.property,
            self.instances_checked,
            self.violations.len(),
            self.elapsed.as_millis()
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "property": self.property,
            "checked": self.instances_checked,
            "violations": self.violations.iter().map(|v| serde_json::json!({
                "detail": v.detail,
                "digraph": v.digraph.to_text(),
            })).collect::<Vec<_>>(),
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }

    /// Writes each violating digraph to `<dir>/<property>-<idx>.dg` with
    /// the detail as a comment line; returns the written paths.
    pub fn write_violations(&self, dir: &Path) -> std::io::Result<Vec<PathBuf>> {
        let mut written = Vec::new();
        if self.violations.is_empty() {
            return Ok(written);
        }
        std::fs::create_dir_all(dir)?;
        for (idx, violation) in self.violations.iter().enumerate() {
            let path = dir.join(format!("{}-{:04}.dg", self.property, idx));
            let text = violation.digraph.to_text();
            let mut lines = text.splitn(2, '\n');
            let header = lines.next().unwrap_or_default();
            let rest = lines.next().unwrap_or_default();
            let content = format!("{}\n# violation: {}\n{}", header, violation.detail, rest);
            std::fs::write(&path, content)?;
            written.push(path);
        }
        Ok(written)
    }
}

fn ensure_two_two(d: &Digraph) -> Result<()> {
    if !d.is_bounded(DegreeBound::TWO_TWO) {
        return Err(Error::NotBounded(2, 2));
    }
    Ok(())
}

fn ensure_two_two_acyclic(d: &Digraph) -> Result<()> {
    if !d.is_bounded(DegreeBound::TWO_TWO) {
        return Err(Error::NotBoundedAcyclic(
            "a degree exceeds the bound of 2".into(),
        ));
    }
    if !d.is_acyclic() {
        return Err(Error::NotBoundedAcyclic("the digraph has a cycle".into()));
    }
    Ok(())
}

/// True iff no single-arc deletion leaves the CCE graph unchanged.
///
/// This is equivalent to having no proper spanning subdigraph with the
/// same CCE graph: removing arcs never adds CCE edges, so equality at the
/// ends of a deletion chain forces equality at the first single deletion.
/// Requires a bounded acyclic digraph.
pub fn is_minimal(d: &Digraph) -> Result<bool> {
    ensure_two_two_acyclic(d)?;
    let base = cce(d);
    for &(u, v) in d.arcs() {
        let smaller = d.remove_arc(u, v).expect("arc comes from the arc list");
        if cce(&smaller) == base {
            return Ok(false);
        }
    }
    Ok(true)
}

struct PropContext {
    graph: UndirectedGraph,
    components: Vec<ClassifiedComponent>,
}

impl PropContext {
    fn build(d: &Digraph) -> PropContext {
        let graph = cce(d);
        let components = classify_components(&graph);
        PropContext { graph, components }
    }
}

/// Checks the structural consequences of the degree bound on `d` and its
/// CCE graph; every hypothesis that holds must see its conclusion hold.
///
/// Covered: components are paths and cycles; a CCE-degree-2 vertex has
/// full degrees and unique witnesses with each neighbor; two nonadjacent
/// prey have CCE degree at most 1; along a path or cycle, consecutive-pair
/// witnesses are pairwise distinct and only witness-adjacent; prey
/// propagation along aligned paths; self-propagation when a path feeds its
/// own tail.
pub fn check_structure_props(d: &Digraph) -> Result<VerificationReport> {
    ensure_two_two(d)?;
    let start = Instant::now();
    let mut rep = VerificationReport::new("structure-props");
    let ctx = PropContext::build(d);
    let g = &ctx.graph;

    for comp in &ctx.components {
        rep.instances_checked += 1;
        if comp.shape == ComponentShape::Other {
            rep.violations.push(Violation {
                digraph: d.clone(),
                detail: format!(
                    "component {:?} of the CCE graph is neither a path nor a cycle",
                    comp.vertices
                ),
            });
        }
    }

    for u in g.vertices() {
        if g.degree(u) != 2 {
            continue;
        }
        rep.instances_checked += 1;
        if d.out_degree(u) != 2 || d.in_degree(u) != 2 {
            rep.violations.push(Violation {
                digraph: d.clone(),
                detail: format!(
                    "vertex {} has CCE degree 2 but digraph degrees (in {}, out {})",
                    u,
                    d.in_degree(u),
                    d.out_degree(u)
                ),
            });
        }
        for &v in g.neighbors(u) {
            rep.instances_checked += 1;
            let prey = common_prey(d, u, v);
            let preds = common_predators(d, u, v);
            if prey.len() != 1 || preds.len() != 1 {
                rep.violations.push(Violation {
                    digraph: d.clone(),
                    detail: format!(
                        "degree-2 vertex {} and neighbor {} have prey {:?} and predators {:?}, expected one of each",
                        u, v, prey, preds
                    ),
                });
            }
        }
    }

    for w in d.vertices() {
        let prey = d.out_neighbors(w);
        if prey.len() == 2 && !g.has_edge(prey[0], prey[1]) {
            rep.instances_checked += 1;
            if g.degree(prey[0]) > 1 || g.degree(prey[1]) > 1 {
                rep.violations.push(Violation {
                    digraph: d.clone(),
                    detail: format!(
                        "prey {} and {} of vertex {} are nonadjacent but have CCE degrees {} and {}",
                        prey[0],
                        prey[1],
                        w,
                        g.degree(prey[0]),
                        g.degree(prey[1])
                    ),
                });
            }
        }
    }

    for comp in &ctx.components {
        match comp.shape {
            ComponentShape::Cycle => check_witness_sequence(d, g, &comp.vertices, true, &mut rep),
            ComponentShape::Path if comp.vertices.len() >= 3 => {
                check_witness_sequence(d, g, &comp.vertices, false, &mut rep)
            }
            _ => {}
        }
    }

    let paths: Vec<&ClassifiedComponent> = ctx
        .components
        .iter()
        .filter(|c| c.shape == ComponentShape::Path)
        .collect();
    for a in &paths {
        if a.vertices.len() < 3 {
            continue;
        }
        let mut a_rev = a.vertices.clone();
        a_rev.reverse();
        for b in &paths {
            if std::ptr::eq(*a, *b) || b.vertices.len() < 2 {
                continue;
            }
            let mut b_rev = b.vertices.clone();
            b_rev.reverse();
            for a_seq in [&a.vertices, &a_rev] {
                for b_seq in [&b.vertices, &b_rev] {
                    check_aligned_paths(d, a_seq, b_seq, &mut rep);
                }
            }
        }
        for seq in [&a.vertices, &a_rev] {
            check_self_propagation(d, seq, &mut rep);
        }
    }

    rep.elapsed = start.elapsed();
    Ok(rep)
}

/// Distinctness and adjacency-locality of the per-pair witnesses along one
/// path (vertex count >= 3) or cycle component.
fn check_witness_sequence(
    d: &Digraph,
    g: &UndirectedGraph,
    order: &[Vertex],
    cyclic: bool,
    rep: &mut VerificationReport,
) {
    let m = order.len();
    let pair_count = if cyclic { m } else { m - 1 };
    let mut prey_of = Vec::with_capacity(pair_count);
    let mut pred_of = Vec::with_capacity(pair_count);
    for i in 0..pair_count {
        let u = order[i];
        let v = order[(i + 1) % m];
        let prey = common_prey(d, u, v);
        let preds = common_predators(d, u, v);
        // non-unique witnesses are already flagged by the degree-2 check
        prey_of.push((prey.len() == 1).then(|| prey[0]));
        pred_of.push((preds.len() == 1).then(|| preds[0]));
    }

    rep.instances_checked += 1;
    for (name, seq) in [("prey", &prey_of), ("predator", &pred_of)] {
        let known: Vec<Vertex> = seq.iter().flatten().copied().collect();
        let distinct: BTreeSet<Vertex> = known.iter().copied().collect();
        if distinct.len() != known.len() {
            rep.violations.push(Violation {
                digraph: d.clone(),
                detail: format!(
                    "{} witnesses repeat along component {:?}: {:?}",
                    name, order, known
                ),
            });
        }
    }

    let locality_range: Vec<usize> = if cyclic {
        (0..pair_count).collect()
    } else if m >= 4 {
        (1..=m - 3).collect()
    } else {
        Vec::new()
    };
    for i in locality_range {
        for (name, seq) in [("prey", &prey_of), ("predator", &pred_of)] {
            let Some(x) = seq[i] else { continue };
            rep.instances_checked += 1;
            let before = seq[(i + pair_count - 1) % pair_count];
            let after = seq[(i + 1) % pair_count];
            let allowed: Vec<Vertex> = [before, after].into_iter().flatten().collect();
            for &nb in g.neighbors(x) {
                if !allowed.contains(&nb) {
                    rep.violations.push(Violation {
                        digraph: d.clone(),
                        detail: format!(
                            "{} witness {} of pair {} on component {:?} is adjacent to {}, allowed only {:?}",
                            name, x, i + 1, order, nb, allowed
                        ),
                    });
                }
            }
        }
    }
}

/// If the first two vertices of path `a` both feed position t of path `b`
/// (and a[1] also feeds t+1), the common prey of consecutive `a`-pairs
/// must walk along `b`.
fn check_aligned_paths(d: &Digraph, a: &[Vertex], b: &[Vertex], rep: &mut VerificationReport) {
    let ell = a.len();
    let m = b.len();
    for t in 1..=m - 1 {
        if !(d.has_arc(a[0], b[t - 1]) && d.has_arc(a[1], b[t - 1]) && d.has_arc(a[1], b[t])) {
            continue;
        }
        rep.instances_checked += 1;
        let upper = (ell - 1).min(m - t + 1);
        for i in 1..=upper {
            let prey = common_prey(d, a[i - 1], a[i]);
            let expected = b[t + i - 2];
            if prey != vec![expected] {
                rep.violations.push(Violation {
                    digraph: d.clone(),
                    detail: format!(
                        "aligned paths {:?} -> {:?} at t={}: pair {} has prey {:?}, expected [{}]",
                        a, b, t, i, prey, expected
                    ),
                });
                break;
            }
        }
    }
}

/// If the common prey of the first pair of a path lands on that same path
/// at position t >= 3, all later witnesses are forced.
fn check_self_propagation(d: &Digraph, order: &[Vertex], rep: &mut VerificationReport) {
    let m = order.len();
    let first = common_prey(d, order[0], order[1]);
    if first.len() != 1 {
        return;
    }
    let Some(tpos) = order.iter().position(|&v| v == first[0]) else {
        return;
    };
    let t = tpos + 1;
    if t < 3 {
        return;
    }
    rep.instances_checked += 1;
    for i in 1..=(m - t + 1) {
        let prey = common_prey(d, order[i - 1], order[i]);
        let expected_prey = order[t + i - 2];
        if prey != vec![expected_prey] {
            rep.violations.push(Violation {
                digraph: d.clone(),
                detail: format!(
                    "self-feeding path {:?} (t={}): pair {} has prey {:?}, expected [{}]",
                    order, t, i, prey, expected_prey
                ),
            });
            break;
        }
        let preds = common_predators(d, order[t + i - 3], order[t + i - 2]);
        let expected_pred = order[i - 1];
        if preds != vec![expected_pred] {
            rep.violations.push(Violation {
                digraph: d.clone(),
                detail: format!(
                    "self-feeding path {:?} (t={}): pair at {} has predators {:?}, expected [{}]",
                    order,
                    t,
                    t + i - 2,
                    preds,
                    expected_pred
                ),
            });
            break;
        }
    }
}

/// Checks the properties special to bounded acyclic digraphs: sinks and
/// sources are isolated in the CCE graph; a CCE cycle has no internal
/// arcs, at least m+3 outside neighbors, and at most m-3 two-sided ones;
/// and, on minimal digraphs, the local degree structure around vertices of
/// small in/outdegree plus uniqueness of common prey and predators.
pub fn check_acyclic_props(d: &Digraph) -> Result<VerificationReport> {
    ensure_two_two_acyclic(d)?;
    let start = Instant::now();
    let mut rep = VerificationReport::new("acyclic-props");
    let ctx = PropContext::build(d);
    let g = &ctx.graph;

    for v in d.vertices() {
        if d.out_degree(v) == 0 || d.in_degree(v) == 0 {
            rep.instances_checked += 1;
            if g.degree(v) != 0 {
                rep.violations.push(Violation {
                    digraph: d.clone(),
                    detail: format!("sink/source {} is not isolated in the CCE graph", v),
                });
            }
        }
    }

    for comp in &ctx.components {
        if comp.shape != ComponentShape::Cycle {
            continue;
        }
        let m = comp.vertices.len();
        rep.instances_checked += 1;
        'arcs: for &u in &comp.vertices {
            for &v in &comp.vertices {
                if u != v && d.has_arc(u, v) {
                    rep.violations.push(Violation {
                        digraph: d.clone(),
                        detail: format!(
                            "arc ({},{}) joins two vertices of the CCE cycle {:?}",
                            u, v, comp.vertices
                        ),
                    });
                    break 'arcs;
                }
            }
        }

        rep.instances_checked += 1;
        let set: BTreeSet<Vertex> = comp.vertices.iter().copied().collect();
        let plus = out_neighbors_of_set(d, &set).expect("component vertices are in range");
        let minus = in_neighbors_of_set(d, &set).expect("component vertices are in range");
        let union_len = plus.union(&minus).count();
        let inter_len = plus.intersection(&minus).count();
        if union_len < m + 3 || inter_len + 3 > m {
            rep.violations.push(Violation {
                digraph: d.clone(),
                detail: format!(
                    "CCE cycle {:?}: |N+ u N-| = {} (needs >= {}), |N+ n N-| = {} (needs <= {})",
                    comp.vertices,
                    union_len,
                    m + 3,
                    inter_len,
                    m as i64 - 3
                ),
            });
        }
    }

    if is_minimal(d)? {
        check_minimal_props(d, g, &mut rep);
    }

    rep.elapsed = start.elapsed();
    Ok(rep)
}

fn check_minimal_props(d: &Digraph, g: &UndirectedGraph, rep: &mut VerificationReport) {
    for v in d.vertices() {
        let preds = d.in_neighbors(v);
        if preds.len() == 1 {
            rep.instances_checked += 1;
            let w = preds[0];
            let other = d.out_neighbors(w).iter().copied().find(|&x| x != v);
            let ok = g.degree(v) == 1
                && d.out_degree(w) == 2
                && other.is_some_and(|x| g.has_edge(x, v));
            if !ok {
                rep.violations.push(Violation {
                    digraph: d.clone(),
                    detail: format!(
                        "minimal digraph: vertex {} has one predator {} but the forced local structure is missing",
                        v, w
                    ),
                });
            }
        }
        let prey = d.out_neighbors(v);
        if prey.len() == 1 {
            rep.instances_checked += 1;
            let w = prey[0];
            let other = d.in_neighbors(w).iter().copied().find(|&x| x != v);
            let ok = g.degree(v) == 1
                && d.in_degree(w) == 2
                && other.is_some_and(|x| g.has_edge(x, v));
            if !ok {
                rep.violations.push(Violation {
                    digraph: d.clone(),
                    detail: format!(
                        "minimal digraph: vertex {} has one prey {} but the forced local structure is missing",
                        v, w
                    ),
                });
            }
        }
        if preds.len() == 2 {
            rep.instances_checked += 1;
            if !(g.degree(v) == 2 || g.has_edge(preds[0], preds[1])) {
                rep.violations.push(Violation {
                    digraph: d.clone(),
                    detail: format!(
                        "minimal digraph: predators {:?} of {} are nonadjacent yet its CCE degree is {}",
                        preds,
                        v,
                        g.degree(v)
                    ),
                });
            }
        }
        if prey.len() == 2 {
            rep.instances_checked += 1;
            if !(g.degree(v) == 2 || g.has_edge(prey[0], prey[1])) {
                rep.violations.push(Violation {
                    digraph: d.clone(),
                    detail: format!(
                        "minimal digraph: prey {:?} of {} are nonadjacent yet its CCE degree is {}",
                        prey,
                        v,
                        g.degree(v)
                    ),
                });
            }
        }
    }
    for u in d.vertices() {
        for v in (u + 1)..=d.vertex_count() {
            rep.instances_checked += 1;
            let prey = common_prey(d, u, v);
            let preds = common_predators(d, u, v);
            if prey.len() > 1 || preds.len() > 1 {
                rep.violations.push(Violation {
                    digraph: d.clone(),
                    detail: format!(
                        "minimal digraph: {} and {} share prey {:?} and predators {:?}, at most one of each allowed",
                        u, v, prey, preds
                    ),
                });
            }
        }
    }
}

/// Exhaustively confirms, for every bounded digraph on up to `n_max`
/// vertices (one representative per isomorphism class), that the CCE graph
/// splits into paths and cycles and never has exactly one nontrivial path
/// component; then confirms the converse by synthesizing a witness for
/// every accepted component multiset with at most `n_max` vertices.
pub fn verify_theorem_1_3(n_max: u32) -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport::new("theorem13");
    for n in 1..=n_max {
        let mode = if n <= 7 {
            SweepMode::CanonicalReps
        } else {
            SweepMode::Labeled { acyclic: false }
        };
        let (count, violations) = run_bounded_sweep(
            n as usize,
            DegreeBound::TWO_TWO,
            mode,
            Shard::default(),
            |bd| {
                let summary = shape_summary(&bd.cce_adj(), bd.n as usize);
                if summary.other {
                    Some("CCE graph has a component that is neither a path nor a cycle".into())
                } else if summary.lone_nontrivial_path() {
                    Some("CCE graph has exactly one path component and it is nontrivial".into())
                } else {
                    None
                }
            },
        );
        rep.instances_checked += count;
        rep.violations.extend(violations);
    }

    for spec in ComponentSpec::enumerate_up_to(n_max) {
        if !recognize_22(&spec).answer {
            continue;
        }
        rep.instances_checked += 1;
        match synthesize(&spec) {
            Ok(witness) => {
                let realized = witness.is_bounded(DegreeBound::TWO_TWO)
                    && crate::shape::spec_equal(&cce(&witness), &spec);
                if !realized {
                    rep.violations.push(Violation {
                        digraph: witness,
                        detail: format!("synthesized witness does not realize {}", spec),
                    });
                }
            }
            Err(e) => rep.violations.push(Violation {
                digraph: Digraph::edgeless(0),
                detail: format!("synthesis of accepted spec {} failed: {}", spec, e),
            }),
        }
    }

    rep.elapsed = start.elapsed();
    rep
}

/// Confirms that no bounded acyclic digraph on up to `n_max <= 8` vertices
/// has a cycle in its CCE graph. The sweep runs over order-respecting
/// representatives, which cover every isomorphism class.
pub fn verify_small_acyclic_no_cycle(n_max: u32) -> Result<VerificationReport> {
    if n_max > 8 {
        return Err(Error::BadParameters(format!(
            "the no-cycle sweep is limited to 8 vertices, got {}",
            n_max
        )));
    }
    let start = Instant::now();
    let mut rep = VerificationReport::new("no-cycle");
    for n in 1..=n_max {
        let (count, violations) = run_bounded_sweep(
            n as usize,
            DegreeBound::TWO_TWO,
            SweepMode::UpperTriangular,
            Shard::default(),
            |bd| {
                let summary = shape_summary(&bd.cce_adj(), bd.n as usize);
                summary
                    .has_cycle()
                    .then(|| "acyclic digraph has a cycle in its CCE graph".to_string())
            },
        );
        rep.instances_checked += count;
        rep.violations.extend(violations);
    }
    rep.elapsed = start.elapsed();
    Ok(rep)
}

/// A pseudo-random digraph within the standard bound, deterministic in
/// `(n, acyclic, seed)`. Acyclic instances place all arcs along a random
/// vertex order.
pub fn random_22(n: u32, acyclic: bool, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<(Vertex, Vertex)> = Vec::new();
    if acyclic {
        let mut order: Vec<Vertex> = (1..=n).collect();
        order.shuffle(&mut rng);
        let mut position = vec![0usize; n as usize + 1];
        for (i, &v) in order.iter().enumerate() {
            position[v as usize] = i;
        }
        for u in 1..=n {
            for v in 1..=n {
                if u != v && position[u as usize] < position[v as usize] {
                    candidates.push((u, v));
                }
            }
        }
    } else {
        for u in 1..=n {
            for v in 1..=n {
                if u != v {
                    candidates.push((u, v));
                }
            }
        }
    }
    candidates.shuffle(&mut rng);
    let target = rng.random_range(0..=(2 * n as usize));
    let mut out_deg = vec![0u32; n as usize + 1];
    let mut in_deg = vec![0u32; n as usize + 1];
    let mut arcs = Vec::new();
    for (u, v) in candidates {
        if arcs.len() >= target {
            break;
        }
        if out_deg[u as usize] < 2 && in_deg[v as usize] < 2 {
            out_deg[u as usize] += 1;
            in_deg[v as usize] += 1;
            arcs.push((u, v));
        }
    }
    Digraph::new(n, arcs).expect("generator respects simplicity")
}

/// Runs [`check_structure_props`] (and, in acyclic mode,
/// [`check_acyclic_props`]) on every enumerated digraph.
pub fn run_props_sweep(cfg: &EnumerationConfig) -> Result<Vec<VerificationReport>> {
    let mut structure = VerificationReport::new("structure-props");
    let mut acyclic = VerificationReport::new("acyclic-props");
    let start = Instant::now();
    for d in enumerate(cfg)? {
        structure = structure.merge(check_structure_props(&d)?);
        if cfg.acyclic {
            acyclic = acyclic.merge(check_acyclic_props(&d)?);
        }
    }
    let elapsed = start.elapsed();
    let mut reports = vec![structure];
    if cfg.acyclic {
        reports.push(acyclic);
    }
    for r in reports.iter_mut() {
        r.elapsed = elapsed;
    }
    Ok(reports)
}

/// Seeded random property run: `count` digraphs at the given size, seeds
/// `seed..seed+count`, each through the applicable checkers.
pub fn run_random_props_sweep(
    n: u32,
    count: u64,
    acyclic: bool,
    seed: u64,
) -> Vec<VerificationReport> {
    let mut structure = VerificationReport::new("structure-props");
    let mut acyclic_rep = VerificationReport::new("acyclic-props");
    let start = Instant::now();
    for k in 0..count {
        let d = random_22(n, acyclic, seed + k);
        structure = structure.merge(
            check_structure_props(&d).expect("random digraphs respect the bound"),
        );
        if acyclic {
            acyclic_rep = acyclic_rep.merge(
                check_acyclic_props(&d).expect("random acyclic digraphs qualify"),
            );
        }
    }
    let elapsed = start.elapsed();
    let mut reports = vec![structure];
    if acyclic {
        reports.push(acyclic_rep);
    }
    for r in reports.iter_mut() {
        r.elapsed = elapsed;
    }
    reports
}
