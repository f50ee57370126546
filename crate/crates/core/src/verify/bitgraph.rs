//! Fixed-size bitmask digraphs for the enumeration hot path.
//!
//! Vertices are 0-based here; conversion to [`Digraph`] restores the
//! public 1-based labels. Row `out[v]` has bit `w` set iff the arc v->w
//! is present.

use crate::digraph::Digraph;

pub(crate) const MAX_N: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct BitDigraph {
    pub n: u8,
    pub out: [u16; MAX_N],
}

impl BitDigraph {
    pub fn empty(n: usize) -> BitDigraph {
        debug_assert!(n <= MAX_N);
        BitDigraph {
            n: n as u8,
            out: [0; MAX_N],
        }
    }

    #[cfg(test)]
    pub fn from_digraph(d: &Digraph) -> Option<BitDigraph> {
        let n = d.vertex_count() as usize;
        if n > MAX_N {
            return None;
        }
        let mut bd = BitDigraph::empty(n);
        for &(u, v) in d.arcs() {
            bd.out[(u - 1) as usize] |= 1 << (v - 1);
        }
        Some(bd)
    }

    pub fn to_digraph(self) -> Digraph {
        let n = self.n as u32;
        let mut arcs = Vec::new();
        for v in 0..self.n as usize {
            let mut row = self.out[v];
            while row != 0 {
                let w = row.trailing_zeros();
                arcs.push((v as u32 + 1, w + 1));
                row &= row - 1;
            }
        }
        Digraph::new(n, arcs).expect("bitmask rows encode a valid digraph")
    }

    pub fn in_masks(&self) -> [u16; MAX_N] {
        let mut inn = [0u16; MAX_N];
        for v in 0..self.n as usize {
            let mut row = self.out[v];
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                inn[w] |= 1 << v;
                row &= row - 1;
            }
        }
        inn
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.n as usize;
        let inn = self.in_masks();
        let mut indeg = [0u8; MAX_N];
        for (slot, mask) in indeg.iter_mut().zip(inn.iter()).take(n) {
            *slot = mask.count_ones() as u8;
        }
        let mut stack = [0usize; MAX_N];
        let mut top = 0;
        for (v, &deg) in indeg.iter().enumerate().take(n) {
            if deg == 0 {
                stack[top] = v;
                top += 1;
            }
        }
        let mut seen = 0;
        while top > 0 {
            top -= 1;
            let v = stack[top];
            seen += 1;
            let mut row = self.out[v];
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack[top] = w;
                    top += 1;
                }
            }
        }
        seen == n
    }

    /// Adjacency rows of the CCE graph: u,v adjacent iff they share an
    /// out-neighbor and an in-neighbor.
    pub fn cce_adj(&self) -> [u16; MAX_N] {
        let n = self.n as usize;
        let inn = self.in_masks();
        let mut adj = [0u16; MAX_N];
        for u in 0..n {
            for v in (u + 1)..n {
                if self.out[u] & self.out[v] != 0 && inn[u] & inn[v] != 0 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
        }
        adj
    }
}

impl std::fmt::Debug for BitDigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitDigraph(n={}, rows={:?})", self.n, &self.out[..self.n as usize])
    }
}

/// Component census of an undirected adjacency-mask graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct ShapeSummary {
    pub other: bool,
    pub trivial_paths: u32,
    pub nontrivial_paths: u32,
    pub cycles: u32,
}

impl ShapeSummary {
    pub fn has_cycle(&self) -> bool {
        self.cycles > 0
    }

    /// The one configuration a bounded CCE graph can never have.
    pub fn lone_nontrivial_path(&self) -> bool {
        self.trivial_paths == 0 && self.nontrivial_paths == 1
    }
}

pub(crate) fn shape_summary(adj: &[u16; MAX_N], n: usize) -> ShapeSummary {
    debug_assert!(n <= MAX_N);
    let mut summary = ShapeSummary::default();
    let mut unvisited: u16 = (1u16 << n) - 1;
    while unvisited != 0 {
        let start = unvisited.trailing_zeros() as usize;
        let mut comp: u16 = 1 << start;
        loop {
            let mut grown = comp;
            let mut row = comp;
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                grown |= adj[v];
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        let k = comp.count_ones();
        let mut deg_sum = 0;
        let mut max_deg = 0;
        let mut row = comp;
        while row != 0 {
            let v = row.trailing_zeros() as usize;
            row &= row - 1;
            let d = adj[v].count_ones();
            deg_sum += d;
            max_deg = max_deg.max(d);
        }
        if max_deg > 2 {
            summary.other = true;
        } else if deg_sum / 2 == k {
            summary.cycles += 1;
        } else if k == 1 {
            summary.trivial_paths += 1;
        } else {
            summary.nontrivial_paths += 1;
        }
        unvisited &= !comp;
    }
    summary
}

/// All permutations of `0..n` in lexicographic order; usable for n <= 8.
pub(crate) struct PermTable {
    pub n: usize,
    perms: Vec<[u8; 8]>,
}

impl PermTable {
    pub fn build(n: usize) -> PermTable {
        assert!(n <= 8, "canonical forms are limited to 8 vertices");
        let mut perms = Vec::new();
        let mut current = [0u8; 8];
        let mut used = [false; 8];
        fn rec(n: usize, depth: usize, current: &mut [u8; 8], used: &mut [bool; 8], out: &mut Vec<[u8; 8]>) {
            if depth == n {
                out.push(*current);
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    current[depth] = v as u8;
                    rec(n, depth + 1, current, used, out);
                    used[v] = false;
                }
            }
        }
        rec(n, 0, &mut current, &mut used, &mut perms);
        PermTable { n, perms }
    }

    pub fn perms(&self) -> &[[u8; 8]] {
        &self.perms
    }
}

fn remap_row(row: u16, perm: &[u8; 8]) -> u16 {
    let mut out = 0u16;
    let mut bits = row;
    while bits != 0 {
        let w = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= 1 << perm[w];
    }
    out
}

fn invert(perm: &[u8; 8], n: usize) -> [u8; 8] {
    let mut inv = [0u8; 8];
    for old in 0..n {
        inv[perm[old] as usize] = old as u8;
    }
    inv
}

/// The encoding compared here is the row tuple `(out[0], ..., out[n-1])`
/// ordered lexicographically; the canonical form of a digraph is the
/// relabeling with the smallest encoding.
pub(crate) fn is_canonical(bd: &BitDigraph, table: &PermTable) -> bool {
    let n = table.n;
    debug_assert_eq!(n, bd.n as usize);
    'perm: for perm in table.perms() {
        let inv = invert(perm, n);
        for (r, &source) in inv.iter().enumerate().take(n) {
            let row = remap_row(bd.out[source as usize], perm);
            let base = bd.out[r];
            if row < base {
                return false;
            }
            if row > base {
                continue 'perm;
            }
        }
    }
    true
}

pub(crate) fn canonical_form(bd: &BitDigraph, table: &PermTable) -> BitDigraph {
    let n = table.n;
    debug_assert_eq!(n, bd.n as usize);
    let mut best = *bd;
    'perm: for perm in table.perms() {
        let inv = invert(perm, n);
        let mut candidate = [0u16; MAX_N];
        let mut smaller = false;
        for r in 0..n {
            let row = remap_row(bd.out[inv[r] as usize], perm);
            candidate[r] = row;
            if !smaller {
                if row > best.out[r] {
                    continue 'perm;
                }
                if row < best.out[r] {
                    smaller = true;
                }
            }
        }
        if smaller {
            best.out = candidate;
        }
    }
    best
}

/// Stable 64-bit mix of the rows; used to assign digraphs to shards.
/// Must not depend on process-local state, so no std hasher.
pub(crate) fn shard_key(bd: &BitDigraph) -> u64 {
    fn splitmix64(mut x: u64) -> u64 {
        x = x.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = x;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }
    let mut h = bd.n as u64;
    for v in 0..bd.n as usize {
        h = splitmix64(h ^ ((bd.out[v] as u64) << 16 | v as u64));
    }
    splitmix64(h)
}

/// Packs rows into one u64; valid for n <= 8.
pub(crate) fn encoding_u64(bd: &BitDigraph) -> u64 {
    debug_assert!(bd.n <= 8);
    let mut code = 0u64;
    for v in 0..bd.n as usize {
        code = (code << 8) | (bd.out[v] as u64 & 0xFF);
    }
    code
}

/// Legal out-neighbor masks for vertex `v`, smallest-lexicographic order
/// on the target lists: {}, {a}, {a,b}, ... with a < b.
pub(crate) fn choice_masks(n: usize, v: usize, max_out: u32, upper_triangular: bool) -> Vec<u16> {
    let targets: Vec<usize> = (0..n)
        .filter(|&w| w != v && (!upper_triangular || w > v))
        .collect();
    // prefix recursion emits list-lex order directly
    fn rec(targets: &[usize], from: usize, mask: u16, left: u32, out: &mut Vec<u16>) {
        out.push(mask);
        if left == 0 {
            return;
        }
        for i in from..targets.len() {
            rec(targets, i + 1, mask | (1 << targets[i]), left - 1, out);
        }
    }
    let mut out = Vec::new();
    rec(&targets, 0, 0, max_out.min(targets.len() as u32), &mut out);
    out
}
