//! The 3-uniform hypergraph type and the structural operations on it.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use once_cell::race::OnceBox;

use crate::canon::{self, CanonKey};
use crate::combinatorics::{binomial, for_each_subset, triple_rank};
use crate::error::{Error, Result};

pub type Vertex = u32;

/// A triple `[a, b, c]` with `a < b < c`.
pub type Edge = [Vertex; 3];

/// Sorts three vertices into an [`Edge`].
#[inline]
pub fn sorted_edge(a: Vertex, b: Vertex, c: Vertex) -> Edge {
    let mut e = [a, b, c];
    e.sort_unstable();
    e
}

/// An immutable 3-graph on the vertex set `0..n`.
///
/// Edges are kept as sorted triples in a sorted vector, next to a bitset
/// indexed by colex rank for constant-time membership tests. The canonical
/// key is computed on first use.
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<Edge>,
    present: Vec<u64>,
    canon: OnceBox<CanonKey>,
}

impl Hypergraph3 {
    /// Builds a graph from arbitrary triples; duplicates are merged.
    pub fn from_edges<I>(n: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut edges = Vec::new();
        for t in triples {
            if let Some(&v) = t.iter().find(|&&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let e = sorted_edge(t[0], t[1], t[2]);
            if e[0] == e[1] || e[1] == e[2] {
                return Err(Error::RepeatedVertex(t));
            }
            edges.push(e);
        }
        Ok(Self::from_edge_vec(n, edges))
    }

    /// Takes ownership of already sorted triples (order and duplicates are fixed up).
    pub(crate) fn from_edge_vec(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let words = (binomial(n as u64, 3) as usize).div_ceil(64);
        let mut present = vec![0u64; words];
        for e in &edges {
            let r = triple_rank(e[0], e[1], e[2]);
            present[r / 64] |= 1 << (r % 64);
        }
        Hypergraph3 {
            n,
            edges,
            present,
            canon: OnceBox::new(),
        }
    }

    /// Adds an edge not yet present, without restoring the sort order of
    /// `edges`. Only for scratch graphs that are never compared or keyed.
    pub(crate) fn push_scratch_edge(&mut self, e: Edge) {
        let r = triple_rank(e[0], e[1], e[2]);
        self.present[r / 64] |= 1 << (r % 64);
        self.edges.push(e);
    }

    /// Undoes the last [`Hypergraph3::push_scratch_edge`].
    pub(crate) fn pop_scratch_edge(&mut self) {
        let e = self.edges.pop().expect("scratch edge");
        let r = triple_rank(e[0], e[1], e[2]);
        self.present[r / 64] &= !(1 << (r % 64));
    }

    /// Same edges on `n >= self.n()` vertices.
    pub(crate) fn widened(&self, n: usize) -> Self {
        Self::from_edge_vec(n, self.edges.clone())
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edge_vec(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for_each_subset(n, 3, |s| edges.push([s[0], s[1], s[2]]));
        Self::from_edge_vec(n, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Membership test for three distinct in-range vertices in any order.
    #[inline]
    pub fn has_edge(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        let e = sorted_edge(a, b, c);
        let r = triple_rank(e[0], e[1], e[2]);
        self.present[r / 64] >> (r % 64) & 1 == 1
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    /// Minimum degree, maximum degree and their difference.
    pub fn degree_stats(&self) -> DegreeStats {
        let deg = self.degrees();
        let min = deg.iter().copied().min().unwrap_or(0);
        let max = deg.iter().copied().max().unwrap_or(0);
        DegreeStats { min, max, gap: max - min }
    }

    pub fn complement(&self) -> Self {
        let mut edges = Vec::new();
        for_each_subset(self.n, 3, |s| {
            if !self.has_edge(s[0], s[1], s[2]) {
                edges.push([s[0], s[1], s[2]]);
            }
        });
        Self::from_edge_vec(self.n, edges)
    }

    /// The subgraph induced on `vertices`, relabeled so that `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[Vertex]) -> Self {
        let k = vertices.len();
        let mut edges = Vec::new();
        for_each_subset(k, 3, |s| {
            let (a, b, c) = (s[0], s[1], s[2]);
            if self.has_edge(vertices[a as usize], vertices[b as usize], vertices[c as usize]) {
                edges.push([a, b, c]);
            }
        });
        Self::from_edge_vec(k, edges)
    }

    /// Bitmask of the induced subgraph on `vertices` (at most 8), bit `colex(i,j,k)`
    /// set when positions `i < j < k` span an edge.
    pub fn induced_mask(&self, vertices: &[Vertex]) -> u64 {
        debug_assert!(vertices.len() <= 8);
        let k = vertices.len();
        let mut mask = 0u64;
        for c in 2..k {
            for b in 1..c {
                for a in 0..b {
                    if self.has_edge(vertices[a], vertices[b], vertices[c]) {
                        mask |= 1 << triple_rank(a as u32, b as u32, c as u32);
                    }
                }
            }
        }
        mask
    }

    /// Applies `perm` (old vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let edges = self
            .edges
            .iter()
            .map(|e| sorted_edge(perm[e[0] as usize], perm[e[1] as usize], perm[e[2] as usize]))
            .collect();
        Self::from_edge_vec(self.n, edges)
    }

    /// Number of edges inside `vertices`.
    pub fn edges_within(&self, vertices: &[Vertex]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in vertices {
            inside[v as usize] = true;
        }
        self.edges
            .iter()
            .filter(|e| e.iter().all(|&v| inside[v as usize]))
            .count()
    }

    /// Canonical key: equal exactly for isomorphic graphs.
    pub fn canon_key(&self) -> &CanonKey {
        self.canon
            .get_or_init(|| alloc::boxed::Box::new(canon::canonical_labeling(self, None).key))
    }

    /// An isomorphic copy in canonical labeling, together with its key.
    pub fn canonical_form(&self) -> (Hypergraph3, CanonKey) {
        let lab = canon::canonical_labeling(self, None);
        (self.apply_labeling(&lab), lab.key)
    }

    /// Relabels by an uncolored canonical labeling of `self`, caching its key.
    pub(crate) fn apply_labeling(&self, lab: &canon::Labeling) -> Hypergraph3 {
        let g = self.relabel(&lab.relabel);
        let _ = g.canon.set(alloc::boxed::Box::new(lab.key.clone()));
        let _ = self.canon.set(alloc::boxed::Box::new(lab.key.clone()));
        g
    }

    pub fn is_isomorphic(&self, other: &Hypergraph3) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.canon_key() == other.canon_key()
    }

    /// Non-induced containment: some injection maps every edge of `f` onto an edge.
    pub fn contains_sub(&self, f: &Hypergraph3) -> bool {
        Embedder::new(f, false, &[]).exists(self, None)
    }

    /// Non-induced containment through a given vertex of `self`.
    pub fn contains_sub_using(&self, f: &Hypergraph3, v: Vertex) -> bool {
        Embedder::new(f, false, &[]).exists(self, Some(v))
    }

    /// Induced containment: some `|V(f)|`-subset spans a copy of `f`.
    pub fn contains_induced(&self, f: &Hypergraph3) -> bool {
        Embedder::new(f, true, &[]).exists(self, None)
    }

    /// Replaces vertex `v` by an independent class of `sizes[v]` vertices.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<Self> {
        if sizes.len() != self.n {
            return Err(Error::BlowUpArity {
                got: sizes.len(),
                expected: self.n,
            });
        }
        if sizes.contains(&0) {
            return Err(Error::ZeroClassSize);
        }
        let mut offset = Vec::with_capacity(self.n + 1);
        offset.push(0u32);
        for &s in sizes {
            offset.push(offset.last().unwrap() + s as u32);
        }
        let total = *offset.last().unwrap() as usize;
        let mut edges = Vec::new();
        for e in &self.edges {
            let class = |v: Vertex| offset[v as usize]..offset[v as usize + 1];
            for a in class(e[0]) {
                for b in class(e[1]) {
                    for c in class(e[2]) {
                        edges.push([a, b, c]);
                    }
                }
            }
        }
        Ok(Self::from_edge_vec(total, edges))
    }
}

/// Output of [`Hypergraph3::degree_stats`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub gap: usize,
}

impl Clone for Hypergraph3 {
    fn clone(&self) -> Self {
        let canon = OnceBox::new();
        if let Some(k) = self.canon.get() {
            let _ = canon.set(alloc::boxed::Box::new(k.clone()));
        }
        Hypergraph3 {
            n: self.n,
            edges: self.edges.clone(),
            present: self.present.clone(),
            canon,
        }
    }
}

impl PartialEq for Hypergraph3 {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph3 {}

impl PartialOrd for Hypergraph3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hypergraph3 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.edges).cmp(&(other.n, &other.edges))
    }
}

impl Hash for Hypergraph3 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Hypergraph3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph3(n={}, [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}{}", e[0], e[1], e[2])?;
        }
        f.write_str("])")
    }
}

/// Backtracking search for an injection of a small pattern into a host.
/// Backtracking embedding search for one pattern, reusable across hosts.
struct Embedder {
    k: usize,
    edges: usize,
    induced: bool,
    /// For each position in the assignment order, pattern triples completed at that position,
    /// as positions, with the edge/non-edge flag.
    checks: Vec<Vec<([usize; 2], bool)>>,
}

impl Embedder {
    /// Assigns `first` (in that order) before everything else.
    fn new(pattern: &Hypergraph3, induced: bool, first: &[Vertex]) -> Self {
        let k = pattern.n;
        // Highest-degree vertices first so that edge checks fire early.
        let deg = pattern.degrees();
        let mut rest: Vec<Vertex> = (0..k as Vertex).filter(|v| !first.contains(v)).collect();
        rest.sort_by(|&a, &b| deg[b as usize].cmp(&deg[a as usize]).then(a.cmp(&b)));
        let order: Vec<Vertex> = first.iter().copied().chain(rest).collect();
        let mut checks = vec![Vec::new(); k];
        for c in 2..k {
            for b in 1..c {
                for a in 0..b {
                    let is_edge = pattern.has_edge(order[a], order[b], order[c]);
                    if is_edge || induced {
                        checks[c].push(([a, b], is_edge));
                    }
                }
            }
        }
        Embedder {
            k,
            edges: pattern.edge_count(),
            induced,
            checks,
        }
    }

    fn possible(&self, host: &Hypergraph3) -> bool {
        self.k <= host.n && (self.induced || self.edges <= host.edge_count())
    }

    fn exists(&self, host: &Hypergraph3, through: Option<Vertex>) -> bool {
        if !self.possible(host) {
            return false;
        }
        self.with_image(|image| match through {
            None => self.extend(host, 0, image, None),
            Some(v) => (0..self.k).any(|pos| self.extend(host, 0, image, Some((pos, v)))),
        })
    }

    /// Whether an embedding sends the first `prefix.len()` pattern vertices
    /// of the assignment order to `prefix` (distinct vertices).
    fn exists_with_prefix(&self, host: &Hypergraph3, prefix: &[Vertex]) -> bool {
        if !self.possible(host) {
            return false;
        }
        self.with_image(|image| {
            for (pos, &v) in prefix.iter().enumerate() {
                image[pos] = v;
                if !self.fits(host, pos, image) {
                    return false;
                }
            }
            self.extend(host, prefix.len(), image, None)
        })
    }

    /// Runs `f` on a scratch image buffer, on the stack for small patterns.
    fn with_image<R>(&self, f: impl FnOnce(&mut [Vertex]) -> R) -> R {
        const STACK: usize = 16;
        if self.k <= STACK {
            let mut buf = [0 as Vertex; STACK];
            f(&mut buf[..self.k])
        } else {
            f(&mut vec![0 as Vertex; self.k])
        }
    }

    #[inline]
    fn fits(&self, host: &Hypergraph3, pos: usize, image: &[Vertex]) -> bool {
        let v = image[pos];
        self.checks[pos]
            .iter()
            .all(|&([a, b], is_edge)| host.has_edge(image[a], image[b], v) == is_edge)
    }

    fn extend(&self, host: &Hypergraph3, pos: usize, image: &mut [Vertex], pinned: Option<(usize, Vertex)>) -> bool {
        if pos == self.k {
            return true;
        }
        let candidates: &mut dyn Iterator<Item = Vertex> = match pinned {
            Some((p, v)) if p == pos => &mut core::iter::once(v),
            _ => &mut (0..host.n as Vertex),
        };
        for v in candidates {
            if image[..pos].contains(&v) {
                continue;
            }
            if let Some((p, pv)) = pinned {
                if p > pos && pv == v {
                    continue;
                }
            }
            image[pos] = v;
            if self.fits(host, pos, image) && self.extend(host, pos + 1, image, pinned) {
                return true;
            }
        }
        false
    }
}

/// Finds copies of a pattern that use a given host edge: one search plan per
/// ordered pattern edge, up to automorphisms of the pattern.
pub(crate) struct EdgeProbe {
    plans: Vec<Embedder>,
}

impl EdgeProbe {
    pub(crate) fn new(pattern: &Hypergraph3) -> Self {
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut seen = alloc::collections::BTreeSet::new();
        let mut plans = Vec::new();
        for e in &pattern.edges {
            for p in PERMS {
                let first = [e[p[0]], e[p[1]], e[p[2]]];
                // Ordered edges in one automorphism orbit give the same search.
                let mut colors = vec![0u32; pattern.n];
                for (i, &v) in first.iter().enumerate() {
                    colors[v as usize] = i as u32 + 1;
                }
                if seen.insert(canon::canonical_labeling(pattern, Some(&colors)).key) {
                    plans.push(Embedder::new(pattern, false, &first));
                }
            }
        }
        EdgeProbe { plans }
    }

    /// Whether `host` has a non-induced copy of the pattern containing `e`,
    /// mapped onto `e` in the given order by some plan.
    pub(crate) fn hits(&self, host: &Hypergraph3, e: Edge) -> bool {
        self.plans.iter().any(|plan| plan.exists_with_prefix(host, &e))
    }
}
