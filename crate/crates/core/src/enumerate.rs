//! Isomorph-free generation of family-free 3-graphs and of typed flags.
//!
//! Graphs grow one vertex at a time. A child of a canonical parent is kept
//! only when its new vertex lies in the automorphism orbit of the child's
//! canonical deletion vertex (among the vertices with the largest degree and
//! co-degree profile, the one with the largest canonical label); children of
//! the same parent are then deduplicated by canonical key.
//! Ordinary members of the family are pruned at every step, induced members
//! only at the final size.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::{canonical_labeling, CanonKey};
use crate::combinatorics::for_each_injection;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::{EdgeProbe, Hypergraph3, Vertex};

/// Default ceiling for [`enumerate_free`].
pub const SIZE_GUARD: usize = 7;

/// All family-free graphs on `m` vertices up to isomorphism, in canonical
/// labeling, sorted by canonical key. Refuses `m > 7`.
pub fn enumerate_free(m: usize, family: &Family) -> Result<Vec<Hypergraph3>> {
    if m > SIZE_GUARD {
        return Err(Error::SizeGuard(m));
    }
    Ok(enumerate_free_unbounded(m, family))
}

/// [`enumerate_free`] without the size guard.
pub fn enumerate_free_unbounded(m: usize, family: &Family) -> Vec<Hypergraph3> {
    let mut level = vec![Hypergraph3::empty(0)];
    for size in 1..=m {
        level = level
            .iter()
            .flat_map(|p| augment_parent(p, family))
            .collect();
        if size < m {
            sort_by_key(&mut level);
        }
    }
    finish(level, family)
}

/// Filters induced members and sorts by canonical key.
pub fn finish(mut graphs: Vec<Hypergraph3>, family: &Family) -> Vec<Hypergraph3> {
    graphs.retain(|g| family.is_free(g));
    sort_by_key(&mut graphs);
    graphs
}

fn sort_by_key(graphs: &mut [Hypergraph3]) {
    graphs.sort_by(|a, b| a.canon_key().cmp(b.canon_key()));
}

/// Canonical children of one canonical parent: one more vertex, any link,
/// free of the ordinary members. Induced members are not checked here.
pub fn augment_parent(parent: &Hypergraph3, family: &Family) -> Vec<Hypergraph3> {
    let old = parent.n() as Vertex;
    let mut pairs = Vec::new();
    for b in 0..old {
        for a in 0..b {
            pairs.push((a, b));
        }
    }
    let probes: Vec<EdgeProbe> = family
        .members()
        .iter()
        .filter(|m| !m.induced)
        .map(|m| EdgeProbe::new(&m.graph))
        .collect();
    let mut search = Augment {
        pairs,
        new: old,
        probes,
        scratch: parent.widened(old as usize + 1),
        degrees: {
            let mut d = parent.degrees();
            d.push(0);
            d
        },
        seen: BTreeSet::new(),
        out: Vec::new(),
    };
    search.run(0);
    search.out
}

struct Augment {
    pairs: Vec<(Vertex, Vertex)>,
    new: Vertex,
    probes: Vec<EdgeProbe>,
    /// Parent plus the link chosen so far; edges are not kept sorted.
    scratch: Hypergraph3,
    degrees: Vec<usize>,
    seen: BTreeSet<CanonKey>,
    out: Vec<Hypergraph3>,
}

impl Augment {
    fn run(&mut self, at: usize) {
        let new = self.new as usize;
        // Only a vertex of maximum degree can be accepted as the new one.
        let reachable = self.degrees[new] + (self.pairs.len() - at);
        if self.degrees[..new].iter().any(|&d| d > reachable) {
            return;
        }
        if at == self.pairs.len() {
            self.leaf();
            return;
        }
        self.run(at + 1);
        let (a, b) = self.pairs[at];
        let e = [a, b, self.new];
        self.scratch.push_scratch_edge(e);
        for v in e {
            self.degrees[v as usize] += 1;
        }
        // The parent is free and ordinary containment is monotone, so a new
        // copy must use the edge just added.
        if !self.probes.iter().any(|p| p.hits(&self.scratch, e)) {
            self.run(at + 1);
        }
        self.scratch.pop_scratch_edge();
        for v in e {
            self.degrees[v as usize] -= 1;
        }
    }

    fn leaf(&mut self) {
        let g = Hypergraph3::from_edge_vec(self.new as usize + 1, self.scratch.edges().to_vec());
        if let Some(child) = accept(&g, self.new) {
            if self.seen.insert(child.canon_key().clone()) {
                self.out.push(child);
            }
        }
    }
}

/// Isomorphism-invariant vertex profile: degree, then the sorted
/// co-degrees with every other vertex.
fn profiles(g: &Hypergraph3) -> Vec<(usize, Vec<usize>)> {
    let n = g.n();
    let mut codeg = vec![0usize; n * n];
    for e in g.edges() {
        for (x, y) in [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])] {
            codeg[x as usize * n + y as usize] += 1;
            codeg[y as usize * n + x as usize] += 1;
        }
    }
    (0..n)
        .map(|v| {
            let mut row = codeg[v * n..(v + 1) * n].to_vec();
            row.sort_unstable();
            (row.iter().sum::<usize>() / 2, row)
        })
        .collect()
}

/// The canonical form of `g` if `new` is orbit-equivalent to the canonical
/// deletion vertex: among the vertices with the largest [`profiles`] entry,
/// the one with the largest canonical label. Any isomorphism-invariant
/// choice works; this one rejects most children before any labeling.
fn accept(g: &Hypergraph3, new: Vertex) -> Option<Hypergraph3> {
    let n = g.n();
    let prof = profiles(g);
    let top = prof.iter().max().unwrap();
    if prof[new as usize] != *top {
        return None;
    }
    let lab = canonical_labeling(g, None);
    let last = (0..n)
        .filter(|&v| prof[v] == *top)
        .max_by_key(|&v| lab.relabel[v])
        .unwrap() as Vertex;
    if last != new {
        let marked = |v: Vertex| {
            let mut c = vec![0u32; n];
            c[v as usize] = 1;
            canonical_labeling(g, Some(&c)).key
        };
        if marked(last) != marked(new) {
            return None;
        }
    }
    Some(g.apply_labeling(&lab))
}

/// A type: a fully labeled graph whose vertices are the roots `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagType {
    pub sigma: Hypergraph3,
}

impl FlagType {
    pub fn new(sigma: Hypergraph3) -> Self {
        FlagType { sigma }
    }

    /// The type with no roots.
    pub fn empty() -> Self {
        FlagType::new(Hypergraph3::empty(0))
    }

    pub fn size(&self) -> usize {
        self.sigma.n()
    }
}

/// A graph with roots `0..type.size()` (in root order), the remaining
/// vertices in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub graph: Hypergraph3,
    pub roots: Vec<Vertex>,
    pub key: CanonKey,
}

/// Colours marking each root individually and all other vertices alike.
pub fn root_colors(n: usize, roots: usize) -> Vec<u32> {
    (0..n).map(|v| v.min(roots) as u32).collect()
}

/// Canonical rooted form of `g` with roots at `0..roots`.
pub fn canonical_flag(g: &Hypergraph3, roots: usize) -> Flag {
    let lab = canonical_labeling(g, Some(&root_colors(g.n(), roots)));
    debug_assert!((0..roots).all(|r| lab.relabel[r] as usize == r));
    Flag {
        graph: g.relabel(&lab.relabel),
        roots: (0..roots as Vertex).collect(),
        key: lab.key,
    }
}

/// Whether the vertices `theta` (in order) induce exactly `sigma` in `g`.
pub fn induces_type(g: &Hypergraph3, theta: &[Vertex], sigma: &Hypergraph3) -> bool {
    let s = theta.len();
    for c in 2..s {
        for b in 1..c {
            for a in 0..b {
                let want = sigma.has_edge(a as Vertex, b as Vertex, c as Vertex);
                if g.has_edge(theta[a], theta[b], theta[c]) != want {
                    return false;
                }
            }
        }
    }
    true
}

/// All flags of the given type on `flag_size` vertices whose underlying
/// graph is family-free, up to root-preserving isomorphism, sorted by key.
pub fn enumerate_flags(ftype: &FlagType, flag_size: usize, family: &Family) -> Result<Vec<Flag>> {
    let s = ftype.size();
    if s > flag_size {
        return Err(Error::IncompatibleSizes {
            type_size: s,
            flag_size,
            target_size: flag_size,
        });
    }
    if !family.is_free(&ftype.sigma) {
        return Err(Error::TypeNotAdmissible);
    }
    let graphs = enumerate_free_unbounded(flag_size, family);
    let mut flags: BTreeMap<CanonKey, Flag> = BTreeMap::new();
    for g in &graphs {
        for_each_injection(flag_size, s, |theta| {
            if !induces_type(g, theta, &ftype.sigma) {
                return;
            }
            // Put the roots first, in root order.
            let mut order: Vec<Vertex> = theta.to_vec();
            order.extend((0..flag_size as Vertex).filter(|v| !theta.contains(v)));
            let flag = canonical_flag(&g.induced(&order), s);
            flags.entry(flag.key.clone()).or_insert(flag);
        });
    }
    Ok(flags.into_values().collect())
}
