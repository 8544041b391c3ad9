//! Canonical labeling of small 3-graphs by colour refinement and
//! individualization, with automorphism pruning.
//!
//! The search keeps the lexicographically smallest relabeled edge list over
//! all leaves of the refinement tree. Leaves that reproduce the best (or the
//! first) encoding yield automorphisms, which prune sibling branches.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Colour, sorted link colour pairs, vertex.
type Signature = (u32, Vec<(u32, u32)>, usize);

use crate::error::{Error, Result};
use crate::hypergraph::{sorted_edge, Edge, Hypergraph3, Vertex};

/// Byte serialization of a canonically relabeled graph: `n`, then (for
/// vertex-coloured graphs) the colour of every label, then the edge list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey(Vec<u8>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            s.push(char::from_digit((b >> 4) as u32, 16).unwrap());
            s.push(char::from_digit((b & 15) as u32, 16).unwrap());
        }
        s
    }

    pub fn from_hex(hex: &str) -> Result<Self> {
        if !hex.len().is_multiple_of(2) {
            return Err(Error::BadKey(hex.into()));
        }
        let digit = |c: u8| (c as char).to_digit(16).ok_or_else(|| Error::BadKey(hex.into()));
        let bytes = hex.as_bytes();
        let mut out = Vec::with_capacity(bytes.len() / 2);
        for pair in bytes.chunks(2) {
            out.push((digit(pair[0])? << 4 | digit(pair[1])?) as u8);
        }
        Ok(CanonKey(out))
    }

    /// Rebuilds the canonical graph of an uncoloured key.
    pub fn to_graph(&self) -> Result<Hypergraph3> {
        let bad = || Error::BadKey(self.to_hex());
        let (&n, rest) = self.0.split_first().ok_or_else(bad)?;
        if rest.len() % 3 != 0 {
            return Err(bad());
        }
        let g = Hypergraph3::from_edges(
            n as usize,
            rest.chunks(3).map(|c| [c[0] as Vertex, c[1] as Vertex, c[2] as Vertex]),
        )
        .map_err(|_| bad())?;
        if g.edge_count() * 3 != rest.len() {
            return Err(bad());
        }
        Ok(g)
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// A canonical relabeling: old vertex `v` gets label `relabel[v]`.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub relabel: Vec<Vertex>,
    pub key: CanonKey,
}

/// Canonical labeling of `g`, optionally respecting a vertex colouring.
///
/// Colour classes keep their relative order, so the vertices of the smallest
/// colour receive the smallest labels. Panics for graphs on more than 255
/// vertices or colours above 255.
pub fn canonical_labeling(g: &Hypergraph3, colors: Option<&[u32]>) -> Labeling {
    let n = g.n();
    assert!(n <= 255, "canonical labeling is limited to 255 vertices");
    let initial: Vec<u32> = match colors {
        Some(c) => {
            assert_eq!(c.len(), n, "one colour per vertex");
            assert!(c.iter().all(|&x| x <= 255), "colours must fit in a byte");
            let mut distinct: Vec<u32> = c.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            c.iter().map(|x| distinct.binary_search(x).unwrap() as u32).collect()
        }
        None => vec![0; n],
    };
    let mut links: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); n];
    for e in g.edges() {
        links[e[0] as usize].push((e[1], e[2]));
        links[e[1] as usize].push((e[0], e[2]));
        links[e[2] as usize].push((e[0], e[1]));
    }
    let mut search = Search {
        g,
        links,
        first: None,
        best: None,
        auts: Vec::new(),
    };
    let mut prefix = Vec::new();
    search.run(initial, &mut prefix);
    let (encoding, relabel) = search.best.expect("search visits at least one leaf");

    let mut key = Vec::with_capacity(1 + n + 3 * encoding.len());
    key.push(n as u8);
    if let Some(c) = colors {
        let mut by_label = vec![0u8; n];
        for v in 0..n {
            by_label[relabel[v] as usize] = c[v] as u8;
        }
        key.extend_from_slice(&by_label);
    }
    for e in &encoding {
        key.extend(e.iter().map(|&v| v as u8));
    }
    Labeling {
        relabel,
        key: CanonKey(key),
    }
}

struct Search<'a> {
    g: &'a Hypergraph3,
    links: Vec<Vec<(Vertex, Vertex)>>,
    first: Option<FirstLeaf>,
    /// Smallest encoding so far and its labeling.
    best: Option<(Vec<Edge>, Vec<Vertex>)>,
    auts: Vec<Vec<Vertex>>,
}

/// Child outcome: keep exploring, or unwind to the given depth.
enum Step {
    Continue,
    Unwind(usize),
}

impl Search<'_> {
    /// Equitable refinement: split colour classes by the multiset of colour
    /// pairs completing each vertex to an edge. Returns the number of cells.
    fn refine(&self, colors: &mut [u32]) -> usize {
        let n = colors.len();
        let mut cells = {
            let mut c = colors.to_vec();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        loop {
            if cells == n {
                return cells;
            }
            let mut sigs: Vec<Signature> = (0..n)
                .map(|v| {
                    let mut s: Vec<(u32, u32)> = self.links[v]
                        .iter()
                        .map(|&(a, b)| {
                            let (x, y) = (colors[a as usize], colors[b as usize]);
                            if x <= y {
                                (x, y)
                            } else {
                                (y, x)
                            }
                        })
                        .collect();
                    s.sort_unstable();
                    (colors[v], s, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = 0u32;
            for i in 0..n {
                if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                    next += 1;
                }
                colors[sigs[i].2] = next;
            }
            let new_cells = next as usize + 1;
            if new_cells == cells {
                return cells;
            }
            cells = new_cells;
        }
    }

    fn run(&mut self, mut colors: Vec<u32>, prefix: &mut Vec<Vertex>) -> Step {
        let n = colors.len();
        if self.refine(&mut colors) == n {
            return self.leaf(colors, prefix);
        }
        // First non-singleton cell, in colour order.
        let mut count = vec![0usize; n];
        for &c in &colors {
            count[c as usize] += 1;
        }
        let target = count.iter().position(|&k| k > 1).unwrap() as u32;
        let candidates: Vec<Vertex> = (0..n as Vertex).filter(|&v| colors[v as usize] == target).collect();
        let depth = prefix.len();
        let mut explored: Vec<Vertex> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.same_orbit(v, &explored, prefix) {
                continue;
            }
            let child: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(w, &c)| if c > target || (c == target && w as Vertex != v) { c + 1 } else { c })
                .collect();
            prefix.push(v);
            let step = self.run(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Step::Unwind(d) = step {
                if d < depth {
                    return step;
                }
            }
        }
        Step::Continue
    }

    fn leaf(&mut self, labels: Vec<u32>, prefix: &[Vertex]) -> Step {
        let mut enc: Vec<Edge> = self
            .g
            .edges()
            .iter()
            .map(|e| sorted_edge(labels[e[0] as usize], labels[e[1] as usize], labels[e[2] as usize]))
            .collect();
        enc.sort_unstable();
        let Some(first) = &self.first else {
            self.first = Some(FirstLeaf {
                encoding: enc.clone(),
                path: prefix.to_vec(),
                labels: labels.clone(),
            });
            self.best = Some((enc, labels));
            return Step::Continue;
        };
        if enc == first.encoding {
            // The whole subtree below the divergence point is an image of the
            // first path's subtree.
            let aut = compose_inverse(&first.labels, &labels);
            let diverge = first
                .path
                .iter()
                .zip(prefix)
                .position(|(a, b)| a != b)
                .unwrap_or(prefix.len());
            self.push_aut(aut);
            return Step::Unwind(diverge);
        }
        let best = self.best.as_ref().unwrap();
        match enc.cmp(&best.0) {
            core::cmp::Ordering::Less => self.best = Some((enc, labels)),
            core::cmp::Ordering::Equal => {
                let aut = compose_inverse(&best.1, &labels);
                self.push_aut(aut);
            }
            core::cmp::Ordering::Greater => {}
        }
        Step::Continue
    }

    fn push_aut(&mut self, aut: Vec<Vertex>) {
        if aut.iter().enumerate().any(|(i, &v)| i as Vertex != v) {
            self.auts.push(aut);
        }
    }

    /// Whether `v` lies in the orbit of an explored sibling under the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn same_orbit(&self, v: Vertex, explored: &[Vertex], prefix: &[Vertex]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for aut in &self.auts {
            if prefix.iter().any(|&p| aut[p as usize] != p) {
                continue;
            }
            any = true;
            for (x, &y) in aut.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v as usize);
        explored.iter().any(|&w| find(&mut parent, w as usize) == root)
    }
}

struct FirstLeaf {
    encoding: Vec<Edge>,
    path: Vec<Vertex>,
    labels: Vec<u32>,
}

/// `v -> base^{-1}(other(v))`: an automorphism when both labelings give the
/// same encoding.
fn compose_inverse(base: &[u32], other: &[u32]) -> Vec<Vertex> {
    let mut inv = vec![0 as Vertex; base.len()];
    for (v, &l) in base.iter().enumerate() {
        inv[l as usize] = v as Vertex;
    }
    other.iter().map(|&l| inv[l as usize]).collect()
}

/// Automorphism-group orbits, returned as a representative per vertex.
pub fn orbit_representatives(g: &Hypergraph3) -> Vec<Vertex> {
    let n = g.n();
    let keys: Vec<CanonKey> = (0..n)
        .map(|v| {
            let mut colors = vec![0u32; n];
            colors[v] = 1;
            canonical_labeling(g, Some(&colors)).key
        })
        .collect();
    (0..n)
        .map(|v| keys.iter().position(|k| *k == keys[v]).unwrap() as Vertex)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraph;

    #[test]
    fn vertex_transitive_keys_agree() {
        let c4 = NamedGraph::C4_3.graph();
        let k = c4.canon_key().clone();
        assert_eq!(c4.relabel(&[2, 0, 3, 1]).canon_key(), &k);
        assert_ne!(NamedGraph::F5.graph().canon_key(), NamedGraph::F32.graph().canon_key());
        assert_eq!(Hypergraph3::empty(5).canon_key(), Hypergraph3::empty(5).canon_key());
        assert_ne!(Hypergraph3::empty(5).canon_key(), Hypergraph3::empty(4).canon_key());
    }

    #[test]
    fn key_round_trips_through_hex_and_graph() {
        let (g, key) = NamedGraph::F32.graph().canonical_form();
        assert_eq!(CanonKey::from_hex(&key.to_hex()).unwrap(), key);
        assert_eq!(key.to_graph().unwrap(), g);
        assert!(CanonKey::from_hex("0").is_err());
        assert!(CanonKey::from_hex("zz").is_err());
    }

    #[test]
    fn colours_distinguish_roots() {
        let f5 = NamedGraph::F5.graph();
        // vertex 2 has degree 1, vertex 0 degree 2
        let mark = |v: usize| {
            let mut c = vec![1u32; 5];
            c[v] = 0;
            canonical_labeling(&f5, Some(&c)).key
        };
        assert_ne!(mark(2), mark(0));
        assert_eq!(mark(0), mark(1));
        assert_eq!(mark(3), mark(4));
        let reps = orbit_representatives(&f5);
        assert_eq!(reps, vec![0, 0, 2, 3, 3]);
    }

    #[test]
    fn symmetric_graphs_finish_quickly() {
        for n in 0..=10 {
            let e = Hypergraph3::empty(n);
            let k = Hypergraph3::complete(n);
            assert_eq!(e.canonical_form().0, e);
            assert_eq!(k.canonical_form().0, k);
        }
    }
}
