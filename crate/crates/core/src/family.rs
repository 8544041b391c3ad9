//! Forbidden families, mixing ordinary and induced members.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::{for_each_subset, triple_rank};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, Vertex};
use crate::named::NamedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    /// Name used in family keys (a built-in name or a caller-chosen label).
    pub name: String,
    pub graph: Hypergraph3,
    /// Forbidden as an induced subgraph rather than as a subgraph.
    pub induced: bool,
}

/// A list of forbidden 3-graphs. `H` is free of the family when no ordinary
/// member is a subgraph of `H` and no induced member is an induced subgraph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Family {
    members: Vec<FamilyMember>,
}

pub const EMPTY_FAMILY_KEY: &str = "none";

impl Family {
    pub fn empty() -> Self {
        Family::default()
    }

    /// Family of built-in graphs, all forbidden as ordinary subgraphs.
    pub fn named(graphs: &[NamedGraph]) -> Self {
        let mut f = Family::empty();
        for &g in graphs {
            f.push(g.name(), g.graph(), false);
        }
        f
    }

    /// Parses a key such as `F32,induced:F32_BAR` made of built-in names.
    pub fn from_key(key: &str) -> Result<Self> {
        Self::from_key_with(key, |name| Ok(name.parse::<NamedGraph>()?.graph()))
    }

    /// Parses a key, resolving each member name with `resolve`.
    pub fn from_key_with(
        key: &str,
        mut resolve: impl FnMut(&str) -> Result<Hypergraph3>,
    ) -> Result<Self> {
        let mut f = Family::empty();
        let key = key.trim();
        if key.is_empty() || key == EMPTY_FAMILY_KEY {
            return Ok(f);
        }
        for item in key.split(',') {
            let item = item.trim();
            let (name, induced) = match item.strip_prefix("induced:") {
                Some(rest) => (rest.trim(), true),
                None => (item, false),
            };
            if name.is_empty() {
                return Err(Error::UnknownGraph(item.into()));
            }
            let g = resolve(name)?;
            f.push(name, g, induced);
        }
        Ok(f)
    }

    pub fn push(&mut self, name: &str, graph: Hypergraph3, induced: bool) {
        self.members.push(FamilyMember {
            name: name.to_string(),
            graph,
            induced,
        });
    }

    pub fn members(&self) -> &[FamilyMember] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn key(&self) -> String {
        if self.members.is_empty() {
            return EMPTY_FAMILY_KEY.to_string();
        }
        let mut s = String::new();
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            if m.induced {
                s.push_str("induced:");
            }
            s.push_str(&m.name);
        }
        s
    }

    /// Whether `h` avoids every member under its own containment notion.
    pub fn is_free(&self, h: &Hypergraph3) -> bool {
        self.members.iter().all(|m| {
            if m.induced {
                !h.contains_induced(&m.graph)
            } else {
                !h.contains_sub(&m.graph)
            }
        })
    }

    /// Freeness with respect to the ordinary (hereditary) members only.
    pub fn is_free_of_ordinary(&self, h: &Hypergraph3) -> bool {
        self.members
            .iter()
            .filter(|m| !m.induced)
            .all(|m| !h.contains_sub(&m.graph))
    }

    /// The same check as [`Family::is_free`] by a different route: every
    /// `k`-subset of `h` is looked up in a precomputed table of labeled
    /// `k`-vertex graphs. Members must have at most 6 vertices.
    pub fn scan_free(&self, h: &Hypergraph3) -> bool {
        self.scan_violation(h).is_none()
    }

    /// First `(member index, vertex subset)` that spans a forbidden copy.
    pub fn scan_violation(&self, h: &Hypergraph3) -> Option<(usize, Vec<Vertex>)> {
        for (i, m) in self.members.iter().enumerate() {
            let table = SubsetTable::new(m);
            let mut found = None;
            for_each_subset(h.n(), table.k, |s| {
                if found.is_none() && table.hits(h.induced_mask(s)) {
                    found = Some(s.to_vec());
                }
            });
            if let Some(s) = found {
                return Some((i, s));
            }
        }
        None
    }
}

/// For one member on `k` vertices: which labeled `k`-vertex graphs (as
/// colex bitmasks) contain it.
#[derive(Debug, Clone)]
pub struct SubsetTable {
    pub k: usize,
    hits: Vec<bool>,
}

impl SubsetTable {
    pub fn new(member: &FamilyMember) -> Self {
        let k = member.graph.n();
        assert!(k <= 6, "subset tables support members on at most 6 vertices");
        let mut triples = Vec::new();
        for_each_subset(k, 3, |s| triples.push([s[0], s[1], s[2]]));
        let bits = triples.len();
        let mut hits = vec![false; 1 << bits];
        for (mask, hit) in hits.iter_mut().enumerate() {
            let edges = triples
                .iter()
                .filter(|t| mask >> triple_rank(t[0], t[1], t[2]) & 1 == 1)
                .copied();
            let g = Hypergraph3::from_edges(k, edges).expect("valid triples");
            *hit = if member.induced {
                g.is_isomorphic(&member.graph)
            } else {
                g.contains_sub(&member.graph)
            };
        }
        SubsetTable { k, hits }
    }

    #[inline]
    pub fn hits(&self, mask: u64) -> bool {
        self.hits[mask as usize]
    }
}
