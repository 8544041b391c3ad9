//! Built-in forbidden graphs, 0-based.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::hypergraph::Hypergraph3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(non_camel_case_types)]
pub enum NamedGraph {
    /// Tight 4-cycle; every triple on 4 vertices, so the same graph as `K4_3`.
    C4_3,
    K4_3,
    /// `{123, 145, 245}` on five vertices.
    F5,
    F5Bar,
    /// `{123, 145, 245, 345}` on five vertices.
    F32,
    F32Bar,
    /// Tight 5-cycle.
    C5_3,
    /// Tight 5-cycle minus one edge.
    C5_3Minus,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 8] = [
        NamedGraph::C4_3,
        NamedGraph::K4_3,
        NamedGraph::F5,
        NamedGraph::F5Bar,
        NamedGraph::F32,
        NamedGraph::F32Bar,
        NamedGraph::C5_3,
        NamedGraph::C5_3Minus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::C4_3 => "C4_3",
            NamedGraph::K4_3 => "K4_3",
            NamedGraph::F5 => "F5",
            NamedGraph::F5Bar => "F5_BAR",
            NamedGraph::F32 => "F32",
            NamedGraph::F32Bar => "F32_BAR",
            NamedGraph::C5_3 => "C5_3",
            NamedGraph::C5_3Minus => "C5_3_MINUS",
        }
    }

    pub fn graph(self) -> Hypergraph3 {
        let build = |n: usize, edges: &[[u32; 3]]| {
            Hypergraph3::from_edges(n, edges.iter().copied()).expect("built-in graph is valid")
        };
        match self {
            NamedGraph::C4_3 | NamedGraph::K4_3 => Hypergraph3::complete(4),
            NamedGraph::F5 => build(5, &[[0, 1, 2], [0, 3, 4], [1, 3, 4]]),
            NamedGraph::F5Bar => NamedGraph::F5.graph().complement(),
            NamedGraph::F32 => build(5, &[[0, 1, 2], [0, 3, 4], [1, 3, 4], [2, 3, 4]]),
            NamedGraph::F32Bar => NamedGraph::F32.graph().complement(),
            NamedGraph::C5_3 => build(5, &Self::cycle5()),
            NamedGraph::C5_3Minus => build(5, &Self::cycle5()[..4]),
        }
    }

    fn cycle5() -> Vec<[u32; 3]> {
        (0..5u32).map(|i| [i, (i + 1) % 5, (i + 2) % 5]).collect()
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownGraph(s.into()))
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definitions() {
        assert_eq!(NamedGraph::C4_3.graph(), NamedGraph::K4_3.graph());
        assert_eq!(NamedGraph::F5.graph().edge_count(), 3);
        assert_eq!(NamedGraph::F5Bar.graph().edge_count(), 7);
        assert_eq!(NamedGraph::F32.graph().edge_count(), 4);
        assert_eq!(NamedGraph::F32Bar.graph().edge_count(), 6);
        assert_eq!(NamedGraph::C5_3.graph().edge_count(), 5);
        assert_eq!(NamedGraph::C5_3Minus.graph().edge_count(), 4);
        assert!(NamedGraph::C5_3.graph().contains_sub(&NamedGraph::C5_3Minus.graph()));
        for g in NamedGraph::ALL {
            assert_eq!(g.name().parse::<NamedGraph>().unwrap().graph(), g.graph());
        }
        assert!("nope".parse::<NamedGraph>().is_err());
    }
}
