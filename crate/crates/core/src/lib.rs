//! Exact, allocation-only building blocks for flag-algebra Turán density
//! work on 3-uniform hypergraphs.
//!
//! The crate is `no_std` (it needs `alloc`). Everything that touches files,
//! threads or the command line lives in the companion `turan` crate.
//!
//! Module map:
//!
//! * [`hypergraph`] and [`canon`]: the [`Hypergraph3`] type, canonical
//!   labeling, containment tests, complements and blow-ups.
//! * [`family`] and [`named`]: forbidden families and the built-in graphs.
//! * [`enumerate`]: isomorph-free generation of family-free graphs and flags.
//! * [`density`]: induced densities and typed pair-density tables.
//! * [`sdp`]: assembly of the flag-algebra SDP and rounding of solver output.
//! * [`certificate`]: exact verification of bound certificates.
//! * [`constructions`]: the extremal lower-bound constructions.
//! * [`partition`]: bipartition diagnostics (bad/missing edges, max-cut).
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canon;
pub mod certificate;
pub mod combinatorics;
pub mod constructions;
pub mod density;
pub mod enumerate;
mod error;
pub mod family;
pub mod hypergraph;
pub mod linalg;
pub mod named;
pub mod numeric;
pub mod partition;
pub mod sdp;

pub use canon::CanonKey;
pub use error::{Error, Result};
pub use family::{Family, FamilyMember};
pub use hypergraph::{Edge, Hypergraph3, Vertex};
pub use named::NamedGraph;
pub use numeric::Rational;
