//! File formats, a disk cache for density tables, parallel drivers and the
//! `turan` command line, on top of the `no_std` core in `turan-core`.
//!
//! * [`format`]: text formats for graphs, enumerations, density tables, SDPs,
//!   solver solutions and certificates.
//! * [`resolve`]: family strings naming built-ins or graph files.
//! * [`cache`]: tables on disk under `TURAN_CACHE_DIR`.
//! * [`par`]: rayon versions of the expensive loops.
//! * [`config`] and [`cli`]: settings and subcommands.

pub mod cache;
pub mod cli;
pub mod config;
mod error;
pub mod format;
pub mod par;
pub mod resolve;

pub use error::{Error, Result};
pub use turan_core as core;
