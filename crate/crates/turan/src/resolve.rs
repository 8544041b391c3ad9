//! Family strings such as `C4_3,induced:F32_BAR,./g.txt`: each item is a
//! built-in name or the path of a graph file.

use std::path::Path;

use turan_core::{Family, Hypergraph3, NamedGraph};

use crate::error::Result;
use crate::format::graph::read_graph;

pub fn resolve_graph(name: &str) -> Result<Hypergraph3> {
    if let Ok(g) = name.parse::<NamedGraph>() {
        return Ok(g.graph());
    }
    let path = Path::new(name);
    if path.exists() {
        return read_graph(path);
    }
    Err(turan_core::Error::UnknownGraph(name.to_string()).into())
}

pub fn resolve_family(spec: &str) -> Result<Family> {
    let mut failure = None;
    let family = Family::from_key_with(spec, |name| {
        resolve_graph(name).map_err(|e| {
            let placeholder = turan_core::Error::UnknownGraph(name.to_string());
            failure.get_or_insert(e);
            placeholder
        })
    });
    match (family, failure) {
        (_, Some(e)) => Err(e),
        (f, None) => Ok(f?),
    }
}
