//! Pair-density tables.
//!
//! ```text
//! type <type key>
//! sizes <type size> <flag size> <target size>
//! family <family key>
//! flag <i> <a.b.c> ...        # edges of flag i, roots first
//! target <i> <target key>
//! <target index> <i> <j> <p/q>
//! ```
//!
//! Entry lines list the nonzero upper triangle of each matrix.

use std::fmt::Write;

use turan_core::density::PairDensityTable;
use turan_core::enumerate::{canonical_flag, Flag};
use turan_core::linalg::SymMatrix;
use turan_core::{CanonKey, Edge, Hypergraph3};

use super::{content_lines, parse_num, parse_ratio};
use crate::error::{Error, Result};

const WHAT: &str = "density table";

pub fn table_to_string(t: &PairDensityTable) -> String {
    let mut s = String::new();
    writeln!(s, "type {}", t.sigma.canon_key()).unwrap();
    writeln!(s, "sizes {} {} {}", t.sigma.n(), t.flag_size, t.target_size).unwrap();
    writeln!(s, "family {}", t.family_key).unwrap();
    for (i, f) in t.flags.iter().enumerate() {
        write!(s, "flag {i}").unwrap();
        for e in f.graph.edges() {
            write!(s, " {}.{}.{}", e[0], e[1], e[2]).unwrap();
        }
        s.push('\n');
    }
    for (i, g) in t.targets.iter().enumerate() {
        writeln!(s, "target {i} {}", g.canon_key()).unwrap();
    }
    for (f, m) in t.matrices.iter().enumerate() {
        for i in 0..m.dim() {
            for j in i..m.dim() {
                let v = m.get(i, j);
                if *v != num_traits::Zero::zero() {
                    writeln!(s, "{f} {i} {j} {v}").unwrap();
                }
            }
        }
    }
    s
}

fn parse_edge(line: usize, tok: &str) -> Result<Edge> {
    let parts: Vec<&str> = tok.split('.').collect();
    if parts.len() != 3 {
        return Err(Error::parse(WHAT, line, format!("bad edge `{tok}`")));
    }
    Ok([
        parse_num(WHAT, line, parts[0])?,
        parse_num(WHAT, line, parts[1])?,
        parse_num(WHAT, line, parts[2])?,
    ])
}

fn key_graph(line: usize, hex: &str) -> Result<Hypergraph3> {
    CanonKey::from_hex(hex)
        .and_then(|k| k.to_graph())
        .map_err(|e| Error::parse(WHAT, line, e.to_string()))
}

pub fn parse_table(text: &str) -> Result<PairDensityTable> {
    let mut sigma = None;
    let mut sizes = None;
    let mut family_key = None;
    let mut flags: Vec<Flag> = Vec::new();
    let mut targets: Vec<Hypergraph3> = Vec::new();
    let mut entries = Vec::new();
    for (line, text) in content_lines(text) {
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks[0] {
            "type" if toks.len() == 2 => sigma = Some(key_graph(line, toks[1])?),
            "sizes" if toks.len() == 4 => {
                let v = [
                    parse_num::<usize>(WHAT, line, toks[1])?,
                    parse_num(WHAT, line, toks[2])?,
                    parse_num(WHAT, line, toks[3])?,
                ];
                sizes = Some(v);
            }
            "family" if toks.len() == 2 => family_key = Some(toks[1].to_string()),
            "flag" => {
                let [s, flag_size, _] = sizes.ok_or_else(|| Error::parse(WHAT, line, "flag before sizes"))?;
                let i: usize = parse_num(WHAT, line, toks.get(1).copied().unwrap_or(""))?;
                if i != flags.len() {
                    return Err(Error::parse(WHAT, line, format!("expected flag {}, got {i}", flags.len())));
                }
                let edges = toks[2..].iter().map(|t| parse_edge(line, t)).collect::<Result<Vec<_>>>()?;
                let g = Hypergraph3::from_edges(flag_size, edges).map_err(|e| Error::parse(WHAT, line, e.to_string()))?;
                let flag = canonical_flag(&g, s);
                if flag.graph != g {
                    return Err(Error::parse(WHAT, line, "flag is not in canonical rooted form"));
                }
                flags.push(flag);
            }
            "target" if toks.len() == 3 => {
                let i: usize = parse_num(WHAT, line, toks[1])?;
                if i != targets.len() {
                    return Err(Error::parse(WHAT, line, format!("expected target {}, got {i}", targets.len())));
                }
                targets.push(key_graph(line, toks[2])?);
            }
            _ if toks.len() == 4 => {
                let f: usize = parse_num(WHAT, line, toks[0])?;
                let i: usize = parse_num(WHAT, line, toks[1])?;
                let j: usize = parse_num(WHAT, line, toks[2])?;
                entries.push((line, f, i, j, parse_ratio(WHAT, line, toks[3])?));
            }
            _ => return Err(Error::parse(WHAT, line, format!("unrecognized line `{text}`"))),
        }
    }
    let sigma = sigma.ok_or_else(|| Error::parse(WHAT, 0, "missing `type` line"))?;
    let [s, flag_size, target_size] = sizes.ok_or_else(|| Error::parse(WHAT, 0, "missing `sizes` line"))?;
    if s != sigma.n() {
        return Err(Error::parse(WHAT, 0, format!("type has {} vertices, sizes say {s}", sigma.n())));
    }
    if let Some(t) = targets.iter().find(|t| t.n() != target_size) {
        return Err(Error::parse(WHAT, 0, format!("target on {} vertices, sizes say {target_size}", t.n())));
    }
    let family_key = family_key.ok_or_else(|| Error::parse(WHAT, 0, "missing `family` line"))?;
    let dim = flags.len();
    let mut matrices = vec![SymMatrix::zeros(dim); targets.len()];
    for (line, f, i, j, v) in entries {
        if f >= targets.len() || i > j || j >= dim {
            return Err(Error::parse(WHAT, line, format!("entry ({f}, {i}, {j}) out of range")));
        }
        matrices[f].set(i, j, v);
    }
    Ok(PairDensityTable {
        sigma,
        flag_size,
        target_size,
        family_key,
        flags,
        targets,
        matrices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use turan_core::{Family, NamedGraph};

    #[test]
    fn round_trip() {
        let fam = Family::named(&[NamedGraph::C4_3, NamedGraph::F5Bar]);
        for (sigma, fs) in [(Hypergraph3::empty(1), 3), (Hypergraph3::empty(0), 2), (Hypergraph3::complete(3), 4)] {
            let t = PairDensityTable::build(&sigma, fs, 5, &fam).unwrap();
            assert_eq!(parse_table(&table_to_string(&t)).unwrap(), t);
        }
    }

    #[test]
    fn rejects_bad_entries() {
        let t = PairDensityTable::build(&Hypergraph3::empty(1), 3, 5, &Family::empty()).unwrap();
        let text = table_to_string(&t) + "0 1 0 1/2\n";
        assert!(parse_table(&text).is_err());
        let text = table_to_string(&t).replace("sizes 1 3 5", "sizes 1 3 6");
        assert!(parse_table(&text).is_err());
    }
}
