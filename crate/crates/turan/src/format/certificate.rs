//! Certificates.
//!
//! ```text
//! bound 3/4
//! family C4_3
//! m 4
//! type <type key> dim 2 size 3
//! 1 -1
//! 1
//! slack 0 3/4
//! ```
//!
//! Each `type` line is followed by the upper triangle of its matrix, row by
//! row (line breaks are free). `size` is the flag size and defaults to
//! `(m + |type|) / 2`. Slack indices follow the canonical-key order of the
//! admissible targets; omitted slacks count as zero.

use std::collections::BTreeMap;
use std::fmt::Write;

use turan_core::certificate::{CertBlock, Certificate};
use turan_core::linalg::SymMatrix;
use turan_core::CanonKey;

use super::{content_lines, parse_num, parse_ratio};
use crate::error::{Error, Result};

const WHAT: &str = "certificate";

pub fn certificate_to_string(c: &Certificate) -> String {
    let mut s = String::new();
    writeln!(s, "bound {}", c.bound).unwrap();
    writeln!(s, "family {}", c.family_key).unwrap();
    writeln!(s, "m {}", c.m).unwrap();
    for b in &c.blocks {
        let d = b.matrix.dim();
        writeln!(s, "type {} dim {d} size {}", b.sigma.canon_key(), b.flag_size).unwrap();
        for i in 0..d {
            let row: Vec<String> = (i..d).map(|j| b.matrix.get(i, j).to_string()).collect();
            writeln!(s, "{}", row.join(" ")).unwrap();
        }
    }
    for (i, v) in &c.slacks {
        writeln!(s, "slack {i} {v}").unwrap();
    }
    s
}

struct Pending {
    line: usize,
    block: CertBlock,
    values: Vec<turan_core::Rational>,
}

fn close(p: Option<Pending>, blocks: &mut Vec<CertBlock>) -> Result<()> {
    if let Some(mut p) = p {
        let d = p.block.matrix.dim();
        if p.values.len() != d * (d + 1) / 2 {
            return Err(Error::parse(
                WHAT,
                p.line,
                format!("block of dimension {d} needs {} values, got {}", d * (d + 1) / 2, p.values.len()),
            ));
        }
        p.block.matrix = SymMatrix::from_upper(d, &p.values)?;
        blocks.push(p.block);
    }
    Ok(())
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut bound = None;
    let mut family_key = None;
    let mut m = None;
    let mut blocks = Vec::new();
    let mut pending: Option<Pending> = None;
    let mut slacks = BTreeMap::new();
    for (line, text) in content_lines(text) {
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks[0] {
            "bound" | "family" | "m" | "type" | "slack" => close(pending.take(), &mut blocks)?,
            _ => {
                let p = pending
                    .as_mut()
                    .ok_or_else(|| Error::parse(WHAT, line, format!("unrecognized line `{text}`")))?;
                for t in toks {
                    p.values.push(parse_ratio(WHAT, line, t)?);
                }
                continue;
            }
        }
        match toks[..] {
            ["bound", v] => bound = Some(parse_ratio(WHAT, line, v)?),
            ["family", k] => family_key = Some(k.to_string()),
            ["m", v] => m = Some(parse_num::<usize>(WHAT, line, v)?),
            ["type", key, "dim", d, ref rest @ ..] => {
                let sigma = CanonKey::from_hex(key)
                    .and_then(|k| k.to_graph())
                    .map_err(|e| Error::parse(WHAT, line, e.to_string()))?;
                let dim: usize = parse_num(WHAT, line, d)?;
                let flag_size = match rest {
                    [] => {
                        let m = m.ok_or_else(|| Error::parse(WHAT, line, "`m` must come before a type without size"))?;
                        (m + sigma.n()) / 2
                    }
                    ["size", fs] => parse_num(WHAT, line, fs)?,
                    _ => return Err(Error::parse(WHAT, line, format!("unrecognized line `{text}`"))),
                };
                pending = Some(Pending {
                    line,
                    block: CertBlock {
                        sigma,
                        flag_size,
                        matrix: SymMatrix::zeros(dim),
                    },
                    values: Vec::new(),
                });
            }
            ["slack", i, v] => {
                let i: usize = parse_num(WHAT, line, i)?;
                if slacks.insert(i, parse_ratio(WHAT, line, v)?).is_some() {
                    return Err(Error::parse(WHAT, line, format!("slack {i} given twice")));
                }
            }
            _ => return Err(Error::parse(WHAT, line, format!("unrecognized line `{text}`"))),
        }
    }
    close(pending, &mut blocks)?;
    Ok(Certificate {
        bound: bound.ok_or_else(|| Error::parse(WHAT, 0, "missing `bound` line"))?,
        family_key: family_key.ok_or_else(|| Error::parse(WHAT, 0, "missing `family` line"))?,
        m: m.ok_or_else(|| Error::parse(WHAT, 0, "missing `m` line"))?,
        blocks,
        slacks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use turan_core::numeric::int;
    use turan_core::sdp::{assemble, TypeSpec};
    use turan_core::{Family, Hypergraph3, NamedGraph};

    #[test]
    fn round_trip() {
        let fam = Family::named(&[NamedGraph::C4_3]);
        let lp = assemble(4, &fam, &[]).unwrap().lp_certificate();
        assert_eq!(parse_certificate(&certificate_to_string(&lp)).unwrap(), lp);
        let model = assemble(4, &fam, &[TypeSpec { sigma: Hypergraph3::empty(2), flag_size: 3 }]).unwrap();
        let q = SymMatrix::from_rows(&[vec![int(1), int(-1)], vec![int(-1), int(1)]]).unwrap();
        let cert = model.certificate_for(vec![q], None).unwrap();
        let text = certificate_to_string(&cert);
        assert_eq!(parse_certificate(&text).unwrap(), cert);
        // Size defaults to (m + |type|) / 2 and values may share a line.
        let loose = text.replace(" size 3\n1 -1\n1\n", "\n1 -1 1\n");
        assert_eq!(parse_certificate(&loose).unwrap(), cert);
    }

    #[test]
    fn malformed() {
        for bad in [
            "family C4_3\nm 4\n",
            "bound 3/4\nfamily C4_3\nm 4\ntype 02 dim 2 size 3\n1 0\n",
            "bound 3/4\nfamily C4_3\nm 4\nslack 0 1\nslack 0 1\n",
            "bound x\nfamily C4_3\nm 4\n",
            "bound 1\nfamily C4_3\nm 4\n1 2 3\n",
        ] {
            assert!(matches!(parse_certificate(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
    }
}
