//! The SDP in SDPA sparse form, for primal-form solvers such as CSDP.
//!
//! The variable is `X = blockdiag(Q_1, ..., Q_k, diag(c_1, ..., c_N, u))`.
//! Constraint `i` (one per target `F_i`) reads
//! `<P(F_i), Q> + c_i - u = -obj(F_i)` and the objective maximises `-u`.
//! Metadata needed to rebuild the model rides along in `*` comment lines:
//!
//! ```text
//! * m 4
//! * family C4_3
//! * type <key> size <flag size>
//! * target <i> <key>
//! ```
//!
//! Indices in entry lines are 1-based as usual in SDPA files.

use std::collections::BTreeSet;
use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use turan_core::linalg::SymMatrix;
use turan_core::numeric::{to_decimal, REPORT_DIGITS};
use turan_core::sdp::{SdpModel, TypeBlock};
use turan_core::{CanonKey, Hypergraph3, Rational};

use super::{parse_num, parse_ratio};
use crate::error::{Error, Result};

const WHAT: &str = "sdp file";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Values {
    /// `p/q`; parses back exactly.
    #[default]
    Rational,
    /// Decimals for solvers that cannot read fractions; non-terminating
    /// values are truncated to 50 digits, so only terminating ones survive a
    /// re-parse.
    Decimal,
}

fn fmt_value(v: &Rational, mode: Values) -> String {
    match mode {
        Values::Rational => v.to_string(),
        Values::Decimal => {
            if v.is_integer() {
                return v.to_string();
            }
            let mut d = v.denom().clone();
            let (two, five) = (BigInt::from(2), BigInt::from(5));
            let mut digits = 0;
            while (&d % &two).is_zero() || (&d % &five).is_zero() {
                if (&d % &two).is_zero() {
                    d /= &two;
                }
                if (&d % &five).is_zero() {
                    d /= &five;
                }
                digits += 1;
            }
            let digits = if d.is_one() { digits } else { REPORT_DIGITS };
            let s = to_decimal(&v.abs(), digits);
            let s = s.trim_end_matches('0').trim_end_matches('.');
            if v.is_negative() {
                format!("-{s}")
            } else {
                s.to_string()
            }
        }
    }
}

pub fn sdp_to_string(model: &SdpModel, mode: Values) -> String {
    let n = model.targets.len();
    let lp = model.blocks.len() + 1;
    let mut s = String::new();
    writeln!(s, "* flag-algebra SDP, maximise -u").unwrap();
    writeln!(s, "* m {}", model.m).unwrap();
    writeln!(s, "* family {}", model.family_key).unwrap();
    for b in &model.blocks {
        writeln!(s, "* type {} size {}", b.sigma.canon_key(), b.flag_size).unwrap();
    }
    for (i, t) in model.targets.iter().enumerate() {
        writeln!(s, "* target {} {}", i + 1, t.canon_key()).unwrap();
    }
    writeln!(s, "{n}").unwrap();
    writeln!(s, "{lp}").unwrap();
    let dims: Vec<String> = model
        .blocks
        .iter()
        .map(|b| b.dim.to_string())
        .chain([format!("-{}", n + 1)])
        .collect();
    writeln!(s, "{}", dims.join(" ")).unwrap();
    let rhs: Vec<String> = model.objective.iter().map(|o| fmt_value(&-o, mode)).collect();
    writeln!(s, "{}", rhs.join(" ")).unwrap();
    writeln!(s, "0 {lp} {0} {0} -1", n + 1).unwrap();
    for i in 0..n {
        for (bi, b) in model.blocks.iter().enumerate() {
            let p = &b.matrices[i];
            for r in 0..b.dim {
                for c in r..b.dim {
                    let v = p.get(r, c);
                    if !v.is_zero() {
                        writeln!(s, "{} {} {} {} {}", i + 1, bi + 1, r + 1, c + 1, fmt_value(v, mode)).unwrap();
                    }
                }
            }
        }
        writeln!(s, "{0} {lp} {0} {0} 1", i + 1).unwrap();
        writeln!(s, "{} {lp} {1} {1} -1", i + 1, n + 1).unwrap();
    }
    s
}

fn key_graph(line: usize, hex: &str) -> Result<Hypergraph3> {
    CanonKey::from_hex(hex)
        .and_then(|k| k.to_graph())
        .map_err(|e| Error::parse(WHAT, line, e.to_string()))
}

/// Rebuilds the model and checks every structural entry it implies.
pub fn parse_sdp(text: &str) -> Result<SdpModel> {
    let mut m = None;
    let mut family = None;
    let mut types: Vec<(Hypergraph3, usize)> = Vec::new();
    let mut targets: Vec<Hypergraph3> = Vec::new();
    let mut data: Vec<(usize, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if let Some(meta) = l.strip_prefix('*') {
            let toks: Vec<&str> = meta.split_whitespace().collect();
            match toks[..] {
                ["m", v] => m = Some(parse_num::<usize>(WHAT, line, v)?),
                ["family", k] => family = Some(k.to_string()),
                ["type", k, "size", fs] => types.push((key_graph(line, k)?, parse_num(WHAT, line, fs)?)),
                ["target", idx, k] => {
                    if parse_num::<usize>(WHAT, line, idx)? != targets.len() + 1 {
                        return Err(Error::parse(WHAT, line, "targets out of order"));
                    }
                    targets.push(key_graph(line, k)?);
                }
                _ => {}
            }
        } else if !l.is_empty() && !l.starts_with('"') {
            data.push((line, l));
        }
    }
    let m = m.ok_or_else(|| Error::parse(WHAT, 0, "missing `* m` line"))?;
    let family = family.ok_or_else(|| Error::parse(WHAT, 0, "missing `* family` line"))?;
    if let Some(t) = targets.iter().find(|t| t.n() != m) {
        return Err(Error::parse(WHAT, 0, format!("target on {} vertices in a model with m = {m}", t.n())));
    }
    let n = targets.len();
    let lp = types.len() + 1;
    let mut data = data.into_iter();
    let mut header = |what: &str| data.next().ok_or_else(|| Error::parse(WHAT, 0, format!("missing {what}")));

    let (line, l) = header("constraint count")?;
    if parse_num::<usize>(WHAT, line, l)? != n {
        return Err(Error::parse(WHAT, line, format!("{l} constraints but {n} targets")));
    }
    let (line, l) = header("block count")?;
    if parse_num::<usize>(WHAT, line, l)? != lp {
        return Err(Error::parse(WHAT, line, format!("{l} blocks but {} types", types.len())));
    }
    let (line, l) = header("block sizes")?;
    let dims: Vec<i64> = l
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::parse(WHAT, line, format!("bad block size `{t}`"))))
        .collect::<Result<_>>()?;
    if dims.len() != lp || dims[lp - 1] != -(n as i64 + 1) || dims[..lp - 1].iter().any(|&d| d <= 0) {
        return Err(Error::parse(WHAT, line, "block sizes do not match the types and targets"));
    }
    let (line, l) = header("right-hand side")?;
    let rhs: Vec<Rational> = l.split_whitespace().map(|t| parse_ratio(WHAT, line, t)).collect::<Result<_>>()?;
    if rhs.len() != n {
        return Err(Error::parse(WHAT, line, format!("{} right-hand sides for {n} constraints", rhs.len())));
    }

    let mut mats: Vec<Vec<SymMatrix>> = dims[..lp - 1]
        .iter()
        .map(|&d| vec![SymMatrix::zeros(d as usize); n])
        .collect();
    let mut seen = BTreeSet::new();
    let mut structural = BTreeSet::new();
    for (line, l) in data {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 5 {
            return Err(Error::parse(WHAT, line, format!("expected `matno block i j value`, got `{l}`")));
        }
        let c: usize = parse_num(WHAT, line, toks[0])?;
        let b: usize = parse_num(WHAT, line, toks[1])?;
        let i: usize = parse_num(WHAT, line, toks[2])?;
        let j: usize = parse_num(WHAT, line, toks[3])?;
        let v = parse_ratio(WHAT, line, toks[4])?;
        if !seen.insert((c, b, i, j)) {
            return Err(Error::parse(WHAT, line, "duplicate entry"));
        }
        let bad = || Error::parse(WHAT, line, format!("unexpected entry `{l}`"));
        if c > n || b == 0 || b > lp || i == 0 || i > j {
            return Err(bad());
        }
        if b == lp {
            let expected = match (c, i == j, i) {
                (0, true, k) if k == n + 1 => -Rational::one(),
                (c, true, k) if c > 0 && k == n + 1 => -Rational::one(),
                (c, true, k) if c > 0 && k == c => Rational::one(),
                _ => return Err(bad()),
            };
            if v != expected {
                return Err(bad());
            }
            structural.insert((c, i));
        } else {
            if c == 0 || j as i64 > dims[b - 1] {
                return Err(bad());
            }
            mats[b - 1][c - 1].set(i - 1, j - 1, v);
        }
    }
    if structural.len() != 2 * n + 1 {
        return Err(Error::parse(WHAT, 0, "diagonal block entries are incomplete"));
    }
    let blocks: Vec<TypeBlock> = types
        .into_iter()
        .zip(mats)
        .zip(&dims)
        .map(|(((sigma, flag_size), matrices), &d)| TypeBlock {
            sigma,
            flag_size,
            dim: d as usize,
            matrices,
        })
        .collect();
    let model = SdpModel::from_parts(m, family, targets, blocks);
    if let Some(i) = (0..n).find(|&i| rhs[i] != -&model.objective[i]) {
        return Err(Error::parse(WHAT, 0, format!("right-hand side {} does not match target {}", rhs[i], i + 1)));
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use turan_core::numeric::ratio;
    use turan_core::sdp::{assemble, default_types};
    use turan_core::{Family, NamedGraph};

    #[test]
    fn round_trip() {
        let fam = Family::named(&[NamedGraph::C4_3]);
        let lp = assemble(4, &fam, &[]).unwrap();
        let text = sdp_to_string(&lp, Values::Rational);
        assert!(text.contains("\n-5\n"));
        assert_eq!(parse_sdp(&text).unwrap(), lp);
        let full = assemble(4, &fam, &default_types(4, &fam)).unwrap();
        assert_eq!(parse_sdp(&sdp_to_string(&full, Values::Rational)).unwrap(), full);
    }

    #[test]
    fn decimals() {
        assert_eq!(fmt_value(&ratio(3, 4), Values::Decimal), "0.75");
        assert_eq!(fmt_value(&ratio(-1, 8), Values::Decimal), "-0.125");
        assert_eq!(fmt_value(&ratio(2, 1), Values::Decimal), "2");
        assert_eq!(fmt_value(&ratio(1, 3), Values::Decimal).len(), 52);
        let lp = assemble(4, &Family::named(&[NamedGraph::C4_3]), &[]).unwrap();
        assert_eq!(parse_sdp(&sdp_to_string(&lp, Values::Decimal)).unwrap(), lp);
    }

    #[test]
    fn tampering_is_caught() {
        let lp = assemble(4, &Family::named(&[NamedGraph::C4_3]), &[]).unwrap();
        let text = sdp_to_string(&lp, Values::Rational);
        for (from, to) in [("\n-5\n", "\n-4\n"), ("0 1 5 5 -1", "0 1 5 5 1"), ("-3/4", "-1/2")] {
            assert!(parse_sdp(&text.replacen(from, to, 1)).is_err(), "{from}");
        }
    }
}
