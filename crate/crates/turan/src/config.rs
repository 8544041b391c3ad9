//! Run settings from a `key = value` file, overridden by command-line flags.
//!
//! ```text
//! # turan.conf
//! family = C4_3,F5_BAR
//! m = 5
//! types = default          # or none, or e.g. k1:3,030000:4
//! denominator = 4294967296
//! restarts = 32
//! seed = 0
//! out = model.sdp
//! jobs = 4
//! ```

use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use turan_core::enumerate::enumerate_free_unbounded;
use turan_core::sdp::{default_types, TypeSpec};
use turan_core::{CanonKey, Family, Hypergraph3};

use crate::error::{Error, Result};
use crate::format::{content_lines, read_file};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    pub family: Option<String>,
    pub m: Option<usize>,
    pub types: Option<TypeSelection>,
    pub denominator: Option<BigInt>,
    pub restarts: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

const WHAT: &str = "config file";

fn value<T: FromStr>(line: usize, key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| Error::parse(WHAT, line, format!("bad value `{v}` for `{key}`")))
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Config::default();
        for (line, l) in content_lines(text) {
            let (k, v) = l
                .split_once('=')
                .ok_or_else(|| Error::parse(WHAT, line, format!("expected `key = value`, got `{l}`")))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "family" => c.family = Some(v.to_string()),
                "m" => c.m = Some(value(line, k, v)?),
                "types" => c.types = Some(v.parse().map_err(|e: Error| Error::parse(WHAT, line, e.to_string()))?),
                "denominator" => c.denominator = Some(value(line, k, v)?),
                "restarts" => c.restarts = Some(value(line, k, v)?),
                "seed" => c.seed = Some(value(line, k, v)?),
                "out" => c.out = Some(PathBuf::from(v)),
                "jobs" => c.jobs = Some(value(line, k, v)?),
                _ => return Err(Error::parse(WHAT, line, format!("unknown key `{k}`"))),
            }
        }
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&read_file(path)?)
    }

    /// Fields set in `flags` win.
    pub fn overridden_by(self, flags: Config) -> Config {
        Config {
            family: flags.family.or(self.family),
            m: flags.m.or(self.m),
            types: flags.types.or(self.types),
            denominator: flags.denominator.or(self.denominator),
            restarts: flags.restarts.or(self.restarts),
            seed: flags.seed.or(self.seed),
            out: flags.out.or(self.out),
            jobs: flags.jobs.or(self.jobs),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeItem {
    /// One type given by its canonical key (hex).
    Key(Hypergraph3),
    /// Every admissible type on this many vertices (`k<size>`).
    AllOfSize(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum TypeSelection {
    /// Every admissible type of size `m - 2, m - 4, ...` with flags on
    /// `(m + |type|) / 2` vertices.
    #[default]
    Default,
    /// No PSD blocks: the LP relaxation.
    None,
    /// Comma-separated `item:flag size` pairs.
    List(Vec<(TypeItem, usize)>),
}

impl FromStr for TypeSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "default" => return Ok(TypeSelection::Default),
            "none" | "" => return Ok(TypeSelection::None),
            _ => {}
        }
        let mut items = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let bad = || Error::Usage(format!("bad type item `{part}` (expected `<key>:<flag size>` or `k<size>:<flag size>`)"));
            let (item, size) = part.split_once(':').ok_or_else(bad)?;
            let size: usize = size.parse().map_err(|_| bad())?;
            let item = match item.strip_prefix('k') {
                Some(k) => TypeItem::AllOfSize(k.parse().map_err(|_| bad())?),
                None => TypeItem::Key(CanonKey::from_hex(item).and_then(|k| k.to_graph()).map_err(|_| bad())?),
            };
            items.push((item, size));
        }
        Ok(TypeSelection::List(items))
    }
}

impl TypeSelection {
    pub fn resolve(&self, m: usize, family: &Family) -> Vec<TypeSpec> {
        match self {
            TypeSelection::Default => default_types(m, family),
            TypeSelection::None => Vec::new(),
            TypeSelection::List(items) => items
                .iter()
                .flat_map(|(item, flag_size)| {
                    let sigmas = match item {
                        TypeItem::Key(g) => vec![g.clone()],
                        TypeItem::AllOfSize(k) => enumerate_free_unbounded(*k, family),
                    };
                    sigmas.into_iter().map(|sigma| TypeSpec {
                        sigma,
                        flag_size: *flag_size,
                    })
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use turan_core::NamedGraph;

    #[test]
    fn file_and_overrides() {
        let c = Config::parse("# x\nfamily = C4_3\nm = 5\ntypes = k1:3, 03:4\nseed=9\n").unwrap();
        assert_eq!(c.m, Some(5));
        let flags = Config {
            m: Some(4),
            ..Config::default()
        };
        let merged = c.clone().overridden_by(flags);
        assert_eq!((merged.m, merged.seed, merged.family.as_deref()), (Some(4), Some(9), Some("C4_3")));
        let fam = Family::named(&[NamedGraph::C4_3]);
        let types = merged.types.unwrap().resolve(5, &fam);
        assert_eq!(types.iter().map(|t| (t.sigma.n(), t.flag_size)).collect::<Vec<_>>(), [(1, 3), (3, 4)]);
        assert!(Config::parse("bogus = 1\n").is_err());
        assert!(Config::parse("m = x\n").is_err());
        assert!(Config::parse("m 5\n").is_err());
    }

    #[test]
    fn type_selections() {
        assert_eq!("default".parse::<TypeSelection>().unwrap(), TypeSelection::Default);
        assert_eq!("none".parse::<TypeSelection>().unwrap(), TypeSelection::None);
        assert!("k1".parse::<TypeSelection>().is_err());
        assert!("zz:3".parse::<TypeSelection>().is_err());
        let fam = Family::empty();
        assert_eq!(TypeSelection::Default.resolve(4, &fam), default_types(4, &fam));
        assert_eq!("k2:3".parse::<TypeSelection>().unwrap().resolve(4, &fam).len(), 1);
    }
}
