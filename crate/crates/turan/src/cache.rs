//! On-disk cache of pair-density tables, enabled by `TURAN_CACHE_DIR`.
//!
//! File names hash the type key, both sizes, the family key and the
//! canonical key of every member, so editing a family graph file cannot
//! serve a stale table. Unreadable or mismatched entries are rebuilt.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use turan_core::density::PairDensityTable;
use turan_core::{Family, Hypergraph3};

use crate::error::{Error, Result};
use crate::format::table::{parse_table, table_to_string};

pub const CACHE_ENV: &str = "TURAN_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache { dir: dir.into() }
    }

    /// The cache named by the environment, if any.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()).map(DiskCache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, sigma: &Hypergraph3, flag_size: usize, target_size: usize, family: &Family) -> PathBuf {
        let mut h = Sha256::new();
        h.update(format!("{}|{flag_size}|{target_size}|{}", sigma.canon_key(), family.key()));
        for m in family.members() {
            h.update(format!("|{}{}", if m.induced { "i" } else { "" }, m.graph.canon_key()));
        }
        let digest = h.finalize();
        let name: String = digest[..16].iter().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("table-{name}.txt"))
    }

    /// A cached table matching the request, or `None`.
    pub fn load(&self, sigma: &Hypergraph3, flag_size: usize, targets: &[Hypergraph3], family: &Family) -> Option<PairDensityTable> {
        let m = targets.first().map_or(2 * flag_size - sigma.n(), |t| t.n());
        let text = fs::read_to_string(self.path_for(sigma, flag_size, m, family)).ok()?;
        let t = parse_table(&text).ok()?;
        let fits = t.sigma.canon_key() == sigma.canon_key()
            && t.flag_size == flag_size
            && t.family_key == family.key()
            && t.targets == targets;
        fits.then_some(t)
    }

    /// Writes through a temporary file so readers never see half a table.
    pub fn store(&self, table: &PairDensityTable, family: &Family) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir).map_err(|e| Error::io(&self.dir, e))?;
        let path = self.path_for(&table.sigma, table.flag_size, table.target_size, family);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, table_to_string(table)).map_err(|e| Error::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use turan_core::enumerate::enumerate_free;
    use turan_core::NamedGraph;

    #[test]
    fn store_then_load() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path().join("sub"));
        let fam = Family::named(&[NamedGraph::C4_3]);
        let sigma = Hypergraph3::empty(1);
        let targets = enumerate_free(5, &fam).unwrap();
        assert!(cache.load(&sigma, 3, &targets, &fam).is_none());
        let t = PairDensityTable::build(&sigma, 3, 5, &fam).unwrap();
        let path = cache.store(&t, &fam).unwrap();
        assert_eq!(cache.load(&sigma, 3, &targets, &fam), Some(t));
        // A different family never shares the file; a corrupt file is ignored.
        let other = Family::named(&[NamedGraph::C4_3, NamedGraph::F5Bar]);
        assert_ne!(cache.path_for(&sigma, 3, 5, &other), path);
        fs::write(&path, "garbage").unwrap();
        assert!(cache.load(&sigma, 3, &targets, &fam).is_none());
    }
}
