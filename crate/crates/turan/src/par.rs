//! Parallel drivers over the pure functions of `turan-core`. Every result
//! equals the sequential one, including tie-breaking.

use rayon::prelude::*;
use turan_core::certificate::{verify_against, Certificate, Verdict};
use turan_core::combinatorics::for_each_subset;
use turan_core::constructions::{fact21_grid_range, Fact21Center, Fact21Grid};
use turan_core::density::{flag_index, pair_density_matrix, PairDensityTable};
use turan_core::enumerate::{augment_parent, enumerate_flags, finish, FlagType};
use turan_core::family::SubsetTable;
use turan_core::partition::{local_search_restart, maxcut_exhaustive_range, MaxCut, EXHAUSTIVE_LIMIT};
use turan_core::sdp::{SdpModel, TypeBlock, TypeSpec};
use turan_core::{Family, Hypergraph3, Vertex};

use crate::cache::DiskCache;
use crate::error::Result;

/// Runs `f` on a pool of `jobs` threads (`None`: rayon's default).
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Family-free graphs on `m` vertices, sorted by canonical key. Parents of
/// each level are augmented independently.
pub fn enumerate(m: usize, family: &Family) -> Vec<Hypergraph3> {
    let mut level = vec![Hypergraph3::empty(0)];
    for _ in 0..m {
        level = level
            .par_iter()
            .flat_map_iter(|p| augment_parent(p, family))
            .collect();
        level.par_sort_by(|a, b| a.canon_key().cmp(b.canon_key()));
    }
    finish(level, family)
}

/// The pair-density table against `targets`, one target per task. Uses and
/// fills `disk` when given; a failed cache write only warns.
pub fn table(
    sigma: &Hypergraph3,
    flag_size: usize,
    targets: &[Hypergraph3],
    family: &Family,
    disk: Option<&DiskCache>,
) -> Result<PairDensityTable> {
    let (sigma, _) = sigma.canonical_form();
    if let Some(t) = disk.and_then(|d| d.load(&sigma, flag_size, targets, family)) {
        return Ok(t);
    }
    let flags = enumerate_flags(&FlagType::new(sigma.clone()), flag_size, family)?;
    let index = flag_index(&flags);
    let matrices = targets
        .par_iter()
        .map(|t| pair_density_matrix(&sigma, flag_size, &index, t))
        .collect::<turan_core::Result<Vec<_>>>()?;
    let table = PairDensityTable {
        target_size: targets.first().map_or(2 * flag_size - sigma.n(), |t| t.n()),
        sigma,
        flag_size,
        family_key: family.key(),
        flags,
        targets: targets.to_vec(),
        matrices,
    };
    if let Some(d) = disk {
        if let Err(e) = d.store(&table, family) {
            eprintln!("warning: could not cache a density table: {e}");
        }
    }
    Ok(table)
}

/// Same model as `turan_core::sdp::assemble`.
pub fn assemble(m: usize, family: &Family, types: &[TypeSpec], disk: Option<&DiskCache>) -> Result<SdpModel> {
    let targets = enumerate(m, family);
    if targets.is_empty() {
        return Err(turan_core::Error::NoAdmissibleGraphs(m).into());
    }
    let mut blocks = Vec::with_capacity(types.len());
    for t in types {
        let table = table(&t.sigma, t.flag_size, &targets, family, disk)?;
        blocks.push(TypeBlock {
            dim: table.flags.len(),
            sigma: table.sigma,
            flag_size: t.flag_size,
            matrices: table.matrices,
        });
    }
    Ok(SdpModel::from_parts(m, family.key(), targets, blocks))
}

/// Verifies `cert` against `family`, building the tables in parallel.
pub fn verify(cert: &Certificate, family: &Family, disk: Option<&DiskCache>) -> Result<Verdict> {
    let targets = enumerate(cert.m, family);
    let mut matrices = Vec::with_capacity(cert.blocks.len());
    for b in &cert.blocks {
        matrices.push(table(&b.sigma, b.flag_size, &targets, family, disk)?.matrices);
    }
    Ok(verify_against(cert, &targets, &matrices)?)
}

/// Lexicographically first `(member, subset)` spanning a forbidden copy.
/// Subsets are split by their smallest vertex.
pub fn scan_violation(h: &Hypergraph3, family: &Family) -> Option<(usize, Vec<Vertex>)> {
    let n = h.n();
    for (i, member) in family.members().iter().enumerate() {
        let table = SubsetTable::new(member);
        let k = table.k;
        if k == 0 {
            return Some((i, Vec::new()));
        }
        let found = (0..n).into_par_iter().find_map_first(|v| {
            let mut hit = None;
            let mut set = vec![v as Vertex; k];
            for_each_subset(n - v - 1, k - 1, |s| {
                if hit.is_none() {
                    for (slot, &x) in set[1..].iter_mut().zip(s) {
                        *slot = x + v as Vertex + 1;
                    }
                    if table.hits(h.induced_mask(&set)) {
                        hit = Some(set.clone());
                    }
                }
            });
            hit
        });
        if let Some(s) = found {
            return Some((i, s));
        }
    }
    None
}

pub fn scan_free(h: &Hypergraph3, family: &Family) -> bool {
    scan_violation(h, family).is_none()
}

/// Best of `restarts` local searches; ties keep the earliest restart.
pub fn maxcut_local_search(h: &Hypergraph3, restarts: usize, seed: u64) -> MaxCut {
    (0..restarts.max(1) as u64)
        .into_par_iter()
        .map(|r| local_search_restart(h, seed, r))
        .reduce_with(MaxCut::better)
        .expect("at least one restart")
}

/// Exact max-cut with the `2^n` masks split into chunks.
pub fn maxcut_exhaustive(h: &Hypergraph3) -> Result<MaxCut> {
    let n = h.n();
    if n > EXHAUSTIVE_LIMIT {
        return Ok(maxcut_exhaustive_range(h, 0, 0)?);
    }
    let total = 1u64 << n;
    let chunk = (total / 256).max(1);
    let best = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| maxcut_exhaustive_range(h, c * chunk, (c + 1) * chunk))
        .collect::<turan_core::Result<Vec<_>>>()?
        .into_iter()
        .reduce(MaxCut::better)
        .expect("nonempty");
    Ok(best)
}

/// Split-inequality grid audit in chunks of indices.
pub fn fact21_grid(steps: u64, center: Fact21Center) -> Result<Fact21Grid> {
    let chunk = (steps / 64).max(1);
    let parts = (0..steps / chunk + 1)
        .into_par_iter()
        .map(|c| fact21_grid_range(steps, c * chunk, (c + 1) * chunk, center))
        .collect::<turan_core::Result<Vec<_>>>()?;
    Ok(parts.into_iter().reduce(Fact21Grid::merge).expect("nonempty"))
}
