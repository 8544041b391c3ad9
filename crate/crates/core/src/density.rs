//! Induced densities `p(F, H)` and typed pair-density tables.
//!
//! All values are exact rationals.
//!
//! ## Pair-density convention
//!
//! For a type `sigma` on `s` roots, flags `F_i`, `F_j` on `m'` vertices and a
//! target `F` on `m` vertices, the table entry is the probability that a
//! uniformly random injective map `theta: [s] -> V(F)` together with a
//! uniformly random ordered pair of *disjoint* `(m'-s)`-sets `U1, U2` outside
//! the image of `theta` gives `(F[theta + U1], theta) = F_i` and
//! `(F[theta + U2], theta) = F_j` (the event that `theta` does not induce
//! `sigma` counts as failure). With this normalization the identity
//!
//! ```text
//! sum_F P(F)_ij * p(F, H) = E_theta [ P(U1 gives F_i, U2 gives F_j) in H ]
//! ```
//!
//! holds exactly for every `H` on at least `m` vertices, where the right side
//! draws `theta`, `U1`, `U2` in `H` in the same way. Averaging a quadratic form
//! in the flag densities of `(H, theta)` is therefore a nonnegative combination
//! of target densities up to the `O(1/n)` disjointness correction.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::canon::{canonical_labeling, CanonKey};
use crate::combinatorics::{binomial, for_each_injection, for_each_subset};
use crate::enumerate::{enumerate_flags, enumerate_free_unbounded, induces_type, root_colors, Flag, FlagType};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::{Hypergraph3, Vertex};
use crate::linalg::SymMatrix;
use crate::numeric::Rational;

/// Number of `|V(f)|`-subsets of `V(h)` that induce a copy of `f`.
pub fn induced_count(f: &Hypergraph3, h: &Hypergraph3) -> u128 {
    let k = f.n();
    if k > h.n() {
        return 0;
    }
    let key = f.canon_key();
    let edges = f.edge_count();
    let mut count = 0u128;
    for_each_subset(h.n(), k, |s| {
        let sub = h.induced(s);
        if sub.edge_count() == edges && sub.canon_key() == key {
            count += 1;
        }
    });
    count
}

/// Induced density `p(f, h)`; zero when `f` is larger than `h`.
pub fn p(f: &Hypergraph3, h: &Hypergraph3) -> Rational {
    if f.n() > h.n() {
        return Rational::zero();
    }
    Rational::new(
        BigInt::from(induced_count(f, h)),
        BigInt::from(binomial(h.n() as u64, f.n() as u64)),
    )
}

/// `|H| / C(n, 3)`.
pub fn edge_density(h: &Hypergraph3) -> Result<Rational> {
    if h.n() < 3 {
        return Err(Error::TooFewVertices(h.n()));
    }
    Ok(Rational::new(
        BigInt::from(h.edge_count()),
        BigInt::from(binomial(h.n() as u64, 3)),
    ))
}

/// Flag lookup by rooted canonical key.
pub fn flag_index(flags: &[Flag]) -> BTreeMap<CanonKey, usize> {
    flags.iter().enumerate().map(|(i, f)| (f.key.clone(), i)).collect()
}

fn check_sizes(type_size: usize, flag_size: usize, target_size: usize) -> Result<()> {
    if flag_size < type_size || 2 * flag_size - type_size > target_size {
        return Err(Error::IncompatibleSizes {
            type_size,
            flag_size,
            target_size,
        });
    }
    Ok(())
}

/// The pair-density matrix of one target graph (see the module docs).
pub fn pair_density_matrix(
    sigma: &Hypergraph3,
    flag_size: usize,
    index: &BTreeMap<CanonKey, usize>,
    target: &Hypergraph3,
) -> Result<SymMatrix> {
    let s = sigma.n();
    let m = target.n();
    check_sizes(s, flag_size, m)?;
    let ext = flag_size - s;
    let dim = index.len();
    let mut counts = alloc::vec![0u64; dim * dim];
    let mut thetas = 0u128;
    let mut failure = None;
    for_each_injection(m, s, |theta| {
        thetas += 1;
        if failure.is_some() || !induces_type(target, theta, sigma) {
            return;
        }
        let rest: Vec<Vertex> = (0..m as Vertex).filter(|v| !theta.contains(v)).collect();
        // Flag index of every extension set, keyed by its vertex bitmask.
        let mut ext_sets: Vec<(u64, usize)> = Vec::new();
        for_each_subset(rest.len(), ext, |u| {
            let mut order: Vec<Vertex> = theta.to_vec();
            let mut mask = 0u64;
            for &i in u {
                order.push(rest[i as usize]);
                mask |= 1 << rest[i as usize];
            }
            let g = target.induced(&order);
            let key = canonical_labeling(&g, Some(&root_colors(flag_size, s))).key;
            match index.get(&key) {
                Some(&idx) => ext_sets.push((mask, idx)),
                None => failure = Some(key),
            }
        });
        for &(m1, i) in &ext_sets {
            for &(m2, j) in &ext_sets {
                if m1 & m2 == 0 {
                    counts[i * dim + j] += 1;
                }
            }
        }
    });
    if let Some(key) = failure {
        return Err(Error::Dimension(alloc::format!(
            "target {target:?} contains flag {key} missing from the flag list"
        )));
    }
    let pairs = binomial((m - s) as u64, ext as u64) * binomial((m - s - ext) as u64, ext as u64);
    let denominator = BigInt::from(thetas) * BigInt::from(pairs);
    let mut matrix = SymMatrix::zeros(dim);
    for i in 0..dim {
        for j in i..dim {
            let c = counts[i * dim + j];
            if c != 0 {
                matrix.set(i, j, Rational::new(BigInt::from(c), denominator.clone()));
            }
        }
    }
    Ok(matrix)
}

/// Pair densities of one type against every admissible target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDensityTable {
    pub sigma: Hypergraph3,
    pub flag_size: usize,
    pub target_size: usize,
    pub family_key: String,
    pub flags: Vec<Flag>,
    pub targets: Vec<Hypergraph3>,
    /// One matrix per target, in target order.
    pub matrices: Vec<SymMatrix>,
}

impl PairDensityTable {
    pub fn build(sigma: &Hypergraph3, flag_size: usize, target_size: usize, family: &Family) -> Result<Self> {
        check_sizes(sigma.n(), flag_size, target_size)?;
        let flags = enumerate_flags(&FlagType::new(sigma.clone()), flag_size, family)?;
        let targets = enumerate_free_unbounded(target_size, family);
        Self::build_for(sigma, flag_size, family, flags, targets)
    }

    /// Builds against a given target list and flag list.
    pub fn build_for(
        sigma: &Hypergraph3,
        flag_size: usize,
        family: &Family,
        flags: Vec<Flag>,
        targets: Vec<Hypergraph3>,
    ) -> Result<Self> {
        let index = flag_index(&flags);
        let matrices = targets
            .iter()
            .map(|t| pair_density_matrix(sigma, flag_size, &index, t))
            .collect::<Result<Vec<_>>>()?;
        let target_size = targets.first().map_or(2 * flag_size - sigma.n(), |t| t.n());
        Ok(PairDensityTable {
            sigma: sigma.clone(),
            flag_size,
            target_size,
            family_key: family.key(),
            flags,
            targets,
            matrices,
        })
    }
}

/// Cache of tables keyed by `(type key, flag size, target size, family key)`.
#[derive(Debug, Default)]
pub struct TableCache {
    tables: BTreeMap<(CanonKey, usize, usize, String), PairDensityTable>,
}

impl TableCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get_or_build(
        &mut self,
        sigma: &Hypergraph3,
        flag_size: usize,
        target_size: usize,
        family: &Family,
    ) -> Result<&PairDensityTable> {
        let key = (sigma.canon_key().clone(), flag_size, target_size, family.key());
        if !self.tables.contains_key(&key) {
            let table = PairDensityTable::build(sigma, flag_size, target_size, family)?;
            self.tables.insert(key.clone(), table);
        }
        Ok(&self.tables[&key])
    }

    pub fn insert(&mut self, table: PairDensityTable) {
        let key = (
            table.sigma.canon_key().clone(),
            table.flag_size,
            table.target_size,
            table.family_key.clone(),
        );
        self.tables.insert(key, table);
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }
}

/// Sum of all entries of a matrix.
pub fn total(m: &SymMatrix) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            acc += m.get(i, j);
        }
    }
    acc
}
