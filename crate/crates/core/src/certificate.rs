//! Exact verification of flag-algebra bound certificates.
//!
//! A certificate proves `pi(family) <= u` when every block `Q_sigma` is PSD
//! and, for every admissible target `F` on `m` vertices,
//! `u - obj(F) - sum_sigma <Q_sigma, P_sigma(F)> >= 0`. The supplied slacks
//! `c_F` must be nonnegative; beyond that they are only compared against the
//! recomputed differences, which are authoritative.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::canon::CanonKey;
use crate::density::PairDensityTable;
use crate::enumerate::enumerate_free_unbounded;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::Hypergraph3;
use crate::linalg::SymMatrix;
use crate::numeric::Rational;
use crate::sdp::objective_coefficient;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertBlock {
    /// The type, in canonical labeling.
    pub sigma: Hypergraph3,
    pub flag_size: usize,
    pub matrix: SymMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub bound: Rational,
    pub family_key: String,
    pub m: usize,
    pub blocks: Vec<CertBlock>,
    /// `c_F` by target index (targets sorted by canonical key).
    pub slacks: BTreeMap<usize, Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    NegativeSlack { index: usize },
    NotPsd { block: usize },
    ConstraintViolated { index: usize, key: CanonKey, deficit: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verified {
    pub bound: Rational,
    /// Smallest recomputed slack over all targets.
    pub min_slack: Rational,
    /// Supplied slacks that differ from the recomputed ones.
    pub slack_mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Verified(Verified),
    Rejected(Rejection),
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified(_))
    }
}

/// Exact PSD test for a square rational matrix; rejects non-symmetric input.
pub fn psd_check(rows: &[Vec<Rational>]) -> Result<bool> {
    Ok(SymMatrix::from_rows(rows)?.is_psd())
}

/// Verifies against a family of built-in graphs named by the certificate.
pub fn verify(cert: &Certificate) -> Result<Verdict> {
    let family = Family::from_key(&cert.family_key)?;
    verify_with_family(cert, &family)
}

/// Verifies against `family`, recomputing targets and pair densities.
pub fn verify_with_family(cert: &Certificate, family: &Family) -> Result<Verdict> {
    let targets = enumerate_free_unbounded(cert.m, family);
    let mut tables = Vec::with_capacity(cert.blocks.len());
    for b in &cert.blocks {
        tables.push(PairDensityTable::build(&b.sigma, b.flag_size, cert.m, family)?);
    }
    let matrices: Vec<Vec<SymMatrix>> = tables.into_iter().map(|t| t.matrices).collect();
    verify_against(cert, &targets, &matrices)
}

/// Verifies against explicit targets (in any order) and, per block, the
/// pair-density matrix of each target in the same order.
///
/// Slack indices refer to targets sorted by canonical key, whatever order
/// `targets` comes in.
pub fn verify_against(cert: &Certificate, targets: &[Hypergraph3], matrices: &[Vec<SymMatrix>]) -> Result<Verdict> {
    if matrices.len() != cert.blocks.len() {
        return Err(Error::Dimension(alloc::format!(
            "certificate has {} blocks, {} tables supplied",
            cert.blocks.len(),
            matrices.len()
        )));
    }
    let mut order: Vec<usize> = (0..targets.len()).collect();
    order.sort_by(|&a, &b| targets[a].canon_key().cmp(targets[b].canon_key()));
    for (bi, (block, per_target)) in cert.blocks.iter().zip(matrices).enumerate() {
        if per_target.len() != targets.len() {
            return Err(Error::Dimension(alloc::format!("block {bi} has tables for {} targets", per_target.len())));
        }
        if let Some(p) = per_target.iter().find(|p| p.dim() != block.matrix.dim()) {
            return Err(Error::Dimension(alloc::format!(
                "block {bi} has dimension {} but the type has {} flags",
                block.matrix.dim(),
                p.dim()
            )));
        }
    }
    if let Some((&i, _)) = cert.slacks.iter().find(|(&i, _)| i >= targets.len()) {
        return Err(Error::Dimension(alloc::format!(
            "slack index {i} but only {} admissible targets",
            targets.len()
        )));
    }

    if let Some((&index, _)) = cert.slacks.iter().find(|(_, c)| c.is_negative()) {
        return Ok(Verdict::Rejected(Rejection::NegativeSlack { index }));
    }
    if let Some(block) = cert.blocks.iter().position(|b| !b.matrix.is_psd()) {
        return Ok(Verdict::Rejected(Rejection::NotPsd { block }));
    }

    let mut min_slack: Option<Rational> = None;
    let mut mismatches = 0;
    for (index, &t) in order.iter().enumerate() {
        let mut slack = &cert.bound - objective_coefficient(&targets[t]);
        for (block, per_target) in cert.blocks.iter().zip(matrices) {
            slack -= block.matrix.inner(&per_target[t]);
        }
        if slack.is_negative() {
            return Ok(Verdict::Rejected(Rejection::ConstraintViolated {
                index,
                key: targets[t].canon_key().clone(),
                deficit: -slack,
            }));
        }
        let supplied = cert.slacks.get(&index).cloned().unwrap_or_else(Rational::zero);
        if supplied != slack {
            mismatches += 1;
        }
        if min_slack.as_ref().is_none_or(|m| slack < *m) {
            min_slack = Some(slack);
        }
    }
    Ok(Verdict::Verified(Verified {
        bound: cert.bound.clone(),
        min_slack: min_slack.unwrap_or_else(Rational::zero),
        slack_mismatches: mismatches,
    }))
}
