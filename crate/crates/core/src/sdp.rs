//! Assembly of the flag-algebra SDP and rounding of floating solutions.
//!
//! The program, for admissible targets `F` on `m` vertices, reads
//!
//! ```text
//! minimise u  subject to  u - obj(F) - sum_sigma <Q_sigma, P_sigma(F)> - c_F = 0,
//!                         Q_sigma PSD, c_F >= 0, u >= 0
//! ```
//!
//! where `obj(F)` is the edge density of `F`. Solver solutions are laid out
//! block by block: the upper triangle (row-major) of every `Q_sigma`, then the
//! diagonal block `c_1, ..., c_N, u`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::certificate::{CertBlock, Certificate};
use crate::density::{edge_density, TableCache};
use crate::enumerate::enumerate_free_unbounded;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::hypergraph::Hypergraph3;
use crate::linalg::SymMatrix;
use crate::numeric::{from_f64, Rational};

/// A type together with the size of the flags over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSpec {
    pub sigma: Hypergraph3,
    pub flag_size: usize,
}

/// Conventional type set for target size `m`: every admissible `sigma` with
/// `|sigma| = m - 2, m - 4, ...` and flags on `(m + |sigma|) / 2` vertices.
pub fn default_types(m: usize, family: &Family) -> Vec<TypeSpec> {
    let mut out = Vec::new();
    let mut s = m % 2;
    while s + 2 <= m {
        for sigma in enumerate_free_unbounded(s, family) {
            out.push(TypeSpec {
                sigma,
                flag_size: (m + s) / 2,
            });
        }
        s += 2;
    }
    out
}

/// One PSD block: a type, its flag count and the pair densities per target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeBlock {
    pub sigma: Hypergraph3,
    pub flag_size: usize,
    pub dim: usize,
    pub matrices: Vec<SymMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdpModel {
    pub m: usize,
    pub family_key: String,
    /// Admissible graphs on `m` vertices, sorted by canonical key.
    pub targets: Vec<Hypergraph3>,
    /// Edge density of each target.
    pub objective: Vec<Rational>,
    pub blocks: Vec<TypeBlock>,
}

/// Edge density as the objective coefficient (zero below 3 vertices).
pub fn objective_coefficient(f: &Hypergraph3) -> Rational {
    edge_density(f).unwrap_or_else(|_| Rational::zero())
}

/// Builds the model. Types are replaced by their canonical forms.
pub fn assemble(m: usize, family: &Family, types: &[TypeSpec]) -> Result<SdpModel> {
    assemble_with_cache(m, family, types, &mut TableCache::new())
}

pub fn assemble_with_cache(
    m: usize,
    family: &Family,
    types: &[TypeSpec],
    cache: &mut TableCache,
) -> Result<SdpModel> {
    let targets = enumerate_free_unbounded(m, family);
    if targets.is_empty() {
        return Err(Error::NoAdmissibleGraphs(m));
    }
    let mut blocks = Vec::with_capacity(types.len());
    for t in types {
        let (sigma, _) = t.sigma.canonical_form();
        let table = cache.get_or_build(&sigma, t.flag_size, m, family)?;
        blocks.push(TypeBlock {
            sigma,
            flag_size: t.flag_size,
            dim: table.flags.len(),
            matrices: table.matrices.clone(),
        });
    }
    Ok(SdpModel::from_parts(m, family.key(), targets, blocks))
}

impl SdpModel {
    pub fn from_parts(m: usize, family_key: String, targets: Vec<Hypergraph3>, blocks: Vec<TypeBlock>) -> Self {
        let objective = targets.iter().map(objective_coefficient).collect();
        SdpModel {
            m,
            family_key,
            targets,
            objective,
            blocks,
        }
    }

    pub fn constraint_count(&self) -> usize {
        self.targets.len()
    }

    /// Optimum of the program without PSD blocks: `max_F obj(F)`.
    pub fn lp_bound(&self) -> Rational {
        self.objective.iter().max().cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of floats a solution vector must contain.
    pub fn solution_len(&self) -> usize {
        self.blocks.iter().map(|b| b.dim * (b.dim + 1) / 2).sum::<usize>() + self.targets.len() + 1
    }

    /// `obj(F) + sum_sigma <Q_sigma, P_sigma(F)>` for target `index`.
    pub fn constraint_value(&self, index: usize, qs: &[SymMatrix]) -> Rational {
        let mut v = self.objective[index].clone();
        for (b, q) in self.blocks.iter().zip(qs) {
            v += q.inner(&b.matrices[index]);
        }
        v
    }

    /// The LP certificate `u = lp_bound`, no PSD blocks, exact slacks.
    pub fn lp_certificate(&self) -> Certificate {
        let u = self.lp_bound();
        Certificate {
            bound: u.clone(),
            family_key: self.family_key.clone(),
            m: self.m,
            blocks: Vec::new(),
            slacks: self
                .objective
                .iter()
                .enumerate()
                .map(|(i, o)| (i, &u - o))
                .collect(),
        }
    }

    /// Certificate with the given `Q` blocks and the smallest bound they allow.
    pub fn certificate_for(&self, qs: Vec<SymMatrix>, at_least: Option<Rational>) -> Result<Certificate> {
        if qs.len() != self.blocks.len() || qs.iter().zip(&self.blocks).any(|(q, b)| q.dim() != b.dim) {
            return Err(Error::Dimension("Q blocks do not match the model".into()));
        }
        let values: Vec<Rational> = (0..self.targets.len()).map(|i| self.constraint_value(i, &qs)).collect();
        let mut u = values.iter().max().cloned().unwrap_or_else(Rational::zero);
        if let Some(floor) = at_least {
            if floor > u {
                u = floor;
            }
        }
        let slacks: BTreeMap<usize, Rational> = values.iter().enumerate().map(|(i, v)| (i, &u - v)).collect();
        Ok(Certificate {
            bound: u,
            family_key: self.family_key.clone(),
            m: self.m,
            blocks: self
                .blocks
                .iter()
                .zip(qs)
                .map(|(b, q)| CertBlock {
                    sigma: b.sigma.clone(),
                    flag_size: b.flag_size,
                    matrix: q,
                })
                .collect(),
            slacks,
        })
    }
}

/// Neighbouring fractions `lo <= x <= hi` with denominators at most `bound`
/// and nothing of that size strictly between them (`lo == hi == x` when `x`
/// itself qualifies). Batched Stern-Brocot descent.
pub fn farey_bracket(x: &Rational, bound: &BigInt) -> (Rational, Rational) {
    assert!(bound.is_positive(), "denominator bound must be positive");
    let whole = x.floor();
    let f = x - &whole;
    if f.is_zero() {
        return (x.clone(), x.clone());
    }
    let r = |p: &BigInt, q: &BigInt| Rational::new(p.clone(), q.clone());
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::one());
    loop {
        let q = &q0 + &q1;
        if &q > bound {
            break;
        }
        let p = &p0 + &p1;
        let mediant = r(&p, &q);
        if mediant == f {
            return (&whole + &mediant, &whole + mediant);
        }
        if mediant < f {
            // Raise the lower end as far as possible.
            let num = &f * Rational::from_integer(q0.clone()) - Rational::from_integer(p0.clone());
            let den = Rational::from_integer(p1.clone()) - &f * Rational::from_integer(q1.clone());
            let by_value = (num / den).floor().to_integer();
            let by_bound = (bound - &q0).div_floor(&q1);
            let k = by_value.min(by_bound);
            p0 = &p0 + &k * &p1;
            q0 = &q0 + &k * &q1;
            if r(&p0, &q0) == f {
                let v = &whole + r(&p0, &q0);
                return (v.clone(), v);
            }
        } else {
            let num = Rational::from_integer(p1.clone()) - &f * Rational::from_integer(q1.clone());
            let den = &f * Rational::from_integer(q0.clone()) - Rational::from_integer(p0.clone());
            let by_value = (num / den).floor().to_integer();
            let by_bound = (bound - &q1).div_floor(&q0);
            let k = by_value.min(by_bound);
            p1 = &p1 + &k * &p0;
            q1 = &q1 + &k * &q0;
            if r(&p1, &q1) == f {
                let v = &whole + r(&p1, &q1);
                return (v.clone(), v);
            }
        }
    }
    (&whole + r(&p0, &q0), &whole + r(&p1, &q1))
}

/// Closest fraction with denominator at most `bound`; ties go to the
/// smaller denominator, then to the lower value.
pub fn best_rational(x: &Rational, bound: &BigInt) -> Rational {
    let (lo, hi) = farey_bracket(x, bound);
    let (dl, dh) = (x - &lo, &hi - x);
    if dl < dh || (dl == dh && lo.denom() <= hi.denom()) {
        lo
    } else {
        hi
    }
}

/// [`best_rational`] of the exact value of a float.
pub fn round_float(x: f64, bound: &BigInt) -> Option<Rational> {
    from_f64(x).map(|r| best_rational(&r, bound))
}

/// Smallest fraction with denominator at most `bound` that is `>= x`.
pub fn round_up_float(x: f64, bound: &BigInt) -> Option<Rational> {
    from_f64(x).map(|r| farey_bracket(&r, bound).1)
}

/// Default denominator bound for rounding, `2^32`.
pub fn default_denominator_bound() -> BigInt {
    BigInt::from(1u64 << 32)
}

/// Turns a floating solution into an exact candidate certificate.
///
/// Every `Q` entry becomes its best rational approximation (the upper
/// triangle defines the symmetric matrix). The bound is the larger of the
/// rounded-up float `u` and the least value the rounded blocks allow, and the
/// slacks are then recomputed exactly, which also clamps small negative
/// solver slacks to zero. Whether the blocks are PSD is left to the verifier.
pub fn round_solution(model: &SdpModel, floats: &[f64], denominator_bound: &BigInt) -> Result<Certificate> {
    if floats.len() != model.solution_len() {
        return Err(Error::Dimension(alloc::format!(
            "solution has {} values, model expects {}",
            floats.len(),
            model.solution_len()
        )));
    }
    if let Some(i) = floats.iter().position(|x| !x.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    let mut at = 0;
    let mut qs = Vec::with_capacity(model.blocks.len());
    for b in &model.blocks {
        let len = b.dim * (b.dim + 1) / 2;
        let upper: Vec<Rational> = floats[at..at + len]
            .iter()
            .map(|&x| round_float(x, denominator_bound).unwrap())
            .collect();
        qs.push(SymMatrix::from_upper(b.dim, &upper)?);
        at += len;
    }
    let u_float = *floats.last().unwrap();
    let u_floor = round_up_float(u_float, denominator_bound).unwrap();
    model.certificate_for(qs, Some(u_floor))
}
