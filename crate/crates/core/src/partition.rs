//! Bipartition diagnostics: bad and missing edges, the max-cut ratio,
//! locally maximal partitions and a few inequality evaluators.
//!
//! Throughout, the cross edges of `(V1, V2)` are the triples with exactly two
//! vertices in `V1`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph3, Vertex};
use crate::numeric::{from_u128, int, ratio, sqrt_ceil, Rational, REPORT_DIGITS};

/// Default number of local-search restarts.
pub const DEFAULT_RESTARTS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionStats {
    pub v1: Vec<Vertex>,
    pub v2: Vec<Vertex>,
    /// Edges meeting `V1` in one or three vertices.
    pub bad: Vec<Edge>,
    /// Non-edges meeting `V1` in exactly two vertices.
    pub missing: Vec<Edge>,
    pub cross_present: usize,
    /// Edges inside `V2`.
    pub inner2: usize,
}

/// `true` for vertices of `V1`; checks that the parts cover `0..n` disjointly.
pub fn side_of(n: usize, v1: &[Vertex], v2: &[Vertex]) -> Result<Vec<bool>> {
    let mut seen = vec![None; n];
    for (part, side) in [(v1, true), (v2, false)] {
        for &v in part {
            let slot = seen
                .get_mut(v as usize)
                .ok_or_else(|| Error::InvalidPartition(alloc::format!("vertex {v} out of range for n = {n}")))?;
            if slot.is_some() {
                return Err(Error::InvalidPartition(alloc::format!("vertex {v} listed twice")));
            }
            *slot = Some(side);
        }
    }
    seen.iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::InvalidPartition(alloc::format!("vertex {v} in neither part"))))
        .collect()
}

fn parts(side: &[bool]) -> (Vec<Vertex>, Vec<Vertex>) {
    let v1 = (0..side.len()).filter(|&v| side[v]).map(|v| v as Vertex).collect();
    let v2 = (0..side.len()).filter(|&v| !side[v]).map(|v| v as Vertex).collect();
    (v1, v2)
}

#[inline]
fn in_v1(e: &Edge, side: &[bool]) -> usize {
    e.iter().filter(|&&v| side[v as usize]).count()
}

pub fn bad_missing(h: &Hypergraph3, v1: &[Vertex], v2: &[Vertex]) -> Result<PartitionStats> {
    let side = side_of(h.n(), v1, v2)?;
    let (v1, v2) = parts(&side);
    let mut bad = Vec::new();
    let mut cross_present = 0;
    let mut inner2 = 0;
    for e in h.edges() {
        match in_v1(e, &side) {
            0 => inner2 += 1,
            2 => cross_present += 1,
            _ => bad.push(*e),
        }
    }
    let mut missing = Vec::new();
    for (i, &a) in v1.iter().enumerate() {
        for &b in &v1[i + 1..] {
            for &c in &v2 {
                if !h.has_edge(a, b, c) {
                    let mut e = [a, b, c];
                    e.sort_unstable();
                    missing.push(e);
                }
            }
        }
    }
    missing.sort_unstable();
    Ok(PartitionStats {
        v1,
        v2,
        bad,
        missing,
        cross_present,
        inner2,
    })
}

/// Number of cross edges for a side assignment.
pub fn cross_count(h: &Hypergraph3, side: &[bool]) -> usize {
    h.edges().iter().filter(|e| in_v1(e, side) == 2).count()
}

/// Change in the cross count from moving each vertex to the other side.
fn move_gains(h: &Hypergraph3, side: &[bool]) -> Vec<i64> {
    let mut gain = vec![0i64; h.n()];
    for e in h.edges() {
        let k = in_v1(e, side);
        for &v in e {
            let after = if side[v as usize] { k - 1 } else { k + 1 };
            gain[v as usize] += (after == 2) as i64 - (k == 2) as i64;
        }
    }
    gain
}

pub fn is_locally_maximal(h: &Hypergraph3, v1: &[Vertex], v2: &[Vertex]) -> Result<bool> {
    let side = side_of(h.n(), v1, v2)?;
    Ok(move_gains(h, &side).iter().all(|&g| g <= 0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxCut {
    pub v1: Vec<Vertex>,
    pub v2: Vec<Vertex>,
    pub cross: usize,
    /// `6 cross / n^3`, a lower bound on the max-cut ratio.
    pub mu_lower: Rational,
}

fn mu(cross: usize, n: usize) -> Rational {
    if n == 0 {
        Rational::zero()
    } else {
        from_u128(6 * cross as u128) / from_u128((n as u128).pow(3))
    }
}

impl MaxCut {
    fn from_side(h: &Hypergraph3, side: &[bool]) -> Self {
        let (v1, v2) = parts(side);
        let cross = cross_count(h, side);
        MaxCut {
            v1,
            v2,
            cross,
            mu_lower: mu(cross, h.n()),
        }
    }

    /// The better of two results; ties keep `self`.
    pub fn better(self, other: MaxCut) -> MaxCut {
        if other.cross > self.cross {
            other
        } else {
            self
        }
    }
}

/// Steepest single-vertex ascent from `side` until no move gains.
pub fn climb(h: &Hypergraph3, side: &mut [bool]) {
    loop {
        let gains = move_gains(h, side);
        // First vertex with the largest gain, for determinism.
        let (v, &g) = gains
            .iter()
            .enumerate()
            .rev()
            .max_by_key(|&(_, g)| *g)
            .expect("nonempty");
        if g <= 0 {
            return;
        }
        side[v] = !side[v];
    }
}

/// One restart: a random start drawn from stream `restart` of `seed`, then
/// [`climb`]. Restarts are independent, so they can run in any order.
pub fn local_search_restart(h: &Hypergraph3, seed: u64, restart: u64) -> MaxCut {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart);
    let mut side: Vec<bool> = (0..h.n()).map(|_| rng.gen()).collect();
    if h.n() > 0 {
        climb(h, &mut side);
    }
    MaxCut::from_side(h, &side)
}

/// Best locally maximal partition over `restarts` random starts.
pub fn maxcut_local_search(h: &Hypergraph3, restarts: usize, seed: u64) -> MaxCut {
    (0..restarts.max(1) as u64)
        .map(|r| local_search_restart(h, seed, r))
        .reduce(MaxCut::better)
        .expect("at least one restart")
}

/// Largest number of vertices [`maxcut_exhaustive`] accepts.
pub const EXHAUSTIVE_LIMIT: usize = 24;

/// Best partition among masks `from..to`; bit `v` set puts `v` in `V1`.
pub fn maxcut_exhaustive_range(h: &Hypergraph3, from: u64, to: u64) -> Result<MaxCut> {
    let n = h.n();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::OutOfRange(alloc::format!("exhaustive max-cut needs n <= {EXHAUSTIVE_LIMIT}, got {n}")));
    }
    let masks: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let mut best: Option<(usize, u64)> = None;
    for mask in from..to.min(1 << n) {
        let cross = masks.iter().filter(|&&e| (e & mask).count_ones() == 2).count();
        if best.is_none_or(|(c, _)| cross > c) {
            best = Some((cross, mask));
        }
    }
    let (_, mask) = best.unwrap_or((0, 0));
    let side: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
    Ok(MaxCut::from_side(h, &side))
}

/// The exact max-cut ratio by trying all `2^n` partitions.
pub fn maxcut_exhaustive(h: &Hypergraph3) -> Result<MaxCut> {
    maxcut_exhaustive_range(h, 0, 1 << h.n().min(63))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma22 {
    pub lhs: u128,
    pub rhs: Rational,
    pub holds: bool,
}

/// `|H|` against `C(|V1|, 2)|V2| + |H[V2]| + xi n^3 - max(|B|/3999, |M|/4000)`.
pub fn lemma22_gap(h: &Hypergraph3, v1: &[Vertex], v2: &[Vertex], xi: &Rational) -> Result<Lemma22> {
    let st = bad_missing(h, v1, v2)?;
    let n = h.n() as i64;
    let penalty = ratio(st.bad.len() as i64, 3999).max(ratio(st.missing.len() as i64, 4000));
    let rhs = from_u128(binomial(st.v1.len() as u64, 2) * st.v2.len() as u128) + int(st.inner2 as i64)
        + xi * int(n * n * n)
        - penalty;
    let lhs = h.edge_count() as u128;
    let holds = from_u128(lhs) <= rhs;
    Ok(Lemma22 { lhs, rhs, holds })
}

/// `|B| - (3999/4000)|M|`.
pub fn prop33_expr(h: &Hypergraph3, v1: &[Vertex], v2: &[Vertex]) -> Result<Rational> {
    let st = bad_missing(h, v1, v2)?;
    Ok(int(st.bad.len() as i64) - ratio(3999, 4000) * int(st.missing.len() as i64))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowDegree {
    /// `(pi/2 - 4 sqrt(delta)) n^2`, rounded down (via an upper bracket
    /// of `sqrt(delta)` to 50 digits).
    pub threshold: Rational,
    pub vertices: Vec<Vertex>,
    /// `|H| >= (pi/6 - delta) n^3`, the hypothesis of the size bound.
    pub precondition: bool,
    /// `|Z| <= sqrt(delta) n`, decided exactly as `|Z|^2 <= delta n^2`.
    pub within_size_bound: bool,
}

/// Vertices whose degree is at most the threshold.
pub fn low_degree_set(h: &Hypergraph3, delta: &Rational, pi: &Rational) -> Result<LowDegree> {
    if !delta.is_positive() {
        return Err(Error::OutOfRange(alloc::format!("delta must be positive, got {delta}")));
    }
    let n = int(h.n() as i64);
    let n2 = &n * &n;
    let threshold = (pi / int(2) - int(4) * sqrt_ceil(delta, REPORT_DIGITS)) * &n2;
    let vertices: Vec<Vertex> = h
        .degrees()
        .iter()
        .enumerate()
        .filter(|&(_, &d)| int(d as i64) <= threshold)
        .map(|(v, _)| v as Vertex)
        .collect();
    let precondition = int(h.edge_count() as i64) >= (pi / int(6) - delta) * &n2 * &n;
    let size = int(vertices.len() as i64);
    let within_size_bound = &size * &size <= delta * &n2;
    Ok(LowDegree {
        threshold,
        vertices,
        precondition,
        within_size_bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeGap {
    pub gap: usize,
    /// `n - 2`.
    pub bound: i64,
    pub within: bool,
}

/// Whether `max degree - min degree <= n - 2`.
pub fn degree_gap_check(h: &Hypergraph3) -> DegreeGap {
    let gap = h.degree_stats().gap;
    let bound = h.n() as i64 - 2;
    DegreeGap {
        gap,
        bound,
        within: gap as i64 <= bound,
    }
}
