//! Lower-bound constructions and the numeric audit of the two split
//! inequalities behind the recursive construction.
//!
//! Edge counts in [`density_report`] come from closed forms, so reports for
//! `n` in the thousands never build the graph.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph3, Vertex};
use crate::named::NamedGraph;
use crate::numeric::{from_u128, int, pow10, ratio, sqrt3_bounds, to_decimal, two_sqrt3_minus_3, Rational, REPORT_DIGITS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionSpec {
    /// Recursive semi-bipartite construction on `n` vertices. `splits[i]` is
    /// the size of `V1` at level `i`; the last tail must have at most 2
    /// vertices.
    BRec { n: usize, splits: Vec<usize> },
    Partite3([usize; 3]),
    K4Blowup([usize; 4]),
    /// All triples with exactly two vertices in the first part.
    SemiBipartite(usize, usize),
}

impl ConstructionSpec {
    /// `BRec` with the optimal splits from [`b_rec`].
    pub fn brec_optimal(n: usize) -> Self {
        ConstructionSpec::BRec {
            n,
            splits: b_rec(n).splits,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            ConstructionSpec::BRec { n, .. } => *n,
            ConstructionSpec::Partite3(s) => s.iter().sum(),
            ConstructionSpec::K4Blowup(s) => s.iter().sum(),
            ConstructionSpec::SemiBipartite(a, b) => a + b,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ConstructionSpec::BRec { n, splits } => {
                let mut rest = *n;
                for (level, &n1) in splits.iter().enumerate() {
                    if n1 == 0 || n1 >= rest {
                        return Err(Error::InvalidConstruction(alloc::format!(
                            "split {n1} at level {level} leaves no room in a tail of {rest}"
                        )));
                    }
                    rest -= n1;
                }
                if rest > 2 {
                    return Err(Error::InvalidConstruction(alloc::format!(
                        "splits stop with {rest} vertices left; at most 2 may remain"
                    )));
                }
                Ok(())
            }
            ConstructionSpec::Partite3(s) if s.contains(&0) => Err(Error::ZeroClassSize),
            ConstructionSpec::K4Blowup(s) if s.contains(&0) => Err(Error::ZeroClassSize),
            _ => Ok(()),
        }
    }
}

/// Builds the construction. Vertices of each part are consecutive.
pub fn build(spec: &ConstructionSpec) -> Result<Hypergraph3> {
    spec.validate()?;
    match spec {
        ConstructionSpec::BRec { n, splits } => {
            let mut edges: Vec<Edge> = Vec::new();
            let mut start = 0;
            for &n1 in splits {
                semi_bipartite_edges(start, start + n1, *n, &mut edges);
                start += n1;
            }
            edges.sort_unstable();
            Ok(Hypergraph3::from_edge_vec(*n, edges))
        }
        ConstructionSpec::Partite3(s) => Hypergraph3::from_edges(3, [[0, 1, 2]])?.blow_up(s),
        ConstructionSpec::K4Blowup(s) => NamedGraph::K4_3.graph().blow_up(s),
        ConstructionSpec::SemiBipartite(a, b) => {
            let mut edges = Vec::new();
            semi_bipartite_edges(0, *a, a + b, &mut edges);
            edges.sort_unstable();
            Ok(Hypergraph3::from_edge_vec(a + b, edges))
        }
    }
}

/// Triples with two vertices in `start..mid` and one in `mid..end`.
fn semi_bipartite_edges(start: usize, mid: usize, end: usize, out: &mut Vec<Edge>) {
    for a in start..mid {
        for b in a + 1..mid {
            for c in mid..end {
                out.push([a as Vertex, b as Vertex, c as Vertex]);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BRecOptimum {
    pub value: u128,
    pub splits: Vec<usize>,
}

/// `b_rec(n) = max { C(n1, 2) n2 + b_rec(n2) : n1 + n2 = n, n1 >= 1 }`, zero
/// for `n <= 2`, with an optimal split sequence (ties go to the larger `n1`).
pub fn b_rec(n: usize) -> BRecOptimum {
    let (value, best) = b_rec_table(n);
    let mut splits = Vec::new();
    let mut k = n;
    while k >= 3 {
        splits.push(best[k]);
        k -= best[k];
    }
    BRecOptimum { value: value[n], splits }
}

/// Values and best first splits for every tail `0..=n`.
pub fn b_rec_table(n: usize) -> (Vec<u128>, Vec<usize>) {
    let mut value = vec![0u128; n + 1];
    let mut best = vec![0usize; n + 1];
    for k in 3..=n {
        for n1 in 1..k {
            let n2 = k - n1;
            let v = binomial(n1 as u64, 2) * n2 as u128 + value[n2];
            if v >= value[k] {
                value[k] = v;
                best[k] = n1;
            }
        }
    }
    (value, best)
}

/// Exact number of edges, without building the graph.
pub fn edge_count(spec: &ConstructionSpec) -> Result<u128> {
    spec.validate()?;
    Ok(match spec {
        ConstructionSpec::BRec { n, splits } => {
            let mut rest = *n;
            let mut total = 0u128;
            for &n1 in splits {
                rest -= n1;
                total += binomial(n1 as u64, 2) * rest as u128;
            }
            total
        }
        ConstructionSpec::Partite3(s) => s.iter().map(|&x| x as u128).product(),
        ConstructionSpec::K4Blowup(s) => {
            let s: Vec<u128> = s.iter().map(|&x| x as u128).collect();
            let mut total = 0;
            for skip in 0..4 {
                total += (0..4).filter(|&i| i != skip).map(|i| s[i]).product::<u128>();
            }
            total
        }
        ConstructionSpec::SemiBipartite(a, b) => binomial(*a as u64, 2) * *b as u128,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitDensity {
    Exact(Rational),
    /// Irrational limit as a truncated decimal.
    Decimal(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub n: usize,
    pub edges: u128,
    /// `|H| / C(n, 3)`, absent below 3 vertices.
    pub density: Option<Rational>,
    /// `6 |H| / n^3`, the normalization the limits use.
    pub normalized: Rational,
    /// Density of the blow-up sequence with the same part proportions
    /// (for `BRec`, only when the splits are optimal).
    pub limit: Option<LimitDensity>,
}

pub fn density_report(spec: &ConstructionSpec) -> Result<DensityReport> {
    let edges = edge_count(spec)?;
    let n = spec.n();
    let density = (n >= 3).then(|| Rational::new(edges.into(), binomial(n as u64, 3).into()));
    let normalized = if n == 0 {
        Rational::zero()
    } else {
        from_u128(6 * edges) / from_u128((n as u128).pow(3))
    };
    let share = |x: usize| ratio(x as i64, n as i64);
    let limit = match spec {
        ConstructionSpec::BRec { n, splits } => {
            (*splits == b_rec(*n).splits).then(|| LimitDensity::Decimal(to_decimal(&two_sqrt3_minus_3(), REPORT_DIGITS)))
        }
        ConstructionSpec::Partite3(s) => Some(LimitDensity::Exact(int(6) * share(s[0]) * share(s[1]) * share(s[2]))),
        ConstructionSpec::K4Blowup(s) => {
            let mut e3 = Rational::zero();
            for skip in 0..4 {
                let mut term = Rational::one();
                for (i, &x) in s.iter().enumerate() {
                    if i != skip {
                        term *= share(x);
                    }
                }
                e3 += term;
            }
            Some(LimitDensity::Exact(int(6) * e3))
        }
        ConstructionSpec::SemiBipartite(a, b) => {
            (n > 0).then(|| LimitDensity::Exact(int(3) * share(*a) * share(*a) * share(*b)))
        }
    };
    Ok(DensityReport {
        n,
        edges,
        density,
        normalized,
        limit,
    })
}

/// Which center to use in the quadratic term of the second inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fact21Center {
    /// `(3 - sqrt 3) / 12`, the constant as stated.
    #[default]
    AsPrinted,
    /// `(3 - sqrt 3) / 2`, where the first inequality is tight.
    Optimizer,
}

impl Fact21Center {
    fn value(self, sqrt3: &Rational) -> Rational {
        let num = int(3) - sqrt3;
        match self {
            Fact21Center::AsPrinted => num / int(12),
            Fact21Center::Optimizer => num / int(2),
        }
    }
}

/// One side-by-side comparison; `holds` means `bound - lhs > -10^-30`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub lhs: Rational,
    pub bound: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact21Report {
    /// `x1^2 x2 / (2 (1 - x2^3)) <= (2 sqrt 3 - 3) / 6`.
    pub first: Inequality,
    /// `x1^2 x2 / 2 + b x2^3 <= b - (x1 - c)^2 / 4` with `b = (2 sqrt 3 - 3) / 6`,
    /// only for `x1` in `[1/2, 1]`.
    pub second: Option<Inequality>,
}

impl Fact21Report {
    pub fn ok(&self) -> bool {
        self.first.holds && self.second.as_ref().is_none_or(|s| s.holds)
    }
}

fn compare(lhs: Rational, bound: Rational) -> Inequality {
    let tolerance = Rational::new(1.into(), pow10(30));
    let holds = &bound - &lhs > -tolerance;
    Inequality { lhs, bound, holds }
}

/// Evaluates both inequalities with the center as printed.
pub fn fact21_check(x1: &Rational, x2: &Rational) -> Result<Fact21Report> {
    fact21_check_with(x1, x2, Fact21Center::AsPrinted)
}

/// `sqrt 3` enters through a 60-digit lower bracket, so every reported
/// value is within `10^-59` of the true one.
pub fn fact21_check_with(x1: &Rational, x2: &Rational, center: Fact21Center) -> Result<Fact21Report> {
    let one = Rational::one();
    if x1.is_negative() || x2.is_negative() || x1 + x2 != one || *x2 >= one {
        return Err(Error::NotOnSimplex(alloc::format!("x1 = {x1}, x2 = {x2}")));
    }
    let (sqrt3, _) = sqrt3_bounds();
    let b = (int(2) * &sqrt3 - int(3)) / int(6);
    let x2_cubed = x2 * x2 * x2;
    let first = compare(x1 * x1 * x2 / (int(2) * (&one - &x2_cubed)), b.clone());
    let second = (*x1 >= ratio(1, 2)).then(|| {
        let lhs = x1 * x1 * x2 / int(2) + &b * &x2_cubed;
        let d = x1 - center.value(&sqrt3);
        compare(lhs, &b - &d * &d / int(4))
    });
    Ok(Fact21Report { first, second })
}

/// Grid audit over `x1 = k / steps`, `x2 = 1 - x1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact21Grid {
    pub points: usize,
    pub max_first_lhs: Rational,
    pub argmax_x1: Rational,
    pub first_violations: usize,
    /// Points with `x1 >= 1/2` where the second inequality fails.
    pub second_violations: usize,
    pub first_second_violation: Option<Rational>,
}

impl Fact21Grid {
    /// Combines audits of disjoint ranges, keeping the smaller `x1` on ties.
    pub fn merge(self, other: Fact21Grid) -> Fact21Grid {
        let (lo, hi) = if self.argmax_x1 <= other.argmax_x1 { (self, other) } else { (other, self) };
        let take_hi = hi.max_first_lhs > lo.max_first_lhs;
        let first_second_violation = match (lo.first_second_violation, hi.first_second_violation) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Fact21Grid {
            points: lo.points + hi.points,
            max_first_lhs: if take_hi { hi.max_first_lhs.clone() } else { lo.max_first_lhs.clone() },
            argmax_x1: if take_hi { hi.argmax_x1 } else { lo.argmax_x1 },
            first_violations: lo.first_violations + hi.first_violations,
            second_violations: lo.second_violations + hi.second_violations,
            first_second_violation,
        }
    }
}

/// Audits grid indices `k` in `from..to` (those with `x1 > 0`).
pub fn fact21_grid_range(steps: u64, from: u64, to: u64, center: Fact21Center) -> Result<Fact21Grid> {
    let mut grid = Fact21Grid {
        points: 0,
        max_first_lhs: int(-1),
        argmax_x1: Rational::zero(),
        first_violations: 0,
        second_violations: 0,
        first_second_violation: None,
    };
    for k in from.max(1)..to.min(steps + 1) {
        let x1 = Rational::new(k.into(), steps.into());
        let x2 = Rational::one() - &x1;
        let r = fact21_check_with(&x1, &x2, center)?;
        grid.points += 1;
        if !r.first.holds {
            grid.first_violations += 1;
        }
        if r.first.lhs > grid.max_first_lhs {
            grid.max_first_lhs = r.first.lhs.clone();
            grid.argmax_x1 = x1.clone();
        }
        if r.second.is_some_and(|s| !s.holds) {
            grid.second_violations += 1;
            grid.first_second_violation.get_or_insert(x1);
        }
    }
    Ok(grid)
}

pub fn fact21_grid(steps: u64, center: Fact21Center) -> Result<Fact21Grid> {
    fact21_grid_range(steps, 1, steps + 1, center)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;
    use crate::numeric::to_f64;

    #[test]
    fn build_examples() {
        let g = build(&ConstructionSpec::BRec { n: 3, splits: vec![2] }).unwrap();
        assert_eq!(g.edges(), &[[0, 1, 2]]);
        assert_eq!(build(&ConstructionSpec::Partite3([1, 1, 1])).unwrap().edge_count(), 1);
        assert!(build(&ConstructionSpec::K4Blowup([1, 1, 1, 1])).unwrap().is_isomorphic(&NamedGraph::K4_3.graph()));
        assert_eq!(build(&ConstructionSpec::SemiBipartite(4, 2)).unwrap().edge_count(), 12);
    }

    #[test]
    fn invalid_specs() {
        for splits in [vec![], vec![0, 3], vec![5], vec![2]] {
            let spec = ConstructionSpec::BRec { n: 5, splits };
            assert!(matches!(build(&spec), Err(Error::InvalidConstruction(_))), "{spec:?}");
        }
        assert_eq!(build(&ConstructionSpec::Partite3([1, 0, 1])), Err(Error::ZeroClassSize));
        assert!(build(&ConstructionSpec::BRec { n: 2, splits: vec![] }).is_ok());
    }

    #[test]
    fn b_rec_values() {
        let values: Vec<u128> = (0..6).map(|n| b_rec(n).value).collect();
        assert_eq!(values, [0, 0, 0, 1, 3, 6]);
        for n in 0..=60 {
            let opt = b_rec(n);
            let g = build(&ConstructionSpec::BRec { n, splits: opt.splits.clone() }).unwrap();
            assert_eq!(g.edge_count() as u128, opt.value, "n={n}");
        }
    }

    #[test]
    fn b_rec_large_n() {
        let opt = b_rec(1000);
        let d = 6.0 * opt.value as f64 / 1e9;
        assert!((d - 0.4641016).abs() < 0.01, "{d}");
        let r = opt.splits[0] as f64 / 1000.0;
        assert!((r - 0.6339746).abs() < 0.02, "{r}");
    }

    #[test]
    fn brec_is_free() {
        let g = build(&ConstructionSpec::brec_optimal(12)).unwrap();
        assert!(Family::named(&[NamedGraph::C4_3, NamedGraph::F5Bar]).is_free(&g));
    }

    #[test]
    fn reports() {
        let r = density_report(&ConstructionSpec::Partite3([10, 10, 10])).unwrap();
        assert_eq!(r.edges, 1000);
        assert_eq!(r.limit, Some(LimitDensity::Exact(ratio(2, 9))));
        let r = density_report(&ConstructionSpec::K4Blowup([10, 10, 10, 10])).unwrap();
        assert_eq!(r.edges, 4000);
        assert_eq!(r.normalized, ratio(3, 8));
        assert_eq!(r.limit, Some(LimitDensity::Exact(ratio(3, 8))));
        let r = density_report(&ConstructionSpec::SemiBipartite(10, 5)).unwrap();
        assert_eq!(r.edges, 45 * 5);
        let r = density_report(&ConstructionSpec::brec_optimal(1000)).unwrap();
        assert_eq!(
            r.limit,
            Some(LimitDensity::Decimal("0.46410161513775458705489268301174473388561050762076".into()))
        );
        let r = density_report(&ConstructionSpec::BRec { n: 6, splits: vec![1, 1, 1, 1] }).unwrap();
        assert_eq!(r.limit, None);
        assert_eq!(r.edges, 0);
    }

    #[test]
    fn fact21_points() {
        let r = fact21_check(&int(1), &int(0)).unwrap();
        assert!(r.first.lhs.is_zero() && r.first.holds);
        assert!(matches!(fact21_check(&int(0), &int(1)), Err(Error::NotOnSimplex(_))));
        assert!(matches!(fact21_check(&ratio(1, 2), &ratio(1, 3)), Err(Error::NotOnSimplex(_))));
        let half = ratio(1, 2);
        // The printed center fails at x1 = 1/2; the optimizer center holds.
        let printed = fact21_check(&half, &half).unwrap();
        assert!(printed.first.holds);
        assert!(!printed.second.unwrap().holds);
        let fixed = fact21_check_with(&half, &half, Fact21Center::Optimizer).unwrap();
        assert!(fixed.ok());
        assert!(fact21_check(&ratio(2, 5), &ratio(3, 5)).unwrap().second.is_none());
    }

    #[test]
    fn fact21_coarse_grid() {
        let g = fact21_grid(1000, Fact21Center::Optimizer).unwrap();
        assert_eq!(g.points, 1000);
        assert_eq!(g.first_violations, 0);
        assert_eq!(g.second_violations, 0);
        assert_eq!(g.argmax_x1, ratio(634, 1000));
        assert!((to_f64(&g.max_first_lhs) - 0.0773502).abs() < 1e-6);
        let split = fact21_grid_range(1000, 0, 400, Fact21Center::Optimizer)
            .unwrap()
            .merge(fact21_grid_range(1000, 400, 1001, Fact21Center::Optimizer).unwrap());
        assert_eq!(split, g);
        assert!(fact21_grid(1000, Fact21Center::AsPrinted).unwrap().second_violations > 0);
    }
}
