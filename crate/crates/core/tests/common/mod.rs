//! Slow, obviously-correct oracles. Nothing here calls canonical labeling,
//! the embedder, the subset tables or the LDL test of the library.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use turan_core::{Edge, Family, Hypergraph3, Rational};

pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u32);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn relabeled(edges: &[Edge], perm: &[u32]) -> Vec<Edge> {
    let mut out: Vec<Edge> = edges
        .iter()
        .map(|e| {
            let mut t = [perm[e[0] as usize], perm[e[1] as usize], perm[e[2] as usize]];
            t.sort_unstable();
            t
        })
        .collect();
    out.sort_unstable();
    out
}

/// Lexicographically smallest relabeled edge list over all `n!` relabelings.
pub fn brute_canon(g: &Hypergraph3) -> (usize, Vec<Edge>) {
    let best = permutations(g.n())
        .iter()
        .map(|p| relabeled(g.edges(), p))
        .min()
        .unwrap_or_default();
    (g.n(), best)
}

/// Same, but permutations must fix `0..roots` pointwise.
pub fn brute_rooted_canon(g: &Hypergraph3, roots: usize) -> Vec<Edge> {
    let rest = g.n() - roots;
    permutations(rest)
        .iter()
        .map(|p| {
            let full: Vec<u32> = (0..roots as u32).chain(p.iter().map(|&x| x + roots as u32)).collect();
            relabeled(g.edges(), &full)
        })
        .min()
        .unwrap_or_default()
}

pub fn all_triples(n: usize) -> Vec<Edge> {
    let mut t = Vec::new();
    for c in 0..n as u32 {
        for b in 0..c {
            for a in 0..b {
                t.push([a, b, c]);
            }
        }
    }
    t.sort_unstable();
    t
}

/// Every labeled 3-graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Hypergraph3> {
    let triples = all_triples(n);
    (0u64..1 << triples.len()).map(move |mask| {
        let edges = triples.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, t)| *t);
        Hypergraph3::from_edges(n, edges).unwrap()
    })
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Hypergraph3 {
    let edges: Vec<Edge> = all_triples(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Hypergraph3::from_edges(n, edges).unwrap()
}

/// Injections `0..k -> 0..n`.
pub fn injections(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n as u32 {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// Containment by trying every injection of `f` into `h`.
pub fn brute_contains(h: &Hypergraph3, f: &Hypergraph3, induced: bool) -> bool {
    if f.n() > h.n() {
        return false;
    }
    injections(h.n(), f.n()).iter().any(|phi| {
        all_triples(f.n()).iter().all(|t| {
            let in_f = f.has_edge(t[0], t[1], t[2]);
            let in_h = h.has_edge(phi[t[0] as usize], phi[t[1] as usize], phi[t[2] as usize]);
            if induced {
                in_f == in_h
            } else {
                !in_f || in_h
            }
        })
    })
}

pub fn brute_free(h: &Hypergraph3, family: &Family) -> bool {
    family.members().iter().all(|m| !brute_contains(h, &m.graph, m.induced))
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::from_integer(BigInt::from(1));
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// A symmetric matrix is PSD iff every principal minor is nonnegative.
pub fn minor_psd(m: &[Vec<Rational>]) -> bool {
    let n = m.len();
    (1u32..1 << n).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<Rational>> = idx.iter().map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect()).collect();
        !det(&sub).is_negative()
    })
}

/// `b_rec` by trying every split sequence, without memoization.
pub fn b_rec_exhaustive(n: usize) -> u128 {
    if n <= 2 {
        return 0;
    }
    (1..=n)
        .map(|n1| {
            let n2 = n - n1;
            (n1 * (n1 - 1) / 2 * n2) as u128 + b_rec_exhaustive(n2)
        })
        .max()
        .unwrap()
}

/// Induced density of `f` in `h` by brute-force isomorphism of every subset.
pub fn brute_p(f: &Hypergraph3, h: &Hypergraph3) -> Rational {
    let k = f.n();
    let target = brute_canon(f);
    let subsets: Vec<Vec<u32>> = injections(h.n(), k)
        .into_iter()
        .filter(|s| s.windows(2).all(|w| w[0] < w[1]))
        .collect();
    let hits = subsets.iter().filter(|s| brute_canon(&h.induced(s)) == target).count();
    Rational::new(BigInt::from(hits), BigInt::from(subsets.len()))
}

/// Pair-density matrix by brute force: every injective root map and every
/// ordered pair of disjoint extension sets, classified by rooted brute-force
/// isomorphism against the given flags (roots first in each flag graph).
pub fn brute_pair_matrix(sigma: &Hypergraph3, flags: &[Hypergraph3], target: &Hypergraph3) -> Vec<Vec<Rational>> {
    let s = sigma.n();
    let flag_size = flags[0].n();
    let ext = flag_size - s;
    let forms: Vec<Vec<Edge>> = flags.iter().map(|f| brute_rooted_canon(f, s)).collect();
    let dim = flags.len();
    let mut counts = vec![vec![0u64; dim]; dim];
    let mut total = 0u64;
    let classify = |order: &[u32]| -> Option<usize> {
        let g = target.induced(order);
        let form = brute_rooted_canon(&g, s);
        forms.iter().position(|f| *f == form)
    };
    for theta in injections(target.n(), s) {
        let typed = all_triples(s)
            .iter()
            .all(|t| sigma.has_edge(t[0], t[1], t[2]) == target.has_edge(theta[t[0] as usize], theta[t[1] as usize], theta[t[2] as usize]));
        let rest: Vec<u32> = (0..target.n() as u32).filter(|v| !theta.contains(v)).collect();
        let sets: Vec<Vec<u32>> = injections(rest.len(), ext)
            .into_iter()
            .filter(|u| u.windows(2).all(|w| w[0] < w[1]))
            .map(|u| u.iter().map(|&i| rest[i as usize]).collect())
            .collect();
        for u1 in &sets {
            for u2 in &sets {
                if u1.iter().any(|v| u2.contains(v)) {
                    continue;
                }
                total += 1;
                if !typed {
                    continue;
                }
                let o1: Vec<u32> = theta.iter().chain(u1).copied().collect();
                let o2: Vec<u32> = theta.iter().chain(u2).copied().collect();
                if let (Some(i), Some(j)) = (classify(&o1), classify(&o2)) {
                    counts[i][j] += 1;
                }
            }
        }
    }
    counts
        .iter()
        .map(|row| row.iter().map(|&c| Rational::new(BigInt::from(c), BigInt::from(total))).collect())
        .collect()
}
