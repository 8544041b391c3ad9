//! Subset and injection iteration over small vertex sets.

use alloc::vec::Vec;

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Colex rank of a strictly increasing triple `a < b < c`.
#[inline]
pub fn triple_rank(a: u32, b: u32, c: u32) -> usize {
    let (a, b, c) = (a as usize, b as usize, c as usize);
    c * (c.wrapping_sub(1)) * (c.wrapping_sub(2)) / 6 + b * (b.wrapping_sub(1)) / 2 + a
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[u32])) {
    if k > n {
        return;
    }
    let mut idx: Vec<u32> = (0..k as u32).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if (idx[i] as usize) < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Calls `f` with every injective `k`-tuple into `0..n`.
pub fn for_each_injection(n: usize, k: usize, mut f: impl FnMut(&[u32])) {
    fn rec(n: usize, k: usize, tuple: &mut Vec<u32>, used: &mut [bool], f: &mut dyn FnMut(&[u32])) {
        if tuple.len() == k {
            f(tuple);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                tuple.push(v as u32);
                rec(n, k, tuple, used, f);
                tuple.pop();
                used[v] = false;
            }
        }
    }
    if k > n {
        return;
    }
    let mut used = alloc::vec![false; n];
    rec(n, k, &mut Vec::with_capacity(k), &mut used, &mut f);
}

/// All `k`-subsets of `items`, each as a new vector.
pub fn subsets_of(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_subset(items.len(), k, |s| out.push(s.iter().map(|&i| items[i as usize]).collect()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        for n in 0..8 {
            for k in 0..=n + 1 {
                let mut count = 0u128;
                for_each_subset(n, k, |_| count += 1);
                assert_eq!(count, binomial(n as u64, k as u64), "n={n} k={k}");
            }
        }
        let mut count = 0;
        for_each_injection(5, 3, |_| count += 1);
        assert_eq!(count, 60);
    }

    #[test]
    fn colex_rank_is_dense() {
        let mut seen = alloc::vec![false; 35];
        for_each_subset(7, 3, |s| {
            let r = triple_rank(s[0], s[1], s[2]);
            assert!(!seen[r]);
            seen[r] = true;
        });
        assert!(seen.iter().all(|&b| b));
    }
}
