//! Independent oracles. Nothing here calls the crate's chain counting,
//! polynomial or lattice code; only the raw order relation is read.

#![allow(dead_code)]

use modlat::Poset;
use num_bigint::BigInt;

/// Bit `j` of entry `i` is set iff `i` and `j` are comparable.
pub fn comparability(p: &Poset) -> Vec<u64> {
    assert!(p.len() <= 64);
    (0..p.len())
        .map(|i| {
            (0..p.len())
                .filter(|&j| p.leq_idx(i, j) || p.leq_idx(j, i))
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect()
}

/// Chain counts by cardinality from testing every subset for pairwise
/// comparability.
pub fn f_by_subsets(p: &Poset) -> Vec<i128> {
    let n = p.len();
    assert!(n <= 24, "subset filter is exponential");
    let comp = comparability(p);
    let mut f = vec![0i128; n + 1];
    for mask in 0u64..(1u64 << n) {
        let mut rest = mask;
        let mut ok = true;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if mask & !comp[i] != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            f[mask.count_ones() as usize] += 1;
        }
    }
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

/// Chain counts from growing cliques of the comparability graph one
/// element at a time (each chain generated once, by increasing index).
pub fn f_by_cliques(p: &Poset) -> Vec<i128> {
    let n = p.len();
    let comp = comparability(p);
    let mut f = vec![0i128; n + 1];
    fn grow(start: usize, allowed: u64, size: usize, n: usize, comp: &[u64], f: &mut [i128]) {
        f[size] += 1;
        for v in start..n {
            if allowed >> v & 1 == 1 {
                grow(v + 1, allowed & comp[v], size + 1, n, comp, f);
            }
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    grow(0, all, 0, n, &comp, &mut f);
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

/// Every chain as a sorted index list, by brute force over subsets.
pub fn chains_by_subsets(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    assert!(n <= 16);
    let comp = comparability(p);
    (0u64..(1u64 << n))
        .filter(|&mask| (0..n).all(|i| mask >> i & 1 == 0 || mask & !comp[i] == 0))
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Maximal chains: chains no element can be added to.
pub fn maximal_chains_by_subsets(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let comp = comparability(p);
    chains_by_subsets(p)
        .into_iter()
        .filter(|c| !c.is_empty())
        .filter(|c| {
            let mask = c.iter().fold(0u64, |m, &i| m | 1 << i);
            (0..n).all(|v| mask >> v & 1 == 1 || mask & !comp[v] != 0)
        })
        .collect()
}

pub fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) / (i + 1))
}

/// `h_k = sum_{i <= k} (-1)^(k-i) C(d-i, k-i) f_i`, the coefficient of
/// `x^(d-k)` in `sum_i f_i (x-1)^(d-i)`.
pub fn h_by_formula(f: &[i128]) -> Vec<i128> {
    let d = f.len() as i128 - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * f[i as usize]
                })
                .sum()
        })
        .collect()
}

pub fn small(v: &[BigInt]) -> Vec<i128> {
    v.iter()
        .map(|x| i128::try_from(x).expect("fits in i128"))
        .collect()
}

pub fn big(v: &[i128]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Multichains of length `n` by explicit enumeration of non-decreasing
/// sequences.
pub fn multichains_by_enumeration(p: &Poset, n: usize) -> i128 {
    fn go(p: &Poset, last: Option<usize>, left: usize) -> i128 {
        if left == 0 {
            return 1;
        }
        (0..p.len())
            .filter(|&v| last.is_none_or(|u| p.leq_idx(u, v)))
            .map(|v| go(p, Some(v), left - 1))
            .sum()
    }
    go(p, None, n)
}
