//! Independent prime-field oracles: plain `u64` arithmetic mod `p`, no log
//! tables, no shared code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Points of the toric set of a graph (1-based edges on `n` vertices) over
/// `F_p`, normalized so the first coordinate is 1.
pub fn naive_points(n: usize, edges: &[(usize, usize)], p: u64) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    let mut x = vec![1u64; n];
    loop {
        let raw: Vec<u64> = edges.iter().map(|&(u, v)| x[u - 1] * x[v - 1] % p).collect();
        let c = inv_mod(raw[0], p);
        out.insert(raw.iter().map(|&y| y * c % p).collect());
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 1;
            i += 1;
        }
    }
}

/// Points `(1, y_2, ..., y_s)` of the projective torus over `F_p`.
pub fn naive_torus(s: usize, p: u64) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    let mut y = vec![1u64; s];
    loop {
        out.insert(y.clone());
        let mut i = 1;
        loop {
            if i == s {
                return out;
            }
            y[i] += 1;
            if y[i] < p {
                break;
            }
            y[i] = 1;
            i += 1;
        }
    }
}

/// Exponent vectors of degree `d` in `s` variables, by recursion.
pub fn exponents(s: usize, d: u32) -> Vec<Vec<u32>> {
    if s == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in exponents(s - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let c = inv_mod(rows[rank][col], p);
        for v in rows[rank].iter_mut() {
            *v = *v * c % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for k in 0..ncols {
                    rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A maximal independent subset of `rows`, in order.
pub fn basis_rows(rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let mut kept: Vec<Vec<u64>> = Vec::new();
    for r in rows {
        let mut trial = kept.clone();
        trial.push(r.clone());
        if rank_mod_p(trial, p) > kept.len() {
            kept.push(r);
        }
    }
    kept
}

pub fn evaluation_rows(points: &BTreeSet<Vec<u64>>, d: u32, p: u64) -> Vec<Vec<u64>> {
    let s = points.iter().next().map_or(0, Vec::len);
    exponents(s, d)
        .into_iter()
        .map(|a| {
            points
                .iter()
                .map(|pt| pt.iter().zip(&a).fold(1, |acc, (&x, &e)| acc * pow_mod(x, e as u64, p) % p))
                .collect()
        })
        .collect()
}

pub fn naive_hilbert(points: &BTreeSet<Vec<u64>>, d: u32, p: u64) -> usize {
    rank_mod_p(evaluation_rows(points, d, p), p)
}

/// Minimum nonzero weight over every `F_p`-combination of `rows`.
pub fn brute_min_distance(rows: &[Vec<u64>], p: u64) -> usize {
    let n = rows[0].len();
    let k = rows.len();
    let mut best = usize::MAX;
    let mut coeffs = vec![0u64; k];
    loop {
        let mut i = 0;
        loop {
            if i == k {
                return best;
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        let w = (0..n).filter(|&j| (0..k).map(|r| coeffs[r] * rows[r][j]).sum::<u64>() % p != 0).count();
        if w > 0 {
            best = best.min(w);
        }
    }
}

/// Does `t^a - t^b` vanish on every point?
pub fn naive_vanishes(a: &[u32], b: &[u32], points: &BTreeSet<Vec<u64>>, p: u64) -> bool {
    let mono = |e: &[u32], pt: &[u64]| pt.iter().zip(e).fold(1, |acc, (&x, &k)| acc * pow_mod(x, k as u64, p) % p);
    points.iter().all(|pt| mono(a, pt) == mono(b, pt))
}
