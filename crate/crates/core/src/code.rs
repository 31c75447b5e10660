//! Evaluation codes `C_X(d)`: Hilbert function by exact rank, regularity,
//! minimum distance by exhaustive search, and closed forms for the torus.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElem, FieldSpec};
use crate::limits::Limits;
use crate::linalg::RowReducer;
use crate::monomial::{binomial_coeff, monomial_count, ExponentVector, MonomialBasis};
use crate::toric::ToricSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("degree {d}: {rows} x {cols} matrix exceeds the cap of {cap} entries")]
    MatrixTooLarge { d: u32, rows: String, cols: usize, cap: u64, partial: Vec<u64> },
    #[error("minimum distance search needs {needed} messages, above the cap of {cap}")]
    SearchTooLarge { needed: String, cap: u64 },
    #[error("degree {d} outside 1..{reg}")]
    OutOfRange { d: u32, reg: u32 },
    #[error("Hilbert function decreased at degree {d}: {prev} -> {cur}")]
    NonMonotone { d: u32, prev: u64, cur: u64 },
}

/// Value of `t^a` at each point of `X`.
pub fn monomial_row(x: &ToricSet, a: &ExponentVector) -> Vec<FieldElem> {
    let ord = x.field.unit_order() as u64;
    x.logs
        .iter()
        .map(|l| {
            let k: u64 = l.iter().zip(a.entries()).map(|(&li, &ai)| li as u64 * ai as u64).sum();
            x.field.exp(k % ord)
        })
        .collect()
}

fn check_matrix(x: &ToricSet, d: u32, limits: &Limits, partial: &[u64]) -> Result<(), CodeError> {
    let rows = monomial_count(x.s, d);
    let entries = rows.saturating_mul(x.len() as u128);
    if entries > limits.matrix as u128 {
        return Err(CodeError::MatrixTooLarge {
            d,
            rows: rows.to_string(),
            cols: x.len(),
            cap: limits.matrix,
            partial: partial.to_vec(),
        });
    }
    Ok(())
}

/// Rows `m(P)` for each degree-`d` monomial `m` (grevlex descending) and
/// each point `P` of `X`.
pub fn evaluation_matrix(x: &ToricSet, d: u32, limits: &Limits) -> Result<Vec<Vec<FieldElem>>, CodeError> {
    check_matrix(x, d, limits, &[])?;
    Ok(MonomialBasis::new(x.s, d).monomials.iter().map(|m| monomial_row(x, m)).collect())
}

/// Feeds the evaluation rows of degree `d` into a row reducer, generated one
/// monomial at a time. Exact repeats of an earlier row are skipped; they
/// cannot raise the rank.
fn reduce_degree(x: &ToricSet, d: u32) -> RowReducer {
    let mut reducer = RowReducer::new(&x.field, x.len());
    let mut seen: HashSet<Vec<FieldElem>> = HashSet::new();
    for m in MonomialBasis::new(x.s, d).monomials {
        let row = monomial_row(x, &m);
        if !seen.insert(row.clone()) {
            continue;
        }
        reducer.insert(row);
        if reducer.is_full() {
            break;
        }
    }
    reducer
}

/// `H_X(d)`, the rank over `F_q` of the degree-`d` evaluation matrix.
pub fn hilbert_function(x: &ToricSet, d: u32, limits: &Limits) -> Result<u64, CodeError> {
    check_matrix(x, d, limits, &[])?;
    Ok(reduce_degree(x, d).rank() as u64)
}

/// `H_X(d)` for `d = 0..=max_d` by counting distinct evaluation vectors.
///
/// Each monomial restricts to a character of the group `X`, and distinct
/// characters are linearly independent, so the rank is the number of distinct
/// rows. The set of degree-`d+1` rows is obtained from the degree-`d` rows by
/// multiplying with each variable, which avoids listing monomials at all.
/// Multiplication by `t_1` is injective on rows, so once two consecutive
/// counts agree the count is constant from then on.
pub fn hilbert_by_characters(x: &ToricSet, max_d: u32) -> Vec<u64> {
    let ord = x.field.unit_order();
    let var_logs: Vec<Vec<u32>> = (0..x.s).map(|i| x.logs.iter().map(|p| p[i]).collect()).collect();
    let mut current: HashSet<Vec<u32>> = HashSet::from([vec![0; x.len()]]);
    let mut out = vec![1u64];
    for _ in 0..max_d {
        let mut next = HashSet::with_capacity(current.len() * 2);
        for v in &current {
            for vl in &var_logs {
                next.insert(v.iter().zip(vl).map(|(&a, &b)| (a + b) % ord).collect::<Vec<u32>>());
            }
        }
        let stable = next.len() == current.len();
        out.push(next.len() as u64);
        current = next;
        if stable {
            break;
        }
    }
    let last = *out.last().expect("nonempty");
    out.resize(max_d as usize + 1, last);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HilbertMethod {
    /// Gaussian elimination on the evaluation matrix.
    #[default]
    Rank,
    /// Distinct-character count, see [`hilbert_by_characters`].
    Characters,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    /// `H_X(0), H_X(1), ...` up to the first degree reaching `|X|`.
    pub values: Vec<u64>,
    /// First `d` with `H_X(d) = |X|`, if reached within the degree limit.
    pub regularity: Option<u32>,
    /// `|X|`.
    pub degree: u64,
}

impl HilbertProfile {
    /// `H_X(d)` for any `d`, using stabilization past the regularity.
    pub fn value(&self, d: u32) -> Option<u64> {
        match self.values.get(d as usize) {
            Some(&v) => Some(v),
            None => self.regularity.map(|_| self.degree),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("d,H\n");
        for (d, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{d},{v}\n"));
        }
        out
    }
}

/// Computes `H_X(d)` for increasing `d` until it reaches `|X|`.
///
/// Without `max_d` the search runs to `|X| - 1`, where the Hilbert function
/// is known to have stabilized.
pub fn hilbert_profile(x: &ToricSet, max_d: Option<u32>, limits: &Limits) -> Result<HilbertProfile, CodeError> {
    hilbert_profile_with(x, max_d, limits, HilbertMethod::Rank)
}

pub fn hilbert_profile_with(
    x: &ToricSet,
    max_d: Option<u32>,
    limits: &Limits,
    method: HilbertMethod,
) -> Result<HilbertProfile, CodeError> {
    let target = x.len() as u64;
    let limit = max_d.unwrap_or((x.len() as u32).saturating_sub(1));
    let mut values: Vec<u64> = Vec::new();
    let chars = match method {
        HilbertMethod::Characters => Some(hilbert_by_characters(x, limit)),
        HilbertMethod::Rank => None,
    };
    for d in 0..=limit {
        let h = match &chars {
            Some(c) => c[d as usize],
            None => {
                check_matrix(x, d, limits, &values)?;
                reduce_degree(x, d).rank() as u64
            }
        };
        if let Some(&prev) = values.last() {
            if h < prev {
                return Err(CodeError::NonMonotone { d, prev, cur: h });
            }
        }
        values.push(h);
        if h == target {
            return Ok(HilbertProfile { values, regularity: Some(d), degree: target });
        }
    }
    Ok(HilbertProfile { values, regularity: None, degree: target })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub d: u32,
    pub length: u64,
    pub dimension: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_distance: Option<u64>,
}

/// A reduced row echelon generator matrix of `C_X(d)`.
pub fn generator_matrix(x: &ToricSet, d: u32, limits: &Limits) -> Result<Vec<Vec<FieldElem>>, CodeError> {
    check_matrix(x, d, limits, &[])?;
    Ok(reduce_degree(x, d).into_rref())
}

/// Parameters of `C_X(d)`; the minimum distance is optional.
pub fn code_params(x: &ToricSet, d: u32, want_min_distance: bool, limits: &Limits) -> Result<CodeParams, CodeError> {
    let basis = generator_matrix(x, d, limits)?;
    let dimension = basis.len() as u64;
    let length = x.len() as u64;
    let min_distance = if !want_min_distance {
        None
    } else if dimension == length {
        // The full space contains weight-one vectors.
        Some(1)
    } else {
        Some(min_distance(&x.field, &basis, limits)?)
    };
    Ok(CodeParams { d, length, dimension, min_distance })
}

/// Minimum Hamming weight of the nonzero codewords spanned by `basis`.
///
/// Each codeword is visited once up to scaling: the first nonzero message
/// coordinate is fixed to 1 and the remaining ones run over `F_q` like an
/// odometer, updating the codeword one row at a time.
pub fn min_distance(field: &FieldSpec, basis: &[Vec<FieldElem>], limits: &Limits) -> Result<u64, CodeError> {
    let k = basis.len();
    let q = field.q();
    let needed = BigUint::from(q).pow(k as u32);
    if needed > BigUint::from(limits.search) {
        return Err(CodeError::SearchTooLarge { needed: needed.to_string(), cap: limits.search });
    }
    let n = basis.first().map_or(0, Vec::len);
    let weight = |w: &[FieldElem]| w.iter().filter(|x| !x.is_zero()).count() as u64;
    let mut best = u64::MAX;
    let top = field.elem(q - 1).expect("q - 1 < q");
    for lead in 0..k {
        let mut word = basis[lead].clone();
        best = best.min(weight(&word));
        let tail = &basis[lead + 1..];
        let mut digits = vec![0u32; tail.len()];
        'odometer: loop {
            let mut i = 0;
            loop {
                if i == tail.len() {
                    break 'odometer;
                }
                let old = field.elem(digits[i]).expect("digit < q");
                let delta = if digits[i] + 1 < q {
                    digits[i] += 1;
                    field.sub(field.elem(digits[i]).expect("digit < q"), old)
                } else {
                    digits[i] = 0;
                    field.neg(top)
                };
                for (w, &r) in word.iter_mut().zip(&tail[i]) {
                    *w = field.add(*w, field.mul(delta, r));
                }
                if digits[i] != 0 {
                    break;
                }
                i += 1;
            }
            best = best.min(weight(&word));
            if best == 1 {
                return Ok(1);
            }
        }
    }
    Ok(if best == u64::MAX { n as u64 } else { best })
}

/// Regularity of the projective torus, `(s-1)(q-2)`.
pub fn torus_regularity(s: usize, q: u32) -> u32 {
    (s as u32 - 1) * (q - 2)
}

/// Closed-form dimension of `C_{T^{s-1}}(d)` as an alternating sum.
pub fn torus_dimension(s: usize, q: u32, d: u32) -> BigUint {
    let mut total = BigInt::from(0);
    let step = q - 1;
    for j in 0..=d / step {
        let term = BigInt::from(binomial_coeff(s as u64 - 1, j as u64))
            * BigInt::from(binomial_coeff((s - 1) as u64 + (d - j * step) as u64, s as u64 - 1));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total.to_biguint().expect("dimension is nonnegative")
}

/// Closed-form minimum distance of `C_{T^{s-1}}(d)` for `1 <= d < (s-1)(q-2)`.
pub fn torus_min_distance(s: usize, q: u32, d: u32) -> Result<BigUint, CodeError> {
    let reg = torus_regularity(s, q);
    if d == 0 || d >= reg {
        return Err(CodeError::OutOfRange { d, reg });
    }
    let k = (d - 1) / (q - 2);
    let l = d - k * (q - 2);
    let exp = s as u32 - (k + 2);
    Ok(BigUint::from(q - 1).pow(exp) * BigUint::from(q - 1 - l))
}

/// Coefficients of `(1 - t^{q-1})^{s-1} / (1 - t)^s` up to `t^up_to_d`.
pub fn torus_hilbert_series_coeffs(s: usize, q: u32, up_to_d: u32) -> Vec<BigUint> {
    let len = up_to_d as usize + 1;
    let step = (q - 1) as usize;
    let mut c = vec![BigInt::from(0); len];
    for j in 0..s {
        let pos = j * step;
        if pos >= len {
            break;
        }
        let b = BigInt::from(binomial_coeff(s as u64 - 1, j as u64));
        c[pos] = if j % 2 == 0 { b } else { -b };
    }
    // Dividing by (1 - t) is a prefix sum.
    for _ in 0..s {
        for i in 1..len {
            let prev = c[i - 1].clone();
            c[i] += prev;
        }
    }
    c.into_iter().map(|x| x.to_biguint().expect("coefficients are nonnegative")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::linalg::rank;
    use crate::toric::{enumerate_toric_set, projective_torus};

    fn f(q: u64) -> FieldSpec {
        FieldSpec::of_order(q).unwrap()
    }

    fn c(n: usize) -> Graph {
        let e: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Graph::from_edges(&e).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn evaluation_matrix_examples() {
        let l = Limits::default();
        let t1 = projective_torus(2, &f(3), &l).unwrap();
        let m0 = evaluation_matrix(&t1, 0, &l).unwrap();
        assert_eq!(m0, vec![vec![FieldElem::ONE; 2]]);
        let m1 = evaluation_matrix(&t1, 1, &l).unwrap();
        let r: Vec<Vec<u32>> = m1.iter().map(|row| row.iter().map(|x| x.repr()).collect()).collect();
        assert_eq!(r, vec![vec![1, 1], vec![1, 2]]);

        let x = enumerate_toric_set(&c(4), &f(3), &l).unwrap();
        let m = evaluation_matrix(&x, 1, &l).unwrap();
        assert_eq!((m.len(), m[0].len()), (4, 4));
        // plain elimination without row skipping
        assert_eq!(rank(&x.field, &m) as u64, hilbert_function(&x, 1, &l).unwrap());
        assert_eq!(hilbert_function(&x, 1, &l).unwrap(), 4);
    }

    #[test]
    fn hilbert_examples() {
        let l = Limits::default();
        let t2 = projective_torus(3, &f(3), &l).unwrap();
        assert_eq!(hilbert_function(&t2, 0, &l).unwrap(), 1);
        assert_eq!(hilbert_function(&t2, 2, &l).unwrap(), 4);
        assert_eq!(hilbert_profile(&t2, None, &l).unwrap().regularity, Some(2));

        for (k, want) in [(2usize, 1u32), (3, 2)] {
            let x = enumerate_toric_set(&c(2 * k), &f(3), &l).unwrap();
            assert_eq!(hilbert_profile(&x, None, &l).unwrap().regularity, Some(want));
        }
    }

    #[test]
    fn character_route_matches_rank() {
        let l = Limits::default();
        for (g, q) in [(c(4), 5), (c(6), 3), (c(3), 4), (c(5), 3)] {
            let x = enumerate_toric_set(&g, &f(q), &l).unwrap();
            let p = hilbert_profile(&x, None, &l).unwrap();
            let ch = hilbert_profile_with(&x, None, &l, HilbertMethod::Characters).unwrap();
            assert_eq!(p, ch);
        }
    }

    #[test]
    fn profile_caps_report_partial() {
        let x = enumerate_toric_set(&c(6), &f(3), &Limits::default()).unwrap();
        // 16 points; degree 1 has 6 rows = 96 entries, degree 2 has 21 rows
        let tight = Limits { matrix: 100, ..Limits::default() };
        match hilbert_profile(&x, None, &tight) {
            Err(CodeError::MatrixTooLarge { d: 2, partial, .. }) => assert_eq!(partial, vec![1, 6]),
            other => panic!("{other:?}"),
        }
        let p = hilbert_profile(&x, Some(1), &Limits::default()).unwrap();
        assert_eq!(p.regularity, None);
        assert_eq!(p.values.len(), 2);
    }

    #[test]
    fn code_params_examples() {
        let l = Limits::default();
        let t2 = projective_torus(3, &f(3), &l).unwrap();
        let p = code_params(&t2, 1, true, &l).unwrap();
        assert_eq!((p.length, p.dimension, p.min_distance), (4, 3, Some(2)));
        let p0 = code_params(&t2, 0, true, &l).unwrap();
        assert_eq!((p0.dimension, p0.min_distance), (1, Some(4)));
        let p2 = code_params(&t2, 2, true, &l).unwrap();
        assert_eq!(p2.min_distance, Some(1));
        let tight = Limits { search: 26, ..l };
        assert!(matches!(code_params(&t2, 1, true, &tight), Err(CodeError::SearchTooLarge { .. })));
    }

    /// Minimum weight by listing every message vector, no shortcuts.
    fn brute_min_distance(field: &FieldSpec, rows: &[Vec<FieldElem>]) -> u64 {
        let k = rows.len();
        let q = field.q();
        let n = rows[0].len();
        let mut best = u64::MAX;
        for idx in 1..(q as u64).pow(k as u32) {
            let mut w = vec![FieldElem::ZERO; n];
            let mut t = idx;
            for row in rows {
                let c = field.elem((t % q as u64) as u32).unwrap();
                t /= q as u64;
                for (x, &r) in w.iter_mut().zip(row) {
                    *x = field.add(*x, field.mul(c, r));
                }
            }
            let wt = w.iter().filter(|x| !x.is_zero()).count() as u64;
            if wt > 0 {
                best = best.min(wt);
            }
        }
        best
    }

    #[test]
    fn min_distance_matches_brute_force() {
        let l = Limits::default();
        for (g, q) in [(c(4), 4), (c(6), 3), (c(3), 5)] {
            let x = enumerate_toric_set(&g, &f(q), &l).unwrap();
            for d in 0..3 {
                let basis = generator_matrix(&x, d, &l).unwrap();
                if basis.len() == x.len() || (q as u64).pow(basis.len() as u32) > 100_000 {
                    continue;
                }
                let got = min_distance(&x.field, &basis, &l).unwrap();
                assert_eq!(got, brute_min_distance(&x.field, &basis));
            }
        }
    }

    #[test]
    fn torus_closed_forms() {
        assert_eq!(torus_dimension(4, 5, 0), big(1));
        assert_eq!(torus_dimension(3, 3, 2), big(4));
        for (s, q) in [(2usize, 3u32), (3, 4), (4, 5)] {
            let reg = torus_regularity(s, q);
            let full = big((q as u64 - 1).pow(s as u32 - 1));
            for d in reg..reg + 3 {
                assert_eq!(torus_dimension(s, q, d), full);
            }
            let series = torus_hilbert_series_coeffs(s, q, reg + 3);
            for d in 0..=reg + 3 {
                assert_eq!(series[d as usize], torus_dimension(s, q, d));
            }
        }
        let coeffs: Vec<BigUint> = torus_hilbert_series_coeffs(2, 3, 4);
        assert_eq!(coeffs, vec![big(1), big(2), big(2), big(2), big(2)]);
        assert_eq!(torus_min_distance(3, 4, 1).unwrap(), big(6));
        assert_eq!(torus_min_distance(3, 3, 1).unwrap(), big(2));
        assert_eq!(torus_min_distance(2, 5, 3), Err(CodeError::OutOfRange { d: 3, reg: 3 }));
        assert!(torus_min_distance(3, 4, 0).is_err());
    }
}
