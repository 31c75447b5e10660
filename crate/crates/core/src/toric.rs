//! The toric set `X` parameterized by a graph, and its cardinality formulas.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElem, FieldSpec};
use crate::graph::{components, gamma, ComponentInfo, Graph};
use crate::limits::Limits;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("enumeration needs {needed} candidates, above the cap of {cap}")]
    EnumerationTooLarge { needed: String, cap: u64 },
    #[error("projective torus needs s >= 2, got {0}")]
    TooFewCoordinates(usize),
}

/// Distinct points of a toric set, each scaled so its first coordinate is 1.
///
/// Points are sorted lexicographically by representation. Alongside each point
/// the discrete logs of its coordinates are kept, since every monomial
/// evaluation downstream is a sum of logs.
#[derive(Debug, Clone, Serialize)]
pub struct ToricSet {
    pub field: FieldSpec,
    pub s: usize,
    pub points: Vec<Vec<FieldElem>>,
    #[serde(skip)]
    pub logs: Vec<Vec<u32>>,
}

impl ToricSet {
    /// Builds the set from (possibly unnormalized, possibly repeated) log
    /// vectors.
    pub fn from_logs<I>(field: &FieldSpec, s: usize, vectors: I) -> ToricSet
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let ord = field.unit_order();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for v in vectors {
            let l0 = v[0];
            let norm: Vec<u32> = v.iter().map(|&l| (l + ord - l0) % ord).collect();
            seen.insert(norm);
        }
        let mut pairs: Vec<(Vec<FieldElem>, Vec<u32>)> = seen
            .into_iter()
            .map(|l| (l.iter().map(|&x| field.exp(x as u64)).collect(), l))
            .collect();
        pairs.sort();
        let (points, logs) = pairs.into_iter().unzip();
        ToricSet { field: field.clone(), s, points, logs }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Whether a normalized point (first coordinate 1) belongs to the set.
    pub fn contains(&self, point: &[FieldElem]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(point)).is_ok()
    }

    /// Normalizes an arbitrary torus point by its first coordinate.
    pub fn normalize(&self, point: &[FieldElem]) -> Vec<FieldElem> {
        let f = &self.field;
        let inv = f.inv(point[0]).expect("torus points have nonzero coordinates");
        point.iter().map(|&x| f.mul(x, inv)).collect()
    }

    /// CSV export, one point per row, coordinates as representations.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&(1..=self.s).map(|i| format!("x{i}")).collect::<Vec<_>>().join(","));
        out.push('\n');
        for p in &self.points {
            out.push_str(&p.iter().map(|x| x.repr().to_string()).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

fn check_cap(base: u32, exp: usize, cap: u64) -> Result<(), ToricError> {
    let needed = BigUint::from(base).pow(exp as u32);
    if needed > BigUint::from(cap) {
        return Err(ToricError::EnumerationTooLarge { needed: needed.to_string(), cap });
    }
    Ok(())
}

/// Calls `visit` on every vector of `[0, base)^len`, in lexicographic order.
fn for_each_vector(base: u32, len: usize, mut visit: impl FnMut(&[u32])) {
    let mut v = vec![0u32; len];
    loop {
        visit(&v);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < base {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Enumerates `X = {[x^{nu_1} : ... : x^{nu_s}] : x in (K*)^n}`.
///
/// Works in log space: the edge `{u, v}` evaluates to `g^(l_u + l_v)`.
pub fn enumerate_toric_set(g: &Graph, field: &FieldSpec, limits: &Limits) -> Result<ToricSet, ToricError> {
    let ord = field.unit_order();
    check_cap(ord, g.n(), limits.enumeration)?;
    let edges = g.edges();
    let mut vectors = Vec::new();
    let mut seen = HashSet::new();
    for_each_vector(ord, g.n(), |x| {
        let l0 = (x[edges[0].0] + x[edges[0].1]) % ord;
        let v: Vec<u32> = edges.iter().map(|&(u, w)| (x[u] + x[w] + 2 * ord - l0) % ord).collect();
        if seen.insert(v.clone()) {
            vectors.push(v);
        }
    });
    Ok(ToricSet::from_logs(field, g.s(), vectors))
}

/// The projective torus `T^{s-1}`: all `(1, y_2, ..., y_s)` with `y_i` nonzero.
pub fn projective_torus(s: usize, field: &FieldSpec, limits: &Limits) -> Result<ToricSet, ToricError> {
    if s < 2 {
        return Err(ToricError::TooFewCoordinates(s));
    }
    let ord = field.unit_order();
    check_cap(ord, s - 1, limits.enumeration)?;
    let mut vectors = Vec::new();
    for_each_vector(ord, s - 1, |y| {
        let mut v = Vec::with_capacity(s);
        v.push(0);
        v.extend_from_slice(y);
        vectors.push(v);
    });
    Ok(ToricSet::from_logs(field, s, vectors))
}

/// Closed form for `|X|` from the component structure of the graph.
pub fn length_formula(g: &Graph, field: &FieldSpec) -> BigUint {
    let comps = components(g);
    let m = comps.len() as i64;
    let gam = gamma(&comps) as i64;
    let n = g.n() as i64;
    let base = BigUint::from(field.unit_order());
    if gam == 0 {
        return base.pow((n - m - 1) as u32);
    }
    let value = base.pow((n - m + gam - 1) as u32);
    if field.q() % 2 == 1 {
        // (q-1)^(n-m+gamma-1) is divisible by 2^(gamma-1) since gamma <= n-m+gamma-1.
        value >> (gam - 1) as usize
    } else {
        value
    }
}

/// Order of the kernel of the normalized edge map restricted to one
/// connected component.
pub fn kernel_order(comp: &ComponentInfo, field: &FieldSpec) -> u64 {
    let q = field.q() as u64;
    if comp.bipartite || q % 2 == 0 {
        q - 1
    } else {
        (q - 1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(e).unwrap()
    }

    fn brute_size(g: &Graph, f: &FieldSpec) -> usize {
        // Independent of the log-space route: evaluate x^nu with field products.
        let units = f.units();
        let mut set = HashSet::new();
        for_each_vector(f.unit_order(), g.n(), |idx| {
            let x: Vec<FieldElem> = idx.iter().map(|&i| units[i as usize]).collect();
            let pt: Vec<FieldElem> = g.edges().iter().map(|&(u, v)| f.mul(x[u], x[v])).collect();
            let inv = f.inv(pt[0]).unwrap();
            set.insert(pt.iter().map(|&y| f.mul(y, inv)).collect::<Vec<_>>());
        });
        set.len()
    }

    #[test]
    fn small_examples() {
        let l = Limits::default();
        let f3 = FieldSpec::prime(3).unwrap();
        let tri = graph(&[(1, 2), (2, 3), (3, 1)]);
        let sq = graph(&[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(enumerate_toric_set(&tri, &f3, &l).unwrap().len(), 4);
        assert_eq!(enumerate_toric_set(&sq, &f3, &l).unwrap().len(), 4);
        assert_eq!(brute_size(&tri, &f3), 4);
    }

    #[test]
    fn triangle_plus_square() {
        let l = Limits::default();
        let g = graph(&[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 7), (7, 4)]);
        let f5 = FieldSpec::prime(5).unwrap();
        let f4 = FieldSpec::of_order(4).unwrap();
        assert_eq!(enumerate_toric_set(&g, &f5, &l).unwrap().len(), 1024);
        assert_eq!(length_formula(&g, &f5), BigUint::from(1024u32));
        assert_eq!(enumerate_toric_set(&g, &f4, &l).unwrap().len(), 243);
        assert_eq!(length_formula(&g, &f4), BigUint::from(243u32));
    }

    #[test]
    fn torus_points() {
        let l = Limits::default();
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(projective_torus(2, &f3, &l).unwrap().len(), 2);
        assert_eq!(projective_torus(3, &FieldSpec::of_order(4).unwrap(), &l).unwrap().len(), 9);
        let f5 = FieldSpec::prime(5).unwrap();
        let t = projective_torus(2, &f5, &l).unwrap();
        let reprs: Vec<Vec<u32>> = t.points.iter().map(|p| p.iter().map(|x| x.repr()).collect()).collect();
        assert_eq!(reprs, vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![1, 4]]);
        assert!(matches!(projective_torus(1, &f3, &l), Err(ToricError::TooFewCoordinates(1))));
    }

    #[test]
    fn points_are_normalized_and_sorted() {
        let f = FieldSpec::of_order(9).unwrap();
        let g = graph(&[(1, 2), (2, 3), (3, 4), (4, 1), (1, 5)]);
        let x = enumerate_toric_set(&g, &f, &Limits::default()).unwrap();
        assert!(x.points.iter().all(|p| p[0] == FieldElem::ONE && p.iter().all(|c| !c.is_zero())));
        assert!(x.points.windows(2).all(|w| w[0] < w[1]));
        for (p, l) in x.points.iter().zip(&x.logs) {
            assert_eq!(p, &l.iter().map(|&k| f.exp(k as u64)).collect::<Vec<_>>());
        }
        assert_eq!(x.len(), brute_size(&g, &f));
    }

    #[test]
    fn cap_is_enforced() {
        let g = graph(&[(1, 2), (2, 3), (3, 1)]);
        let f = FieldSpec::prime(5).unwrap();
        let tight = Limits { enumeration: 63, ..Limits::default() };
        assert!(matches!(enumerate_toric_set(&g, &f, &tight), Err(ToricError::EnumerationTooLarge { .. })));
        let ok = Limits { enumeration: 64, ..Limits::default() };
        assert!(enumerate_toric_set(&g, &f, &ok).is_ok());
    }

    #[test]
    fn kernel_orders() {
        let tri = graph(&[(1, 2), (2, 3), (3, 1)]);
        let sq = graph(&[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let f5 = FieldSpec::prime(5).unwrap();
        let f4 = FieldSpec::of_order(4).unwrap();
        assert_eq!(kernel_order(&components(&tri)[0], &f5), 2);
        assert_eq!(kernel_order(&components(&tri)[0], &f4), 3);
        assert_eq!(kernel_order(&components(&sq)[0], &f5), 4);
    }

    #[test]
    fn csv_export() {
        let f3 = FieldSpec::prime(3).unwrap();
        let t = projective_torus(2, &f3, &Limits::default()).unwrap();
        assert_eq!(t.to_csv(), "x1,x2\n1,1\n1,2\n");
    }
}
