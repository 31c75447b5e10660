//! Exponent vectors, monomial orders and graded monomial bases.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// An exponent vector `a` in `N^s`, standing for the monomial `t^a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(s: usize) -> Self {
        ExponentVector(vec![0; s])
    }

    /// `t_i^e` with a 0-based index.
    pub fn unit(s: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; s];
        v[i] = e;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// 0-based indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(x, y)| x <= y)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    /// `self - other`; caller guarantees `other` divides `self`.
    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(x, y)| x - y).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&x, &y)| x.max(y)).collect())
    }

    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&x, &y)| x.min(y)).collect())
    }

    pub fn coprime(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&x, &y)| x == 0 || y == 0)
    }

    /// Exchanges the exponents of two variables.
    pub fn swapped(&self, i: usize, j: usize) -> ExponentVector {
        let mut v = self.0.clone();
        v.swap(i, j);
        ExponentVector(v)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Renders `t^a` as e.g. `t1^2*t3`, or `1` for the empty monomial.
impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "t{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Monomial order with variable priority `t_1 > t_2 > ... > t_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    /// Reverse lexicographic without the degree comparison. It agrees with
    /// grevlex on monomials of equal degree, so on homogeneous binomial input
    /// the two give identical leading terms.
    Revlex,
}

impl MonomialOrder {
    pub fn compare(self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex_cmp(a, b),
            MonomialOrder::Revlex => revlex_tiebreak(a, b),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex t1>...>ts",
            MonomialOrder::Revlex => "revlex t1>...>ts",
        }
    }
}

fn revlex_tiebreak(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        if x != y {
            // smaller exponent on the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Graded reverse lexicographic comparison, `t_1 > ... > t_s`.
pub fn grevlex_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| revlex_tiebreak(a, b))
}

/// `C(n, k)` exactly; saturates at `u128::MAX` on overflow.
pub fn binomial_coeff(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays an integer at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of monomials of degree `d` in `s` variables.
pub fn monomial_count(s: usize, d: u32) -> u128 {
    if s == 0 {
        return (d == 0) as u128;
    }
    binomial_coeff(s as u64 - 1 + d as u64, s as u64 - 1)
}

/// All exponent vectors of total degree `d` in `s` variables, in no
/// particular order.
pub fn monomials_of_degree(s: usize, d: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; s];
    fill(&mut cur, 0, d, &mut out);
    out
}

fn fill(cur: &mut [u32], i: usize, left: u32, out: &mut Vec<ExponentVector>) {
    let s = cur.len();
    if s == 0 {
        if left == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return;
    }
    if i == s - 1 {
        cur[i] = left;
        out.push(ExponentVector(cur.to_vec()));
        cur[i] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

/// The degree-`d` monomials in `s` variables, sorted descending in grevlex.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    pub s: usize,
    pub d: u32,
    pub monomials: Vec<ExponentVector>,
    index: HashMap<ExponentVector, usize>,
}

impl MonomialBasis {
    pub fn new(s: usize, d: u32) -> Self {
        let mut monomials = monomials_of_degree(s, d);
        monomials.sort_by(|a, b| grevlex_cmp(b, a));
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis { s, d, monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &ExponentVector) -> Option<usize> {
        self.index.get(m).copied()
    }
}
