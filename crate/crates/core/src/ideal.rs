//! Binomials `t^a - t^b`, membership in `I(X)` by evaluation, and graded
//! dimension checks for binomial ideals.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{hilbert_profile, CodeError};
use crate::field::{FieldElem, FieldSpec};
use crate::limits::Limits;
use crate::linalg::UnionFind;
use crate::monomial::{grevlex_cmp, monomial_count, monomials_of_degree, ExponentVector, MonomialBasis};
use crate::toric::ToricSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("binomial {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("binomial {0} admits no reduction step")]
    NotReducible(String),
    #[error("generators {offenders:?} (1-based) do not vanish on X")]
    GeneratorDoesNotVanish { offenders: Vec<usize> },
    #[error("degree {d}: {rows} rows over {cols} monomials exceed the cap of {cap}")]
    MatrixTooLarge { d: u32, rows: u128, cols: u128, cap: u64 },
    #[error("the given binomials do not generate I(X)")]
    NotGenerating,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// The binomial `t^a - t^b`. The zero binomial has `a = b`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Binomial {
    pub a: ExponentVector,
    pub b: ExponentVector,
}

impl Binomial {
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Self {
        assert_eq!(a.len(), b.len(), "exponent vectors must have equal length");
        Binomial { a: ExponentVector(a), b: ExponentVector(b) }
    }

    pub fn zero(s: usize) -> Self {
        Binomial { a: ExponentVector::zero(s), b: ExponentVector::zero(s) }
    }

    /// `t_i^e - t_j^e`, 0-based.
    pub fn pure_difference(s: usize, i: usize, j: usize, e: u32) -> Self {
        Binomial { a: ExponentVector::unit(s, i, e), b: ExponentVector::unit(s, j, e) }
    }

    pub fn s(&self) -> usize {
        self.a.len()
    }

    pub fn is_zero(&self) -> bool {
        self.a == self.b
    }

    pub fn is_homogeneous(&self) -> bool {
        self.a.degree() == self.b.degree()
    }

    /// Total degree of the larger term.
    pub fn degree(&self) -> u32 {
        self.a.degree().max(self.b.degree())
    }

    /// Homogeneous, disjoint supports, and every exponent at most `q - 2`.
    pub fn is_normalized(&self, q: u32) -> bool {
        self.is_homogeneous()
            && self.a.coprime(&self.b)
            && self.a.entries().iter().chain(self.b.entries()).all(|&e| e + 2 <= q)
    }

    /// The grevlex-larger of the two terms.
    pub fn leading(&self) -> &ExponentVector {
        if grevlex_cmp(&self.a, &self.b) == Ordering::Less {
            &self.b
        } else {
            &self.a
        }
    }

    /// `t^b - t^a`.
    pub fn negated(&self) -> Binomial {
        Binomial { a: self.b.clone(), b: self.a.clone() }
    }

    /// Removes the common factor `gcd(t^a, t^b)`.
    pub fn strip_gcd(&self) -> Binomial {
        let c = self.a.gcd(&self.b);
        Binomial { a: self.a.sub(&c), b: self.b.sub(&c) }
    }

    /// Binomial-file line: `a_1 ... a_s | b_1 ... b_s`.
    pub fn to_line(&self) -> String {
        let join = |v: &ExponentVector| v.entries().iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        format!("{} | {}", join(&self.a), join(&self.b))
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{} - {}", self.a, self.b)
    }
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a binomial file. When `s` is given every line must have that many
/// exponents per side.
pub fn parse_binomials(text: &str, s: Option<usize>) -> Result<Vec<Binomial>, IdealError> {
    let mut out = Vec::new();
    let mut width = s;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| IdealError::Parse { line: lineno + 1, msg };
        let (left, right) = line.split_once('|').ok_or_else(|| err("missing '|'".into()))?;
        let side = |t: &str| -> Result<Vec<u32>, IdealError> {
            t.split_whitespace()
                .map(|x| x.parse::<u32>().map_err(|_| err(format!("invalid exponent {x:?}"))))
                .collect()
        };
        let (a, b) = (side(left)?, side(right)?);
        if a.len() != b.len() {
            return Err(err(format!("sides have {} and {} exponents", a.len(), b.len())));
        }
        match width {
            Some(w) if w != a.len() => return Err(err(format!("expected {w} exponents, got {}", a.len()))),
            None => width = Some(a.len()),
            _ => {}
        }
        out.push(Binomial::new(a, b));
    }
    Ok(out)
}

pub fn format_binomials(gens: &[Binomial]) -> String {
    gens.iter().map(|g| g.to_line() + "\n").collect()
}

/// `t^a(P) - t^b(P)` by repeated field multiplication.
pub fn evaluate_binomial(field: &FieldSpec, f: &Binomial, point: &[FieldElem]) -> FieldElem {
    let term = |e: &ExponentVector| {
        e.entries().iter().zip(point).fold(FieldElem::ONE, |acc, (&k, &x)| field.mul(acc, field.pow(x, k as u64)))
    };
    field.sub(term(&f.a), term(&f.b))
}

/// Index of a point of `X` where `f` does not vanish.
pub fn non_vanishing_point(f: &Binomial, x: &ToricSet) -> Option<usize> {
    x.points.iter().position(|p| !evaluate_binomial(&x.field, f, p).is_zero())
}

/// Membership of a homogeneous binomial in `I(X)`.
pub fn vanishes_on(f: &Binomial, x: &ToricSet) -> Result<bool, IdealError> {
    if !f.is_homogeneous() {
        return Err(IdealError::NotHomogeneous(f.to_string()));
    }
    Ok(non_vanishing_point(f, x).is_none())
}

/// One exponent-lowering step.
///
/// With `i` the smallest index having `a_i >= q - 1` and `j` the smallest
/// index in `supp(b)`, writes `t^a = t_i^{q-1} t^{a'}` and `t^b = t_j t^{b'}`
/// and returns `g = t_j^{q-2} t^{a'} - t^{b'}` together with `j` (0-based).
/// Then `f - t_j g` lies in the ideal of the torus.
pub fn reduce_exponent_step(f: &Binomial, q: u32) -> Result<(Binomial, usize), IdealError> {
    let not = || IdealError::NotReducible(f.to_string());
    if !f.a.coprime(&f.b) {
        return Err(not());
    }
    let i = f.a.entries().iter().position(|&e| e + 1 >= q).ok_or_else(not)?;
    let j = *f.b.support().first().ok_or_else(not)?;
    let s = f.s();
    let a_rest = f.a.sub(&ExponentVector::unit(s, i, q - 1));
    let b_rest = f.b.sub(&ExponentVector::unit(s, j, 1));
    let g = Binomial { a: a_rest.add(&ExponentVector::unit(s, j, q - 2)), b: b_rest };
    Ok((g, j))
}

/// Reduces a homogeneous binomial to the normal form with disjoint supports
/// and exponents at most `q - 2`, or to the zero binomial.
pub fn normalize_binomial(f: &Binomial, q: u32) -> Result<Binomial, IdealError> {
    if !f.is_homogeneous() {
        return Err(IdealError::NotHomogeneous(f.to_string()));
    }
    let mut cur = f.strip_gcd();
    loop {
        if cur.is_zero() {
            return Ok(Binomial::zero(f.s()));
        }
        let big = |e: &ExponentVector| e.entries().iter().any(|&x| x + 1 >= q);
        cur = if big(&cur.a) {
            reduce_exponent_step(&cur, q)?.0
        } else if big(&cur.b) {
            reduce_exponent_step(&cur.negated(), q)?.0.negated()
        } else {
            return Ok(cur);
        }
        .strip_gcd();
    }
}

/// The degree-`d` piece of the ideal generated by a set of binomials.
///
/// Every spanning row `m (t^a - t^b)` has exactly two nonzero entries of
/// opposite sign, so the row space is that of a graph incidence matrix on the
/// monomials: its rank is the number of monomials minus the number of
/// connected components, and `t^u - t^v` lies in it exactly when `u` and `v`
/// are connected.
pub struct GradedPiece {
    basis: MonomialBasis,
    uf: UnionFind,
}

impl GradedPiece {
    pub fn build(gens: &[&Binomial], d: u32, s: usize, limits: &Limits) -> Result<GradedPiece, IdealError> {
        for g in gens {
            if !g.is_homogeneous() {
                return Err(IdealError::NotHomogeneous(g.to_string()));
            }
        }
        let cols = monomial_count(s, d);
        let rows: u128 = gens
            .iter()
            .filter(|g| !g.is_zero() && g.degree() <= d)
            .map(|g| monomial_count(s, d - g.degree()))
            .sum();
        if cols > limits.matrix as u128 || rows > limits.matrix as u128 {
            return Err(IdealError::MatrixTooLarge { d, rows, cols, cap: limits.matrix });
        }
        let basis = MonomialBasis::new(s, d);
        let mut uf = UnionFind::new(basis.len());
        for g in gens {
            if g.is_zero() || g.degree() > d {
                continue;
            }
            for m in monomials_of_degree(s, d - g.degree()) {
                let u = basis.index_of(&m.add(&g.a)).expect("degree d monomial");
                let v = basis.index_of(&m.add(&g.b)).expect("degree d monomial");
                uf.union(u, v);
            }
        }
        Ok(GradedPiece { basis, uf })
    }

    pub fn dim(&self) -> u64 {
        self.uf.merges() as u64
    }

    /// Whether the homogeneous binomial of degree `d` lies in this piece.
    pub fn contains(&mut self, f: &Binomial) -> bool {
        match (self.basis.index_of(&f.a), self.basis.index_of(&f.b)) {
            (Some(u), Some(v)) => self.uf.find(u) == self.uf.find(v),
            _ => false,
        }
    }
}

/// `dim_K J_d` for `J` generated by `gens`.
pub fn ideal_dim_at_degree(gens: &[Binomial], d: u32, s: usize, limits: &Limits) -> Result<u64, IdealError> {
    let refs: Vec<&Binomial> = gens.iter().collect();
    Ok(GradedPiece::build(&refs, d, s, limits)?.dim())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub d: u32,
    /// `dim S_d`.
    pub dim_s: u64,
    /// `dim J_d` for the candidate set.
    pub dim_j: u64,
    /// `dim I(X)_d = dim S_d - H_X(d)`.
    pub dim_i: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenSetReport {
    pub generators: usize,
    pub vanishes: Vec<bool>,
    pub degrees: Vec<DegreeCheck>,
    pub regularity: u32,
    /// `reg + 1`, a bound on the largest degree of a minimal generator.
    pub regularity_bound: u32,
    /// `floor(s/2)(q-2)`, only valid when `s >= 4`.
    pub combinatorial_bound: Option<u32>,
    pub verified_up_to: u32,
    pub generates: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal: Option<bool>,
    /// 1-based indices of generators found redundant.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub redundant: Vec<usize>,
}

impl GenSetReport {
    /// First degree where the candidate set falls short of `I(X)`.
    pub fn first_deficit(&self) -> Option<&DegreeCheck> {
        self.degrees.iter().find(|c| c.dim_j != c.dim_i)
    }
}

/// Checks that `gens` vanish on `X` and span `I(X)_d` for every `d <= N`.
///
/// Without an explicit `n`, `N = min(reg + 1, floor(s/2)(q-2))`, the second
/// bound being used only when `s >= 4`.
pub fn verify_generating_set(
    gens: &[Binomial],
    x: &ToricSet,
    n: Option<u32>,
    limits: &Limits,
) -> Result<GenSetReport, IdealError> {
    let mut offenders = Vec::new();
    let mut vanishes = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let ok = vanishes_on(g, x)?;
        if !ok {
            offenders.push(i + 1);
        }
        vanishes.push(ok);
    }
    if !offenders.is_empty() {
        return Err(IdealError::GeneratorDoesNotVanish { offenders });
    }
    let profile = hilbert_profile(x, None, limits)?;
    let reg = profile.regularity.expect("the profile stabilizes by |X| - 1");
    let s = x.s;
    let q = x.field.q();
    let combinatorial_bound = (s >= 4).then(|| (s as u32 / 2) * (q - 2));
    let bound = combinatorial_bound.map_or(reg + 1, |c| c.min(reg + 1));
    let n = n.unwrap_or(bound);
    let refs: Vec<&Binomial> = gens.iter().collect();
    let mut degrees = Vec::new();
    for d in 0..=n {
        let dim_s = monomial_count(s, d) as u64;
        let dim_i = dim_s - profile.value(d).expect("stabilized");
        let dim_j = GradedPiece::build(&refs, d, s, limits)?.dim();
        degrees.push(DegreeCheck { d, dim_s, dim_j, dim_i });
    }
    let generates = degrees.iter().all(|c| c.dim_j == c.dim_i);
    Ok(GenSetReport {
        generators: gens.len(),
        vanishes,
        degrees,
        regularity: reg,
        regularity_bound: reg + 1,
        combinatorial_bound,
        verified_up_to: n,
        generates,
        minimal: None,
        redundant: Vec::new(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Minimalization {
    /// 0-based indices kept, in input order.
    pub kept: Vec<usize>,
    /// 0-based indices dropped, with the degree at which each was found
    /// dependent on the others.
    pub redundant: Vec<(usize, u32)>,
    pub report: GenSetReport,
}

/// Greedy redundancy pass: visits generators by ascending degree, then
/// ascending grevlex order of the leading monomial, then input position, and
/// drops each one lying in the ideal of the generators still present.
///
/// Returns the dropped 0-based indices with their degrees.
pub fn redundant_generators(gens: &[Binomial], s: usize, limits: &Limits) -> Result<Vec<(usize, u32)>, IdealError> {
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by(|&i, &j| {
        gens[i]
            .degree()
            .cmp(&gens[j].degree())
            .then_with(|| grevlex_cmp(gens[i].leading(), gens[j].leading()))
            .then(i.cmp(&j))
    });
    let mut active = vec![true; gens.len()];
    let mut redundant = Vec::new();
    for &i in &order {
        let g = &gens[i];
        let d = g.degree();
        let drop = g.is_zero() || {
            let others: Vec<&Binomial> =
                (0..gens.len()).filter(|&j| j != i && active[j]).map(|j| &gens[j]).collect();
            GradedPiece::build(&others, d, s, limits)?.contains(g)
        };
        if drop {
            active[i] = false;
            redundant.push((i, d));
        }
    }
    Ok(redundant)
}

/// Verifies `gens`, drops redundant generators and re-verifies the rest.
pub fn minimalize(gens: &[Binomial], x: &ToricSet, limits: &Limits) -> Result<Minimalization, IdealError> {
    let first = verify_generating_set(gens, x, None, limits)?;
    if !first.generates {
        return Err(IdealError::NotGenerating);
    }
    let redundant = redundant_generators(gens, x.s, limits)?;
    let dropped: Vec<usize> = redundant.iter().map(|&(i, _)| i).collect();
    let kept: Vec<usize> = (0..gens.len()).filter(|i| !dropped.contains(i)).collect();
    let kept_gens: Vec<Binomial> = kept.iter().map(|&i| gens[i].clone()).collect();
    let mut report = verify_generating_set(&kept_gens, x, None, limits)?;
    if !report.generates {
        return Err(IdealError::NotGenerating);
    }
    let mut labels: Vec<usize> = dropped.iter().map(|i| i + 1).collect();
    labels.sort_unstable();
    report.minimal = Some(redundant.is_empty());
    report.redundant = labels;
    Ok(Minimalization { kept, redundant, report })
}
