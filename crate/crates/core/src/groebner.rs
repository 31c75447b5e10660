//! Just enough Buchberger machinery over `F_q` to test whether a binomial
//! set is a Gröbner basis.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElem, FieldSpec};
use crate::generators::conjectured_basis;
use crate::graph::Graph;
use crate::ideal::{redundant_generators, verify_generating_set, Binomial};
use crate::limits::Limits;
use crate::monomial::{ExponentVector, MonomialOrder};
use crate::toric::enumerate_toric_set;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("Buchberger completion exceeded {cap} basis elements")]
    TooLarge { cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: FieldElem,
    pub exp: ExponentVector,
}

/// A polynomial with terms sorted strictly descending under `order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    pub terms: Vec<Term>,
    pub order: MonomialOrder,
}

impl Poly {
    pub fn zero(order: MonomialOrder) -> Self {
        Poly { terms: Vec::new(), order }
    }

    /// Sorts, merges equal exponents and drops zero coefficients.
    pub fn from_terms(field: &FieldSpec, mut terms: Vec<Term>, order: MonomialOrder) -> Self {
        terms.sort_by(|x, y| order.compare(&y.exp, &x.exp));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.exp == t.exp => last.coeff = field.add(last.coeff, t.coeff),
                _ => out.push(t),
            }
            if out.last().is_some_and(|t| t.coeff.is_zero()) {
                out.pop();
            }
        }
        Poly { terms: out, order }
    }

    /// `t^a - t^b`, scaled to a monic leading term.
    pub fn from_binomial(field: &FieldSpec, f: &Binomial, order: MonomialOrder) -> Self {
        let terms = vec![
            Term { coeff: FieldElem::ONE, exp: f.a.clone() },
            Term { coeff: field.neg(FieldElem::ONE), exp: f.b.clone() },
        ];
        Poly::from_terms(field, terms, order).monic(field)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn monic(self, field: &FieldSpec) -> Self {
        match self.leading() {
            None => self,
            Some(t) => {
                let inv = field.inv(t.coeff).expect("nonzero coefficient");
                self.scale(field, inv, &ExponentVector::zero(t.exp.len()))
            }
        }
    }

    /// `c * t^m * self`.
    pub fn scale(&self, field: &FieldSpec, c: FieldElem, m: &ExponentVector) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: field.mul(c, t.coeff), exp: t.exp.add(m) })
            .filter(|t| !t.coeff.is_zero())
            .collect();
        Poly { terms, order: self.order }
    }

    pub fn sub(&self, field: &FieldSpec, other: &Poly) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().map(|t| Term { coeff: field.neg(t.coeff), exp: t.exp.clone() }));
        Poly::from_terms(field, terms, self.order)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if t.coeff == FieldElem::ONE {
                write!(f, "{}", t.exp)?;
            } else {
                write!(f, "{}*{}", t.coeff, t.exp)?;
            }
        }
        Ok(())
    }
}

/// Monomial comparison under the given order.
pub fn compare(m1: &ExponentVector, m2: &ExponentVector, order: MonomialOrder) -> Ordering {
    order.compare(m1, m2)
}

/// Remainder of `f` under full multivariate division by `basis`, trying
/// reducers in list order.
pub fn normal_form(field: &FieldSpec, f: &Poly, basis: &[Poly]) -> Poly {
    let order = f.order;
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = p.leading().cloned() {
        let reducer = basis.iter().find(|g| g.leading().is_some_and(|lg| lg.exp.divides(&lt.exp)));
        match reducer {
            Some(g) => {
                let lg = g.leading().expect("nonzero reducer");
                let c = field.div(lt.coeff, lg.coeff).expect("nonzero coefficient");
                p = p.sub(field, &g.scale(field, c, &lt.exp.sub(&lg.exp)));
            }
            None => {
                rem.push(lt);
                p.terms.remove(0);
            }
        }
    }
    Poly::from_terms(field, rem, order)
}

/// `(L / LM f) f / lc(f) - (L / LM g) g / lc(g)` with `L = lcm(LM f, LM g)`.
pub fn s_polynomial(field: &FieldSpec, f: &Poly, g: &Poly) -> Poly {
    let (lf, lg) = (f.leading().expect("nonzero"), g.leading().expect("nonzero"));
    let l = lf.exp.lcm(&lg.exp);
    let left = f.scale(field, field.inv(lf.coeff).expect("nonzero"), &l.sub(&lf.exp));
    let right = g.scale(field, field.inv(lg.coeff).expect("nonzero"), &l.sub(&lg.exp));
    left.sub(field, &right)
}

#[derive(Debug, Clone)]
pub struct GroebnerCheck {
    pub is_groebner: bool,
    /// First pair `(i, j)`, `i < j`, whose S-polynomial has a nonzero
    /// remainder, with that remainder.
    pub failing_pair: Option<(usize, usize, Poly)>,
}

/// Buchberger's criterion over all pairs in `(i, j)` lexicographic order.
pub fn is_groebner(field: &FieldSpec, basis: &[Poly]) -> GroebnerCheck {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let r = normal_form(field, &s_polynomial(field, &basis[i], &basis[j]), basis);
            if !r.is_zero() {
                return GroebnerCheck { is_groebner: false, failing_pair: Some((i, j, r)) };
            }
        }
    }
    GroebnerCheck { is_groebner: true, failing_pair: None }
}

/// Completes `basis` to a Gröbner basis by adding nonzero S-remainders.
pub fn buchberger(field: &FieldSpec, basis: &[Poly], cap: usize) -> Result<Vec<Poly>, GroebnerError> {
    let mut g: Vec<Poly> = basis.iter().filter(|p| !p.is_zero()).cloned().map(|p| p.monic(field)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let r = normal_form(field, &s_polynomial(field, &g[i], &g[j]), &g);
        if r.is_zero() {
            continue;
        }
        if g.len() >= cap {
            return Err(GroebnerError::TooLarge { cap });
        }
        g.push(r.monic(field));
        let n = g.len() - 1;
        pairs.extend((0..n).map(|i| (i, n)));
    }
    Ok(g)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub k: usize,
    pub q: u32,
    pub order: String,
    /// The verdicts below are empirical checks of a conjectured statement.
    pub status: &'static str,
    pub generators: usize,
    pub generates: bool,
    pub minimal: bool,
    pub groebner: bool,
    pub witnesses: Vec<String>,
}

/// Checks the conjectured basis of the cycle of length `2k`.
pub fn test_conjecture(k: usize, q: u32, order: MonomialOrder, limits: &Limits) -> crate::Result<ConjectureReport> {
    let basis = conjectured_basis(k, q)?.all();
    test_conjecture_with(k, q, &basis, order, limits)
}

/// Runs the three verdicts on an arbitrary candidate basis for the cycle of
/// length `2k`.
pub fn test_conjecture_with(
    k: usize,
    q: u32,
    basis: &[Binomial],
    order: MonomialOrder,
    limits: &Limits,
) -> crate::Result<ConjectureReport> {
    let field = FieldSpec::of_order(q as u64)?;
    let s = 2 * k;
    let edges: Vec<(usize, usize)> = (1..=s).map(|i| (i, i % s + 1)).collect();
    let x = enumerate_toric_set(&Graph::from_edges(&edges)?, &field, limits)?;
    let mut witnesses = Vec::new();

    let report = verify_generating_set(basis, &x, None, limits)?;
    if let Some(c) = report.first_deficit() {
        witnesses.push(format!("generates: dim J_{} = {} < dim I(X)_{} = {}", c.d, c.dim_j, c.d, c.dim_i));
    }
    let redundant = redundant_generators(basis, s, limits)?;
    for &(i, d) in &redundant {
        witnesses.push(format!("minimal: generator {} ({}) lies in the degree-{d} span of the others", i + 1, basis[i]));
    }
    let polys: Vec<Poly> = basis.iter().map(|b| Poly::from_binomial(&field, b, order)).collect();
    let gb = is_groebner(&field, &polys);
    if let Some((i, j, r)) = &gb.failing_pair {
        witnesses.push(format!("groebner: S({}, {}) has remainder {r}", i + 1, j + 1));
    }
    Ok(ConjectureReport {
        k,
        q,
        order: order.label().to_string(),
        status: "conjecture (empirical check)",
        generators: basis.len(),
        generates: report.generates,
        minimal: redundant.is_empty(),
        groebner: gb.is_groebner,
        witnesses,
    })
}
