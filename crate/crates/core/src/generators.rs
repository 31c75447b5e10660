//! Combinatorial binomials attached to even cycles and the generating sets
//! and regularity values built from them.
//!
//! Edge labels in partitions and in [`Origin`] are 1-based, matching the
//! variable names `t_1, ..., t_s`.

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{components, cycle_blocks, CycleBlocks, CycleFamily, Graph};
use crate::ideal::Binomial;
use crate::monomial::ExponentVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("r = {r} outside 1..={max}")]
    BadR { r: u32, max: u32 },
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("bad transfer: {0}")]
    BadTransfer(String),
    #[error("cycle half-length must be at least 2, got {0}")]
    BadCycle(usize),
    #[error("field order must be at least 3, got {0}")]
    BadQ(u32),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("the cycles of the graph are not vertex-disjoint blocks")]
    CyclesNotVertexDisjoint,
    #[error("cycle family is not edge-disjoint")]
    EdgesOverlap,
    #[error("swap index {i} outside 1..={max}")]
    IndexOutOfRange { i: usize, max: usize },
}

/// A partition `A ⊔ B` of `{1, ..., s}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    pub s: usize,
    /// `in_a[i]` is true when edge `i + 1` lies in `A`.
    pub in_a: Vec<bool>,
}

impl Partition {
    /// Builds the partition with the given 1-based members of `A`.
    pub fn from_a(s: usize, a: &[usize]) -> Result<Partition, GeneratorError> {
        let mut in_a = vec![false; s];
        for &i in a {
            if i == 0 || i > s {
                return Err(GeneratorError::BadPartition(format!("{i} outside 1..={s}")));
            }
            in_a[i - 1] = true;
        }
        Ok(Partition { s, in_a })
    }

    /// `{1, 3, ..., s-1} ⊔ {2, 4, ..., s}`.
    pub fn lambda(s: usize) -> Partition {
        Partition { s, in_a: (0..s).map(|i| i % 2 == 0).collect() }
    }

    /// 1-based members of `A`.
    pub fn a(&self) -> Vec<usize> {
        (0..self.s).filter(|&i| self.in_a[i]).map(|i| i + 1).collect()
    }

    /// 1-based members of `B`.
    pub fn b(&self) -> Vec<usize> {
        (0..self.s).filter(|&i| !self.in_a[i]).map(|i| i + 1).collect()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.in_a.iter().filter(|&&x| x).count() == self.s
    }

    /// Balanced partitions with `1 ∈ A`, in lexicographic order of `A`.
    pub fn balanced(s: usize) -> impl Iterator<Item = Partition> {
        (2..=s).combinations(s / 2 - 1).map(move |rest| {
            let mut a = vec![1];
            a.extend(rest);
            Partition::from_a(s, &a).expect("labels in range")
        })
    }
}

fn check_r(r: u32, q: u32) -> Result<(), GeneratorError> {
    if q < 3 {
        return Err(GeneratorError::BadQ(q));
    }
    if r == 0 || r > q - 2 {
        return Err(GeneratorError::BadR { r, max: q - 2 });
    }
    Ok(())
}

/// Values `rho(1), ..., rho(s)`: start at `r`; step to `q - 1 - rho(i)` when
/// `i` and `i + 1` lie on the same side, otherwise repeat `rho(i)`.
pub fn rho(sigma: &Partition, r: u32, q: u32) -> Result<Vec<u32>, GeneratorError> {
    check_r(r, q)?;
    let mut out = Vec::with_capacity(sigma.s);
    let mut cur = r;
    for i in 0..sigma.s {
        if i > 0 && sigma.in_a[i] == sigma.in_a[i - 1] {
            cur = q - 1 - cur;
        }
        out.push(cur);
    }
    Ok(out)
}

/// The binomial `t^a - t^b` with `a = rho` on `A`, `b = rho` on `B`.
pub fn f_sigma_r(sigma: &Partition, r: u32, q: u32) -> Result<Binomial, GeneratorError> {
    if sigma.s < 2 || !sigma.in_a[0] {
        return Err(GeneratorError::BadPartition("1 must lie in A".into()));
    }
    let values = rho(sigma, r, q)?;
    let (a, b) = values
        .iter()
        .zip(&sigma.in_a)
        .map(|(&v, &in_a)| if in_a { (v, 0) } else { (0, v) })
        .unzip();
    Ok(Binomial::new(a, b))
}

/// Moves `i - 1` into `A` and `i` into `B` (1-based `i`).
pub fn transfer(sigma: &Partition, i: usize) -> Result<Partition, GeneratorError> {
    if i <= 2 || i > sigma.s {
        return Err(GeneratorError::BadTransfer(format!("need 2 < i <= {}, got {i}", sigma.s)));
    }
    if !sigma.in_a[i - 1] || sigma.in_a[i - 2] {
        return Err(GeneratorError::BadTransfer(format!("need {i} in A and {} in B", i - 1)));
    }
    let mut out = sigma.clone();
    out.in_a[i - 2] = true;
    out.in_a[i - 1] = false;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CombinatorialGen {
    /// 1-based members of `A`.
    pub a_set: Vec<usize>,
    pub r: u32,
    pub binomial: Binomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleGenSet {
    pub k: usize,
    pub q: u32,
    pub toric_relations: Vec<Binomial>,
    pub combinatorial: Vec<CombinatorialGen>,
}

impl CycleGenSet {
    /// Toric relations followed by the combinatorial binomials.
    pub fn all(&self) -> Vec<Binomial> {
        self.toric_relations.iter().cloned().chain(self.combinatorial.iter().map(|c| c.binomial.clone())).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.all().iter().map(Binomial::degree).max().unwrap_or(0)
    }

    pub fn min_combinatorial_degree(&self) -> u32 {
        self.combinatorial.iter().map(|c| c.binomial.degree()).min().unwrap_or(0)
    }

    /// Provenance records in the order of [`CycleGenSet::all`].
    pub fn entries(&self) -> Vec<GeneratorEntry> {
        let s = 2 * self.k;
        let toric = (0..s - 1).map(|i| GeneratorEntry {
            binomial: self.toric_relations[i].clone(),
            origin: Origin::ToricRelation { i: i + 1, j: s },
        });
        let comb = self.combinatorial.iter().map(|c| GeneratorEntry {
            binomial: c.binomial.clone(),
            origin: Origin::Cycle { cycle: 1, edges: (1..=s).collect(), a_set: c.a_set.clone(), r: c.r },
        });
        toric.chain(comb).collect()
    }
}

/// `t_i^{q-1} - t_s^{q-1}` for `i < s`.
pub fn toric_relations(s: usize, q: u32) -> Vec<Binomial> {
    (0..s - 1).map(|i| Binomial::pure_difference(s, i, s - 1, q - 1)).collect()
}

fn check_kq(k: usize, q: u32) -> Result<(), GeneratorError> {
    if k < 2 {
        return Err(GeneratorError::BadCycle(k));
    }
    if q < 3 {
        return Err(GeneratorError::BadQ(q));
    }
    Ok(())
}

/// Toric relations together with `f_sigma^r` for every balanced `sigma`
/// with `1 ∈ A` and every `r` in `1..=q-2`, for the cycle of length `2k`.
pub fn even_cycle_generators(k: usize, q: u32) -> Result<CycleGenSet, GeneratorError> {
    check_kq(k, q)?;
    let s = 2 * k;
    let mut combinatorial = Vec::new();
    for sigma in Partition::balanced(s) {
        for r in 1..=q - 2 {
            combinatorial.push(CombinatorialGen { a_set: sigma.a(), r, binomial: f_sigma_r(&sigma, r, q)? });
        }
    }
    Ok(CycleGenSet { k, q, toric_relations: toric_relations(s, q), combinatorial })
}

/// The even-cycle set without `f_lambda^r` for `r >= 2`.
pub fn conjectured_basis(k: usize, q: u32) -> Result<CycleGenSet, GeneratorError> {
    let mut set = even_cycle_generators(k, q)?;
    let lambda = Partition::lambda(2 * k).a();
    set.combinatorial.retain(|c| c.a_set != lambda || c.r < 2);
    Ok(set)
}

/// `f_sigma^{q-2}` for `sigma = {1, 3, ..., 2k-3, 2k} ⊔ {2, 4, ..., 2k-2, 2k-1}`,
/// of degree `(q-2)(k-1) + 1`.
pub fn max_degree_witness(k: usize, q: u32) -> Result<Binomial, GeneratorError> {
    check_kq(k, q)?;
    let mut a: Vec<usize> = (1..2 * k - 1).step_by(2).collect();
    a.push(2 * k);
    f_sigma_r(&Partition::from_a(2 * k, &a)?, q - 2, q)
}

/// Where a generator in an exported set comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    /// `t_i^{q-1} - t_j^{q-1}`.
    ToricRelation { i: usize, j: usize },
    /// `f_sigma^r` of a cycle, re-indexed: local edge `l` is ambient edge
    /// `edges[l - 1]`; `a_set` lists ambient labels.
    Cycle { cycle: usize, edges: Vec<usize>, a_set: Vec<usize>, r: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorEntry {
    pub binomial: Binomial,
    pub origin: Origin,
}

/// Ambient toric relations plus the combinatorial binomials of each cycle,
/// with no check that the graph satisfies any hypothesis.
pub fn cycle_union_candidates(g: &Graph, family: &CycleFamily, q: u32) -> Result<Vec<GeneratorEntry>, GeneratorError> {
    let s = g.s();
    let mut out: Vec<GeneratorEntry> = toric_relations(s, q)
        .into_iter()
        .enumerate()
        .map(|(i, binomial)| GeneratorEntry { binomial, origin: Origin::ToricRelation { i: i + 1, j: s } })
        .collect();
    for (ci, cycle) in family.cycles.iter().enumerate() {
        let local = even_cycle_generators(cycle.len() / 2, q)?;
        let edges: Vec<usize> = cycle.iter().map(|&e| e + 1).collect();
        for c in &local.combinatorial {
            let embed = |v: &ExponentVector| {
                let mut out = vec![0u32; s];
                for (l, &e) in v.entries().iter().enumerate() {
                    out[cycle[l]] = e;
                }
                out
            };
            let binomial = Binomial::new(embed(&c.binomial.a), embed(&c.binomial.b));
            let a_set = c.a_set.iter().map(|&l| edges[l - 1]).collect();
            out.push(GeneratorEntry {
                binomial,
                origin: Origin::Cycle { cycle: ci + 1, edges: edges.clone(), a_set, r: c.r },
            });
        }
    }
    Ok(out)
}

fn disjoint_cycle_family(g: &Graph) -> Result<CycleFamily, GeneratorError> {
    let comps = components(g);
    if comps.len() != 1 {
        return Err(GeneratorError::NotConnected);
    }
    if !comps[0].bipartite {
        return Err(GeneratorError::NotBipartite);
    }
    match cycle_blocks(g) {
        CycleBlocks::Disjoint(f) => Ok(f),
        CycleBlocks::NotDisjoint => Err(GeneratorError::CyclesNotVertexDisjoint),
    }
}

/// Generating set for a connected bipartite graph whose cycles are
/// vertex-disjoint blocks.
pub fn bipartite_disjoint_generators(g: &Graph, q: u32) -> Result<Vec<GeneratorEntry>, GeneratorError> {
    let family = disjoint_cycle_family(g)?;
    cycle_union_candidates(g, &family, q)
}

fn reg_value(s: usize, sum_k: usize, q: u32) -> u64 {
    (q as u64 - 2) * (s - sum_k - 1) as u64
}

/// `(q-2)(s - sum k_i - 1)` under the vertex-disjoint cycle hypotheses.
pub fn regularity_formula_disjoint(g: &Graph, q: u32) -> Result<u64, GeneratorError> {
    let family = disjoint_cycle_family(g)?;
    Ok(reg_value(g.s(), family.sum_k(), q))
}

/// `(q-2)(s - sum k_i - 1)` for an edge-disjoint family of even cycles in a
/// bipartite graph.
pub fn regularity_upper_bound(g: &Graph, q: u32, family: &CycleFamily) -> Result<u64, GeneratorError> {
    if components(g).iter().any(|c| !c.bipartite) {
        return Err(GeneratorError::NotBipartite);
    }
    if !family.edge_disjoint {
        return Err(GeneratorError::EdgesOverlap);
    }
    Ok(reg_value(g.s(), family.sum_k(), q))
}

/// Exchanges the exponents of `t_i` and `t_{i+2}` (1-based `i`).
pub fn sigma_swap(f: &Binomial, i: usize) -> Result<Binomial, GeneratorError> {
    let s = f.s();
    if i == 0 || i + 2 > s {
        return Err(GeneratorError::IndexOutOfRange { i, max: s.saturating_sub(2) });
    }
    Ok(Binomial { a: f.a.swapped(i - 1, i + 1), b: f.b.swapped(i - 1, i + 1) })
}
