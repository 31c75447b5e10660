//! Dense row reduction over `F_q` and a union-find used for binomial ranks.

use crate::field::{FieldElem, FieldSpec};

/// Incremental echelon form: rows are fed one at a time and reduced against
/// the pivots found so far.
#[derive(Debug, Clone)]
pub struct RowReducer {
    field: FieldSpec,
    ncols: usize,
    pivots: Vec<(usize, Vec<FieldElem>)>,
}

impl RowReducer {
    pub fn new(field: &FieldSpec, ncols: usize) -> Self {
        RowReducer { field: field.clone(), ncols, pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ncols
    }

    fn reduce(&self, row: &mut [FieldElem]) {
        let f = &self.field;
        for (col, piv) in &self.pivots {
            let c = row[*col];
            if c.is_zero() {
                continue;
            }
            for (x, &p) in row.iter_mut().zip(piv) {
                if !p.is_zero() {
                    *x = f.sub(*x, f.mul(c, p));
                }
            }
        }
    }

    /// Returns true when the row was independent of the rows inserted so far.
    pub fn insert(&mut self, mut row: Vec<FieldElem>) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        self.reduce(&mut row);
        let Some(col) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(row[col]).expect("pivot is nonzero");
        for x in row.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.pivots.push((col, row));
        true
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &[FieldElem]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(|x| x.is_zero())
    }

    /// Reduced row echelon basis of the span, sorted by pivot column.
    pub fn into_rref(self) -> Vec<Vec<FieldElem>> {
        let f = self.field;
        let mut rows = self.pivots;
        rows.sort_by_key(|(c, _)| *c);
        for i in 0..rows.len() {
            let (ci, pivot) = (rows[i].0, rows[i].1.clone());
            for (j, (_, row)) in rows.iter_mut().enumerate() {
                if j == i || row[ci].is_zero() {
                    continue;
                }
                let c = row[ci];
                for (x, &p) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(c, p));
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// Rank of a dense matrix by Gaussian elimination.
pub fn rank(field: &FieldSpec, rows: &[Vec<FieldElem>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = RowReducer::new(field, ncols);
    for row in rows {
        r.insert(row.clone());
        if r.is_full() {
            break;
        }
    }
    r.rank()
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    merges: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n], merges: 0 }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.merges += 1;
        true
    }

    /// Number of successful unions, i.e. elements minus components.
    pub fn merges(&self) -> usize {
        self.merges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &FieldSpec, rows: &[&[u32]]) -> Vec<Vec<FieldElem>> {
        rows.iter().map(|r| r.iter().map(|&x| f.elem(x).unwrap()).collect()).collect()
    }

    #[test]
    fn rank_small() {
        let f = FieldSpec::prime(3).unwrap();
        assert_eq!(rank(&f, &m(&f, &[&[1, 1], &[1, 2]])), 2);
        assert_eq!(rank(&f, &m(&f, &[&[1, 2], &[2, 1]])), 1);
        assert_eq!(rank(&f, &m(&f, &[&[0, 0, 0]])), 0);
        let f4 = FieldSpec::of_order(4).unwrap();
        // rows (1, a) and (a, a^2) are proportional
        assert_eq!(rank(&f4, &m(&f4, &[&[1, 2], &[2, 3]])), 1);
    }

    #[test]
    fn rref_is_reduced() {
        let f = FieldSpec::prime(5).unwrap();
        let mut r = RowReducer::new(&f, 3);
        for row in m(&f, &[&[0, 2, 1], &[1, 1, 1], &[1, 3, 2]]) {
            r.insert(row);
        }
        assert_eq!(r.rank(), 2);
        assert!(r.contains(&m(&f, &[&[2, 4, 3]])[0]));
        let rref = r.into_rref();
        assert_eq!(rref, m(&f, &[&[1, 0, 3], &[0, 1, 3]]));
    }

    #[test]
    fn union_find_counts() {
        let mut u = UnionFind::new(5);
        assert!(u.union(0, 1));
        assert!(u.union(1, 2));
        assert!(!u.union(0, 2));
        assert!(u.union(3, 4));
        assert_eq!(u.merges(), 3);
        assert_eq!(u.find(2), u.find(0));
    }
}
