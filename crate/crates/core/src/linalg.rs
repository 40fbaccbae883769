//! Sparse exact elimination.
//!
//! Matrices over `Q(alpha)` without `s` are brought to polynomial rows and
//! reduced fraction-free, dividing every updated row by its content; pivots
//! and removed contents that depend on `alpha` are recorded, their roots being
//! the only values of `alpha` where a specialized rank can drop. Matrices
//! involving `s` are reduced over the full scalar field instead.

use std::collections::{BTreeMap, BTreeSet};

use crate::scalar::{AlphaPoly, Rat, RatFunc, Scalar};

/// Row-major sparse matrix; row maps are keyed by column index.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub ncols: usize,
    pub rows: Vec<BTreeMap<usize, Scalar>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    /// Build a matrix from columns given as sparse maps over an arbitrary
    /// ordered row key.
    pub fn from_columns<K: Ord + Clone>(cols: &[BTreeMap<K, Scalar>]) -> Self {
        let mut index: BTreeMap<K, usize> = BTreeMap::new();
        for col in cols {
            for k in col.keys() {
                let n = index.len();
                index.entry(k.clone()).or_insert(n);
            }
        }
        let mut rows = vec![BTreeMap::new(); index.len()];
        for (j, col) in cols.iter().enumerate() {
            for (k, v) in col {
                if !v.is_zero() {
                    rows[index[k]].insert(j, v.clone());
                }
            }
        }
        SparseMatrix { ncols: cols.len(), rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> crate::Result<Scalar>) -> crate::Result<SparseMatrix> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let mut out = BTreeMap::new();
            for (j, v) in r {
                let w = f(v)?;
                if !w.is_zero() {
                    out.insert(*j, w);
                }
            }
            rows.push(out);
        }
        Ok(SparseMatrix { ncols: self.ncols, rows })
    }
}

type PolyRow = BTreeMap<usize, AlphaPoly>;
type ScalarRow = BTreeMap<usize, Scalar>;

#[derive(Clone, Debug)]
enum Rows {
    Poly(Vec<(usize, PolyRow)>, Vec<PolyRow>),
    Field(Vec<(usize, ScalarRow)>, Vec<ScalarRow>),
}

/// Result of a Gauss-Jordan reduction of `[A | B]`, where `A` has
/// `ncols` columns and the trailing `nrhs` columns form right-hand sides.
#[derive(Clone, Debug)]
pub struct Elimination {
    ncols: usize,
    nrhs: usize,
    rows: Rows,
    pivot_polys: Vec<AlphaPoly>,
}

fn row_content(row: &PolyRow) -> AlphaPoly {
    let mut g = AlphaPoly::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

fn clear_denominators(row: &ScalarRow, polys: &mut BTreeSet<AlphaPoly>) -> PolyRow {
    let mut den = AlphaPoly::one();
    for v in row.values() {
        let d = v.rational_part().denom();
        let g = den.gcd(d);
        den = &den * &d.exact_div(&g);
    }
    if !den.is_constant() {
        polys.insert(den.monic());
    }
    row.iter()
        .map(|(j, v)| {
            let rf = v.rational_part();
            (*j, &rf.numer().clone() * &den.exact_div(rf.denom()))
        })
        .collect()
}

impl Elimination {
    /// Reduce `m`, choosing pivots only among its first `ncols` columns.
    pub fn new(m: &SparseMatrix, ncols: usize) -> Elimination {
        let nrhs = m.ncols - ncols;
        if m.rows.iter().any(|r| r.values().any(Scalar::has_s)) {
            return Self::field(m, ncols, nrhs);
        }
        let mut polys = BTreeSet::new();
        let mut remaining: Vec<PolyRow> = Vec::new();
        for r in &m.rows {
            if r.is_empty() {
                continue;
            }
            let mut row = clear_denominators(r, &mut polys);
            let g = row_content(&row);
            if !g.is_one() {
                row = row.into_iter().map(|(j, v)| (j, v.exact_div(&g))).collect();
            }
            remaining.push(row);
        }
        let mut pivots: Vec<(usize, PolyRow)> = Vec::new();
        for col in 0..ncols {
            let best = remaining
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.get(&col).map(|v| (i, v.degree().unwrap_or(0), r.len())))
                .min_by_key(|&(_, d, len)| (d, len));
            let Some((bi, _, _)) = best else { continue };
            let prow = remaining.swap_remove(bi);
            let p = prow[&col].clone();
            if !p.is_constant() {
                polys.insert(p.monic());
            }
            let eliminate = |row: &mut PolyRow, polys: &mut BTreeSet<AlphaPoly>| {
                let Some(a) = row.get(&col).cloned() else { return };
                let mut out = PolyRow::new();
                let keys: BTreeSet<usize> = row.keys().chain(prow.keys()).copied().collect();
                for j in keys {
                    let x = row.get(&j).map(|v| v * &p).unwrap_or_else(AlphaPoly::zero);
                    let y = prow.get(&j).map(|v| v * &a).unwrap_or_else(AlphaPoly::zero);
                    let v = &x - &y;
                    if !v.is_zero() {
                        out.insert(j, v);
                    }
                }
                let g = row_content(&out);
                if !g.is_zero() && !g.is_one() {
                    if !g.is_constant() {
                        polys.insert(g.monic());
                    }
                    out = out.into_iter().map(|(j, v)| (j, v.exact_div(&g))).collect();
                }
                *row = out;
            };
            for r in remaining.iter_mut() {
                eliminate(r, &mut polys);
            }
            for (_, r) in pivots.iter_mut() {
                eliminate(r, &mut polys);
            }
            remaining.retain(|r| !r.is_empty());
            pivots.push((col, prow));
        }
        Elimination { ncols, nrhs, rows: Rows::Poly(pivots, remaining), pivot_polys: polys.into_iter().collect() }
    }

    fn field(m: &SparseMatrix, ncols: usize, nrhs: usize) -> Elimination {
        let mut remaining: Vec<ScalarRow> = m.rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        let mut pivots: Vec<(usize, ScalarRow)> = Vec::new();
        for col in 0..ncols {
            let Some(bi) = remaining.iter().position(|r| r.contains_key(&col)) else { continue };
            let mut prow = remaining.swap_remove(bi);
            let inv = prow[&col].inv().expect("pivot is nonzero");
            for v in prow.values_mut() {
                *v = &*v * &inv;
            }
            let eliminate = |row: &mut ScalarRow| {
                let Some(a) = row.get(&col).cloned() else { return };
                for (j, v) in &prow {
                    let e = row.entry(*j).or_insert_with(Scalar::zero);
                    *e = &*e - &(v * &a);
                }
                row.retain(|_, v| !v.is_zero());
            };
            remaining.iter_mut().for_each(eliminate);
            pivots.iter_mut().for_each(|(_, r)| eliminate(r));
            remaining.retain(|r| !r.is_empty());
            pivots.push((col, prow));
        }
        Elimination { ncols, nrhs, rows: Rows::Field(pivots, remaining), pivot_polys: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivot_columns().len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        match &self.rows {
            Rows::Poly(p, _) => p.iter().map(|(c, _)| *c).collect(),
            Rows::Field(p, _) => p.iter().map(|(c, _)| *c).collect(),
        }
    }

    /// Monic polynomials in `alpha` whose roots may change the rank.
    pub fn pivot_polynomials(&self) -> &[AlphaPoly] {
        &self.pivot_polys
    }

    /// Entry `j` of pivot row `r` divided by its pivot.
    fn ratio(&self, r: usize, j: usize) -> Scalar {
        match &self.rows {
            Rows::Poly(p, _) => {
                let (c, row) = &p[r];
                match row.get(&j) {
                    None => Scalar::zero(),
                    Some(v) => Scalar::from_ratfunc(RatFunc::new(v.clone(), row[c].clone()).expect("nonzero pivot")),
                }
            }
            Rows::Field(p, _) => p[r].1.get(&j).cloned().unwrap_or_else(Scalar::zero),
        }
    }

    fn npivots(&self) -> usize {
        match &self.rows {
            Rows::Poly(p, _) => p.len(),
            Rows::Field(p, _) => p.len(),
        }
    }

    /// A basis of the null space of the leading block, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let pcols = self.pivot_columns();
        let pivot_set: BTreeSet<usize> = pcols.iter().copied().collect();
        (0..self.ncols)
            .filter(|j| !pivot_set.contains(j))
            .map(|f| {
                let mut x = vec![Scalar::zero(); self.ncols];
                x[f] = Scalar::one();
                for (r, &c) in pcols.iter().enumerate() {
                    x[c] = -self.ratio(r, f);
                }
                x
            })
            .collect()
    }

    /// A particular solution for right-hand side `k`, if the system is consistent.
    pub fn solution(&self, k: usize) -> Option<Vec<Scalar>> {
        assert!(k < self.nrhs);
        let col = self.ncols + k;
        let inconsistent = match &self.rows {
            Rows::Poly(_, rest) => rest.iter().any(|r| r.contains_key(&col)),
            Rows::Field(_, rest) => rest.iter().any(|r| r.contains_key(&col)),
        };
        if inconsistent {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.ncols];
        for (r, c) in self.pivot_columns().into_iter().enumerate().take(self.npivots()) {
            x[c] = self.ratio(r, col);
        }
        Some(x)
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    Elimination::new(m, m.ncols).rank()
}

/// Solve `A x = b` for each column `b` of `rhs`.
pub fn solve(a: &SparseMatrix, rhs: &[BTreeMap<usize, Scalar>]) -> Vec<Option<Vec<Scalar>>> {
    let mut m = a.clone();
    m.ncols = a.ncols + rhs.len();
    for (k, b) in rhs.iter().enumerate() {
        for (i, v) in b {
            if !v.is_zero() {
                m.rows[*i].insert(a.ncols + k, v.clone());
            }
        }
    }
    let e = Elimination::new(&m, a.ncols);
    (0..rhs.len()).map(|k| e.solution(k)).collect()
}

/// Specialize every entry at a rational `alpha`.
pub fn specialize(m: &SparseMatrix, alpha: &Rat) -> crate::Result<SparseMatrix> {
    m.map(|v| v.specialize(alpha))
}
