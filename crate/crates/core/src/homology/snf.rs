//! Smith normal form of sparse integer matrices.
//!
//! Unit pivots are eliminated first, column by column, choosing the pivot row
//! with the fewest nonzeros. Whatever survives (columns without a unit entry)
//! is densified and finished by Euclidean row/column reduction with
//! smallest-magnitude pivots.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::scalar::SnfRing;

/// Column-major sparse matrix. Each column is sorted by row with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<R> {
    rows: usize,
    columns: Vec<Vec<(usize, R)>>,
}

impl<R: SnfRing> SparseMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from unsorted `(row, value)` lists; zeros are dropped and
    /// repeated rows are summed.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, R)>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut col| {
                col.sort_by_key(|(r, _)| *r);
                let mut out: Vec<(usize, R)> = Vec::with_capacity(col.len());
                for (r, v) in col {
                    assert!(r < rows, "row {r} out of bounds");
                    match out.last_mut() {
                        Some((lr, lv)) if *lr == r => *lv = lv.clone() + v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|(_, v)| !v.is_zero());
                out
            })
            .collect();
        Self { rows, columns }
    }

    pub fn from_dense(dense: &[Vec<R>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.len());
        let columns = (0..cols)
            .map(|c| (0..rows).map(|r| (r, dense[r][c].clone())).collect())
            .collect();
        Self::from_columns(rows, columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, R)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> R {
        self.columns[c]
            .binary_search_by_key(&r, |(row, _)| *row)
            .map(|i| self.columns[c][i].1.clone())
            .unwrap_or_else(|_| R::zero())
    }

    pub fn to_dense(&self) -> Vec<Vec<R>> {
        let mut dense = vec![vec![R::zero(); self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                dense[*r][c] = v.clone();
            }
        }
        dense
    }

    /// `self · other`, used to check `∂∂ = 0`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.cols(), other.rows, "dimension mismatch");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: Vec<(usize, R)> = Vec::new();
                for (k, v) in col {
                    acc = sub_scaled(&acc, &(-v.clone()), &self.columns[*k])?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rows: self.rows,
            columns,
        })
    }

    pub fn smith_normal_form(&self) -> Result<Vec<R>> {
        smith_normal_form(self)
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(smith_normal_form(self)?.len())
    }
}

fn is_unit<R: SnfRing>(v: &R) -> bool {
    v.abs().is_one()
}

/// `target - f * src`, both sorted by row.
fn sub_scaled<R: SnfRing>(
    target: &[(usize, R)],
    f: &R,
    src: &[(usize, R)],
) -> Result<Vec<(usize, R)>> {
    let mut out = Vec::with_capacity(target.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < src.len() {
        let take_target = j == src.len() || (i < target.len() && target[i].0 < src[j].0);
        let take_src = i == target.len() || (j < src.len() && src[j].0 < target[i].0);
        if take_target {
            out.push(target[i].clone());
            i += 1;
        } else if take_src {
            let prod = f.checked_mul(&src[j].1).ok_or(Error::Overflow)?;
            out.push((src[j].0, -prod));
            j += 1;
        } else {
            let prod = f.checked_mul(&src[j].1).ok_or(Error::Overflow)?;
            let v = target[i].1.checked_sub(&prod).ok_or(Error::Overflow)?;
            if !v.is_zero() {
                out.push((target[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// Nonzero invariant factors `d_1 | d_2 | ...`, all positive. The rank is
/// the length of the result.
pub fn smith_normal_form<R: SnfRing>(matrix: &SparseMatrix<R>) -> Result<Vec<R>> {
    let mut cols = matrix.columns.clone();
    let mut row_cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); matrix.rows];
    for (c, col) in cols.iter().enumerate() {
        for (r, _) in col {
            row_cols[*r].insert(c);
        }
    }

    let mut units = 0usize;
    let mut progress = true;
    while progress {
        progress = false;
        for c in 0..cols.len() {
            let pivot = cols[c]
                .iter()
                .filter(|(_, v)| is_unit(v))
                .min_by_key(|(r, _)| row_cols[*r].len())
                .cloned();
            let Some((r, p)) = pivot else { continue };
            let others: Vec<usize> = row_cols[r].iter().copied().filter(|&x| x != c).collect();
            for c2 in others {
                let a = cols[c2]
                    .iter()
                    .find(|(row, _)| *row == r)
                    .map(|(_, v)| v.clone())
                    .expect("row index is consistent");
                // p is a unit so p^{-1} = p
                let f = a.checked_mul(&p).ok_or(Error::Overflow)?;
                let updated = sub_scaled(&cols[c2], &f, &cols[c])?;
                for (row, _) in &cols[c2] {
                    row_cols[*row].remove(&c2);
                }
                for (row, _) in &updated {
                    row_cols[*row].insert(c2);
                }
                cols[c2] = updated;
            }
            for (row, _) in &cols[c] {
                row_cols[*row].remove(&c);
            }
            cols[c].clear();
            units += 1;
            progress = true;
        }
    }

    let rest: Vec<&Vec<(usize, R)>> = cols.iter().filter(|c| !c.is_empty()).collect();
    let mut factors = vec![R::one(); units];
    if !rest.is_empty() {
        let live_rows: Vec<usize> = row_cols
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_empty())
            .map(|(r, _)| r)
            .collect();
        let mut dense = vec![vec![R::zero(); rest.len()]; live_rows.len()];
        for (c, col) in rest.iter().enumerate() {
            for (r, v) in col.iter() {
                let ri = live_rows.binary_search(r).expect("live row");
                dense[ri][c] = v.clone();
            }
        }
        factors.extend(dense_snf(dense)?);
    }
    Ok(factors)
}

fn row_axpy<R: SnfRing>(
    a: &mut [Vec<R>],
    dst: usize,
    q: &R,
    src: usize,
    from: usize,
) -> Result<()> {
    // row_dst -= q * row_src
    for j in from..a[dst].len() {
        if a[src][j].is_zero() {
            continue;
        }
        let prod = q.checked_mul(&a[src][j]).ok_or(Error::Overflow)?;
        a[dst][j] = a[dst][j].checked_sub(&prod).ok_or(Error::Overflow)?;
    }
    Ok(())
}

fn col_axpy<R: SnfRing>(
    a: &mut [Vec<R>],
    dst: usize,
    q: &R,
    src: usize,
    from: usize,
) -> Result<()> {
    for row in a.iter_mut().skip(from) {
        if row[src].is_zero() {
            continue;
        }
        let prod = q.checked_mul(&row[src]).ok_or(Error::Overflow)?;
        row[dst] = row[dst].checked_sub(&prod).ok_or(Error::Overflow)?;
    }
    Ok(())
}

fn swap_cols<R>(a: &mut [Vec<R>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn dense_snf<R: SnfRing>(mut a: Vec<Vec<R>>) -> Result<Vec<R>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        swap_cols(&mut a, t, bj);

        loop {
            // bring the smallest entry of row t / column t to the pivot
            let mut small = (t, t);
            for i in t + 1..m {
                if !a[i][t].is_zero() && a[i][t].abs() < a[small.0][small.1].abs() {
                    small = (i, t);
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() && a[t][j].abs() < a[small.0][small.1].abs() {
                    small = (t, j);
                }
            }
            a.swap(t, small.0);
            swap_cols(&mut a, t, small.1);

            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_rem(&p).0;
                    row_axpy(&mut a, i, &q, t, t)?;
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_rem(&p).0;
                    col_axpy(&mut a, j, &q, t, t)?;
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let minus_one = -R::one();
                    row_axpy(&mut a, t, &minus_one, i, t)?;
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    Ok(diag)
}
