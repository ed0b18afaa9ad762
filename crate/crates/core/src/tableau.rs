//! Young tableaux and skew tableaux with distinct integer entries.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Error, Result};
use crate::partition::Partition;

/// Default size bound for [`enumerate_standard_tableaux`].
pub const DEFAULT_TABLEAU_BOUND: usize = 10;

/// A filling of a Young diagram increasing along rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tableau {
    rows: Vec<Vec<i64>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// A single row, sorted.
    pub fn single_row(mut entries: Vec<i64>) -> Result<Self> {
        entries.sort_unstable();
        if entries.is_empty() {
            return Ok(Self::empty());
        }
        Tableau::new(alloc::vec![entries])
    }

    /// A single column, sorted top to bottom.
    pub fn single_column(mut entries: Vec<i64>) -> Result<Self> {
        entries.sort_unstable();
        Tableau::new(entries.into_iter().map(|e| alloc::vec![e]).collect())
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<i64>>) -> Self {
        Tableau { rows }
    }

    fn validate(&self) -> Result<()> {
        if self.rows.iter().any(|r| r.is_empty()) {
            return Err(domain!("tableau rows must be nonempty"));
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(domain!("tableau row lengths must be nonincreasing"));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(domain!("row {} is not strictly increasing", i + 1));
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.iter().zip(above).any(|(b, a)| a >= b) {
                    return Err(domain!("column order violated between rows {} and {}", i, i + 1));
                }
            }
        }
        let mut seen = BTreeSet::new();
        for &e in self.rows.iter().flatten() {
            if !seen.insert(e) {
                return Err(domain!("duplicate entry {e}"));
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<i64>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<i64> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn entries(&self) -> BTreeSet<i64> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn contains_entry(&self, value: i64) -> bool {
        self.rows.iter().any(|r| r.binary_search(&value).is_ok())
    }

    /// Position of `value`, if present.
    pub fn position(&self, value: i64) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(i, r)| r.binary_search(&value).ok().map(|j| (i, j)))
    }

    pub fn transpose(&self) -> Tableau {
        let cols = self.rows.first().map_or(0, Vec::len);
        let rows = (0..cols).map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect()).collect();
        Tableau { rows }
    }

    /// True when the entries are exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let n = self.size() as i64;
        self.entries().into_iter().eq(1..=n)
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<i64>> {
        &mut self.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        let compact = self.rows.iter().flatten().all(|&e| (0..10).contains(&e));
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 && !compact {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// A filling of `outer ∖ inner` increasing along rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    /// Row `i` has `outer[i]` cells; the first `inner[i]` are `None`.
    cells: Vec<Vec<Option<i64>>>,
}

impl SkewTableau {
    /// Builds from rows with `None` placeholders for the inner boxes.
    pub fn from_cells(cells: Vec<Vec<Option<i64>>>) -> Result<Self> {
        let outer = Partition::new(cells.iter().map(Vec::len).collect())?;
        let mut inner_parts = Vec::with_capacity(cells.len());
        for (i, row) in cells.iter().enumerate() {
            let k = row.iter().take_while(|c| c.is_none()).count();
            if row[k..].iter().any(Option::is_none) {
                return Err(domain!("row {} has a placeholder after an entry", i + 1));
            }
            inner_parts.push(k);
        }
        if inner_parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(domain!("inner boxes do not form a Young diagram"));
        }
        let inner = Partition::from_unsorted(inner_parts);
        let s = SkewTableau { outer, inner, cells };
        s.validate()?;
        Ok(s)
    }

    /// Builds from an outer and inner shape and the entries of each row of `outer ∖ inner`.
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<i64>>) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(domain!("inner shape {inner} is not contained in {outer}"));
        }
        if rows.len() != outer.len() {
            return Err(domain!("expected {} rows, got {}", outer.len(), rows.len()));
        }
        let mut cells = Vec::with_capacity(rows.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != outer.part(i) - inner.part(i) {
                return Err(domain!("row {} has {} entries, expected {}", i + 1, row.len(), outer.part(i) - inner.part(i)));
            }
            let mut r = alloc::vec![None; inner.part(i)];
            r.extend(row.into_iter().map(Some));
            cells.push(r);
        }
        let s = SkewTableau { outer, inner, cells };
        s.validate()?;
        Ok(s)
    }

    /// A straight tableau viewed as a skew tableau with empty inner shape.
    pub fn from_tableau(t: &Tableau) -> Self {
        SkewTableau {
            outer: t.shape(),
            inner: Partition::empty(),
            cells: t.rows().iter().map(|r| r.iter().map(|&e| Some(e)).collect()).collect(),
        }
    }

    pub(crate) fn from_parts_unchecked(outer: Partition, inner: Partition, cells: Vec<Vec<Option<i64>>>) -> Self {
        SkewTableau { outer, inner, cells }
    }

    fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for i in 0..self.cells.len() {
            for j in self.inner.part(i)..self.outer.part(i) {
                let e = self.cells[i][j].ok_or_else(|| domain!("missing entry at ({}, {})", i + 1, j + 1))?;
                if !seen.insert(e) {
                    return Err(domain!("duplicate entry {e}"));
                }
                if j > self.inner.part(i) && self.cells[i][j - 1].is_some_and(|l| l >= e) {
                    return Err(domain!("row {} is not strictly increasing", i + 1));
                }
                if i > 0 && j >= self.inner.part(i - 1) && self.cells[i - 1][j].is_some_and(|a| a >= e) {
                    return Err(domain!("column {} is not strictly increasing", j + 1));
                }
            }
        }
        Ok(())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cells(&self) -> &[Vec<Option<i64>>] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> Option<i64> {
        self.cells.get(row).and_then(|r| r.get(col)).copied().flatten()
    }

    /// Number of filled boxes.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of filled boxes in columns `1..=k`.
    pub fn boxes_in_first_columns(&self, k: usize) -> usize {
        self.outer.boxes_in_first_columns(k) - self.inner.boxes_in_first_columns(k)
    }

    pub fn entries(&self) -> BTreeSet<i64> {
        self.cells.iter().flatten().flatten().copied().collect()
    }

    /// Converts to a straight tableau when the inner shape is empty.
    pub fn to_tableau(&self) -> Result<Tableau> {
        if !self.inner.is_empty() {
            return Err(domain!("skew tableau has nonempty inner shape {}", self.inner));
        }
        Ok(Tableau::from_rows_unchecked(self.cells.iter().map(|r| r.iter().flatten().copied().collect()).collect()))
    }

    pub(crate) fn into_parts(self) -> (Partition, Partition, Vec<Vec<Option<i64>>>) {
        (self.outer, self.inner, self.cells)
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return f.write_str("∅");
        }
        let compact = self.entries().iter().all(|e| (0..10).contains(e));
        for (i, row) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, c) in row.iter().enumerate() {
                if j > 0 && !compact {
                    f.write_str(",")?;
                }
                match c {
                    Some(e) => write!(f, "{e}")?,
                    None => f.write_str("·")?,
                }
            }
        }
        Ok(())
    }
}

/// All standard tableaux of shape `shape`, using [`DEFAULT_TABLEAU_BOUND`].
pub fn enumerate_standard_tableaux(shape: &Partition) -> Result<Vec<Tableau>> {
    enumerate_standard_tableaux_bounded(shape, DEFAULT_TABLEAU_BOUND)
}

/// All standard tableaux of shape `shape` by backtracking: entry `k` goes into
/// an outer corner of the subdiagram filled by `1..k`.
pub fn enumerate_standard_tableaux_bounded(shape: &Partition, bound: usize) -> Result<Vec<Tableau>> {
    let n = shape.size();
    if n > bound {
        return Err(Error::Resource(alloc::format!("shape of size {n} exceeds the tableau enumeration bound {bound}")));
    }
    let target = shape.parts();
    let mut rows: Vec<Vec<i64>> = alloc::vec![Vec::new(); target.len()];
    let mut out = Vec::new();
    fn rec(k: usize, n: usize, target: &[usize], rows: &mut Vec<Vec<i64>>, out: &mut Vec<Tableau>) {
        if k > n {
            out.push(Tableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for i in 0..target.len() {
            let len = rows[i].len();
            if len < target[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(k as i64);
                rec(k + 1, n, target, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(1, n, target, &mut rows, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn validation() {
        assert!(Tableau::new(vec![vec![1, 2, 7], vec![3, 6], vec![5, 9], vec![8]]).is_ok());
        assert!(Tableau::new(vec![vec![1, 1]]).is_err());
        assert!(Tableau::new(vec![vec![2], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![1, 3], vec![3]]).is_err());
        assert!(Tableau::new(vec![vec![-3, 0], vec![5]]).is_ok());
    }

    #[test]
    fn skew_from_cells() {
        let s = SkewTableau::from_cells(vec![
            vec![None, None, Some(3)],
            vec![None, Some(4), Some(7)],
            vec![Some(1), Some(6), Some(9)],
            vec![Some(8)],
        ])
        .unwrap();
        assert_eq!(s.inner().parts(), &[2, 1]);
        assert_eq!(s.outer().parts(), &[3, 3, 3, 1]);
        assert!(SkewTableau::from_cells(vec![vec![Some(1), None]]).is_err());
        assert!(SkewTableau::from_cells(vec![vec![Some(1)], vec![None]]).is_err());
    }

    #[test]
    fn standard_tableaux_counts() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(enumerate_standard_tableaux(&p(&[4])).unwrap().len(), 1);
        assert_eq!(enumerate_standard_tableaux(&p(&[2, 1])).unwrap().len(), 2);
        assert_eq!(enumerate_standard_tableaux(&p(&[1, 1, 1])).unwrap().len(), 1);
        assert_eq!(enumerate_standard_tableaux(&p(&[3, 2])).unwrap().len(), 5);
        assert_eq!(enumerate_standard_tableaux(&Partition::empty()).unwrap().len(), 1);
        assert!(matches!(enumerate_standard_tableaux(&p(&[11])), Err(Error::Resource(_))));
        // Σ_λ f_λ² = n!
        for n in 0..=7 {
            let total: usize = Partition::all_of(n).iter().map(|l| enumerate_standard_tableaux(l).unwrap().len().pow(2)).sum();
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn transpose_involution() {
        let t = Tableau::new(vec![vec![1, 2, 7], vec![3, 6], vec![5, 9], vec![8]]).unwrap();
        assert_eq!(t.transpose().transpose(), t);
        assert_eq!(t.transpose().shape(), t.shape().conjugate());
    }
}
