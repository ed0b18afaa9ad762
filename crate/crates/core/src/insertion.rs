//! Schensted insertion, the Robinson-Schensted correspondence and jeu de taquin.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, internal, Result};
use crate::partition::Partition;
use crate::tableau::{SkewTableau, Tableau};

/// A bijection between two finite sets of integers, stored sorted by source.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Bijection {
    pairs: Vec<(i64, i64)>,
}

impl Bijection {
    /// Builds from `(source, target)` pairs in any order.
    pub fn new(mut pairs: Vec<(i64, i64)>) -> Result<Self> {
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(domain!("bijection sources must be distinct"));
        }
        let targets: BTreeSet<i64> = pairs.iter().map(|p| p.1).collect();
        if targets.len() != pairs.len() {
            return Err(domain!("bijection targets must be distinct"));
        }
        Ok(Bijection { pairs })
    }

    /// The permutation `k ↦ images[k-1]` of `{1..n}`.
    pub fn from_images(images: &[i64]) -> Result<Self> {
        Self::new(images.iter().enumerate().map(|(k, &v)| (k as i64 + 1, v)).collect())
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn sources(&self) -> Vec<i64> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    /// Targets listed in increasing order of their sources.
    pub fn targets(&self) -> Vec<i64> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn apply(&self, source: i64) -> Option<i64> {
        self.pairs.binary_search_by_key(&source, |p| p.0).ok().map(|k| self.pairs[k].1)
    }

    pub fn inverse(&self) -> Bijection {
        let mut pairs: Vec<(i64, i64)> = self.pairs.iter().map(|&(a, b)| (b, a)).collect();
        pairs.sort_unstable();
        Bijection { pairs }
    }

    /// True when sources and targets are both exactly `{1..n}`.
    pub fn is_permutation_of(&self, n: usize) -> bool {
        let mut t = self.targets();
        t.sort_unstable();
        self.len() == n && self.sources().into_iter().eq(1..=n as i64) && t.into_iter().eq(1..=n as i64)
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("∅");
        }
        let join = |v: Vec<i64>| v.iter().map(|x| alloc::format!("{x}")).collect::<Vec<_>>().join(",");
        write!(f, "({} → {})", join(self.sources()), join(self.targets()))
    }
}

/// Row-inserts `a` in place and returns the position of the new box.
fn row_insert_in_place(rows: &mut Vec<Vec<i64>>, a: i64) -> (usize, usize) {
    let mut x = a;
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(alloc::vec![x]);
            return (r, 0);
        }
        let row = &mut rows[r];
        let k = row.partition_point(|&e| e < x);
        if k == row.len() {
            row.push(x);
            return (r, k);
        }
        core::mem::swap(&mut row[k], &mut x);
        r += 1;
    }
}

fn check_absent(t: &Tableau, a: i64) -> Result<()> {
    if t.contains_entry(a) {
        Err(domain!("{a} is already an entry of the tableau"))
    } else {
        Ok(())
    }
}

/// `T ← a`.
pub fn row_insert(t: &Tableau, a: i64) -> Result<Tableau> {
    Ok(row_insert_with_position(t, a)?.0)
}

/// `T ← a` together with the (0-based) position of the created box.
pub fn row_insert_with_position(t: &Tableau, a: i64) -> Result<(Tableau, (usize, usize))> {
    check_absent(t, a)?;
    let mut out = t.clone();
    let pos = row_insert_in_place(out.rows_mut(), a);
    Ok((out, pos))
}

/// `a → T`.
pub fn column_insert(a: i64, t: &Tableau) -> Result<Tableau> {
    check_absent(t, a)?;
    let mut tt = t.transpose();
    row_insert_in_place(tt.rows_mut(), a);
    Ok(tt.transpose())
}

/// Undoes a row insertion whose new box is the corner at the end of row `row`.
/// Returns the smaller tableau and the value that leaves the first row.
pub fn reverse_row_insert(t: &Tableau, row: usize) -> Result<(Tableau, i64)> {
    let mut rows = t.clone().into_rows();
    let len = rows.get(row).map(Vec::len).ok_or_else(|| domain!("row {} does not exist", row + 1))?;
    if rows.get(row + 1).is_some_and(|below| below.len() == len) {
        return Err(domain!("end of row {} is not a corner", row + 1));
    }
    let mut x = rows[row].pop().expect("rows are nonempty");
    if rows[row].is_empty() {
        rows.pop();
    }
    for r in (0..row).rev() {
        let k = rows[r].partition_point(|&e| e < x);
        if k == 0 {
            return Err(internal!("reverse bumping found no smaller entry in row {}", r + 1));
        }
        core::mem::swap(&mut rows[r][k - 1], &mut x);
    }
    Ok((Tableau::from_rows_unchecked(rows), x))
}

/// Undoes a column insertion whose new box is the corner at the bottom of column `col`.
pub fn reverse_column_insert(t: &Tableau, col: usize) -> Result<(Tableau, i64)> {
    let (tt, x) = reverse_row_insert(&t.transpose(), col)?;
    Ok((tt.transpose(), x))
}

/// `R(a_1, …, a_l) = ((∅ ← a_1) ← …) ← a_l`.
pub fn row_word_tableau(word: &[i64]) -> Result<Tableau> {
    word.iter().try_fold(Tableau::empty(), |t, &a| row_insert(&t, a))
}

/// `C(a_1, …, a_l) = a_l → (… → (a_1 → ∅))`.
pub fn column_word_tableau(word: &[i64]) -> Result<Tableau> {
    word.iter().try_fold(Tableau::empty(), |t, &a| column_insert(a, &t))
}

/// The Robinson-Schensted pair `(P, Q)`: `P` from the targets, `Q` recording sources.
pub fn rs_pair(w: &Bijection) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<i64>> = Vec::new();
    let mut q: Vec<Vec<i64>> = Vec::new();
    for &(source, target) in w.pairs() {
        let (r, c) = row_insert_in_place(&mut p, target);
        if r == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(q[r].len(), c);
        q[r].push(source);
    }
    (Tableau::from_rows_unchecked(p), Tableau::from_rows_unchecked(q))
}

/// Inverse of [`rs_pair`].
pub fn rs_inverse(p: &Tableau, q: &Tableau) -> Result<Bijection> {
    if p.shape() != q.shape() {
        return Err(domain!("shapes {} and {} differ", p.shape(), q.shape()));
    }
    let mut p = p.clone();
    let mut q = q.clone().into_rows();
    let mut pairs = Vec::with_capacity(p.size());
    while !q.is_empty() {
        let (row, _) =
            q.iter().enumerate().map(|(i, r)| (i, *r.last().expect("rows are nonempty"))).max_by_key(|&(_, v)| v).expect("nonempty");
        let source = q[row].pop().expect("nonempty");
        if q[row].is_empty() {
            q.pop();
        }
        let (smaller, target) = reverse_row_insert(&p, row)?;
        p = smaller;
        pairs.push((source, target));
    }
    Bijection::new(pairs)
}

/// `St(w) = shape(R(w(1), …, w(n)))` for a permutation `w` of `{1..n}`.
pub fn steinberg_classical(w: &Bijection) -> Result<Partition> {
    let n = w.len();
    if !w.is_permutation_of(n) {
        return Err(domain!("{w} is not a permutation of 1..{n}"));
    }
    Ok(rs_pair(w).0.shape())
}

/// Working representation for jeu de taquin.
struct SlideGrid {
    inner: Vec<usize>,
    cells: Vec<Vec<Option<i64>>>,
}

impl SlideGrid {
    fn from_skew(s: &SkewTableau) -> Self {
        let (outer, inner, cells) = s.clone().into_parts();
        let inner = (0..outer.len()).map(|i| inner.part(i)).collect();
        SlideGrid { inner, cells }
    }

    fn in_region(&self, i: usize, j: usize) -> bool {
        i < self.cells.len() && j >= self.inner[i] && j < self.cells[i].len()
    }

    /// Inner corners: removable boxes of the inner shape.
    fn inside_corners(&self) -> Vec<(usize, usize)> {
        (0..self.inner.len())
            .filter(|&i| self.inner[i] > 0 && self.inner.get(i + 1).copied().unwrap_or(0) < self.inner[i])
            .map(|i| (i, self.inner[i] - 1))
            .collect()
    }

    /// Forward slide into the inner corner `(i, j)`.
    fn slide(&mut self, (mut i, mut j): (usize, usize)) {
        self.inner[i] -= 1;
        loop {
            let right = self.in_region(i, j + 1).then(|| self.cells[i][j + 1].expect("filled"));
            let below = self.in_region(i + 1, j).then(|| self.cells[i + 1][j].expect("filled"));
            let next = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (i, j + 1),
                (None, Some(_)) => (i + 1, j),
                (Some(r), Some(b)) => {
                    if r < b {
                        (i, j + 1)
                    } else {
                        (i + 1, j)
                    }
                }
            };
            self.cells[i][j] = self.cells[next.0][next.1];
            (i, j) = next;
        }
        self.cells[i].pop();
        if self.cells[i].is_empty() {
            self.cells.pop();
            self.inner.pop();
        }
    }

    /// Reverse slide from the new outer box at the end of row `i`.
    /// Returns the row whose inner part grew.
    fn reverse_slide(&mut self, i: usize) -> usize {
        if i == self.cells.len() {
            self.cells.push(Vec::new());
            self.inner.push(0);
        }
        let (mut i, mut j) = (i, self.cells[i].len());
        self.cells[i].push(None);
        loop {
            let up = (i > 0 && self.in_region(i - 1, j)).then(|| self.cells[i - 1][j].expect("filled"));
            let left = (j > self.inner[i]).then(|| self.cells[i][j - 1].expect("filled"));
            let next = match (up, left) {
                (None, None) => break,
                (Some(_), None) => (i - 1, j),
                (None, Some(_)) => (i, j - 1),
                (Some(u), Some(l)) => {
                    if u > l {
                        (i - 1, j)
                    } else {
                        (i, j - 1)
                    }
                }
            };
            self.cells[i][j] = self.cells[next.0][next.1];
            (i, j) = next;
        }
        self.cells[i][j] = None;
        self.inner[i] += 1;
        i
    }

    fn to_skew(&self) -> SkewTableau {
        let outer = Partition::from_unsorted(self.cells.iter().map(Vec::len).collect());
        let inner = Partition::from_unsorted(self.inner.clone());
        SkewTableau::from_parts_unchecked(outer, inner, self.cells.clone())
    }
}

/// Rectification with the default policy: bottom-most, then right-most inside corner.
pub fn rectify(s: &SkewTableau) -> Tableau {
    rectify_with(s, |corners| corners.len() - 1)
}

/// Rectification where `choose` picks an index into the list of inside corners
/// (listed from top to bottom).
pub fn rectify_with<F>(s: &SkewTableau, mut choose: F) -> Tableau
where
    F: FnMut(&[(usize, usize)]) -> usize,
{
    let mut g = SlideGrid::from_skew(s);
    loop {
        let corners = g.inside_corners();
        if corners.is_empty() {
            break;
        }
        let k = choose(&corners).min(corners.len() - 1);
        g.slide(corners[k]);
    }
    g.to_skew().to_tableau().expect("inner shape is empty after rectification")
}

/// Applies reverse slides at the ends of the given rows, in order.
pub(crate) fn reverse_slides(t: &SkewTableau, rows: &[usize]) -> (SkewTableau, Vec<usize>) {
    let mut g = SlideGrid::from_skew(t);
    let vacated = rows.iter().map(|&r| g.reverse_slide(r)).collect();
    (g.to_skew(), vacated)
}

/// `T * S`: rectification of `S` placed to the upper right of `T`.
pub fn star(t: &Tableau, s: &Tableau) -> Result<Tableau> {
    if !t.entries().is_disjoint(&s.entries()) {
        return Err(domain!("tableaux share entries"));
    }
    let shift = t.shape().columns();
    let s_rows = s.rows().len();
    let mut cells: Vec<Vec<Option<i64>>> = Vec::with_capacity(s_rows + t.rows().len());
    for row in s.rows() {
        let mut r = alloc::vec![None; shift];
        r.extend(row.iter().map(|&e| Some(e)));
        cells.push(r);
    }
    for row in t.rows() {
        cells.push(row.iter().map(|&e| Some(e)).collect());
    }
    let skew = SkewTableau::from_cells(cells)?;
    Ok(rectify(&skew))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn t(rows: &[&[i64]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn insertion_examples() {
        let base = t(&[&[1, 2, 7], &[3, 6], &[5, 9], &[8]]);
        assert_eq!(row_insert(&base, 4).unwrap(), t(&[&[1, 2, 4], &[3, 6, 7], &[5, 9], &[8]]));
        assert_eq!(column_insert(4, &base).unwrap(), t(&[&[1, 2, 6, 7], &[3, 5], &[4, 9], &[8]]));
        assert_eq!(row_insert(&Tableau::empty(), 5).unwrap(), t(&[&[5]]));
        assert_eq!(row_insert(&t(&[&[1]]), 2).unwrap(), t(&[&[1, 2]]));
        assert_eq!(column_insert(1, &t(&[&[2, 3]])).unwrap(), t(&[&[1, 2, 3]]));
        assert_eq!(column_insert(9, &t(&[&[1]])).unwrap(), t(&[&[1], &[9]]));
        assert!(row_insert(&base, 6).is_err());
        assert!(column_insert(6, &base).is_err());
    }

    #[test]
    fn rs_examples() {
        let id = Bijection::from_images(&[1, 2, 3]).unwrap();
        assert_eq!(rs_pair(&id), (t(&[&[1, 2, 3]]), t(&[&[1, 2, 3]])));
        let w = Bijection::new(vec![(2, 1), (3, 2)]).unwrap();
        assert_eq!(rs_pair(&w), (t(&[&[1, 2]]), t(&[&[2, 3]])));
        let w = Bijection::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(rs_pair(&w), (t(&[&[1, 3], &[2]]), t(&[&[1, 2], &[3]])));
        assert_eq!(rs_pair(&Bijection::default()), (Tableau::empty(), Tableau::empty()));
    }

    #[test]
    fn rs_inverse_round_trip() {
        let w = Bijection::new(vec![(4, -2), (1, 7), (9, 3), (2, 5), (6, 0)]).unwrap();
        let (p, q) = rs_pair(&w);
        assert_eq!(rs_inverse(&p, &q).unwrap(), w);
    }

    #[test]
    fn reverse_insertion_undoes_insertion() {
        let base = t(&[&[1, 2, 7], &[3, 6], &[5, 9], &[8]]);
        let (bigger, (r, _)) = row_insert_with_position(&base, 4).unwrap();
        assert_eq!(reverse_row_insert(&bigger, r).unwrap(), (base.clone(), 4));
        let bigger = column_insert(4, &base).unwrap();
        let col = bigger
            .shape()
            .conjugate()
            .parts()
            .iter()
            .zip(base.shape().conjugate().parts().iter().chain(core::iter::repeat(&0)))
            .position(|(a, b)| a != b)
            .unwrap();
        assert_eq!(reverse_column_insert(&bigger, col).unwrap(), (base, 4));
    }

    #[test]
    fn rectify_examples() {
        let s = SkewTableau::from_cells(vec![
            vec![None, None, Some(3)],
            vec![None, Some(4), Some(7)],
            vec![Some(1), Some(6), Some(9)],
            vec![Some(8)],
        ])
        .unwrap();
        let expected = t(&[&[1, 3, 7], &[4, 9], &[6], &[8]]);
        assert_eq!(rectify(&s), expected);
        assert_eq!(rectify_with(&s, |_| 0), expected);
        let straight = t(&[&[1, 4], &[2]]);
        assert_eq!(rectify(&SkewTableau::from_tableau(&straight)), straight);
        let single = SkewTableau::from_cells(vec![vec![None, Some(5)]]).unwrap();
        assert_eq!(rectify(&single), t(&[&[5]]));
    }

    #[test]
    fn star_examples() {
        let a = t(&[&[5, 7], &[9]]);
        let b = t(&[&[1, 3, 4], &[2, 8]]);
        assert_eq!(star(&a, &b).unwrap(), t(&[&[1, 3, 4], &[2, 7, 8], &[5], &[9]]));
        let base = t(&[&[1, 2, 7], &[3, 6], &[5, 9], &[8]]);
        let single = t(&[&[4]]);
        assert_eq!(star(&base, &single).unwrap(), row_insert(&base, 4).unwrap());
        assert_eq!(star(&single, &base).unwrap(), column_insert(4, &base).unwrap());
        assert!(star(&base, &t(&[&[2]])).is_err());
    }

    #[test]
    fn steinberg_examples() {
        let st = |v: &[i64]| steinberg_classical(&Bijection::from_images(v).unwrap()).unwrap();
        assert_eq!(st(&[1, 2, 3]).parts(), &[3]);
        assert_eq!(st(&[3, 2, 1]).parts(), &[1, 1, 1]);
        assert_eq!(st(&[1, 3, 2]).parts(), &[2, 1]);
        assert!(steinberg_classical(&Bijection::new(vec![(1, 2)]).unwrap()).is_err());
    }

    #[test]
    fn reverse_slide_inverts_slide() {
        let s = SkewTableau::from_cells(vec![vec![None, Some(2), Some(5)], vec![Some(1), Some(4)], vec![Some(3)]]).unwrap();
        let mut g = SlideGrid::from_skew(&s);
        let before_rows: Vec<usize> = g.cells.iter().map(Vec::len).collect();
        g.slide((0, 0));
        let after_rows: Vec<usize> = g.cells.iter().map(Vec::len).collect();
        let row = (0..before_rows.len()).find(|&i| after_rows.get(i).copied().unwrap_or(0) != before_rows[i]).unwrap();
        let vacated = g.reverse_slide(row);
        assert_eq!(vacated, 0);
        assert_eq!(g.to_skew(), s);
    }
}
