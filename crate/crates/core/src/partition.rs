//! Integer partitions viewed as Young diagrams.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Result};

/// A nonincreasing sequence of positive integers. The empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts`: nonincreasing, no zero entries.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(domain!("partition parts must be positive: {:?}", parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(domain!("partition parts must be nonincreasing: {:?}", parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts into nonincreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(alloc::vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: alloc::vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Number of columns.
    pub fn columns(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of row `i` (0-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.columns();
        let parts = (1..=cols).map(|k| self.parts.iter().take_while(|&&p| p >= k).count()).collect();
        Partition { parts }
    }

    /// `N_k`: number of boxes in the first `k` columns.
    pub fn boxes_in_first_columns(&self, k: usize) -> usize {
        self.parts.iter().map(|&p| p.min(k)).sum()
    }

    /// `N_1, ..., N_m` for `m` the number of columns.
    pub fn column_prefix_counts(&self) -> Vec<usize> {
        (1..=self.columns()).map(|k| self.boxes_in_first_columns(k)).collect()
    }

    /// Componentwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// True when `self ∖ inner` has at most one box in each row.
    pub fn is_column_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.len()).all(|i| self.part(i) - inner.part(i) <= 1)
    }

    /// Cells `(row, col)` of `self ∖ inner`, row by row.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for i in 0..self.len() {
            for j in inner.part(i)..self.part(i) {
                cells.push((i, j));
            }
        }
        cells
    }

    /// All partitions `ν ⊆ self` such that `self ∖ ν` is a column strip.
    pub fn column_strip_subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut choice = alloc::vec![0usize; self.len()];
        fn rec(lam: &Partition, i: usize, choice: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                out.push(Partition::from_unsorted(choice.clone()));
                return;
            }
            for drop in 0..=1 {
                if drop > lam.part(i) {
                    continue;
                }
                let v = lam.part(i) - drop;
                if i > 0 && v > choice[i - 1] {
                    continue;
                }
                choice[i] = v;
                rec(lam, i + 1, choice, out);
            }
        }
        rec(self, 0, &mut choice, &mut out);
        out
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// `a ⪯ b`: for every `k`, `a` has at least as many boxes as `b` in its first `k` columns.
pub fn dominance_partition(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(domain!("sizes differ: {} vs {}", a.size(), b.size()));
    }
    let cols = a.columns().max(b.columns());
    Ok((1..=cols).all(|k| a.boxes_in_first_columns(k) >= b.boxes_in_first_columns(k)))
}

/// Whether `λ_{2i-1} - λ_{2i} ∈ {0,1}` for all `i`, with a final odd part equal to 1.
pub fn square_zero_condition(lambda: &Partition) -> bool {
    let p = lambda.parts();
    let pairs_ok = p.chunks(2).all(|c| match c {
        [a, b] => a - b <= 1,
        [a] => *a == 1,
        _ => true,
    });
    pairs_ok
}

/// Jordan type of `x²` when `x` is nilpotent of Jordan type `mu`.
pub fn square_jordan_type(mu: &Partition) -> Partition {
    let mut parts = Vec::with_capacity(2 * mu.len());
    for &m in mu.parts() {
        parts.push(m.div_ceil(2));
        parts.push(m / 2);
    }
    Partition::from_unsorted(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..8 {
            for lam in Partition::all_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
        assert_eq!(p(&[4, 2, 2, 1]).conjugate(), p(&[4, 3, 1, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_partition(&p(&[1, 1, 1]), &p(&[1, 1, 1])).unwrap());
        assert!(dominance_partition(&p(&[2, 1]), &p(&[3])).unwrap());
        assert!(!dominance_partition(&p(&[3]), &p(&[2, 1])).unwrap());
        assert!(dominance_partition(&p(&[3]), &p(&[2])).is_err());
    }

    #[test]
    fn square_zero_examples() {
        assert!(square_zero_condition(&p(&[2, 2, 1])));
        assert!(!square_zero_condition(&p(&[3, 1])));
        assert!(square_zero_condition(&p(&[1])));
        assert!(!square_zero_condition(&p(&[2])));
        assert!(square_zero_condition(&Partition::empty()));
    }

    #[test]
    fn square_jordan_examples() {
        assert_eq!(square_jordan_type(&p(&[4])), p(&[2, 2]));
        assert_eq!(square_jordan_type(&p(&[3])), p(&[2, 1]));
        assert_eq!(square_jordan_type(&p(&[1])), p(&[1]));
    }

    #[test]
    fn square_zero_is_exactly_the_image_of_squaring() {
        for n in 0..=8 {
            let image: Vec<Partition> = Partition::all_of(n).iter().map(square_jordan_type).collect();
            for lam in Partition::all_of(n) {
                assert_eq!(square_zero_condition(&lam), image.contains(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn column_strips() {
        let lam = p(&[2, 1]);
        let subs = lam.column_strip_subpartitions();
        assert_eq!(subs.len(), 4);
        assert!(p(&[3]).column_strip_subpartitions().iter().all(|nu| nu.size() >= 2));
    }
}
