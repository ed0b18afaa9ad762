//! Signed Young diagrams of signature `(n, n)`.
//!
//! A row is stored as its length and starting sign; signs alternate along a
//! row. Diagrams are kept in standard order: longer rows first, and among rows
//! of equal length those starting with `+` come first.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedRow {
    pub len: usize,
    pub start: Sign,
}

impl SignedRow {
    pub fn new(len: usize, start: Sign) -> Self {
        SignedRow { len, start }
    }

    /// Sign of the box in column `k` (1-based).
    pub fn sign_at(&self, k: usize) -> Sign {
        if k % 2 == 1 {
            self.start
        } else {
            self.start.flip()
        }
    }

    /// Number of `+` and `-` among the first `k` boxes.
    pub fn counts_in_first(&self, k: usize) -> (usize, usize) {
        let t = k.min(self.len);
        let (first, second) = (t.div_ceil(2), t / 2);
        match self.start {
            Sign::Plus => (first, second),
            Sign::Minus => (second, first),
        }
    }

    /// Parses an alternating string such as `"+-+"`.
    pub fn parse(s: &str) -> Result<SignedRow> {
        let chars: Vec<char> = s.chars().collect();
        let sign = |c: char| match c {
            '+' => Ok(Sign::Plus),
            '-' | '−' => Ok(Sign::Minus),
            _ => Err(domain!("invalid sign character {c:?} in row {s:?}")),
        };
        let first = *chars.first().ok_or_else(|| domain!("empty signed row"))?;
        let start = sign(first)?;
        for (k, &c) in chars.iter().enumerate() {
            let expected = SignedRow::new(chars.len(), start).sign_at(k + 1);
            if sign(c)? != expected {
                return Err(domain!("signs must alternate in row {s:?}"));
            }
        }
        Ok(SignedRow::new(chars.len(), start))
    }

    pub fn to_sign_string(&self) -> String {
        (1..=self.len).map(|k| self.sign_at(k).as_char()).collect()
    }
}

/// A signed Young diagram with equally many `+` and `-` boxes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedYoungDiagram {
    rows: Vec<SignedRow>,
}

fn standard_order(a: &SignedRow, b: &SignedRow) -> core::cmp::Ordering {
    b.len.cmp(&a.len).then(a.start.cmp(&b.start))
}

impl SignedYoungDiagram {
    /// Builds and standardizes a diagram; rejects empty rows and unequal signature.
    pub fn new(mut rows: Vec<SignedRow>) -> Result<Self> {
        if rows.iter().any(|r| r.len == 0) {
            return Err(domain!("signed rows must be nonempty"));
        }
        rows.sort_by(standard_order);
        let d = SignedYoungDiagram { rows };
        let (p, m) = d.signature();
        if p != m {
            return Err(domain!("signature ({p},{m}) is not of the form (n,n)"));
        }
        Ok(d)
    }

    /// Parses rows such as `["+-+", "-+-"]`.
    pub fn parse<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows = rows.iter().map(|r| SignedRow::parse(r.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn rows(&self) -> &[SignedRow] {
        &self.rows
    }

    /// `n` for signature `(n, n)`.
    pub fn n(&self) -> usize {
        self.signature().0
    }

    pub fn signature(&self) -> (usize, usize) {
        self.rows.iter().fold((0, 0), |(p, m), r| {
            let (a, b) = r.counts_in_first(r.len);
            (p + a, m + b)
        })
    }

    pub fn columns(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len)
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.len).collect())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.rows.iter().map(SignedRow::to_sign_string).collect()
    }

    /// Exchanges `+` and `-` everywhere.
    pub fn swap_signs(&self) -> SignedYoungDiagram {
        let mut rows: Vec<SignedRow> = self.rows.iter().map(|r| SignedRow::new(r.len, r.start.flip())).collect();
        rows.sort_by(standard_order);
        SignedYoungDiagram { rows }
    }

    /// Number of `+` and `-` in the first `k` columns.
    pub fn counts_in_first(&self, k: usize) -> (usize, usize) {
        self.rows.iter().fold((0, 0), |(p, m), r| {
            let (a, b) = r.counts_in_first(k);
            (p + a, m + b)
        })
    }
}

impl PartialOrd for SignedYoungDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A total order used only for deterministic sorting; unrelated to dominance.
impl Ord for SignedYoungDiagram {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        let key = |d: &SignedYoungDiagram| -> Vec<(core::cmp::Reverse<usize>, Sign)> {
            d.rows.iter().map(|r| (core::cmp::Reverse(r.len), r.start)).collect()
        };
        key(self).cmp(&key(other))
    }
}

impl fmt::Display for SignedYoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" / ")?;
            }
            f.write_str(&r.to_sign_string())?;
        }
        if self.rows.is_empty() {
            f.write_str("∅")?;
        }
        Ok(())
    }
}

/// `c_k[+]` and `c_k[-]` for `k = 1..=#columns`.
pub fn column_counts(d: &SignedYoungDiagram) -> (Vec<usize>, Vec<usize>) {
    (1..=d.columns()).map(|k| d.counts_in_first(k)).unzip()
}

/// `a ⪯ b`: every signed column count of `a` is at least that of `b`.
pub fn dominance_signed(a: &SignedYoungDiagram, b: &SignedYoungDiagram) -> Result<bool> {
    if a.signature() != b.signature() {
        return Err(domain!("signatures differ: {:?} vs {:?}", a.signature(), b.signature()));
    }
    let cols = a.columns().max(b.columns());
    Ok((1..=cols).all(|k| {
        let (ap, am) = a.counts_in_first(k);
        let (bp, bm) = b.counts_in_first(k);
        ap >= bp && am >= bm
    }))
}

/// Rebuilds the unique diagram with the given signed column counts.
///
/// Trailing columns in which neither count changes are ignored.
pub fn signed_from_column_counts(plus: &[usize], minus: &[usize]) -> Result<SignedYoungDiagram> {
    let bad = |msg: String| Error::InconsistentCounts(msg);
    if plus.len() != minus.len() {
        return Err(bad(alloc::format!("count sequences have lengths {} and {}", plus.len(), minus.len())));
    }
    let n = plus.last().copied().unwrap_or(0);
    if minus.last().copied().unwrap_or(0) != n {
        return Err(bad(alloc::format!("final counts differ: {plus:?} vs {minus:?}")));
    }
    let mut used = plus.len();
    while used > 0 {
        let prev = |s: &[usize]| if used >= 2 { s[used - 2] } else { 0 };
        if plus[used - 1] == prev(plus) && minus[used - 1] == prev(minus) {
            used -= 1;
        } else {
            break;
        }
    }
    let mut delta_plus = Vec::with_capacity(used);
    let mut delta_minus = Vec::with_capacity(used);
    for k in 0..used {
        let (pp, pm) = if k == 0 { (0, 0) } else { (plus[k - 1], minus[k - 1]) };
        if plus[k] < pp || minus[k] < pm {
            return Err(bad(alloc::format!("negative increment at column {}", k + 1)));
        }
        delta_plus.push(plus[k] - pp);
        delta_minus.push(minus[k] - pm);
    }
    // Rows of length >= k starting with + (resp. -).
    let mut starts_plus = Vec::with_capacity(used);
    let mut starts_minus = Vec::with_capacity(used);
    for k in 0..used {
        if k % 2 == 0 {
            starts_plus.push(delta_plus[k]);
            starts_minus.push(delta_minus[k]);
        } else {
            starts_plus.push(delta_minus[k]);
            starts_minus.push(delta_plus[k]);
        }
    }
    for profile in [&starts_plus, &starts_minus] {
        if profile.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad(alloc::format!("row-length profile {profile:?} is not nonincreasing (plus {plus:?}, minus {minus:?})")));
        }
    }
    let mut rows = Vec::new();
    for (profile, sign) in [(&starts_plus, Sign::Plus), (&starts_minus, Sign::Minus)] {
        for k in 0..used {
            let next = profile.get(k + 1).copied().unwrap_or(0);
            for _ in 0..profile[k] - next {
                rows.push(SignedRow::new(k + 1, sign));
            }
        }
    }
    let d = SignedYoungDiagram::new(rows).map_err(|e| bad(alloc::format!("{e}")))?;
    let (cp, cm) = column_counts(&d);
    if cp[..] != plus[..used] || cm[..] != minus[..used] {
        return Err(bad(alloc::format!("reconstruction does not reproduce counts {plus:?}/{minus:?}")));
    }
    Ok(d)
}

/// `Λ[2λ]`: each row of `λ` twice, once starting with `+` and once with `-`.
pub fn duplicate_signed(lambda: &Partition) -> SignedYoungDiagram {
    let rows = lambda.parts().iter().flat_map(|&l| [SignedRow::new(l, Sign::Plus), SignedRow::new(l, Sign::Minus)]).collect();
    SignedYoungDiagram::new(rows).expect("duplicated rows are balanced")
}

/// `(Λ[+), Λ[-))`: per-row sign counts excluding each row's last box.
pub fn sign_prefix_partitions(d: &SignedYoungDiagram) -> (Partition, Partition) {
    let (plus, minus) = d.rows().iter().map(|r| r.counts_in_first(r.len - 1)).unzip();
    (Partition::from_unsorted(plus), Partition::from_unsorted(minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn d(rows: &[&str]) -> SignedYoungDiagram {
        SignedYoungDiagram::parse(rows).unwrap()
    }

    #[test]
    fn dominance_examples() {
        let lp = d(&["+-+-+", "+-+-", "-+-", "+-"]);
        assert!(!dominance_signed(&d(&["+-+-+", "-+-+", "+-", "+-", "-"]), &lp).unwrap());
        assert!(dominance_signed(&d(&["+-+-+", "+-+-", "+-", "+-", "-"]), &lp).unwrap());
        assert!(dominance_signed(&lp, &lp).unwrap());
        assert!(dominance_signed(&d(&["+-"]), &d(&["+-+-"])).is_err());
    }

    #[test]
    fn column_count_examples() {
        assert_eq!(column_counts(&d(&["+-+", "-+-"])), (vec![1, 2, 3], vec![1, 2, 3]));
        assert_eq!(column_counts(&d(&["+", "-"])), (vec![1], vec![1]));
        assert_eq!(column_counts(&d(&["-+-+", "-+"])), (vec![0, 2, 2, 3], vec![2, 2, 3, 3]));
    }

    #[test]
    fn reconstruction_examples() {
        assert_eq!(signed_from_column_counts(&[1, 2, 3], &[1, 2, 3]).unwrap(), d(&["+-+", "-+-"]));
        assert_eq!(signed_from_column_counts(&[0, 2, 2, 3], &[2, 2, 3, 3]).unwrap(), d(&["-+-+", "-+"]));
        assert_eq!(signed_from_column_counts(&[1], &[1]).unwrap(), d(&["+", "-"]));
        assert_eq!(signed_from_column_counts(&[1, 1, 1], &[1, 1, 1]).unwrap(), d(&["+", "-"]));
        assert_eq!(signed_from_column_counts(&[], &[]).unwrap(), d(&[]));
    }

    #[test]
    fn reconstruction_rejects_inconsistent_counts() {
        assert!(matches!(signed_from_column_counts(&[2, 1], &[1, 1]), Err(Error::InconsistentCounts(_))));
        // + count jumps without the matching row starts.
        assert!(matches!(signed_from_column_counts(&[0, 2], &[1, 2]), Err(Error::InconsistentCounts(_))));
        assert!(matches!(signed_from_column_counts(&[1, 2], &[1, 1]), Err(Error::InconsistentCounts(_))));
    }

    #[test]
    fn duplicate_examples() {
        let lam = Partition::new(vec![4, 2, 2, 1]).unwrap();
        assert_eq!(duplicate_signed(&lam).to_strings(), vec!["+-+-", "-+-+", "+-", "+-", "-+", "-+", "+", "-"]);
        assert_eq!(duplicate_signed(&Partition::row(3)), d(&["+-+", "-+-"]));
        assert_eq!(duplicate_signed(&Partition::row(1)), d(&["+", "-"]));
    }

    #[test]
    fn sign_prefix_examples() {
        let (p, m) = sign_prefix_partitions(&d(&["+-+-+-", "+-+-+", "+-+-", "-+-+", "-+", "-"]));
        assert_eq!(p.parts(), &[3, 2, 2, 1]);
        assert_eq!(m.parts(), &[2, 2, 2, 1, 1]);
        let (p, m) = sign_prefix_partitions(&d(&["+", "-"]));
        assert!(p.is_empty() && m.is_empty());
        let (p, m) = sign_prefix_partitions(&d(&["+-", "-+"]));
        assert_eq!((p.parts(), m.parts()), (&[1][..], &[1][..]));
    }

    #[test]
    fn standardization_is_order_independent() {
        let a = d(&["-", "+-", "-+-", "+", "+"]);
        let b = d(&["+", "-+-", "-", "+-", "+"]);
        assert_eq!(a, b);
        assert_eq!(a.to_strings(), vec!["-+-", "+-", "+", "+", "-"]);
    }

    #[test]
    fn parse_rejects_non_alternating() {
        assert!(SignedYoungDiagram::parse(&["++", "--"]).is_err());
        assert!(SignedYoungDiagram::parse(&["+-+"]).is_err());
    }
}
